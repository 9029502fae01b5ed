#pragma once

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace graphclust {

// Exact subgraph counts. 128 bits is enough for every size this library
// targets; every arithmetic step below is overflow-checked.
using Count = __int128;

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("count overflow in addition");
  return r;
}

inline Count checked_sub(Count a, Count b) {
  Count r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("count overflow in subtraction");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("count overflow in multiplication");
  return r;
}

// C(k, r) for small fixed r; exact, overflow-checked.
inline Count binomial(Count k, int r) {
  if (k < r) return 0;
  Count num = 1;
  Count den = 1;
  for (int i = 0; i < r; ++i) {
    num = checked_mul(num, k - i);
    den *= (i + 1);
  }
  return num / den;
}

std::string count_to_string(Count v);

// Reduced rational with positive denominator.
struct Rational {
  Count num = 0;
  Count den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(Count num, Count den);
bool rational_less(const Rational& a, const Rational& b);
double rational_to_double(const Rational& r);
std::string rational_to_string(const Rational& r);

}  // namespace graphclust
