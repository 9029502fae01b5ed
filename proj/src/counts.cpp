#include "counts.hpp"

#include <algorithm>

namespace graphclust {

std::string count_to_string(Count v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

namespace {

Count gcd128(Count a, Count b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Count t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational make_rational(Count num, Count den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Count g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

bool rational_less(const Rational& a, const Rational& b) {
  // Denominators are positive after reduction.
  return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
}

double rational_to_double(const Rational& r) {
  return static_cast<double>(r.num) / static_cast<double>(r.den);
}

std::string rational_to_string(const Rational& r) {
  if (r.den == 1) return count_to_string(r.num);
  return count_to_string(r.num) + "/" + count_to_string(r.den);
}

}  // namespace graphclust
