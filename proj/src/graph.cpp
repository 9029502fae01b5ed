#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <unordered_map>

#include "errors.hpp"

namespace graphclust {

void Graph::check_node(int i) const {
  if (i < 0 || i >= n_)
    throw ValidationError("node id " + std::to_string(i) + " out of range [0," +
                          std::to_string(n_) + ")");
}

Graph Graph::build(std::vector<std::string> labels,
                   const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.n_ = static_cast<int>(labels.size());
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != g.n_)
      throw ValidationError("node labels are not unique");
  }
  g.labels_ = std::move(labels);
  g.words_ = (g.n_ + 63) / 64;
  g.bits_.assign(static_cast<std::size_t>(g.n_) * g.words_, 0);
  g.degrees_.assign(static_cast<std::size_t>(g.n_), 0);
  g.m_ = 0;
  auto word = [&](int i, int j) -> std::uint64_t& {
    return g.bits_[static_cast<std::size_t>(i) * g.words_ + (static_cast<std::size_t>(j) >> 6)];
  };
  for (auto [a, b] : edges) {
    g.check_node(a);
    g.check_node(b);
    if (a == b)
      throw ValidationError("self-loop on node '" + g.labels_[static_cast<std::size_t>(a)] + "'");
    if (g.has_edge(a, b)) continue;
    word(a, b) |= std::uint64_t{1} << (b & 63);
    word(b, a) |= std::uint64_t{1} << (a & 63);
    ++g.degrees_[static_cast<std::size_t>(a)];
    ++g.degrees_[static_cast<std::size_t>(b)];
    ++g.m_;
  }
  return g;
}

Graph Graph::from_edge_list(const std::vector<std::string>& lines) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  std::unordered_map<std::string, int> ids;
  auto id_of = [&](const std::string& lbl) {
    auto it = ids.find(lbl);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(labels.size());
    labels.push_back(lbl);
    ids.emplace(lbl, id);
    return id;
  };
  int lineno = 0;
  for (const auto& line : lines) {
    ++lineno;
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::string a, b, extra;
    if (!(ss >> a)) continue;  // blank or comment-only
    if (!(ss >> b) || (ss >> extra))
      throw ValidationError("line " + std::to_string(lineno) +
                            ": expected exactly two labels");
    if (a == b)
      throw ValidationError("line " + std::to_string(lineno) + ": self-loop on '" + a + "'");
    int ia = id_of(a);  // force evaluation order so node ids follow first appearance
    int ib = id_of(b);
    edges.emplace_back(ia, ib);
  }
  return build(std::move(labels), edges);
}

Graph Graph::from_edge_list_text(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return from_edge_list(lines);
}

std::vector<int> Graph::neighborhood(int i) const {
  check_node(i);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree(i)));
  auto r = row(i);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[static_cast<std::size_t>(w)];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int i = 0; i < n_; ++i)
    for (int j : neighborhood(i))
      if (i < j) out.emplace_back(i, j);
  return out;
}

Graph Graph::induced_subgraph(std::span<const int> nodes) const {
  std::vector<std::string> labels;
  labels.reserve(nodes.size());
  for (int v : nodes) {
    check_node(v);
    labels.push_back(labels_[static_cast<std::size_t>(v)]);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      if (has_edge(nodes[a], nodes[b]))
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return build(std::move(labels), edges);
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : neighborhood(v)) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n_;
}

std::string Graph::to_edge_list_text() const {
  std::vector<std::string> lines;
  lines.reserve(static_cast<std::size_t>(m_));
  for (auto [i, j] : edges()) {
    const std::string& a = labels_[static_cast<std::size_t>(i)];
    const std::string& b = labels_[static_cast<std::size_t>(j)];
    lines.push_back(a <= b ? a + " " + b : b + " " + a);
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

Rational density(const Graph& g) {
  if (g.node_count() < 2) throw ValidationError("density requires at least 2 nodes");
  Count n = g.node_count();
  return make_rational(2 * static_cast<Count>(g.edge_count()), n * (n - 1));
}

namespace {

Count popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  Count c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

using Matrix = std::vector<std::vector<Count>>;

Matrix adjacency_matrix(const Graph& g) {
  const int n = g.node_count();
  Matrix a(static_cast<std::size_t>(n), std::vector<Count>(static_cast<std::size_t>(n), 0));
  for (auto [i, j] : g.edges()) {
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
  }
  return a;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<Count>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        c[i][j] = checked_add(c[i][j], checked_mul(a[i][k], b[k][j]));
    }
  return c;
}

WalkStats walk_stats_dense(const Graph& g) {
  const int n = g.node_count();
  Matrix g1 = adjacency_matrix(g);
  Matrix g2 = matmul(g1, g1);
  Matrix g3 = matmul(g2, g1);
  Matrix g4 = matmul(g3, g1);
  WalkStats ws;
  ws.g3_diag.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    ws.g3_diag[static_cast<std::size_t>(i)] = g3[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    ws.tr_g3 = checked_add(ws.tr_g3, ws.g3_diag[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j)
      if (i != j)
        ws.sum_offdiag_g4 =
            checked_add(ws.sum_offdiag_g4, g4[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return ws;
}

}  // namespace

WalkStats walk_stats(const Graph& g, bool dense) {
  if (dense) return walk_stats_dense(g);
  const int n = g.node_count();
  WalkStats ws;
  ws.g3_diag.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    Count d = 0;
    for (int j : g.neighborhood(i)) d = checked_add(d, popcount_and(g.row(i), g.row(j)));
    ws.g3_diag[static_cast<std::size_t>(i)] = d;
    ws.tr_g3 = checked_add(ws.tr_g3, d);
  }

  // sum_{i != j} (g^4)_ij = sum_k s_k^2 - sum_{i,k} (g^2)_ik^2, where
  // s_k is the k-th row sum of g^2 and (g^2)_ik = |N(i) & N(k)| off the
  // diagonal, k_i on it. Equals the dense 4th-power definition exactly.
  Count total = 0;
  Count diag = 0;
  std::vector<Count> sq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Count row_sum = 0;
    for (int k = 0; k < n; ++k) {
      Count v = (i == k) ? static_cast<Count>(g.degree(i)) : popcount_and(g.row(i), g.row(k));
      row_sum = checked_add(row_sum, v);
      diag = checked_add(diag, checked_mul(v, v));
    }
    total = checked_add(total, checked_mul(row_sum, row_sum));
  }
  ws.sum_offdiag_g4 = checked_sub(total, diag);
  return ws;
}

}  // namespace graphclust
