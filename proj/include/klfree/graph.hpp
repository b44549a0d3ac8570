#pragma once

// Labeled graphs on {0..n-1}, n <= 64, stored as a bitset over unordered
// pairs. Pair (u, v), u < v, lives at bit u*n - u(u+1)/2 + (v-u-1)
// (row-major over u < v), so serialized bitsets are portable.

#include <bit>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "klfree/combinations.hpp"
#include "klfree/exact.hpp"

namespace klfree {

inline constexpr int kMaxVertices = 64;
inline constexpr std::size_t kMaxPairs = 2016;  // C(64, 2)

/// Largest order whose whole pair bitset fits one 64-bit word.
inline constexpr int kMaxWordOrder = 11;

constexpr std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

constexpr std::size_t pair_index(int n, int u, int v) {
  return static_cast<std::size_t>(u) * n - static_cast<std::size_t>(u) * (u + 1) / 2 + (v - u - 1);
}

/// Inverse of pair_index.
constexpr std::pair<int, int> pair_at(int n, std::size_t index) {
  int u = 0;
  std::size_t row = n - 1;
  while (index >= row) {
    index -= row;
    ++u;
    --row;
  }
  return {u, u + 1 + static_cast<int>(index)};
}

using Edge = std::pair<int, int>;

class LabeledGraph {
 public:
  explicit LabeledGraph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("vertex count must lie in [1, 64]");
  }

  static LabeledGraph complete(int n) {
    LabeledGraph g(n);
    for (std::size_t i = 0; i < pair_count(n); ++i) g.bits_.set(i);
    return g;
  }

  /// Graph whose pair bitset is `code`; requires C(n,2) <= 64.
  static LabeledGraph from_code(int n, std::uint64_t code) {
    LabeledGraph g(n);
    if (n > kMaxWordOrder) throw std::invalid_argument("pair code needs n <= 11");
    if (pair_count(n) < 64 && (code >> pair_count(n)) != 0) throw std::invalid_argument("code has bits past C(n,2)");
    for (std::size_t i = 0; code != 0; ++i, code >>= 1)
      if (code & 1) g.bits_.set(i);
    return g;
  }

  int order() const { return n_; }
  std::size_t edge_count() const { return bits_.count(); }
  const std::bitset<kMaxPairs>& bits() const { return bits_; }

  bool has_edge(int u, int v) const {
    check_pair(u, v);
    if (u > v) std::swap(u, v);
    return bits_.test(pair_index(n_, u, v));
  }

  void add_edge(int u, int v) {
    check_pair(u, v);
    if (u > v) std::swap(u, v);
    bits_.set(pair_index(n_, u, v));
  }

  LabeledGraph with_edge(int u, int v) const {
    LabeledGraph g = *this;
    g.add_edge(u, v);
    return g;
  }

  /// Edges in canonical pair-index order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (bits_.test(pair_index(n_, u, v))) out.emplace_back(u, v);
    return out;
  }

  std::uint64_t neighbours(int v) const {
    std::uint64_t mask = 0;
    for (int w = 0; w < n_; ++w)
      if (w != v && has_edge(v, w)) mask |= 1ULL << w;
    return mask;
  }

  std::vector<std::uint64_t> adjacency() const {
    std::vector<std::uint64_t> adj(n_, 0);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (bits_.test(pair_index(n_, u, v))) {
          adj[u] |= 1ULL << v;
          adj[v] |= 1ULL << u;
        }
    return adj;
  }

  /// Mask of vertices incident to at least one edge.
  std::uint64_t spanned_vertices() const {
    std::uint64_t mask = 0;
    for (auto [u, v] : edges()) mask |= (1ULL << u) | (1ULL << v);
    return mask;
  }

  std::optional<std::uint64_t> code() const {
    if (n_ > kMaxWordOrder) return std::nullopt;
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < pair_count(n_); ++i)
      if (bits_.test(i)) c |= 1ULL << i;
    return c;
  }

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
  }

  int n_;
  std::bitset<kMaxPairs> bits_;
};

/// Graph on n vertices with exactly the listed edges; duplicates are idempotent
/// and (v, u) is read as (u, v).
inline LabeledGraph make_graph(int n, const std::vector<Edge>& edge_list) {
  LabeledGraph g(n);
  for (auto [u, v] : edge_list) g.add_edge(u, v);
  return g;
}

struct TuranPartition {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::vector<std::uint64_t> part_sizes;  // larger parts first
};

inline TuranPartition turan_partition(std::uint64_t n, std::uint64_t k) {
  if (k < 1 || k > n) throw std::invalid_argument("Turan partition needs 1 <= k <= n");
  TuranPartition p{n, k, {}};
  p.part_sizes.reserve(k);
  const std::uint64_t q = n / k;
  const std::uint64_t s = n % k;
  for (std::uint64_t i = 0; i < k; ++i) p.part_sizes.push_back(i < s ? q + 1 : q);
  return p;
}

/// Complete balanced k-partite graph; parts are consecutive vertex blocks.
inline LabeledGraph turan_graph(int n, int k) {
  if (n < 1 || n > kMaxVertices || k < 1 || k > n) throw std::invalid_argument("turan_graph needs 1 <= k <= n <= 64");
  const TuranPartition p = turan_partition(n, k);
  std::vector<int> part_of(n);
  int v = 0;
  for (std::size_t i = 0; i < p.part_sizes.size(); ++i)
    for (std::uint64_t c = 0; c < p.part_sizes[i]; ++c) part_of[v++] = static_cast<int>(i);
  LabeledGraph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (part_of[a] != part_of[b]) g.add_edge(a, b);
  return g;
}

/// e(T(n,k)) = C(n,2) - sum C(part,2); uncapped.
inline BigInt turan_edge_count(std::uint64_t n, std::uint64_t k) {
  if (k < 1 || k > n) throw std::invalid_argument("turan_edge_count needs 1 <= k <= n");
  const std::uint64_t q = n / k;
  const std::uint64_t s = n % k;
  BigInt inside = BigInt(s) * binomial(q + 1, 2) + BigInt(k - s) * binomial(q, 2);
  return binomial(n, 2) - inside;
}

/// Pair-bitset masks of every l-clique of K_n, in colex order of the vertex
/// set. Requires n <= 11.
inline std::vector<std::uint64_t> clique_pair_masks(int n, int l) {
  if (n < 1 || n > kMaxWordOrder) throw std::invalid_argument("clique masks need n <= 11");
  std::vector<std::uint64_t> masks;
  if (l < 0 || l > n) return masks;
  masks.reserve(binomial_u64(n, l));
  for_each_combination(n, l, 0, binomial_u64(n, l), [&](std::uint64_t vs) {
    std::uint64_t m = 0;
    for (std::uint64_t a = vs; a; a &= a - 1) {
      const int u = std::countr_zero(a);
      for (std::uint64_t b = a & (a - 1); b; b &= b - 1) m |= 1ULL << pair_index(n, u, std::countr_zero(b));
    }
    masks.push_back(m);
  });
  return masks;
}

/// Clique count by testing every l-subset's required edge mask. n <= 11.
inline std::uint64_t count_cliques_by_masks(const LabeledGraph& g, int l) {
  if (l < 0) throw std::invalid_argument("clique size must be non-negative");
  if (g.order() > kMaxWordOrder) throw std::invalid_argument("mask counting needs n <= 11");
  const std::uint64_t code = *g.code();
  std::uint64_t count = 0;
  for (std::uint64_t m : clique_pair_masks(g.order(), l))
    if ((code & m) == m) ++count;
  return count;
}

namespace detail {

inline std::uint64_t count_extensions(const std::vector<std::uint64_t>& adj, std::uint64_t candidates, int depth) {
  if (depth == 0) return 1;
  if (depth == 1) return static_cast<std::uint64_t>(std::popcount(candidates));
  std::uint64_t total = 0;
  while (std::popcount(candidates) >= depth) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    total += count_extensions(adj, candidates & adj[v], depth - 1);
  }
  return total;
}

inline bool find_extension(const std::vector<std::uint64_t>& adj, std::uint64_t candidates, int depth) {
  if (depth <= 0) return true;
  while (std::popcount(candidates) >= depth) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (find_extension(adj, candidates & adj[v], depth - 1)) return true;
  }
  return false;
}

inline std::uint64_t all_vertices(int n) { return n == 64 ? ~0ULL : (1ULL << n) - 1; }

}  // namespace detail

/// Clique count by recursion on common-neighbourhood bitsets.
inline std::uint64_t count_cliques_by_neighbourhoods(const LabeledGraph& g, int l) {
  if (l < 0) throw std::invalid_argument("clique size must be non-negative");
  if (l > g.order()) return 0;
  return detail::count_extensions(g.adjacency(), detail::all_vertices(g.order()), l);
}

/// Number of l-vertex subsets inducing a complete graph (1 for l = 0).
inline std::uint64_t count_cliques(const LabeledGraph& g, int l) {
  if (l < 0 || l > kMaxVertices) throw std::invalid_argument("clique size must lie in [0, 64]");
  if (l > g.order()) return 0;
  if (l <= 8 && g.order() <= kMaxWordOrder) return count_cliques_by_masks(g, l);
  return count_cliques_by_neighbourhoods(g, l);
}

/// Stops at the first l-clique found.
inline bool has_clique(const LabeledGraph& g, int l) {
  if (l < 0 || l > kMaxVertices) throw std::invalid_argument("clique size must lie in [0, 64]");
  if (l > g.order()) return false;
  return detail::find_extension(g.adjacency(), detail::all_vertices(g.order()), l);
}

/// Edge-set inclusion on the same labeled vertex set.
inline bool is_subgraph(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.order() != h.order()) throw std::invalid_argument("is_subgraph needs graphs of equal order");
  return (g.bits() & ~h.bits()).none();
}

// Graph text format: a line "n", then one "u v" line per edge.

inline std::string write_graph_text(const LabeledGraph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline LabeledGraph read_graph_text(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line(line)) throw std::invalid_argument("graph text: missing vertex count");
  int n = 0;
  {
    std::istringstream head(line);
    std::string extra;
    if (!(head >> n) || (head >> extra)) throw std::invalid_argument("graph text: bad vertex count line");
  }
  LabeledGraph g(n);
  while (next_line(line)) {
    std::istringstream row(line);
    int u = 0, v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) throw std::invalid_argument("graph text: bad edge line '" + line + "'");
    g.add_edge(u, v);
  }
  return g;
}

inline LabeledGraph read_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph_text(in);
}

}  // namespace klfree
