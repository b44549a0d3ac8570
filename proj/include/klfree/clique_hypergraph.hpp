#pragma once

// The clique hypergraph H(n, l): vertices are the C(n,2) edges of K_n, hyperedges
// the edge sets of the C(n,l) copies of K_l. Everything here is a closed form
// in n, l except the brute-force oracles at the bottom.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "klfree/combinations.hpp"
#include "klfree/exact.hpp"
#include "klfree/graph.hpp"
#include "klfree/log_magnitude.hpp"
#include "klfree/parallel.hpp"

namespace klfree {

/// Smallest v with C(v,2) >= j: the fewest vertices a j-edge graph can span.
inline std::uint64_t v_min(std::uint64_t j) {
  if (j < 1) throw std::invalid_argument("v_min needs j >= 1");
  auto v = static_cast<std::uint64_t>(std::ceil((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(j))) / 2.0));
  while (v > 2 && (v - 1) * (v - 2) / 2 >= j) --v;
  while (v * (v - 1) / 2 < j) ++v;
  return v;
}

/// r = C(l, 2), the uniformity of H(n, l).
inline std::uint64_t uniformity(std::uint64_t l) { return l * (l - 1) / 2; }

struct CliqueHypergraphStats {
  struct Exact {
    BigInt order;       // N = C(n,2)
    BigInt edge_count;  // e(H) = C(n,l)
    BigInt degree;      // C(n-2, l-2)
    std::vector<BigInt> max_codegrees;  // Delta_1 .. Delta_r
  };

  Order n = Order::exact(1);
  int ell = 0;
  std::uint64_t r = 0;
  LogMagnitude order;
  LogMagnitude edge_count;
  LogMagnitude degree;
  std::vector<LogMagnitude> max_codegrees;  // index j-1
  std::optional<Exact> exact;

  LogMagnitude max_codegree(std::uint64_t j) const {
    if (j < 1 || j > r) throw std::out_of_range("co-degree index out of range");
    return max_codegrees[j - 1];
  }
};

/// Delta_j = C(n - v_min(j), l - v_min(j)).
inline BigInt max_codegree(std::uint64_t n, int l, std::uint64_t j) {
  if (l < 1 || static_cast<std::uint64_t>(l) > n) throw std::invalid_argument("max_codegree needs l <= n");
  if (j < 1 || j > uniformity(l)) throw std::invalid_argument("max_codegree needs 1 <= j <= C(l,2)");
  const std::uint64_t v = v_min(j);
  return binomial(n - v, l - v);
}

inline LogMagnitude max_codegree(const Order& n, int l, std::uint64_t j) {
  if (j < 1 || j > uniformity(l)) throw std::invalid_argument("max_codegree needs 1 <= j <= C(l,2)");
  const std::uint64_t v = v_min(j);
  return log_binomial(n, v, l - v);
}

/// Exact statistics for integer n.
inline CliqueHypergraphStats hypergraph_params(std::uint64_t n, int l) {
  if (l < 3 || static_cast<std::uint64_t>(l) > n) throw std::invalid_argument("hypergraph_params needs 3 <= l <= n");
  CliqueHypergraphStats s;
  s.n = Order::exact(n);
  s.ell = l;
  s.r = uniformity(l);
  CliqueHypergraphStats::Exact ex;
  ex.order = binomial(n, 2);
  ex.edge_count = binomial(n, l);
  ex.degree = binomial(n - 2, l - 2);
  ex.max_codegrees.reserve(s.r);
  for (std::uint64_t j = 1; j <= s.r; ++j) ex.max_codegrees.push_back(max_codegree(n, l, j));
  s.order = LogMagnitude::from_exact(ex.order);
  s.edge_count = LogMagnitude::from_exact(ex.edge_count);
  s.degree = LogMagnitude::from_exact(ex.degree);
  for (const auto& d : ex.max_codegrees) s.max_codegrees.push_back(LogMagnitude::from_exact(d));
  s.exact = std::move(ex);
  return s;
}

/// Log-domain statistics; exact orders are routed to the integer version.
inline CliqueHypergraphStats hypergraph_params(const Order& n, int l) {
  if (auto e = n.exact_value()) return hypergraph_params(*e, l);
  if (l < 3) throw std::invalid_argument("hypergraph_params needs l >= 3");
  if (n.ln() < std::log(static_cast<double>(l))) throw std::invalid_argument("hypergraph_params needs l <= n");
  CliqueHypergraphStats s;
  s.n = n;
  s.ell = l;
  s.r = uniformity(l);
  s.order = log_binomial(n, 0, 2);
  s.edge_count = log_binomial(n, 0, l);
  s.degree = log_binomial(n, 2, l - 2);
  s.max_codegrees.reserve(s.r);
  // Delta_j only depends on v_min(j), so evaluate each distinct v once.
  std::uint64_t cached_v = 0;
  LogMagnitude cached;
  for (std::uint64_t j = 1; j <= s.r; ++j) {
    const std::uint64_t v = v_min(j);
    if (v != cached_v) {
      cached_v = v;
      cached = log_binomial(n, v, l - v);
    }
    s.max_codegrees.push_back(cached);
  }
  return s;
}

/// d(sigma) = C(n - v(sigma), l - v(sigma)) when v(sigma) <= l, else 0. sigma
/// is an edge set on a vertex subset of [n].
inline BigInt codegree(std::uint64_t n, int l, const LabeledGraph& sigma) {
  if (sigma.edge_count() == 0) throw std::invalid_argument("codegree needs a nonempty edge set");
  if (static_cast<std::uint64_t>(sigma.order()) > n) throw std::invalid_argument("sigma has more vertices than n");
  if (l < 1) throw std::invalid_argument("codegree needs l >= 1");
  const auto v = static_cast<std::uint64_t>(std::popcount(sigma.spanned_vertices()));
  if (v > static_cast<std::uint64_t>(l)) return 0;
  return binomial(n - v, l - v);
}

/// Number of l-cliques of K_n whose edge set contains sigma, by scanning all
/// of them. sigma must be labeled on exactly n <= 11 vertices.
inline std::uint64_t brute_codegree(int l, const LabeledGraph& sigma) {
  if (sigma.order() > kMaxWordOrder) throw std::invalid_argument("brute co-degree needs n <= 11");
  const std::uint64_t code = *sigma.code();
  std::uint64_t count = 0;
  for (std::uint64_t m : clique_pair_masks(sigma.order(), l))
    if ((m & code) == code) ++count;
  return count;
}

/// Max co-degree over all j-subsets of E(K_n), scanned exhaustively. The
/// subset space is split into rank ranges and max-reduced.
inline std::uint64_t brute_max_codegree(int n, int l, std::uint64_t j, unsigned threads = 1) {
  if (n < 1 || n > 8) throw std::invalid_argument("brute_max_codegree work guard: n must be <= 8");
  if (l < 1 || l > n) throw std::invalid_argument("brute_max_codegree needs 1 <= l <= n");
  if (j < 1 || j > uniformity(l)) throw std::invalid_argument("brute_max_codegree needs 1 <= j <= C(l,2)");
  const auto pairs = static_cast<unsigned>(pair_count(n));
  const std::vector<std::uint64_t> masks = clique_pair_masks(n, l);
  const std::uint64_t total = binomial_u64(pairs, j);
  return parallel_reduce<std::uint64_t>(
      0, total, threads, 0,
      [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t best = 0;
        for_each_combination(pairs, static_cast<unsigned>(j), lo, hi, [&](std::uint64_t sigma) {
          std::uint64_t c = 0;
          for (std::uint64_t m : masks) c += (m & sigma) == sigma;
          best = std::max(best, c);
        });
        return best;
      },
      [](std::uint64_t a, std::uint64_t b) { return std::max(a, b); });
}

namespace detail {
inline void check_probability(const LogMagnitude& p) {
  if (p.is_zero() || p.ln() > 0.0 || std::isnan(p.ln())) throw std::domain_error("p must lie in (0, 1]");
}
inline void check_probability(const Rational& p) {
  if (p <= 0 || p > 1) throw std::domain_error("p must lie in (0, 1]");
}
}  // namespace detail

/// Delta(H,p) = 2^(C(r,2)-1) * sum_{j=2..r} 2^(-C(j-1,2)) Delta_j / (d p^(j-1)),
/// each term in log-domain, summed largest first.
inline LogMagnitude delta_function(const CliqueHypergraphStats& stats, LogMagnitude p) {
  detail::check_probability(p);
  const double ln2 = std::numbers::ln2;
  const double r = static_cast<double>(stats.r);
  std::vector<LogMagnitude> terms;
  terms.reserve(stats.r);
  for (std::uint64_t j = 2; j <= stats.r; ++j) {
    const double jm1 = static_cast<double>(j - 1);
    const double weight = -(jm1 * (jm1 - 1.0) / 2.0) * ln2;
    terms.push_back(stats.max_codegree(j) / stats.degree * LogMagnitude::from_ln(weight - jm1 * p.ln()));
  }
  return LogMagnitude::from_ln((r * (r - 1.0) / 2.0 - 1.0) * ln2) * log_sum(std::move(terms));
}

inline LogMagnitude delta_function(const Order& n, int l, LogMagnitude p) {
  return delta_function(hypergraph_params(n, l), p);
}

/// Same sum in exact rationals for integer n and rational p.
inline Rational delta_function_exact(std::uint64_t n, int l, const Rational& p) {
  detail::check_probability(p);
  const CliqueHypergraphStats stats = hypergraph_params(n, l);
  const auto& ex = *stats.exact;
  Rational sum = 0;
  Rational p_power = p;  // p^(j-1)
  for (std::uint64_t j = 2; j <= stats.r; ++j) {
    const std::uint64_t jm1 = j - 1;
    sum += Rational(ex.max_codegrees[j - 1]) / (Rational(pow2(jm1 * (jm1 - 1) / 2)) * Rational(ex.degree) * p_power);
    p_power *= p;
  }
  const std::uint64_t top = stats.r * (stats.r - 1) / 2;
  // r >= 3 so C(r,2) - 1 >= 2
  return Rational(pow2(top - 1)) * sum;
}

}  // namespace klfree
