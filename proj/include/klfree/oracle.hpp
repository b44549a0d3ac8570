#pragma once

// Exhaustive ground truth at small n. Graphs are pair-bitset codes (n <= 11);
// clique tests are "mask & g == mask" against the precomputed C(n,l) masks.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "klfree/certificate.hpp"
#include "klfree/combinations.hpp"
#include "klfree/exact.hpp"
#include "klfree/graph.hpp"
#include "klfree/parallel.hpp"

namespace klfree {

/// A request exceeded a work guard and was refused before doing any work.
class GuardRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScanOptions {
  unsigned threads = 1;
  bool override_guard = false;
  std::optional<double> budget_secs;  // required when override_guard is set
};

struct EnumerationResult {
  int n = 0;
  int ell = 0;
  BigInt count;
  std::uint64_t graphs_scanned = 0;
  std::chrono::milliseconds elapsed{0};
  unsigned threads = 1;
};

struct SupersatResult {
  int n = 0;
  int ell = 0;
  std::uint64_t m = 0;
  std::uint64_t min_count = 0;
  LabeledGraph witness{1};
};

struct ValidationReport {
  bool covers_all = false;
  std::optional<LabeledGraph> uncovered_example;
  std::uint64_t max_clique_copies = 0;
  Rational epsilon_budget;  // eps * C(n, l)
  bool copies_within_budget = false;
  std::size_t family_size = 0;
  std::optional<double> container_log2_bound;
  std::optional<bool> size_ok;  // only when container parameters were supplied
};

namespace detail {

inline void enforce_guard(bool within, const ScanOptions& opt, const std::string& what) {
  if (opt.override_guard && !opt.budget_secs) throw GuardRefusal("guard override requires a time budget");
  if (within) return;
  if (!opt.override_guard) throw GuardRefusal(what);
}

inline Deadline make_deadline(const ScanOptions& opt) {
  return opt.budget_secs ? Deadline(std::chrono::duration<double>(*opt.budget_secs)) : Deadline{};
}

inline bool contains_any(std::uint64_t g, std::span<const std::uint64_t> masks) {
  for (std::uint64_t m : masks)
    if ((g & m) == m) return true;
  return false;
}

inline std::uint64_t full_space(int n) {
  const std::size_t pairs = pair_count(n);
  return pairs == 64 ? 0 : (1ULL << pairs);
}

}  // namespace detail

/// f_n(K_l): number of labeled graphs on n vertices with no l-clique.
inline EnumerationResult count_free_graphs(int n, int ell, const ScanOptions& opt = {}) {
  if (n < 1) throw std::invalid_argument("count_free_graphs needs n >= 1");
  if (ell < 2) throw std::invalid_argument("count_free_graphs needs l >= 2");
  if (opt.threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (n > 10) throw GuardRefusal("full scan is limited to n <= 10 even with an override");
  detail::enforce_guard(n <= 8, opt, "full scan of 2^C(n,2) graphs is guarded at n <= 8");

  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::uint64_t> masks = clique_pair_masks(n, ell);
  const std::uint64_t space = detail::full_space(n);
  const std::uint64_t count = parallel_reduce<std::uint64_t>(
      0, space, opt.threads, 0,
      [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t c = 0;
        for (std::uint64_t g = lo; g < hi; ++g) c += !detail::contains_any(g, masks);
        return c;
      },
      [](std::uint64_t a, std::uint64_t b) { return a + b; }, detail::make_deadline(opt));

  EnumerationResult r;
  r.n = n;
  r.ell = ell;
  r.count = count;
  r.graphs_scanned = space;
  r.threads = opt.threads;
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

/// f_n(K_3) by inclusion-exclusion over sets S of triangles:
/// sum (-1)^|S| 2^(C(n,2) - |union S|).
inline BigInt count_free_graphs_ie(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("inclusion-exclusion oracle is limited to 1 <= n <= 5");
  const std::vector<std::uint64_t> triangles = clique_pair_masks(n, 3);
  const std::size_t pairs = pair_count(n);
  const std::size_t t = triangles.size();
  BigInt total = 0;
  for (std::uint64_t subset = 0; subset < (1ULL << t); ++subset) {
    std::uint64_t covered = 0;
    for (std::size_t i = 0; i < t; ++i)
      if (subset >> i & 1) covered |= triangles[i];
    const BigInt term = pow2(pairs - static_cast<std::size_t>(std::popcount(covered)));
    if (std::popcount(subset) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

/// Minimum number of l-cliques over all m-edge graphs on [n]; ties go to the
/// smallest pair code so serial and parallel runs agree.
inline SupersatResult min_cliques_at_edge_count(int n, int ell, std::uint64_t m, const ScanOptions& opt = {}) {
  if (n < 1 || n > kMaxWordOrder) throw std::invalid_argument("min_cliques_at_edge_count needs 1 <= n <= 11");
  if (ell < 1) throw std::invalid_argument("min_cliques_at_edge_count needs l >= 1");
  const auto pairs = static_cast<unsigned>(pair_count(n));
  if (m > pairs) throw std::invalid_argument("edge count exceeds C(n,2)");
  const BigInt space_big = binomial(pairs, m);
  detail::enforce_guard(n <= 8 && space_big <= pow2(30), opt,
                        "m-edge scan is guarded at n <= 8 and C(C(n,2), m) <= 2^30");
  const auto space = static_cast<std::uint64_t>(space_big);
  const std::vector<std::uint64_t> masks = clique_pair_masks(n, ell);

  using Best = std::pair<std::uint64_t, std::uint64_t>;  // (count, code)
  const Best none{~0ULL, ~0ULL};
  const Best best = parallel_reduce<Best>(
      0, space, opt.threads, none,
      [&](std::uint64_t lo, std::uint64_t hi) {
        Best local = none;
        for_each_combination(pairs, static_cast<unsigned>(m), lo, hi, [&](std::uint64_t g) {
          std::uint64_t c = 0;
          for (std::uint64_t mask : masks) {
            c += (g & mask) == mask;
            if (c >= local.first) return;
          }
          if (c < local.first) local = {c, g};
        });
        return local;
      },
      [](const Best& a, const Best& b) { return std::min(a, b); }, detail::make_deadline(opt));

  SupersatResult r;
  r.n = n;
  r.ell = ell;
  r.m = m;
  r.min_count = best.first;
  r.witness = LabeledGraph::from_code(n, best.second);
  return r;
}

/// All edge-maximal K_l-free graphs on [n], ordered by pair code.
inline std::vector<LabeledGraph> maximal_free_family(int n, int ell) {
  if (n < 1 || n > 7) throw std::invalid_argument("maximal_free_family is limited to 1 <= n <= 7");
  if (ell < 1) throw std::invalid_argument("maximal_free_family needs l >= 1");
  const std::size_t pairs = pair_count(n);
  const std::vector<std::uint64_t> masks = clique_pair_masks(n, ell);
  std::vector<std::vector<std::uint64_t>> through(pairs);  // masks containing each pair
  for (std::uint64_t m : masks)
    for (std::size_t e = 0; e < pairs; ++e)
      if (m >> e & 1) through[e].push_back(m);

  std::vector<LabeledGraph> family;
  const std::uint64_t space = detail::full_space(n);
  for (std::uint64_t g = 0; g < space; ++g) {
    if (detail::contains_any(g, masks)) continue;
    bool maximal = true;
    for (std::size_t e = 0; e < pairs && maximal; ++e) {
      if (g >> e & 1) continue;
      maximal = detail::contains_any(g | (1ULL << e), through[e]);
    }
    if (maximal) family.push_back(LabeledGraph::from_code(n, g));
  }
  return family;
}

/// Checks a candidate container family: covering of every K_l-free graph by a
/// full scan, clique copies per member against eps * C(n,l), and optionally
/// the family size against the container-count bound.
inline ValidationReport validate_container_family(int n, int ell, std::span<const LabeledGraph> family,
                                                  const Rational& epsilon,
                                                  const std::optional<ContainerParams>& params = std::nullopt,
                                                  LogBase base = LogBase::natural) {
  if (n < 1 || n > 7) throw std::invalid_argument("validate_container_family is limited to 1 <= n <= 7");
  if (ell < 1) throw std::invalid_argument("validate_container_family needs l >= 1");
  std::vector<std::uint64_t> members;
  members.reserve(family.size());
  for (const auto& g : family) {
    if (g.order() != n) throw std::invalid_argument("family member has the wrong order");
    members.push_back(*g.code());
  }
  const std::vector<std::uint64_t> masks = clique_pair_masks(n, ell);

  ValidationReport report;
  report.family_size = family.size();
  report.covers_all = true;
  const std::uint64_t space = detail::full_space(n);
  for (std::uint64_t g = 0; g < space && report.covers_all; ++g) {
    if (detail::contains_any(g, masks)) continue;
    const bool covered =
        std::any_of(members.begin(), members.end(), [g](std::uint64_t f) { return (g & ~f) == 0; });
    if (!covered) {
      report.covers_all = false;
      report.uncovered_example = LabeledGraph::from_code(n, g);
    }
  }
  for (std::uint64_t f : members) {
    std::uint64_t copies = 0;
    for (std::uint64_t m : masks) copies += (f & m) == m;
    report.max_clique_copies = std::max(report.max_clique_copies, copies);
  }
  report.epsilon_budget = epsilon * Rational(binomial(n, ell));
  report.copies_within_budget = Rational(report.max_clique_copies) <= report.epsilon_budget;

  if (params) {
    if (params->ell != ell || params->n.exact_value() != static_cast<std::uint64_t>(n))
      throw std::invalid_argument("container parameters describe a different (n, l)");
    const double bound_log2 = container_count_log2(hypergraph_params(static_cast<std::uint64_t>(n), ell), *params, base);
    report.container_log2_bound = bound_log2;
    if (family.size() <= 1) {
      report.size_ok = true;  // log|family| <= 0 <= bound
    } else {
      const double scale = base == LogBase::natural ? 1.0 : std::numbers::ln2;
      const LogMagnitude log_size = LogMagnitude::from_value(std::log(static_cast<double>(family.size())) / scale);
      report.size_ok = log_size <= LogMagnitude::from_log2(bound_log2);
    }
  }
  return report;
}

}  // namespace klfree
