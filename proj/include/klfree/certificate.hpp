#pragma once

// Evaluates the container-theorem hypotheses for the clique hypergraph, and
// every displayed inequality of the corollary's proof, at one concrete n.
// Nothing here is asymptotic: each inequality is evaluated in log-domain at the
// given n and reported pass/fail with its log margin.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "klfree/clique_hypergraph.hpp"
#include "klfree/inequality.hpp"
#include "klfree/log_magnitude.hpp"

namespace klfree {

/// Base of the two inner logarithms of the container-count bound.
enum class LogBase { natural, binary };

/// kAsPrinted evaluates the proof's displays verbatim. kCorrectedDegree
/// replaces the degree floor d >= n^(l-1.9), which is false for every n, with
/// d >= (n/l)^(l-2) and carries the l^(l-2) factor into the ratio bound.
enum class ChainVariant { as_printed, corrected_degree };

struct ContainerParams {
  Order n = Order::exact(1);
  int ell = 0;
  double delta = 0.0;
  LogMagnitude epsilon;  // delta * e^-l
  LogMagnitude p;        // n^(-(ln l)/(2 l^2))
  std::uint64_t c = 1;
};

struct CertificateReport {
  std::vector<InequalityStep> hypotheses;
  std::vector<InequalityStep> proof_chain;
  double container_log2_bound = -std::numeric_limits<double>::infinity();
  double target_log2 = 0.0;
  bool overall_pass = false;
  ContainerParams params;
  LogBase log_base = LogBase::natural;
  ChainVariant variant = ChainVariant::as_printed;

  /// Chain steps come first: the chain opens with the preconditions on (n, l)
  /// and ends with the hypotheses' own inequalities.
  const InequalityStep* first_failure() const {
    for (const auto* list : {&proof_chain, &hypotheses})
      for (const auto& s : *list)
        if (!s.pass) return &s;
    return nullptr;
  }
};

inline ContainerParams corollary_params(const Order& n, int ell, double delta, std::uint64_t c) {
  if (ell < 3) throw std::invalid_argument("corollary_params needs l >= 3");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("corollary_params needs 0 < delta < 1");
  if (c < 1) throw std::invalid_argument("corollary_params needs c >= 1");
  const double l = ell;
  ContainerParams params;
  params.n = n;
  params.ell = ell;
  params.delta = delta;
  params.c = c;
  params.epsilon = LogMagnitude::from_ln(std::log(delta) - l);
  params.p = LogMagnitude::from_ln(-(std::log(l) / (2.0 * l * l)) * n.ln());
  return params;
}

inline ContainerParams corollary_params(double log2_n, int ell, double delta, std::uint64_t c) {
  return corollary_params(Order::from_log2(log2_n), ell, delta, c);
}

namespace detail {

/// ln(log_b(1/x)) for 0 < x < 1; zero magnitude when x = 1.
inline LogMagnitude log_of_inverse(LogMagnitude x, LogBase base) {
  const double nat = -x.ln();
  if (nat <= 0.0) return LogMagnitude::zero();
  const double scale = base == LogBase::natural ? 1.0 : std::numbers::ln2;
  return LogMagnitude::from_value(nat / scale);
}

inline LogMagnitude n_power(const Order& n, double exponent) { return LogMagnitude::from_ln(exponent * n.ln()); }

}  // namespace detail

/// Hypotheses (a) p <= 1/(c r^(2r)) and (b) Delta(H,p) <= eps/(c r^r).
inline CertificateReport check_container_hypotheses(const CliqueHypergraphStats& stats, const ContainerParams& params) {
  if (stats.ell != params.ell || stats.n.ln() != params.n.ln())
    throw std::invalid_argument("stats and params describe different (n, l)");
  const double r = static_cast<double>(stats.r);
  const LogMagnitude c = LogMagnitude::from_value(static_cast<double>(params.c));
  const LogMagnitude r_mag = LogMagnitude::from_value(r);
  CertificateReport report;
  report.params = params;
  report.hypotheses.push_back(make_step("p_hypothesis", "p <= 1/(c r^(2r))", params.p,
                                        LogMagnitude::one() / (c * r_mag.pow(2.0 * r))));
  report.hypotheses.push_back(make_step("delta_hypothesis", "Delta(H,p) <= eps/(c r^r)",
                                        delta_function(stats, params.p), params.epsilon / (c * r_mag.pow(r))));
  report.overall_pass = std::all_of(report.hypotheses.begin(), report.hypotheses.end(),
                                    [](const InequalityStep& s) { return s.pass; });
  return report;
}

/// log2 of c r^(3r) (1 + log(1/eps)) N p log(1/p), the bound on log|C|.
inline double container_count_log2(const CliqueHypergraphStats& stats, const ContainerParams& params,
                                   LogBase base = LogBase::natural) {
  const double r = static_cast<double>(stats.r);
  const double scale = base == LogBase::natural ? 1.0 : std::numbers::ln2;
  const LogMagnitude bound = LogMagnitude::from_value(static_cast<double>(params.c)) *
                             LogMagnitude::from_value(r).pow(3.0 * r) *
                             LogMagnitude::from_value(1.0 + (-params.epsilon.ln()) / scale) * stats.order * params.p *
                             detail::log_of_inverse(params.p, base);
  return bound.log2();
}

namespace detail {

/// Evaluates one inequality per j in [2, r] and keeps the tightest.
template <class Lhs, class Rhs>
InequalityStep worst_over_j(const char* name, const char* statement, std::uint64_t r, Lhs&& lhs, Rhs&& rhs) {
  std::optional<InequalityStep> worst;
  for (std::uint64_t j = 2; j <= r; ++j) {
    InequalityStep s = make_step(name, statement, lhs(j), rhs(j));
    s.worst_j = j;
    const bool tighter = !worst || (worst->pass && !s.pass) ||
                         (worst->pass == s.pass && s.margin_log < worst->margin_log);
    if (tighter) worst = std::move(s);
  }
  return *worst;
}

}  // namespace detail

/// Every displayed step of the corollary's proof, in order, at the given n.
inline CertificateReport verify_proof_chain(const Order& n, int ell, double delta, std::uint64_t c,
                                            LogBase base = LogBase::natural,
                                            ChainVariant variant = ChainVariant::as_printed) {
  const ContainerParams params = corollary_params(n, ell, delta, c);
  const double l = ell;
  const double ln_l = std::log(l);
  const double ln_n = n.ln();
  const LogMagnitude c_mag = LogMagnitude::from_value(static_cast<double>(c));
  const LogMagnitude l_mag = LogMagnitude::from_value(l);
  const LogMagnitude n_mag = n.magnitude();

  std::vector<InequalityStep> chain;
  chain.push_back(make_step("ell_range", "l <= (ln n)^(1/4)/2", l_mag,
                            ln_n > 0.0 ? LogMagnitude::from_ln(0.25 * std::log(ln_n) - std::numbers::ln2)
                                       : LogMagnitude::zero()));

  CertificateReport report;
  report.params = params;
  report.log_base = base;
  report.variant = variant;
  report.target_log2 = (LogMagnitude::from_value(delta) * n_mag.pow(2.0) / l_mag).log2();

  if (ln_n < ln_l) {
    chain.push_back(make_step("order_at_least_ell", "l <= n", l_mag, n_mag));
    report.proof_chain = std::move(chain);
    report.overall_pass = false;
    return report;
  }

  const CliqueHypergraphStats stats = hypergraph_params(n, ell);
  const std::uint64_t r_int = stats.r;
  const double r = static_cast<double>(r_int);
  const LogMagnitude r_mag = LogMagnitude::from_value(r);
  auto exponent_shift = [&](std::uint64_t j) { return static_cast<double>(j - 1) * ln_l / (2.0 * l * l); };
  auto ratio = [&](std::uint64_t j) {
    return stats.max_codegree(j) / (stats.degree * params.p.pow(static_cast<double>(j - 1)));
  };

  chain.push_back(detail::worst_over_j(
      "codegree_power_bound", "Delta_j <= n^(l - 1/2 - sqrt(2j))", r_int, [&](std::uint64_t j) { return stats.max_codegree(j); },
      [&](std::uint64_t j) { return detail::n_power(n, l - 0.5 - std::sqrt(2.0 * static_cast<double>(j))); }));

  const LogMagnitude ratio_floor = LogMagnitude::from_ln((l - 2.0) * (ln_n - ln_l));
  chain.push_back(make_step("degree_ratio_floor", "(n/l)^(l-2) <= d", ratio_floor, stats.degree));

  if (variant == ChainVariant::as_printed) {
    chain.push_back(make_step("degree_power_floor", "n^(l-1.9) <= (n/l)^(l-2)", detail::n_power(n, l - 1.9), ratio_floor));
    chain.push_back(detail::worst_over_j(
        "codegree_ratio_bound", "Delta_j/(d p^(j-1)) <= n^(1.4 - sqrt(2j) + (j-1) ln l/(2 l^2))", r_int, ratio,
        [&](std::uint64_t j) {
          return detail::n_power(n, 1.4 - std::sqrt(2.0 * static_cast<double>(j)) + exponent_shift(j));
        }));
  } else {
    chain.push_back(detail::worst_over_j(
        "codegree_ratio_bound", "Delta_j/(d p^(j-1)) <= l^(l-2) n^(1.5 - sqrt(2j) + (j-1) ln l/(2 l^2))", r_int, ratio,
        [&](std::uint64_t j) {
          return l_mag.pow(l - 2.0) *
                 detail::n_power(n, 1.5 - std::sqrt(2.0 * static_cast<double>(j)) + exponent_shift(j));
        }));
  }

  chain.push_back(detail::worst_over_j(
      "exponent_gap", "2 - 1/(2e) <= sqrt(2j) - (j-1) ln l/(2 l^2)", r_int,
      [&](std::uint64_t) { return LogMagnitude::from_value(2.0 - 1.0 / (2.0 * std::numbers::e)); },
      [&](std::uint64_t j) {
        return LogMagnitude::from_value(std::sqrt(2.0 * static_cast<double>(j)) - exponent_shift(j));
      }));

  const LogMagnitude quarter = detail::n_power(n, -0.25);
  chain.push_back(detail::worst_over_j("codegree_ratio_quarter", "Delta_j/(d p^(j-1)) <= n^(-1/4)", r_int, ratio,
                                       [&](std::uint64_t) { return quarter; }));

  const LogMagnitude delta_hp = delta_function(stats, params.p);
  const LogMagnitude e_l4 = LogMagnitude::from_ln(l * l * l * l);
  const LogMagnitude delta_mag = LogMagnitude::from_value(delta);
  chain.push_back(make_step("delta_function_bound", "Delta(H,p) <= e^(l^4) n^(-1/4)", delta_hp, e_l4 * quarter));
  chain.push_back(make_step("delta_function_target", "e^(l^4) n^(-1/4) <= delta/(c e^(l^4))", e_l4 * quarter,
                            delta_mag / (c_mag * e_l4)));
  chain.push_back(make_step("delta_condition", "Delta(H,p) <= delta/(c e^l r^r)", delta_hp,
                            delta_mag / (c_mag * LogMagnitude::from_ln(l) * r_mag.pow(r))));
  chain.push_back(make_step("p_power_bound", "p <= 1/(c l^(4 l^2))", params.p,
                            LogMagnitude::one() / (c_mag * l_mag.pow(4.0 * l * l))));
  chain.push_back(make_step("p_condition", "p <= 1/(c r^(2r))", params.p,
                            LogMagnitude::one() / (c_mag * r_mag.pow(2.0 * r))));

  const LogMagnitude eps_factor = LogMagnitude::from_value(1.0 + l - std::log(delta));
  const LogMagnitude line1 = c_mag * r_mag.pow(3.0 * r) * eps_factor * stats.order * params.p *
                             detail::log_of_inverse(params.p, LogBase::natural);
  const LogMagnitude line2 =
      l_mag.pow(3.0 * l * l) * eps_factor * n_mag.pow(2.0) *
      (l_mag.pow(-4.0 * l * l) * LogMagnitude::from_value(std::log(static_cast<double>(c)) + 7.0 * l * l * ln_l));
  const LogMagnitude line3 = delta_mag * n_mag.pow(2.0) / l_mag;
  chain.push_back(make_step("container_line_1_2",
                            "c r^(3r)(1+l-ln delta) C(n,2) p ln(1/p) <= l^(3l^2)(1+l-ln delta) n^2 l^(-4l^2) ln(c l^(7l^2))",
                            line1, line2));
  chain.push_back(make_step("container_line_2_3", "l^(3l^2)(1+l-ln delta) n^2 l^(-4l^2) ln(c l^(7l^2)) <= delta n^2/l",
                            line2, line3));

  report.container_log2_bound = container_count_log2(stats, params, base);
  chain.push_back(make_step("container_bound_target", "c r^(3r)(1+log(1/eps)) N p log(1/p) <= delta n^2/l",
                            LogMagnitude::from_log2(report.container_log2_bound), line3));

  CertificateReport hyp = check_container_hypotheses(stats, params);
  report.hypotheses = std::move(hyp.hypotheses);
  report.proof_chain = std::move(chain);
  auto all_pass = [](const std::vector<InequalityStep>& v) {
    return std::all_of(v.begin(), v.end(), [](const InequalityStep& s) { return s.pass; });
  };
  report.overall_pass = all_pass(report.hypotheses) && all_pass(report.proof_chain);
  return report;
}

inline CertificateReport verify_proof_chain(double log2_n, int ell, double delta, std::uint64_t c,
                                            LogBase base = LogBase::natural,
                                            ChainVariant variant = ChainVariant::as_printed) {
  return verify_proof_chain(Order::from_log2(log2_n), ell, delta, c, base, variant);
}

struct ThresholdResult {
  bool reachable = false;
  double log2_n = 0.0;                 // smallest passing log2 n found
  double probe_below = 0.0;            // largest failing log2 n probed
  std::string first_failing_step;      // at probe_below
  int refinement_steps = 0;
};

/// Smallest log2 n at which the whole chain passes: doubling from 1 up to 2^64,
/// then 64 bisection steps between the last failure and the first pass.
inline ThresholdResult minimal_n_threshold(int ell, double delta, std::uint64_t c,
                                           ChainVariant variant = ChainVariant::as_printed,
                                           LogBase base = LogBase::natural) {
  constexpr double cap = 18446744073709551616.0;  // 2^64
  auto passes = [&](double x) { return verify_proof_chain(x, ell, delta, c, base, variant); };
  auto failing_name = [](const CertificateReport& r) {
    const InequalityStep* f = r.first_failure();
    return f ? f->step : std::string{};
  };

  ThresholdResult out;
  double lo = 0.0;
  std::optional<double> hi;
  CertificateReport last_fail;
  for (double x = 1.0; x <= cap; x *= 2.0) {
    CertificateReport rep = passes(x);
    if (rep.overall_pass) {
      hi = x;
      break;
    }
    lo = x;
    last_fail = std::move(rep);
  }
  if (!hi) {
    out.reachable = false;
    out.probe_below = lo;
    out.first_failing_step = failing_name(last_fail);
    return out;
  }
  if (lo == 0.0) {
    out.reachable = true;
    out.log2_n = *hi;
    return out;
  }
  double top = *hi;
  for (int i = 0; i < 64; ++i) {
    const double mid = lo + (top - lo) / 2.0;
    if (mid <= lo || mid >= top) break;
    CertificateReport rep = passes(mid);
    ++out.refinement_steps;
    if (rep.overall_pass) {
      top = mid;
    } else {
      lo = mid;
      last_fail = std::move(rep);
    }
  }
  out.reachable = true;
  out.log2_n = top;
  out.probe_below = lo;
  out.first_failing_step = failing_name(last_fail);
  return out;
}

}  // namespace klfree
