#pragma once

// Closed-form evaluators for the lower/upper bounds on log2 f_n(K_l), the
// Lovasz-Simonovits supersaturation count, and the two-case analysis of k(l).
// Integer n gives exact rationals; an Order in log mode gives LogMagnitudes.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "klfree/exact.hpp"
#include "klfree/graph.hpp"
#include "klfree/inequality.hpp"
#include "klfree/log_magnitude.hpp"

namespace klfree {

namespace detail {

inline void check_ell(int ell) {
  if (ell < 3) throw std::invalid_argument("bounds need l >= 3");
}
inline void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("bounds need 0 < delta < 1");
}

}  // namespace detail

/// e(T(n, l-1)): log2 of the number of subgraphs of the Turan graph.
inline BigInt lower_bound_log2(std::uint64_t n, int ell) {
  detail::check_ell(ell);
  if (static_cast<std::uint64_t>(ell) > n) throw std::invalid_argument("lower_bound_log2 needs l <= n");
  return turan_edge_count(n, ell - 1);
}

/// The weaker floor (n/(l-1) - 1)^2 C(l-1, 2).
inline Rational turan_display_floor(std::uint64_t n, int ell) {
  detail::check_ell(ell);
  const Rational side = Rational(BigInt(n), BigInt(ell - 1)) - 1;
  return side * side * Rational(binomial(ell - 1, 2));
}

inline LogMagnitude turan_display_floor(const Order& n, int ell) {
  if (auto e = n.exact_value()) {
    const Rational v = turan_display_floor(*e, ell);
    return LogMagnitude::from_exact(v);
  }
  detail::check_ell(ell);
  const double k = ell - 1;
  const LogMagnitude side = n.minus(static_cast<std::uint64_t>(k)) / LogMagnitude::from_value(k);
  return side.pow(2.0) * LogMagnitude::from_exact(binomial(ell - 1, 2));
}

/// (1 - 1/(l-1)) C(n,2).
inline Rational main_term_log2(std::uint64_t n, int ell) {
  detail::check_ell(ell);
  return (1 - Rational(1, ell - 1)) * Rational(binomial(n, 2));
}

inline LogMagnitude main_term_log2(const Order& n, int ell) {
  if (auto e = n.exact_value()) return LogMagnitude::from_exact(main_term_log2(*e, ell));
  detail::check_ell(ell);
  return LogMagnitude::from_value(1.0 - 1.0 / (ell - 1)) * log_binomial(n, 0, 2);
}

/// (1 - (1-delta)/(l-1)) n^2/2 + delta n^2/l, as in the final display.
inline Rational upper_bound_log2(std::uint64_t n, int ell, double delta) {
  detail::check_ell(ell);
  detail::check_delta(delta);
  const Rational d = to_rational(delta);
  const Rational n2 = Rational(BigInt(n) * n);
  return (1 - (1 - d) / (ell - 1)) * n2 / 2 + d * n2 / ell;
}

/// Same with C(n,2) in place of n^2/2 in the first term, as in the opening display.
inline Rational upper_bound_log2_binomial(std::uint64_t n, int ell, double delta) {
  detail::check_ell(ell);
  detail::check_delta(delta);
  const Rational d = to_rational(delta);
  return (1 - (1 - d) / (ell - 1)) * Rational(binomial(n, 2)) + d * Rational(BigInt(n) * n) / ell;
}

inline LogMagnitude upper_bound_log2(const Order& n, int ell, double delta) {
  if (auto e = n.exact_value()) return LogMagnitude::from_exact(upper_bound_log2(*e, ell, delta));
  detail::check_ell(ell);
  detail::check_delta(delta);
  const double coeff = (1.0 - (1.0 - delta) / (ell - 1)) / 2.0 + delta / ell;
  return LogMagnitude::from_value(coeff) * n.magnitude().pow(2.0);
}

inline LogMagnitude upper_bound_log2_binomial(const Order& n, int ell, double delta) {
  if (auto e = n.exact_value()) return LogMagnitude::from_exact(upper_bound_log2_binomial(*e, ell, delta));
  detail::check_ell(ell);
  detail::check_delta(delta);
  return LogMagnitude::from_value(1.0 - (1.0 - delta) / (ell - 1)) * log_binomial(n, 0, 2) +
         LogMagnitude::from_value(delta / ell) * n.magnitude().pow(2.0);
}

/// x(x-1)...(x-l+1)/l!
inline Rational generalized_binomial(const Rational& x, unsigned ell) {
  Rational r = 1;
  for (unsigned i = 0; i < ell; ++i) r *= (x - i) / (i + 1);
  return r;
}

inline double generalized_binomial(double x, unsigned ell) {
  double r = 1.0;
  for (unsigned i = 0; i < ell; ++i) r *= (x - i) / (i + 1);
  return r;
}

/// (n/t)^l C(t, l): the Lovasz-Simonovits lower bound on the number of
/// l-cliques in an n-vertex graph with at least (1 - 1/t) n^2/2 edges.
inline Rational supersat_bound(std::uint64_t n, const Rational& t, unsigned ell) {
  if (t <= 0) throw std::invalid_argument("supersat_bound needs t > 0");
  const Rational ratio = Rational(BigInt(n)) / t;
  Rational power = 1;
  for (unsigned i = 0; i < ell; ++i) power *= ratio;
  return power * generalized_binomial(t, ell);
}

inline double supersat_bound(double n, double t, unsigned ell) {
  if (!(t > 0.0)) throw std::invalid_argument("supersat_bound needs t > 0");
  return std::pow(n / t, ell) * generalized_binomial(t, ell);
}

/// t = (l-1)/(1-delta), exact in the binary value of delta.
inline Rational supersat_t(int ell, double delta) {
  detail::check_ell(ell);
  detail::check_delta(delta);
  return Rational(ell - 1) / (1 - to_rational(delta));
}

/// k(l) = (n(1-delta)/(l-1))^l C((l-1)/(1-delta), l).
inline Rational k_threshold(std::uint64_t n, int ell, double delta) {
  return supersat_bound(n, supersat_t(ell, delta), static_cast<unsigned>(ell));
}

/// k(l) with n^l factored out: ((1-delta)/(l-1))^l C(t, l).
inline Rational k_threshold_coefficient(int ell, double delta) {
  const Rational t = supersat_t(ell, delta);
  Rational inv = 1;
  for (int i = 0; i < ell; ++i) inv /= t;
  return inv * generalized_binomial(t, static_cast<unsigned>(ell));
}

inline LogMagnitude k_threshold(const Order& n, int ell, double delta) {
  if (auto e = n.exact_value()) return LogMagnitude::from_exact(k_threshold(*e, ell, delta));
  return n.magnitude().pow(ell) * LogMagnitude::from_exact(k_threshold_coefficient(ell, delta));
}

struct SupersatThreshold {
  int ell = 0;
  Rational t;
  LogMagnitude edge_threshold;  // (1 - 1/t) n^2/2
  LogMagnitude k_value;
  std::optional<Rational> edge_threshold_exact;
  std::optional<Rational> k_value_exact;
};

inline SupersatThreshold supersat_threshold(const Order& n, int ell, double delta) {
  SupersatThreshold s;
  s.ell = ell;
  s.t = supersat_t(ell, delta);
  const Rational coeff = (1 - 1 / s.t) / 2;
  if (auto e = n.exact_value()) {
    s.edge_threshold_exact = coeff * Rational(BigInt(*e) * *e);
    s.k_value_exact = k_threshold(*e, ell, delta);
    s.edge_threshold = LogMagnitude::from_exact(*s.edge_threshold_exact);
    s.k_value = LogMagnitude::from_exact(*s.k_value_exact);
  } else {
    s.edge_threshold = LogMagnitude::from_exact(coeff) * n.magnitude().pow(2.0);
    s.k_value = k_threshold(n, ell, delta);
  }
  return s;
}

struct CaseAnalysis {
  bool large_ell = false;  // l >= 1/delta
  std::vector<InequalityStep> steps;
  bool pass() const {
    for (const auto& s : steps)
      if (!s.pass) return false;
    return true;
  }
};

/// Picks the case l >= 1/delta (boundary included) or l < 1/delta and
/// evaluates its chain. The first inequality of each chain compares k(l) with
/// an n^l multiple, so it is decided exactly on the n-free coefficients; the
/// second involves e^l or delta^(1/delta) and is decided in log-domain.
/// Callers wanting the delta^(1/delta) substitution pass it as delta.
inline CaseAnalysis case_analysis(const Order& n, int ell, double delta) {
  detail::check_ell(ell);
  detail::check_delta(delta);
  const Rational d = to_rational(delta);
  const Rational l = ell;
  const LogMagnitude n_to_l = n.magnitude().pow(ell);
  const Rational k_coeff = k_threshold_coefficient(ell, delta);
  const LogMagnitude binom_n_l = log_binomial(n, 0, static_cast<std::uint64_t>(ell));

  CaseAnalysis out;
  out.large_ell = l * d >= 1;
  if (out.large_ell) {
    Rational inv_power = 1;  // 1/l^l
    for (int i = 0; i < ell; ++i) inv_power /= l;
    out.steps.push_back(make_exact_step("k_vs_power", "n^l/l^l <= k(l)", inv_power, k_coeff, Relation::less_equal, n_to_l));
    out.steps.push_back(make_step("power_vs_binomial", "C(n,l)/e^l < n^l/l^l",
                                  binom_n_l / LogMagnitude::from_ln(ell),
                                  n_to_l / LogMagnitude::from_value(ell).pow(ell), Relation::less));
  } else {
    Rational product = 1;  // prod_{i=1}^{l-1} (1 - i(1-delta)/(l-1)) / l!
    for (int i = 1; i < ell; ++i) product *= 1 - Rational(i) * (1 - d) / (ell - 1);
    for (int i = 2; i <= ell; ++i) product /= i;
    out.steps.push_back(make_exact_step("k_vs_product", "(n^l/l!) prod_{i<l} (1 - i(1-delta)/(l-1)) <= k(l)", product,
                                        k_coeff, Relation::less_equal, n_to_l));
    const LogMagnitude delta_power = LogMagnitude::from_ln(std::log(delta) / delta);
    out.steps.push_back(make_step("product_vs_binomial", "delta^(1/delta) C(n,l) < (n^l/l!) prod_{i<l} (1 - i(1-delta)/(l-1))",
                                  delta_power * binom_n_l, n_to_l * LogMagnitude::from_exact(product), Relation::less));
  }
  return out;
}

/// log2 of |G| * 2^((1 - (1-delta)/(l-1)) n^2/2).
inline double final_count_bound(int ell, double delta, std::uint64_t n, double family_log2_size) {
  detail::check_ell(ell);
  detail::check_delta(delta);
  if (!(family_log2_size >= 0.0)) throw std::invalid_argument("family log2 size must be >= 0");
  const double nd = static_cast<double>(n);
  return family_log2_size + (1.0 - (1.0 - delta) / (ell - 1)) * nd * nd / 2.0;
}

inline LogMagnitude final_count_bound(int ell, double delta, const Order& n, LogMagnitude family_log2_size) {
  detail::check_ell(ell);
  detail::check_delta(delta);
  return family_log2_size +
         LogMagnitude::from_value((1.0 - (1.0 - delta) / (ell - 1)) / 2.0) * n.magnitude().pow(2.0);
}

/// Exact values as decimal strings where available, log2 of every value.
struct Quantity {
  std::optional<std::string> exact;
  std::optional<double> value;
  double log2 = -std::numeric_limits<double>::infinity();
};

inline Quantity make_quantity(const Rational& x) {
  Quantity q;
  q.exact = to_string(x);
  q.value = to_double(x);
  q.log2 = x > 0 ? log_of(x) / std::numbers::ln2 : -std::numeric_limits<double>::infinity();
  return q;
}

inline Quantity make_quantity(const BigInt& x) { return make_quantity(Rational(x)); }

inline Quantity make_quantity(LogMagnitude x) {
  Quantity q;
  q.log2 = x.log2();
  const double v = x.value();
  if (std::isfinite(v)) q.value = v;
  return q;
}

struct BoundsReport {
  Order n = Order::exact(1);
  int ell = 0;
  std::optional<double> delta;
  Quantity lower_log2;
  Quantity lower_display_floor;
  Quantity main_term_log2;
  std::optional<Quantity> upper_log2;           // n^2/2 form
  std::optional<Quantity> upper_log2_binomial;  // C(n,2) form
  std::optional<BigInt> exact_count;
  std::optional<double> exact_log2;
  std::optional<double> gap_to_main_term;  // exact_log2 - main term
  std::optional<SupersatThreshold> supersat;
  std::optional<CaseAnalysis> cases;
};

/// In log mode the lower bound is the leading term (1 - 1/(l-1)) n^2/2 of
/// e(T(n, l-1)); the dropped part is at most (l-1)/8.
inline BoundsReport bounds_report(const Order& n, int ell, std::optional<double> delta,
                                  std::optional<BigInt> oracle_count = std::nullopt) {
  detail::check_ell(ell);
  BoundsReport r;
  r.n = n;
  r.ell = ell;
  r.delta = delta;
  if (auto e = n.exact_value()) {
    if (static_cast<std::uint64_t>(ell) > *e) throw std::invalid_argument("bounds need l <= n");
    r.lower_log2 = make_quantity(lower_bound_log2(*e, ell));
    r.lower_display_floor = make_quantity(turan_display_floor(*e, ell));
    const Rational main = main_term_log2(*e, ell);
    r.main_term_log2 = make_quantity(main);
    if (delta) {
      r.upper_log2 = make_quantity(upper_bound_log2(*e, ell, *delta));
      r.upper_log2_binomial = make_quantity(upper_bound_log2_binomial(*e, ell, *delta));
    }
    if (oracle_count) {
      r.exact_count = *oracle_count;
      r.exact_log2 = log_of(*oracle_count) / std::numbers::ln2;
      r.gap_to_main_term = *r.exact_log2 - to_double(main);
    }
  } else {
    r.lower_log2 = make_quantity(LogMagnitude::from_value((1.0 - 1.0 / (ell - 1)) / 2.0) * n.magnitude().pow(2.0));
    r.lower_display_floor = make_quantity(turan_display_floor(n, ell));
    r.main_term_log2 = make_quantity(main_term_log2(n, ell));
    if (delta) {
      r.upper_log2 = make_quantity(upper_bound_log2(n, ell, *delta));
      r.upper_log2_binomial = make_quantity(upper_bound_log2_binomial(n, ell, *delta));
    }
  }
  if (delta) {
    r.supersat = supersat_threshold(n, ell, *delta);
    r.cases = case_analysis(n, ell, *delta);
  }
  return r;
}

}  // namespace klfree
