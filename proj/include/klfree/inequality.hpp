#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "klfree/log_magnitude.hpp"

namespace klfree {

enum class Relation { less_equal, less };

/// One evaluated inequality, normalised so that `lhs` is the side that must
/// be smaller. margin_log = ln(rhs) - ln(lhs); its sign agrees with `pass`
/// except for equality under `less_equal`, where it is zero.
struct InequalityStep {
  std::string step;
  std::string statement;
  LogMagnitude lhs;
  LogMagnitude rhs;
  Relation relation = Relation::less_equal;
  bool pass = false;
  double margin_log = 0.0;
  std::optional<std::uint64_t> worst_j;
};

inline double log_margin(LogMagnitude lhs, LogMagnitude rhs) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (lhs.is_zero() && rhs.is_zero()) return 0.0;
  if (lhs.is_zero()) return inf;
  if (rhs.is_zero()) return -inf;
  return rhs.ln() - lhs.ln();
}

inline InequalityStep make_step(std::string name, std::string statement, LogMagnitude lhs, LogMagnitude rhs,
                                Relation relation = Relation::less_equal) {
  InequalityStep s;
  s.step = std::move(name);
  s.statement = std::move(statement);
  s.lhs = lhs;
  s.rhs = rhs;
  s.relation = relation;
  s.margin_log = log_margin(lhs, rhs);
  s.pass = relation == Relation::less ? lhs < rhs : lhs <= rhs;
  return s;
}

/// Variant decided exactly on rational coefficients. Both sides are reported
/// multiplied by `common`, a positive factor that cancels from the comparison.
inline InequalityStep make_exact_step(std::string name, std::string statement, const Rational& lhs,
                                      const Rational& rhs, Relation relation = Relation::less_equal,
                                      LogMagnitude common = LogMagnitude::one()) {
  InequalityStep s = make_step(std::move(name), std::move(statement), common * LogMagnitude::from_exact(lhs),
                               common * LogMagnitude::from_exact(rhs), relation);
  s.pass = relation == Relation::less ? lhs < rhs : lhs <= rhs;
  if (lhs == rhs) s.margin_log = 0.0;
  return s;
}

}  // namespace klfree
