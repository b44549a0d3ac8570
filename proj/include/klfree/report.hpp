#pragma once

// JSON views of every report type, and a dumper whose output depends only on
// the values: keys keep insertion order, floats print with %.17g, non-finite
// floats print as null.

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "klfree/bounds.hpp"
#include "klfree/certificate.hpp"
#include "klfree/clique_hypergraph.hpp"
#include "klfree/oracle.hpp"

namespace klfree {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

namespace detail {

inline void append_escaped(std::string& out, const std::string& s) {
  // nlohmann's own escaping, applied to a lone string value
  out += Json(s).dump();
}

inline void dump_value(std::string& out, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        append_escaped(out, it.key());
        out += ": ";
        dump_value(out, it.value(), indent, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        dump_value(out, v, indent, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      std::string s = buf;
      if (s.find_first_of(".eE") == std::string::npos) s += ".0";
      out += s;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace detail

inline std::string dump_stable(const Json& j, int indent = 2) {
  std::string out;
  detail::dump_value(out, j, indent, 0);
  out += "\n";
  return out;
}

inline Json edges_json(const LabeledGraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  return edges;
}

inline Json to_json(const InequalityStep& s) {
  Json j;
  j["step"] = s.step;
  j["statement"] = s.statement;
  j["relation"] = s.relation == Relation::less ? "<" : "<=";
  j["lhs_log"] = s.lhs.ln();
  j["rhs_log"] = s.rhs.ln();
  j["pass"] = s.pass;
  j["margin_log"] = s.margin_log;
  if (s.worst_j) j["worst_j"] = *s.worst_j;
  return j;
}

inline Json steps_json(const std::vector<InequalityStep>& steps) {
  Json a = Json::array();
  for (const auto& s : steps) a.push_back(to_json(s));
  return a;
}

inline const char* to_string(LogBase b) { return b == LogBase::natural ? "e" : "2"; }
inline const char* to_string(ChainVariant v) {
  return v == ChainVariant::as_printed ? "as-printed" : "corrected-degree";
}

inline Json order_json(const Order& n) {
  Json j;
  if (auto e = n.exact_value())
    j["n"] = *e;
  else
    j["n"] = nullptr;
  j["log2_n"] = n.log2();
  return j;
}

inline Json to_json(const ContainerParams& p) {
  Json j = order_json(p.n);
  j["l"] = p.ell;
  j["delta"] = p.delta;
  j["c"] = p.c;
  j["epsilon_log"] = p.epsilon.ln();
  j["p_log"] = p.p.ln();
  return j;
}

inline Json to_json(const CertificateReport& r) {
  Json j;
  j["params"] = to_json(r.params);
  j["log_base"] = to_string(r.log_base);
  j["chain"] = to_string(r.variant);
  j["hypotheses"] = steps_json(r.hypotheses);
  j["proof_chain"] = steps_json(r.proof_chain);
  j["container_log2_bound"] = r.container_log2_bound;
  j["target_log2"] = r.target_log2;
  const InequalityStep* first = r.first_failure();
  j["first_failure"] = first ? Json(first->step) : Json(nullptr);
  j["overall_pass"] = r.overall_pass;
  return j;
}

inline Json to_json(const ThresholdResult& t) {
  Json j;
  j["reachable"] = t.reachable;
  j["threshold_log2_n"] = t.reachable ? Json(t.log2_n) : Json(nullptr);
  j["probe_below_log2_n"] = t.probe_below;
  j["first_failing_step_below"] = t.first_failing_step.empty() ? Json(nullptr) : Json(t.first_failing_step);
  j["refinement_steps"] = t.refinement_steps;
  return j;
}

inline Json to_json(const CliqueHypergraphStats& s) {
  Json j = order_json(s.n);
  j["l"] = s.ell;
  j["r"] = s.r;
  if (s.exact) {
    j["N"] = to_decimal(s.exact->order);
    j["eH"] = to_decimal(s.exact->edge_count);
    j["degree"] = to_decimal(s.exact->degree);
  }
  j["N_log2"] = s.order.log2();
  j["eH_log2"] = s.edge_count.log2();
  j["degree_log2"] = s.degree.log2();
  Json table = Json::array();
  for (std::uint64_t jj = 1; jj <= s.r; ++jj) {
    Json row;
    row["j"] = jj;
    row["v_min"] = v_min(jj);
    if (s.exact) row["max_codegree"] = to_decimal(s.exact->max_codegrees[jj - 1]);
    row["max_codegree_log2"] = s.max_codegree(jj).log2();
    table.push_back(row);
  }
  j["delta_table"] = table;
  return j;
}

inline Json to_json(const Quantity& q) {
  Json j;
  j["exact"] = q.exact ? Json(*q.exact) : Json(nullptr);
  j["value"] = q.value ? Json(*q.value) : Json(nullptr);
  j["log2"] = q.log2;
  return j;
}

inline Json to_json(const BoundsReport& r) {
  Json j = order_json(r.n);
  j["l"] = r.ell;
  j["delta"] = r.delta ? Json(*r.delta) : Json(nullptr);
  j["lower_log2"] = to_json(r.lower_log2);
  j["lower_display_floor"] = to_json(r.lower_display_floor);
  j["main_term_log2"] = to_json(r.main_term_log2);
  j["upper_log2"] = r.upper_log2 ? to_json(*r.upper_log2) : Json(nullptr);
  j["upper_log2_binomial"] = r.upper_log2_binomial ? to_json(*r.upper_log2_binomial) : Json(nullptr);
  j["exact_count"] = r.exact_count ? Json(to_decimal(*r.exact_count)) : Json(nullptr);
  j["exact_log2"] = r.exact_log2 ? Json(*r.exact_log2) : Json(nullptr);
  j["gap_to_main_term"] = r.gap_to_main_term ? Json(*r.gap_to_main_term) : Json(nullptr);
  if (r.supersat) {
    Json s;
    s["t"] = to_string(r.supersat->t);
    s["t_value"] = to_double(r.supersat->t);
    s["edge_threshold"] = r.supersat->edge_threshold_exact ? to_json(make_quantity(*r.supersat->edge_threshold_exact))
                                                           : to_json(make_quantity(r.supersat->edge_threshold));
    s["k_value"] = r.supersat->k_value_exact ? to_json(make_quantity(*r.supersat->k_value_exact))
                                             : to_json(make_quantity(r.supersat->k_value));
    j["supersat"] = s;
  } else {
    j["supersat"] = nullptr;
  }
  if (r.cases) {
    Json c;
    c["case"] = r.cases->large_ell ? "l >= 1/delta" : "l < 1/delta";
    c["steps"] = steps_json(r.cases->steps);
    c["pass"] = r.cases->pass();
    j["case_analysis"] = c;
  } else {
    j["case_analysis"] = nullptr;
  }
  return j;
}

inline Json to_json(const ValidationReport& v) {
  Json j;
  j["family_size"] = v.family_size;
  j["covers_all"] = v.covers_all;
  j["uncovered_example"] = v.uncovered_example ? edges_json(*v.uncovered_example) : Json(nullptr);
  j["max_clique_copies"] = v.max_clique_copies;
  j["epsilon_budget"] = to_string(v.epsilon_budget);
  j["copies_within_budget"] = v.copies_within_budget;
  j["container_log2_bound"] = v.container_log2_bound ? Json(*v.container_log2_bound) : Json(nullptr);
  j["size_ok"] = v.size_ok ? Json(*v.size_ok) : Json(nullptr);
  return j;
}

}  // namespace klfree
