#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "klfree/klfree.hpp"

namespace klfree::cli {
namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::string format = "json";
  std::string out_path;
  unsigned threads = 1;
  bool deterministic = false;
};

/// Files a command wants written: the main report plus sibling artifacts.
struct Output {
  std::string report;
  std::vector<std::pair<fs::path, std::string>> siblings;
};

std::string fmt_double(double v) {
  if (!std::isfinite(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    const std::string& c = cells[i];
    if (c.find_first_of(",\"\n") != std::string::npos) {
      line += '"';
      for (char ch : c) {
        if (ch == '"') line += '"';
        line += ch;
      }
      line += '"';
    } else {
      line += c;
    }
  }
  return line + "\n";
}

Json envelope(const std::string& command, Json config, const Global& g) {
  config["format"] = g.format;
  if (!g.deterministic) config["threads"] = g.threads;
  Json j;
  j["schema"] = "klfree." + command;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["config"] = std::move(config);
  return j;
}

fs::path sibling(const std::string& out_path, const std::string& suffix) {
  fs::path p(out_path);
  fs::path stem = p.parent_path() / p.stem();
  return fs::path(stem.string() + suffix);
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path() && !fs::exists(path.parent_path()))
    throw UsageError("output directory does not exist: " + path.parent_path().string());
  const fs::path tmp = fs::path(path.string() + ".tmp");
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write output file: " + path.string());
    f << content;
    if (!f) throw UsageError("cannot write output file: " + path.string());
  }
  fs::rename(tmp, path);
}

std::optional<double> elapsed_ms(const Global& g, std::chrono::milliseconds ms) {
  if (g.deterministic) return std::nullopt;
  return static_cast<double>(ms.count());
}

// census -------------------------------------------------------------------

struct ScanArgs {
  int n = 0;
  int l = 0;
  bool override_guard = false;
  std::optional<double> budget;
  std::optional<double> log2_n;  // rejected: exact-n commands
};

void add_scan_options(CLI::App* cmd, ScanArgs& a) {
  cmd->add_option("--n", a.n, "vertex count")->required();
  cmd->add_option("--l", a.l, "clique size")->required();
  cmd->add_flag("--override-guard", a.override_guard, "allow work past the guard (needs --budget-secs)");
  cmd->add_option("--budget-secs", a.budget, "time budget for an overridden scan");
  cmd->add_option("--log2-n", a.log2_n, "not supported: this command needs an exact --n")->group("");
}

void reject_log_mode(const std::optional<double>& log2_n, const std::string& command) {
  if (log2_n) throw UsageError(command + " works on exact vertex counts only; use --n");
}

ScanOptions scan_options(const ScanArgs& a, const Global& g) {
  ScanOptions o;
  o.threads = g.threads;
  o.override_guard = a.override_guard;
  o.budget_secs = a.budget;
  if (a.override_guard && !a.budget) throw GuardRefusal("--override-guard requires --budget-secs");
  return o;
}

Output run_census(const ScanArgs& a, const Global& g) {
  reject_log_mode(a.log2_n, "census");
  const EnumerationResult r = count_free_graphs(a.n, a.l, scan_options(a, g));
  const auto ms = elapsed_ms(g, r.elapsed);
  Output out;
  if (g.format == "csv") {
    out.report = csv_line({"n", "l", "count", "scanned", "threads", "elapsed_ms"}) +
                 csv_line({std::to_string(r.n), std::to_string(r.ell), to_decimal(r.count),
                           std::to_string(r.graphs_scanned), g.deterministic ? "" : std::to_string(r.threads),
                           ms ? fmt_double(*ms) : ""});
    return out;
  }
  Json config;
  config["n"] = a.n;
  config["l"] = a.l;
  config["override_guard"] = a.override_guard;
  config["budget_secs"] = a.budget ? Json(*a.budget) : Json(nullptr);
  Json j = envelope("census", config, g);
  j["n"] = r.n;
  j["l"] = r.ell;
  j["count"] = to_decimal(r.count);
  j["scanned"] = r.graphs_scanned;
  if (!g.deterministic) {
    j["threads"] = r.threads;
    j["elapsed_ms"] = *ms;
  }
  out.report = dump_stable(j);
  return out;
}

// supersat -----------------------------------------------------------------

Output run_supersat(const ScanArgs& a, std::uint64_t m, const Global& g) {
  reject_log_mode(a.log2_n, "supersat");
  const auto start = std::chrono::steady_clock::now();
  const SupersatResult r = min_cliques_at_edge_count(a.n, a.l, m, scan_options(a, g));
  const auto ms =
      elapsed_ms(g, std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start));
  const std::string witness_text = write_graph_text(r.witness);
  Output out;
  std::optional<fs::path> witness_path;
  if (!g.out_path.empty()) {
    witness_path = sibling(g.out_path, ".witness.graph");
    out.siblings.emplace_back(*witness_path, witness_text);
  }
  if (g.format == "csv") {
    std::string edges;
    for (auto [u, v] : r.witness.edges()) edges += (edges.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
    out.report = csv_line({"n", "l", "m", "min_count", "witness_edges"}) +
                 csv_line({std::to_string(r.n), std::to_string(r.ell), std::to_string(r.m), std::to_string(r.min_count), edges});
    return out;
  }
  Json config;
  config["n"] = a.n;
  config["l"] = a.l;
  config["m"] = m;
  config["override_guard"] = a.override_guard;
  config["budget_secs"] = a.budget ? Json(*a.budget) : Json(nullptr);
  Json j = envelope("supersat", config, g);
  j["n"] = r.n;
  j["l"] = r.ell;
  j["m"] = r.m;
  j["min_count"] = r.min_count;
  j["witness_edges"] = edges_json(r.witness);
  j["witness_graph"] = witness_text;
  j["witness_file"] = witness_path ? Json(witness_path->filename().string()) : Json(nullptr);
  if (!g.deterministic) {
    j["threads"] = g.threads;
    j["elapsed_ms"] = *ms;
  }
  out.report = dump_stable(j);
  return out;
}

// codegree -----------------------------------------------------------------

struct CodegreeArgs {
  int n = 0;
  int l = 0;
  std::optional<std::uint64_t> j;
  std::string sigma_path;
  bool brute = false;
  std::string p;
  std::optional<double> log2_n;
};

LabeledGraph read_graph_file(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read graph file: " + path.string());
  return read_graph_text(f);
}

Output run_codegree(const CodegreeArgs& a, const Global& g) {
  reject_log_mode(a.log2_n, "codegree");
  if (a.n < 1) throw UsageError("--n must be >= 1");
  const auto n = static_cast<std::uint64_t>(a.n);
  Json config;
  config["n"] = a.n;
  config["l"] = a.l;
  config["j"] = a.j ? Json(*a.j) : Json(nullptr);
  config["sigma"] = a.sigma_path.empty() ? Json(nullptr) : Json(fs::path(a.sigma_path).filename().string());
  config["brute"] = a.brute;
  config["p"] = a.p.empty() ? Json(nullptr) : Json(a.p);
  Json j = envelope("codegree", config, g);
  Output out;

  if (!a.sigma_path.empty()) {
    const LabeledGraph sigma = read_graph_file(a.sigma_path);
    if (static_cast<std::uint64_t>(sigma.order()) != n) throw UsageError("sigma graph order must equal --n");
    const BigInt d = codegree(n, a.l, sigma);
    const int v = std::popcount(sigma.spanned_vertices());
    std::optional<std::uint64_t> brute;
    if (a.brute) brute = brute_codegree(a.l, sigma);
    if (g.format == "csv") {
      out.report = csv_line({"n", "l", "v_sigma", "codegree", "brute"}) +
                   csv_line({std::to_string(n), std::to_string(a.l), std::to_string(v), to_decimal(d),
                             brute ? std::to_string(*brute) : ""});
      return out;
    }
    j["n"] = n;
    j["l"] = a.l;
    j["sigma_edges"] = edges_json(sigma);
    j["v_sigma"] = v;
    j["codegree"] = to_decimal(d);
    j["brute"] = brute ? Json(std::to_string(*brute)) : Json(nullptr);
    out.report = dump_stable(j);
    return out;
  }

  if (a.j) {
    const BigInt d = max_codegree(n, a.l, *a.j);
    std::optional<std::uint64_t> brute;
    if (a.brute) brute = brute_max_codegree(a.n, a.l, *a.j, g.threads);
    if (g.format == "csv") {
      out.report = csv_line({"n", "l", "j", "v_min", "max_codegree", "brute"}) +
                   csv_line({std::to_string(n), std::to_string(a.l), std::to_string(*a.j), std::to_string(v_min(*a.j)),
                             to_decimal(d), brute ? std::to_string(*brute) : ""});
      return out;
    }
    j["n"] = n;
    j["l"] = a.l;
    j["j"] = *a.j;
    j["v_min"] = v_min(*a.j);
    j["max_codegree"] = to_decimal(d);
    j["brute"] = brute ? Json(std::to_string(*brute)) : Json(nullptr);
    out.report = dump_stable(j);
    return out;
  }

  const CliqueHypergraphStats stats = hypergraph_params(n, a.l);
  std::vector<std::optional<std::uint64_t>> brute(stats.r + 1);
  if (a.brute)
    for (std::uint64_t jj = 1; jj <= stats.r; ++jj) brute[jj] = brute_max_codegree(a.n, a.l, jj, g.threads);
  std::optional<Rational> p;
  if (!a.p.empty()) p = parse_rational(a.p);
  if (g.format == "csv") {
    out.report = csv_line({"j", "v_min", "max_codegree", "max_codegree_log2", "brute"});
    for (std::uint64_t jj = 1; jj <= stats.r; ++jj)
      out.report += csv_line({std::to_string(jj), std::to_string(v_min(jj)), to_decimal(stats.exact->max_codegrees[jj - 1]),
                              fmt_double(stats.max_codegree(jj).log2()), brute[jj] ? std::to_string(*brute[jj]) : ""});
    return out;
  }
  j["stats"] = to_json(stats);
  if (a.brute) {
    Json b = Json::array();
    for (std::uint64_t jj = 1; jj <= stats.r; ++jj) b.push_back(std::to_string(*brute[jj]));
    j["brute_delta_table"] = b;
  } else {
    j["brute_delta_table"] = nullptr;
  }
  if (p) {
    Json dj;
    dj["p"] = to_string(*p);
    dj["exact"] = to_string(delta_function_exact(n, a.l, *p));
    dj["log"] = delta_function(stats, LogMagnitude::from_exact(*p)).ln();
    j["delta_function"] = dj;
  } else {
    j["delta_function"] = nullptr;
  }
  out.report = dump_stable(j);
  return out;
}

// certify ------------------------------------------------------------------

struct CertifyArgs {
  std::optional<std::uint64_t> n;
  std::optional<double> log2_n;
  int l = 0;
  double delta = 0.0;
  std::uint64_t c = 1;
  std::string log_base = "e";
  std::string chain = "as-printed";
  bool find_threshold = false;
};

Output run_certify(const CertifyArgs& a, const Global& g) {
  const LogBase base = a.log_base == "2" ? LogBase::binary : LogBase::natural;
  const ChainVariant variant = a.chain == "corrected-degree" ? ChainVariant::corrected_degree : ChainVariant::as_printed;
  if (!a.n && !a.log2_n && !a.find_threshold) throw UsageError("certify needs --n, --log2-n or --find-threshold");

  std::optional<CertificateReport> report;
  if (a.n) report = verify_proof_chain(Order::exact(*a.n), a.l, a.delta, a.c, base, variant);
  if (a.log2_n) report = verify_proof_chain(Order::from_log2(*a.log2_n), a.l, a.delta, a.c, base, variant);
  if (!report) corollary_params(Order::exact(1), a.l, a.delta, a.c);  // parameter validation only
  std::optional<ThresholdResult> threshold;
  if (a.find_threshold) threshold = minimal_n_threshold(a.l, a.delta, a.c, variant, base);

  Output out;
  if (g.format == "csv") {
    out.report = csv_line({"section", "step", "relation", "lhs_log", "rhs_log", "pass", "margin_log", "worst_j"});
    auto rows = [&](const char* section, const std::vector<InequalityStep>& steps) {
      for (const auto& s : steps)
        out.report += csv_line({section, s.step, s.relation == Relation::less ? "<" : "<=", fmt_double(s.lhs.ln()),
                                fmt_double(s.rhs.ln()), s.pass ? "true" : "false", fmt_double(s.margin_log),
                                s.worst_j ? std::to_string(*s.worst_j) : ""});
    };
    if (report) {
      rows("hypothesis", report->hypotheses);
      rows("proof_chain", report->proof_chain);
      out.report += csv_line({"summary", "overall_pass", "", "", "", report->overall_pass ? "true" : "false", "", ""});
    }
    if (threshold)
      out.report += csv_line({"threshold", threshold->reachable ? "threshold_log2_n" : "unreachable", "",
                              threshold->reachable ? fmt_double(threshold->log2_n) : "", "", "", "", ""});
    return out;
  }
  Json config;
  config["n"] = a.n ? Json(*a.n) : Json(nullptr);
  config["log2_n"] = a.log2_n ? Json(*a.log2_n) : Json(nullptr);
  config["l"] = a.l;
  config["delta"] = a.delta;
  config["c"] = a.c;
  config["log_base"] = a.log_base;
  config["chain"] = a.chain;
  config["find_threshold"] = a.find_threshold;
  Json j = envelope("certify", config, g);
  j["certificate"] = report ? to_json(*report) : Json(nullptr);
  j["threshold"] = threshold ? to_json(*threshold) : Json(nullptr);
  out.report = dump_stable(j);
  return out;
}

// bounds -------------------------------------------------------------------

struct BoundsArgs {
  std::optional<std::uint64_t> n;
  std::optional<double> log2_n;
  int l = 0;
  std::optional<double> delta;
  bool oracle = false;
};

Output run_bounds(const BoundsArgs& a, const Global& g) {
  if (!a.n && !a.log2_n) throw UsageError("bounds needs --n or --log2-n");
  if (a.oracle && !a.n) throw UsageError("--oracle needs an exact --n");
  const Order n = a.n ? Order::exact(*a.n) : Order::from_log2(*a.log2_n);
  std::optional<BigInt> count;
  if (a.oracle) {
    ScanOptions o;
    o.threads = g.threads;
    count = count_free_graphs(static_cast<int>(*a.n), a.l, o).count;
  }
  const BoundsReport r = bounds_report(n, a.l, a.delta, count);
  Output out;
  if (g.format == "csv") {
    out.report = csv_line({"quantity", "exact", "value", "log2"});
    auto row = [&](const char* name, const Quantity& q) {
      out.report += csv_line({name, q.exact.value_or(""), q.value ? fmt_double(*q.value) : "", fmt_double(q.log2)});
    };
    row("lower_log2", r.lower_log2);
    row("lower_display_floor", r.lower_display_floor);
    row("main_term_log2", r.main_term_log2);
    if (r.upper_log2) row("upper_log2", *r.upper_log2);
    if (r.upper_log2_binomial) row("upper_log2_binomial", *r.upper_log2_binomial);
    if (r.exact_count)
      out.report += csv_line({"exact_count", to_decimal(*r.exact_count), fmt_double(to_double(Rational(*r.exact_count))),
                              fmt_double(*r.exact_log2)});
    return out;
  }
  Json config;
  config["n"] = a.n ? Json(*a.n) : Json(nullptr);
  config["log2_n"] = a.log2_n ? Json(*a.log2_n) : Json(nullptr);
  config["l"] = a.l;
  config["delta"] = a.delta ? Json(*a.delta) : Json(nullptr);
  config["oracle"] = a.oracle;
  Json j = envelope("bounds", config, g);
  j["bounds"] = to_json(r);
  out.report = dump_stable(j);
  return out;
}

// containers ---------------------------------------------------------------

struct ContainersArgs {
  int n = 0;
  int l = 0;
  std::string family_dir;
  std::string epsilon;
  std::optional<double> delta;
  std::uint64_t c = 1;
  std::string log_base = "e";
  std::optional<double> log2_n;
};

std::vector<LabeledGraph> read_family(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw UsageError("family directory does not exist: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".graph") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<LabeledGraph> family;
  family.reserve(files.size());
  for (const auto& f : files) family.push_back(read_graph_file(f));
  return family;
}

Output run_containers_validate(const ContainersArgs& a, const Global& g) {
  reject_log_mode(a.log2_n, "containers validate");
  const std::vector<LabeledGraph> family = read_family(a.family_dir);
  const Rational eps = parse_rational(a.epsilon);
  if (eps <= 0 || eps >= 1) throw UsageError("--epsilon must lie in (0, 1)");
  const LogBase base = a.log_base == "2" ? LogBase::binary : LogBase::natural;
  std::optional<ContainerParams> params;
  if (a.delta) params = corollary_params(Order::exact(static_cast<std::uint64_t>(a.n)), a.l, *a.delta, a.c);
  const ValidationReport v = validate_container_family(a.n, a.l, family, eps, params, base);
  Output out;
  if (g.format == "csv") {
    out.report = csv_line({"family_size", "covers_all", "max_clique_copies", "epsilon_budget", "copies_within_budget", "size_ok"}) +
                 csv_line({std::to_string(v.family_size), v.covers_all ? "true" : "false",
                           std::to_string(v.max_clique_copies), to_string(v.epsilon_budget),
                           v.copies_within_budget ? "true" : "false", v.size_ok ? (*v.size_ok ? "true" : "false") : ""});
    return out;
  }
  Json config;
  config["action"] = "validate";
  config["n"] = a.n;
  config["l"] = a.l;
  config["family_files"] = family.size();
  config["epsilon"] = to_string(eps);
  config["delta"] = a.delta ? Json(*a.delta) : Json(nullptr);
  config["c"] = a.c;
  config["log_base"] = a.log_base;
  Json j = envelope("containers", config, g);
  j["validation"] = to_json(v);
  out.report = dump_stable(j);
  return out;
}

Output run_containers_generate(const ContainersArgs& a, const Global& g) {
  reject_log_mode(a.log2_n, "containers generate-maximal");
  const std::vector<LabeledGraph> family = maximal_free_family(a.n, a.l);
  Output out;
  std::optional<fs::path> dir;
  if (!g.out_path.empty()) {
    dir = sibling(g.out_path, ".family");
    for (std::size_t i = 0; i < family.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "g%06zu.graph", i);
      out.siblings.emplace_back(*dir / name, write_graph_text(family[i]));
    }
  }
  if (g.format == "csv") {
    out.report = csv_line({"index", "edge_count", "edges"});
    for (std::size_t i = 0; i < family.size(); ++i) {
      std::string edges;
      for (auto [u, v] : family[i].edges()) edges += (edges.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
      out.report += csv_line({std::to_string(i), std::to_string(family[i].edge_count()), edges});
    }
    return out;
  }
  Json config;
  config["action"] = "generate-maximal";
  config["n"] = a.n;
  config["l"] = a.l;
  Json j = envelope("containers", config, g);
  j["family_size"] = family.size();
  j["family_dir"] = dir ? Json(dir->filename().string()) : Json(nullptr);
  Json members = Json::array();
  for (const auto& m : family) members.push_back(edges_json(m));
  j["family"] = members;
  out.report = dump_stable(j);
  return out;
}

void emit(const Output& o, const Global& g, std::ostream& out) {
  if (g.out_path.empty()) {
    out << o.report;
    return;
  }
  for (const auto& [path, content] : o.siblings) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    write_file(path, content);
  }
  write_file(g.out_path, o.report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact oracles, co-degree statistics, container certificates and bounds for K_l-free graph counts",
               "klfree"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out_path, "write the report to this file instead of stdout");
  app.add_option("--threads", g.threads, "worker threads for exhaustive scans")->check(CLI::PositiveNumber);
  app.add_flag("--deterministic", g.deterministic, "omit run metadata (threads, elapsed_ms) so output is byte-stable");

  ScanArgs census_args;
  auto* census = app.add_subcommand("census", "count K_l-free labeled graphs on n vertices");
  add_scan_options(census, census_args);

  ScanArgs supersat_args;
  std::uint64_t supersat_m = 0;
  auto* supersat = app.add_subcommand("supersat", "minimum number of K_l copies among m-edge graphs");
  add_scan_options(supersat, supersat_args);
  supersat->add_option("--m", supersat_m, "edge count")->required();

  CodegreeArgs cd;
  auto* codegree_cmd = app.add_subcommand("codegree", "degree and co-degree statistics of the clique hypergraph");
  codegree_cmd->add_option("--n", cd.n, "vertex count")->required();
  codegree_cmd->add_option("--l", cd.l, "clique size")->required();
  auto* j_opt = codegree_cmd->add_option("--j", cd.j, "co-degree order j");
  auto* sigma_opt = codegree_cmd->add_option("--sigma", cd.sigma_path, "graph file: edge set sigma");
  j_opt->excludes(sigma_opt);
  codegree_cmd->add_flag("--brute", cd.brute, "cross-check by exhaustive enumeration");
  codegree_cmd->add_option("--p", cd.p, "also evaluate Delta(H,p) at this rational p");
  codegree_cmd->add_option("--log2-n", cd.log2_n, "not supported")->group("");

  CertifyArgs ca;
  auto* certify = app.add_subcommand("certify", "evaluate the container hypotheses and proof chain at n");
  auto* n_opt = certify->add_option("--n", ca.n, "exact vertex count");
  auto* log_opt = certify->add_option("--log2-n", ca.log2_n, "log2 of the vertex count");
  n_opt->excludes(log_opt);
  certify->add_option("--l", ca.l, "clique size")->required();
  certify->add_option("--delta", ca.delta, "delta in (0,1)")->required();
  certify->add_option("--c", ca.c, "container-theorem constant c")->capture_default_str()->check(CLI::PositiveNumber);
  certify->add_option("--log-base", ca.log_base, "base of the container-count logs")->check(CLI::IsMember({"e", "2"}));
  certify->add_option("--chain", ca.chain, "proof-chain variant")->check(CLI::IsMember({"as-printed", "corrected-degree"}));
  certify->add_flag("--find-threshold", ca.find_threshold, "search the smallest log2 n where the chain passes");

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "lower, main-term and upper bounds on log2 f_n(K_l)");
  auto* bn = bounds->add_option("--n", ba.n, "exact vertex count");
  auto* bl = bounds->add_option("--log2-n", ba.log2_n, "log2 of the vertex count");
  bn->excludes(bl);
  bounds->add_option("--l", ba.l, "clique size")->required();
  bounds->add_option("--delta", ba.delta, "delta in (0,1)");
  bounds->add_flag("--oracle", ba.oracle, "include the exact count from a full scan");

  ContainersArgs cv;
  auto* containers = app.add_subcommand("containers", "container families at small n");
  containers->require_subcommand(1);
  auto* validate = containers->add_subcommand("validate", "check a family against the container conditions");
  validate->add_option("--n", cv.n, "vertex count")->required();
  validate->add_option("--l", cv.l, "clique size")->required();
  validate->add_option("--family", cv.family_dir, "directory of .graph files")->required();
  validate->add_option("--epsilon", cv.epsilon, "rational epsilon in (0,1)")->required();
  validate->add_option("--delta", cv.delta, "compare the family size to the container-count bound at this delta");
  validate->add_option("--c", cv.c, "container-theorem constant c")->capture_default_str()->check(CLI::PositiveNumber);
  validate->add_option("--log-base", cv.log_base, "base of the container-count logs")->check(CLI::IsMember({"e", "2"}));
  validate->add_option("--log2-n", cv.log2_n, "not supported")->group("");
  auto* generate = containers->add_subcommand("generate-maximal", "all edge-maximal K_l-free graphs");
  generate->add_option("--n", cv.n, "vertex count")->required();
  generate->add_option("--l", cv.l, "clique size")->required();
  generate->add_option("--log2-n", cv.log2_n, "not supported")->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Output o;
    if (*census) o = run_census(census_args, g);
    else if (*supersat) o = run_supersat(supersat_args, supersat_m, g);
    else if (*codegree_cmd) o = run_codegree(cd, g);
    else if (*certify) o = run_certify(ca, g);
    else if (*bounds) o = run_bounds(ba, g);
    else if (*validate) o = run_containers_validate(cv, g);
    else if (*generate) o = run_containers_generate(cv, g);
    emit(o, g, out);
    return kExitOk;
  } catch (const GuardRefusal& e) {
    err << "refused: " << e.what() << "\n";
    return kExitGuard;
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace klfree::cli
