#include "qspec/cli.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qspec/closed_forms.hpp"
#include "qspec/conjectures.hpp"
#include "qspec/graph_io.hpp"
#include "qspec/report.hpp"
#include "qspec/sources.hpp"
#include "qspec/spectral.hpp"

namespace qspec {

namespace {

using nlohmann::json;

/// Thrown for parameter values outside an operation's range.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Params {
  std::string format = "table";
  std::string input;
  double alpha = 1.0;
  int n = 0;
  int n_max = 0;
  int k = 1;
  int jobs = 1;
  std::string mode = "bipartite";
  bool kappa = false;
  bool numeric = false;
  bool full_r_scan = false;
  bool no_cross_check = false;
  bool include_disconnected = false;
  bool allow_large = false;
};

/// Collects a command's result in all three output forms.
struct Output {
  std::string command;
  json parameters = json::object();
  json payload = json::object();
  std::vector<std::string> table_lines;
  std::string csv;
  int exit_code = kExitOk;
};

void emit(const Output& o, const std::string& format, double seconds, std::ostream& out) {
  if (format == "json") {
    json env{{"tool", kToolName}, {"version", kToolVersion}, {"command", o.command},
             {"parameters", o.parameters}, {"result", o.payload}};
    out << env.dump(2) << '\n';
  } else if (format == "csv") {
    out << o.csv;
  } else {
    for (const auto& line : o.table_lines) out << line << '\n';
    out << "wall_time_s: " << format_sig12(seconds) << '\n';
  }
}

std::string join_values(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + format_sig12(v[i]);
  return s;
}

std::string csv_line(std::initializer_list<std::string> fields) {
  std::string s;
  for (const auto& f : fields) s += (s.empty() ? "" : ",") + f;
  return s + "\n";
}

struct ResolvedSpectrum {
  GraphSource source;
  std::vector<double> values;
  int zero_count = 0;
  std::string method;
  std::optional<ClosedFormSpectrum> closed;
  std::optional<Spectrum> numeric;
};

ResolvedSpectrum resolve(const Params& p, std::istream& in) {
  ResolvedSpectrum r{load_graph_source(p.input, in), {}, 0, "", std::nullopt, std::nullopt};
  if (r.source.family && !p.numeric) {
    r.closed = r.source.family->closed_form();
    r.values = r.closed->expand();
    for (double v : r.values)
      if (std::abs(v) <= kClosedFormZero) ++r.zero_count;
    r.method = "closed_form";
  } else {
    r.numeric = spectrum_of(r.source.graph);
    r.values = r.numeric->values;
    r.zero_count = r.numeric->zero_count;
    r.method = "jacobi";
  }
  return r;
}

Output cmd_spectrum(const Params& p, std::istream& in) {
  const auto r = resolve(p, in);
  Output o;
  o.command = "spectrum";
  o.parameters = {{"input", p.input}, {"numeric", p.numeric}, {"kappa", p.kappa}};
  o.payload = {{"source", r.source.label},
               {"n", r.source.graph.order()},
               {"edges", r.source.graph.edge_count()},
               {"zero_count", r.zero_count},
               {"method", r.method},
               {"eigenvalues", r.values}};
  if (r.closed) o.payload["pairs"] = *r.closed;
  o.table_lines = {"graph: " + r.source.label,
                   "n: " + std::to_string(r.source.graph.order()) +
                       "  edges: " + std::to_string(r.source.graph.edge_count()) +
                       "  zero_count: " + std::to_string(r.zero_count) + "  method: " + r.method,
                   "spectrum: " + join_values(r.values)};
  if (r.closed) {
    std::string pairs = "pairs:";
    for (const auto& pr : r.closed->pairs())
      pairs += " " + format_sig12(pr.value) + "^[" + std::to_string(pr.multiplicity) + "]";
    o.table_lines.push_back(pairs);
  }
  o.csv = "index,eigenvalue\n";
  for (std::size_t i = 0; i < r.values.size(); ++i)
    o.csv += std::to_string(i) + "," + format_roundtrip(r.values[i]) + "\n";
  if (p.kappa) {
    const int kappa = vertex_connectivity(r.source.graph);
    o.payload["kappa"] = kappa;
    o.table_lines.push_back("kappa: " + std::to_string(kappa));
  }
  return o;
}

Output cmd_salpha(const Params& p, std::istream& in) {
  if (!std::isfinite(p.alpha)) throw UsageError("alpha must be finite");
  const auto r = resolve(p, in);
  const double value = r.closed ? r.closed->s_alpha(p.alpha) : s_alpha(*r.numeric, p.alpha);
  std::vector<double> used(r.values.begin(), r.values.end() - r.zero_count);
  Output o;
  o.command = "salpha";
  o.parameters = {{"input", p.input}, {"alpha", p.alpha}, {"numeric", p.numeric}};
  o.payload = {{"source", r.source.label}, {"s_alpha", value}, {"method", r.method}, {"eigenvalues_used", used}};
  o.table_lines = {"graph: " + r.source.label, "alpha: " + format_sig12(p.alpha),
                   "S_alpha: " + format_sig12(value), "eigenvalues_used: " + join_values(used)};
  o.csv = csv_line({"alpha", "s_alpha"}) + csv_line({format_roundtrip(p.alpha), format_roundtrip(value)});
  return o;
}

std::string row_text(const ReportRow& r) {
  return format_sig12(r.alpha) + "  " + std::to_string(r.n) + "  " + std::to_string(r.param2) + "  " +
         format_sig12(r.lhs) + "  " + format_sig12(r.rhs) + "  " + format_sig12(r.margin) + "  " + r.verdict;
}

const std::string kRowHeader = "alpha  n  param2  lhs  rhs  margin  verdict";

Output cmd_conj1_verify(const Params& p) {
  if (!(p.alpha >= 1.0 && p.alpha <= 3.0)) {
    throw UsageError("conj1-verify covers 1 <= alpha <= 3 (the range where the bound is proven); use conj1-falsify for alpha > 3");
  }
  if (p.n_max < 2) throw UsageError("--nmax must be at least 2");
  const auto reports = verify_conjecture1(p.alpha, p.n_max);
  Output o;
  o.command = "conj1-verify";
  o.parameters = {{"alpha", p.alpha}, {"nmax", p.n_max}};
  std::vector<ReportRow> rows;
  bool ok = true;
  for (const auto& r : reports) {
    rows.push_back(to_row(r));
    ok = ok && r.verdict != Verdict::violated;
  }
  o.payload = {{"reports", reports}, {"violations", !ok}};
  o.table_lines = {kRowHeader};
  for (const auto& r : rows) o.table_lines.push_back(row_text(r));
  o.table_lines.push_back(ok ? "result: no violations" : "result: VIOLATION FOUND");
  o.csv = to_csv(rows);
  o.exit_code = ok ? kExitOk : kExitUnexpected;
  return o;
}

Output counterexample_output(const std::string& command, const json& params,
                             const std::optional<CounterexampleReport>& rep) {
  Output o;
  o.command = command;
  o.parameters = params;
  std::vector<ReportRow> rows;
  if (rep) rows.push_back(to_row(*rep));
  o.payload = {{"found", rep.has_value()}, {"counterexample", rep ? json(*rep) : json(nullptr)}};
  o.table_lines = {kRowHeader};
  for (const auto& r : rows) o.table_lines.push_back(row_text(r));
  if (rep) {
    o.table_lines.push_back("witness: " + rep->witness);
    if (rep->numeric_lhs) o.table_lines.push_back("numeric_lhs: " + format_sig12(*rep->numeric_lhs));
  } else {
    o.table_lines.push_back("result: no counterexample below nmax");
  }
  o.csv = to_csv(rows);
  o.exit_code = rep ? kExitOk : kExitUnexpected;
  return o;
}

Output cmd_conj1_falsify(const Params& p) {
  if (!(p.alpha > 3.0)) throw UsageError("conj1-falsify needs alpha > 3 (the range where the bound fails asymptotically)");
  SearchOptions opts;
  opts.cross_check = !p.no_cross_check;
  return counterexample_output("conj1-falsify", {{"alpha", p.alpha}, {"nmax", p.n_max}},
                               find_counterexample_conj1(p.alpha, p.n_max, opts));
}

Output cmd_conj2_falsify(const Params& p) {
  if (!(p.alpha < -1.0)) throw UsageError("conj2-falsify needs alpha < -1 (the range where the bound fails asymptotically)");
  if (p.k < 1) throw UsageError("--k must be at least 1");
  SearchOptions opts;
  opts.cross_check = !p.no_cross_check;
  opts.full_r_scan = p.full_r_scan;
  return counterexample_output("conj2-falsify",
                               {{"alpha", p.alpha}, {"k", p.k}, {"nmax", p.n_max}, {"full_r_scan", p.full_r_scan}},
                               find_counterexample_conj2(p.alpha, p.k, p.n_max, opts));
}

Output cmd_exhaustive(const Params& p) {
  ExhaustiveMode mode;
  if (p.mode == "bipartite") {
    mode = ExhaustiveMode::bipartite;
    if (!(p.alpha < 0.0 || (p.alpha > 0.0 && p.alpha <= 1.0))) {
      throw UsageError("bipartite mode covers alpha < 0 or 0 < alpha <= 1");
    }
  } else {
    mode = ExhaustiveMode::connectivity;
    if (!(p.alpha >= 1.0)) throw UsageError("connectivity mode covers alpha >= 1");
    if (p.k < 1 || p.k > p.n - 2) throw UsageError("connectivity mode needs 1 <= k <= n-2");
  }
  const int cap = p.allow_large ? kExhaustiveMaxN + 1 : kExhaustiveMaxN;
  if (p.n < 2 || p.n > cap) {
    throw UsageError("--n must be in [2, " + std::to_string(kExhaustiveMaxN) + "] (9 with --allow-large)");
  }
  ExhaustiveOptions opts;
  opts.k = p.k;
  opts.include_disconnected = p.include_disconnected;
  opts.allow_large = p.allow_large;
  opts.jobs = p.jobs;
  const auto rep = exhaustive_verify(p.n, p.alpha, mode, opts);
  Output o;
  o.command = "exhaustive";
  o.parameters = {{"n", p.n}, {"alpha", p.alpha}, {"mode", p.mode}, {"k", p.k},
                  {"include_disconnected", p.include_disconnected}};
  o.payload = rep;
  const ReportRow row = to_row(rep);
  o.table_lines = {kRowHeader, row_text(row), "witness (graph6): " + rep.witness,
                   "witness_is_extremal: " + std::string(rep.witness_is_extremal ? "yes" : "no"),
                   "unique_extremal: " + std::string(rep.unique_extremal ? "yes" : "no"),
                   "graphs_examined: " + std::to_string(rep.graphs_examined)};
  o.csv = to_csv(std::vector<ReportRow>{row});
  o.exit_code = rep.verdict == Verdict::tight && rep.unique_extremal ? kExitOk : kExitUnexpected;
  return o;
}

Output cmd_palpha(const Params& p) {
  if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) throw UsageError("palpha needs alpha > 0");
  const auto pc = p_coefficient(p.alpha);
  const double balanced = std::pow(2.0, -p.alpha);
  Output o;
  o.command = "palpha";
  o.parameters = {{"alpha", p.alpha}};
  o.payload = {{"p", pc.p}, {"argmax", pc.argmax}, {"balanced", balanced}, {"exceeds_balanced", pc.p > balanced + 1e-9}};
  o.table_lines = {"alpha: " + format_sig12(p.alpha), "p: " + format_sig12(pc.p), "x*: " + format_sig12(pc.argmax),
                   "2^-alpha: " + format_sig12(balanced)};
  o.csv = csv_line({"alpha", "p", "argmax", "balanced"}) +
          csv_line({format_roundtrip(p.alpha), format_roundtrip(pc.p), format_roundtrip(pc.argmax),
                    format_roundtrip(balanced)});
  return o;
}

Output cmd_zeta(const Params& p) {
  if (p.n < 2) throw UsageError("--n must be at least 2");
  if (!(p.alpha > 0.0)) throw UsageError("zeta needs alpha > 0");
  const auto z = zeta(p.n, p.alpha);
  const double scaled = z.value / std::pow(double(p.n), p.alpha + 1.0);
  Output o;
  o.command = "zeta";
  o.parameters = {{"n", p.n}, {"alpha", p.alpha}};
  o.payload = {{"zeta", z.value}, {"best_r", z.best_r}, {"scaled", scaled}};
  o.table_lines = {"n: " + std::to_string(p.n) + "  alpha: " + format_sig12(p.alpha),
                   "zeta: " + format_sig12(z.value) + "  best_r: " + std::to_string(z.best_r),
                   "zeta/n^(alpha+1): " + format_sig12(scaled)};
  o.csv = csv_line({"n", "alpha", "zeta", "best_r", "scaled"}) +
          csv_line({std::to_string(p.n), format_roundtrip(p.alpha), format_roundtrip(z.value),
                    std::to_string(z.best_r), format_roundtrip(scaled)});
  return o;
}

Output cmd_bounds(const Params& p) {
  if (p.n < 2) throw UsageError("--n must be at least 2");
  const double bip = bipartite_bound(p.n, p.alpha);
  Output o;
  o.command = "bounds";
  o.parameters = {{"n", p.n}, {"alpha", p.alpha}, {"k", p.k}};
  o.payload = {{"bipartite_bound", bip}};
  o.table_lines = {"B(n,alpha): " + format_sig12(bip)};
  std::string conn_field;
  if (p.k >= 1 && p.k <= p.n - 2) {
    const double conn = connectivity_bound(p.n, p.k, p.alpha);
    o.payload["connectivity_bound"] = conn;
    o.table_lines.push_back("b_alpha(n,k): " + format_sig12(conn));
    conn_field = format_roundtrip(conn);
  } else {
    o.payload["connectivity_bound"] = nullptr;
  }
  o.csv = csv_line({"n", "alpha", "k", "bipartite_bound", "connectivity_bound"}) +
          csv_line({std::to_string(p.n), format_roundtrip(p.alpha), std::to_string(p.k), format_roundtrip(bip),
                    conn_field});
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Signless Laplacian spectra, S_alpha bounds and conjecture checks", kToolName};
  app.require_subcommand(1);
  Params p;
  app.add_option("--format", p.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.set_version_flag("--version", kToolVersion);

  auto add_alpha = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--alpha", p.alpha, "Exponent alpha");
    if (required) opt->required();
  };

  auto* spectrum = app.add_subcommand("spectrum", "Signless Laplacian spectrum of a graph");
  spectrum->add_option("input", p.input, "graph6 string, edge-list file, '-' or Kn:/Kbip:/Kjoin: spec")->required();
  spectrum->add_flag("--kappa", p.kappa, "Also report vertex connectivity");
  spectrum->add_flag("--numeric", p.numeric, "Use the Jacobi solver even for family specs");

  auto* salpha = app.add_subcommand("salpha", "S_alpha over the nonzero eigenvalues");
  salpha->add_option("input", p.input, "Graph source")->required();
  add_alpha(salpha, true);
  salpha->add_flag("--numeric", p.numeric, "Use the Jacobi solver even for family specs");

  auto* c1v = app.add_subcommand("conj1-verify", "Scan K_{r,n-r} against B(n,alpha) for 1 <= alpha <= 3");
  add_alpha(c1v, true);
  c1v->add_option("--nmax", p.n_max, "Largest n")->required();

  auto* c1f = app.add_subcommand("conj1-falsify", "Smallest K_{r,n-r} beating B(n,alpha), alpha > 3");
  add_alpha(c1f, true);
  c1f->add_option("--nmax", p.n_max, "Largest n")->required();
  c1f->add_flag("--no-cross-check", p.no_cross_check, "Skip the Jacobi re-evaluation of the witness");

  auto* c2f = app.add_subcommand("conj2-falsify", "Smallest join-split graph below b_alpha(n,k), alpha < -1");
  add_alpha(c2f, true);
  c2f->add_option("--k", p.k, "Connectivity bound k")->required();
  c2f->add_option("--nmax", p.n_max, "Largest n")->required();
  c2f->add_flag("--full-r-scan", p.full_r_scan, "Scan every r, not only r = (n-k)/2");
  c2f->add_flag("--no-cross-check", p.no_cross_check, "Skip the Jacobi re-evaluation of the witness");

  auto* ex = app.add_subcommand("exhaustive", "Enumerate all labeled graphs on n <= 8 vertices");
  ex->add_option("--n", p.n, "Vertex count")->required();
  add_alpha(ex, true);
  ex->add_option("--mode", p.mode, "bipartite or connectivity")
      ->check(CLI::IsMember({"bipartite", "connectivity"}));
  ex->add_option("--k", p.k, "Connectivity bound k (connectivity mode)");
  ex->add_flag("--include-disconnected", p.include_disconnected, "Bipartite mode: also disconnected graphs");
  ex->add_flag("--allow-large", p.allow_large, "Permit n = 9");
  ex->add_option("--jobs", p.jobs, "Worker threads (0 = hardware)");

  auto* pa = app.add_subcommand("palpha", "p(alpha) = max of x(1-x)^a + (1-x)x^a");
  add_alpha(pa, true);

  auto* ze = app.add_subcommand("zeta", "zeta(n, alpha) over complete bipartite graphs");
  ze->add_option("--n", p.n, "Vertex count")->required();
  add_alpha(ze, true);

  auto* bo = app.add_subcommand("bounds", "B(n,alpha) and b_alpha(n,k)");
  bo->add_option("--n", p.n, "Vertex count")->required();
  add_alpha(bo, true);
  bo->add_option("--k", p.k, "Connectivity bound k");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Output o;
  try {
    if (spectrum->parsed()) o = cmd_spectrum(p, in);
    else if (salpha->parsed()) o = cmd_salpha(p, in);
    else if (c1v->parsed()) o = cmd_conj1_verify(p);
    else if (c1f->parsed()) o = cmd_conj1_falsify(p);
    else if (c2f->parsed()) o = cmd_conj2_falsify(p);
    else if (ex->parsed()) o = cmd_exhaustive(p);
    else if (pa->parsed()) o = cmd_palpha(p);
    else if (ze->parsed()) o = cmd_zeta(p);
    else o = cmd_bounds(p);
  } catch (const SourceNotFound& e) {
    err << "file not found: " << e.what() << '\n';
    return kExitNotFound;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnexpected;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(o, p.format, seconds, out);
  return o.exit_code;
}

}  // namespace qspec
