#include "qspec/report.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qspec {

ReportRow to_row(const BoundReport& r) {
  return {r.alpha, r.n, r.param2, r.achieved_value, r.bound_value, r.margin(), to_string(r.verdict)};
}

ReportRow to_row(const CounterexampleReport& r) {
  return {r.alpha, r.n, r.param2, r.lhs, r.rhs, r.margin, "violated"};
}

std::string format_roundtrip(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_sig12(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::string to_csv(std::span<const ReportRow> rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) {
    out += format_roundtrip(r.alpha) + "," + std::to_string(r.n) + "," + std::to_string(r.param2) + "," +
           format_roundtrip(r.lhs) + "," + format_roundtrip(r.rhs) + "," + format_roundtrip(r.margin) + "," +
           r.verdict + "\n";
  }
  return out;
}

namespace {

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad number '" + std::string(s) + "' in CSV row");
  }
  return v;
}

int parse_int(std::string_view s) {
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer '" + std::string(s) + "' in CSV row");
  }
  return v;
}

}  // namespace

std::vector<ReportRow> rows_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::invalid_argument("missing CSV header");
  std::vector<ReportRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest = line;
    for (auto pos = rest.find(','); pos != std::string_view::npos; pos = rest.find(',')) {
      f.push_back(rest.substr(0, pos));
      rest.remove_prefix(pos + 1);
    }
    f.push_back(rest);
    if (f.size() != 7) throw std::invalid_argument("CSV row needs 7 fields: '" + line + "'");
    verdict_from_string(std::string(f[6]));
    rows.push_back({parse_double(f[0]), parse_int(f[1]), parse_int(f[2]), parse_double(f[3]), parse_double(f[4]),
                    parse_double(f[5]), std::string(f[6])});
  }
  return rows;
}

void to_json(nlohmann::json& j, const Edge& e) { j = nlohmann::json::array({e.u, e.v}); }

void from_json(const nlohmann::json& j, Edge& e) {
  e.u = j.at(0).get<int>();
  e.v = j.at(1).get<int>();
}

void to_json(nlohmann::json& j, const BoundReport& r) {
  j = nlohmann::json{{"context", r.context},
                     {"n", r.n},
                     {"alpha", r.alpha},
                     {"param2", r.param2},
                     {"direction", to_string(r.direction)},
                     {"bound", r.bound_value},
                     {"achieved", r.achieved_value},
                     {"margin", r.margin()},
                     {"witness", r.witness},
                     {"witness_edges", r.witness_edges},
                     {"witness_is_extremal", r.witness_is_extremal},
                     {"unique_extremal", r.unique_extremal},
                     {"graphs_examined", r.graphs_examined},
                     {"verdict", to_string(r.verdict)}};
}

void from_json(const nlohmann::json& j, BoundReport& r) {
  r.context = j.at("context").get<std::string>();
  r.n = j.at("n").get<int>();
  r.alpha = j.at("alpha").get<double>();
  r.param2 = j.at("param2").get<int>();
  r.direction = direction_from_string(j.at("direction").get<std::string>());
  r.bound_value = j.at("bound").get<double>();
  r.achieved_value = j.at("achieved").get<double>();
  r.witness = j.at("witness").get<std::string>();
  r.witness_edges = j.at("witness_edges").get<std::vector<Edge>>();
  r.witness_is_extremal = j.at("witness_is_extremal").get<bool>();
  r.unique_extremal = j.at("unique_extremal").get<bool>();
  r.graphs_examined = j.at("graphs_examined").get<std::int64_t>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
}

void to_json(nlohmann::json& j, const CounterexampleReport& r) {
  j = nlohmann::json{{"conjecture", r.conjecture}, {"alpha", r.alpha}, {"n", r.n},
                     {"param2", r.param2},         {"r", r.r},         {"lhs", r.lhs},
                     {"rhs", r.rhs},               {"margin", r.margin}, {"witness", r.witness},
                     {"verdict", "violated"}};
  j["numeric_lhs"] = r.numeric_lhs ? nlohmann::json(*r.numeric_lhs) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, CounterexampleReport& r) {
  r.conjecture = j.at("conjecture").get<std::string>();
  r.alpha = j.at("alpha").get<double>();
  r.n = j.at("n").get<int>();
  r.param2 = j.at("param2").get<int>();
  r.r = j.at("r").get<int>();
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.margin = j.at("margin").get<double>();
  r.witness = j.at("witness").get<std::string>();
  const auto& num = j.at("numeric_lhs");
  r.numeric_lhs = num.is_null() ? std::nullopt : std::optional<double>(num.get<double>());
}

void to_json(nlohmann::json& j, const Spectrum& s) {
  j = nlohmann::json{{"eigenvalues", s.values}, {"zero_count", s.zero_count}, {"tol_zero", s.tol_zero}};
}

void to_json(nlohmann::json& j, const ClosedFormSpectrum& s) {
  j = nlohmann::json::array();
  for (const auto& p : s.pairs()) j.push_back({p.value, p.multiplicity});
}

bool operator==(const BoundReport& a, const BoundReport& b) {
  return a.context == b.context && a.n == b.n && a.alpha == b.alpha && a.param2 == b.param2 &&
         a.direction == b.direction && a.bound_value == b.bound_value && a.achieved_value == b.achieved_value &&
         a.witness == b.witness && a.witness_edges == b.witness_edges &&
         a.witness_is_extremal == b.witness_is_extremal && a.unique_extremal == b.unique_extremal &&
         a.graphs_examined == b.graphs_examined && a.verdict == b.verdict;
}

bool operator==(const CounterexampleReport& a, const CounterexampleReport& b) {
  return a.conjecture == b.conjecture && a.alpha == b.alpha && a.n == b.n && a.param2 == b.param2 && a.r == b.r &&
         a.lhs == b.lhs && a.rhs == b.rhs && a.margin == b.margin && a.witness == b.witness &&
         a.numeric_lhs == b.numeric_lhs;
}

}  // namespace qspec
