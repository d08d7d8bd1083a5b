#pragma once

// JSON and CSV forms of the spectra and reports. CSV rows follow the fixed
// schema alpha,n,param2,lhs,rhs,margin,verdict; doubles are written in
// shortest round-trip form so parsing a row back is lossless.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qspec/closed_forms.hpp"
#include "qspec/conjectures.hpp"
#include "qspec/spectral.hpp"

namespace qspec {

inline constexpr const char* kCsvHeader = "alpha,n,param2,lhs,rhs,margin,verdict";

struct ReportRow {
  double alpha = 0.0;
  int n = 0;
  int param2 = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::string verdict;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

ReportRow to_row(const BoundReport& r);
ReportRow to_row(const CounterexampleReport& r);

std::string to_csv(std::span<const ReportRow> rows);
/// Parses text produced by to_csv; throws std::invalid_argument on a bad
/// header or row.
std::vector<ReportRow> rows_from_csv(std::string_view text);

/// Shortest decimal that parses back to exactly `x`.
std::string format_roundtrip(double x);
/// 12 significant digits, for human-readable tables.
std::string format_sig12(double x);

void to_json(nlohmann::json& j, const Edge& e);
void from_json(const nlohmann::json& j, Edge& e);
void to_json(nlohmann::json& j, const BoundReport& r);
void from_json(const nlohmann::json& j, BoundReport& r);
void to_json(nlohmann::json& j, const CounterexampleReport& r);
void from_json(const nlohmann::json& j, CounterexampleReport& r);
void to_json(nlohmann::json& j, const Spectrum& s);
void to_json(nlohmann::json& j, const ClosedFormSpectrum& s);

bool operator==(const BoundReport& a, const BoundReport& b);
bool operator==(const CounterexampleReport& a, const CounterexampleReport& b);

}  // namespace qspec
