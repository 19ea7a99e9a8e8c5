#pragma once

// Plain, JSON and CSV renderings of the library's value types.
//
// JSON field names are a stable interface. Permutation orders are emitted as
// decimal strings because they are arbitrary precision.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mea/generation.hpp"
#include "mea/permutation.hpp"
#include "mea/statistics.hpp"
#include "mea/verification.hpp"

namespace mea {

using json = nlohmann::json;

enum class OutputFormat { plain, json, csv };

inline std::optional<OutputFormat> format_from_string(std::string_view s) {
  if (s == "plain") return OutputFormat::plain;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  return std::nullopt;
}

/// One line of the per-n summary table.
struct TableRow {
  size_type n = 0;
  Permutation permutation;
  count_type inversions = 0;
  count_type inv_formula = 0;
  size_type descent_count = 0;
  int sign = 1;
  AlternationType alternation = AlternationType::trivial;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

inline TableRow make_table_row(size_type n) {
  TableRow row;
  row.n = n;
  row.permutation = generate_fast(n);
  row.inversions = inversion_count(row.permutation);
  row.inv_formula = inversion_formula(n);
  row.descent_count = descent_set(row.permutation).size();
  row.sign = row.inversions % 2 == 0 ? 1 : -1;
  row.alternation = classify_alternation(row.permutation);
  return row;
}

// ---------------------------------------------------------------------------
// JSON

inline void to_json(json& j, const Permutation& p) {
  j = json{{"n", p.size()}, {"values", p.vector()}};
}

inline void from_json(const json& j, Permutation& p) {
  auto values = j.at("values").get<std::vector<value_type>>();
  if (j.contains("n") && j.at("n").get<size_type>() != values.size()) {
    throw invalid_permutation("field n disagrees with the number of values");
  }
  p = Permutation(std::move(values));
}

inline void to_json(json& j, const ShiftMap& s) {
  j = json{{"threshold", s.threshold}, {"low_offset", s.low_offset}, {"high_offset", s.high_offset}};
}

inline void from_json(const json& j, ShiftMap& s) {
  j.at("threshold").get_to(s.threshold);
  j.at("low_offset").get_to(s.low_offset);
  j.at("high_offset").get_to(s.high_offset);
}

inline void to_json(json& j, const RecursionDecomposition& d) {
  j = json{{"n", d.n},
           {"parity", to_string(d.parity)},
           {"prefix", d.prefix},
           {"child_n", d.child_n},
           {"shift_map", d.shift_map}};
}

inline void from_json(const json& j, RecursionDecomposition& d) {
  j.at("n").get_to(d.n);
  const auto parity = j.at("parity").get<std::string>();
  if (parity != "odd" && parity != "even") throw error("bad parity '" + parity + "'");
  d.parity = parity == "odd" ? Parity::odd : Parity::even;
  j.at("prefix").get_to(d.prefix);
  j.at("child_n").get_to(d.child_n);
  j.at("shift_map").get_to(d.shift_map);
}

inline AlternationType alternation_from_json(const json& j) {
  const auto s = j.get<std::string>();
  const auto t = alternation_from_string(s);
  if (!t) throw error("unknown alternation type '" + s + "'");
  return *t;
}

inline void to_json(json& j, const StatsReport& r) {
  j = json{{"n", r.n},
           {"inversions", r.inversions},
           {"descents", r.descent_set},
           {"sign", r.sign},
           {"alternation", to_string(r.alternation)},
           {"cycle_type", r.cycle_type},
           {"order", r.order.str()}};
}

inline void from_json(const json& j, StatsReport& r) {
  j.at("n").get_to(r.n);
  j.at("inversions").get_to(r.inversions);
  j.at("descents").get_to(r.descent_set);
  j.at("sign").get_to(r.sign);
  r.alternation = alternation_from_json(j.at("alternation"));
  j.at("cycle_type").get_to(r.cycle_type);
  r.order = big_int(j.at("order").get<std::string>());
}

inline void to_json(json& j, const TableRow& r) {
  j = json{{"n", r.n},
           {"values", r.permutation.vector()},
           {"inversions", r.inversions},
           {"inv_formula", r.inv_formula},
           {"descent_count", r.descent_count},
           {"sign", r.sign},
           {"alternation", to_string(r.alternation)}};
}

inline void from_json(const json& j, TableRow& r) {
  j.at("n").get_to(r.n);
  r.permutation = Permutation(j.at("values").get<std::vector<value_type>>());
  j.at("inversions").get_to(r.inversions);
  j.at("inv_formula").get_to(r.inv_formula);
  j.at("descent_count").get_to(r.descent_count);
  j.at("sign").get_to(r.sign);
  r.alternation = alternation_from_json(j.at("alternation"));
}

inline void to_json(json& j, const CheckResult& c) {
  j = json{{"claim", to_string(c.claim)},
           {"n", c.n},
           {"status", c.passed ? "pass" : "fail"},
           {"detail", c.detail}};
}

inline void from_json(const json& j, CheckResult& c) {
  const auto claim = j.at("claim").get<std::string>();
  const auto id = claim_from_string(claim);
  if (!id) throw error("unknown claim id '" + claim + "'");
  c.claim = *id;
  j.at("n").get_to(c.n);
  c.passed = j.at("status").get<std::string>() == "pass";
  j.at("detail").get_to(c.detail);
}

inline void to_json(json& j, const VerificationReport& r) {
  json summary = json::object();
  for (const auto& [claim, tally] : r.summary()) {
    summary[std::string(to_string(claim))] = {{"passed", tally.passed}, {"failed", tally.failed}};
  }
  j = json{{"n_min", r.n_min},
           {"n_max", r.n_max},
           {"oracle_cap", r.oracle_cap},
           {"status", r.passed() ? "pass" : "fail"},
           {"checks", r.checks},
           {"summary", summary}};
}

// "status" and "summary" are derived from the checks and are not read back.
inline void from_json(const json& j, VerificationReport& r) {
  j.at("n_min").get_to(r.n_min);
  j.at("n_max").get_to(r.n_max);
  j.at("oracle_cap").get_to(r.oracle_cap);
  j.at("checks").get_to(r.checks);
}

// ---------------------------------------------------------------------------
// Plain text

inline std::string format_positions(const std::vector<size_type>& xs) {
  return detail::join_positions(xs);
}

inline std::string format_sign(int s) { return detail::signed_str(s); }

inline std::string render_plain(const StatsReport& r, const Permutation& p) {
  std::ostringstream os;
  os << "n: " << r.n << '\n'
     << "permutation: " << to_string(p) << '\n'
     << "inversions: " << r.inversions << '\n'
     << "descents: " << format_positions(r.descent_set) << '\n'
     << "sign: " << format_sign(r.sign) << '\n'
     << "alternation: " << to_string(r.alternation) << '\n'
     << "cycle_type: " << format_positions(r.cycle_type) << '\n'
     << "order: " << r.order.str() << '\n';
  return os.str();
}

inline std::string render_plain(const RecursionDecomposition& d) {
  const auto& s = d.shift_map;
  std::ostringstream os;
  os << "n: " << d.n << '\n'
     << "parity: " << to_string(d.parity) << '\n'
     << "prefix: " << to_string(Permutation::from_trusted(d.prefix)) << '\n'
     << "child_n: " << d.child_n << '\n'
     << "shift_map: r<=" << s.threshold << " -> r+" << s.low_offset << ", r>=" << s.threshold + 1
     << " -> r+" << s.high_offset << '\n';
  return os.str();
}

inline std::string render_plain(const VerificationReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << to_string(c.claim) << " n=" << c.n << " " << c.detail << '\n';
  }
  os << "summary (n=" << r.n_min << ".." << r.n_max << ", oracle cap " << r.oracle_cap << "):\n";
  for (const auto& [claim, tally] : r.summary()) {
    os << "  " << to_string(claim) << ": " << tally.passed << " passed, " << tally.failed << " failed\n";
  }
  os << (r.passed() ? "ALL PASS" : "FAILED") << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr std::string_view kTableCsvHeader =
    "n,permutation,inversions,inv_formula,descent_count,sign,alternation";

inline std::string csv_cell(const Permutation& p) {
  std::string s;
  for (value_type v : p) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

inline std::string csv_row(const TableRow& r) {
  return std::to_string(r.n) + ',' + csv_cell(r.permutation) + ',' + std::to_string(r.inversions) +
         ',' + std::to_string(r.inv_formula) + ',' + std::to_string(r.descent_count) + ',' +
         format_sign(r.sign) + ',' + std::string(to_string(r.alternation));
}

inline std::string render_plain(const TableRow& r) {
  return std::to_string(r.n) + ' ' + to_string(r.permutation) + " inv=" + std::to_string(r.inversions) +
         " formula=" + std::to_string(r.inv_formula) + " descents=" + std::to_string(r.descent_count) +
         " sign=" + format_sign(r.sign) + ' ' + std::string(to_string(r.alternation));
}

}  // namespace mea
