#pragma once

// Command-line front end. `run_cli` does all the work so that tests can call
// it with in-memory streams; tools/mea.cpp only forwards argv.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "mea/format.hpp"
#include "mea/generation.hpp"
#include "mea/statistics.hpp"
#include "mea/verification.hpp"

namespace mea::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr size_type kLargeN = 10'000'000;
inline constexpr size_type kDefaultOracleCap = 500;

namespace detail {

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string space_joined(const std::vector<size_type>& xs) {
  std::string s;
  for (size_type x : xs) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x);
  }
  return s;
}

inline void warn_if_large(size_type n, std::ostream& err) {
  if (n > kLargeN) err << "warning: n=" << n << " is large; output size will dominate run time\n";
}

inline void print_permutation(const Permutation& p, OutputFormat fmt, std::ostream& out) {
  switch (fmt) {
    case OutputFormat::plain: out << to_string(p) << '\n'; break;
    case OutputFormat::json: out << json(p).dump() << '\n'; break;
    case OutputFormat::csv: out << "n,permutation\n" << p.size() << ',' << csv_cell(p) << '\n'; break;
  }
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Median-Extremes Alternation permutations: generation, statistics and checks", "mea"};
  app.require_subcommand(1);

  std::string format_name = "plain";
  bool naive = false;
  bool recursive = false;
  std::optional<size_type> oracle_cap;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_flag("--naive", naive, "gen: simulate the process instead of the fast recursion");
  app.add_flag("--recursive", recursive, "inverse: build from the inverse recursion");
  app.add_option("--oracle-cap", oracle_cap, "verify: largest n checked against the simulator");

  size_type n = 0;
  size_type n_min = 0;
  size_type n_max = 0;

  auto* gen = app.add_subcommand("gen", "Print pi_n in one-line notation");
  gen->add_option("n", n, "Size")->required();
  auto* stats = app.add_subcommand("stats", "Print the statistics of pi_n");
  stats->add_option("n", n, "Size (>= 1)")->required();
  auto* table = app.add_subcommand("table", "Tabulate pi_1 .. pi_{n_max}");
  table->add_option("n_max", n_max, "Largest size (>= 1)")->required();
  auto* verify = app.add_subcommand("verify", "Check every structural claim over a range of n");
  verify->add_option("n_min", n_min, "Smallest size (>= 1)")->required();
  verify->add_option("n_max", n_max, "Largest size")->required();
  auto* inv = app.add_subcommand("inverse", "Print the inverse of pi_n");
  inv->add_option("n", n, "Size (>= 1)")->required();
  auto* dec = app.add_subcommand("decompose", "Print the recursion step for pi_n");
  dec->add_option("n", n, "Size (>= 3)")->required();
  for (auto* sub : {gen, stats, table, verify, inv, dec}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const OutputFormat fmt = *format_from_string(format_name);

  try {
    if (*gen) {
      detail::warn_if_large(n, err);
      detail::print_permutation(naive ? generate_naive(n) : generate_fast(n), fmt, out);
      return kExitOk;
    }

    if (*stats) {
      if (n < 1) {
        err << "error: statistics require n >= 1\n";
        return kExitUsage;
      }
      detail::warn_if_large(n, err);
      const Permutation p = generate_fast(n);
      const StatsReport r = compute_stats(p);
      switch (fmt) {
        case OutputFormat::plain: out << render_plain(r, p); break;
        case OutputFormat::json: {
          json j = r;
          j["values"] = p.vector();
          out << j.dump() << '\n';
          break;
        }
        case OutputFormat::csv:
          out << "n,permutation,inversions,descents,sign,sign_formula,alternation,cycle_type,order\n"
              << r.n << ',' << csv_cell(p) << ',' << r.inversions << ','
              << detail::space_joined(r.descent_set) << ',' << format_sign(r.sign) << ','
              << format_sign(sign_formula(n)) << ',' << to_string(r.alternation) << ','
              << detail::space_joined(r.cycle_type) << ',' << r.order.str() << '\n';
          break;
      }
      return kExitOk;
    }

    if (*table) {
      if (n_max < 1) {
        err << "error: table requires n_max >= 1\n";
        return kExitUsage;
      }
      detail::warn_if_large(n_max, err);
      if (fmt == OutputFormat::csv) out << kTableCsvHeader << '\n';
      json rows = json::array();
      for (size_type k = 1; k <= n_max; ++k) {
        const TableRow row = make_table_row(k);
        switch (fmt) {
          case OutputFormat::plain: out << render_plain(row) << '\n'; break;
          case OutputFormat::csv: out << csv_row(row) << '\n'; break;
          case OutputFormat::json: rows.push_back(row); break;
        }
      }
      if (fmt == OutputFormat::json) out << rows.dump() << '\n';
      return kExitOk;
    }

    if (*verify) {
      const size_type cap = oracle_cap.value_or(std::min(kDefaultOracleCap, n_max));
      const VerificationReport report = verify_range(n_min, n_max, cap);
      switch (fmt) {
        case OutputFormat::plain: out << render_plain(report); break;
        case OutputFormat::json: out << json(report).dump() << '\n'; break;
        case OutputFormat::csv:
          out << "claim,n,status,detail\n";
          for (const auto& c : report.checks) {
            out << to_string(c.claim) << ',' << c.n << ',' << (c.passed ? "pass" : "fail") << ','
                << detail::csv_quote(c.detail) << '\n';
          }
          break;
      }
      return report.passed() ? kExitOk : kExitVerificationFailed;
    }

    if (*inv) {
      if (n < 1) {
        err << "error: inverse requires n >= 1\n";
        return kExitUsage;
      }
      detail::warn_if_large(n, err);
      const Permutation q = recursive ? inverse_recursive(n) : inverse(generate_fast(n));
      detail::print_permutation(q, fmt, out);
      return kExitOk;
    }

    if (*dec) {
      const RecursionDecomposition d = decompose(n);
      switch (fmt) {
        case OutputFormat::plain: out << render_plain(d); break;
        case OutputFormat::json: out << json(d).dump() << '\n'; break;
        case OutputFormat::csv:
          out << "n,parity,prefix,child_n,threshold,low_offset,high_offset\n"
              << d.n << ',' << to_string(d.parity) << ','
              << csv_cell(Permutation::from_trusted(d.prefix)) << ',' << d.child_n << ','
              << d.shift_map.threshold << ',' << d.shift_map.low_offset << ','
              << d.shift_map.high_offset << '\n';
          break;
      }
      return kExitOk;
    }
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  return kExitUsage;
}

}  // namespace mea::cli
