#pragma once

// Checks every structural claim about the MEA family over a range of n and
// collects the outcomes into a report.

#include <algorithm>
#include <array>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "mea/generation.hpp"
#include "mea/permutation.hpp"
#include "mea/statistics.hpp"

namespace mea {

/// floor((n-1)^2 / 4), the quarter-squares sequence A002620 indexed by n.
/// Deliberately computed apart from `inversion_formula` so the two can be
/// compared.
inline count_type quarter_squares(size_type k) {
  if (k < 1) throw size_too_small("quarter_squares requires k >= 1");
  const count_type j = k - 1;
  // floor(j^2/4) = floor(j/2) * ceil(j/2)
  return (j / 2) * ((j + 1) / 2);
}

/// First twelve published terms of A002620.
inline constexpr std::array<count_type, 12> kA002620Prefix = {0, 0, 1, 2, 4, 6, 9, 12, 16, 20, 25, 30};

enum class ClaimId {
  oracle_eq,
  prefix,
  recompose,
  alternation,
  descents,
  inv_formula,
  inv_buckets,
  sign,
  inverse,
  oeis,
};

inline constexpr std::array<ClaimId, 10> kAllClaims = {
    ClaimId::oracle_eq,   ClaimId::prefix,      ClaimId::recompose, ClaimId::alternation,
    ClaimId::descents,    ClaimId::inv_formula, ClaimId::inv_buckets, ClaimId::sign,
    ClaimId::inverse,     ClaimId::oeis,
};

inline std::string_view to_string(ClaimId c) {
  switch (c) {
    case ClaimId::oracle_eq: return "ORACLE_EQ";
    case ClaimId::prefix: return "PREFIX";
    case ClaimId::recompose: return "RECOMPOSE";
    case ClaimId::alternation: return "ALTERNATION";
    case ClaimId::descents: return "DESCENTS";
    case ClaimId::inv_formula: return "INV_FORMULA";
    case ClaimId::inv_buckets: return "INV_BUCKETS";
    case ClaimId::sign: return "SIGN";
    case ClaimId::inverse: return "INVERSE";
    case ClaimId::oeis: return "OEIS";
  }
  return "?";
}

inline std::optional<ClaimId> claim_from_string(std::string_view s) {
  for (ClaimId c : kAllClaims) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

struct CheckResult {
  ClaimId claim = ClaimId::oracle_eq;
  size_type n = 0;
  bool passed = false;
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ClaimTally {
  size_type passed = 0;
  size_type failed = 0;

  friend bool operator==(const ClaimTally&, const ClaimTally&) = default;
};

struct VerificationReport {
  size_type n_min = 1;
  size_type n_max = 1;
  size_type oracle_cap = 0;
  std::vector<CheckResult> checks;  // ascending n, then claim order

  std::map<ClaimId, ClaimTally> summary() const {
    std::map<ClaimId, ClaimTally> out;
    for (ClaimId c : kAllClaims) out[c];
    for (const auto& r : checks) (r.passed ? out[r.claim].passed : out[r.claim].failed)++;
    return out;
  }

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.passed; });
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Inversion count of pi_n split across its recursion: inside the prefix,
/// prefix-vs-tail, and inside the tail.
struct InversionBuckets {
  count_type prefix = 0;
  count_type cross = 0;
  count_type tail = 0;

  friend bool operator==(const InversionBuckets&, const InversionBuckets&) = default;
};

/// Counts each bucket directly on pi_n, split after `prefix_len` entries.
inline InversionBuckets count_inversion_buckets(const Permutation& p, size_type prefix_len) {
  const auto v = p.values();
  prefix_len = std::min(prefix_len, v.size());
  InversionBuckets b;
  b.prefix = inversion_count(v.first(prefix_len));
  b.tail = inversion_count(v.subspan(prefix_len));
  for (size_type i = 0; i < prefix_len; ++i) {
    for (size_type j = prefix_len; j < v.size(); ++j) {
      if (v[i] > v[j]) ++b.cross;
    }
  }
  return b;
}

/// Buckets predicted by the recursion: 1 / 3m-3 / inv(pi_{2m-2}) for
/// n = 2m+1, and 2 / 4m-8 / inv(pi_{2m-4}) for n = 2m. Requires n >= 3.
inline InversionBuckets predicted_inversion_buckets(size_type n, count_type child_inversions) {
  if (n < 3) throw size_too_small("inversion buckets need n >= 3");
  const count_type m = n / 2;
  if (n % 2 == 1) return {1, 3 * m - 3, child_inversions};
  return {2, 4 * m - 8, child_inversions};
}

namespace detail {

inline std::string join_positions(const std::vector<size_type>& xs) {
  std::string s = "{";
  for (size_type i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s + "}";
}

inline std::string signed_str(int s) { return s > 0 ? "+1" : "-1"; }

inline std::string buckets_str(const InversionBuckets& b) {
  return std::to_string(b.prefix) + "/" + std::to_string(b.cross) + "/" + std::to_string(b.tail);
}

// Independent restatement of the prefix values for n >= 3.
inline std::vector<value_type> expected_prefix(size_type n) {
  const auto m = static_cast<value_type>(n / 2);
  if (n % 2 == 1) return {m + 1, 1, 2 * m + 1};
  return {m, m + 1, 1, 2 * m};
}

inline void check_one(size_type n, bool run_oracle, size_type oracle_cap,
                      std::vector<CheckResult>& out) {
  const Permutation p = generate_fast(n);
  auto record = [&](ClaimId c, bool ok, std::string detail) {
    out.push_back({c, n, ok, std::move(detail)});
  };

  if (run_oracle) {
    const Permutation naive = generate_naive(n);
    const bool ok = naive == p;
    record(ClaimId::oracle_eq, ok,
           ok ? "match (cap=" + std::to_string(oracle_cap) + ")"
              : "fast " + to_string(p) + " != naive " + to_string(naive));
  }

  if (n >= 3) {
    const auto want = expected_prefix(n);
    const bool ok = std::equal(want.begin(), want.end(), p.begin());
    record(ClaimId::prefix, ok, to_string(Permutation::from_trusted(want)));
  } else {
    const bool ok = p == Permutation::identity(n);
    record(ClaimId::prefix, ok, "base " + to_string(p));
  }

  const count_type inv = inversion_count(p);

  std::optional<Permutation> child;
  if (n >= 3) {
    const RecursionDecomposition d = decompose(n);
    child = generate_fast(d.child_n);
    const bool ok = recompose(d, *child) == p;
    record(ClaimId::recompose, ok, ok ? "child_n=" + std::to_string(d.child_n) : "mismatch");
  } else {
    record(ClaimId::recompose, true, "base case");
  }

  {
    const auto diag = diagnose_alternation(p);
    const auto want = predicted_alternation(n);
    std::string detail(to_string(diag.type));
    if (diag.first_violation) detail += " at " + std::to_string(*diag.first_violation);
    if (diag.type != want) detail += " (expected " + std::string(to_string(want)) + ")";
    record(ClaimId::alternation, diag.type == want, std::move(detail));
  }

  {
    const auto des = descent_set(p);
    const auto want = predicted_descent_set(n);
    const bool ok = des == want && des.size() == (n - 1) / 2;
    std::string detail = join_positions(des);
    if (!ok) detail += " (expected " + join_positions(want) + ")";
    record(ClaimId::descents, ok, std::move(detail));
  }

  {
    const count_type want = inversion_formula(n);
    record(ClaimId::inv_formula, inv == want,
           inv == want ? std::to_string(inv)
                       : std::to_string(inv) + " (formula " + std::to_string(want) + ")");
  }

  if (n >= 3) {
    const RecursionDecomposition d = decompose(n);
    const auto got = count_inversion_buckets(p, d.prefix.size());
    const auto want = predicted_inversion_buckets(n, inversion_count(*child));
    const bool ok = got == want && got.prefix + got.cross + got.tail == inv;
    std::string detail = buckets_str(got);
    if (!ok) detail += " (expected " + buckets_str(want) + ")";
    record(ClaimId::inv_buckets, ok, std::move(detail));
  } else {
    // pi_1 and pi_2 have no inversions.
    record(ClaimId::inv_buckets, inv == 0, "base inv=" + std::to_string(inv));
  }

  {
    const int s = sign(p);
    const int want = sign_formula(n);
    const int from_inv = inversion_formula(n) % 2 == 0 ? 1 : -1;
    const bool ok = s == want && want == from_inv && ((want == -1) == (n % 4 == 3));
    record(ClaimId::sign, ok, signed_str(s));
  }

  {
    const Permutation q = inverse_recursive(n);
    const bool same = q == inverse(p);
    const bool ident = compose(p, q) == Permutation::identity(n);
    record(ClaimId::inverse, same && ident,
           same && ident ? "ok" : (same ? "composition is not the identity" : "recursive inverse differs"));
  }

  {
    const count_type want = quarter_squares(n);
    bool ok = inv == want;
    std::string detail = std::to_string(inv);
    if (n <= kA002620Prefix.size()) {
      ok = ok && kA002620Prefix[n - 1] == inv;
      detail += " (fixture " + std::to_string(kA002620Prefix[n - 1]) + ")";
    }
    record(ClaimId::oeis, ok, std::move(detail));
  }
}

}  // namespace detail

/// Runs every claim for each n in [n_min, n_max]. The process oracle runs for
/// n <= oracle_cap; when the cap lies below n_min it still runs once, at n_min.
/// Per-n work is spread over `threads` workers (0 = hardware concurrency);
/// the report is identical for any thread count.
inline VerificationReport verify_range(size_type n_min, size_type n_max, size_type oracle_cap,
                                       unsigned threads = 0) {
  if (n_min < 1 || n_min > n_max) {
    throw invalid_range("need 1 <= n_min <= n_max, got n_min=" + std::to_string(n_min) +
                        " n_max=" + std::to_string(n_max));
  }
  if (oracle_cap > n_max) {
    throw invalid_range("oracle cap " + std::to_string(oracle_cap) + " exceeds n_max " +
                        std::to_string(n_max));
  }

  VerificationReport report;
  report.n_min = n_min;
  report.n_max = n_max;
  report.oracle_cap = oracle_cap;

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const size_type count = n_max - n_min + 1;
  threads = static_cast<unsigned>(std::min<size_type>(threads, count));

  auto run_oracle = [&](size_type n) { return n <= oracle_cap || (oracle_cap < n_min && n == n_min); };

  // Strided assignment balances the cost, which grows with n.
  std::vector<std::future<std::vector<std::vector<CheckResult>>>> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.push_back(std::async(std::launch::async, [=] {
      std::vector<std::vector<CheckResult>> per_n;
      for (size_type i = t; i < count; i += threads) {
        const size_type n = n_min + i;
        per_n.emplace_back();
        detail::check_one(n, run_oracle(n), oracle_cap, per_n.back());
      }
      return per_n;
    }));
  }

  std::vector<std::vector<std::vector<CheckResult>>> results;
  for (auto& w : workers) results.push_back(w.get());
  for (size_type i = 0; i < count; ++i) {
    auto& block = results[i % threads][i / threads];
    report.checks.insert(report.checks.end(), std::make_move_iterator(block.begin()),
                         std::make_move_iterator(block.end()));
  }
  return report;
}

}  // namespace mea
