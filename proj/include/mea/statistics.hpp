#pragma once

// Permutation statistics, and the closed forms they take on the MEA family.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mea/generation.hpp"
#include "mea/permutation.hpp"

namespace mea {

using count_type = std::uint64_t;
using big_int = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Inversions

/// Number of pairs i < j with p(i) > p(j), by merge sort in O(n log n).
inline count_type inversion_count(std::span<const value_type> values) {
  const size_type n = values.size();
  if (n < 2) return 0;
  std::vector<value_type> a(values.begin(), values.end());
  std::vector<value_type> buf(n);
  count_type inversions = 0;
  // Bottom-up merge; every element taken from the right run jumps over the
  // elements still pending in the left run.
  for (size_type width = 1; width < n; width *= 2) {
    for (size_type lo = 0; lo < n; lo += 2 * width) {
      const size_type mid = std::min(lo + width, n);
      const size_type hi = std::min(lo + 2 * width, n);
      size_type i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (a[j] < a[i]) {
          inversions += mid - i;
          buf[k++] = a[j++];
        } else {
          buf[k++] = a[i++];
        }
      }
      while (i < mid) buf[k++] = a[i++];
      while (j < hi) buf[k++] = a[j++];
    }
    a.swap(buf);
  }
  return inversions;
}

inline count_type inversion_count(const Permutation& p) { return inversion_count(p.values()); }

/// floor((n-1)^2 / 4): m^2 for n = 2m+1 and m(m-1) for n = 2m.
inline count_type inversion_formula(size_type n) {
  if (n < 1) throw size_too_small("inversion_formula requires n >= 1");
  const count_type k = n - 1;
  return (k * k) / 4;
}

// ---------------------------------------------------------------------------
// Descents

/// Positions i in 1..n-1 with p(i) > p(i+1), ascending.
inline std::vector<size_type> descent_set(const Permutation& p) {
  std::vector<size_type> out;
  const auto v = p.values();
  for (size_type i = 0; i + 1 < v.size(); ++i) {
    if (v[i] > v[i + 1]) out.push_back(i + 1);
  }
  return out;
}

/// {1,3,...,n-2} for odd n and {2,4,...,n-2} for even n.
inline std::vector<size_type> predicted_descent_set(size_type n) {
  if (n < 1) throw size_too_small("predicted_descent_set requires n >= 1");
  std::vector<size_type> out;
  for (size_type i = (n % 2 == 1) ? 1 : 2; i + 2 <= n; i += 2) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// Alternation

enum class AlternationType { down_up, up_down, not_alternating, trivial };

inline std::string_view to_string(AlternationType t) {
  switch (t) {
    case AlternationType::down_up: return "down_up";
    case AlternationType::up_down: return "up_down";
    case AlternationType::not_alternating: return "not_alternating";
    case AlternationType::trivial: return "trivial";
  }
  return "?";
}

inline std::optional<AlternationType> alternation_from_string(std::string_view s) {
  for (auto t : {AlternationType::down_up, AlternationType::up_down,
                 AlternationType::not_alternating, AlternationType::trivial}) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

struct AlternationDiagnosis {
  AlternationType type = AlternationType::trivial;
  // For not_alternating: the first position i such that the pair
  // (p(i), p(i+1)) breaks the pattern fixed by the first pair.
  std::optional<size_type> first_violation;
};

/// Works on any sequence of distinct values, not only permutations of 1..n.
inline AlternationDiagnosis diagnose_alternation(std::span<const value_type> v) {
  if (v.size() < 2) return {AlternationType::trivial, std::nullopt};
  // The first comparison fixes the type; afterwards the direction must flip
  // at every step.
  bool want_up = v[0] < v[1];
  const AlternationType type = want_up ? AlternationType::up_down : AlternationType::down_up;
  for (size_type i = 1; i + 1 < v.size(); ++i) {
    want_up = !want_up;
    if ((v[i] < v[i + 1]) != want_up) return {AlternationType::not_alternating, i + 1};
  }
  return {type, std::nullopt};
}

inline AlternationDiagnosis diagnose_alternation(const Permutation& p) {
  return diagnose_alternation(p.values());
}

inline AlternationType classify_alternation(std::span<const value_type> v) {
  return diagnose_alternation(v).type;
}

inline AlternationType classify_alternation(const Permutation& p) {
  return diagnose_alternation(p.values()).type;
}

/// Down-up for odd n >= 3, up-down for even n >= 2, trivial for n = 1.
inline AlternationType predicted_alternation(size_type n) {
  if (n <= 1) return AlternationType::trivial;
  return n % 2 == 1 ? AlternationType::down_up : AlternationType::up_down;
}

// ---------------------------------------------------------------------------
// Sign

inline int sign(const Permutation& p) { return inversion_count(p) % 2 == 0 ? 1 : -1; }

/// -1 exactly when n = 3 (mod 4).
inline int sign_formula(size_type n) {
  if (n < 1) throw size_too_small("sign_formula requires n >= 1");
  return n % 4 == 3 ? -1 : 1;
}

// ---------------------------------------------------------------------------
// Inverse

inline Permutation inverse(const Permutation& p) {
  std::vector<value_type> q(p.size());
  const auto v = p.values();
  for (size_type i = 0; i < v.size(); ++i) q[v[i] - 1] = static_cast<value_type>(i + 1);
  return Permutation::from_trusted(std::move(q));
}

/// pi_n^{-1} built from the inverse recursion, without generating pi_n.
///
/// Base inverses for n <= 4 are tabulated. For n = 2m+1 the values m+1, 1, n
/// sit at positions 1, 2, 3 and any other value j sits at
/// 3 + pi_{2m-2}^{-1}(r), r = j-1 (j <= m) or j-2 (j >= m+2). For n = 2m the
/// values m, m+1, 1, n sit at positions 1..4 and any other j sits at
/// 4 + pi_{2m-4}^{-1}(r), r = j-1 (j <= m-1) or j-3 (j >= m+2).
///
/// Built bottom-up along the chain of sizes in one buffer. Each level moves
/// the child's entries into place, so the cost is quadratic in n.
inline Permutation inverse_recursive(size_type n) {
  if (n < 1) throw size_too_small("inverse_recursive requires n >= 1");

  std::vector<size_type> chain{n};
  while (chain.back() > 4) chain.push_back(chain.back() % 2 == 1 ? chain.back() - 3 : chain.back() - 4);

  // Sizes above 4 descend to a base in 2..4, never to 0.
  // q[j] holds pi_s^{-1}(j) for the current size s, 1-based; q[0] unused.
  std::vector<value_type> q(n + 1, 0);
  switch (chain.back()) {
    case 1: q[1] = 1; break;
    case 2: q[1] = 1; q[2] = 2; break;
    case 3: q[1] = 2; q[2] = 1; q[3] = 3; break;
    case 4: q[1] = 3; q[2] = 1; q[3] = 2; q[4] = 4; break;
  }

  for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) {
    const size_type s = *it;
    const auto m = static_cast<value_type>(s / 2);
    if (s % 2 == 1) {
      // j = m+2..s-1 reads r = j-2; j = 2..m reads r = j-1. Descending j only
      // reads entries not yet overwritten.
      for (size_type j = s - 1; j >= m + 2; --j) q[j] = 3 + q[j - 2];
      for (size_type j = m; j >= 2; --j) q[j] = 3 + q[j - 1];
      q[m + 1] = 1;
      q[1] = 2;
      q[s] = 3;
    } else {
      for (size_type j = s - 1; j >= m + 2; --j) q[j] = 4 + q[j - 3];
      for (size_type j = m - 1; j >= 2; --j) q[j] = 4 + q[j - 1];
      q[m] = 1;
      q[m + 1] = 2;
      q[1] = 3;
      q[s] = 4;
    }
  }
  return Permutation::from_trusted(std::vector<value_type>(q.begin() + 1, q.end()));
}

// ---------------------------------------------------------------------------
// Cycles

/// Cycle lengths of i -> p(i), largest first. Fixed points count as 1-cycles.
inline std::vector<size_type> cycle_structure(const Permutation& p) {
  const auto v = p.values();
  std::vector<bool> visited(v.size(), false);
  std::vector<size_type> lengths;
  for (size_type start = 0; start < v.size(); ++start) {
    if (visited[start]) continue;
    size_type len = 0;
    for (size_type i = start; !visited[i]; i = v[i] - 1) {
      visited[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

/// lcm of the cycle lengths, i.e. the order of p under composition.
inline big_int permutation_order(std::span<const size_type> cycle_type) {
  big_int order = 1;
  for (size_type len : cycle_type) {
    const big_int l = len;
    order = order / boost::multiprecision::gcd(order, l) * l;
  }
  return order;
}

inline big_int permutation_order(const Permutation& p) {
  const auto cycles = cycle_structure(p);
  return permutation_order(cycles);
}

// ---------------------------------------------------------------------------

struct StatsReport {
  size_type n = 0;
  count_type inversions = 0;
  std::vector<size_type> descent_set;
  int sign = 1;
  AlternationType alternation = AlternationType::trivial;
  std::vector<size_type> cycle_type;
  big_int order = 1;

  friend bool operator==(const StatsReport&, const StatsReport&) = default;
};

inline StatsReport compute_stats(const Permutation& p) {
  StatsReport r;
  r.n = p.size();
  r.inversions = inversion_count(p);
  r.descent_set = descent_set(p);
  r.sign = r.inversions % 2 == 0 ? 1 : -1;
  r.alternation = classify_alternation(p);
  r.cycle_type = cycle_structure(p);
  r.order = permutation_order(r.cycle_type);
  return r;
}

}  // namespace mea
