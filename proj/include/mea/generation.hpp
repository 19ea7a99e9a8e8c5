#pragma once

// Construction of Median-Extremes Alternation (MEA) permutations.
//
// The MEA process starts from the ordered list (1, ..., n) and alternates two
// steps, beginning with a median step, until the list is empty:
//   median step:  take the middle element (odd length) or the two middle
//                 elements left to right (even length);
//   extreme step: take the minimum, then the maximum.
// The taken values, in order, form pi_n in one-line notation.
//
// Two independent constructions are provided. `generate_naive` simulates the
// process on an explicit list. `generate_fast` unrolls the parity recursion
//   pi_{2m+1} = [m+1, 1, 2m+1] ++ shift(pi_{2m-2})
//   pi_{2m}   = [m, m+1, 1, 2m] ++ shift(pi_{2m-4})
// by composing the rank-shift maps as it descends.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mea/permutation.hpp"

namespace mea {

enum class Parity { odd, even };

inline const char* to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

/// Order-preserving relabeling r -> r + low_offset (r <= threshold),
/// r -> r + high_offset (r > threshold).
struct ShiftMap {
  value_type threshold = 0;
  value_type low_offset = 0;
  value_type high_offset = 0;

  constexpr value_type operator()(value_type r) const noexcept {
    return r <= threshold ? r + low_offset : r + high_offset;
  }

  friend bool operator==(const ShiftMap&, const ShiftMap&) = default;
};

/// One level of the parity recursion: pi_n = prefix ++ shift_map(pi_{child_n}).
struct RecursionDecomposition {
  size_type n = 0;
  Parity parity = Parity::odd;
  std::vector<value_type> prefix;
  size_type child_n = 0;
  ShiftMap shift_map;

  friend bool operator==(const RecursionDecomposition&, const RecursionDecomposition&) = default;
};

inline RecursionDecomposition decompose(size_type n) {
  if (n < 3) {
    throw size_too_small("decompose requires n >= 3, got " + std::to_string(n));
  }
  RecursionDecomposition d;
  d.n = n;
  if (n % 2 == 1) {
    const auto m = static_cast<value_type>(n / 2);
    d.parity = Parity::odd;
    d.prefix = {m + 1, 1, 2 * m + 1};
    d.child_n = n - 3;
    d.shift_map = {m - 1, 1, 2};
  } else {
    const auto m = static_cast<value_type>(n / 2);
    d.parity = Parity::even;
    d.prefix = {m, m + 1, 1, 2 * m};
    d.child_n = n - 4;
    d.shift_map = {m - 2, 1, 3};
  }
  return d;
}

inline Permutation recompose(const RecursionDecomposition& d, const Permutation& child) {
  if (child.size() != d.child_n) {
    throw size_mismatch("decomposition of n=" + std::to_string(d.n) + " expects a child of size " +
                        std::to_string(d.child_n) + ", got " + std::to_string(child.size()));
  }
  std::vector<value_type> out;
  out.reserve(d.n);
  out.insert(out.end(), d.prefix.begin(), d.prefix.end());
  for (value_type r : child) out.push_back(d.shift_map(r));
  return Permutation::from_trusted(std::move(out));
}

/// Direct simulation of the process on an explicit sorted list. Quadratic in
/// the worst case; it is the reference the fast path is checked against.
inline Permutation generate_naive(size_type n) {
  std::vector<value_type> remaining(n);
  for (size_type i = 0; i < n; ++i) remaining[i] = static_cast<value_type>(i + 1);

  std::vector<value_type> out;
  out.reserve(n);
  bool median_step = true;
  while (!remaining.empty()) {
    const size_type len = remaining.size();
    if (median_step) {
      if (len % 2 == 1) {
        const size_type mid = len / 2;
        out.push_back(remaining[mid]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(mid));
      } else {
        const size_type left = len / 2 - 1;
        out.push_back(remaining[left]);
        out.push_back(remaining[left + 1]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(left),
                        remaining.begin() + static_cast<std::ptrdiff_t>(left + 2));
      }
    } else {
      // An extreme step always follows a median step, which leaves an even list.
      if (len % 2 != 0) {
        throw std::logic_error("extreme step reached an odd-length list of size " +
                               std::to_string(len));
      }
      out.push_back(remaining.front());
      out.push_back(remaining.back());
      remaining.pop_back();
      remaining.erase(remaining.begin());
    }
    median_step = !median_step;
  }
  return Permutation::from_trusted(std::move(out));
}

namespace detail {

// Maps rank r of a sub-problem to the original value it stands for. The
// values still unplaced always form at most two contiguous runs of [n], so
// the composed relabeling is a strictly increasing two-piece affine map.
struct RunMap {
  value_type low_start = 1;
  value_type low_len = 0;
  value_type high_start = 1;
  value_type high_len = 0;

  value_type operator()(value_type r) const noexcept {
    return r <= low_len ? low_start + (r - 1) : high_start + (r - low_len - 1);
  }

  // this o shift, restricted to child ranks 1..child_n.
  RunMap then(const ShiftMap& shift, value_type child_n) const {
    RunMap next;
    next.low_len = shift.threshold < child_n ? shift.threshold : child_n;
    next.high_len = child_n - next.low_len;
    if (next.low_len > 0) {
      next.low_start = (*this)(1 + shift.low_offset);
      check_contiguous(next.low_start, (*this)(next.low_len + shift.low_offset), next.low_len);
    }
    if (next.high_len > 0) {
      next.high_start = (*this)(next.low_len + 1 + shift.high_offset);
      check_contiguous(next.high_start, (*this)(child_n + shift.high_offset), next.high_len);
    }
    return next;
  }

  static void check_contiguous(value_type first, value_type last, value_type len) {
    if (last - first + 1 != len) {
      throw std::logic_error("composed rank map is not a two-run map");
    }
  }
};

}  // namespace detail

/// pi_n in O(n) time via the unrolled parity recursion.
inline Permutation generate_fast(size_type n) {
  std::vector<value_type> out;
  out.reserve(n);

  detail::RunMap to_value{1, static_cast<value_type>(n), static_cast<value_type>(n + 1), 0};
  size_type size = n;
  while (size >= 3) {
    const RecursionDecomposition d = decompose(size);
    for (value_type r : d.prefix) out.push_back(to_value(r));
    to_value = to_value.then(d.shift_map, static_cast<value_type>(d.child_n));
    size = d.child_n;
  }
  // Base cases pi_0 = [], pi_1 = [1], pi_2 = [1,2].
  for (value_type r = 1; r <= size; ++r) out.push_back(to_value(r));

  return Permutation::from_trusted(std::move(out));
}

inline Permutation generate(size_type n) { return generate_fast(n); }

}  // namespace mea
