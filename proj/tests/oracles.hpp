#pragma once

// Definitional reference implementations used only by tests. They follow the
// textbook definitions directly and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace mea::testing {

inline std::uint64_t inversions_by_pairs(const std::vector<std::uint32_t>& v) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++count;
  return count;
}

// q with q(p(i)) = i, found by searching for each value.
inline std::vector<std::uint32_t> inverse_by_search(const std::vector<std::uint32_t>& v) {
  std::vector<std::uint32_t> q;
  for (std::uint32_t value = 1; value <= v.size(); ++value) {
    auto it = std::find(v.begin(), v.end(), value);
    q.push_back(static_cast<std::uint32_t>(it - v.begin() + 1));
  }
  return q;
}

// p(1) > p(2) < p(3) > ... when starting_down, else p(1) < p(2) > ...
inline bool alternates(const std::vector<std::uint32_t>& v, bool starting_down) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const bool down_here = (i % 2 == 0) == starting_down;
    if (down_here ? !(v[i] > v[i + 1]) : !(v[i] < v[i + 1])) return false;
  }
  return true;
}

inline std::vector<std::uint32_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 1u);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

}  // namespace mea::testing
