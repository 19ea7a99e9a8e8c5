#pragma once

// One-line permutations over [n] = {1, ..., n}, plus the error types shared
// by the rest of the library.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mea {

using value_type = std::uint32_t;
using size_type = std::size_t;

struct error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct invalid_permutation : error {
  using error::error;
};
struct size_too_small : error {
  using error::error;
};
struct size_mismatch : error {
  using error::error;
};
struct invalid_range : error {
  using error::error;
};

/// A bijection on {1, ..., n} in one-line notation. Values are 1-based;
/// storage is a plain 0-based vector, so `values()[i]` is p(i + 1).
///
/// The checked constructor rejects anything that is not a bijection. The
/// library's own constructions go through `from_trusted`, which skips the
/// O(n) check.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<value_type> values) : values_(std::move(values)) {
    validate(values_);
  }

  Permutation(std::initializer_list<value_type> values)
      : Permutation(std::vector<value_type>(values)) {}

  static Permutation from_trusted(std::vector<value_type> values) {
    Permutation p;
    p.values_ = std::move(values);
    return p;
  }

  static Permutation identity(size_type n) {
    std::vector<value_type> v(n);
    for (size_type i = 0; i < n; ++i) v[i] = static_cast<value_type>(i + 1);
    return from_trusted(std::move(v));
  }

  size_type size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  /// p(position), 1-based.
  value_type operator()(size_type position) const { return values_.at(position - 1); }

  std::span<const value_type> values() const noexcept { return values_; }
  const std::vector<value_type>& vector() const noexcept { return values_; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  static void validate(std::span<const value_type> values) {
    const size_type n = values.size();
    std::vector<bool> seen(n + 1, false);
    for (size_type i = 0; i < n; ++i) {
      const value_type v = values[i];
      if (v < 1 || v > n) {
        throw invalid_permutation("value " + std::to_string(v) + " at position " +
                                  std::to_string(i + 1) + " is outside 1.." +
                                  std::to_string(n));
      }
      if (seen[v]) {
        throw invalid_permutation("value " + std::to_string(v) + " appears twice");
      }
      seen[v] = true;
    }
  }

 private:
  std::vector<value_type> values_;
};

/// (p * q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw size_mismatch("cannot compose permutations of sizes " + std::to_string(p.size()) +
                        " and " + std::to_string(q.size()));
  }
  std::vector<value_type> out(p.size());
  const auto pv = p.values();
  const auto qv = q.values();
  for (size_type i = 0; i < out.size(); ++i) out[i] = pv[qv[i] - 1];
  return Permutation::from_trusted(std::move(out));
}

/// Bracketed one-line notation, e.g. "[3,1,5,2,4]".
inline std::string to_string(const Permutation& p) {
  std::string s = "[";
  bool first = true;
  for (value_type v : p) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  s += ']';
  return s;
}

}  // namespace mea
