#include <catch_amalgamated.hpp>

#include <algorithm>
#include <limits>
#include <span>
#include <numeric>
#include <random>
#include <vector>

#include "mea/generation.hpp"
#include "mea/statistics.hpp"
#include "oracles.hpp"

using mea::AlternationType;
using mea::Permutation;
using Positions = std::vector<mea::size_type>;

TEST_CASE("inversion_count on small cases") {
  CHECK(mea::inversion_count(Permutation{2, 1, 3}) == 1);
  CHECK(mea::inversion_count(Permutation{3, 1, 5, 2, 4}) == 4);
  CHECK(mea::inversion_count(Permutation::identity(50)) == 0);
  CHECK(mea::inversion_count(Permutation{}) == 0);
  CHECK(mea::inversion_count(Permutation{5, 4, 3, 2, 1}) == 10);
}

TEST_CASE("inversion_count matches the pair count on every permutation of size <= 8") {
  for (std::size_t n = 0; n <= 8; ++n) {
    std::vector<mea::value_type> v(n);
    std::iota(v.begin(), v.end(), 1u);
    do {
      REQUIRE(mea::inversion_count(Permutation::from_trusted(v)) ==
              mea::testing::inversions_by_pairs(v));
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

TEST_CASE("inversion_count matches the pair count on random permutations") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> size(0, 10'000);
  for (int trial = 0; trial < 40; ++trial) {
    const auto v = mea::testing::random_permutation(size(rng), rng);
    REQUIRE(mea::inversion_count(Permutation::from_trusted(v)) ==
            mea::testing::inversions_by_pairs(v));
  }
  const auto big = mea::testing::random_permutation(10'000, rng);
  CHECK(mea::inversion_count(Permutation::from_trusted(big)) ==
        mea::testing::inversions_by_pairs(big));
}

TEST_CASE("inversion_formula") {
  CHECK(mea::inversion_formula(1) == 0);
  CHECK(mea::inversion_formula(7) == 9);
  CHECK(mea::inversion_formula(12) == 30);
  for (std::uint64_t m = 1; m < 2000; ++m) {
    CHECK(mea::inversion_formula(2 * m + 1) == m * m);
    CHECK(mea::inversion_formula(2 * m) == m * (m - 1));
  }
  CHECK_THROWS_AS(mea::inversion_formula(0), mea::size_too_small);
}

TEST_CASE("descent sets") {
  CHECK(mea::descent_set(Permutation{3, 1, 5, 2, 4}) == Positions{1, 3});
  CHECK(mea::descent_set(Permutation{1, 2, 3}).empty());
  CHECK(mea::descent_set(Permutation{4, 5, 1, 8, 3, 6, 2, 7}) == Positions{2, 4, 6});

  CHECK(mea::predicted_descent_set(7) == Positions{1, 3, 5});
  CHECK(mea::predicted_descent_set(2).empty());
  CHECK(mea::predicted_descent_set(1).empty());
  CHECK(mea::predicted_descent_set(6) == Positions{2, 4});
  for (std::size_t n = 1; n <= 500; ++n) {
    CHECK(mea::predicted_descent_set(n).size() == (n - 1) / 2);
  }
}

TEST_CASE("classify_alternation") {
  CHECK(mea::classify_alternation(Permutation{4, 1, 7, 3, 5, 2, 6}) == AlternationType::down_up);
  CHECK(mea::classify_alternation(Permutation{1}) == AlternationType::trivial);
  CHECK(mea::classify_alternation(Permutation{}) == AlternationType::trivial);
  CHECK(mea::classify_alternation(Permutation{1, 2}) == AlternationType::up_down);
  CHECK(mea::classify_alternation(Permutation{2, 1}) == AlternationType::down_up);
  // 1 < 3 > 2 < 4 alternates.
  CHECK(mea::classify_alternation(Permutation{1, 3, 2, 4}) == AlternationType::up_down);

  const auto diag = mea::diagnose_alternation(Permutation{1, 3, 4, 2});
  CHECK(diag.type == AlternationType::not_alternating);
  REQUIRE(diag.first_violation);
  CHECK(*diag.first_violation == 2);
  CHECK_FALSE(mea::diagnose_alternation(Permutation{2, 1, 3}).first_violation);
}

TEST_CASE("classify_alternation agrees with the definitional check on all small permutations") {
  for (std::size_t n = 2; n <= 7; ++n) {
    std::vector<mea::value_type> v(n);
    std::iota(v.begin(), v.end(), 1u);
    do {
      const auto t = mea::classify_alternation(Permutation::from_trusted(v));
      const bool down = mea::testing::alternates(v, true);
      const bool up = mea::testing::alternates(v, false);
      REQUIRE((t == AlternationType::down_up) == down);
      REQUIRE((t == AlternationType::up_down) == up);
      REQUIRE((t == AlternationType::not_alternating) == (!down && !up));
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

TEST_CASE("sign") {
  CHECK(mea::sign(Permutation{2, 1, 3}) == -1);
  CHECK(mea::sign(Permutation::identity(9)) == 1);
  CHECK(mea::sign(Permutation{4, 5, 1, 8, 3, 6, 2, 7}) == 1);

  CHECK(mea::sign_formula(3) == -1);
  CHECK(mea::sign_formula(4) == 1);
  CHECK(mea::sign_formula(7) == -1);
  for (std::size_t n = 1; n <= 1000; ++n) {
    const int from_formula = mea::inversion_formula(n) % 2 == 0 ? 1 : -1;
    CHECK(mea::sign_formula(n) == from_formula);
  }
}

TEST_CASE("inverse") {
  CHECK(mea::inverse(Permutation{2, 3, 1, 4}) == Permutation{3, 1, 2, 4});
  CHECK(mea::inverse(Permutation::identity(6)) == Permutation::identity(6));
  CHECK(mea::inverse(Permutation{3, 1, 5, 2, 4}) == Permutation{2, 4, 1, 5, 3});

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = mea::testing::random_permutation(200, rng);
    CHECK(mea::inverse(Permutation::from_trusted(v)).vector() == mea::testing::inverse_by_search(v));
  }
}

TEST_CASE("inverse_recursive") {
  CHECK(mea::inverse_recursive(1) == Permutation{1});
  CHECK(mea::inverse_recursive(2) == Permutation{1, 2});
  CHECK(mea::inverse_recursive(3) == Permutation{2, 1, 3});
  CHECK(mea::inverse_recursive(4) == Permutation{3, 1, 2, 4});
  CHECK(mea::inverse_recursive(5) == Permutation{2, 4, 1, 5, 3});
  CHECK(mea::inverse_recursive(12) == Permutation{3, 7, 11, 9, 5, 1, 2, 6, 10, 12, 8, 4});
  CHECK_THROWS_AS(mea::inverse_recursive(0), mea::size_too_small);

  for (std::size_t n = 1; n <= 400; ++n) {
    const auto p = mea::generate_naive(n);
    REQUIRE(mea::inverse_recursive(n).vector() == mea::testing::inverse_by_search(p.vector()));
  }
}

TEST_CASE("cycle_structure and order") {
  CHECK(mea::cycle_structure(Permutation::identity(4)) == Positions{1, 1, 1, 1});
  CHECK(mea::cycle_structure(Permutation{3, 1, 5, 2, 4}) == Positions{5});
  CHECK(mea::cycle_structure(Permutation{2, 1, 3}) == Positions{2, 1});
  CHECK(mea::cycle_structure(Permutation{}).empty());

  // Frozen from an independent cycle trace.
  CHECK(mea::cycle_structure(mea::generate_fast(10)) == Positions{7, 3});
  CHECK(mea::permutation_order(mea::generate_fast(10)) == 21);
  CHECK(mea::cycle_structure(mea::generate_fast(100)) == Positions{43, 36, 11, 5, 3, 2});
  CHECK(mea::permutation_order(mea::generate_fast(100)) == 85140);
  CHECK(mea::permutation_order(Permutation{}) == 1);

  // Order really is the least power giving the identity.
  for (std::size_t n = 1; n <= 30; ++n) {
    const auto p = mea::generate_fast(n);
    const auto order = mea::permutation_order(p);
    auto power = p;
    mea::big_int k = 1;
    while (power != Permutation::identity(n)) {
      power = mea::compose(p, power);
      ++k;
    }
    CHECK(k == order);
  }
}

TEST_CASE("order exceeds 64 bits without overflow") {
  // Disjoint cycles of the first 20 primes: lcm is their product (~5.6e26).
  const std::vector<mea::size_type> primes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                              31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  mea::big_int product = 1;
  for (auto q : primes) product *= q;
  CHECK(mea::permutation_order(primes) == product);
  CHECK(product > mea::big_int(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("compute_stats bundles consistent values") {
  const auto r = mea::compute_stats(mea::generate_fast(5));
  CHECK(r.n == 5);
  CHECK(r.inversions == 4);
  CHECK(r.descent_set == Positions{1, 3});
  CHECK(r.sign == 1);
  CHECK(r.alternation == AlternationType::down_up);
  CHECK(r.cycle_type == Positions{5});
  CHECK(r.order == 5);

  for (std::size_t n = 1; n <= 200; ++n) {
    const auto s = mea::compute_stats(mea::generate_fast(n));
    CHECK(s.sign == (s.inversions % 2 == 0 ? 1 : -1));
    CHECK(std::accumulate(s.cycle_type.begin(), s.cycle_type.end(), mea::size_type{0}) == n);
  }
}

TEST_CASE("rank shifts preserve alternation of the tail") {
  for (std::size_t n = 5; n <= 300; ++n) {
    const auto d = mea::decompose(n);
    const auto child = mea::generate_fast(d.child_n);
    std::vector<mea::value_type> shifted;
    for (auto r : child) shifted.push_back(d.shift_map(r));
    CHECK(mea::classify_alternation(std::span<const mea::value_type>(shifted)) ==
          mea::classify_alternation(child));
    CHECK(mea::testing::inversions_by_pairs(shifted) == mea::inversion_count(child));
  }
}
