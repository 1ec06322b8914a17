#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "tiltfactor/modular.hpp"

using namespace tiltfactor;
using testutil::dominant_entries;

TEST_CASE("prime context") {
  auto a2 = build_root_datum('A', 2);
  CHECK_THROWS_AS(PrimeContext(a2, 4), InvalidInput);
  CHECK_THROWS_AS(PrimeContext(a2, 1), InvalidInput);
  CHECK_THROWS_AS(PrimeContext(a2, -3), InvalidInput);

  PrimeContext p3(a2, 3);
  CHECK(p3.two_h_minus_2() == 4);
  CHECK(p3.donkin_assumed());
  CHECK(!PrimeContext(a2, 5).donkin_assumed());

  auto a1 = build_root_datum('A', 1);
  CHECK(!PrimeContext(a1, 2).donkin_assumed());
}

TEST_CASE("restricted region") {
  auto a1 = build_root_datum('A', 1);
  PrimeContext ctx(a1, 2);
  CHECK(is_restricted(ctx, 1, Weight({1})));
  CHECK(!is_restricted(ctx, 1, Weight({2})));
  CHECK(is_restricted(ctx, 2, Weight({3})));

  auto b2 = build_root_datum('B', 2);
  for (int p : {2, 3, 5}) {
    PrimeContext c(b2, p);
    for (int r : {1, 2}) CHECK(is_restricted(c, r, steinberg_weight(c, r)));
  }
  CHECK_THROWS_AS(is_restricted(ctx, 1, Weight({-1})), InvalidInput);
}

TEST_CASE("p-adic expansion") {
  auto a1 = build_root_datum('A', 1);
  PrimeContext p2(a1, 2);
  auto e = p_expand(p2, Weight({5}));
  CHECK(e.digits == std::vector<Weight>{Weight({1}), Weight({0}), Weight({1})});

  auto a2 = build_root_datum('A', 2);
  PrimeContext p3(a2, 3);
  auto e2 = p_expand(p3, Weight({4, 1}));
  CHECK(e2.digits == std::vector<Weight>{Weight({1, 1}), Weight({1, 0})});

  // restricted weights expand to a single digit
  auto e3 = p_expand(p3, Weight({2, 1}));
  CHECK(e3.digits.size() == 1);

  std::mt19937 rng(61);
  for (auto [t, n] : testutil::small_types(4)) {
    auto d = build_root_datum(t, n);
    for (int p : {2, 3, 5}) {
      PrimeContext ctx(d, p);
      for (int trial = 0; trial < 80; ++trial) {
        Weight w = testutil::random_dominant(rng, n, 60);
        auto exp = p_expand(ctx, w);
        for (const auto& digit : exp.digits) CHECK(is_restricted(ctx, 1, digit));
        CHECK(p_contract(ctx, exp) == w);
      }
    }
  }
}

TEST_CASE("minuscule classification") {
  auto a3 = build_root_datum('A', 3);
  CHECK(minuscule_weights(a3) ==
        std::vector<Weight>{Weight({1, 0, 0}), Weight({0, 1, 0}), Weight({0, 0, 1})});
  CHECK(minuscule_weights(build_root_datum('E', 8)).empty());
  CHECK(minuscule_weights(build_root_datum('F', 4)).empty());
  CHECK(minuscule_weights(build_root_datum('G', 2)).empty());
  auto d4 = build_root_datum('D', 4);
  CHECK(minuscule_weights(d4) ==
        std::vector<Weight>{Weight({1, 0, 0, 0}), Weight({0, 0, 1, 0}), Weight({0, 0, 0, 1})});

  std::vector<std::pair<char, int>> table_types = {{'A', 1}, {'A', 4}, {'B', 3}, {'C', 3},
                                                   {'D', 4}, {'E', 6}, {'E', 7}};
  for (auto [t, n] : table_types) {
    auto d = build_root_datum(t, n);
    for (const Weight& m : minuscule_weights(d)) {
      // restricted for every p: all coordinates at most 1
      for (int i = 0; i < n; ++i) CHECK(m[i] <= 1);
      // single Weyl orbit: the full character is the orbit sum
      CHECK(weyl_character(d, m) == orbit_sum(d, m));
      // pairing with the highest short coroot is exactly 1
      CHECK(pairing(d.highest_short_root_coroot(), m) == 1);
    }
  }
}

TEST_CASE("r-minuscule witnesses") {
  auto a1 = build_root_datum('A', 1);
  PrimeContext p2(a1, 2);
  auto w = is_r_minuscule(p2, 2, Weight({3}));
  CHECK(w.ok);
  CHECK(w.digits == std::vector<Weight>{Weight({1}), Weight({1})});

  auto a2 = build_root_datum('A', 2);
  PrimeContext p3(a2, 3);
  CHECK(!is_r_minuscule(p3, 2, Weight({4, 1})).ok);  // digit (1,1) is not minuscule
  CHECK(is_r_minuscule(p3, 2, Weight({0, 0})).ok);
  CHECK(is_r_minuscule(p3, 0, Weight({0, 0})).ok);
  CHECK(!is_r_minuscule(p3, 1, Weight({3, 0})).ok);  // needs two digits
  CHECK(is_r_minuscule(p3, 2, Weight({3, 0})).ok);   // digits (0,0), (1,0)
}

TEST_CASE("steinberg weights") {
  auto a1 = build_root_datum('A', 1);
  CHECK(steinberg_weight(PrimeContext(a1, 2), 2) == Weight({3}));
  auto a2 = build_root_datum('A', 2);
  CHECK(steinberg_weight(PrimeContext(a2, 3), 1) == Weight({2, 2}));

  for (auto [t, n] : {std::pair{'A', 1}, {'A', 2}, {'B', 2}}) {
    auto d = build_root_datum(t, n);
    const auto N = static_cast<unsigned long>(d.positive_roots().size());
    for (int p : {2, 3}) {
      PrimeContext ctx(d, p);
      for (int r : {1, 2}) {
        CHECK(weyl_dimension(d, steinberg_weight(ctx, r)) ==
              big_pow(p, static_cast<unsigned long>(r) * N));
      }
    }
  }
}

TEST_CASE("simple characters") {
  auto a2 = build_root_datum('A', 2);
  PrimeContext p3(a2, 3);
  for (const Weight& m : minuscule_weights(a2))
    CHECK(simple_character(p3, m) == weyl_character(a2, m));

  auto a1 = build_root_datum('A', 1);
  PrimeContext p2(a1, 2);
  auto l3 = simple_character(p2, Weight({3}));
  std::map<std::vector<int>, BigInt> want{{{3}, 1}, {{1}, 1}};
  CHECK(dominant_entries(l3) == want);

  CHECK(simple_character(p3, Weight({2, 2})) == weyl_character(a2, Weight({2, 2})));
  CHECK(dimension(simple_character(p3, Weight({2, 2}))) == 27);

  // digit (1,1) is out of oracle at p = 3
  CHECK_THROWS_AS(simple_character(p3, Weight({1, 1})), CoverageError);
  CHECK_THROWS_WITH(simple_character(p3, Weight({1, 1})), doctest::Contains("digit 0"));
  CHECK_THROWS_WITH(simple_character(p3, Weight({3, 3})), doctest::Contains("digit 1"));

  // in type A1 every restricted digit is covered
  PrimeContext p5(a1, 5);
  CHECK(simple_character(p5, Weight({3})) == weyl_character(a1, Weight({3})));
  CHECK(dominant_entries(simple_character(p5, Weight({13}))) ==
        testutil::bf_dominant_part(testutil::bf_convolve(
            testutil::bf_expand(weyl_character(a1, Weight({3}))),
            testutil::bf_expand(frobenius_twist(weyl_character(a1, Weight({2})), 5)))));
}

TEST_CASE("steinberg tensor factorization of simple characters") {
  // L(lambda) = product of twisted digit characters; dimensions multiply.
  auto a1 = build_root_datum('A', 1);
  PrimeContext p2(a1, 2);
  for (int m : {1, 3, 5, 7, 11}) {
    auto c = simple_character(p2, Weight({m}));
    BigInt dim = 1;
    for (const Weight& d : p_expand(p2, Weight({m})).digits)
      dim *= weyl_dimension(a1, d);
    CHECK(dimension(c) == dim);
  }
}

TEST_CASE("tilting characters, covered forms") {
  auto a1 = build_root_datum('A', 1);
  PrimeContext p3(a1, 3);
  auto t3 = decompose_weyl(tilting_character(p3, Weight({3})));
  TermMap m{WeightOrder(a1)};
  m.emplace(Weight({3}), 1);
  m.emplace(Weight({1}), 1);
  CHECK(t3 == WeylCombo::from_terms(a1, std::move(m)));

  PrimeContext p2(a1, 2);
  auto t4 = decompose_weyl(tilting_character(p2, Weight({4})));
  TermMap m2{WeightOrder(a1)};
  m2.emplace(Weight({4}), 1);
  m2.emplace(Weight({2}), 1);
  CHECK(t4 == WeylCombo::from_terms(a1, std::move(m2)));

  // T((p^r - 1) rho) is the Steinberg character
  for (auto [t, n] : {std::pair{'A', 1}, {'A', 2}, {'B', 2}}) {
    auto d = build_root_datum(t, n);
    for (int p : {2, 3}) {
      PrimeContext ctx(d, p);
      for (int r : {1, 2}) {
        CHECK(tilting_character(ctx, steinberg_weight(ctx, r)) ==
              weyl_character(d, steinberg_weight(ctx, r)));
      }
    }
  }

  // minuscule weights are simple tilting
  auto a2 = build_root_datum('A', 2);
  PrimeContext a2p3(a2, 3);
  CHECK(tilting_character(a2p3, Weight({1, 0})) == weyl_character(a2, Weight({1, 0})));
}

TEST_CASE("tilting characters, uncovered forms are rejected") {
  auto a1 = build_root_datum('A', 1);
  PrimeContext p3(a1, 3);
  CHECK(!tilting_covered(p3, Weight({4})));
  CHECK_THROWS_AS(tilting_character(p3, Weight({4})), CoverageError);

  auto a2 = build_root_datum('A', 2);
  PrimeContext a2p3(a2, 3);
  CHECK(!tilting_covered(a2p3, Weight({1, 1})));
  CHECK_THROWS_AS(tilting_character(a2p3, Weight({1, 1})), CoverageError);
}

TEST_CASE("rank-1 recursion fixtures") {
  auto a1 = build_root_datum('A', 1);
  PrimeContext p2(a1, 2);
  CHECK(a1_tilting_character(p2, 1) == weyl_character(a1, Weight({1})));
  auto t2 = a1_tilting_character(p2, 2);
  std::map<std::vector<int>, BigInt> want{{{2}, 1}, {{0}, 2}};
  CHECK(dominant_entries(t2) == want);
  CHECK(dimension(t2) == 4);

  auto t4 = a1_tilting_character(p2, 4);
  CHECK(t4 == tilting_character(p2, Weight({4})));

  auto a2 = build_root_datum('A', 2);
  CHECK_THROWS_AS(a1_tilting_character(PrimeContext(a2, 2), 1), InvalidInput);
  CHECK_THROWS_AS(a1_tilting_character(p2, -1), InvalidInput);
}

TEST_CASE("the two tilting routes agree on the covered region") {
  auto a1 = build_root_datum('A', 1);
  for (int p : {2, 3, 5}) {
    PrimeContext ctx(a1, p);
    int covered = 0;
    for (int m = 0; m <= 60; ++m) {
      if (!tilting_covered(ctx, Weight({m}))) continue;
      ++covered;
      CHECK(tilting_character(ctx, Weight({m})) == a1_tilting_character(ctx, m));
    }
    CHECK(covered > 10);
  }
  // at p = 2 the covered region is everything
  PrimeContext p2(a1, 2);
  for (int m = 0; m <= 60; ++m) CHECK(tilting_covered(p2, Weight({m})));
}
