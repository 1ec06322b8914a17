#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "tiltfactor/character.hpp"

using namespace tiltfactor;
using testutil::bf_convolve;
using testutil::bf_dominant_part;
using testutil::bf_expand;
using testutil::dominant_entries;

namespace {

Character random_character(std::mt19937& rng, const RootDatum& d, int keys, int max_coord) {
  TermMap m{WeightOrder(d)};
  std::uniform_int_distribution<int> mult(1, 3);
  for (int i = 0; i < keys; ++i) m[testutil::random_dominant(rng, d.rank(), max_coord)] += mult(rng);
  return Character::from_entries(d, std::move(m));
}

}  // namespace

TEST_CASE("weyl characters, rank 1 string") {
  auto a1 = build_root_datum('A', 1);
  for (int m = 0; m <= 12; ++m) {
    auto c = weyl_character(a1, Weight({m}));
    std::map<std::vector<int>, BigInt> want;
    for (int k = m; k >= 0; k -= 2) want[{k}] = 1;
    CHECK(dominant_entries(c) == want);
  }
}

TEST_CASE("weyl characters, small fixtures") {
  auto a2 = build_root_datum('A', 2);
  auto adj = weyl_character(a2, Weight({1, 1}));
  std::map<std::vector<int>, BigInt> want{{{1, 1}, 1}, {{0, 0}, 2}};
  CHECK(dominant_entries(adj) == want);
  CHECK(dimension(adj) == 8);

  for (auto [t, n] : testutil::small_types(3)) {
    auto d = build_root_datum(t, n);
    auto triv = weyl_character(d, Weight::zero(n));
    CHECK(triv == Character::trivial(d));
  }
}

TEST_CASE("freudenthal total dimension matches the Weyl formula") {
  std::mt19937 rng(23);
  for (auto [t, n] : testutil::small_types(4)) {
    auto d = build_root_datum(t, n);
    for (int trial = 0; trial < 25; ++trial) {
      Weight w = testutil::random_dominant(rng, n, 3);
      CHECK(dimension(weyl_character(d, w)) == weyl_dimension(d, w));
    }
  }
}

TEST_CASE("orbit sums") {
  auto a2 = build_root_datum('A', 2);
  auto s = orbit_sum(a2, Weight({2, 1}));
  CHECK(s.entries().size() == 1);
  CHECK(s.multiplicity(Weight({2, 1})) == 1);
  CHECK(s.multiplicity(Weight({-1, -2})) == 1);  // w0-image of (2,1) hits the orbit
  CHECK(s.multiplicity(Weight({1, 1})) == 0);
  CHECK_THROWS_AS(orbit_sum(a2, Weight({-1, 0})), InvalidInput);

  // minuscule weights: single orbit, so the orbit sum is the full character
  CHECK(orbit_sum(a2, Weight({1, 0})) == weyl_character(a2, Weight({1, 0})));
  auto b3 = build_root_datum('B', 3);
  CHECK(orbit_sum(b3, Weight({0, 0, 1})) == weyl_character(b3, Weight({0, 0, 1})));
}

TEST_CASE("tensor product, rank 1 fixtures") {
  auto a1 = build_root_datum('A', 1);
  auto chi1 = weyl_character(a1, Weight({1}));
  auto prod = tensor_product(chi1, chi1);
  std::map<std::vector<int>, BigInt> want{{{2}, 1}, {{0}, 2}};
  CHECK(dominant_entries(prod) == want);

  // identity factor
  auto c = weyl_character(a1, Weight({5}));
  CHECK(tensor_product(c, Character::trivial(a1)) == c);

  // Steinberg times simple at p = 3
  auto st = weyl_character(a1, Weight({2}));
  auto stl = tensor_product(st, chi1);
  std::map<std::vector<int>, BigInt> want2{{{3}, 1}, {{1}, 2}};
  CHECK(dominant_entries(stl) == want2);
  CHECK(dimension(stl) == 6);
}

TEST_CASE("tensor product agrees with brute-force convolution") {
  std::mt19937 rng(29);
  for (auto [t, n] : testutil::small_types(3)) {
    auto d = build_root_datum(t, n);
    for (int trial = 0; trial < 10; ++trial) {
      auto a = random_character(rng, d, 2, 2);
      auto b = random_character(rng, d, 2, 2);
      auto got = tensor_product(a, b);
      auto want = bf_dominant_part(bf_convolve(bf_expand(a), bf_expand(b)));
      CHECK(dominant_entries(got) == want);
    }
  }
}

TEST_CASE("tensor product commutes and associates") {
  std::mt19937 rng(31);
  for (auto [t, n] : testutil::small_types(3)) {
    auto d = build_root_datum(t, n);
    for (int trial = 0; trial < 6; ++trial) {
      auto a = random_character(rng, d, 2, 2);
      auto b = random_character(rng, d, 2, 2);
      auto c = random_character(rng, d, 1, 2);
      CHECK(tensor_product(a, b) == tensor_product(b, a));
      CHECK(tensor_product(tensor_product(a, b), c) == tensor_product(a, tensor_product(b, c)));
    }
  }
}

TEST_CASE("tensor product guards") {
  auto a2 = build_root_datum('A', 2);
  auto b2 = build_root_datum('B', 2);
  CHECK_THROWS_AS(
      tensor_product(Character::trivial(a2), Character::trivial(b2)), InvalidInput);

  Budget tiny;
  tiny.convolution_limit = 10;
  auto big = weyl_character(a2, Weight({2, 2}));
  CHECK_THROWS_AS(tensor_product(big, big, tiny), BudgetExceeded);
  CHECK_THROWS_WITH(tensor_product(big, big, tiny), doctest::Contains("729"));
}

TEST_CASE("brauer product") {
  auto a1 = build_root_datum('A', 1);
  auto combo = WeylCombo::single(a1, Weight({2}));
  auto got = brauer_product(combo, Weight({1}));
  auto want = WeylCombo::from_terms(a1, [&] {
    TermMap m{WeightOrder(a1)};
    m.emplace(Weight({3}), 1);
    m.emplace(Weight({1}), 1);
    return m;
  }());
  CHECK(got == want);

  // orbit of 0 is {0}
  auto a2 = build_root_datum('A', 2);
  auto c2 = WeylCombo::single(a2, Weight({2, 1}));
  CHECK(brauer_product(c2, Weight({0, 0})) == c2);

  // chi(0) * s(1): the chi(-1) term is on a wall and drops
  auto c0 = WeylCombo::single(a1, Weight({0}));
  CHECK(brauer_product(c0, Weight({1})) == WeylCombo::single(a1, Weight({1})));
}

TEST_CASE("brauer product agrees with convolution against the orbit sum") {
  std::mt19937 rng(37);
  for (auto [t, n] : testutil::small_types(3)) {
    if (t == 'F' || t == 'G') continue;
    auto d = build_root_datum(t, n);
    for (int trial = 0; trial < 15; ++trial) {
      Weight lambda = testutil::random_dominant(rng, n, 2);
      Weight mu = testutil::random_dominant(rng, n, 2);
      auto via_brauer = brauer_product(WeylCombo::single(d, lambda), mu);
      auto via_conv =
          decompose_weyl(tensor_product(weyl_character(d, lambda), orbit_sum(d, mu)));
      CHECK(via_brauer == via_conv);
    }
  }
}

TEST_CASE("decompose_weyl") {
  auto a2 = build_root_datum('A', 2);
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    Weight w = testutil::random_dominant(rng, 2, 4);
    CHECK(decompose_weyl(weyl_character(a2, w)) == WeylCombo::single(a2, w));
  }

  auto a1 = build_root_datum('A', 1);
  auto chi1 = weyl_character(a1, Weight({1}));
  auto cg = decompose_weyl(tensor_product(chi1, chi1));
  TermMap m{WeightOrder(a1)};
  m.emplace(Weight({2}), 1);
  m.emplace(Weight({0}), 1);
  CHECK(cg == WeylCombo::from_terms(a1, std::move(m)));

  // chi(2,0) * chi(1,0) = chi(3,0) + chi(1,1), dimensions 6*3 = 10 + 8
  auto prod = tensor_product(weyl_character(a2, Weight({2, 0})), weyl_character(a2, Weight({1, 0})));
  TermMap m2{WeightOrder(a2)};
  m2.emplace(Weight({3, 0}), 1);
  m2.emplace(Weight({1, 1}), 1);
  CHECK(decompose_weyl(prod) == WeylCombo::from_terms(a2, std::move(m2)));
  CHECK(dimension(prod) == 18);
}

TEST_CASE("realize inverts decompose_weyl") {
  std::mt19937 rng(43);
  for (auto [t, n] : testutil::small_types(3)) {
    auto d = build_root_datum(t, n);
    for (int trial = 0; trial < 8; ++trial) {
      TermMap m{WeightOrder(d)};
      std::uniform_int_distribution<int> coeff(1, 3);
      for (int k = 0; k < 3; ++k) m[testutil::random_dominant(rng, n, 2)] += coeff(rng);
      auto combo = WeylCombo::from_terms(d, std::move(m));
      CHECK(decompose_weyl(realize(combo)) == combo);
    }
  }

  auto a1 = build_root_datum('A', 1);
  TermMap neg{WeightOrder(a1)};
  neg.emplace(Weight({2}), -1);
  CHECK_THROWS_AS(realize(WeylCombo::from_terms(a1, std::move(neg))), InvalidInput);
}

TEST_CASE("tensor decompositions of Weyl characters are nonnegative") {
  std::mt19937 rng(47);
  for (auto [t, n] : testutil::small_types(3)) {
    auto d = build_root_datum(t, n);
    for (int trial = 0; trial < 8; ++trial) {
      Weight a = testutil::random_dominant(rng, n, 2);
      Weight b = testutil::random_dominant(rng, n, 2);
      auto combo =
          decompose_weyl(tensor_product(weyl_character(d, a), weyl_character(d, b)));
      CHECK(combo.all_nonnegative());
    }
  }
}

TEST_CASE("frobenius twist") {
  auto a1 = build_root_datum('A', 1);
  auto chi1 = weyl_character(a1, Weight({1}));
  CHECK(frobenius_twist(chi1, 1) == chi1);
  auto tw = frobenius_twist(chi1, 2);
  CHECK(tw.entries().size() == 1);
  CHECK(tw.multiplicity(Weight({2})) == 1);
  CHECK_THROWS_AS(frobenius_twist(chi1, 0), InvalidInput);

  std::mt19937 rng(53);
  for (auto [t, n] : testutil::small_types(3)) {
    auto d = build_root_datum(t, n);
    for (int trial = 0; trial < 5; ++trial) {
      auto c = random_character(rng, d, 2, 2);
      CHECK(dimension(frobenius_twist(c, 3)) == dimension(c));
    }
  }
}

TEST_CASE("dimension is multiplicative") {
  std::mt19937 rng(59);
  auto b3 = build_root_datum('B', 3);
  CHECK(dimension(weyl_character(b3, Weight({0, 0, 1}))) == 8);
  auto a2 = build_root_datum('A', 2);
  CHECK(dimension(Character::trivial(a2)) == 1);
  CHECK(dimension(weyl_character(a2, Weight({1, 1}))) == 8);  // Steinberg at p = 2

  for (auto [t, n] : testutil::small_types(3)) {
    auto d = build_root_datum(t, n);
    for (int trial = 0; trial < 5; ++trial) {
      auto a = random_character(rng, d, 2, 2);
      auto b = random_character(rng, d, 2, 2);
      CHECK(dimension(tensor_product(a, b)) == dimension(a) * dimension(b));
    }
  }
}

TEST_CASE("character entries validate") {
  auto a2 = build_root_datum('A', 2);
  TermMap bad{WeightOrder(a2)};
  bad.emplace(Weight({-1, 0}), 1);
  CHECK_THROWS_AS(Character::from_entries(a2, std::move(bad)), InvalidInput);

  TermMap neg{WeightOrder(a2)};
  neg.emplace(Weight({1, 0}), -2);
  CHECK_THROWS_AS(Character::from_entries(a2, std::move(neg)), InvalidInput);
}
