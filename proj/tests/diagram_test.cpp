#include "kbracket/diagram.hpp"

#include "fixtures.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kbracket;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, int>> terms) {
  std::vector<std::pair<int, Integer>> v;
  for (auto [d, c] : terms) v.emplace_back(d, c);
  return LaurentPoly::from_terms(v);
}

std::vector<Diagram> corpus(int count, int max_crossings, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, max_crossings), circles(1, 4);
  std::vector<Diagram> out;
  for (int i = 0; i < count; ++i) out.push_back(to_diagram(random_planar_chord_diagram(rng, size(rng), circles(rng))));
  return out;
}

}  // namespace

TEST(Diagram, ValidationRejectsBadInput) {
  EXPECT_THROW(Diagram({{Pairing::P01_23, Pairing::P01_23}}, {1, 0, 3, 2}, 0), std::invalid_argument);
  EXPECT_THROW(Diagram({{Pairing::P01_23, Pairing::P03_12}}, {0, 2, 1, 3}, 0), std::invalid_argument);
  EXPECT_THROW(Diagram({}, {}, -1), std::invalid_argument);
}

TEST(Diagram, Components) {
  EXPECT_EQ(components(fixtures::unknot(), State{}), 1);
  const Diagram t = fixtures::trefoil();
  EXPECT_EQ(components(t, State::all_a(3)), 2);
  EXPECT_EQ(components(t, State::all_b(3)), 3);
  EXPECT_EQ(link_components(t), 1);
}

TEST(Diagram, BracketExamples) {
  EXPECT_EQ(bracket(fixtures::unknot()), LaurentPoly::constant(1));
  EXPECT_EQ(bracket(fixtures::kink()), poly({{3, -1}}));
  EXPECT_EQ(bracket(fixtures::trefoil()), poly({{5, -1}, {-3, -1}, {-7, 1}}));
  EXPECT_EQ(bracket(mirror(fixtures::trefoil())), poly({{-5, -1}, {3, -1}, {7, 1}}));
}

TEST(Diagram, ExtremeDegrees) {
  const auto e = extreme_degrees(fixtures::trefoil());
  EXPECT_EQ(e.m, -7);
  EXPECT_EQ(e.M, 5);
  const auto u = extreme_degrees(fixtures::unknot());
  EXPECT_EQ(u.m, 0);
  EXPECT_EQ(u.M, 0);
  const auto mirrored = extreme_degrees(mirror(fixtures::trefoil()));
  EXPECT_EQ(mirrored.m, -e.M);
  EXPECT_EQ(mirrored.M, -e.m);
}

TEST(Diagram, GammaStatesOfTrefoil) {
  // Oracle: filter all 8 states by |s| = |s_A| + b(s).
  const Diagram t = fixtures::trefoil();
  std::vector<State> expected;
  for (std::uint64_t mask = 0; mask < 8; ++mask)
    if (oracle::circles(t, mask) == 2 + __builtin_popcountll(mask)) expected.push_back(State::from_mask(3, mask));
  ASSERT_EQ(expected.size(), 1u);
  EXPECT_EQ(gamma_states(t, Side::A), expected);
  const auto gb = gamma_states(t, Side::B);
  ASSERT_FALSE(gb.empty());
  EXPECT_EQ(gb.front(), State::all_b(3));
}

TEST(Diagram, ExtremeAndSecondCoefficientsOfTrefoil) {
  const Diagram t = fixtures::trefoil();
  const auto ec = extreme_coeffs(t);
  EXPECT_EQ(ec.a_m, 1);
  EXPECT_EQ(ec.a_M, -1);
  const auto sc = second_coeffs(t);
  EXPECT_EQ(sc.a_M_minus_4, 0);
  EXPECT_EQ(sc.a_m_plus_4, -1);
}

TEST(Diagram, EnumerationLimit) {
  std::mt19937_64 rng(3);
  const Diagram big = to_diagram(random_chord_diagram(rng, 25, 2));
  EXPECT_THROW(bracket(big), EnumerationLimitError);
  EXPECT_THROW(check_enumerable(big, {.limit = 31, .workers = 1}), std::invalid_argument);
}

TEST(Diagram, BracketMatchesOracleOnCorpus) {
  for (const Diagram& d : corpus(40, 10, 11)) {
    const LaurentPoly p = bracket(d);
    EXPECT_EQ(oracle::as_map(p), oracle::bracket(d));
  }
}

TEST(Diagram, CorpusProperties) {
  std::mt19937_64 rng(5);
  for (const Diagram& d : corpus(60, 12, 13)) {
    const LaurentPoly p = bracket(d);
    const auto e = extreme_degrees(d);
    ASSERT_FALSE(p.is_zero());
    for (const auto& [deg, c] : p.terms()) {
      EXPECT_EQ(((deg - e.M) % 4 + 4) % 4, 0);
      EXPECT_GE(deg, e.m);
      EXPECT_LE(deg, e.M);
    }
    EXPECT_EQ(bracket(mirror(d)), p.inverted());
    EXPECT_EQ(bracket(d.with_free_circles(d.free_circles() + 1)), p * delta_pow(1));
    const auto ec = extreme_coeffs(d);
    EXPECT_EQ(ec.a_m, p.coeff(e.m));
    EXPECT_EQ(ec.a_M, p.coeff(e.M));
    EXPECT_EQ(extreme_coeffs_by_states(d).a_M, ec.a_M);
    const auto sc = second_coeffs(d);
    EXPECT_EQ(sc.a_m_plus_4, p.coeff(e.m + 4));
    EXPECT_EQ(sc.a_M_minus_4, p.coeff(e.M - 4));
    const int n = d.crossing_count();
    std::uniform_int_distribution<std::uint64_t> state(0, (std::uint64_t{1} << n) - 1);
    for (int k = 0; k < 10; ++k) {
      const State s = State::from_mask(n, state(rng));
      State t = s;
      t.flip(static_cast<int>(rng() % n));
      EXPECT_EQ(std::abs(components(d, s) - components(d, t)), 1);
    }
  }
}

TEST(Diagram, WorkerCountDoesNotChangeResult) {
  for (const Diagram& d : corpus(10, 14, 17)) {
    const auto one = state_histogram(d, {.limit = 24, .workers = 1});
    const auto many = state_histogram(d, {.limit = 24, .workers = 4});
    EXPECT_EQ(one.counts, many.counts);
  }
}

TEST(Diagram, MirrorIsInvolution) {
  const Diagram t = fixtures::trefoil();
  EXPECT_EQ(mirror(mirror(t)), t);
}

TEST(Diagram, Planarity) {
  EXPECT_TRUE(is_planar(fixtures::trefoil()));
  EXPECT_TRUE(is_planar(fixtures::unknot()));
  // Three pairwise interleaved chords on one circle: odd interlacement cycle.
  const ChordDiagram odd{{{0, 2, 4, 1, 3, 5}}, {{0, 1}, {2, 3}, {4, 5}}};
  EXPECT_FALSE(is_planar(to_diagram(odd)));
}
