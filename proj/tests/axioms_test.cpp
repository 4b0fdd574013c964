#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <vector>

#include "ccsys/axioms.hpp"
#include "ccsys/enumeration.hpp"
#include "ccsys/triple_core.hpp"
#include "oracles.hpp"

using namespace ccsys;

namespace {

// Assigns the given true ordered triples, then fills the rest with +.
PartialTripleSystem system_with(int n, std::initializer_list<OrientedTriple> truths) {
  PartialTripleSystem s(n);
  for (const auto& t : truths) s.set(t, true);
  for (const auto& c : canonical_triples(n))
    if (!s.value_of({c.i, c.j, c.k})) s.set({c.i, c.j, c.k}, true);
  return s;
}

// tsp tsq tsr tpq tqr trp with (t, s, p, q, r) = (0, 1, 2, 3, 4).
PartialTripleSystem axiom5_violator() {
  return system_with(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 3, 4}, {0, 4, 2}});
}

PartialTripleSystem relabel(const PartialTripleSystem& s, const std::vector<Point>& pi) {
  PartialTripleSystem out(s.size());
  for (const auto& c : canonical_triples(s.size()))
    out.set({pi[c.i], pi[c.j], pi[c.k]}, *s.value_of({c.i, c.j, c.k}));
  return out;
}

// Rotates the trailing (p, q, r) roles so that p is smallest.
std::vector<Point> normalize_rotation(std::vector<Point> w) {
  const auto base = w.size() - 3;
  while (!(w[base] < w[base + 1] && w[base] < w[base + 2]))
    std::rotate(w.begin() + base, w.begin() + base + 1, w.end());
  return w;
}

}  // namespace

TEST(Axioms, VacuousOnSmallGroundSets) {
  for (int n = 3; n <= 4; ++n)
    for (const auto& s : enumerate_complete(n)) {
      if (n == 3) {
        EXPECT_TRUE(check_axiom4(s).empty());
      }
      EXPECT_TRUE(check_axiom5(s).empty());
      EXPECT_TRUE(check_axiom5prime(s).empty());
      EXPECT_TRUE(check_gpr(s).empty());
    }
}

TEST(Axioms, IncompleteSystemRejected) {
  const auto s = random_partial(5, 0.5, 7);
  ASSERT_FALSE(s.complete());
  EXPECT_THROW(check_axiom4(s), IncompleteSystem);
  EXPECT_THROW(check_axiom5(s), IncompleteSystem);
  EXPECT_THROW(check_axiom5prime(s), IncompleteSystem);
  EXPECT_THROW(check_gpr(s), IncompleteSystem);
  EXPECT_THROW(classify(s), IncompleteSystem);
}

TEST(Axiom4, TriangleWithInteriorPointSatisfies) {
  const std::vector<Point2<std::int64_t>> pts{{0, 0}, {9, 0}, {0, 9}, {3, 3}};
  EXPECT_TRUE(check_axiom4(from_points(pts)).empty());
}

TEST(Axiom4, ConstructedViolationReportsThatWitness) {
  // (t, p, q, r) = (3, 0, 1, 2): tqr, ptr, pqt true and pqr false.
  PartialTripleSystem s(4);
  s.set({3, 1, 2}, true);
  s.set({0, 3, 2}, true);
  s.set({0, 1, 3}, true);
  s.set({0, 1, 2}, false);
  const auto v = check_axiom4(s);
  const AxiomViolation want{Axiom::A4, {3, 0, 1, 2}};
  ASSERT_EQ(std::count(v.begin(), v.end(), want), 1);
  EXPECT_EQ(to_string(want), "A4 t=3 p=0 q=1 r=2");
  // The direct loop finds every point of this system acting as t, so the
  // constructed witness is one of four rotation classes.
  std::set<std::vector<Point>> expected;
  for (const auto& f : oracle::axiom4_failures(oracle::TripleMap(s), 4))
    expected.insert(normalize_rotation({f.begin(), f.end()}));
  std::set<std::vector<Point>> got;
  for (const auto& r : v) got.insert(r.witness);
  EXPECT_EQ(got, expected);
  EXPECT_EQ(v.size(), 4u);
}

TEST(Axiom4, AllFourPointSystemsAgreeWithDirectLoop) {
  for (const auto& s : enumerate_complete(4)) {
    const oracle::TripleMap v(s);
    const auto direct = oracle::axiom4_failures(v, 4);
    const auto reported = check_axiom4(s);
    EXPECT_EQ(reported.empty(), direct.empty());
    // Reported witnesses are exactly the rotation-normalized direct failures.
    std::set<std::vector<Point>> expected;
    for (const auto& f : direct) expected.insert(normalize_rotation({f.begin(), f.end()}));
    std::set<std::vector<Point>> got;
    for (const auto& r : reported) got.insert(r.witness);
    EXPECT_EQ(got, expected);
    EXPECT_EQ(got.size(), reported.size());
  }
}

TEST(Axiom5, PremisePatternIsViolation) {
  const auto s = axiom5_violator();
  const auto v = check_axiom5(s);
  ASSERT_FALSE(v.empty());
  EXPECT_NE(std::find(v.begin(), v.end(), AxiomViolation{Axiom::A5, {0, 1, 2, 3, 4}}), v.end());
  EXPECT_EQ(to_string(AxiomViolation{Axiom::A5, {3, 4, 0, 1, 2}}), "A5 t=3 s=4 p=0 q=1 r=2");
}

TEST(Axiom5, DualityExhaustiveOnFivePoints) {
  std::size_t holds = 0;
  for (const auto& s : enumerate_complete(5)) {
    const bool a5 = check_axiom5(s).empty();
    EXPECT_EQ(a5, check_axiom5prime(s).empty());
    holds += a5;
  }
  EXPECT_GT(holds, 0u);
  EXPECT_LT(holds, 1024u);
}

TEST(Axioms, WitnessesReproduceUnderOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto s = random_partial(6, 1.0, seed);
    const oracle::TripleMap v(s);
    for (const auto& w : check_axiom4(s)) {
      const auto& x = w.witness;
      EXPECT_TRUE(v(x[0], x[2], x[3]) && v(x[1], x[0], x[3]) && v(x[1], x[2], x[0]) &&
                  !v(x[1], x[2], x[3]));
    }
    for (const auto& w : check_axiom5(s)) {
      const auto& x = w.witness;  // t s p q r
      EXPECT_TRUE(v(x[0], x[1], x[2]) && v(x[0], x[1], x[3]) && v(x[0], x[1], x[4]) &&
                  v(x[0], x[2], x[3]) && v(x[0], x[3], x[4]) && !v(x[0], x[2], x[4]));
    }
    for (const auto& w : check_axiom5prime(s)) {
      const auto& x = w.witness;
      EXPECT_TRUE(v(x[0], x[2], x[1]) && v(x[0], x[3], x[1]) && v(x[0], x[4], x[1]) &&
                  v(x[0], x[2], x[3]) && v(x[0], x[3], x[4]) && !v(x[0], x[2], x[4]));
    }
    for (const auto& w : check_gpr(s)) {
      const auto& x = w.witness;
      const auto g = oracle::gpr(v, x[0], x[1], x[2], x[3], x[4]);
      EXPECT_TRUE(g[0] == g[1] && g[1] == g[2]);
    }
  }
}

TEST(Gpr, ProofCaseValues) {
  // (t, p, q, r, s) = (0, 1, 2, 3, 4)
  // case (a): tpq trs trp tqs tps tqr
  const auto a = system_with(5, {{0, 1, 2}, {0, 3, 4}, {0, 3, 1}, {0, 2, 4}, {0, 1, 4}, {0, 2, 3}});
  EXPECT_EQ(gpr_values(a, 0, 1, 2, 3, 4), (std::array<bool, 3>{true, true, true}));
  // case (b): tpq tsr trp tsq tsp tqr
  const auto b = system_with(5, {{0, 1, 2}, {0, 4, 3}, {0, 3, 1}, {0, 4, 2}, {0, 4, 1}, {0, 2, 3}});
  EXPECT_EQ(gpr_values(b, 0, 1, 2, 3, 4), (std::array<bool, 3>{false, false, false}));
}

TEST(Gpr, OnlyNeedsTriplesThroughT) {
  PartialTripleSystem s(5);
  for (const auto& c : canonical_triples(5))
    if (c.i == 0) s.set({c.i, c.j, c.k}, true);
  EXPECT_NO_THROW(gpr_values(s, 0, 1, 2, 3, 4));
  EXPECT_THROW(gpr_values(s, 1, 0, 2, 3, 4), IncompleteSystem);
  EXPECT_THROW(gpr_values(s, 0, 1, 1, 3, 4), InvalidTriple);
}

TEST(Gpr, RealizedPointsGiveMixedValues) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto pts = random_general_position(5, seed);
    const auto s = from_points(pts);
    std::array<Point, 5> perm{0, 1, 2, 3, 4};
    do {
      const auto g = gpr_values(s, perm[0], perm[1], perm[2], perm[3], perm[4]);
      EXPECT_FALSE(g[0] == g[1] && g[1] == g[2]);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(Gpr, AxiomFiveViolatorFailsRelations) {
  const auto s = axiom5_violator();
  EXPECT_FALSE(check_gpr(s).empty());
  EXPECT_EQ(gpr_values(s, 0, 2, 3, 4, 1), (std::array<bool, 3>{false, false, false}));
}

TEST(Gpr, VerdictIndependentOfOrderWithinFourSet) {
  // Witness deduplication per (t, {p, q, r, s}) relies on this.
  for (const auto& s : enumerate_complete(5)) {
    const oracle::TripleMap v(s);
    for (Point t = 0; t < 5; ++t) {
      std::array<Point, 4> perm{};
      int k = 0;
      for (Point x = 0; x < 5; ++x)
        if (x != t) perm[k++] = x;
      std::set<bool> verdicts;
      do {
        const auto g = oracle::gpr(v, t, perm[0], perm[1], perm[2], perm[3]);
        verdicts.insert(g[0] == g[1] && g[1] == g[2]);
      } while (std::next_permutation(perm.begin(), perm.end()));
      EXPECT_EQ(verdicts.size(), 1u);
    }
  }
}

TEST(ChirotopeEquivalence, ExhaustiveOnFivePoints) {
  std::size_t agree = 0;
  for (const auto& s : enumerate_complete(5)) {
    const bool a5 = check_axiom5(s).empty();
    const bool gpr = check_gpr(s).empty();
    EXPECT_EQ(a5, gpr);
    // Plain-loop oracles agree with the module checkers.
    const oracle::TripleMap v(s);
    EXPECT_EQ(a5, oracle::axiom5_holds(v, 5));
    EXPECT_EQ(gpr, oracle::gpr_holds(v, 5));
    EXPECT_EQ(check_axiom5prime(s).empty(), oracle::axiom5prime_holds(v, 5));
    EXPECT_EQ(check_axiom4(s).empty(), oracle::axiom4_holds(v, 5));
    agree += a5 == gpr;
  }
  EXPECT_EQ(agree, 1024u);
}

TEST(Classify, Examples) {
  for (const auto& s : enumerate_complete(3)) EXPECT_TRUE(classify(s).is_cc);

  const auto violator = classify(axiom5_violator());
  EXPECT_FALSE(violator.is_pre_cc);
  EXPECT_FALSE(violator.is_chirotope);
  EXPECT_FALSE(violator.is_cc);
}

TEST(Classify, RealizableSystemsHaveAllFlags) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 5 + static_cast<int>(seed % 3);
    const auto c = classify(from_points(random_general_position(n, seed)));
    EXPECT_TRUE(c.a4_ok && c.a5_ok && c.a5p_ok && c.gpr_ok);
    EXPECT_TRUE(c.is_cc && c.is_pre_cc && c.is_chirotope);
  }
}

TEST(Classify, FlagDefinitions) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto s = random_partial(6, 1.0, seed);
    const auto c = classify(s);
    EXPECT_EQ(c.is_pre_cc, c.a5_ok);
    EXPECT_EQ(c.is_cc, c.a4_ok && c.a5_ok);
    EXPECT_EQ(c.is_chirotope, c.gpr_ok);
    EXPECT_EQ(c.is_pre_cc, c.is_chirotope);
  }
}

TEST(Axioms, RelabelingEquivariance) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto s = random_partial(6, 1.0, seed);
    std::vector<Point> pi(6);
    std::iota(pi.begin(), pi.end(), 0);
    SeededRng rng(seed + 1000);
    for (int i = 5; i > 0; --i) std::swap(pi[i], pi[rng.between(0, i)]);
    const auto moved = relabel(s, pi);

    auto mapped = [&](const std::vector<AxiomViolation>& vs) {
      std::set<std::vector<Point>> out;
      for (const auto& v : vs) {
        std::vector<Point> w;
        for (Point x : v.witness) w.push_back(pi[x]);
        out.insert(normalize_rotation(w));
      }
      return out;
    };
    auto plain = [](const std::vector<AxiomViolation>& vs) {
      std::set<std::vector<Point>> out;
      for (const auto& v : vs) out.insert(v.witness);
      return out;
    };
    EXPECT_EQ(mapped(check_axiom4(s)), plain(check_axiom4(moved)));
    EXPECT_EQ(mapped(check_axiom5(s)), plain(check_axiom5(moved)));
    EXPECT_EQ(mapped(check_axiom5prime(s)), plain(check_axiom5prime(moved)));

    auto gpr_sets = [](const std::vector<AxiomViolation>& vs, const std::vector<Point>* map) {
      std::set<std::pair<Point, std::set<Point>>> out;
      for (const auto& v : vs) {
        auto f = [&](Point x) { return map ? (*map)[x] : x; };
        out.insert({f(v.witness[0]), {f(v.witness[1]), f(v.witness[2]), f(v.witness[3]), f(v.witness[4])}});
      }
      return out;
    };
    EXPECT_EQ(gpr_sets(check_gpr(s), &pi), gpr_sets(check_gpr(moved), nullptr));
  }
}
