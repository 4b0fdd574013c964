#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "ccsys/axioms.hpp"
#include "ccsys/enumeration.hpp"
#include "ccsys/tournament.hpp"
#include "oracles.hpp"

using namespace ccsys;

namespace {

Tournament from_arcs(int n, std::initializer_list<Arc> arcs) {
  Digraph g(n);
  for (const auto& [u, v] : arcs) g.add_arc(u, v);
  return Tournament(std::move(g));
}

// 3-cycle 0 -> 1 -> 2 -> 0, vertex 3 beats all three.
Tournament dominating_vortex() {
  return from_arcs(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}});
}

Tournament dominated_vortex() {
  return from_arcs(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
}

PartialTripleSystem fill_plus(PartialTripleSystem s) {
  for (const auto& c : canonical_triples(s.size()))
    if (!s.value_of({c.i, c.j, c.k})) s.set({c.i, c.j, c.k}, true);
  return s;
}

}  // namespace

TEST(AssociatedTournament, ThreePoints) {
  PartialTripleSystem s(3);
  s.set({2, 0, 1}, true);
  const auto T = associated_tournament(s, 2);
  EXPECT_EQ(T.size(), 2);
  EXPECT_TRUE(T.beats(0, 1));
  EXPECT_EQ(T.labels(), (std::vector<Point>{0, 1}));
}

TEST(AssociatedTournament, CompactsAndLabels) {
  const auto s = random_partial(6, 1.0, 3);
  const auto T = associated_tournament(s, 2);
  EXPECT_EQ(T.labels(), (std::vector<Point>{0, 1, 3, 4, 5}));
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = 0; v < 5; ++v)
      if (u != v) {
        EXPECT_EQ(T.beats(u, v), *s.value_of({2, T.labels()[u], T.labels()[v]}));
      }
  EXPECT_THROW(associated_tournament(random_partial(5, 0.5, 1), 0), IncompleteSystem);
}

TEST(AssociatedTournament, AxiomFiveViolationIsDominatingVortex) {
  // (t, s, p, q, r) = (0, 1, 2, 3, 4)
  PartialTripleSystem s(5);
  for (OrientedTriple t : {OrientedTriple{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 3, 4}, {0, 4, 2}})
    s.set(t, true);
  const auto T = associated_tournament(fill_plus(s), 0);
  // compacted: point x -> vertex x - 1
  const auto vs = find_vortices(T);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, VortexKind::dominating);
  EXPECT_EQ(vs[0].apex, 0);
  EXPECT_EQ(vs[0].cycle, (std::array<Vertex, 3>{1, 2, 3}));
}

TEST(AssociatedTournament, AxiomFivePrimeViolationIsDominatedVortex) {
  // tps tqs trs tpq tqr trp, (t, s, p, q, r) = (0, 1, 2, 3, 4)
  PartialTripleSystem s(5);
  for (OrientedTriple t : {OrientedTriple{0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 2, 3}, {0, 3, 4}, {0, 4, 2}})
    s.set(t, true);
  const auto full = fill_plus(s);
  ASSERT_FALSE(check_axiom5prime(full).empty());
  const auto vs = find_vortices(associated_tournament(full, 0));
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, VortexKind::dominated);
  EXPECT_EQ(vs[0].apex, 0);
}

TEST(AssociatedTournament, MatchesDeterminantsThroughT) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto pts = random_general_position(7, seed);
    const auto s = from_points(pts);
    for (Point t = 0; t < 7; ++t) {
      const auto T = associated_tournament(s, t);
      for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = 0; v < 6; ++v) {
          if (u == v) continue;
          const auto& a = pts[t];
          const auto& b = pts[T.labels()[u]];
          const auto& c = pts[T.labels()[v]];
          EXPECT_EQ(T.beats(u, v), oracle::det_sign(a.x, a.y, b.x, b.y, c.x, c.y) > 0);
        }
    }
  }
}

TEST(AssociatedDigraph, ApexRuleOnPartialSystems) {
  EXPECT_EQ(associated_digraph(PartialTripleSystem(4), 3).arc_count(), 0u);

  PartialTripleSystem full(5);
  for (const auto& c : canonical_triples(5))
    if (c.k == 4) full.set({c.i, c.j, c.k}, (c.i + c.j) % 2 == 0);
  const auto g = associated_digraph(full, 4);
  EXPECT_TRUE(g.is_complete());
  const auto completed = fill_plus(full);
  EXPECT_EQ(Tournament(g), associated_tournament(completed, 4));

  PartialTripleSystem bad(5);
  bad.set({0, 1, 2}, true);
  EXPECT_THROW(associated_digraph(bad, 4), NonApexSystem);
}

TEST(Vortices, TransitiveTournamentHasNone) {
  for (int n = 0; n <= 9; ++n) {
    EXPECT_TRUE(find_vortices(Tournament::transitive(n)).empty());
    EXPECT_TRUE(is_vortex_free(Tournament::transitive(n)));
  }
}

TEST(Vortices, ForbiddenFigures) {
  const auto dom = find_vortices(dominating_vortex());
  ASSERT_EQ(dom.size(), 1u);
  EXPECT_EQ(dom[0], (Vortex{3, {0, 1, 2}, VortexKind::dominating}));
  EXPECT_FALSE(is_vortex_free(dominating_vortex()));

  const auto sub = find_vortices(dominated_vortex());
  ASSERT_EQ(sub.size(), 1u);
  EXPECT_EQ(sub[0], (Vortex{3, {0, 1, 2}, VortexKind::dominated}));
  EXPECT_FALSE(is_vortex_free(dominated_vortex()));
}

TEST(Vortices, DetectorsAgreeOnRandomTournaments) {
  std::size_t free_count = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);
    const auto T = random_tournament(n, seed);
    const bool free = is_vortex_free(T);
    EXPECT_EQ(free, find_vortices(T).empty()) << "seed " << seed;
    free_count += free;
  }
  EXPECT_GT(free_count, 0u);
}

TEST(Vortices, ReportedVorticesAreGenuine) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto T = random_tournament(7, seed);
    for (const auto& v : find_vortices(T)) {
      const auto [p, q, r] = v.cycle;
      EXPECT_TRUE(T.beats(p, q) && T.beats(q, r) && T.beats(r, p));
      for (Vertex x : v.cycle) {
        if (v.kind == VortexKind::dominating)
          EXPECT_TRUE(T.beats(v.apex, x));
        else
          EXPECT_TRUE(T.beats(x, v.apex));
      }
    }
  }
}

TEST(VortexCharacterization, ExhaustiveOnFivePoints) {
  for (const auto& s : enumerate_complete(5)) {
    bool all_free = true;
    for (Point t = 0; t < 5; ++t) all_free = all_free && is_vortex_free(associated_tournament(s, t));
    EXPECT_EQ(classify(s).is_pre_cc, all_free);
    EXPECT_EQ(check_axiom5(s).empty() && check_axiom5prime(s).empty(), all_free);
  }
}

TEST(FlipDisjointArcs, Involution) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto T = random_tournament(6, seed);
    const auto once = flip_disjoint_arcs(T, {0, 1}, {2, 3});
    EXPECT_NE(once, T);
    EXPECT_EQ(flip_disjoint_arcs(once, {1, 0}, {3, 2}), T);
  }
}

TEST(FlipDisjointArcs, OverlapRejected) {
  const auto T = Tournament::transitive(4);
  EXPECT_THROW(flip_disjoint_arcs(T, {0, 1}, {1, 2}), OverlappingArcs);
  EXPECT_THROW(flip_disjoint_arcs(T, {0, 1}, {0, 1}), OverlappingArcs);
  EXPECT_THROW(flip_disjoint_arcs(T, {0, 4}, {1, 2}), InvalidTriple);
}

TEST(FlipDisjointArcs, VortexMapsToVortexOnSameVertices) {
  const std::array<std::array<Arc, 2>, 3> matchings{{{{{0, 1}, {2, 3}}}, {{{0, 2}, {1, 3}}}, {{{0, 3}, {1, 2}}}}};
  for (const auto& base : {dominating_vortex(), dominated_vortex()})
    for (const auto& m : matchings) {
      const auto flipped = flip_disjoint_arcs(base, m[0], m[1]);
      EXPECT_FALSE(is_vortex_free(flipped));
    }
}

TEST(FlipDisjointArcs, Locality) {
  // A vortex on {0, 1, 2, 3} inside a larger tournament survives flips of
  // pairs outside that set.
  Digraph g(8);
  for (const auto& [u, v] : dominating_vortex().digraph().arcs()) g.add_arc(u, v);
  for (Vertex u = 0; u < 8; ++u)
    for (Vertex v = std::max(u + 1, 4); v < 8; ++v) g.add_arc(u, v);
  const Tournament T(g);
  const auto flipped = flip_disjoint_arcs(T, {4, 5}, {6, 7});
  const Vortex original{3, {0, 1, 2}, VortexKind::dominating};
  const auto after = find_vortices(flipped);
  EXPECT_NE(std::find(after.begin(), after.end(), original), after.end());
}

TEST(DigraphFormat, ParseSerializeAndErrors) {
  const auto g = parse_digraph("# c\nvertices 3\n0 1\n\n2 1 # arc\n");
  EXPECT_EQ(serialize_digraph(g), "vertices 3\n0 1\n2 1\n");
  EXPECT_THROW(parse_digraph("vertices 3\n0 1\n1 0\n"), TwoCycle);
  EXPECT_THROW(parse_digraph("vertices 3\n0 0\n"), ParseError);
  EXPECT_THROW(parse_digraph("vertices 3\n0 3\n"), ParseError);
  EXPECT_THROW(parse_digraph("vertices 3\n0 1 2\n"), ParseError);
  EXPECT_THROW(parse_digraph("points 3\n"), ParseError);
  EXPECT_THROW(Tournament{g}, NotATournament);
}

TEST(DigraphFormat, RoundTripOnRandomDigraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = random_digraph(2 + static_cast<int>(seed % 8), 0.1 * double(seed % 11), seed);
    const auto text = serialize_digraph(g);
    EXPECT_EQ(parse_digraph(text), g);
    EXPECT_EQ(serialize_digraph(parse_digraph(text)), text);
  }
}
