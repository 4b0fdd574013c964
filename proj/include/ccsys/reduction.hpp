#pragma once

// Correspondence between digraphs and apex-shaped partial triple systems.
//
// A digraph on vertices 0..n-1 becomes a partial system on n+1 points whose
// extra point t = n is the apex: each arc u -> v fixes tuv = true and nothing
// else is assigned. The digraph completes to a vortex-free tournament iff
// that partial system extends to a CC-system.

#include <string>
#include <utility>
#include <vector>

#include "ccsys/errors.hpp"
#include "ccsys/extend.hpp"
#include "ccsys/tournament.hpp"
#include "ccsys/triple_core.hpp"

namespace ccsys {

struct ApexInstance {
  PartialTripleSystem system;
  Digraph digraph;
  Point apex = 0;
  std::vector<Point> point_map;  // point_map[v] is the system point of digraph vertex v
};

inline ApexInstance digraph_to_partial(const Digraph& g) {
  ApexInstance inst;
  inst.digraph = g;
  inst.apex = g.size();
  inst.system = PartialTripleSystem(g.size() + 1);
  inst.point_map.resize(static_cast<std::size_t>(g.size()));
  for (Vertex v = 0; v < g.size(); ++v) inst.point_map[static_cast<std::size_t>(v)] = v;
  for (const auto& [u, v] : g.arcs()) inst.system.set({inst.apex, u, v}, true);
  return inst;
}

// Whether g's unoriented pairs can be oriented into a vortex-free
// tournament, decided through CC-extension of the apex system. Throws
// Inconclusive when the solver hits its decision limit.
inline bool decide_completion(const Digraph& g, const SolverOptions& opts = {}) {
  const auto outcome = extend(digraph_to_partial(g).system, Target::cc, {{}, opts});
  if (outcome.verdict == Verdict::inconclusive)
    throw Inconclusive("decision limit reached before completion was decided");
  return outcome.extendable();
}

// A CC-system on T.size() + 1 points whose tournament at the last point is T.
inline PartialTripleSystem lift_tournament(const Tournament& T, const SolverOptions& opts = {}) {
  if (!is_vortex_free(T)) {
    const auto vortices = find_vortices(T);
    throw NotVortexFree("tournament contains a vortex" +
                        (vortices.empty() ? std::string() : ": " + to_string(vortices.front())));
  }
  const auto outcome = extend(digraph_to_partial(T.digraph()).system, Target::cc, {{}, opts});
  if (outcome.verdict == Verdict::inconclusive)
    throw Inconclusive("decision limit reached while lifting");
  if (!outcome.extendable())
    throw LiftFailed("no CC-system realizes a vortex-free tournament at the apex");
  return outcome.witness->extension;
}

}  // namespace ccsys
