#pragma once

// Axiom 4 (interiority), Axiom 5 (transitivity), Axiom 5' (dual
// transitivity) and the three-term Grassmann-Pluecker relations on complete
// triple systems, with violation witnesses.
//
// Witness role order:
//   A4       (t, p, q, r)      tqr & ptr & pqt & !pqr
//   A5       (t, s, p, q, r)   tsp & tsq & tsr & tpq & tqr & !tpr
//   A5prime  (t, s, p, q, r)   tps & tqs & trs & tpq & tqr & !tpr
//   GPR      (t, p, q, r, s)   the three relation values are all equal
//
// Each A4/A5/A5' premise is invariant under cyclic rotation of (p, q, r), so
// one witness is reported per rotation class, with p the smallest of p, q, r.
// GPR witnesses are reported once per (t, {p, q, r, s}).

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccsys/triple_core.hpp"

namespace ccsys {

enum class Axiom { A4, A5, A5prime, GPR };

inline const char* axiom_name(Axiom a) noexcept {
  switch (a) {
    case Axiom::A4: return "A4";
    case Axiom::A5: return "A5";
    case Axiom::A5prime: return "A5prime";
    case Axiom::GPR: return "GPR";
  }
  return "?";
}

inline const char* axiom_roles(Axiom a) noexcept {
  switch (a) {
    case Axiom::A4: return "tpqr";
    case Axiom::A5:
    case Axiom::A5prime: return "tspqr";
    case Axiom::GPR: return "tpqrs";
  }
  return "";
}

struct AxiomViolation {
  Axiom axiom = Axiom::A4;
  std::vector<Point> witness;

  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

// "A5 t=3 s=4 p=0 q=1 r=2"
inline std::string to_string(const AxiomViolation& v) {
  std::string out = axiom_name(v.axiom);
  const std::string roles = axiom_roles(v.axiom);
  for (std::size_t i = 0; i < v.witness.size() && i < roles.size(); ++i)
    out += std::string(" ") + roles[i] + "=" + std::to_string(v.witness[i]);
  return out;
}

// Which class an extension or check is aimed at. pre_cc and chirotope
// coincide on complete systems.
enum class Target { pre_cc, cc };

inline const char* target_name(Target t) noexcept {
  return t == Target::cc ? "cc" : "pre-cc";
}

struct Classification {
  bool a4_ok = false;
  bool a5_ok = false;
  bool a5p_ok = false;
  bool gpr_ok = false;
  bool is_pre_cc = false;
  bool is_cc = false;
  bool is_chirotope = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

namespace detail {

template <typename Value>
bool axiom4_instance_fails(const Value& v, Point t, Point p, Point q, Point r) {
  return v(t, q, r) && v(p, t, r) && v(p, q, t) && !v(p, q, r);
}

template <typename Value>
bool axiom5_instance_fails(const Value& v, Point t, Point s, Point p, Point q, Point r) {
  return v(t, s, p) && v(t, s, q) && v(t, s, r) && v(t, p, q) && v(t, q, r) && !v(t, p, r);
}

template <typename Value>
bool axiom5prime_instance_fails(const Value& v, Point t, Point s, Point p, Point q, Point r) {
  return v(t, p, s) && v(t, q, s) && v(t, r, s) && v(t, p, q) && v(t, q, r) && !v(t, p, r);
}

template <typename Value>
std::array<bool, 3> gpr_triple(const Value& v, Point t, Point p, Point q, Point r, Point s) {
  return {(v(t, p, q) && v(t, r, s)) || (v(t, q, p) && v(t, s, r)),
          (v(t, r, p) && v(t, q, s)) || (v(t, p, r) && v(t, s, q)),
          (v(t, p, s) && v(t, q, r)) || (v(t, s, p) && v(t, r, q))};
}

template <typename Value>
bool gpr_instance_fails(const Value& v, Point t, Point p, Point q, Point r, Point s) {
  const auto g = gpr_triple(v, t, p, q, r, s);
  return g[0] == g[1] && g[1] == g[2];
}

// Visits every (t, p, q, r) of distinct points with p = min(p, q, r).
// The visitor returns false to stop early; the function then returns false.
template <typename Fn>
bool for_each_rooted_triangle(int n, Fn&& fn) {
  for (Point t = 0; t < n; ++t)
    for (Point p = 0; p < n; ++p) {
      if (p == t) continue;
      for (Point q = p + 1; q < n; ++q) {
        if (q == t) continue;
        for (Point r = p + 1; r < n; ++r) {
          if (r == t || r == q) continue;
          if (!fn(t, p, q, r)) return false;
        }
      }
    }
  return true;
}

template <typename Fn>
bool for_each_apex_triangle(int n, Fn&& fn) {
  return for_each_rooted_triangle(n, [&](Point t, Point p, Point q, Point r) {
    for (Point s = 0; s < n; ++s) {
      if (s == t || s == p || s == q || s == r) continue;
      if (!fn(t, s, p, q, r)) return false;
    }
    return true;
  });
}

// Visits each (t, {a < b < c < d}) once, handing over the first ordering
// (p, q, r, s) of the four points, in lexicographic permutation order, for
// which the relation fails. Sets with no failing ordering are skipped.
template <typename Value, typename Fn>
bool for_each_gpr_failure(const Value& v, int n, Fn&& fn) {
  for (Point t = 0; t < n; ++t)
    for (Point a = 0; a < n; ++a) {
      if (a == t) continue;
      for (Point b = a + 1; b < n; ++b) {
        if (b == t) continue;
        for (Point c = b + 1; c < n; ++c) {
          if (c == t) continue;
          for (Point d = c + 1; d < n; ++d) {
            if (d == t) continue;
            std::array<Point, 4> perm{a, b, c, d};
            do {
              if (gpr_instance_fails(v, t, perm[0], perm[1], perm[2], perm[3])) {
                if (!fn(t, perm)) return false;
                break;
              }
            } while (std::next_permutation(perm.begin(), perm.end()));
          }
        }
      }
    }
  return true;
}

}  // namespace detail

inline std::vector<AxiomViolation> check_axiom4(const PartialTripleSystem& s) {
  const OrientationTable v(s);
  std::vector<AxiomViolation> out;
  detail::for_each_rooted_triangle(s.size(), [&](Point t, Point p, Point q, Point r) {
    if (detail::axiom4_instance_fails(v, t, p, q, r)) out.push_back({Axiom::A4, {t, p, q, r}});
    return true;
  });
  return out;
}

inline std::vector<AxiomViolation> check_axiom5(const PartialTripleSystem& s) {
  const OrientationTable v(s);
  std::vector<AxiomViolation> out;
  detail::for_each_apex_triangle(s.size(), [&](Point t, Point sp, Point p, Point q, Point r) {
    if (detail::axiom5_instance_fails(v, t, sp, p, q, r))
      out.push_back({Axiom::A5, {t, sp, p, q, r}});
    return true;
  });
  return out;
}

inline std::vector<AxiomViolation> check_axiom5prime(const PartialTripleSystem& s) {
  const OrientationTable v(s);
  std::vector<AxiomViolation> out;
  detail::for_each_apex_triangle(s.size(), [&](Point t, Point sp, Point p, Point q, Point r) {
    if (detail::axiom5prime_instance_fails(v, t, sp, p, q, r))
      out.push_back({Axiom::A5prime, {t, sp, p, q, r}});
    return true;
  });
  return out;
}

// The three values of the relation for (t, p, q, r, s), in the order
//   (tpq & trs) | (tqp & tsr),  (trp & tqs) | (tpr & tsq),  (tps & tqr) | (tsp & trq).
// Only the six triples through t are consulted; any of them unassigned throws
// IncompleteSystem.
inline std::array<bool, 3> gpr_values(const PartialTripleSystem& sys, Point t, Point p, Point q,
                                      Point r, Point s) {
  const std::array<Point, 5> pts{t, p, q, r, s};
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      if (pts[a] == pts[b]) throw InvalidTriple("relation points must be pairwise distinct");
  const auto value = [&](Point x, Point y, Point z) {
    const auto v = sys.value_of({x, y, z});
    if (!v) throw IncompleteSystem("triple " + to_string(OrientedTriple{x, y, z}) + " unassigned");
    return *v;
  };
  return detail::gpr_triple(value, t, p, q, r, s);
}

inline std::vector<AxiomViolation> check_gpr(const PartialTripleSystem& s) {
  const OrientationTable v(s);
  std::vector<AxiomViolation> out;
  detail::for_each_gpr_failure(v, s.size(), [&](Point t, const std::array<Point, 4>& o) {
    out.push_back({Axiom::GPR, {t, o[0], o[1], o[2], o[3]}});
    return true;
  });
  return out;
}

// Short-circuit variants for the hot paths (solver verification, census,
// brute-force search). All require a complete system.

inline bool satisfies_axiom4(const OrientationTable& v) {
  return detail::for_each_rooted_triangle(v.size(), [&](Point t, Point p, Point q, Point r) {
    return !detail::axiom4_instance_fails(v, t, p, q, r);
  });
}

inline bool satisfies_axiom5(const OrientationTable& v) {
  return detail::for_each_apex_triangle(v.size(), [&](Point t, Point s, Point p, Point q, Point r) {
    return !detail::axiom5_instance_fails(v, t, s, p, q, r);
  });
}

inline bool satisfies_axiom5prime(const OrientationTable& v) {
  return detail::for_each_apex_triangle(v.size(), [&](Point t, Point s, Point p, Point q, Point r) {
    return !detail::axiom5prime_instance_fails(v, t, s, p, q, r);
  });
}

inline bool satisfies_gpr(const OrientationTable& v) {
  return detail::for_each_gpr_failure(v, v.size(),
                                      [](Point, const std::array<Point, 4>&) { return false; });
}

inline bool satisfies(const OrientationTable& v, Target target) {
  if (!satisfies_axiom5(v)) return false;
  return target == Target::pre_cc || satisfies_axiom4(v);
}

inline bool satisfies(const PartialTripleSystem& s, Target target) {
  return satisfies(OrientationTable(s), target);
}

// Raw flags with no cross-check between them.
inline Classification evaluate_flags(const OrientationTable& v) {
  Classification c;
  c.a4_ok = satisfies_axiom4(v);
  c.a5_ok = satisfies_axiom5(v);
  c.a5p_ok = satisfies_axiom5prime(v);
  c.gpr_ok = satisfies_gpr(v);
  c.is_pre_cc = c.a5_ok;
  c.is_cc = c.a4_ok && c.a5_ok;
  c.is_chirotope = c.gpr_ok;
  return c;
}

// Throws std::logic_error when pre-CC membership and the chirotope relations
// disagree: the two classes coincide, so a mismatch is a checker bug.
inline Classification classify(const PartialTripleSystem& s) {
  const auto c = evaluate_flags(OrientationTable(s));
  if (c.is_pre_cc != c.is_chirotope)
    throw std::logic_error("pre-CC membership and chirotope relations disagree");
  return c;
}

inline bool in_class(const Classification& c, Target target) {
  return target == Target::cc ? c.is_cc : (c.is_pre_cc && c.is_chirotope);
}

}  // namespace ccsys
