#pragma once

// Clause encoding of the extension problem.
//
// Variable v (1-based) stands for canonical triple v-1 in lexicographic
// order and is true iff that triple's sign is +. The literal for an ordered
// triple (x, y, z) is +v when (x, y, z) is an even permutation of its
// canonical triple and -v otherwise, so the literal is true iff xyz holds.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ccsys/axioms.hpp"
#include "ccsys/errors.hpp"
#include "ccsys/text_format.hpp"
#include "ccsys/triple_core.hpp"

namespace ccsys {

using Literal = int;
using Clause = std::vector<Literal>;

class DimacsError : public Error {
 public:
  DimacsError(std::size_t line, const std::string& msg)
      : Error("dimacs line " + std::to_string(line) + ": " + msg) {}
};

struct EncodeOptions {
  // Also emit the (implied) Axiom 5' clauses; they help unit propagation.
  bool dual_transitivity = true;
  // Replace the transitivity clauses by a direct blocking-clause encoding of
  // the Grassmann-Pluecker relations. Used for cross-checking only.
  bool direct_gpr = false;
};

struct CnfFormula {
  int points = 0;
  Target target = Target::pre_cc;
  int var_count = 0;
  std::vector<Clause> clauses;
  std::vector<CanonicalTriple> var_map;  // var_map[v - 1] is the triple of variable v
  PartialTripleSystem fixed;             // assignments forced by unit clauses

  int variable(const CanonicalTriple& t) const {
    return static_cast<int>(triple_rank(t, points)) + 1;
  }

  Literal literal(Point x, Point y, Point z) const {
    const auto c = detail::canonicalize_unchecked(x, y, z);
    const int v = variable(c.triple);
    return c.parity == Sign::plus ? v : -v;
  }

  std::size_t unit_count() const {
    return static_cast<std::size_t>(
        std::count_if(clauses.begin(), clauses.end(), [](const Clause& c) { return c.size() == 1; }));
  }

  // True when var_map covers exactly the canonical triples of `points`.
  bool has_full_var_map() const {
    return static_cast<std::size_t>(var_count) == triple_count(points) &&
           var_map == canonical_triples(points);
  }
};

namespace detail {

class ClauseSink {
 public:
  explicit ClauseSink(std::vector<Clause>& out) : out_(out) {}

  void add(Clause c) {
    std::sort(c.begin(), c.end(), [](Literal a, Literal b) {
      return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
    });
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] == -c[i - 1]) return;  // tautology
    if (seen_.insert(c).second) out_.push_back(std::move(c));
  }

 private:
  std::vector<Clause>& out_;
  std::set<Clause> seen_;
};

}  // namespace detail

inline CnfFormula encode(const PartialTripleSystem& s, Target target, const EncodeOptions& opts = {}) {
  CnfFormula f;
  f.points = s.size();
  f.target = target;
  f.var_count = static_cast<int>(s.triple_count());
  f.var_map = canonical_triples(s.size());
  f.fixed = s;

  detail::ClauseSink sink(f.clauses);
  const int n = s.size();
  const auto lit = [&](Point x, Point y, Point z) { return f.literal(x, y, z); };

  for (std::size_t r = 0; r < f.var_map.size(); ++r)
    if (const auto sign = s.canonical_sign(r)) {
      const int v = static_cast<int>(r) + 1;
      sink.add({*sign == Sign::plus ? v : -v});
    }

  if (!opts.direct_gpr) {
    detail::for_each_apex_triangle(n, [&](Point t, Point sp, Point p, Point q, Point r) {
      // Rotating (p, q, r) yields the same clause, so one rotation suffices.
      sink.add({-lit(t, sp, p), -lit(t, sp, q), -lit(t, sp, r), -lit(t, p, q), -lit(t, q, r),
                lit(t, p, r)});
      if (opts.dual_transitivity)
        sink.add({-lit(t, p, sp), -lit(t, q, sp), -lit(t, r, sp), -lit(t, p, q), -lit(t, q, r),
                  lit(t, p, r)});
      return true;
    });
  } else {
    // For each (t, p, q, r, s) the relation values are X = [tpq <-> trs],
    // Y = [trp <-> tqs], Z = [tps <-> tqr]. X = Y = Z holds on 16 of the 64
    // assignments of the six literals; each is excluded by one clause.
    for (Point t = 0; t < n; ++t)
      for (Point p = 0; p < n; ++p)
        for (Point q = 0; q < n; ++q)
          for (Point r = 0; r < n; ++r)
            for (Point sp = 0; sp < n; ++sp) {
              const Point pts[5] = {t, p, q, r, sp};
              bool distinct = true;
              for (int a = 0; a < 5; ++a)
                for (int b = a + 1; b < 5; ++b) distinct = distinct && pts[a] != pts[b];
              if (!distinct) continue;
              const Literal pairs[3][2] = {{lit(t, p, q), lit(t, r, sp)},
                                           {lit(t, r, p), lit(t, q, sp)},
                                           {lit(t, p, sp), lit(t, q, r)}};
              for (int equal_value = 0; equal_value < 2; ++equal_value)
                for (int choice = 0; choice < 8; ++choice) {
                  Clause c;
                  for (int e = 0; e < 3; ++e) {
                    // Values of the two literals of expression e in the
                    // excluded assignment.
                    const bool first = (choice >> e) & 1;
                    const bool second = equal_value ? first : !first;
                    c.push_back(first ? -pairs[e][0] : pairs[e][0]);
                    c.push_back(second ? -pairs[e][1] : pairs[e][1]);
                  }
                  sink.add(std::move(c));
                }
            }
  }

  if (target == Target::cc) {
    detail::for_each_rooted_triangle(n, [&](Point t, Point p, Point q, Point r) {
      sink.add({-lit(t, q, r), -lit(p, t, r), -lit(p, q, t), lit(p, q, r)});
      return true;
    });
  }
  return f;
}

// ---------------------------------------------------------------------------
// DIMACS CNF. Besides the clause body, the export carries comment lines
//   c points <n>
//   c target <pre-cc|cc>
//   c v<i> = triple <a> <b> <c>
// so that import restores the variable mapping.

inline std::string export_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "c points " << f.points << '\n';
  out << "c target " << target_name(f.target) << '\n';
  for (std::size_t v = 0; v < f.var_map.size(); ++v) {
    const auto& t = f.var_map[v];
    out << "c v" << (v + 1) << " = triple " << t.i << ' ' << t.j << ' ' << t.k << '\n';
  }
  out << "p cnf " << f.var_count << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (Literal l : c) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

inline CnfFormula import_dimacs(std::string_view text) {
  CnfFormula f;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  bool have_points = false;
  std::vector<std::pair<int, CanonicalTriple>> mapping;
  Clause current;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    last_line = line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") {
      std::string key;
      if (!(ls >> key)) continue;
      if (key == "points") {
        if (!(ls >> f.points) || f.points < 0 || f.points > kMaxPoints)
          throw DimacsError(line_no, "bad points comment");
        have_points = true;
      } else if (key == "target") {
        std::string t;
        ls >> t;
        if (t == "cc")
          f.target = Target::cc;
        else if (t == "pre-cc")
          f.target = Target::pre_cc;
        else
          throw DimacsError(line_no, "unknown target '" + t + "'");
      } else if (key.size() > 1 && key[0] == 'v') {
        std::string eq, word;
        CanonicalTriple t;
        int var = 0;
        try {
          var = std::stoi(key.substr(1));
        } catch (const std::exception&) {
          continue;  // unrelated comment
        }
        if (!(ls >> eq >> word >> t.i >> t.j >> t.k) || eq != "=" || word != "triple")
          continue;
        mapping.emplace_back(var, t);
      }
      continue;
    }
    if (first == "p") {
      std::string fmt;
      long long vars = -1, clauses = -1;
      if (have_header || !(ls >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 ||
          clauses < 0 || vars > (1 << 24))
        throw DimacsError(line_no, "malformed problem line");
      f.var_count = static_cast<int>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
      have_header = true;
      continue;
    }
    if (!have_header) throw DimacsError(line_no, "clause before 'p cnf' header");
    std::istringstream body(line);
    std::string tok;
    while (body >> tok) {
      Literal l = 0;
      try {
        std::size_t used = 0;
        l = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw DimacsError(line_no, "bad literal '" + tok + "'");
      }
      if (l == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (std::abs(l) > f.var_count)
          throw DimacsError(line_no, "literal " + tok + " exceeds variable count");
        current.push_back(l);
      }
    }
  }
  if (!have_header) throw DimacsError(line_no, "missing 'p cnf' header");
  if (!current.empty()) throw DimacsError(last_line, "last clause not terminated by 0");
  if (f.clauses.size() != declared_clauses)
    throw DimacsError(last_line, "header declares " + std::to_string(declared_clauses) +
                                     " clauses, found " + std::to_string(f.clauses.size()));

  if (!mapping.empty()) {
    std::sort(mapping.begin(), mapping.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < mapping.size(); ++i) {
      if (mapping[i].first != static_cast<int>(i) + 1)
        throw DimacsError(0, "variable mapping comments are not 1..k");
      f.var_map.push_back(mapping[i].second);
    }
  }
  if (have_points) {
    f.fixed = PartialTripleSystem(f.points);
    if (f.has_full_var_map()) {
      for (const auto& c : f.clauses) {
        if (c.size() != 1) continue;
        const auto r = static_cast<std::size_t>(std::abs(c[0]) - 1);
        const Sign want = c[0] > 0 ? Sign::plus : Sign::minus;
        // Contradictory unit pairs stay in the clause list; the first wins here.
        if (!f.fixed.canonical_sign(r)) f.fixed.set_canonical(r, want);
      }
    }
  }
  return f;
}

}  // namespace ccsys
