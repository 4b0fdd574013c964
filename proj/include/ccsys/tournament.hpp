#pragma once

// Digraphs, tournaments and vortices.
//
// The tournament associated with a point t of a complete triple system lives
// on the remaining points, with p -> q iff tpq. A vortex is a directed
// 3-cycle p -> q -> r -> p together with an apex s that either beats all
// three cycle vertices (dominating, the Axiom 5 pattern) or loses to all three
// (dominated, the Axiom 5' pattern). A tournament is vortex-free iff it
// contains neither.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccsys/errors.hpp"
#include "ccsys/text_format.hpp"
#include "ccsys/triple_core.hpp"

namespace ccsys {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;

class Digraph {
 public:
  Digraph() = default;

  explicit Digraph(int n) : n_(n) {
    if (n < 0 || n > kMaxPoints)
      throw InvalidTriple("vertex count " + std::to_string(n) + " outside 0.." +
                          std::to_string(kMaxPoints));
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    labels_.resize(static_cast<std::size_t>(n));
    std::iota(labels_.begin(), labels_.end(), 0);
  }

  int size() const noexcept { return n_; }

  bool has_arc(Vertex u, Vertex v) const { return adj_[index(u, v)] != 0; }
  bool has_pair(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

  // Adds u -> v. Re-adding an existing arc is a no-op; the reverse arc being
  // present throws TwoCycle.
  void add_arc(Vertex u, Vertex v) {
    check_pair(u, v);
    if (has_arc(v, u))
      throw TwoCycle("arcs " + std::to_string(u) + "->" + std::to_string(v) + " and " +
                     std::to_string(v) + "->" + std::to_string(u) + " form a 2-cycle");
    adj_[index(u, v)] = 1;
  }

  void remove_pair(Vertex u, Vertex v) {
    check_pair(u, v);
    adj_[index(u, v)] = 0;
    adj_[index(v, u)] = 0;
  }

  void reverse(Vertex u, Vertex v) {
    check_pair(u, v);
    std::swap(adj_[index(u, v)], adj_[index(v, u)]);
  }

  std::size_t arc_count() const {
    return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1));
  }

  bool is_complete() const {
    const auto n = static_cast<std::size_t>(n_);
    return arc_count() == (n < 2 ? 0 : n * (n - 1) / 2);
  }

  // Arcs in lexicographic (tail, head) order.
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v)
        if (u != v && has_arc(u, v)) out.emplace_back(u, v);
    return out;
  }

  // Unordered pairs {u < v} with no arc in either direction.
  std::vector<Arc> missing_pairs() const {
    std::vector<Arc> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (!has_pair(u, v)) out.emplace_back(u, v);
    return out;
  }

  // Original point identifier of each vertex (identity unless the digraph
  // was derived from a triple system by removing the apex).
  const std::vector<Point>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<Point> labels) {
    if (labels.size() != labels_.size()) throw InvalidTriple("label count mismatch");
    labels_ = std::move(labels);
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }
  void check_pair(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw InvalidTriple("vertex out of range in pair (" + std::to_string(u) + "," +
                          std::to_string(v) + ")");
    if (u == v) throw InvalidTriple("self-loop at vertex " + std::to_string(u));
  }

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<Point> labels_;
};

// A digraph with every pair oriented.
class Tournament {
 public:
  Tournament() = default;

  explicit Tournament(Digraph g) : g_(std::move(g)) {
    if (!g_.is_complete())
      throw NotATournament(std::to_string(g_.missing_pairs().size()) + " pair(s) unoriented");
  }

  // u -> v iff u < v.
  static Tournament transitive(int n) {
    Digraph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) g.add_arc(u, v);
    return Tournament(std::move(g));
  }

  int size() const noexcept { return g_.size(); }
  bool beats(Vertex u, Vertex v) const { return g_.has_arc(u, v); }
  void reverse(Vertex u, Vertex v) { g_.reverse(u, v); }
  const Digraph& digraph() const noexcept { return g_; }
  const std::vector<Point>& labels() const noexcept { return g_.labels(); }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  Digraph g_;
};

enum class VortexKind { dominating, dominated };

struct Vortex {
  Vertex apex = 0;
  std::array<Vertex, 3> cycle{};  // cycle[0] -> cycle[1] -> cycle[2] -> cycle[0]
  VortexKind kind = VortexKind::dominating;

  friend bool operator==(const Vortex&, const Vortex&) = default;
};

inline std::string to_string(const Vortex& v) {
  std::ostringstream out;
  out << (v.kind == VortexKind::dominating ? "dominating" : "dominated") << " apex=" << v.apex
      << " cycle=" << v.cycle[0] << "->" << v.cycle[1] << "->" << v.cycle[2] << "->"
      << v.cycle[0];
  return out.str();
}

// Tournament at t on the points other than t, compacted to 0..n-2 in
// ascending order; labels() maps back to the original points.
inline Tournament associated_tournament(const PartialTripleSystem& s, Point t) {
  if (t < 0 || t >= s.size()) throw InvalidTriple("apex " + std::to_string(t) + " out of range");
  if (!s.complete())
    throw IncompleteSystem(std::to_string(s.status().unassigned_count) +
                           " canonical triple(s) unassigned");
  const int m = s.size() - 1;
  std::vector<Point> labels;
  for (Point p = 0; p < s.size(); ++p)
    if (p != t) labels.push_back(p);
  Digraph g(m);
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = u + 1; v < m; ++v) {
      if (*s.value_of({t, labels[u], labels[v]}))
        g.add_arc(u, v);
      else
        g.add_arc(v, u);
    }
  g.set_labels(std::move(labels));
  return Tournament(std::move(g));
}

// Same rule on a partial system whose assigned triples all contain t; pairs
// whose triple is unassigned get no arc. Throws NonApexSystem otherwise.
inline Digraph associated_digraph(const PartialTripleSystem& s, Point t) {
  if (t < 0 || t >= s.size()) throw InvalidTriple("apex " + std::to_string(t) + " out of range");
  const auto triples = canonical_triples(s.size());
  for (std::size_t r = 0; r < triples.size(); ++r) {
    const auto& c = triples[r];
    if (s.canonical_sign(r) && c.i != t && c.j != t && c.k != t)
      throw NonApexSystem("assigned triple " + to_string(c) + " does not contain point " +
                          std::to_string(t));
  }
  const int m = s.size() - 1;
  std::vector<Point> labels;
  for (Point p = 0; p < s.size(); ++p)
    if (p != t) labels.push_back(p);
  Digraph g(m);
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = u + 1; v < m; ++v) {
      const auto val = s.value_of({t, labels[u], labels[v]});
      if (!val) continue;
      if (*val)
        g.add_arc(u, v);
      else
        g.add_arc(v, u);
    }
  g.set_labels(std::move(labels));
  return g;
}

// Every vortex, ordered by apex, then by the cycle's vertex set. Each cycle
// is rotated to start at its smallest vertex.
inline std::vector<Vortex> find_vortices(const Tournament& T) {
  std::vector<Vortex> out;
  const int n = T.size();
  for (Vertex s = 0; s < n; ++s)
    for (Vertex a = 0; a < n; ++a) {
      if (a == s) continue;
      for (Vertex b = a + 1; b < n; ++b) {
        if (b == s) continue;
        for (Vertex c = b + 1; c < n; ++c) {
          if (c == s) continue;
          std::array<Vertex, 3> cycle;
          if (T.beats(a, b) && T.beats(b, c) && T.beats(c, a))
            cycle = {a, b, c};
          else if (T.beats(a, c) && T.beats(c, b) && T.beats(b, a))
            cycle = {a, c, b};
          else
            continue;
          if (T.beats(s, a) && T.beats(s, b) && T.beats(s, c))
            out.push_back({s, cycle, VortexKind::dominating});
          else if (T.beats(a, s) && T.beats(b, s) && T.beats(c, s))
            out.push_back({s, cycle, VortexKind::dominated});
        }
      }
    }
  return out;
}

namespace detail {

// A tournament on `vs` is acyclic iff its score sequence is 0, 1, ..., k-1.
inline bool subtournament_has_triangle(const Tournament& T, const std::vector<Vertex>& vs) {
  std::vector<int> scores;
  scores.reserve(vs.size());
  for (Vertex u : vs) {
    int score = 0;
    for (Vertex v : vs)
      if (u != v && T.beats(u, v)) ++score;
    scores.push_back(score);
  }
  std::sort(scores.begin(), scores.end());
  for (std::size_t i = 0; i < scores.size(); ++i)
    if (scores[i] != static_cast<int>(i)) return true;
  return false;
}

}  // namespace detail

// No vertex whose out-neighbourhood or in-neighbourhood contains a directed
// triangle. Computed from neighbourhood score sequences, independently of
// find_vortices.
inline bool is_vortex_free(const Tournament& T) {
  const int n = T.size();
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Vertex> out_nbrs;
    std::vector<Vertex> in_nbrs;
    for (Vertex v = 0; v < n; ++v) {
      if (v == s) continue;
      (T.beats(s, v) ? out_nbrs : in_nbrs).push_back(v);
    }
    if (detail::subtournament_has_triangle(T, out_nbrs) ||
        detail::subtournament_has_triangle(T, in_nbrs))
      return false;
  }
  return true;
}

// Reverses the two given pairs, which must be vertex-disjoint.
inline Tournament flip_disjoint_arcs(Tournament T, Arc a1, Arc a2) {
  const std::array<Vertex, 4> vs{a1.first, a1.second, a2.first, a2.second};
  for (Vertex v : vs)
    if (v < 0 || v >= T.size()) throw InvalidTriple("vertex " + std::to_string(v) + " out of range");
  if (a1.first == a1.second || a2.first == a2.second)
    throw InvalidTriple("an arc needs two distinct vertices");
  if (a1.first == a2.first || a1.first == a2.second || a1.second == a2.first ||
      a1.second == a2.second)
    throw OverlappingArcs("pairs share a vertex");
  T.reverse(a1.first, a1.second);
  T.reverse(a2.first, a2.second);
  return T;
}

// ---------------------------------------------------------------------------
// Text format: "vertices <n>" then one "<u> <v>" line per arc u -> v.

inline Digraph parse_digraph(std::string_view text) {
  const auto lines = detail::tokenize_lines(text);
  const int n = detail::parse_header(lines, "vertices");
  Digraph g(n);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& l = lines[li];
    if (l.tokens.size() != 2) throw ParseError(l.number, "expected '<u> <v>'");
    const Vertex u = detail::parse_int(l.tokens[0], l.number, "vertex");
    const Vertex v = detail::parse_int(l.tokens[1], l.number, "vertex");
    try {
      g.add_arc(u, v);
    } catch (const TwoCycle& e) {
      throw TwoCycle("line " + std::to_string(l.number) + ": " + e.what());
    } catch (const InvalidTriple& e) {
      throw ParseError(l.number, e.what());
    }
  }
  return g;
}

inline std::string serialize_digraph(const Digraph& g) {
  std::ostringstream out;
  out << "vertices " << g.size() << '\n';
  for (const auto& [u, v] : g.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

inline std::string serialize_tournament(const Tournament& T) {
  return serialize_digraph(T.digraph());
}

}  // namespace ccsys
