#pragma once

// Canonical storage for (partial) boolean functions on ordered triples.
//
// A triple system over points 0..n-1 keeps one sign per canonical triple
// (i < j < k). The value of any ordered triple (p, q, r) is derived from its
// canonical representative, flipped when (p, q, r) is an odd permutation of
// it. Cyclic symmetry and antisymmetry therefore hold by construction, and
// nondegeneracy holds exactly when every canonical triple is assigned.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ccsys/errors.hpp"

namespace ccsys {

using Point = int;

// Upper bound on ground-set size; keeps dense tables and parsers bounded.
inline constexpr int kMaxPoints = 256;

enum class Sign : std::int8_t { minus = -1, plus = 1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::plus ? Sign::minus : Sign::plus;
}
constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::plus : Sign::minus;
}
constexpr Sign to_sign(bool v) noexcept { return v ? Sign::plus : Sign::minus; }
constexpr bool to_bool(Sign s) noexcept { return s == Sign::plus; }
constexpr char sign_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }

struct CanonicalTriple {
  Point i = 0;
  Point j = 0;
  Point k = 0;

  friend auto operator<=>(const CanonicalTriple&, const CanonicalTriple&) = default;
};

struct OrientedTriple {
  Point p = 0;
  Point q = 0;
  Point r = 0;

  friend bool operator==(const OrientedTriple&, const OrientedTriple&) = default;
};

struct Canonicalized {
  CanonicalTriple triple;
  Sign parity = Sign::plus;  // plus iff the input is an even permutation
};

inline std::string to_string(const OrientedTriple& t) {
  return "(" + std::to_string(t.p) + "," + std::to_string(t.q) + "," +
         std::to_string(t.r) + ")";
}

inline std::string to_string(const CanonicalTriple& t) {
  return to_string(OrientedTriple{t.i, t.j, t.k});
}

namespace detail {

// Sorting network with swap parity; no validation.
constexpr Canonicalized canonicalize_unchecked(Point a, Point b, Point c) noexcept {
  bool odd = false;
  if (a > b) { std::swap(a, b); odd = !odd; }
  if (b > c) { std::swap(b, c); odd = !odd; }
  if (a > b) { std::swap(a, b); odd = !odd; }
  return {{a, b, c}, odd ? Sign::minus : Sign::plus};
}

constexpr std::size_t choose2(std::size_t m) noexcept { return m < 2 ? 0 : m * (m - 1) / 2; }
constexpr std::size_t choose3(std::size_t m) noexcept {
  return m < 3 ? 0 : m * (m - 1) * (m - 2) / 6;
}

}  // namespace detail

constexpr std::size_t triple_count(int n) noexcept {
  return n < 3 ? 0 : detail::choose3(static_cast<std::size_t>(n));
}

// Position of t among all canonical triples of an n-point set in
// lexicographic order.
constexpr std::size_t triple_rank(const CanonicalTriple& t, int n) noexcept {
  const auto un = static_cast<std::size_t>(n);
  const auto i = static_cast<std::size_t>(t.i);
  const auto j = static_cast<std::size_t>(t.j);
  const auto k = static_cast<std::size_t>(t.k);
  return detail::choose3(un) - detail::choose3(un - i) + detail::choose2(un - i - 1) -
         detail::choose2(un - j) + (k - j - 1);
}

// All canonical triples of an n-point set, lexicographically ordered; the
// position of each entry equals its triple_rank.
inline std::vector<CanonicalTriple> canonical_triples(int n) {
  std::vector<CanonicalTriple> out;
  out.reserve(triple_count(n));
  for (Point i = 0; i < n; ++i)
    for (Point j = i + 1; j < n; ++j)
      for (Point k = j + 1; k < n; ++k) out.push_back({i, j, k});
  return out;
}

// Throws InvalidTriple on negative or repeated identifiers.
inline Canonicalized canonicalize(const OrientedTriple& t) {
  if (t.p < 0 || t.q < 0 || t.r < 0)
    throw InvalidTriple("negative point identifier in triple " + to_string(t));
  if (t.p == t.q || t.q == t.r || t.p == t.r)
    throw InvalidTriple("triple " + to_string(t) + " repeats a point");
  return detail::canonicalize_unchecked(t.p, t.q, t.r);
}

struct CompletionStatus {
  bool complete = false;
  std::size_t unassigned_count = 0;
};

class PartialTripleSystem {
 public:
  PartialTripleSystem() = default;

  explicit PartialTripleSystem(int n) : n_(n) {
    if (n < 0 || n > kMaxPoints)
      throw InvalidTriple("point count " + std::to_string(n) + " outside 0.." +
                          std::to_string(kMaxPoints));
    signs_.assign(ccsys::triple_count(n), 0);
  }

  int size() const noexcept { return n_; }
  std::size_t triple_count() const noexcept { return signs_.size(); }
  std::size_t assigned_count() const noexcept { return assigned_; }
  bool complete() const noexcept { return assigned_ == signs_.size(); }
  CompletionStatus status() const noexcept {
    return {complete(), signs_.size() - assigned_};
  }

  // Validates range and distinctness against this point set.
  Canonicalized locate(const OrientedTriple& t) const {
    auto c = canonicalize(t);
    if (c.triple.k >= n_)
      throw InvalidTriple("triple " + to_string(t) + " references a point outside 0.." +
                          std::to_string(n_ - 1));
    return c;
  }

  std::optional<bool> value_of(const OrientedTriple& t) const {
    const auto c = locate(t);
    const auto s = signs_[triple_rank(c.triple, n_)];
    if (s == 0) return std::nullopt;
    return to_bool(static_cast<Sign>(s) * c.parity);
  }

  std::optional<Sign> canonical_sign(std::size_t rank) const {
    const auto s = signs_.at(rank);
    if (s == 0) return std::nullopt;
    return static_cast<Sign>(s);
  }
  std::optional<Sign> canonical_sign(const CanonicalTriple& t) const {
    return canonical_sign(triple_rank(locate({t.i, t.j, t.k}).triple, n_));
  }

  // Sets the orbit of t so that value_of(t) == v. Re-assigning the same value
  // is a no-op; the opposite value throws ConflictingAssignment.
  void set(const OrientedTriple& t, bool v) {
    const auto c = locate(t);
    const auto want = static_cast<std::int8_t>(to_sign(v) * c.parity);
    auto& slot = signs_[triple_rank(c.triple, n_)];
    if (slot == want) return;
    if (slot != 0)
      throw ConflictingAssignment("triple " + to_string(t) + " already holds " +
                                  (v ? "false" : "true"));
    slot = want;
    ++assigned_;
  }

  // Overwrites unconditionally; nullopt clears the slot.
  void set_canonical(std::size_t rank, std::optional<Sign> s) {
    auto& slot = signs_.at(rank);
    const std::int8_t next = s ? static_cast<std::int8_t>(*s) : 0;
    if (slot == 0 && next != 0) ++assigned_;
    if (slot != 0 && next == 0) --assigned_;
    slot = next;
  }

  void unassign(const OrientedTriple& t) {
    set_canonical(triple_rank(locate(t).triple, n_), std::nullopt);
  }

  friend bool operator==(const PartialTripleSystem& a, const PartialTripleSystem& b) {
    return a.n_ == b.n_ && a.signs_ == b.signs_;
  }

 private:
  int n_ = 0;
  std::vector<std::int8_t> signs_;
  std::size_t assigned_ = 0;
};

inline std::optional<bool> value_of(const PartialTripleSystem& s, const OrientedTriple& t) {
  return s.value_of(t);
}

// Value-semantics wrapper over PartialTripleSystem::set.
inline PartialTripleSystem assign(PartialTripleSystem s, const OrientedTriple& t, bool v) {
  s.set(t, v);
  return s;
}

// Dense n*n*n table of a complete system for the O(n^5) checkers; every
// ordered triple of distinct points maps to its value directly.
class OrientationTable {
 public:
  explicit OrientationTable(const PartialTripleSystem& s) : n_(s.size()) {
    if (!s.complete())
      throw IncompleteSystem(std::to_string(s.status().unassigned_count) +
                             " canonical triple(s) unassigned");
    const auto un = static_cast<std::size_t>(n_);
    table_.assign(un * un * un, 0);
    for (Point p = 0; p < n_; ++p)
      for (Point q = 0; q < n_; ++q)
        for (Point r = 0; r < n_; ++r) {
          if (p == q || q == r || p == r) continue;
          const auto c = detail::canonicalize_unchecked(p, q, r);
          const auto sign = *s.canonical_sign(triple_rank(c.triple, n_)) * c.parity;
          table_[index(p, q, r)] = to_bool(sign) ? 1 : 0;
        }
  }

  int size() const noexcept { return n_; }
  bool operator()(Point p, Point q, Point r) const noexcept {
    return table_[index(p, q, r)] != 0;
  }

 private:
  std::size_t index(Point p, Point q, Point r) const noexcept {
    const auto un = static_cast<std::size_t>(n_);
    return (static_cast<std::size_t>(p) * un + static_cast<std::size_t>(q)) * un +
           static_cast<std::size_t>(r);
  }

  int n_;
  std::vector<std::uint8_t> table_;
};

// ---------------------------------------------------------------------------
// Realization from planar coordinates. (p, q, r) is true iff the three points
// turn counterclockwise, i.e. the signed area determinant is positive.

template <typename T>
struct Point2 {
  T x{};
  T y{};
  friend bool operator==(const Point2&, const Point2&) = default;
};

// Sign of (b - a) x (c - a): +1 counterclockwise, -1 clockwise, 0 collinear.
// Integral inputs are evaluated exactly in 128-bit arithmetic (coordinates
// must stay below 2^62 in magnitude); floating inputs use the strict sign of
// the computed determinant.
template <typename T>
int orientation(const Point2<T>& a, const Point2<T>& b, const Point2<T>& c) {
  if constexpr (std::is_integral_v<T>) {
    using Wide = __int128;
    const Wide det = (Wide(b.x) - Wide(a.x)) * (Wide(c.y) - Wide(a.y)) -
                     (Wide(b.y) - Wide(a.y)) * (Wide(c.x) - Wide(a.x));
    return (det > 0) - (det < 0);
  } else {
    const auto det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return (det > T{0}) - (det < T{0});
  }
}

template <typename T>
PartialTripleSystem from_points(std::span<const Point2<T>> coords) {
  const int n = static_cast<int>(coords.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coords[a] == coords[b])
        throw DuplicatePoint("points " + std::to_string(a) + " and " + std::to_string(b) +
                             " coincide");
  PartialTripleSystem s(n);
  std::size_t rank = 0;
  for (const auto& t : canonical_triples(n)) {
    const int o = orientation(coords[t.i], coords[t.j], coords[t.k]);
    if (o == 0) throw CollinearTriple("points " + to_string(t) + " are collinear");
    s.set_canonical(rank++, o > 0 ? Sign::plus : Sign::minus);
  }
  return s;
}

template <typename T>
PartialTripleSystem from_points(const std::vector<Point2<T>>& coords) {
  return from_points(std::span<const Point2<T>>(coords));
}

}  // namespace ccsys
