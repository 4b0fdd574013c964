#pragma once

// Exhaustive and seeded-random generation of small systems, digraphs and
// tournaments, plus the brute-force deciders that serve as oracles for the
// solver.
//
// Random generation draws raw 64-bit words from std::mt19937_64, whose output
// sequence is fixed by the C++ standard, and derives every value from those
// words directly (no <random> distributions, which vary across standard
// libraries). The seed-to-output mapping is therefore stable across platforms.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ccsys/axioms.hpp"
#include "ccsys/errors.hpp"
#include "ccsys/tournament.hpp"
#include "ccsys/triple_core.hpp"

namespace ccsys {

inline constexpr int kMaxEnumerationPoints = 6;
inline constexpr std::size_t kMaxFreeTriples = 24;

// The complete system whose sign sequence, read over canonical triples in
// lexicographic order with '+' < '-', is the binary expansion of `pattern`
// (first triple = most significant bit, 1 = '-').
inline PartialTripleSystem complete_system(int n, std::uint64_t pattern) {
  PartialTripleSystem s(n);
  const auto m = s.triple_count();
  for (std::size_t r = 0; r < m; ++r)
    s.set_canonical(r, (pattern >> (m - 1 - r)) & 1 ? Sign::minus : Sign::plus);
  return s;
}

// Every complete system on n points, in lexicographic sign order.
class CompleteSystems {
 public:
  explicit CompleteSystems(int n) : n_(n) {
    if (n < 3 || n > kMaxEnumerationPoints)
      throw GroundSetTooLarge("enumeration supports 3 <= n <= " +
                              std::to_string(kMaxEnumerationPoints) + ", got " + std::to_string(n));
    count_ = std::uint64_t{1} << triple_count(n);
  }

  class iterator {
   public:
    using value_type = PartialTripleSystem;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(int n, std::uint64_t pattern) : n_(n), pattern_(pattern) {}

    PartialTripleSystem operator*() const { return complete_system(n_, pattern_); }
    iterator& operator++() {
      ++pattern_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++pattern_;
      return old;
    }
    std::uint64_t pattern() const noexcept { return pattern_; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.pattern_ == b.pattern_;
    }

   private:
    int n_ = 0;
    std::uint64_t pattern_ = 0;
  };

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, count_}; }
  std::uint64_t size() const noexcept { return count_; }

 private:
  int n_;
  std::uint64_t count_ = 0;
};

inline CompleteSystems enumerate_complete(int n) { return CompleteSystems(n); }

struct ClassCensus {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t pre_cc = 0;
  std::uint64_t cc = 0;
  std::uint64_t chirotope = 0;

  ClassCensus& operator+=(const ClassCensus& o) {
    total += o.total;
    pre_cc += o.pre_cc;
    cc += o.cc;
    chirotope += o.chirotope;
    return *this;
  }
  friend bool operator==(const ClassCensus&, const ClassCensus&) = default;
};

namespace detail {

// Each flag is tallied from its own checker, with no cross-checking, so
// the pre-CC and chirotope columns stay independent.
inline ClassCensus census_range(int n, std::uint64_t first, std::uint64_t last) {
  ClassCensus c;
  c.n = n;
  for (std::uint64_t pat = first; pat < last; ++pat) {
    const OrientationTable v(complete_system(n, pat));
    const bool a5 = satisfies_axiom5(v);
    ++c.total;
    if (a5) ++c.pre_cc;
    if (a5 && satisfies_axiom4(v)) ++c.cc;
    if (satisfies_gpr(v)) ++c.chirotope;
  }
  return c;
}

}  // namespace detail

// Labeled class counts over all 2^C(n,3) complete systems. The pattern space
// is split into `jobs` contiguous ranges tallied on separate threads.
inline ClassCensus census(int n, unsigned jobs = 1) {
  const CompleteSystems all(n);
  const std::uint64_t total = all.size();
  jobs = std::max(1u, std::min<unsigned>(jobs, 64));
  std::vector<ClassCensus> parts(jobs);
  std::vector<std::thread> workers;
  for (unsigned j = 0; j < jobs; ++j) {
    const auto first = total * j / jobs;
    const auto last = total * (j + 1) / jobs;
    if (j + 1 == jobs) {
      parts[j] = detail::census_range(n, first, last);
    } else {
      workers.emplace_back([&parts, j, n, first, last] { parts[j] = detail::census_range(n, first, last); });
    }
  }
  for (auto& w : workers) w.join();
  ClassCensus out;
  out.n = n;
  for (const auto& p : parts) out += p;
  return out;
}

// Tries every assignment of the unassigned triples.
inline bool brute_force_extendable(const PartialTripleSystem& s, Target target) {
  std::vector<std::size_t> free;
  for (std::size_t r = 0; r < s.triple_count(); ++r)
    if (!s.canonical_sign(r)) free.push_back(r);
  if (free.size() > kMaxFreeTriples)
    throw TooManyFreeTriples(std::to_string(free.size()) + " unassigned triples exceed the limit of " +
                             std::to_string(kMaxFreeTriples));
  PartialTripleSystem work = s;
  const std::uint64_t combos = std::uint64_t{1} << free.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    for (std::size_t i = 0; i < free.size(); ++i)
      work.set_canonical(free[i], (mask >> i) & 1 ? Sign::minus : Sign::plus);
    if (satisfies(OrientationTable(work), target)) return true;
  }
  return false;
}

// Whether some orientation of g's missing pairs is vortex-free, by trying
// all of them.
inline bool brute_force_completion(const Digraph& g) {
  const auto missing = g.missing_pairs();
  if (missing.size() > kMaxFreeTriples)
    throw TooManyFreeTriples(std::to_string(missing.size()) + " missing pairs exceed the limit");
  const std::uint64_t combos = std::uint64_t{1} << missing.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    Digraph h = g;
    for (std::size_t i = 0; i < missing.size(); ++i) {
      const auto [u, v] = missing[i];
      if ((mask >> i) & 1)
        h.add_arc(v, u);
      else
        h.add_arc(u, v);
    }
    if (is_vortex_free(Tournament(std::move(h)))) return true;
  }
  return false;
}

// All 2^C(n,2) tournaments on n vertices.
inline std::vector<Tournament> all_tournaments(int n) {
  std::vector<Arc> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  if (pairs.size() > 20) throw GroundSetTooLarge("too many tournaments to list");
  std::vector<Tournament> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Digraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [u, v] = pairs[i];
      if ((mask >> i) & 1)
        g.add_arc(v, u);
      else
        g.add_arc(u, v);
    }
    out.emplace_back(std::move(g));
  }
  return out;
}

// All 3^C(n,2) digraphs without 2-cycles: each pair absent, u -> v or v -> u.
inline std::vector<Digraph> all_digraphs(int n) {
  std::vector<Arc> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  if (pairs.size() > 12) throw GroundSetTooLarge("too many digraphs to list");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
  std::vector<Digraph> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    Digraph g(n);
    auto rest = code;
    for (const auto& [u, v] : pairs) {
      const auto state = rest % 3;
      rest /= 3;
      if (state == 1) g.add_arc(u, v);
      if (state == 2) g.add_arc(v, u);
    }
    out.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Seeded generators.

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, 1) with 53 bits of resolution.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool coin() { return (next() >> 63) != 0; }
  // Uniform on [lo, hi] (modulo bias is negligible for the small ranges used).
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::mt19937_64 engine_;
};

// Each canonical triple is assigned with probability `density`, with a
// uniformly random sign.
inline PartialTripleSystem random_partial(int n, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
  SeededRng rng(seed);
  PartialTripleSystem s(n);
  for (std::size_t r = 0; r < s.triple_count(); ++r) {
    const bool present = rng.unit() < density;
    const bool plus = rng.coin();
    if (present) s.set_canonical(r, plus ? Sign::plus : Sign::minus);
  }
  return s;
}

inline Tournament random_tournament(int n, std::uint64_t seed) {
  SeededRng rng(seed);
  Digraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.coin())
        g.add_arc(u, v);
      else
        g.add_arc(v, u);
    }
  return Tournament(std::move(g));
}

// Each pair is present with probability `density`, oriented uniformly.
inline Digraph random_digraph(int n, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
  SeededRng rng(seed);
  Digraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const bool present = rng.unit() < density;
      const bool forward = rng.coin();
      if (!present) continue;
      if (forward)
        g.add_arc(u, v);
      else
        g.add_arc(v, u);
    }
  return g;
}

// n integral points in [-range, range]^2, no two equal and no three collinear.
inline std::vector<Point2<std::int64_t>> random_general_position(int n, std::uint64_t seed,
                                                                 std::int64_t range = 1000) {
  SeededRng rng(seed);
  std::vector<Point2<std::int64_t>> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Point2<std::int64_t> cand{rng.between(-range, range), rng.between(-range, range)};
    bool ok = true;
    for (std::size_t a = 0; a < pts.size() && ok; ++a) {
      if (pts[a] == cand) ok = false;
      for (std::size_t b = a + 1; b < pts.size() && ok; ++b)
        if (orientation(pts[a], pts[b], cand) == 0) ok = false;
    }
    if (ok) pts.push_back(cand);
  }
  return pts;
}

}  // namespace ccsys
