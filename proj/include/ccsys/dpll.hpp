#pragma once

// Chronological-backtracking DPLL with two-watched-literal unit propagation.
//
// No clause learning, restarts or preprocessing. Decisions pick the lowest
// unassigned variable and try true first, so runs are fully deterministic.

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <vector>

namespace ccsys {

enum class SatStatus { satisfiable, unsatisfiable, unknown };

struct SolverStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;  // literals assigned by unit propagation
  std::uint64_t conflicts = 0;

  friend bool operator==(const SolverStats&, const SolverStats&) = default;
};

struct SolverOptions {
  // Search gives up with SatStatus::unknown once this many decisions are made.
  std::optional<std::uint64_t> decision_limit;
};

struct SatResult {
  SatStatus status = SatStatus::unknown;
  std::vector<bool> model;  // model[v - 1] for variable v; empty unless satisfiable
  SolverStats stats;
};

class DpllSolver {
 public:
  DpllSolver(int var_count, std::span<const std::vector<int>> clauses)
      : var_count_(var_count),
        value_(static_cast<std::size_t>(var_count) + 1, kUnassigned),
        watches_(2 * (static_cast<std::size_t>(var_count) + 1)) {
    for (const auto& c : clauses) add_clause(c);
  }

  SatResult solve(const SolverOptions& opts = {}) {
    SatResult res;
    res.status = search(opts);
    res.stats = stats_;
    if (res.status == SatStatus::satisfiable) {
      res.model.resize(static_cast<std::size_t>(var_count_));
      for (int v = 1; v <= var_count_; ++v)
        res.model[static_cast<std::size_t>(v - 1)] = value_[static_cast<std::size_t>(v)] == kTrue;
    }
    return res;
  }

 private:
  static constexpr std::int8_t kUnassigned = -1;
  static constexpr std::int8_t kFalse = 0;
  static constexpr std::int8_t kTrue = 1;

  struct Level {
    std::size_t trail_start;
    int decision;
    bool flipped;  // second polarity already being explored
  };

  // Literal l maps to watch slot 2*|l| + (l < 0).
  static std::size_t slot(int lit) {
    return 2 * static_cast<std::size_t>(std::abs(lit)) + (lit < 0 ? 1 : 0);
  }

  std::int8_t lit_value(int lit) const {
    const auto v = value_[static_cast<std::size_t>(std::abs(lit))];
    if (v == kUnassigned) return kUnassigned;
    return lit > 0 ? v : static_cast<std::int8_t>(1 - v);
  }

  void add_clause(const std::vector<int>& raw) {
    std::vector<int> c;
    for (int l : raw) {
      bool dup = false;
      for (int m : c) {
        if (m == l) dup = true;
        if (m == -l) return;  // tautology
      }
      if (!dup) c.push_back(l);
    }
    if (c.empty()) {
      has_empty_clause_ = true;
      return;
    }
    if (c.size() == 1) {
      units_.push_back(c[0]);
      return;
    }
    const auto id = clauses_.size();
    watches_[slot(c[0])].push_back(id);
    watches_[slot(c[1])].push_back(id);
    clauses_.push_back(std::move(c));
  }

  void enqueue(int lit) {
    value_[static_cast<std::size_t>(std::abs(lit))] = lit > 0 ? kTrue : kFalse;
    trail_.push_back(lit);
  }

  // Returns false on conflict.
  bool propagate() {
    while (head_ < trail_.size()) {
      const int falsified = -trail_[head_++];
      auto& ws = watches_[slot(falsified)];
      std::size_t keep = 0;
      bool conflict = false;
      for (std::size_t w = 0; w < ws.size(); ++w) {
        const auto id = ws[w];
        if (conflict) {
          ws[keep++] = id;
          continue;
        }
        auto& c = clauses_[id];
        if (c[0] == falsified) std::swap(c[0], c[1]);
        if (lit_value(c[0]) == kTrue) {
          ws[keep++] = id;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k)
          if (lit_value(c[k]) != kFalse) {
            std::swap(c[1], c[k]);
            watches_[slot(c[1])].push_back(id);
            moved = true;
            break;
          }
        if (moved) continue;
        ws[keep++] = id;
        if (lit_value(c[0]) == kFalse) {
          conflict = true;
        } else {
          enqueue(c[0]);
          ++stats_.propagations;
        }
      }
      ws.resize(keep);
      if (conflict) return false;
    }
    return true;
  }

  void undo_to(std::size_t trail_size) {
    while (trail_.size() > trail_size) {
      value_[static_cast<std::size_t>(std::abs(trail_.back()))] = kUnassigned;
      trail_.pop_back();
    }
    head_ = trail_size;
  }

  int pick_variable() const {
    for (int v = 1; v <= var_count_; ++v)
      if (value_[static_cast<std::size_t>(v)] == kUnassigned) return v;
    return 0;
  }

  SatStatus search(const SolverOptions& opts) {
    if (has_empty_clause_) return SatStatus::unsatisfiable;
    for (int u : units_) {
      const auto v = lit_value(u);
      if (v == kFalse) {
        ++stats_.conflicts;
        return SatStatus::unsatisfiable;
      }
      if (v == kUnassigned) {
        enqueue(u);
        ++stats_.propagations;
      }
    }
    if (!propagate()) {
      ++stats_.conflicts;
      return SatStatus::unsatisfiable;
    }

    std::vector<Level> levels;
    for (;;) {
      const int var = pick_variable();
      if (var == 0) return SatStatus::satisfiable;
      if (opts.decision_limit && stats_.decisions >= *opts.decision_limit)
        return SatStatus::unknown;
      ++stats_.decisions;
      levels.push_back({trail_.size(), var, false});
      enqueue(var);

      while (!propagate()) {
        ++stats_.conflicts;
        while (!levels.empty() && levels.back().flipped) {
          undo_to(levels.back().trail_start);
          levels.pop_back();
        }
        if (levels.empty()) return SatStatus::unsatisfiable;
        auto& top = levels.back();
        undo_to(top.trail_start);
        top.decision = -top.decision;
        top.flipped = true;
        enqueue(top.decision);
      }
    }
  }

  int var_count_;
  std::vector<std::int8_t> value_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<std::vector<int>> clauses_;
  std::vector<int> units_;
  bool has_empty_clause_ = false;
  std::vector<int> trail_;
  std::size_t head_ = 0;
  SolverStats stats_;
};

}  // namespace ccsys
