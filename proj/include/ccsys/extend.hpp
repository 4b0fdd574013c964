#pragma once

// Extension of partial triple systems to pre-CC-systems (equivalently,
// uniform chirotopes) or CC-systems: encode, solve, decode, verify.

#include <optional>
#include <stdexcept>
#include <string>

#include "ccsys/axioms.hpp"
#include "ccsys/cnf.hpp"
#include "ccsys/dpll.hpp"
#include "ccsys/triple_core.hpp"

namespace ccsys {

struct Witness {
  PartialTripleSystem extension;
  Target verified_class = Target::pre_cc;
  Classification report;
};

enum class Verdict { extendable, unextendable, inconclusive };

inline const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::extendable: return "extendable";
    case Verdict::unextendable: return "unextendable";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct SolveOutcome {
  Verdict verdict = Verdict::inconclusive;
  std::optional<Witness> witness;  // present iff verdict == extendable
  SolverStats stats;

  bool extendable() const noexcept { return verdict == Verdict::extendable; }
};

struct ExtendOptions {
  EncodeOptions encoding;
  SolverOptions solver;
};

// Solves a formula whose var_map covers every canonical triple of
// f.points. A satisfying assignment is decoded and verified against
// f.target and f.fixed; a failed verification throws std::logic_error.
inline SolveOutcome solve(const CnfFormula& f, const SolverOptions& opts = {}) {
  if (!f.has_full_var_map())
    throw std::invalid_argument("formula lacks a complete variable-to-triple mapping");
  DpllSolver solver(f.var_count, f.clauses);
  auto res = solver.solve(opts);

  SolveOutcome out;
  out.stats = res.stats;
  switch (res.status) {
    case SatStatus::unsatisfiable: out.verdict = Verdict::unextendable; return out;
    case SatStatus::unknown: out.verdict = Verdict::inconclusive; return out;
    case SatStatus::satisfiable: break;
  }

  PartialTripleSystem ext(f.points);
  for (std::size_t r = 0; r < res.model.size(); ++r)
    ext.set_canonical(r, res.model[r] ? Sign::plus : Sign::minus);
  for (std::size_t r = 0; r < f.fixed.triple_count(); ++r) {
    const auto want = f.fixed.canonical_sign(r);
    if (want && ext.canonical_sign(r) != want)
      throw std::logic_error("decoded witness disagrees with fixed triple " +
                             to_string(f.var_map[r]));
  }
  const auto report = classify(ext);
  if (!in_class(report, f.target))
    throw std::logic_error(std::string("decoded witness is not a ") + target_name(f.target) +
                           " system");
  out.verdict = Verdict::extendable;
  out.witness = Witness{std::move(ext), f.target, report};
  return out;
}

inline SolveOutcome extend(const PartialTripleSystem& s, Target target,
                           const ExtendOptions& opts = {}) {
  return solve(encode(s, target, opts.encoding), opts.solver);
}

}  // namespace ccsys
