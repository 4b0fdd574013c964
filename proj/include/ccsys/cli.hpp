#pragma once

// Command-line front end. run() is the whole program minus process setup so
// that tests can drive it in-process.
//
// Exit codes: 0 success, 1 negative decision (class fails, unextendable,
// vortex found), 2 usage or input error, 3 inconclusive (decision limit).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ccsys/axioms.hpp"
#include "ccsys/cnf.hpp"
#include "ccsys/enumeration.hpp"
#include "ccsys/errors.hpp"
#include "ccsys/extend.hpp"
#include "ccsys/reduction.hpp"
#include "ccsys/text_format.hpp"
#include "ccsys/tournament.hpp"

namespace ccsys::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kInconclusive = 3 };

namespace detail {

using nlohmann::json;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

inline std::string read_input(const std::string& path, Io& io) {
  if (path == "-") return read_all(io.in);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "'");
  return read_all(f);
}

inline void write_output(const std::string& path, const std::string& text, Io& io) {
  if (path == "-") {
    io.out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
  if (!f) throw Error("failed writing '" + path + "'");
}

inline json to_json(const Classification& c) {
  return {{"a4_ok", c.a4_ok},         {"a5_ok", c.a5_ok},   {"a5p_ok", c.a5p_ok},
          {"gpr_ok", c.gpr_ok},       {"is_pre_cc", c.is_pre_cc},
          {"is_cc", c.is_cc},         {"is_chirotope", c.is_chirotope}};
}

inline json to_json(const SolverStats& s) {
  return {{"decisions", s.decisions}, {"propagations", s.propagations}, {"conflicts", s.conflicts}};
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct Options {
  std::string format = "text";
  // check
  std::string check_path;
  std::string check_class = "cc";
  bool witnesses = false;
  // extend
  std::string extend_path;
  std::string target = "pre-cc";
  std::string out_path;
  std::string cnf_path;
  std::optional<std::uint64_t> decision_limit;
  bool direct_gpr = false;
  bool no_dual = false;
  // digraph
  std::string digraph_path;
  bool cross_check = false;
  // census
  int census_n = 0;
  unsigned jobs = 1;
};

inline bool json_mode(const Options& o) { return o.format == "json-lines"; }

inline int cmd_check(const Options& o, Io& io) {
  const auto s = parse_system(read_input(o.check_path, io));
  if (!s.complete())
    throw IncompleteSystem("system has " + std::to_string(s.status().unassigned_count) +
                           " unassigned canonical triple(s)");
  const auto c = classify(s);
  const bool holds = o.check_class == "cc"          ? c.is_cc
                     : o.check_class == "pre-cc"    ? c.is_pre_cc
                                                    : c.is_chirotope;
  std::vector<AxiomViolation> violations;
  if (o.witnesses) {
    for (auto* check : {&check_axiom4, &check_axiom5, &check_axiom5prime, &check_gpr}) {
      auto v = check(s);
      violations.insert(violations.end(), v.begin(), v.end());
    }
  }
  const int code = holds ? kOk : kNegative;
  if (json_mode(o)) {
    json j{{"command", "check"}, {"points", s.size()}, {"classification", to_json(c)},
           {"class", o.check_class}, {"holds", holds}, {"exit_code", code}};
    if (o.witnesses) {
      j["violations"] = json::array();
      for (const auto& v : violations) j["violations"].push_back(to_string(v));
    }
    io.out << j.dump() << '\n';
  } else {
    io.out << "points " << s.size() << '\n'
           << "axiom4 " << (c.a4_ok ? "ok" : "violated") << '\n'
           << "axiom5 " << (c.a5_ok ? "ok" : "violated") << '\n'
           << "axiom5prime " << (c.a5p_ok ? "ok" : "violated") << '\n'
           << "gpr " << (c.gpr_ok ? "ok" : "violated") << '\n'
           << "cc " << yes_no(c.is_cc) << '\n'
           << "pre-cc " << yes_no(c.is_pre_cc) << '\n'
           << "chirotope " << yes_no(c.is_chirotope) << '\n';
    for (const auto& v : violations) io.out << to_string(v) << '\n';
    io.out << "result " << o.check_class << (holds ? " holds" : " fails") << '\n';
  }
  return code;
}

inline int report_outcome(const SolveOutcome& outcome, const std::string& what, const Options& o,
                          Io& io) {
  const int code = outcome.verdict == Verdict::extendable     ? kOk
                   : outcome.verdict == Verdict::unextendable ? kNegative
                                                              : kInconclusive;
  if (outcome.witness && !o.out_path.empty())
    write_output(o.out_path, serialize_system(outcome.witness->extension), io);
  if (json_mode(o)) {
    json j{{"command", what}, {"target", o.target}, {"result", verdict_name(outcome.verdict)},
           {"stats", to_json(outcome.stats)}, {"exit_code", code}};
    if (outcome.witness) {
      j["classification"] = to_json(outcome.witness->report);
      if (o.out_path.empty()) j["witness"] = serialize_system(outcome.witness->extension);
    }
    io.out << j.dump() << '\n';
    return code;
  }
  io.out << "# result " << verdict_name(outcome.verdict) << '\n'
         << "# target " << o.target << '\n'
         << "# decisions " << outcome.stats.decisions << '\n'
         << "# propagations " << outcome.stats.propagations << '\n'
         << "# conflicts " << outcome.stats.conflicts << '\n';
  if (outcome.witness && o.out_path.empty())
    io.out << serialize_system(outcome.witness->extension);
  return code;
}

inline int cmd_extend(const Options& o, Io& io) {
  const auto s = parse_system(read_input(o.extend_path, io));
  ExtendOptions opts;
  opts.encoding.direct_gpr = o.direct_gpr;
  opts.encoding.dual_transitivity = !o.no_dual;
  opts.solver.decision_limit = o.decision_limit;
  const Target target = o.target == "cc" ? Target::cc : Target::pre_cc;
  if (!o.cnf_path.empty()) {
    const auto f = encode(s, target, opts.encoding);
    write_output(o.cnf_path, export_dimacs(f), io);
    if (o.cnf_path != "-") {
      if (json_mode(o))
        io.out << json{{"command", "extend"}, {"emitted", o.cnf_path}, {"variables", f.var_count},
                       {"clauses", f.clauses.size()}, {"exit_code", 0}}
                      .dump()
               << '\n';
      else
        io.out << "# wrote " << f.var_count << " variables, " << f.clauses.size()
               << " clauses to " << o.cnf_path << '\n';
    }
    return kOk;
  }
  return report_outcome(extend(s, target, opts), "extend", o, io);
}

inline int cmd_vortices(const Options& o, Io& io) {
  const auto g = parse_digraph(read_input(o.digraph_path, io));
  const Tournament T(g);
  const auto vs = find_vortices(T);
  const int code = vs.empty() ? kOk : kNegative;
  if (json_mode(o)) {
    json j{{"command", "vortices"}, {"count", vs.size()}, {"vortices", json::array()},
           {"exit_code", code}};
    for (const auto& v : vs) j["vortices"].push_back(to_string(v));
    io.out << j.dump() << '\n';
  } else {
    for (const auto& v : vs) io.out << to_string(v) << '\n';
    io.out << "vortices " << vs.size() << '\n';
  }
  return code;
}

inline int cmd_complete(const Options& o, Io& io) {
  const auto g = parse_digraph(read_input(o.digraph_path, io));
  bool ok = false;
  try {
    ok = decide_completion(g, {o.decision_limit});
  } catch (const Inconclusive&) {
    if (json_mode(o))
      io.out << json{{"command", "complete"}, {"result", "inconclusive"}, {"exit_code", 3}}.dump()
             << '\n';
    else
      io.out << "completion inconclusive\n";
    return kInconclusive;
  }
  std::optional<bool> brute;
  if (o.cross_check) brute = brute_force_completion(g);
  const int code = ok ? kOk : kNegative;
  if (json_mode(o)) {
    json j{{"command", "complete"}, {"completable", ok}, {"exit_code", code}};
    if (brute) j["brute_force"] = *brute;
    io.out << j.dump() << '\n';
  } else {
    io.out << "completion " << (ok ? "exists" : "impossible") << '\n';
    if (brute) io.out << "brute-force " << (*brute ? "exists" : "impossible") << '\n';
  }
  if (brute && *brute != ok) {
    io.err << "error: solver and brute-force completion disagree\n";
    return kInputError;
  }
  return code;
}

inline int cmd_lift(const Options& o, Io& io) {
  const auto g = parse_digraph(read_input(o.digraph_path, io));
  const Tournament T(g);
  const auto vs = find_vortices(T);
  if (!vs.empty()) {
    if (json_mode(o))
      io.out << json{{"command", "lift"}, {"vortex", to_string(vs.front())}, {"exit_code", 1}}.dump()
             << '\n';
    else
      io.out << "not vortex-free: " << to_string(vs.front()) << '\n';
    return kNegative;
  }
  PartialTripleSystem lifted;
  try {
    lifted = lift_tournament(T, {o.decision_limit});
  } catch (const Inconclusive&) {
    io.out << "lift inconclusive\n";
    return kInconclusive;
  }
  const auto text = serialize_system(lifted);
  if (!o.out_path.empty() && o.out_path != "-") {
    write_output(o.out_path, text, io);
    if (json_mode(o))
      io.out << json{{"command", "lift"}, {"points", lifted.size()}, {"apex", T.size()},
                     {"exit_code", 0}}.dump()
             << '\n';
    else
      io.out << "# lifted to " << lifted.size() << " points, apex " << T.size() << '\n';
  } else if (json_mode(o)) {
    io.out << json{{"command", "lift"}, {"points", lifted.size()}, {"apex", T.size()},
                   {"system", text}, {"exit_code", 0}}.dump()
           << '\n';
  } else {
    io.out << "# apex " << T.size() << '\n' << text;
  }
  return kOk;
}

inline int cmd_to_triples(const Options& o, Io& io) {
  const auto g = parse_digraph(read_input(o.digraph_path, io));
  const auto inst = digraph_to_partial(g);
  const auto text = serialize_system(inst.system);
  if (!o.out_path.empty() && o.out_path != "-") {
    write_output(o.out_path, text, io);
    io.out << "# apex " << inst.apex << '\n';
  } else {
    io.out << "# apex " << inst.apex << '\n' << text;
  }
  return kOk;
}

inline int cmd_census(const Options& o, Io& io) {
  if (o.census_n < 3 || o.census_n > kMaxEnumerationPoints)
    throw GroundSetTooLarge("census supports 3 <= n <= " + std::to_string(kMaxEnumerationPoints));
  const auto c = census(o.census_n, o.jobs);
  const bool counts_consistent = c.pre_cc == c.chirotope && c.cc <= c.pre_cc && c.pre_cc <= c.total;
  const int code = counts_consistent ? kOk : kNegative;
  if (json_mode(o)) {
    io.out << json{{"command", "census"}, {"n", c.n},   {"total", c.total},
                   {"pre_cc", c.pre_cc},  {"cc", c.cc}, {"chirotope", c.chirotope},
                   {"exit_code", code}}.dump()
           << '\n';
  } else {
    io.out << "n  total  pre_cc  cc  chirotope\n"
           << c.n << "  " << c.total << "  " << c.pre_cc << "  " << c.cc << "  " << c.chirotope
           << '\n';
  }
  if (!counts_consistent) io.err << "error: pre-cc and chirotope counts differ\n";
  return code;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  detail::Io io{in, out, err};
  detail::Options o;

  CLI::App app{"Triple-orientation systems: axiom checks, extension, tournaments, census",
               "ccsys"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}))
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "Classify a complete triple system");
  check->add_option("path", o.check_path, "Triple-system file, '-' for stdin")->required();
  check->add_option("--class", o.check_class, "Class to test")
      ->check(CLI::IsMember({"cc", "pre-cc", "chirotope"}))
      ->capture_default_str();
  check->add_flag("--witnesses", o.witnesses, "List every axiom violation");

  auto* ext = app.add_subcommand("extend", "Decide extendability of a partial triple system");
  ext->add_option("path", o.extend_path, "Triple-system file, '-' for stdin")->required();
  ext->add_option("--target", o.target, "Target class")
      ->check(CLI::IsMember({"pre-cc", "cc"}))
      ->capture_default_str();
  ext->add_option("--out", o.out_path, "Write the witness system here");
  ext->add_option("--emit-cnf", o.cnf_path, "Write DIMACS CNF here instead of solving");
  ext->add_option("--decision-limit", o.decision_limit, "Give up after this many decisions");
  ext->add_flag("--direct-gpr", o.direct_gpr, "Encode the chirotope relations directly");
  ext->add_flag("--no-dual", o.no_dual, "Omit the redundant dual transitivity clauses");

  auto* dg = app.add_subcommand("digraph", "Digraph and tournament operations");
  dg->require_subcommand(1);
  auto* vort = dg->add_subcommand("vortices", "List vortices of a tournament");
  auto* comp = dg->add_subcommand("complete", "Decide completion to a vortex-free tournament");
  auto* lift = dg->add_subcommand("lift", "Lift a vortex-free tournament to a CC-system");
  auto* tot = dg->add_subcommand("to-triples", "Write the apex partial triple system");
  for (auto* sub : {vort, comp, lift, tot})
    sub->add_option("path", o.digraph_path, "Digraph file, '-' for stdin")->required();
  for (auto* sub : {comp, lift})
    sub->add_option("--decision-limit", o.decision_limit, "Give up after this many decisions");
  comp->add_flag("--cross-check", o.cross_check, "Also decide by brute force over orientations");
  for (auto* sub : {lift, tot}) sub->add_option("--out", o.out_path, "Write the system here");

  auto* cen = app.add_subcommand("census", "Count complete systems per class");
  cen->add_option("n", o.census_n, "Number of points (3..6)")->required();
  cen->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();

  std::vector<const char*> argv{"ccsys"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*check) return detail::cmd_check(o, io);
    if (*ext) return detail::cmd_extend(o, io);
    if (*vort) return detail::cmd_vortices(o, io);
    if (*comp) return detail::cmd_complete(o, io);
    if (*lift) return detail::cmd_lift(o, io);
    if (*tot) return detail::cmd_to_triples(o, io);
    if (*cen) return detail::cmd_census(o, io);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace ccsys::cli
