#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "argclinic/aba/framework.hpp"
#include "argclinic/aba/goals.hpp"
#include "argclinic/aba/semantics.hpp"
#include "argclinic/error.hpp"
#include "argclinic/io/aba_text.hpp"
#include "argclinic/io/bundle.hpp"
#include "argclinic/io/report.hpp"
#include "argclinic/oracle/brute_force.hpp"
#include "argclinic/random.hpp"
#include "argclinic/tmr/mapper.hpp"

namespace argclinic::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kParse = 2,
  kSizeLimit = 3,
  kOracleDisagreement = 4,
};

inline int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::SchemaError:
      return kParse;
    case ErrorKind::SizeLimitExceeded:
    case ErrorKind::OracleSizeExceeded:
      return kSizeLimit;
    default:
      return kValidation;
  }
}

namespace detail {

struct InputOptions {
  std::string bundle;
  std::string aba;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* b = cmd->add_option("--bundle", in.bundle, "JSON guideline bundle");
  auto* a = cmd->add_option("--aba", in.aba, "ABA+ framework in text format");
  b->excludes(a);
  a->excludes(b);
}

inline void require_input(const InputOptions& in) {
  if (in.bundle.empty() && in.aba.empty()) {
    throw CLI::RequiredError("--bundle or --aba");
  }
}

inline tmr::Solution solve_bundle(const std::string& path, const aba::EnumerationOptions& opts) {
  auto b = io::parse_bundle(read_file(path));
  return tmr::resolve(b.recommendations, b.interactions, b.context, opts);
}

inline aba::Framework framework_of(const InputOptions& in) {
  if (!in.aba.empty()) return io::load_aba_text(read_file(in.aba)).base;
  auto b = io::parse_bundle(read_file(in.bundle));
  return tmr::build_patient_framework(b.recommendations, b.interactions, b.context).framework.base;
}

struct OracleOptions {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t max_assumptions = 8;
};

inline int run_oracle(const OracleOptions& o, std::ostream& out) {
  if (o.max_assumptions > oracle::kOracleCap) {
    throw Error(ErrorKind::OracleSizeExceeded, "--max-assumptions must be at most 15");
  }
  gen::Rng rng(o.seed);
  gen::FrameworkParams params;
  params.max_assumptions = std::max<std::size_t>(o.max_assumptions, 1);
  params.max_rules = 2 * params.max_assumptions;
  const aba::EnumerationOptions unlimited{aba::kMaxAssumptions};
  for (std::size_t k = 0; k < o.count; ++k) {
    const auto fg = gen::random_goal_framework(rng, params);
    const auto engine = aba::preferred_extensions(fg.base, unlimited);
    const auto brute = oracle::brute_force_preferred(fg.base);
    const auto engine_top = aba::top_goal_extensions(fg, unlimited);
    const auto brute_top = oracle::brute_force_top_goals(fg);
    if (engine == brute && engine_top == brute_top) continue;
    out << "disagreement on instance " << k + 1 << " of " << o.count << " (seed " << o.seed
        << ")\n";
    const io::FrameworkResult er{engine, {}, engine_top};
    const io::FrameworkResult br{brute, {}, brute_top};
    out << "engine:\n";
    io::write_extensions_text(out, fg.base, er, false);
    out << "oracle:\n";
    io::write_extensions_text(out, fg.base, br, false);
    out << "counterexample:\n" << io::serialize_aba_text(fg);
    return kOracleDisagreement;
  }
  out << "agreement: " << o.count << "/" << o.count << " instances (seed " << o.seed
      << ", at most " << params.max_assumptions << " assumptions)\n";
  return kOk;
}

}  // namespace detail

// Runs one command line; args[0] is the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resolves conflicts among clinical guideline recommendations with ABA+G"};
  app.require_subcommand(1);

  detail::InputOptions solve_in;
  std::string format = "text";
  bool quiet = false;
  auto* solve = app.add_subcommand("solve", "Compute preferred, goal and top goal extensions");
  detail::add_input_options(solve, solve_in);
  solve->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  solve->add_flag("--quiet", quiet, "Print the preferred extensions only");

  std::string map_bundle;
  auto* map = app.add_subcommand("map", "Print the generated ABA+G framework");
  map->add_option("--bundle", map_bundle, "JSON guideline bundle")->required();

  detail::InputOptions check_in;
  auto* check = app.add_subcommand("check", "Validate the input only");
  detail::add_input_options(check, check_in);

  detail::InputOptions explain_in;
  auto* explain = app.add_subcommand("explain", "List argument supports and attacks");
  detail::add_input_options(explain, explain_in);

  detail::OracleOptions oracle_opts;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare the engine with brute force");
  oracle_cmd->add_option("--seed", oracle_opts.seed, "Random seed");
  oracle_cmd->add_option("--count", oracle_opts.count, "Number of random instances");
  oracle_cmd->add_option("--max-assumptions", oracle_opts.max_assumptions,
                         "Largest instance size (at most 15)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  const auto opts = aba::EnumerationOptions::from_environment();
  try {
    if (solve->parsed()) {
      detail::require_input(solve_in);
      if (!solve_in.bundle.empty()) {
        const auto s = detail::solve_bundle(solve_in.bundle, opts);
        const auto& f = s.patient.framework.base;
        if (format == "json") {
          auto j = quiet ? io::framework_result_json(f, {s.preferred, {}, {}}, false) : io::solution_json(s);
          out << j.dump(2) << "\n";
        } else if (quiet) {
          for (auto e : s.preferred) out << io::format_set(f, e) << "\n";
        } else {
          io::write_solution_text(out, s);
        }
      } else {
        const auto loaded = io::load_aba_text(detail::read_file(solve_in.aba));
        const bool goals = loaded.priority.has_value() && !quiet;
        const auto r = io::solve_framework(loaded.base, loaded.priority, opts);
        if (format == "json") {
          out << io::framework_result_json(loaded.base, r, goals).dump(2) << "\n";
        } else if (quiet) {
          for (auto e : r.preferred) out << io::format_set(loaded.base, e) << "\n";
        } else {
          io::write_extensions_text(out, loaded.base, r, goals);
        }
      }
      return kOk;
    }
    if (map->parsed()) {
      const auto b = io::parse_bundle(detail::read_file(map_bundle));
      const auto pf = tmr::build_patient_framework(b.recommendations, b.interactions, b.context);
      out << io::serialize_aba_text(pf.framework);
      io::write_mapping_report(out, pf.report);
      return kOk;
    }
    if (check->parsed()) {
      detail::require_input(check_in);
      const auto f = detail::framework_of(check_in);
      out << "ok: " << f.assumption_count() << " assumptions, " << f.rules().size() << " rules\n";
      return kOk;
    }
    if (explain->parsed()) {
      detail::require_input(explain_in);
      io::write_explanation(out, detail::framework_of(explain_in));
      return kOk;
    }
    if (oracle_cmd->parsed()) return detail::run_oracle(oracle_opts, out);
  } catch (const CLI::RequiredError& e) {
    err << "error: " << e.what() << " is required\n";
    return kParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kParse;
}

}  // namespace argclinic::cli
