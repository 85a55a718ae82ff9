#pragma once

// Command-line front end. `run_cli` is the whole program minus argv
// handling, so tests can drive it in-process.
//
// Exit codes: 0 all checks pass, 1 a check failed or the solver found
// nothing, 2 invalid input.

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braidham/braid.hpp"
#include "braidham/pipeline.hpp"
#include "braidham/report_format.hpp"
#include "braidham/sweep.hpp"

namespace braidham::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kInputError = 2 };

enum class LogLevel { Quiet, Info, Debug };

inline LogLevel log_level_from_env() {
  const char* env = std::getenv("BRAIDHAM_LOG");
  if (env == nullptr) return LogLevel::Info;
  const std::string v(env);
  if (v == "quiet") return LogLevel::Quiet;
  if (v == "debug") return LogLevel::Debug;
  return LogLevel::Info;
}

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// key=value lines; '#' starts a comment, blank lines are skipped.
inline std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> entries;
  std::string line;
  int line_no = 0;
  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string{};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError(path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    auto key = trim(line.substr(0, eq));
    if (key.empty()) throw InputError(path + ":" + std::to_string(line_no) + ": empty key");
    entries[key] = trim(line.substr(eq + 1));
  }
  return entries;
}

struct RunConfig {
  std::string command;
  double mass = 0.0;
  double px = 0.0;
  double py = 0.0;
  double pz = 0.0;
  double theta = kAnyonTheta;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-12;
  std::string format = "text";
  std::string config_path;
  std::string out_path;
  std::string word;
  int restarts = 32;
  bool explore = false;
  bool allow_trivial = false;
};

namespace detail {

inline bool flag_present(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  for (const auto& a : args) {
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

/// Splices config-file entries into the argument list right after the
/// subcommand, skipping keys that were given on the command line.
inline std::vector<std::string> merge_config(const std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (!path || args.empty()) return args;
  std::vector<std::string> merged{args.front()};
  for (const auto& [key, value] : read_config_file(*path)) {
    if (key == "config") throw InputError("config files cannot include other config files");
    if (!flag_present(args, key)) merged.push_back("--" + key + "=" + value);
  }
  merged.insert(merged.end(), args.begin() + 1, args.end());
  return merged;
}

inline void emit(const RunConfig& cfg, const std::string& report, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << report;
    return;
  }
  std::ofstream file(cfg.out_path);
  if (!file) throw InputError("cannot write --out file '" + cfg.out_path + "'");
  file << report;
}

template <class Report>
std::string render(const RunConfig& cfg, const Report& report) {
  return cfg.format == "json" ? to_json(report) : to_text(report);
}

}  // namespace detail

inline int cmd_derive(const RunConfig& cfg, bool any_momentum, std::ostream& out,
                      std::ostream& err, LogLevel log) {
  if (!any_momentum) {
    throw InputError("--px/--py/--pz: momentum is required (give at least one component)");
  }
  const DiracParams params(cfg.mass, Momentum{cfg.px, cfg.py, cfg.pz});
  const auto mode = cfg.explore ? AngleMode::Exploratory : AngleMode::Strict;
  ExploratoryOptions explore;
  explore.solver.rng_seed = cfg.seed;
  explore.solver.max_restarts = cfg.restarts;

  DerivationReport report;
  try {
    report = run_derivation(params, cfg.theta, Tolerance{cfg.tol}, mode, explore);
  } catch (const std::runtime_error& e) {
    err << "derive: " << e.what() << "\n";
    return kCheckFailed;
  }
  if (log == LogLevel::Debug) {
    err << "derive: max residual " << report.max_residual() << "\n";
  }
  detail::emit(cfg, detail::render(cfg, report), out);
  return report.pass ? kPass : kCheckFailed;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err, LogLevel log) {
  if (cfg.samples < 1) throw InputError("--samples: must be >= 1");
  const auto summary = run_sweep(cfg.samples, cfg.seed, Tolerance{cfg.tol});
  if (log != LogLevel::Quiet) {
    err << "sweep: " << summary.samples << " samples, " << summary.failed_samples
        << " failed\n";
  }
  detail::emit(cfg, detail::render(cfg, summary), out);
  return summary.pass ? kPass : kCheckFailed;
}

inline int cmd_braid_word(const RunConfig& cfg, std::ostream& out, std::ostream&, LogLevel) {
  const auto word = BraidWord::parse(cfg.word);
  const BraidPair pair(anyon_a(cfg.theta), anyon_b());
  const auto matrix = evaluate_word(pair, word);
  WordEvaluation eval{word.to_string(), cfg.theta, matrix,
                      matrix_order(matrix, 64, Tolerance{cfg.tol}),
                      frobenius_distance(matrix, ComplexMatrix::identity(2))};
  detail::emit(cfg, detail::render(cfg, eval), out);
  return kPass;
}

/// Distance below which a found partner is reported as the reference b.
inline constexpr double kReferenceMatchRadius = 1e-6;

inline int cmd_solve_b(const RunConfig& cfg, std::ostream& out, std::ostream& err, LogLevel log) {
  PartnerSearch search;
  search.theta = cfg.theta;
  search.config.rng_seed = cfg.seed;
  search.config.max_restarts = cfg.restarts;
  search.config.exclude_trivial = !cfg.allow_trivial;
  search.solution = solve_b_given_a(anyon_a(cfg.theta), search.config);
  if (search.solution) {
    search.reference_distance = frobenius_distance(search.solution->b, anyon_b());
    search.matches_reference = search.reference_distance < kReferenceMatchRadius;
  } else if (log != LogLevel::Quiet) {
    err << "solve-b: no braid partner found after " << cfg.restarts << " restarts\n";
  }
  detail::emit(cfg, detail::render(cfg, search), out);
  return search.solution ? kPass : kCheckFailed;
}

inline int run_cli(const std::vector<std::string>& raw_args, std::ostream& out,
                   std::ostream& err) {
  const LogLevel log = log_level_from_env();
  RunConfig cfg;

  CLI::App app{"braidham: braid-group construction of the Dirac / Bogoliubov Hamiltonian pair"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "Absolute Frobenius tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--config", cfg.config_path, "key=value file with default flag values");
    sub->add_option("--out", cfg.out_path, "Write the report to this file instead of stdout");
  };
  const std::string theta_help =
      "Deformation angle in radians (default -pi/2, the nu = 1/2 FQHE anyon value)";

  auto* derive = app.add_subcommand("derive", "Run and check the derivation for one (m, p)");
  derive->add_option("--mass", cfg.mass, "Dirac mass m > 0")->required();
  auto* px = derive->add_option("--px", cfg.px, "Momentum x component");
  auto* py = derive->add_option("--py", cfg.py, "Momentum y component");
  auto* pz = derive->add_option("--pz", cfg.pz, "Momentum z component");
  derive->add_option("--theta", cfg.theta, theta_help);
  derive->add_flag("--explore", cfg.explore,
                   "Allow any angle; b(theta) is found numerically and no Bogoliubov match is checked");
  derive->add_option("--seed", cfg.seed, "Solver seed (exploratory mode)");
  derive->add_option("--restarts", cfg.restarts, "Solver restarts (exploratory mode)")
      ->check(CLI::PositiveNumber);
  add_common(derive);

  auto* sweep = app.add_subcommand("sweep", "Randomized derivation checks over (m, p)");
  sweep->add_option("--samples", cfg.samples, "Number of parameter samples");
  sweep->add_option("--seed", cfg.seed, "Sampling seed");
  add_common(sweep);

  auto* word = app.add_subcommand("braid-word", "Evaluate a word over {a, b, A, B} on the anyon pair");
  word->add_option("--word", cfg.word, "Word; uppercase letters are inverses")->required();
  word->add_option("--theta", cfg.theta, theta_help);
  add_common(word);

  auto* solve = app.add_subcommand("solve-b", "Numerically find b with aba = bab for a(theta)");
  solve->add_option("--theta", cfg.theta, theta_help);
  solve->add_option("--seed", cfg.seed, "Solver seed");
  solve->add_option("--restarts", cfg.restarts, "Maximum random restarts")->check(CLI::PositiveNumber);
  solve->add_flag("--allow-trivial", cfg.allow_trivial, "Accept b = a");
  add_common(solve);

  try {
    auto args = detail::merge_config(raw_args);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (derive->parsed()) {
      cfg.command = "derive";
      return cmd_derive(cfg, px->count() + py->count() + pz->count() > 0, out, err, log);
    }
    if (sweep->parsed()) {
      cfg.command = "sweep";
      return cmd_sweep(cfg, out, err, log);
    }
    if (word->parsed()) {
      cfg.command = "braid-word";
      return cmd_braid_word(cfg, out, err, log);
    }
    cfg.command = "solve-b";
    return cmd_solve_b(cfg, out, err, log);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UnsupportedAngleError& e) {
    err << "error: --theta: " << e.what() << "\n";
  } catch (const WordParseError& e) {
    err << "error: --word: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace braidham::cli
