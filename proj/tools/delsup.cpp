// Command-line front end: prove a TPTP CNF problem, benchmark calculus
// modes over a corpus, or check lifting of ground inferences.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "delsup/bench.hpp"
#include "delsup/ground.hpp"
#include "delsup/prover.hpp"
#include "delsup/tptp.hpp"

namespace fs = std::filesystem;
using namespace delsup;

namespace {

const std::map<std::string, CalculusMode> kModes = {
    {"standard", CalculusMode::Standard},
    {"delayed", CalculusMode::Delayed},
    {"delayed-fp", CalculusMode::DelayedFp},
    {"delayed-eager", CalculusMode::DelayedEager},
};
const std::map<std::string, Selection> kSelections = {
    {"none", Selection::None},
    {"one-negative", Selection::OneNegative},
    {"all-negative", Selection::AllNegative},
};
const std::map<std::string, PrecedenceScheme> kPrecedences = {
    {"arity", PrecedenceScheme::Arity},
    {"occurrence", PrecedenceScheme::Occurrence},
    {"reverse", PrecedenceScheme::Reverse},
};

struct OrderingFlags {
  std::string precedence = "arity";
  std::string weights = "uniform";
};

void add_ordering_flags(CLI::App& app, OrderingFlags& flags) {
  app.add_option("--precedence", flags.precedence, "Symbol precedence")
      ->check(CLI::IsMember({"arity", "occurrence", "reverse"}));
  app.add_option("--kbo-weights", flags.weights, "KBO symbol weights")
      ->check(CLI::IsMember({"uniform"}));
}

std::vector<std::string> collect_problems(const std::vector<std::string>& paths) {
  std::vector<std::string> files;
  for (const std::string& p : paths) {
    if (fs::is_directory(p)) {
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".p") {
          files.push_back(entry.path().string());
        }
      }
    } else {
      files.push_back(p);
    }
  }
  return files;
}

int run_prove(const std::string& file, const ProverOptions& options,
              const ParseOptions& parse_options, bool print_proof, bool print_stats) {
  std::string name = fs::path(file).stem().string();
  Problem problem;
  try {
    problem = parse_file(file, parse_options);
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    std::cout << "% SZS status InputError for " << name << '\n';
    return 2;
  }
  for (const Diagnostic& d : validate(problem)) std::cerr << to_string(d) << '\n';

  ProverOutcome out = prove(problem, options);
  std::cout << "% SZS status " << out.szs << " for " << name << '\n';
  if (print_proof && out.result.status == SaturationStatus::Unsatisfiable) {
    std::cout << "% SZS output start CNFRefutation for " << name << '\n'
              << format_proof(out.result.proof, problem.signature)
              << "% SZS output end CNFRefutation for " << name << '\n';
  }
  for (const std::string& msg : out.proof_problems) std::cerr << "proof check: " << msg << '\n';
  if (print_stats) out.result.stats.print(std::cout);
  return 0;
}

int run_bench_command(const std::vector<std::string>& paths, const std::vector<std::string>& modes,
                      const BenchOptions& base, const std::string& csv_path) {
  BenchOptions options = base;
  options.modes.clear();
  for (const std::string& m : modes) options.modes.push_back(kModes.at(m));
  std::vector<std::string> files = collect_problems(paths);
  std::vector<BenchRow> rows = run_bench(files, options, [](const BenchRow& r) {
    std::cerr << r.problem << ' ' << r.mode << ' ' << r.status << ' ' << static_cast<long>(r.wall_ms)
              << "ms" << (r.note.empty() ? "" : " (" + r.note + ")") << '\n';
  });
  BenchSummary summary = summarize(rows);
  if (csv_path.empty() || csv_path == "-") {
    write_csv(std::cout, rows);
    std::cout << '\n';
  } else {
    std::ofstream out(csv_path);
    if (!out) {
      std::cerr << "cannot write " << csv_path << '\n';
      return 2;
    }
    write_csv(out, rows);
  }
  write_summary(std::cout, summary, options.modes);
  return 0;
}

int run_check_lifting(const std::string& file, const ParseOptions& parse_options,
                      Selection selection, PrecedenceScheme precedence, std::size_t depth) {
  Problem problem;
  try {
    problem = parse_file(file, parse_options);
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  GroundingOptions grounding;
  grounding.depth = depth;
  Kbo kbo(KboParams::uniform(problem.signature, precedence));
  LiftingReport report =
      check_lifting(problem.clauses(), problem.signature, kbo, selection, grounding);
  std::cout << "closures: " << report.closures << '\n'
            << "ground inferences: " << report.ground_inferences << '\n'
            << "lifted: " << report.lifted << '\n'
            << "exempt (at or below a variable): " << report.exempt << '\n'
            << "violations: " << report.violations.size() << '\n';
  for (const std::string& v : report.violations) std::cout << "  " << v << '\n';
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superposition prover with delayed unification"};
  app.require_subcommand(0, 1);

  // prove (default command)
  std::string file;
  std::string calculus = "delayed";
  std::string selection = "none";
  double time_limit = 60;
  std::size_t max_clauses = 0;
  bool print_proof = false;
  bool print_stats = false;
  std::vector<std::string> include_dirs;
  OrderingFlags ordering;
  app.add_option("file", file, "TPTP CNF problem");
  app.add_option("--calculus", calculus, "Calculus variant")->check(CLI::IsMember({"standard", "delayed", "delayed-fp", "delayed-eager"}));
  app.add_option("--selection", selection, "Literal selection")->check(CLI::IsMember({"none", "one-negative", "all-negative"}));
  app.add_option("--time-limit", time_limit, "Seconds; 0 for none")->check(CLI::NonNegativeNumber);
  app.add_option("--max-clauses", max_clauses, "Retained clause limit; 0 for none");
  app.add_flag("--proof", print_proof, "Print the refutation");
  app.add_flag("--stats", print_stats, "Print saturation statistics");
  app.add_option("--include-dir", include_dirs, "Directory searched for include() files");
  add_ordering_flags(app, ordering);

  // bench
  CLI::App* bench = app.add_subcommand("bench", "Run every mode on a set of problems, emit CSV");
  std::vector<std::string> bench_paths;
  std::vector<std::string> bench_modes = {"standard", "delayed", "delayed-fp", "delayed-eager"};
  std::string bench_selection = "all-negative";
  double bench_limit = 10;
  std::size_t bench_max_clauses = 0;
  std::string csv_path;
  std::vector<std::string> bench_include;
  OrderingFlags bench_ordering;
  bench->add_option("paths", bench_paths, "Problem files or directories of .p files")->required();
  bench->add_option("--modes", bench_modes, "Calculus modes")->delimiter(',')->check(CLI::IsMember({"standard", "delayed", "delayed-fp", "delayed-eager"}));
  bench->add_option("--selection", bench_selection, "Literal selection")->check(CLI::IsMember({"none", "one-negative", "all-negative"}));
  bench->add_option("--time-limit", bench_limit, "Seconds per run")->check(CLI::NonNegativeNumber);
  bench->add_option("--max-clauses", bench_max_clauses, "Retained clause limit; 0 for none");
  bench->add_option("--csv", csv_path, "CSV output file (default standard output)");
  bench->add_option("--include-dir", bench_include, "Directory searched for include() files");
  add_ordering_flags(*bench, bench_ordering);

  // check-lifting
  CLI::App* lifting = app.add_subcommand("check-lifting", "Check that ground inferences lift");
  std::string lifting_file;
  std::string lifting_selection = "none";
  std::size_t depth = 2;
  std::vector<std::string> lifting_include;
  OrderingFlags lifting_ordering;
  lifting->add_option("file", lifting_file, "TPTP CNF problem")->required();
  lifting->add_option("--selection", lifting_selection, "Literal selection")->check(CLI::IsMember({"none", "one-negative", "all-negative"}));
  lifting->add_option("--depth", depth, "Maximum depth of grounding terms");
  lifting->add_option("--include-dir", lifting_include, "Directory searched for include() files");
  add_ordering_flags(*lifting, lifting_ordering);

  CLI11_PARSE(app, argc, argv);

  if (*bench) {
    BenchOptions options;
    options.prover.selection = kSelections.at(bench_selection);
    options.prover.precedence = kPrecedences.at(bench_ordering.precedence);
    options.prover.time_limit = bench_limit;
    options.prover.max_clauses = bench_max_clauses;
    options.parse.include_dirs = bench_include;
    return run_bench_command(bench_paths, bench_modes, options, csv_path);
  }
  if (*lifting) {
    ParseOptions parse;
    parse.include_dirs = lifting_include;
    return run_check_lifting(lifting_file, parse, kSelections.at(lifting_selection),
                             kPrecedences.at(lifting_ordering.precedence), depth);
  }
  if (file.empty()) {
    std::cerr << app.help();
    return 2;
  }
  ProverOptions options;
  options.mode = kModes.at(calculus);
  options.selection = kSelections.at(selection);
  options.precedence = kPrecedences.at(ordering.precedence);
  options.time_limit = time_limit;
  options.max_clauses = max_clauses;
  ParseOptions parse;
  parse.include_dirs = include_dirs;
  return run_prove(file, options, parse, print_proof, print_stats);
}
