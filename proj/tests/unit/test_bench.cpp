#include "helpers.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../support/golden.hpp"
#include "delsup/bench.hpp"

using namespace delsup;
using namespace delsup::testing;
namespace fs = std::filesystem;

TEST_CASE("bench rows and summary") {
  BenchOptions options;
  options.modes = {CalculusMode::Standard, CalculusMode::Delayed};
  options.prover.selection = Selection::AllNegative;
  options.prover.time_limit = 5;
  std::vector<std::string> files = {corpus_file("sat_trivial_eq.p"), corpus_file("ex1.p")};
  std::vector<BenchRow> rows = run_bench(files, options);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].problem == "ex1");
  CHECK(rows[0].mode == "standard");
  CHECK(rows[1].mode == "delayed");
  CHECK(rows[0].status == "Unsatisfiable");
  CHECK(rows[2].problem == "sat_trivial_eq");
  CHECK(rows[2].status == "Satisfiable");

  std::ostringstream csv;
  write_csv(csv, rows);
  std::string text = csv.str();
  CHECK(text.rfind("problem,mode,status,wall_ms,generated,iterations\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);

  BenchSummary summary = summarize(rows);
  CHECK(summary.solved["standard"] == 2);
  CHECK(summary.solved["delayed"] == 2);
  CHECK(summary.unique["standard"] == 0);
  CHECK(summary.disagreements.empty());
  std::ostringstream sum;
  write_summary(sum, summary, options.modes);
  CHECK(sum.str().find("standard,2,0") != std::string::npos);
}

TEST_CASE("unreadable problems become error rows") {
  fs::path bad = fs::temp_directory_path() / "delsup_bench_bad.p";
  std::ofstream(bad) << "fof(a, axiom, p).\n";
  BenchOptions options;
  options.modes = {CalculusMode::Delayed};
  std::vector<BenchRow> rows =
      run_bench({bad.string(), (fs::temp_directory_path() / "delsup_missing.p").string()}, options);
  fs::remove(bad);
  REQUIRE(rows.size() == 2);
  for (const BenchRow& r : rows) {
    CHECK(r.status == "Error");
    CHECK_FALSE(r.note.empty());
    CHECK_FALSE(is_solved(r.status));
  }
}

TEST_CASE("summary counts uniques and disagreements") {
  std::vector<BenchRow> rows = {
      {"p1", "standard", "Unsatisfiable", 1, 0, 0, ""},
      {"p1", "delayed", "Timeout", 1, 0, 0, ""},
      {"p2", "standard", "Unsatisfiable", 1, 0, 0, ""},
      {"p2", "delayed", "Satisfiable", 1, 0, 0, ""},
  };
  BenchSummary s = summarize(rows);
  CHECK(s.solved["standard"] == 2);
  CHECK(s.solved["delayed"] == 1);
  CHECK(s.unique["standard"] == 1);
  CHECK(s.unique["delayed"] == 0);
  CHECK(s.disagreements == std::vector<std::string>{"p2"});
}
