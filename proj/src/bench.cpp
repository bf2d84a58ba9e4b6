#include "delsup/bench.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <optional>
#include <ostream>
#include <set>

namespace delsup {

std::vector<BenchRow> run_bench(const std::vector<std::string>& files, const BenchOptions& options,
                                const std::function<void(const BenchRow&)>& progress) {
  std::vector<std::string> sorted = files;
  std::sort(sorted.begin(), sorted.end());
  std::vector<BenchRow> rows;
  for (const std::string& file : sorted) {
    std::string name = std::filesystem::path(file).stem().string();
    std::optional<Problem> problem;
    std::string error;
    try {
      problem = parse_file(file, options.parse);
    } catch (const std::exception& e) {
      error = e.what();
    }
    for (CalculusMode mode : options.modes) {
      BenchRow row;
      row.problem = name;
      row.mode = to_string(mode);
      if (!problem) {
        row.status = "Error";
        row.note = error;
      } else {
        ProverOptions po = options.prover;
        po.mode = mode;
        auto start = std::chrono::steady_clock::now();
        ProverOutcome out = prove(*problem, po);
        row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        row.status = out.szs;
        row.generated = out.result.stats.generated;
        row.iterations = out.result.stats.iterations;
        if (!out.proof_problems.empty()) row.note = out.proof_problems.front();
      }
      if (progress) progress(row);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

bool is_solved(const std::string& status) {
  return status == "Unsatisfiable" || status == "Satisfiable";
}

BenchSummary summarize(const std::vector<BenchRow>& rows) {
  BenchSummary s;
  std::map<std::string, std::vector<const BenchRow*>> by_problem;
  for (const BenchRow& r : rows) {
    s.solved.try_emplace(r.mode, 0);
    s.unique.try_emplace(r.mode, 0);
    by_problem[r.problem].push_back(&r);
  }
  for (const auto& [problem, runs] : by_problem) {
    std::set<std::string> verdicts;
    std::vector<const BenchRow*> solvers;
    for (const BenchRow* r : runs) {
      if (!is_solved(r->status)) continue;
      ++s.solved[r->mode];
      solvers.push_back(r);
      verdicts.insert(r->status);
    }
    if (solvers.size() == 1) ++s.unique[solvers.front()->mode];
    if (verdicts.size() > 1) s.disagreements.push_back(problem);
  }
  return s;
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "problem,mode,status,wall_ms,generated,iterations\n";
  for (const BenchRow& r : rows) {
    os << r.problem << ',' << r.mode << ',' << r.status << ',' << static_cast<long long>(r.wall_ms)
       << ',' << r.generated << ',' << r.iterations << '\n';
  }
}

void write_summary(std::ostream& os, const BenchSummary& summary,
                   const std::vector<CalculusMode>& modes) {
  os << "mode,solved,unique\n";
  for (CalculusMode m : modes) {
    std::string name = to_string(m);
    auto solved = summary.solved.find(name);
    auto unique = summary.unique.find(name);
    os << name << ',' << (solved == summary.solved.end() ? 0 : solved->second) << ','
       << (unique == summary.unique.end() ? 0 : unique->second) << '\n';
  }
  for (const std::string& p : summary.disagreements) os << "disagreement: " << p << '\n';
}

}  // namespace delsup
