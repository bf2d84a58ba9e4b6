/**
 * @file bench.hpp
 * Runs a set of problems under several calculus modes and summarises.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "delsup/prover.hpp"

namespace delsup {

struct BenchRow {
  std::string problem;
  std::string mode;
  /// SZS status, or Error when the problem could not be read.
  std::string status;
  double wall_ms = 0;
  std::uint64_t generated = 0;
  std::uint64_t iterations = 0;
  /// Empty unless the status is Error or a proof failed to replay.
  std::string note;
};

struct BenchOptions {
  std::vector<CalculusMode> modes = {CalculusMode::Standard, CalculusMode::Delayed,
                                     CalculusMode::DelayedFp, CalculusMode::DelayedEager};
  ProverOptions prover;
  ParseOptions parse;
};

/// Rows sorted by problem, then by the order of `options.modes`.
/// `progress` (optional) is called after every run.
std::vector<BenchRow> run_bench(const std::vector<std::string>& files, const BenchOptions& options,
                                const std::function<void(const BenchRow&)>& progress = {});

bool is_solved(const std::string& status);

struct BenchSummary {
  std::map<std::string, int> solved;
  /// Problems solved by this mode and by no other mode.
  std::map<std::string, int> unique;
  /// Problems where two modes reported Unsatisfiable and Satisfiable.
  std::vector<std::string> disagreements;
};

BenchSummary summarize(const std::vector<BenchRow>& rows);

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);
void write_summary(std::ostream& os, const BenchSummary& summary, const std::vector<CalculusMode>& modes);

}  // namespace delsup
