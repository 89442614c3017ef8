#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pielm/config.hpp"
#include "pielm/error.hpp"
#include "pielm/metrics.hpp"
#include "pielm/problems.hpp"
#include "pielm/solve.hpp"

namespace pielm {

struct RunRecord {
  ExperimentConfig config;  // with config.seed equal to `seed`
  std::uint64_t seed = 0;
  double rel = 0.0;
  double max_abs_error = 0.0;
  double train_seconds = 0.0;  // sampling, hidden layer, assembly, solve
  double eval_seconds = 0.0;
  Eigen::Index rank = 0;
  double condition_estimate = 0.0;
  std::string status = "ok";  // otherwise "<stage>: <message>"
  std::optional<ErrorKind> error = std::nullopt;

  bool ok() const { return status == "ok"; }
};

struct PipelineResult {
  ProblemSpec problem;
  TrainedModel model;
  EvaluationReport report;
  RunRecord record;
};

/// sample -> init_hidden -> assemble -> solve -> evaluate for config.seed.
/// Errors are rethrown with the same kind and the stage name prefixed.
PipelineResult run_pipeline(const ExperimentConfig& config);

RunRecord run_single(const ExperimentConfig& config);

/// Seeds seed, seed + 1, ..., seed + replicates - 1. Failed seeds become
/// failed records rather than exceptions.
std::vector<RunRecord> run_replicates(const ExperimentConfig& config);

/// Median of the successful records' rel; NaN when none succeeded.
double median_rel(const std::vector<RunRecord>& records);

using RecordSink = std::function<void(const RunRecord&)>;

/// One replicate set per sweep value. Each record is passed to `sink` as
/// soon as it completes.
std::vector<RunRecord> run_sweep(const ExperimentConfig& config,
                                 const RecordSink& sink = {});

struct CsvOptions {
  /// Writes 0 for the timing columns so output is byte-identical across runs.
  bool timing = true;
};

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const RunRecord& record,
                   const CsvOptions& options = {});

/// Header x1..xd,u_exact,u_pred,abs_err and one row per grid point inside the
/// domain. Throws an Io error when the file cannot be written.
EvaluationReport dump_field(const TrainedModel& model, const ProblemSpec& problem,
                            std::span<const int> resolution, const std::string& path);

struct ComparisonRow {
  std::string method;  // "fdm" or "fpielm"
  int resolution = 0;
  Eigen::Index n_hidden = 0;  // 0 for fdm rows
  double rel = 0.0;
  double seconds = 0.0;
};

/// FDM on config.domain at every entry of config.fdm_resolutions, and one
/// FPIELM run at the config, repeated alongside each resolution.
std::vector<ComparisonRow> compare_fdm(const ExperimentConfig& config);

/// FDM error against the exact solution on the interior nodes.
double fdm_rel_error(const ProblemSpec& problem, int resolution, double* seconds = nullptr);

void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows,
                          const CsvOptions& options = {});

}  // namespace pielm
