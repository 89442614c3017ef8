#include "pielm/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>

#include "pielm/assembly.hpp"
#include "pielm/error.hpp"
#include "pielm/fdm.hpp"
#include "pielm/features.hpp"
#include "pielm/text.hpp"

namespace pielm {

namespace {

constexpr std::uint64_t kInteriorStage = 1;
constexpr std::uint64_t kBoundaryStage = 2;
constexpr std::uint64_t kHiddenStage = 3;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(name) + ": " + e.what());
  }
}

}  // namespace

PipelineResult run_pipeline(const ExperimentConfig& config) {
  stage("config", [&] { validate(config); });
  ProblemSpec problem = stage("problem", [&] { return get_problem(config.problem, config.domain); });

  const auto t0 = Clock::now();
  CollocationSet colloc = stage("sample", [&] {
    Rng interior_rng = make_stream(config.seed, kInteriorStage);
    Rng boundary_rng = make_stream(config.seed, kBoundaryStage);
    CollocationSet c;
    c.interior = sample_interior(config.domain, config.q_interior, interior_rng);
    BoundarySamples b = sample_boundary(config.domain, config.p_boundary, boundary_rng);
    c.boundary = std::move(b.points);
    c.normals = std::move(b.normals);
    return c;
  });
  HiddenLayer layer = stage("init_hidden", [&] {
    Rng rng = make_stream(config.seed, kHiddenStage);
    return init_hidden(config.hidden_n, config.domain.dim(), config.activation,
                       config.delta, rng);
  });
  TrainedModel model = stage("solve", [&] {
    AssembledSystem sys = stage("assemble", [&] {
      return assemble(layer, colloc, problem, problem.regime, config.weights);
    });
    colloc = {};
    return solve_system(layer, sys,
                        SolveConfig{config.ridge_lambda, config.rank_tolerance});
  });
  const double train = seconds_since(t0);

  const auto t1 = Clock::now();
  EvaluationReport report = stage("evaluate", [&] {
    const PointSet points = grid(config.domain, config.test_grid);
    return evaluate(model, problem, points);
  });
  const double eval = seconds_since(t1);
  report.wall_time_seconds = train + eval;

  RunRecord record{config};
  record.seed = config.seed;
  record.rel = report.rel;
  record.max_abs_error = report.max_abs_error;
  record.train_seconds = train;
  record.eval_seconds = eval;
  record.rank = model.diagnostics.rank;
  record.condition_estimate = model.diagnostics.condition_estimate;
  return {std::move(problem), std::move(model), std::move(report), std::move(record)};
}

RunRecord run_single(const ExperimentConfig& config) {
  return run_pipeline(config).record;
}

std::vector<RunRecord> run_replicates(const ExperimentConfig& config) {
  std::vector<RunRecord> out;
  for (int r = 0; r < config.replicates; ++r) {
    ExperimentConfig c = config;
    c.seed = config.seed + static_cast<std::uint64_t>(r);
    try {
      out.push_back(run_single(c));
    } catch (const Error& e) {
      RunRecord failed{c};
      failed.seed = c.seed;
      failed.rel = std::numeric_limits<double>::quiet_NaN();
      failed.max_abs_error = failed.rel;
      failed.status = e.what();
      failed.error = e.kind();
      out.push_back(std::move(failed));
    }
  }
  return out;
}

double median_rel(const std::vector<RunRecord>& records) {
  std::vector<double> rels;
  for (const auto& r : records) {
    if (r.ok()) rels.push_back(r.rel);
  }
  if (rels.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(rels.begin(), rels.end());
  const std::size_t m = rels.size() / 2;
  return rels.size() % 2 ? rels[m] : 0.5 * (rels[m - 1] + rels[m]);
}

std::vector<RunRecord> run_sweep(const ExperimentConfig& config, const RecordSink& sink) {
  PIELM_THROW_IF(!config.sweep || config.sweep->values.empty(), ErrorKind::Config,
                 "sweep: no sweep values configured");
  std::vector<RunRecord> out;
  for (double value : config.sweep->values) {
    ExperimentConfig c = config;
    c.sweep.reset();
    if (config.sweep->parameter == SweepParameter::Hidden) {
      c.hidden_n = static_cast<Eigen::Index>(value);
    } else {
      c.delta = value;
    }
    for (RunRecord& r : run_replicates(c)) {
      if (sink) sink(r);
      out.push_back(std::move(r));
    }
  }
  return out;
}

void write_csv_header(std::ostream& out) {
  out << "problem,domain,activation,n_hidden,delta,q,p,lambda,seed,rel,max_abs_err,"
         "train_s,eval_s,rank,cond,status\n";
}

void write_csv_row(std::ostream& out, const RunRecord& r, const CsvOptions& options) {
  const ExperimentConfig& c = r.config;
  std::string status = r.status;
  std::replace(status.begin(), status.end(), ',', ';');
  std::replace(status.begin(), status.end(), '\n', ' ');
  out << c.problem << ',' << c.domain.describe() << ',' << to_string(c.activation) << ','
      << c.hidden_n << ',' << format_number(c.delta) << ',' << c.q_interior << ','
      << c.p_boundary << ',' << format_number(c.ridge_lambda) << ',' << r.seed << ','
      << format_number(r.rel) << ',' << format_number(r.max_abs_error) << ','
      << format_number(options.timing ? r.train_seconds : 0.0) << ','
      << format_number(options.timing ? r.eval_seconds : 0.0) << ',' << r.rank << ','
      << format_number(r.condition_estimate) << ',' << status << '\n';
}

EvaluationReport dump_field(const TrainedModel& model, const ProblemSpec& problem,
                            std::span<const int> resolution, const std::string& path) {
  const Domain& domain = problem.default_domain;
  PIELM_THROW_IF(static_cast<int>(resolution.size()) != domain.dim(),
                 ErrorKind::ContractViolation,
                 "dump_field: need one resolution per axis");
  for (int n : resolution) {
    PIELM_THROW_IF(n < 2, ErrorKind::ContractViolation,
                   "dump_field: resolution must be at least 2 per axis");
  }
  std::ofstream out(path);
  PIELM_THROW_IF(!out, ErrorKind::Io, "dump_field: cannot write '" + path + "'");

  const PointSet points = grid(domain, resolution);
  EvaluationReport report = evaluate(model, problem, points);
  for (int k = 1; k <= domain.dim(); ++k) out << 'x' << k << ',';
  out << "u_exact,u_pred,abs_err\n";
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    for (Eigen::Index k = 0; k < points.cols(); ++k) out << format_number(points(i, k)) << ',';
    out << format_number(report.u_exact[i]) << ',' << format_number(report.u_pred[i]) << ','
        << format_number(report.abs_error[i]) << '\n';
  }
  out.flush();
  PIELM_THROW_IF(!out, ErrorKind::Io, "dump_field: write to '" + path + "' failed");
  return report;
}

double fdm_rel_error(const ProblemSpec& problem, int resolution, double* seconds) {
  const Domain& domain = problem.default_domain;
  PIELM_THROW_IF(!domain.is_box() || domain.dim() != 2, ErrorKind::UnsupportedGeometry,
                 "fdm: only 2D boxes are supported");
  const auto t0 = Clock::now();
  const FdmGrid g = FdmGrid::make(domain.bounds_lo(), domain.bounds_hi(), resolution,
                                  resolution);
  const FdmSolution sol = solve_fdm(problem, g);
  if (seconds) *seconds = seconds_since(t0);
  return rel_error(sol.u, exact_values(problem, g.nodes()));
}

std::vector<ComparisonRow> compare_fdm(const ExperimentConfig& config) {
  const ProblemSpec problem = get_problem(config.problem, config.domain);
  std::vector<ComparisonRow> rows;
  for (int n : config.fdm_resolutions) {
    double secs = 0.0;
    const double rel = stage("fdm", [&] { return fdm_rel_error(problem, n, &secs); });
    rows.push_back({"fdm", n, 0, rel, secs});
  }
  const RunRecord elm = run_single(config);
  for (int n : config.fdm_resolutions) {
    rows.push_back({"fpielm", n, config.hidden_n, elm.rel,
                    elm.train_seconds + elm.eval_seconds});
  }
  return rows;
}

void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows,
                          const CsvOptions& options) {
  out << "method,resolution,n_hidden,rel,seconds\n";
  for (const auto& r : rows) {
    out << r.method << ',' << r.resolution << ',' << r.n_hidden << ','
        << format_number(r.rel) << ',' << format_number(options.timing ? r.seconds : 0.0)
        << '\n';
  }
}

}  // namespace pielm
