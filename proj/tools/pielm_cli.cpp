// Command-line runner for biharmonic PIELM experiments.
#include <cmath>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pielm/config.hpp"
#include "pielm/error.hpp"
#include "pielm/experiment.hpp"
#include "pielm/text.hpp"

using namespace pielm;

namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Config: return 3;
    case ErrorKind::Io: return 4;
    case ErrorKind::Lookup: return 5;
    case ErrorKind::InvalidHyperparameter: return 6;
    case ErrorKind::Specification: return 7;
    case ErrorKind::UnsupportedGeometry: return 8;
    case ErrorKind::GeometryDegenerate: return 9;
    case ErrorKind::Undercoverage: return 10;
    case ErrorKind::DegenerateSystem: return 11;
    case ErrorKind::Data: return 12;
    case ErrorKind::UndefinedMetric: return 13;
    case ErrorKind::ContractViolation: return 14;
  }
  return 1;
}

struct Flags {
  std::string config_path;
  std::vector<std::string> holes;
  std::string out;
  bool no_timing = false;
};

// Every flag writes into a string slot; only the ones given on the command
// line are turned into overrides.
struct Slot {
  std::string key;
  std::string value;
  CLI::Option* option = nullptr;
};

class Options {
public:
  explicit Options(CLI::App* app) : app_(app) {
    app->add_option("-c,--config", flags.config_path, "key = value config file");
    add("--problem", "problem", "problem name");
    add("--activation", "activation", "sine, sigmoid, gaussian or tanh");
    add("--hidden", "hidden", "number of hidden units N");
    add("--delta", "delta", "scale factor of the hidden weights");
    add("--q", "q", "interior collocation points");
    add("--p", "p", "boundary collocation points");
    add("--lambda", "lambda", "ridge parameter (0 = minimum-norm least squares)");
    add("--rank-tolerance", "rank_tolerance", "relative singular value cutoff");
    add("--seed", "seed", "first seed");
    add("--replicates", "replicates", "number of seeds");
    add("--grid", "grid", "test grid per axis, e.g. 128 or 64,64");
    add("--domain", "domain.kind", "box, hexagram, porous, holedcube or shell");
    add("--lo", "domain.lo", "lower corner, comma separated");
    add("--hi", "domain.hi", "upper corner, comma separated");
    add("--center", "domain.center", "shell centre");
    add("--radii", "domain.radii", "shell radii 'inner,outer'");
    app->add_option("--hole", flags.holes, "hole 'cx,cy[,cz],r' (repeatable)");
    add("--holes", "domain.holes", "'none' for a plate or cube without holes");
    add("--sweep", "sweep.parameter", "hidden or delta");
    add("--values", "sweep.values", "sweep values, comma separated");
    add("--resolutions", "fdm.resolutions", "FDM interior nodes per axis");
    app->add_option("-o,--out", flags.out, "output file (default: stdout, or "
                                           "$PIELM_OUT_DIR/<command>.csv)");
    app->add_flag("--no-timing", flags.no_timing, "write zeros in the timing columns");
  }

  ExperimentConfig resolve() {
    KeyValues kv;
    if (!flags.config_path.empty()) kv = KeyValues::load(flags.config_path);
    KeyValues overrides;
    for (const Slot& s : slots_) {
      if (s.option->count()) overrides.add(s.key, s.value);
    }
    for (const auto& h : flags.holes) overrides.add("domain.hole", h);
    kv.override_with(overrides);
    return resolve_config(kv);
  }

  Flags flags;

private:
  void add(const std::string& name, const std::string& key, const std::string& help) {
    slots_.push_back({key, {}, nullptr});
    slots_.back().option = app_->add_option(name, slots_.back().value, help)
                               ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  }

  CLI::App* app_;
  std::deque<Slot> slots_;  // stable addresses for CLI11 bindings
};

std::string default_out(const std::string& command, const std::string& out) {
  if (!out.empty()) return out;
  if (const char* dir = std::getenv("PIELM_OUT_DIR"); dir && *dir) {
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / (command + ".csv")).string();
  }
  return {};
}

template <class F>
void with_output(const std::string& path, F&& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path);
  PIELM_THROW_IF(!file, ErrorKind::Io, "cannot write '" + path + "'");
  write(file);
  file.flush();
  PIELM_THROW_IF(!file, ErrorKind::Io, "write to '" + path + "' failed");
}

void report(const std::vector<RunRecord>& records) {
  std::size_t failed = 0;
  for (const auto& r : records) failed += !r.ok();
  std::cerr << "runs: " << records.size() << ", failed: " << failed
            << ", median rel: " << format_number(median_rel(records)) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Physics-informed extreme learning machine for biharmonic problems"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "train and evaluate one config over its seeds");
  auto* sweep = app.add_subcommand("sweep", "repeat the run over hidden sizes or deltas");
  auto* field = app.add_subcommand("field", "write the pointwise error field of one run");
  auto* fdm = app.add_subcommand("fdm", "finite-difference reference solve on a box");
  auto* compare = app.add_subcommand("compare", "FDM at several resolutions vs one FPIELM run");
  auto* config = app.add_subcommand("config", "print the resolved config");

  Options run_opts(run), sweep_opts(sweep), field_opts(field), fdm_opts(fdm),
      compare_opts(compare), config_opts(config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      const ExperimentConfig c = run_opts.resolve();
      const CsvOptions csv{!run_opts.flags.no_timing};
      const auto records = run_replicates(c);
      with_output(default_out("run", run_opts.flags.out), [&](std::ostream& out) {
        write_csv_header(out);
        for (const auto& r : records) write_csv_row(out, r, csv);
      });
      report(records);
      if (std::isnan(median_rel(records))) return exit_code(records.front().error.value());
    } else if (sweep->parsed()) {
      const ExperimentConfig c = sweep_opts.resolve();
      PIELM_THROW_IF(!c.sweep, ErrorKind::Config, "sweep: set --sweep and --values");
      const CsvOptions csv{!sweep_opts.flags.no_timing};
      std::vector<RunRecord> records;
      with_output(default_out("sweep", sweep_opts.flags.out), [&](std::ostream& out) {
        write_csv_header(out);
        records = run_sweep(c, [&](const RunRecord& r) {
          write_csv_row(out, r, csv);
          out.flush();
        });
      });
      report(records);
    } else if (field->parsed()) {
      ExperimentConfig c = field_opts.resolve();
      std::string path = field_opts.flags.out;
      if (path.empty()) {
        path = default_out("field", "");
        if (path.empty()) path = "field.csv";
      }
      const PipelineResult res = run_pipeline(c);
      const EvaluationReport rep = dump_field(res.model, res.problem, c.test_grid, path);
      std::cerr << "points: " << rep.n_points << ", rel: " << format_number(rep.rel)
                << ", max abs err: " << format_number(rep.max_abs_error) << " -> " << path
                << "\n";
    } else if (fdm->parsed()) {
      const ExperimentConfig c = fdm_opts.resolve();
      const ProblemSpec problem = get_problem(c.problem, c.domain);
      const CsvOptions csv{!fdm_opts.flags.no_timing};
      std::vector<ComparisonRow> rows;
      for (int n : c.fdm_resolutions) {
        double secs = 0.0;
        const double rel = fdm_rel_error(problem, n, &secs);
        rows.push_back({"fdm", n, 0, rel, secs});
      }
      with_output(default_out("fdm", fdm_opts.flags.out),
                  [&](std::ostream& out) { write_comparison_csv(out, rows, csv); });
    } else if (compare->parsed()) {
      const ExperimentConfig c = compare_opts.resolve();
      const CsvOptions csv{!compare_opts.flags.no_timing};
      const auto rows = compare_fdm(c);
      with_output(default_out("compare", compare_opts.flags.out),
                  [&](std::ostream& out) { write_comparison_csv(out, rows, csv); });
    } else if (config->parsed()) {
      std::cout << to_config_text(config_opts.resolve());
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
