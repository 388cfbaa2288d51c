#ifndef CSG_BENCH_HPP
#define CSG_BENCH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csg/problems.hpp"
#include "csg/run_result.hpp"

namespace csg {

/// One benchmark run: a problem, a method, its parameters, and a ladder of
/// accuracy targets resolved against the problem's known optimum.
struct ExperimentConfig {
  std::string problem;
  std::string method;
  std::map<std::string, std::string> params;  // method-specific overrides
  std::optional<DenseVector> x0;
  std::vector<double> eps_ladder;  // strictly decreasing positive gaps
  std::int64_t max_evals = 10000;
  std::string trace_path;  // empty: no trace file
  std::int64_t trace_cap = kUnlimitedTrace;

  void validate() const;  // throws std::invalid_argument
};

struct TableEntry {
  double eps = 0.0;
  std::optional<std::int64_t> evals;  // empty: target not reached in budget
};

struct TableRow {
  std::string method;
  std::vector<TableEntry> entries;
};

struct ExperimentOutcome {
  TableRow row;
  RunResult result;
  double f_star = 0.0;
};

/// Runs one configured experiment and reports, per ladder entry, the first
/// cumulative evaluation count at which the best value came within eps of the
/// optimum.
ExperimentOutcome run_experiment(const ExperimentConfig& config);

/// A reproduction row: our counts next to the published reference counts.
struct ReproducedRow {
  TableRow row;
  std::vector<std::optional<std::int64_t>> reference;  // aligned with row.entries
  double best_gap = 0.0;
  std::int64_t budget = 0;
};

/// Reruns the published benchmark columns with their stated parameters:
/// which = "table1" (SGM, CSGI) or "table2" (SGMT, ASG, DASG).
std::vector<ReproducedRow> reproduce_table(const std::string& which);

enum class ReportFormat { csv, markdown };

/// Renders rows with fixed column order: method, eps, it, reference_it (when
/// present), ratio. Not-reached entries render as "-".
std::string emit_report(const std::vector<ReproducedRow>& rows, ReportFormat format);
std::string emit_report(const std::vector<TableRow>& rows, ReportFormat format);

/// Reference-only context: the published table including the columns this
/// toolkit does not implement. Markdown rendering appends it to reproduction
/// reports.
std::string reference_table_markdown(const std::string& which);

/// One record per line, fixed key order
///   k f_x phi p_norm lambda event evals
/// with round-trip double formatting, so identical runs produce identical
/// bytes. Throws std::runtime_error with path context on I/O failure.
void write_trace(const std::vector<IterationRecord>& trace, const std::string& path);
std::string format_trace(const std::vector<IterationRecord>& trace);

/// First eval count at which phi - f_star <= eps according to a trace, or
/// empty if never.
std::optional<std::int64_t> first_hit(const std::vector<IterationRecord>& trace, double f_star,
                                      double eps);

/// Flat key = value config file (# comments). Keys: problem, method, eps,
/// x0, max_evals, trace, trace_cap, and param.<name> for method parameters.
/// Entries overwrite whatever the config already holds, so callers layer
/// file and flag values by application order.
void apply_config_file(ExperimentConfig& config, const std::string& path);
ExperimentConfig load_config_file(const std::string& path);
void apply_config_entry(ExperimentConfig& config, const std::string& key,
                        const std::string& value);

std::vector<std::pair<std::string, std::string>> method_catalog();

}  // namespace csg

#endif
