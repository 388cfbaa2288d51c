#ifndef CSG_RUN_RESULT_HPP
#define CSG_RUN_RESULT_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "csg/vector_ops.hpp"

namespace csg {

/// Tag describing the event that produced one trace row. Restart tags take
/// precedence over the trial outcome when both occur in the same iteration
/// (function_value > distance > norm > descent/non_descent), which keeps the
/// path accumulator reconstructible from the trace alone.
enum class RestartTag {
  none,
  norm,
  function_value,
  distance,
  descent,
  non_descent,
};

const char* to_string(RestartTag tag);

struct IterationRecord {
  std::int64_t k = 0;        // iterate index
  double f_x = 0.0;          // objective at the iterate this row produced
  double phi = 0.0;          // best value over all iterates so far
  double p_norm = 0.0;       // norm of the direction used by this trial
  double lambda = 0.0;       // step size used by this trial
  RestartTag event = RestartTag::none;
  std::int64_t eval_count = 0;  // cumulative oracle calls after this row
};

enum class Termination {
  target_reached,
  eval_budget,
};

const char* to_string(Termination t);

/// None of the implemented methods terminate on their own; a run stops on
/// first hit of a target value (when the optimum is known) or on exhausting
/// the evaluation budget.
struct StoppingRule {
  std::optional<double> target_value;  // stop once phi <= target_value
  std::int64_t max_evals = 10000;
};

constexpr std::int64_t kUnlimitedTrace = -1;

struct RunResult {
  DenseVector best_point;
  double best_value = std::numeric_limits<double>::infinity();
  std::int64_t total_evals = 0;
  Termination termination = Termination::eval_budget;
  std::vector<IterationRecord> trace;
};

/// Collects trace rows and the running best value shared by every runner.
class TraceBuilder {
 public:
  explicit TraceBuilder(std::int64_t cap = kUnlimitedTrace) : cap_(cap) {}

  void append(IterationRecord row) {
    if (cap_ == kUnlimitedTrace || static_cast<std::int64_t>(rows_.size()) < cap_) {
      rows_.push_back(row);
    }
  }

  std::vector<IterationRecord> take() { return std::move(rows_); }

 private:
  std::int64_t cap_;
  std::vector<IterationRecord> rows_;
};

}  // namespace csg

#endif
