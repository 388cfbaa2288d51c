#include "csg/run_result.hpp"

namespace csg {

const char* to_string(RestartTag tag) {
  switch (tag) {
    case RestartTag::none: return "none";
    case RestartTag::norm: return "norm";
    case RestartTag::function_value: return "function-value";
    case RestartTag::distance: return "distance";
    case RestartTag::descent: return "descent";
    case RestartTag::non_descent: return "non-descent";
  }
  return "?";
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::target_reached: return "target-reached";
    case Termination::eval_budget: return "eval-budget";
  }
  return "?";
}

}  // namespace csg
