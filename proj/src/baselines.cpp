#include "csg/baselines.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace csg {

namespace {

/// Shared driver: all four baselines evaluate one subgradient per iterate and
/// differ only in the next-iterate rule. The rule sees the iterate index k,
/// the current iterate and its subgradient, and returns x^{k+1}; p_norm_out
/// and lambda_out feed the trace row.
template <typename UpdateRule>
RunResult run_sequence(SubgradientOracle& oracle, const DenseVector& x0,
                       const StoppingRule& stop, std::int64_t trace_cap, UpdateRule&& next) {
  if (!all_finite(x0)) {
    throw std::invalid_argument("starting point has non-finite entries");
  }
  if (stop.max_evals < 1) {
    throw std::invalid_argument("evaluation budget must be at least 1");
  }

  const std::int64_t evals_at_entry = oracle.eval_count();
  const auto evals_used = [&] { return oracle.eval_count() - evals_at_entry; };

  TraceBuilder trace(trace_cap);
  DenseVector x = x0;
  DenseVector best_point = x0;
  double best_value = std::numeric_limits<double>::infinity();
  bool target_hit = false;

  std::int64_t k = 0;
  while (evals_used() < stop.max_evals && !target_hit) {
    if (!all_finite(x)) {
      throw NumericError("iterate became non-finite at iteration " + std::to_string(k));
    }
    const Evaluation e = oracle(x);
    if (e.value < best_value) {
      best_value = e.value;
      best_point = x;
      target_hit = stop.target_value.has_value() && best_value <= *stop.target_value;
    }
    double p_norm = 0.0;
    double lambda = 0.0;
    DenseVector x_next = next(k, x, e.subgradient, p_norm, lambda);
    trace.append({k, e.value, best_value, p_norm, lambda, RestartTag::none, evals_used()});
    x = std::move(x_next);
    ++k;
  }

  RunResult result;
  result.best_point = std::move(best_point);
  result.best_value = best_value;
  result.total_evals = evals_used();
  result.termination = target_hit ? Termination::target_reached : Termination::eval_budget;
  result.trace = trace.take();
  return result;
}

double step_rule_sqrt(double lambda, std::int64_t k) {
  return lambda / std::sqrt(static_cast<double>(k + 1));
}

void require_distance_rule(double x_star_dist, double lipschitz_bound) {
  if (!(x_star_dist > 0.0)) {
    throw std::invalid_argument("x_star_dist must be positive");
  }
  if (!(lipschitz_bound > 0.0)) {
    throw std::invalid_argument("lipschitz_bound must be positive");
  }
}

}  // namespace

RunResult run_sgm(SubgradientOracle& oracle, const DenseVector& x0, double lambda0,
                  const StoppingRule& stop, std::int64_t trace_cap) {
  if (!(lambda0 > 0.0)) {
    throw std::invalid_argument("lambda0 must be positive");
  }
  return run_sequence(oracle, x0, stop, trace_cap,
                      [lambda0](std::int64_t k, const DenseVector& x, const DenseVector& g,
                                double& p_norm, double& lambda) {
                        p_norm = norm(g);
                        lambda = lambda0 / static_cast<double>(k + 1);
                        return subtract_scaled(x, lambda, g);
                      });
}

RunResult run_sgmt(SubgradientOracle& oracle, const DenseVector& x0, double x_star_dist,
                   double lipschitz_bound, const StoppingRule& stop, std::int64_t trace_cap) {
  require_distance_rule(x_star_dist, lipschitz_bound);
  const double lambda0 = x_star_dist / lipschitz_bound;
  return run_sequence(oracle, x0, stop, trace_cap,
                      [lambda0](std::int64_t k, const DenseVector& x, const DenseVector& g,
                                double& p_norm, double& lambda) {
                        p_norm = norm(g);
                        lambda = step_rule_sqrt(lambda0, k);
                        return subtract_scaled(x, lambda, g);
                      });
}

RunResult run_asg(SubgradientOracle& oracle, const DenseVector& x0, double x_star_dist,
                  double lipschitz_bound, const StoppingRule& stop, std::int64_t trace_cap) {
  require_distance_rule(x_star_dist, lipschitz_bound);
  const double lambda0 = x_star_dist / lipschitz_bound;
  DenseVector sum(x0.size(), 0.0);
  return run_sequence(oracle, x0, stop, trace_cap,
                      [lambda0, &x0, sum](std::int64_t k, const DenseVector&,
                                          const DenseVector& g, double& p_norm,
                                          double& lambda) mutable {
                        add_scaled_in_place(sum, 1.0, g);
                        p_norm = norm(sum);
                        lambda = step_rule_sqrt(lambda0, k);
                        return subtract_scaled(x0, lambda, sum);
                      });
}

RunResult run_dasg(SubgradientOracle& oracle, const DenseVector& x0, double x_star_dist,
                   double lipschitz_bound, const StoppingRule& stop, std::int64_t trace_cap) {
  require_distance_rule(x_star_dist, lipschitz_bound);
  const double lambda0 = x_star_dist / lipschitz_bound;
  DenseVector sum(x0.size(), 0.0);
  return run_sequence(
      oracle, x0, stop, trace_cap,
      [lambda0, &x0, sum](std::int64_t k, const DenseVector& x, const DenseVector& g,
                          double& p_norm, double& lambda) mutable {
        add_scaled_in_place(sum, 1.0, g);
        p_norm = norm(sum);
        lambda = step_rule_sqrt(lambda0, k);
        const DenseVector y = subtract_scaled(x0, lambda, sum);
        const double mu_k =
            static_cast<double>(k + 1) / static_cast<double>(k + 2);
        DenseVector x_next(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
          x_next[i] = mu_k * x[i] + (1.0 - mu_k) * y[i];
        }
        return x_next;
      });
}

}  // namespace csg
