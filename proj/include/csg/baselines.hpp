#ifndef CSG_BASELINES_HPP
#define CSG_BASELINES_HPP

#include "csg/oracle.hpp"
#include "csg/run_result.hpp"

namespace csg {

/// Subgradient method with the divergent-series rule lambda_k = lambda0/(k+1).
RunResult run_sgm(SubgradientOracle& oracle, const DenseVector& x0, double lambda0,
                  const StoppingRule& stop, std::int64_t trace_cap = kUnlimitedTrace);

/// Subgradient method with the distance-informed rule
/// lambda_k = lambda / sqrt(k+1), lambda = x_star_dist / lipschitz_bound.
RunResult run_sgmt(SubgradientOracle& oracle, const DenseVector& x0, double x_star_dist,
                   double lipschitz_bound, const StoppingRule& stop,
                   std::int64_t trace_cap = kUnlimitedTrace);

/// Simple dual averaging: iterate from the starting point against the running
/// subgradient sum, x^{k+1} = x0 - lambda_k * sum_{i<=k} g^i, with the same
/// step rule as run_sgmt.
RunResult run_asg(SubgradientOracle& oracle, const DenseVector& x0, double x_star_dist,
                  double lipschitz_bound, const StoppingRule& stop,
                  std::int64_t trace_cap = kUnlimitedTrace);

/// Simple double averaging: y^k = x0 - lambda_k * sum_{i<=k} g^i, then
/// x^{k+1} = mu_k x^k + (1 - mu_k) y^k with mu_k = (k+1)/(k+2). Subgradients
/// are taken at the averaged iterates x^k.
RunResult run_dasg(SubgradientOracle& oracle, const DenseVector& x0, double x_star_dist,
                   double lipschitz_bound, const StoppingRule& stop,
                   std::int64_t trace_cap = kUnlimitedTrace);

}  // namespace csg

#endif
