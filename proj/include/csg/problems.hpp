#ifndef CSG_PROBLEMS_HPP
#define CSG_PROBLEMS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csg/oracle.hpp"

namespace csg {

struct ProblemSpec {
  std::string name;
  std::shared_ptr<const Objective> objective;
  DenseVector x0_default;
  std::optional<double> f_star;
  std::optional<DenseVector> x_star;

  int dimension() const { return objective->dimension(); }
};

/// The five-dimensional piecewise-quadratic max test problem:
///   f(x) = max_i b_i * sum_j (x_j - a_ij)^2  over ten pieces.
/// Ties at kinks break to the smallest piece index. The embedded optimum was
/// obtained by a long high-accuracy reference run and is re-certified by the
/// acceptance suite.
ProblemSpec shor_problem();

/// f(x) = sum |x_i|; subgradient sign(x_i) with sign(0) = 0, so the origin is
/// a fixed point of every subgradient method here.
ProblemSpec l1_problem(int dimension);

/// f(x) = max_i x_i^2; subgradient 2 x_i e_i at the smallest maximizing index.
ProblemSpec maxq_problem(int dimension);

/// Smooth strongly convex probe: f(x) = 1/2 sum c_i x_i^2 with the c_i spread
/// linearly over [kappa, 4 kappa].
ProblemSpec quadratic_problem(int dimension, double kappa);

/// Catalog lookup by name. Accepted forms: "shor", "l1", "l1:<dim>",
/// "maxq", "maxq:<dim>", "quad", "quad:<dim>", "quad:<dim>:<kappa>".
/// Unqualified dimensions default to 3 (quad: 4). Throws
/// std::invalid_argument for unknown names.
ProblemSpec make_problem(const std::string& name);

/// Names shown by the catalog listing, with a one-line description each.
std::vector<std::pair<std::string, std::string>> problem_catalog();

}  // namespace csg

#endif
