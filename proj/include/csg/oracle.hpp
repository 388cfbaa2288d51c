#ifndef CSG_ORACLE_HPP
#define CSG_ORACLE_HPP

#include <cstdint>
#include <stdexcept>

#include "csg/vector_ops.hpp"

namespace csg {

/// Thrown when an iterate or function value degenerates to NaN/Inf.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Evaluation {
  double value = 0.0;
  DenseVector subgradient;
};

/// A convex objective together with one selectable subdifferential element.
/// Implementations are pure: evaluate() has no side effects and is
/// deterministic, so instances can be shared freely across runs and threads.
class Objective {
 public:
  virtual ~Objective() = default;
  virtual int dimension() const = 0;
  virtual Evaluation evaluate(const DenseVector& x) const = 0;
};

/// Counting wrapper around an Objective. One oracle per solver run; the
/// counter is the run's cost measure (number of subgradient calculations).
class SubgradientOracle {
 public:
  explicit SubgradientOracle(const Objective& objective) : objective_(&objective) {}

  int dimension() const { return objective_->dimension(); }
  std::int64_t eval_count() const { return count_; }

  Evaluation operator()(const DenseVector& x) {
    if (static_cast<int>(x.size()) != objective_->dimension()) {
      throw std::invalid_argument("oracle query dimension mismatch");
    }
    if (!all_finite(x)) {
      throw std::invalid_argument("oracle query point has non-finite entries");
    }
    ++count_;
    Evaluation e = objective_->evaluate(x);
    if (e.subgradient.size() != x.size()) {
      throw NumericError("objective returned a subgradient of the wrong dimension");
    }
    if (!std::isfinite(e.value) || !all_finite(e.subgradient)) {
      throw NumericError("objective returned a non-finite evaluation");
    }
    return e;
  }

 private:
  const Objective* objective_;
  std::int64_t count_ = 0;
};

}  // namespace csg

#endif
