#ifndef CSG_DIRECTION_HPP
#define CSG_DIRECTION_HPP

#include <vector>

#include "csg/oracle.hpp"
#include "csg/vector_ops.hpp"

namespace csg {

struct NrConv2Result {
  DenseVector point;
  double t = 0.0;  // mixing weight: point = p + t * (g - p), t in [0, 1]
};

/// Smallest-norm point of the segment [p, g]: the direction recursion's
/// projection of the origin onto a two-atom convex hull. Closed form
///   t = clamp(<p, p - g> / ||p - g||^2, 0, 1),
/// with t = 0 when p == g (the segment is a point).
NrConv2Result nr_conv2(const DenseVector& p, const DenseVector& g);

/// One tracked subgradient of a convex-combination certificate.
struct CertificateAtom {
  double weight = 0.0;
  DenseVector subgradient;
  DenseVector eval_point;
};

/// Tracks the direction as an explicit convex combination of the subgradients
/// that produced it. Test support: reconstructs p and witnesses the
/// hull-membership property of the recursion. Not used on solver hot paths
/// unless tracking is switched on.
class ConvexCertificate {
 public:
  void reset(DenseVector subgradient, DenseVector eval_point);
  /// Apply p' = (1 - t) p + t g: rescale existing weights, append the new atom.
  void mix(double t, DenseVector subgradient, DenseVector eval_point);

  const std::vector<CertificateAtom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  double weight_sum() const;
  double max_subgradient_norm() const;
  DenseVector combination() const;

 private:
  std::vector<CertificateAtom> atoms_;
};

enum class NormDecayOutcome {
  bound_holds,          // ||p^i|| <= C / ((1 - theta) sqrt(i + 1)) for all i
  bound_violated,
  hypothesis_violated,  // <g^{i+1}, p^i> <= theta ||p^i||^2 failed; check inapplicable
};

/// Runs the direction recursion over g_seq and checks the norm-decay bound
/// under the angle hypothesis. theta must lie in (0, 1).
NormDecayOutcome direction_norm_decay_check(const std::vector<DenseVector>& g_seq, double theta);

/// Deviation estimate for a convex combination of subgradients collected
/// inside B(center, delta): for every probe y,
///   f(y) - sum_j mu_j f(y^j) >= <p, y - center> - delta * L,
/// where L is the largest atom subgradient norm. Throws std::invalid_argument
/// if an atom's evaluation point lies outside the ball or weights are invalid.
bool deviation_bound_check(const ConvexCertificate& certificate, const DenseVector& center,
                   double delta, const std::vector<DenseVector>& probe_points,
                   const Objective& objective, double slack = 1e-10);

}  // namespace csg

#endif
