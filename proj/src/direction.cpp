#include "csg/direction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace csg {

NrConv2Result nr_conv2(const DenseVector& p, const DenseVector& g) {
  require_same_dimension(p, g);
  double diff_sq = 0.0;
  double p_dot_diff = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = p[i] - g[i];
    diff_sq += d * d;
    p_dot_diff += p[i] * d;
  }
  if (diff_sq == 0.0) {
    return {p, 0.0};
  }
  const double t = std::clamp(p_dot_diff / diff_sq, 0.0, 1.0);
  DenseVector point(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    point[i] = p[i] + t * (g[i] - p[i]);
  }
  return {std::move(point), t};
}

void ConvexCertificate::reset(DenseVector subgradient, DenseVector eval_point) {
  atoms_.clear();
  atoms_.push_back({1.0, std::move(subgradient), std::move(eval_point)});
}

void ConvexCertificate::mix(double t, DenseVector subgradient, DenseVector eval_point) {
  for (CertificateAtom& atom : atoms_) atom.weight *= (1.0 - t);
  atoms_.push_back({t, std::move(subgradient), std::move(eval_point)});
}

double ConvexCertificate::weight_sum() const {
  double s = 0.0;
  for (const CertificateAtom& atom : atoms_) s += atom.weight;
  return s;
}

double ConvexCertificate::max_subgradient_norm() const {
  double m = 0.0;
  for (const CertificateAtom& atom : atoms_) m = std::max(m, norm(atom.subgradient));
  return m;
}

DenseVector ConvexCertificate::combination() const {
  if (atoms_.empty()) return {};
  DenseVector p(atoms_.front().subgradient.size(), 0.0);
  for (const CertificateAtom& atom : atoms_) {
    add_scaled_in_place(p, atom.weight, atom.subgradient);
  }
  return p;
}

NormDecayOutcome direction_norm_decay_check(const std::vector<DenseVector>& g_seq, double theta) {
  if (theta <= 0.0 || theta >= 1.0) {
    throw std::invalid_argument("direction_norm_decay_check: theta must lie in (0, 1)");
  }
  if (g_seq.empty()) {
    throw std::invalid_argument("direction_norm_decay_check: empty subgradient sequence");
  }
  double c = 0.0;
  for (const DenseVector& g : g_seq) c = std::max(c, norm(g));

  DenseVector p = g_seq.front();
  for (std::size_t i = 0; i < g_seq.size(); ++i) {
    if (i > 0) {
      // hypothesis <g^{i}, p^{i-1}> <= theta ||p^{i-1}||^2 checked before mixing
      const double pp = dot(p, p);
      if (dot(g_seq[i], p) > theta * pp) {
        return NormDecayOutcome::hypothesis_violated;
      }
      p = nr_conv2(p, g_seq[i]).point;
    }
    const double bound = c / ((1.0 - theta) * std::sqrt(static_cast<double>(i + 1)));
    if (norm(p) > bound * (1.0 + 1e-12)) {
      return NormDecayOutcome::bound_violated;
    }
  }
  return NormDecayOutcome::bound_holds;
}

bool deviation_bound_check(const ConvexCertificate& certificate, const DenseVector& center, double delta,
                   const std::vector<DenseVector>& probe_points, const Objective& objective,
                   double slack) {
  if (certificate.empty()) {
    throw std::invalid_argument("deviation_bound_check: empty certificate");
  }
  if (delta < 0.0) {
    throw std::invalid_argument("deviation_bound_check: negative radius");
  }
  double weight_sum = 0.0;
  for (const CertificateAtom& atom : certificate.atoms()) {
    if (atom.weight < -1e-12) {
      throw std::invalid_argument("deviation_bound_check: negative atom weight");
    }
    weight_sum += atom.weight;
    if (distance(atom.eval_point, center) > delta * (1.0 + 1e-12) + 1e-12) {
      throw std::invalid_argument("deviation_bound_check: atom evaluated outside B(center, delta)");
    }
  }
  if (std::abs(weight_sum - 1.0) > 1e-12) {
    throw std::invalid_argument("deviation_bound_check: atom weights do not sum to 1");
  }

  const DenseVector p = certificate.combination();
  const double level = certificate.max_subgradient_norm();

  double weighted_value = 0.0;
  for (const CertificateAtom& atom : certificate.atoms()) {
    weighted_value += atom.weight * objective.evaluate(atom.eval_point).value;
  }

  for (const DenseVector& y : probe_points) {
    const double lhs = objective.evaluate(y).value - weighted_value;
    double inner = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) inner += p[i] * (y[i] - center[i]);
    if (lhs < inner - delta * level - slack) {
      return false;
    }
  }
  return true;
}

}  // namespace csg
