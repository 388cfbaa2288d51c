#ifndef CSG_VECTOR_OPS_HPP
#define CSG_VECTOR_OPS_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace csg {

using DenseVector = std::vector<double>;

inline void require_same_dimension(const DenseVector& a, const DenseVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
  }
}

inline double dot(const DenseVector& a, const DenseVector& b) {
  require_same_dimension(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const DenseVector& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

inline bool all_finite(const DenseVector& a) {
  for (double v : a) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

/// x - t * d
inline DenseVector subtract_scaled(const DenseVector& x, double t, const DenseVector& d) {
  require_same_dimension(x, d);
  DenseVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - t * d[i];
  return r;
}

/// a += s * b
inline void add_scaled_in_place(DenseVector& a, double s, const DenseVector& b) {
  require_same_dimension(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
}

inline double distance(const DenseVector& a, const DenseVector& b) {
  require_same_dimension(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace csg

#endif
