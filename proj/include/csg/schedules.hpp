#ifndef CSG_SCHEDULES_HPP
#define CSG_SCHEDULES_HPP

#include <cstdint>
#include <limits>
#include <string>

namespace csg {

enum class ScheduleKind { harmonic, geometric, constant };

/// Declarative parameter sequence.
///   harmonic(c):      term(m) = c / (m + 1)
///   geometric(c, s):  term(m) = c * s^m
///   constant(c):      term(m) = c
/// Harmonic terms tend to zero with unbounded partial sums; geometric terms
/// tend to zero with bounded sum; constant is provided for wiring thresholds
/// that must stay fixed (e.g. deferred-shrinkage experiments).
struct ScheduleSpec {
  ScheduleKind kind = ScheduleKind::harmonic;
  double scale = 1.0;
  double ratio = 0.0;  // geometric only

  static ScheduleSpec harmonic(double c);
  static ScheduleSpec geometric(double c, double sigma);
  static ScheduleSpec constant(double c);

  double term(std::int64_t index) const;

  /// Config-file form: "harmonic:c", "geometric:c:sigma", "constant:c".
  std::string to_string() const;
  static ScheduleSpec parse(const std::string& text);
};

inline double term(const ScheduleSpec& spec, std::int64_t index) { return spec.term(index); }

/// Smallest N with sum of the first N terms >= target. Only meaningful for
/// the harmonic kind (its partial sums are unbounded); throws
/// std::invalid_argument otherwise.
std::int64_t divergence_witness(const ScheduleSpec& spec, double target);

constexpr double kInfiniteLevel = std::numeric_limits<double>::infinity();

/// Full parameter block of the implemented conjugate subgradient method.
/// mu == +inf disables function value restarts; a finite mu enables them and
/// grows by mu_increment after each one.
struct CsgiParams {
  double theta = 0.3;
  double mu = kInfiniteLevel;
  double mu_increment = 0.0;
  ScheduleSpec alpha_prime = ScheduleSpec::geometric(0.8, 0.8);   // step shrink after failed descent
  ScheduleSpec alpha_dprime = ScheduleSpec::geometric(0.8, 0.8);  // threshold shrink after norm restart
  ScheduleSpec beta_prime = ScheduleSpec::harmonic(0.05);         // step seed
  ScheduleSpec beta_dprime = ScheduleSpec::harmonic(0.4);         // norm threshold seed
  ScheduleSpec beta_tprime = ScheduleSpec::harmonic(0.05 / 0.7);  // distance budget seed

  void validate() const;  // throws std::invalid_argument on violated constraints
};

/// The parameter choice used for the benchmark runs: theta = 0.3, mu = +inf,
/// alpha' = alpha'' = geometric(0.8, 0.8), beta' = harmonic(0.05),
/// beta'' = harmonic(0.4 |g0|), beta''' = harmonic(0.05 |g0| / 0.7).
CsgiParams paper_csgi_params(double g0_norm);

}  // namespace csg

#endif
