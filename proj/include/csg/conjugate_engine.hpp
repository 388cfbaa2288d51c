#ifndef CSG_CONJUGATE_ENGINE_HPP
#define CSG_CONJUGATE_ENGINE_HPP

#include <cstdint>
#include <functional>

#include "csg/direction.hpp"
#include "csg/oracle.hpp"
#include "csg/run_result.hpp"
#include "csg/schedules.hpp"

namespace csg {

/// Per-iteration counters of the conjugate subgradient state machine.
///   k: iterate index          l: norm-restart counter
///   m: restart-epoch counter  s: failed-descent counter
///   t: threshold index        b: path length since the last restart
struct CsgCounters {
  std::int64_t k = 0;
  std::int64_t l = 0;
  std::int64_t m = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  double b = 0.0;
};

/// Full-fidelity view of one engine iteration, handed to an observer before
/// the direction is updated for the next one. References stay valid only for
/// the duration of the callback.
struct StepEvent {
  std::int64_t k;           // index of the iterate this step produced
  bool norm_restarted;      // a norm restart fired at the top of the step
  double f_before;          // f(x^k)
  double f_trial;           // f(y^{k+1})
  double lambda;            // step used by the trial
  double p_norm;            // norm of the direction used by the trial
  bool descent;             // sufficient-decrease test held
  RestartTag outcome;       // descent | non_descent | function_value | distance
  double b;                 // path length at the distance check, before any reset
  double eta;               // norm threshold compared at Step 1, before any reseed
  double d;                 // distance budget compared at Step 4, before any reseed
  double mu;                // level the trial's acceptance was tested against
  std::int64_t evals_after; // run-relative oracle calls after this step
  CsgCounters counters;     // counter snapshot after this step
  const DenseVector& direction_used;    // p^k as tried
  const DenseVector& trial_subgradient; // g at y^{k+1}
  const DenseVector& iterate_after;     // x^{k+1}
  const ConvexCertificate* certificate; // matches direction_used; null unless tracking
};

using StepObserver = std::function<void(const StepEvent&)>;

/// Supplies the method-specific wiring of the shared engine: the initial
/// thresholds and how (eta, d) are reseeded at restarts. norm_reseed sees the
/// counters before the restart's increments; epoch_reseed additionally gets
/// the already-incremented epoch index.
struct EngineWiring {
  double eta0 = 0.0;
  double d0 = 0.0;
  ScheduleSpec alpha;  // step shrink factor, indexed by s
  ScheduleSpec beta;   // step seed, indexed by m
  std::function<std::pair<double, double>(const CsgCounters&)> norm_reseed;
  std::function<std::pair<double, double>(const CsgCounters&, std::int64_t m_new)> epoch_reseed;
  bool reset_l_on_epoch_restart = false;
};

struct ConjugateOptions {
  double theta = 0.3;
  double mu = kInfiniteLevel;
  double mu_increment = 0.0;
  StoppingRule stop;
  std::int64_t trace_cap = kUnlimitedTrace;
  bool track_certificate = false;
  StepObserver observer;
};

/// Shared state machine behind both solver variants. Not usually called
/// directly; see run_csgi / run_csgm.
RunResult run_conjugate_engine(SubgradientOracle& oracle, const DenseVector& x0,
                               const EngineWiring& wiring, const ConjugateOptions& options);

/// The implemented method: thresholds coupled to the schedule block.
/// Norm restarts reseed eta/d with alpha''_l beta''_m / alpha''_l beta'''_m;
/// function value and distance restarts reseed them from the incremented
/// epoch index and reset the norm-restart counter.
RunResult run_csgi(SubgradientOracle& oracle, const DenseVector& x0, const CsgiParams& params,
                   const StoppingRule& stop, std::int64_t trace_cap = kUnlimitedTrace,
                   bool track_certificate = false, StepObserver observer = {});

/// The general method: eta_t and d_t are caller-supplied sequences read off
/// by the threshold index, and the norm-restart counter survives epoch
/// restarts.
RunResult run_csgm(SubgradientOracle& oracle, const DenseVector& x0, double theta, double mu,
                   const ScheduleSpec& alpha, const ScheduleSpec& beta,
                   const std::function<double(std::int64_t)>& eta_seq,
                   const std::function<double(std::int64_t)>& d_seq, const StoppingRule& stop,
                   std::int64_t trace_cap = kUnlimitedTrace, bool track_certificate = false,
                   StepObserver observer = {});

}  // namespace csg

#endif
