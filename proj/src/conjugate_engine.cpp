#include "csg/conjugate_engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace csg {

namespace {

struct EngineState {
  DenseVector x;       // current iterate
  double f_x = 0.0;
  DenseVector u;       // best iterate
  double f_u = 0.0;
  DenseVector p;       // direction
  DenseVector g_last;  // subgradient valid at x
  double lambda = 0.0;
  double eta = 0.0;
  double d = 0.0;
  double mu = 0.0;
  CsgCounters counters;
};

void require_finite_iterate(const DenseVector& y, std::int64_t k) {
  if (!all_finite(y)) {
    throw NumericError("iterate became non-finite at iteration " + std::to_string(k));
  }
}

}  // namespace

RunResult run_conjugate_engine(SubgradientOracle& oracle, const DenseVector& x0,
                               const EngineWiring& wiring, const ConjugateOptions& options) {
  if (!(options.theta > 0.0 && options.theta < 1.0)) {
    throw std::invalid_argument("theta must lie in (0, 1)");
  }
  if (std::isnan(options.mu)) {
    throw std::invalid_argument("mu must be a number or +inf");
  }
  if (options.mu_increment < 0.0) {
    throw std::invalid_argument("mu_increment must be non-negative");
  }
  if (!all_finite(x0)) {
    throw std::invalid_argument("starting point has non-finite entries");
  }
  if (options.stop.max_evals < 1) {
    throw std::invalid_argument("evaluation budget must be at least 1");
  }

  const std::int64_t evals_at_entry = oracle.eval_count();
  const auto evals_used = [&] { return oracle.eval_count() - evals_at_entry; };
  const auto budget_left = [&] { return evals_used() < options.stop.max_evals; };

  TraceBuilder trace(options.trace_cap);
  ConvexCertificate certificate;

  EngineState st;
  st.x = x0;
  {
    const Evaluation e0 = oracle(x0);
    st.f_x = e0.value;
    st.g_last = e0.subgradient;
    st.p = e0.subgradient;
  }
  st.u = x0;
  st.f_u = st.f_x;
  st.lambda = wiring.beta.term(0);
  st.eta = wiring.eta0;
  st.d = wiring.d0;
  st.mu = options.mu;
  if (options.track_certificate) certificate.reset(st.g_last, st.x);

  trace.append({0, st.f_x, st.f_u, norm(st.p), st.lambda, RestartTag::none, evals_used()});

  bool target_hit =
      options.stop.target_value.has_value() && st.f_u <= *options.stop.target_value;

  while (!target_hit && budget_left()) {
    CsgCounters& c = st.counters;

    // Step 1: norm restart. The cached subgradient is valid at the current
    // iterate on every entry, so no oracle call is needed here.
    const double eta_checked = st.eta;
    bool norm_restarted = false;
    if (norm(st.p) <= st.eta) {
      st.p = st.g_last;
      std::tie(st.eta, st.d) = wiring.norm_reseed(c);
      ++c.l;
      ++c.t;
      c.b = 0.0;
      norm_restarted = true;
      if (options.track_certificate) certificate.reset(st.g_last, st.x);
    }

    // Step 2: trial step against the current direction.
    const double p_norm = norm(st.p);
    const double lambda_used = st.lambda;
    DenseVector y = subtract_scaled(st.x, st.lambda, st.p);
    require_finite_iterate(y, c.k + 1);
    c.b += st.lambda * p_norm;
    const double b_at_check = c.b;
    const double d_checked = st.d;
    const double mu_checked = st.mu;
    const double f_before = st.f_x;
    const Evaluation trial = oracle(y);
    const bool descent =
        trial.value <= st.f_x - options.theta * st.lambda * (p_norm * p_norm);

    bool function_value_restart = false;
    if (descent) {
      st.x = std::move(y);
      st.f_x = trial.value;  // lambda carries over
    } else {
      // Step 3: shrink the step seed; accept the trial unless it broke the level.
      st.lambda = wiring.alpha.term(c.s) * wiring.beta.term(c.m);
      ++c.s;
      if (trial.value <= st.mu) {
        st.x = std::move(y);
        st.f_x = trial.value;
      } else {
        function_value_restart = true;
      }
    }

    if (function_value_restart) {
      // Return to the best point with a fresh subgradient; the fresh call is
      // part of the restart's cost. If the budget cannot afford it the run
      // ends right after with the state already back at u.
      st.x = st.u;
      st.f_x = st.f_u;
      ++c.m;
      st.lambda = wiring.beta.term(c.m);
      std::tie(st.eta, st.d) = wiring.epoch_reseed(c, c.m);
      if (wiring.reset_l_on_epoch_restart) c.l = 0;
      ++c.k;
      ++c.t;
      c.s = 0;
      c.b = 0.0;
      if (std::isfinite(st.mu)) st.mu += options.mu_increment;
      DenseVector p_used = std::move(st.p);
      if (budget_left()) {
        const Evaluation at_u = oracle(st.u);
        st.g_last = at_u.subgradient;
        st.p = at_u.subgradient;
      }
      trace.append({c.k, st.f_x, st.f_u, p_norm, lambda_used, RestartTag::function_value,
                    evals_used()});
      if (options.observer) {
        options.observer({c.k, norm_restarted, f_before, trial.value, lambda_used, p_norm,
                          false, RestartTag::function_value, b_at_check, eta_checked,
                          d_checked, mu_checked, evals_used(), c, p_used,
                          trial.subgradient, st.x,
                          options.track_certificate ? &certificate : nullptr});
      }
      if (options.track_certificate && !st.p.empty()) certificate.reset(st.p, st.x);
      continue;
    }

    // Step 4: track the best point, then check the path-length budget.
    if (st.f_x < st.f_u) {
      st.u = st.x;
      st.f_u = st.f_x;
      target_hit =
          options.stop.target_value.has_value() && st.f_u <= *options.stop.target_value;
    }
    const bool distance_restart = c.b > st.d;
    ++c.k;

    if (distance_restart) {
      ++c.m;
      st.lambda = wiring.beta.term(c.m);
      std::tie(st.eta, st.d) = wiring.epoch_reseed(c, c.m);
      if (wiring.reset_l_on_epoch_restart) c.l = 0;
      ++c.t;
      c.s = 0;
      c.b = 0.0;
      // x^{k+1} equals the trial point, so its subgradient is already in hand.
      DenseVector p_used = std::move(st.p);
      st.p = trial.subgradient;
      st.g_last = trial.subgradient;
      trace.append(
          {c.k, st.f_x, st.f_u, p_norm, lambda_used, RestartTag::distance, evals_used()});
      if (options.observer) {
        options.observer({c.k, norm_restarted, f_before, trial.value, lambda_used, p_norm,
                          descent, RestartTag::distance, b_at_check, eta_checked, d_checked,
                          mu_checked, evals_used(), c, p_used, trial.subgradient, st.x,
                          options.track_certificate ? &certificate : nullptr});
      }
      if (options.track_certificate) certificate.reset(st.g_last, st.x);
      continue;
    }

    const RestartTag tag = norm_restarted ? RestartTag::norm
                           : descent      ? RestartTag::descent
                                          : RestartTag::non_descent;
    trace.append({c.k, st.f_x, st.f_u, p_norm, lambda_used, tag, evals_used()});
    if (options.observer) {
      options.observer({c.k, norm_restarted, f_before, trial.value, lambda_used, p_norm,
                        descent, descent ? RestartTag::descent : RestartTag::non_descent,
                        b_at_check, eta_checked, d_checked, mu_checked, evals_used(), c,
                        st.p, trial.subgradient, st.x,
                        options.track_certificate ? &certificate : nullptr});
    }

    // Step 5: average the new subgradient into the direction.
    const NrConv2Result next = nr_conv2(st.p, trial.subgradient);
    if (options.track_certificate) certificate.mix(next.t, trial.subgradient, st.x);
    st.p = next.point;
    st.g_last = trial.subgradient;
  }

  RunResult result;
  result.best_point = st.u;
  result.best_value = st.f_u;
  result.total_evals = evals_used();
  result.termination = target_hit ? Termination::target_reached : Termination::eval_budget;
  result.trace = trace.take();
  return result;
}

RunResult run_csgi(SubgradientOracle& oracle, const DenseVector& x0, const CsgiParams& params,
                   const StoppingRule& stop, std::int64_t trace_cap, bool track_certificate,
                   StepObserver observer) {
  params.validate();

  EngineWiring wiring;
  wiring.eta0 = params.beta_dprime.term(0);
  wiring.d0 = params.beta_tprime.term(0);
  wiring.alpha = params.alpha_prime;
  wiring.beta = params.beta_prime;
  const ScheduleSpec alpha_dprime = params.alpha_dprime;
  const ScheduleSpec beta_dprime = params.beta_dprime;
  const ScheduleSpec beta_tprime = params.beta_tprime;
  wiring.norm_reseed = [=](const CsgCounters& c) {
    const double shrink = alpha_dprime.term(c.l);
    return std::make_pair(shrink * beta_dprime.term(c.m), shrink * beta_tprime.term(c.m));
  };
  wiring.epoch_reseed = [=](const CsgCounters&, std::int64_t m_new) {
    return std::make_pair(beta_dprime.term(m_new), beta_tprime.term(m_new));
  };
  wiring.reset_l_on_epoch_restart = true;

  ConjugateOptions options;
  options.theta = params.theta;
  options.mu = params.mu;
  options.mu_increment = params.mu_increment;
  options.stop = stop;
  options.trace_cap = trace_cap;
  options.track_certificate = track_certificate;
  options.observer = std::move(observer);
  return run_conjugate_engine(oracle, x0, wiring, options);
}

RunResult run_csgm(SubgradientOracle& oracle, const DenseVector& x0, double theta, double mu,
                   const ScheduleSpec& alpha, const ScheduleSpec& beta,
                   const std::function<double(std::int64_t)>& eta_seq,
                   const std::function<double(std::int64_t)>& d_seq, const StoppingRule& stop,
                   std::int64_t trace_cap, bool track_certificate, StepObserver observer) {
  if (!eta_seq || !d_seq) {
    throw std::invalid_argument("run_csgm needs eta and d sequences");
  }
  if (alpha.kind == ScheduleKind::constant || !(alpha.term(0) > 0.0 && alpha.term(0) < 1.0)) {
    throw std::invalid_argument("alpha must map into (0, 1) and tend to zero");
  }
  if (beta.kind != ScheduleKind::harmonic) {
    throw std::invalid_argument("beta needs unbounded partial sums (harmonic)");
  }
  if (!(eta_seq(0) > 0.0) || !(d_seq(0) > 0.0)) {
    throw std::invalid_argument("eta and d sequences must be positive");
  }

  EngineWiring wiring;
  wiring.eta0 = eta_seq(0);
  wiring.d0 = d_seq(0);
  wiring.alpha = alpha;
  wiring.beta = beta;
  wiring.norm_reseed = [eta_seq, d_seq](const CsgCounters& c) {
    return std::make_pair(eta_seq(c.t + 1), d_seq(c.t + 1));
  };
  wiring.epoch_reseed = [eta_seq, d_seq](const CsgCounters& c, std::int64_t) {
    return std::make_pair(eta_seq(c.t + 1), d_seq(c.t + 1));
  };
  wiring.reset_l_on_epoch_restart = false;

  ConjugateOptions options;
  options.theta = theta;
  options.mu = mu;  // fixed level; no adaptation in the general method
  options.stop = stop;
  options.trace_cap = trace_cap;
  options.track_certificate = track_certificate;
  options.observer = std::move(observer);
  return run_conjugate_engine(oracle, x0, wiring, options);
}

}  // namespace csg
