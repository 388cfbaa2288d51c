#include "csg/schedules.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace csg {

ScheduleSpec ScheduleSpec::harmonic(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("harmonic schedule needs scale > 0");
  return {ScheduleKind::harmonic, c, 0.0};
}

ScheduleSpec ScheduleSpec::geometric(double c, double sigma) {
  if (!(c > 0.0)) throw std::invalid_argument("geometric schedule needs scale > 0");
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw std::invalid_argument("geometric schedule needs ratio in (0, 1)");
  }
  return {ScheduleKind::geometric, c, sigma};
}

ScheduleSpec ScheduleSpec::constant(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("constant schedule needs scale > 0");
  return {ScheduleKind::constant, c, 0.0};
}

double ScheduleSpec::term(std::int64_t index) const {
  switch (kind) {
    case ScheduleKind::harmonic:
      return scale / static_cast<double>(index + 1);
    case ScheduleKind::geometric:
      return scale * std::pow(ratio, static_cast<double>(index));
    case ScheduleKind::constant:
      return scale;
  }
  throw std::logic_error("unreachable schedule kind");
}

std::string ScheduleSpec::to_string() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind) {
    case ScheduleKind::harmonic:
      out << "harmonic:" << scale;
      break;
    case ScheduleKind::geometric:
      out << "geometric:" << scale << ":" << ratio;
      break;
    case ScheduleKind::constant:
      out << "constant:" << scale;
      break;
  }
  return out.str();
}

ScheduleSpec ScheduleSpec::parse(const std::string& text) {
  std::istringstream in(text);
  std::string kind_name;
  if (!std::getline(in, kind_name, ':')) {
    throw std::invalid_argument("empty schedule spec");
  }
  auto read_number = [&](const char* what) {
    std::string part;
    if (!std::getline(in, part, ':')) {
      throw std::invalid_argument("schedule spec '" + text + "' is missing its " + what);
    }
    std::size_t used = 0;
    double value = std::stod(part, &used);
    if (used != part.size()) {
      throw std::invalid_argument("schedule spec '" + text + "' has a malformed " + what);
    }
    return value;
  };
  ScheduleSpec spec;
  if (kind_name == "harmonic") {
    spec = harmonic(read_number("scale"));
  } else if (kind_name == "geometric") {
    const double c = read_number("scale");
    spec = geometric(c, read_number("ratio"));
  } else if (kind_name == "constant") {
    spec = constant(read_number("scale"));
  } else {
    throw std::invalid_argument("unknown schedule kind '" + kind_name + "'");
  }
  std::string rest;
  if (std::getline(in, rest, ':')) {
    throw std::invalid_argument("schedule spec '" + text + "' has trailing fields");
  }
  return spec;
}

std::int64_t divergence_witness(const ScheduleSpec& spec, double target) {
  if (spec.kind != ScheduleKind::harmonic) {
    throw std::invalid_argument("divergence witness applies to harmonic schedules only");
  }
  if (!(target > 0.0)) {
    throw std::invalid_argument("divergence witness needs target > 0");
  }
  double sum = 0.0;
  std::int64_t n = 0;
  while (sum < target) {
    sum += spec.term(n);
    ++n;
  }
  return n;
}

void CsgiParams::validate() const {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw std::invalid_argument("theta must lie in (0, 1)");
  }
  if (std::isnan(mu)) throw std::invalid_argument("mu must be a number or +inf");
  if (std::isfinite(mu) && !(mu_increment > 0.0)) {
    throw std::invalid_argument("finite mu needs mu_increment > 0");
  }
  auto require_unit_decay = [](const ScheduleSpec& s, const char* name) {
    if (s.kind == ScheduleKind::constant) {
      throw std::invalid_argument(std::string(name) + " must tend to zero");
    }
    if (!(s.term(0) > 0.0 && s.term(0) < 1.0)) {
      throw std::invalid_argument(std::string(name) + " must map into (0, 1)");
    }
  };
  require_unit_decay(alpha_prime, "alpha_prime");
  require_unit_decay(alpha_dprime, "alpha_dprime");
  if (beta_prime.kind != ScheduleKind::harmonic) {
    throw std::invalid_argument("beta_prime needs unbounded partial sums (harmonic)");
  }
  if (beta_dprime.kind == ScheduleKind::constant ||
      beta_tprime.kind == ScheduleKind::constant) {
    throw std::invalid_argument("beta_dprime and beta_tprime must tend to zero");
  }
}

CsgiParams paper_csgi_params(double g0_norm) {
  if (!(g0_norm > 0.0)) {
    throw std::invalid_argument("paper_csgi_params needs g0_norm > 0");
  }
  CsgiParams params;
  params.theta = 0.3;
  params.mu = kInfiniteLevel;
  params.mu_increment = 0.0;
  params.alpha_prime = ScheduleSpec::geometric(0.8, 0.8);
  params.alpha_dprime = ScheduleSpec::geometric(0.8, 0.8);
  params.beta_prime = ScheduleSpec::harmonic(0.05);
  params.beta_dprime = ScheduleSpec::harmonic(0.4 * g0_norm);
  params.beta_tprime = ScheduleSpec::harmonic(0.05 * g0_norm / 0.7);
  return params;
}

}  // namespace csg
