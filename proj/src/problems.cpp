#include "csg/problems.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace csg {

namespace {

// Ten-piece data of the classic five-dimensional max-of-quadratics test
// problem. The optimum below was obtained from the active-piece stationarity
// system and double-checked by a long reference run (see the acceptance
// suite, which re-certifies it on every build).
constexpr int kShorPieces = 10;
constexpr int kShorDim = 5;
constexpr std::array<std::array<double, kShorDim>, kShorPieces> kShorA = {{
    {0, 0, 0, 0, 0},
    {2, 1, 1, 1, 3},
    {1, 2, 1, 1, 2},
    {1, 4, 1, 2, 2},
    {3, 2, 1, 0, 1},
    {0, 2, 1, 0, 1},
    {1, 1, 1, 1, 1},
    {1, 0, 1, 2, 1},
    {0, 0, 2, 1, 0},
    {1, 1, 2, 0, 0},
}};
constexpr std::array<double, kShorPieces> kShorB = {1,   5,   10, 2, 4,
                                                    3,   1.7, 2.5, 6, 4.5};
constexpr double kShorOptimalValue = 22.600162095770894;
constexpr std::array<double, kShorDim> kShorOptimalPoint = {
    1.1243510101866154, 0.9794615993136554, 1.4777077519642634,
    0.92023348588485765, 1.124291588004843};

class ShorObjective : public Objective {
 public:
  int dimension() const override { return kShorDim; }

  Evaluation evaluate(const DenseVector& x) const override {
    double best = -1.0;
    int best_index = 0;
    for (int i = 0; i < kShorPieces; ++i) {
      double q = 0.0;
      for (int j = 0; j < kShorDim; ++j) {
        const double d = x[j] - kShorA[i][j];
        q += d * d;
      }
      const double v = kShorB[i] * q;
      if (v > best) {  // strict: ties keep the smallest index
        best = v;
        best_index = i;
      }
    }
    Evaluation e;
    e.value = best;
    e.subgradient.resize(kShorDim);
    for (int j = 0; j < kShorDim; ++j) {
      e.subgradient[j] = 2.0 * kShorB[best_index] * (x[j] - kShorA[best_index][j]);
    }
    return e;
  }
};

class L1Objective : public Objective {
 public:
  explicit L1Objective(int dimension) : dimension_(dimension) {}
  int dimension() const override { return dimension_; }

  Evaluation evaluate(const DenseVector& x) const override {
    Evaluation e;
    e.subgradient.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      e.value += std::abs(x[i]);
      e.subgradient[i] = x[i] > 0.0 ? 1.0 : (x[i] < 0.0 ? -1.0 : 0.0);
    }
    return e;
  }

 private:
  int dimension_;
};

class MaxQObjective : public Objective {
 public:
  explicit MaxQObjective(int dimension) : dimension_(dimension) {}
  int dimension() const override { return dimension_; }

  Evaluation evaluate(const DenseVector& x) const override {
    double best = -1.0;
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double v = x[i] * x[i];
      if (v > best) {
        best = v;
        best_index = i;
      }
    }
    Evaluation e;
    e.value = best;
    e.subgradient.assign(x.size(), 0.0);
    e.subgradient[best_index] = 2.0 * x[best_index];
    return e;
  }

 private:
  int dimension_;
};

class QuadraticObjective : public Objective {
 public:
  QuadraticObjective(int dimension, double kappa) : coeffs_(dimension) {
    // spread the curvatures linearly over [kappa, 4 kappa]
    for (int i = 0; i < dimension; ++i) {
      const double f =
          dimension > 1 ? static_cast<double>(i) / static_cast<double>(dimension - 1) : 0.0;
      coeffs_[i] = kappa * (1.0 + 3.0 * f);
    }
  }

  int dimension() const override { return static_cast<int>(coeffs_.size()); }

  const DenseVector& coefficients() const { return coeffs_; }

  Evaluation evaluate(const DenseVector& x) const override {
    Evaluation e;
    e.subgradient.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      e.value += 0.5 * coeffs_[i] * x[i] * x[i];
      e.subgradient[i] = coeffs_[i] * x[i];
    }
    return e;
  }

 private:
  DenseVector coeffs_;
};

void require_dimension(int dimension) {
  if (dimension < 1) {
    throw std::invalid_argument("problem dimension must be at least 1");
  }
}

}  // namespace

ProblemSpec shor_problem() {
  ProblemSpec spec;
  spec.name = "shor";
  spec.objective = std::make_shared<ShorObjective>();
  spec.x0_default = {0, 0, 0, 0, 1};
  spec.f_star = kShorOptimalValue;
  spec.x_star = DenseVector(kShorOptimalPoint.begin(), kShorOptimalPoint.end());
  return spec;
}

ProblemSpec l1_problem(int dimension) {
  require_dimension(dimension);
  ProblemSpec spec;
  spec.name = "l1:" + std::to_string(dimension);
  spec.objective = std::make_shared<L1Objective>(dimension);
  spec.x0_default.assign(dimension, 1.0);
  spec.f_star = 0.0;
  spec.x_star = DenseVector(dimension, 0.0);
  return spec;
}

ProblemSpec maxq_problem(int dimension) {
  require_dimension(dimension);
  ProblemSpec spec;
  spec.name = "maxq:" + std::to_string(dimension);
  spec.objective = std::make_shared<MaxQObjective>(dimension);
  spec.x0_default.assign(dimension, 1.0);
  for (int i = 0; i < dimension; ++i) {
    spec.x0_default[i] = (i % 2 == 0) ? 1.0 : -1.0;
  }
  spec.f_star = 0.0;
  spec.x_star = DenseVector(dimension, 0.0);
  return spec;
}

ProblemSpec quadratic_problem(int dimension, double kappa) {
  require_dimension(dimension);
  if (!(kappa > 0.0)) {
    throw std::invalid_argument("kappa must be positive");
  }
  ProblemSpec spec;
  std::ostringstream name;
  name << "quad:" << dimension << ":" << kappa;
  spec.name = name.str();
  spec.objective = std::make_shared<QuadraticObjective>(dimension, kappa);
  spec.x0_default.assign(dimension, 1.0);
  spec.f_star = 0.0;
  spec.x_star = DenseVector(dimension, 0.0);
  return spec;
}

ProblemSpec make_problem(const std::string& name) {
  std::istringstream in(name);
  std::string head;
  std::getline(in, head, ':');

  auto read_int = [&](int fallback) {
    std::string part;
    if (!std::getline(in, part, ':')) return fallback;
    std::size_t used = 0;
    int v = std::stoi(part, &used);
    if (used != part.size()) {
      throw std::invalid_argument("malformed problem name '" + name + "'");
    }
    return v;
  };
  auto read_double = [&](double fallback) {
    std::string part;
    if (!std::getline(in, part, ':')) return fallback;
    std::size_t used = 0;
    double v = std::stod(part, &used);
    if (used != part.size()) {
      throw std::invalid_argument("malformed problem name '" + name + "'");
    }
    return v;
  };

  try {
    if (head == "shor") return shor_problem();
    if (head == "l1") return l1_problem(read_int(3));
    if (head == "maxq") return maxq_problem(read_int(3));
    if (head == "quad") {
      const int dim = read_int(4);
      return quadratic_problem(dim, read_double(1.0));
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed problem name '" + name + "'");
  }
  throw std::invalid_argument("unknown problem '" + name + "'");
}

std::vector<std::pair<std::string, std::string>> problem_catalog() {
  return {
      {"shor", "ten-piece quadratic max in R^5, f* = 22.600162"},
      {"l1[:dim]", "sum of absolute values, minimum 0 at the origin (default dim 3)"},
      {"maxq[:dim]", "largest squared coordinate, minimum 0 at the origin (default dim 3)"},
      {"quad[:dim[:kappa]]", "smooth strongly convex quadratic, curvatures in [kappa, 4 kappa]"},
  };
}

}  // namespace csg
