#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "csg/problems.hpp"
#include "test_support.hpp"

using namespace csg;

namespace {

// FNV-1a over a canonical decimal rendering pins the embedded ten-piece data;
// any edit to the constants shows up as a checksum change here.
std::uint64_t data_fingerprint(const Objective& objective, const DenseVector& probe) {
  const Evaluation e = objective.evaluate(probe);
  char buf[64];
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](double v) {
    const int n = std::snprintf(buf, sizeof(buf), "%.17g", v);
    for (int i = 0; i < n; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ull;
    }
  };
  mix(e.value);
  for (double v : e.subgradient) mix(v);
  return h;
}

}  // namespace

TEST_CASE("shor problem basics") {
  const ProblemSpec shor = shor_problem();
  CHECK(shor.dimension() == 5);
  CHECK(shor.x0_default == DenseVector{0, 0, 0, 0, 1});

  const Evaluation at_start = shor.objective->evaluate(shor.x0_default);
  CHECK(at_start.value == 80.0);
  CHECK(at_start.value > *shor.f_star);
  CHECK(at_start.subgradient == DenseVector{-20, -40, -20, -20, -20});

  // embedded optimum is consistent: oracle value at x* equals f* within 1e-6
  const Evaluation at_opt = shor.objective->evaluate(*shor.x_star);
  CHECK(std::abs(at_opt.value - *shor.f_star) < 1e-6);
  // and the stated coarse value from the source is matched to 1e-3
  CHECK(std::abs(*shor.f_star - 22.60016) < 1e-3);
}

TEST_CASE("shor values are non-negative and jointly convex with their subgradients") {
  const ProblemSpec shor = shor_problem();
  test::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const DenseVector x = rng.vector(5, -2.0, 4.0);
    const Evaluation e = shor.objective->evaluate(x);
    CHECK(e.value >= 0.0);
    const DenseVector y = rng.vector(5, -2.0, 4.0);
    const Evaluation ey = shor.objective->evaluate(y);
    double inner = 0.0;
    for (int j = 0; j < 5; ++j) inner += e.subgradient[j] * (y[j] - x[j]);
    CHECK(ey.value - e.value >= inner - 1e-10);
  }
}

TEST_CASE("shor embedded data checksum") {
  const ProblemSpec shor = shor_problem();
  const std::uint64_t h =
      data_fingerprint(*shor.objective, DenseVector{0.3, -0.7, 1.1, 0.25, 2.5}) ^
      data_fingerprint(*shor.objective, DenseVector{2.2, 3.1, -0.4, 1.6, 0.9});
  CHECK(h == 0xfac051b6ab52a835ull);
}

TEST_CASE("shor tie break is deterministic") {
  const ProblemSpec shor = shor_problem();
  const Evaluation a = shor.objective->evaluate({0.5, 0.5, 0.5, 0.5, 0.5});
  const Evaluation b = shor.objective->evaluate({0.5, 0.5, 0.5, 0.5, 0.5});
  CHECK(a.value == b.value);
  CHECK(a.subgradient == b.subgradient);
}

TEST_CASE("l1 problem") {
  const ProblemSpec l1 = l1_problem(2);
  const Evaluation e = l1.objective->evaluate({1, -2});
  CHECK(e.value == 3.0);
  CHECK(e.subgradient == DenseVector{1, -1});

  const Evaluation origin = l1.objective->evaluate({0, 0});
  CHECK(origin.value == 0.0);
  CHECK(origin.subgradient == DenseVector{0, 0});
}

TEST_CASE("maxq problem picks the smallest maximizing index") {
  const ProblemSpec maxq = maxq_problem(2);
  const Evaluation e = maxq.objective->evaluate({1, 2});
  CHECK(e.value == 4.0);
  CHECK(e.subgradient == DenseVector{0, 4});

  CHECK(maxq.objective->evaluate({0, 0}).value == 0.0);

  // exact tie between coordinates 0 and 2
  const ProblemSpec maxq3 = maxq_problem(3);
  const Evaluation tie = maxq3.objective->evaluate({1, -0.5, -1});
  CHECK(tie.value == 1.0);
  CHECK(tie.subgradient == DenseVector{2, 0, 0});
}

TEST_CASE("quadratic problem curvatures and gradient") {
  const ProblemSpec quad = quadratic_problem(2, 1.0);
  const Evaluation e = quad.objective->evaluate({1, 1});
  CHECK(e.value == doctest::Approx(2.5));  // c = (1, 4)
  CHECK(e.subgradient[0] == doctest::Approx(1.0));
  CHECK(e.subgradient[1] == doctest::Approx(4.0));
  CHECK(quad.objective->evaluate({0, 0}).value == 0.0);
}

TEST_CASE("quadratic gradient matches central finite differences") {
  const ProblemSpec quad = quadratic_problem(5, 2.0);
  test::Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const DenseVector x = rng.vector(5, -3.0, 3.0);
    const Evaluation e = quad.objective->evaluate(x);
    const double h = 1e-6;
    for (int j = 0; j < 5; ++j) {
      DenseVector xp = x, xm = x;
      xp[j] += h;
      xm[j] -= h;
      const double fd = (quad.objective->evaluate(xp).value -
                         quad.objective->evaluate(xm).value) /
                        (2.0 * h);
      CHECK(std::abs(e.subgradient[j] - fd) <= 1e-6 * (1.0 + std::abs(fd)));
    }
  }
}

TEST_CASE("sampled subgradient inequality across the catalog") {
  test::Rng rng(13);
  for (const char* name : {"shor", "l1:4", "maxq:4", "quad:4:1.5"}) {
    const ProblemSpec problem = make_problem(name);
    const int dim = problem.dimension();
    for (int trial = 0; trial < 250; ++trial) {
      const DenseVector x = rng.vector(dim, -4.0, 4.0);
      const DenseVector y = rng.vector(dim, -4.0, 4.0);
      const Evaluation ex = problem.objective->evaluate(x);
      const Evaluation ey = problem.objective->evaluate(y);
      double inner = 0.0;
      for (int j = 0; j < dim; ++j) inner += ex.subgradient[j] * (y[j] - x[j]);
      CHECK(ey.value - ex.value >= inner - 1e-10);
    }
  }
}

TEST_CASE("catalog optima are consistent") {
  for (const char* name : {"shor", "l1:3", "maxq:6", "quad:2:4"}) {
    const ProblemSpec problem = make_problem(name);
    REQUIRE(problem.f_star.has_value());
    REQUIRE(problem.x_star.has_value());
    const double at_opt = problem.objective->evaluate(*problem.x_star).value;
    CHECK(std::abs(at_opt - *problem.f_star) < 1e-6);
  }
}

TEST_CASE("problem name parsing") {
  CHECK(make_problem("l1:7").dimension() == 7);
  CHECK(make_problem("l1").dimension() == 3);
  CHECK(make_problem("maxq:2").dimension() == 2);
  CHECK(make_problem("quad").dimension() == 4);
  CHECK(make_problem("quad:3:2.5").dimension() == 3);
  CHECK_THROWS_AS(make_problem("rosenbrock"), std::invalid_argument);
  CHECK_THROWS_AS(make_problem("l1:x"), std::invalid_argument);
  CHECK_THROWS_AS(make_problem("l1:0"), std::invalid_argument);
  CHECK_THROWS_AS(make_problem("quad:2:-1"), std::invalid_argument);
}

TEST_CASE("oracle counting and validation") {
  const ProblemSpec l1 = l1_problem(2);
  SubgradientOracle oracle(*l1.objective);
  CHECK(oracle.eval_count() == 0);
  oracle({1, 1});
  CHECK(oracle.eval_count() == 1);
  oracle({1, 1});
  CHECK(oracle.eval_count() == 2);

  CHECK_THROWS_AS(oracle({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(oracle({1, std::numeric_limits<double>::quiet_NaN()}),
                  std::invalid_argument);
  // failed queries must not count
  CHECK(oracle.eval_count() == 2);
}
