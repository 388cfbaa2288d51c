#include <doctest.h>

#include <cmath>

#include "csg/direction.hpp"
#include "csg/problems.hpp"
#include "test_support.hpp"

using namespace csg;

TEST_CASE("nr_conv2 symmetric segment: midpoint is nearest to the origin") {
  const auto [r, t] = nr_conv2({1, 0}, {0, 1});
  CHECK(t == 0.5);
  CHECK(r[0] == doctest::Approx(0.5));
  CHECK(r[1] == doctest::Approx(0.5));
}

TEST_CASE("nr_conv2 segment through the origin") {
  const auto [r, t] = nr_conv2({2, 0}, {-1, 0});
  CHECK(t == doctest::Approx(2.0 / 3.0));
  CHECK(norm(r) <= 1e-12);
}

TEST_CASE("nr_conv2 keeps the nearer endpoint when the minimum is at t = 0") {
  const auto [r, t] = nr_conv2({1, 1}, {2, 2});
  CHECK(t == 0.0);
  CHECK(r == DenseVector{1, 1});
}

TEST_CASE("nr_conv2 degenerate segment p == g") {
  const auto [r, t] = nr_conv2({3, -4}, {3, -4});
  CHECK(t == 0.0);
  CHECK(r == DenseVector{3, -4});
}

TEST_CASE("nr_conv2 dimension mismatch") {
  CHECK_THROWS_AS(nr_conv2({1, 2}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("nr_conv2 agrees with a dense grid search in R^5") {
  test::Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const DenseVector p = rng.vector(5, -10.0, 10.0);
    const DenseVector g = rng.vector(5, -10.0, 10.0);
    const auto [r, t] = nr_conv2(p, g);
    const double grid_min = test::grid_min_segment_norm(p, g, 10000);
    CHECK(norm(r) <= grid_min + 1e-12);
    // the grid point nearest the true minimizer is at most half a cell away
    CHECK(grid_min <= norm(r) + distance(p, g) * 1e-4);
  }
}

TEST_CASE("nr_conv2 properties: norm dominance, segment membership, optimality") {
  test::Rng rng(37);
  for (int trial = 0; trial < 2000; ++trial) {
    const int dim = 1 + static_cast<int>(rng.index(10));
    DenseVector p = rng.vector(dim, -10.0, 10.0);
    DenseVector g = rng.vector(dim, -10.0, 10.0);
    if (trial % 7 == 0) g = p;  // exercise the degenerate branch
    const auto [r, t] = nr_conv2(p, g);

    CHECK(t >= 0.0);
    CHECK(t <= 1.0);
    CHECK(norm(r) <= std::min(norm(p), norm(g)) + 1e-10);
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(std::abs(r[i] - (p[i] + t * (g[i] - p[i]))) <= 1e-10);
    }
    // variational inequality <r, z - r> >= 0 for z on the segment; affine in
    // z, so the endpoints decide it
    DenseVector pr = p;
    DenseVector gr = g;
    add_scaled_in_place(pr, -1.0, r);
    add_scaled_in_place(gr, -1.0, r);
    CHECK(dot(r, pr) >= -1e-10);
    CHECK(dot(r, gr) >= -1e-10);
  }
}

TEST_CASE("nr_conv2 is idempotent at the segment's nearest point") {
  test::Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const DenseVector p = rng.vector(4, -3.0, 3.0);
    const DenseVector g = rng.vector(4, -3.0, 3.0);
    const DenseVector r = nr_conv2(p, g).point;
    const DenseVector back_p = nr_conv2(r, p).point;
    const DenseVector back_g = nr_conv2(r, g).point;
    for (std::size_t i = 0; i < r.size(); ++i) {
      CHECK(std::abs(back_p[i] - r[i]) <= 1e-12);
      CHECK(std::abs(back_g[i] - r[i]) <= 1e-12);
    }
  }
}

TEST_CASE("norm decay: alternating subgradients collapse the direction") {
  std::vector<DenseVector> seq;
  for (int i = 0; i < 40; ++i) {
    seq.push_back(i % 2 == 0 ? DenseVector{1, 0} : DenseVector{-1, 0});
  }
  CHECK(direction_norm_decay_check(seq, 0.5) == NormDecayOutcome::bound_holds);
}

TEST_CASE("norm decay: constant sequence violates the hypothesis at i = 0") {
  const std::vector<DenseVector> seq(10, DenseVector{1, 0});
  CHECK(direction_norm_decay_check(seq, 0.5) == NormDecayOutcome::hypothesis_violated);
}

TEST_CASE("norm decay: random hypothesis-satisfying sequences keep the bound") {
  test::Rng rng(53);
  for (int seq_id = 0; seq_id < 200; ++seq_id) {
    const double theta = rng.uniform(0.05, 0.95);
    std::vector<DenseVector> seq;
    seq.push_back(rng.vector(5, -1.0, 1.0));
    DenseVector p = seq.front();
    for (int i = 0; i < 60; ++i) {
      DenseVector g = rng.vector(5, -1.0, 1.0);
      const double pp = dot(p, p);
      if (pp > 0.0 && dot(g, p) > theta * pp) {
        // remove enough of the p component to satisfy the angle condition
        add_scaled_in_place(g, -(dot(g, p) - 0.5 * theta * pp) / pp, p);
      }
      seq.push_back(g);
      p = nr_conv2(p, g).point;
    }
    CHECK(direction_norm_decay_check(seq, theta) == NormDecayOutcome::bound_holds);
  }
}

TEST_CASE("norm decay check input validation") {
  CHECK_THROWS_AS(direction_norm_decay_check({}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(direction_norm_decay_check({{1, 0}}, 1.0), std::invalid_argument);
}

TEST_CASE("deviation bound: single atom at the center is the subgradient inequality") {
  const ProblemSpec l1 = l1_problem(3);
  const DenseVector center{1.0, -0.5, 2.0};
  ConvexCertificate cert;
  cert.reset(l1.objective->evaluate(center).subgradient, center);

  test::Rng rng(61);
  std::vector<DenseVector> probes;
  for (int i = 0; i < 100; ++i) probes.push_back(rng.vector(3, -5.0, 5.0));
  CHECK(deviation_bound_check(cert, center, 0.0, probes, *l1.objective));
}

TEST_CASE("deviation bound: two atoms inside a small ball") {
  const ProblemSpec l1 = l1_problem(3);
  const DenseVector center{0.4, -1.0, 0.2};
  const DenseVector y1{0.45, -1.05, 0.22};
  const DenseVector y2{0.35, -0.95, 0.15};
  ConvexCertificate cert;
  cert.reset(l1.objective->evaluate(y1).subgradient, y1);
  cert.mix(0.3, l1.objective->evaluate(y2).subgradient, y2);

  test::Rng rng(67);
  std::vector<DenseVector> probes;
  for (int i = 0; i < 100; ++i) probes.push_back(rng.vector(3, -4.0, 4.0));
  CHECK(deviation_bound_check(cert, center, 0.1, probes, *l1.objective));
}

TEST_CASE("deviation bound check rejects invalid certificates") {
  const ProblemSpec l1 = l1_problem(2);
  const DenseVector center{0.0, 0.0};
  ConvexCertificate cert;
  cert.reset(l1.objective->evaluate({5.0, 5.0}).subgradient, {5.0, 5.0});
  CHECK_THROWS_AS(deviation_bound_check(cert, center, 0.1, {{1.0, 1.0}}, *l1.objective),
                  std::invalid_argument);

  ConvexCertificate empty;
  CHECK_THROWS_AS(deviation_bound_check(empty, center, 0.1, {}, *l1.objective),
                  std::invalid_argument);
}

TEST_CASE("deviation bound check detects a forged subgradient") {
  const ProblemSpec l1 = l1_problem(2);
  const DenseVector center{1.0, 1.0};
  ConvexCertificate cert;
  cert.reset({10.0, 10.0}, center);  // far too steep for the l1 objective
  const std::vector<DenseVector> probes{{3.0, 3.0}};
  CHECK_FALSE(deviation_bound_check(cert, center, 0.0, probes, *l1.objective));
}

TEST_CASE("certificate mixing reconstructs the tracked direction") {
  test::Rng rng(71);
  DenseVector p = rng.vector(4, -2.0, 2.0);
  ConvexCertificate cert;
  cert.reset(p, DenseVector(4, 0.0));
  for (int i = 0; i < 50; ++i) {
    const DenseVector g = rng.vector(4, -2.0, 2.0);
    const auto [next, t] = nr_conv2(p, g);
    cert.mix(t, g, DenseVector(4, 0.0));
    p = next;
    CHECK(std::abs(cert.weight_sum() - 1.0) <= 1e-12);
    const DenseVector rebuilt = cert.combination();
    for (std::size_t j = 0; j < p.size(); ++j) {
      CHECK(std::abs(rebuilt[j] - p[j]) <= 1e-10);
    }
  }
}
