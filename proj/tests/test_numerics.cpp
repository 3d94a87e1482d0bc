#include <cmath>

#include <doctest.h>

#include "chebosc/errors.hpp"
#include "chebosc/numerics.hpp"

namespace nm = chebosc;

TEST_CASE("tail-bounded summation reproduces a geometric series") {
  const nm::SeriesSum s = nm::sum_tail_bounded(
      [](std::size_t n) { return std::pow(0.5, static_cast<double>(n)); }, 0.5,
      1e-14);
  CHECK(std::abs(s.sum - 2.0) < 1e-12);
  CHECK(s.tail_bound < 1e-12);
  CHECK(s.terms > 10);
}

TEST_CASE("tail-bounded summation rejects bad arguments and stalls") {
  auto unit = [](std::size_t) { return 1.0; };
  CHECK_THROWS_AS(nm::sum_tail_bounded(unit, 1.0, 1e-12),
                  nm::domain_error);
  CHECK_THROWS_AS(nm::sum_tail_bounded(unit, -0.1, 1e-12),
                  nm::domain_error);
  CHECK_THROWS_AS(nm::sum_tail_bounded(unit, 0.5, 0.0), nm::domain_error);
  auto slow = [](std::size_t n) {
    return std::pow(0.99999, static_cast<double>(n));
  };
  CHECK_THROWS_AS(nm::sum_tail_bounded(slow, 0.99999, 1e-30, 2, 1000),
                  nm::convergence_error);
}

TEST_CASE("bisection finds the cosine root") {
  const nm::BracketedRoot r =
      nm::bisect([](double x) { return std::cos(x); }, 0.0, 3.0, 1e-12);
  CHECK(std::abs(r.root - std::acos(-1.0) / 2.0) < 1e-10);
}

TEST_CASE("bisection handles an exact midpoint zero and bad brackets") {
  const nm::BracketedRoot r =
      nm::bisect([](double x) { return x - 0.5; }, 0.0, 1.0, 1e-12);
  CHECK(r.root == 0.5);
  CHECK_THROWS_AS(
      nm::bisect([](double x) { return std::cos(x); }, 0.0, 1.0, 1e-12),
      nm::domain_error);
  CHECK_THROWS_AS(
      nm::bisect([](double x) { return x; }, 1.0, 0.0, 1e-12),
      nm::domain_error);
}

TEST_CASE("golden-section search locates a parabola minimum") {
  const nm::GoldenMinimum m = nm::golden_min(
      [](double x) { return (x - 1.234) * (x - 1.234) + 0.5; }, 0.0, 2.0,
      1e-9);
  CHECK(std::abs(m.x - 1.234) < 1e-7);
  CHECK(std::abs(m.value - 0.5) < 1e-12);
}

TEST_CASE("central differences recover exponential derivatives") {
  const nm::CentralDerivatives d =
      nm::central_diff([](double x) { return std::exp(x); }, 0.3, 1e-5);
  const double e = std::exp(0.3);
  CHECK(std::abs(d.d1 - e) / e < 1e-9);
  CHECK(std::abs(d.d2 - e) / e < 1e-5);
}

TEST_CASE("adaptive quadrature integrates smooth and peaked functions") {
  const double pi = std::acos(-1.0);
  const double s =
      nm::adaptive_gauss([](double x) { return std::sin(x); }, 0.0, pi, 1e-12);
  CHECK(std::abs(s - 2.0) < 1e-11);
  const double runge = nm::adaptive_gauss(
      [](double x) { return 1.0 / (1.0 + 25.0 * x * x); }, -1.0, 1.0, 1e-11);
  CHECK(std::abs(runge - 0.4 * std::atan(5.0)) < 1e-9);
}
