#include <cmath>

#include <doctest.h>

#include "chebosc/errors.hpp"
#include "chebosc/normalization.hpp"
#include "chebosc/numerics.hpp"
#include "chebosc/polynomials.hpp"

using chebosc::FamilySpec;

TEST_CASE("closed forms reproduce hand-computed spot values") {
  const chebosc::NormalizationFactor n1 = chebosc::n_closed_k1(2.0, 1.0);
  CHECK(std::abs(n1.value - 1.25) < 1e-14);
  const chebosc::NormalizationFactor n2 = chebosc::n_closed_k1(0.5, 1.0);
  CHECK(std::abs(n2.value - 5.0) < 1e-14);
  const chebosc::NormalizationFactor n3 = chebosc::n_closed_k1(1.0, 1.0);
  CHECK(std::abs(n3.value - 2.0) < 1e-14);
  CHECK(std::abs(n3.d1 - 2.0) < 1e-14);
  CHECK(std::abs(n3.d2 - 4.0) < 1e-14);
  const chebosc::NormTDerivatives t = chebosc::n_closed_general_t(2, 4.0, 0.5);
  CHECK(std::abs(t.value - 1.625) < 1e-14);
  CHECK(std::abs(t.d1t - 1.75) < 1e-14);
  CHECK(std::abs(t.d2t - 4.0) < 1e-14);
}

TEST_CASE("series and closed-form routes agree to high precision") {
  for (int k : {1, 2, 3, 5}) {
    for (double tau : {0.09, 0.5, 1.0, 2.0, 4.0, 25.0}) {
      const FamilySpec spec(k, std::sqrt(tau));
      for (int i = 1; i <= 9; ++i) {
        const double x = 2.0 * (0.01 + 0.98 * (i - 1) / 8.0);
        const chebosc::NormalizationFactor s = chebosc::n_series(spec, x);
        const chebosc::NormalizationFactor c =
            chebosc::n_closed_general(spec, x);
        CHECK(std::abs(s.value - c.value) <= 1e-10 * std::abs(c.value));
        CHECK(std::abs(s.d1 - c.d1) <= 1e-10 * std::max(1.0, std::abs(c.d1)));
        CHECK(std::abs(s.d2 - c.d2) <= 1e-10 * std::max(1.0, std::abs(c.d2)));
        if (k == 1) {
          const chebosc::NormalizationFactor c1 =
              chebosc::n_closed_k1(std::sqrt(tau), x);
          CHECK(std::abs(c1.value - c.value) <= 1e-12 * std::abs(c.value));
          CHECK(std::abs(c1.d1 - c.d1) <=
                1e-12 * std::max(1.0, std::abs(c.d1)));
          CHECK(std::abs(c1.d2 - c.d2) <=
                1e-12 * std::max(1.0, std::abs(c.d2)));
        }
      }
    }
  }
}

TEST_CASE("the factor splits into a finite geometric head plus a scaled tail") {
  // value = (1 + t + ... + t^{k-1}) + t^k / (tau (1 - t)) with t = x/2.
  for (int k : {1, 2, 3, 4}) {
    for (double tau : {0.25, 1.0, 3.0}) {
      for (double t : {0.05, 0.4, 0.9}) {
        const chebosc::NormTDerivatives n =
            chebosc::n_closed_general_t(k, tau, t);
        double head = 0.0;
        for (int j = 0; j < k; ++j) head += std::pow(t, j);
        const double expected = head + std::pow(t, k) / (tau * (1.0 - t));
        CHECK(std::abs(n.value - expected) <= 1e-12 * expected);
      }
    }
  }
}

TEST_CASE("analytic derivatives match finite differences") {
  for (int k : {1, 2, 4}) {
    for (double a : {0.6, 1.0, 1.8}) {
      const FamilySpec spec(k, a);
      const double x = 0.77;
      const chebosc::NormalizationFactor n = chebosc::n_closed_general(spec, x);
      const chebosc::CentralDerivatives fd = chebosc::central_diff(
          [&](double y) { return chebosc::n_closed_general(spec, y).value; },
          x, 1e-5);
      CHECK(std::abs(fd.d1 - n.d1) <= 1e-6 * std::max(1.0, std::abs(n.d1)));
      CHECK(std::abs(fd.d2 - n.d2) <= 1e-5 * std::max(1.0, std::abs(n.d2)));
    }
  }
}

TEST_CASE("the factor increases with intensity") {
  for (int k : {1, 2, 3}) {
    for (double tau : {0.2, 1.0, 5.0}) {
      for (int i = 1; i < 20; ++i) {
        const double t = i / 20.0;
        CHECK(chebosc::n_closed_general_t(k, tau, t).d1t > 0.0);
      }
    }
  }
}

TEST_CASE("intensities outside the disk are rejected") {
  const FamilySpec spec(2, 1.0);
  CHECK_THROWS_AS(chebosc::n_series(spec, 2.0), chebosc::domain_error);
  CHECK_THROWS_AS(chebosc::n_closed_general(spec, -0.5), chebosc::domain_error);
  CHECK_THROWS_AS(chebosc::n_closed_k1(1.0, 2.0), chebosc::domain_error);
  CHECK_THROWS_AS(chebosc::n_closed_general_t(2, 1.0, 1.0),
                  chebosc::domain_error);
  CHECK_THROWS_AS(chebosc::n_closed_general_t(0, 1.0, 0.5),
                  chebosc::domain_error);
  CHECK_THROWS_AS(chebosc::n_closed_general_t(2, 0.0, 0.5),
                  chebosc::domain_error);
}
