#include "chebosc/normalization.hpp"

#include <cmath>
#include <string>

#include "chebosc/errors.hpp"
#include "chebosc/numerics.hpp"

namespace chebosc {

namespace {

void check_intensity(double x, const char* where) {
  if (!(x >= 0.0) || !(x < 2.0))
    throw domain_error(std::string(where) + ": intensity must lie in [0, 2)");
}

}  // namespace

NormalizationFactor n_series(const FamilySpec& spec, double x, double tol) {
  check_intensity(x, "n_series");
  const auto min_terms = static_cast<std::size_t>(spec.k()) + 2;
  const double rb = x / 2.0;

  // N = sum x^j / f(j); ratio x / (2 b_j^2).
  double tv = 1.0;
  long jv = 0;
  auto value_term = [&spec, x, tv, jv](std::size_t) mutable {
    const double v = tv;
    tv *= x / (2.0 * spec.b(jv) * spec.b(jv));
    ++jv;
    return v;
  };

  // N' = sum (i+1) x^i / f(i+1); ratio ((i+2)/(i+1)) x / (2 b_{i+1}^2).
  double td = 1.0 / (2.0 * spec.b(0) * spec.b(0));
  long jd = 0;
  auto d1_term = [&spec, x, td, jd](std::size_t) mutable {
    const double v = td;
    td *= (static_cast<double>(jd) + 2.0) / (static_cast<double>(jd) + 1.0) *
          x / (2.0 * spec.b(jd + 1) * spec.b(jd + 1));
    ++jd;
    return v;
  };

  // N'' = sum (i+2)(i+1) x^i / f(i+2); ratio ((i+3)/(i+1)) x / (2 b_{i+2}^2).
  double tw =
      2.0 / (2.0 * spec.b(0) * spec.b(0) * 2.0 * spec.b(1) * spec.b(1));
  long jw = 0;
  auto d2_term = [&spec, x, tw, jw](std::size_t) mutable {
    const double v = tw;
    tw *= (static_cast<double>(jw) + 3.0) / (static_cast<double>(jw) + 1.0) *
          x / (2.0 * spec.b(jw + 2) * spec.b(jw + 2));
    ++jw;
    return v;
  };

  const SeriesSum sv = sum_tail_bounded(value_term, rb, tol, min_terms);
  const SeriesSum sd = sum_tail_bounded(d1_term, rb, tol, min_terms);
  const SeriesSum sw = sum_tail_bounded(d2_term, rb, tol, min_terms);
  return {sv.sum, sd.sum, sw.sum, NormRoute::series};
}

NormalizationFactor n_closed_k1(double a, double x) {
  if (!(a > 0.0)) throw domain_error("n_closed_k1: requires a > 0");
  check_intensity(x, "n_closed_k1");
  const double inv_a2 = 1.0 / (a * a);
  const double g = 2.0 - x;
  return {inv_a2 * (a * a - 1.0 + 2.0 / g), 2.0 * inv_a2 / (g * g),
          4.0 * inv_a2 / (g * g * g), NormRoute::closed_k1};
}

NormTDerivatives n_closed_general_t(int k, double tau, double t) {
  if (k < 1) throw domain_error("n_closed_general_t: k must be positive");
  if (!(tau > 0.0)) throw domain_error("n_closed_general_t: tau must be positive");
  if (!(t >= 0.0) || !(t < 1.0))
    throw domain_error("n_closed_general_t: t must lie in [0, 1)");
  const double om = 1.0 - tau;
  const double u = 1.0 - t;
  const double tk = std::pow(t, k);
  const double tkm1 = std::pow(t, k - 1);
  const double kd = static_cast<double>(k);

  const double value = (tau + om * tk) / (tau * u);
  const double d1t =
      (tau + om * (kd * tkm1 + (1.0 - kd) * tk)) / (tau * u * u);

  // [k(k-1) - 2k(k-2) t + (k-1)(k-2) t^2] t^{k-2}; equals 2 when k = 1.
  double poly_part;
  if (k == 1) {
    poly_part = 2.0;
  } else {
    const double bracket = kd * (kd - 1.0) - 2.0 * kd * (kd - 2.0) * t +
                           (kd - 1.0) * (kd - 2.0) * t * t;
    poly_part = bracket * std::pow(t, k - 2);
  }
  const double d2t = (2.0 * tau + om * poly_part) / (tau * u * u * u);
  return {value, d1t, d2t};
}

NormalizationFactor n_closed_general(const FamilySpec& spec, double x) {
  check_intensity(x, "n_closed_general");
  const NormTDerivatives d =
      n_closed_general_t(spec.k(), spec.a() * spec.a(), x / 2.0);
  return {d.value, d.d1t / 2.0, d.d2t / 4.0, NormRoute::closed_general};
}

}  // namespace chebosc
