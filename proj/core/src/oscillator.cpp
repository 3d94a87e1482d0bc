#include "chebosc/oscillator.hpp"

#include <algorithm>
#include <cmath>

#include "chebosc/errors.hpp"
#include "chebosc/numerics.hpp"

namespace chebosc {

double factorial_by_index(const FamilySpec& spec, int n) {
  if (n < 0) throw domain_error("factorial_by_index: index must be non-negative");
  double f = 1.0;
  for (int j = 0; j < n; ++j) f *= 2.0 * spec.b(j) * spec.b(j);
  return f;
}

std::vector<double> apply_raising(const FamilySpec& spec,
                                  std::span<const double> v) {
  std::vector<double> out(v.size() + 1, 0.0);
  const double s = std::sqrt(2.0);
  for (std::size_t n = 0; n < v.size(); ++n)
    out[n + 1] = s * spec.b(static_cast<long>(n)) * v[n];
  return out;
}

std::vector<double> apply_lowering(const FamilySpec& spec,
                                   std::span<const double> v) {
  if (v.empty()) return {};
  std::vector<double> out(v.size() - 1, 0.0);
  const double s = std::sqrt(2.0);
  for (std::size_t m = 0; m + 1 < v.size(); ++m)
    out[m] = s * spec.b(static_cast<long>(m)) * v[m + 1];
  return out;
}

double b_operator_diagonal(const FamilySpec& spec, long n, bool shifted) {
  const double b = shifted ? spec.b(n) : spec.b(n - 1);
  return b * b;
}

namespace {

// One tail-bounded pass over weight(n) * x^n / f(n) via the term ratio
// x / (2 b_n^2); min_terms keeps the sum alive past the perturbed entry.
template <class Weight>
SeriesSum weighted_intensity_series(const FamilySpec& spec, double x,
                                    double tol, Weight weight) {
  double running = 1.0;  // x^n / f(n) at the current index
  long idx = 0;
  auto term = [&spec, x, weight, running, idx](std::size_t) mutable {
    const double value = weight(idx) * running;
    running *= x / (2.0 * spec.b(idx) * spec.b(idx));
    ++idx;
    return value;
  };
  const auto min_terms = static_cast<std::size_t>(spec.k()) + 2;
  return sum_tail_bounded(term, x / 2.0, tol, min_terms);
}

}  // namespace

PhotonMoments coherent_moments(const FamilySpec& spec, double x, double tol) {
  if (!(x >= 0.0) || !(x < 2.0))
    throw domain_error("coherent_moments: intensity must lie in [0, 2)");
  const SeriesSum s0 =
      weighted_intensity_series(spec, x, tol, [](long) { return 1.0; });
  const SeriesSum s1 = weighted_intensity_series(
      spec, x, tol, [](long n) { return static_cast<double>(n); });
  const SeriesSum s2 = weighted_intensity_series(spec, x, tol, [](long n) {
    return static_cast<double>(n) * static_cast<double>(n);
  });

  PhotonMoments m{};
  m.mean = s1.sum / s0.sum;
  m.second_moment = s2.sum / s0.sum;
  m.variance = m.second_moment - m.mean * m.mean;
  m.terms = std::max({s0.terms, s1.terms, s2.terms});
  m.tail_bound = std::max({s0.tail_bound, s1.tail_bound, s2.tail_bound});
  return m;
}

double mandel_from_moments(const PhotonMoments& m) {
  if (!(m.mean > 0.0))
    throw domain_error("mandel_from_moments: mean occupation is zero");
  return m.variance / m.mean - 1.0;
}

CoherentStateAmplitudes coherent_amplitudes(const FamilySpec& spec, double x,
                                            double tol) {
  if (!(x >= 0.0) || !(x < 2.0))
    throw domain_error("coherent_amplitudes: intensity must lie in [0, 2)");
  std::vector<double> weights;
  double running = 1.0;
  long idx = 0;
  auto term = [&](std::size_t) {
    const double value = running;
    weights.push_back(value);
    running *= x / (2.0 * spec.b(idx) * spec.b(idx));
    ++idx;
    return value;
  };
  const auto min_terms = static_cast<std::size_t>(spec.k()) + 2;
  const SeriesSum s = sum_tail_bounded(term, x / 2.0, tol, min_terms);
  for (double& w : weights) w /= s.sum;
  return {x, std::move(weights), s.tail_bound / s.sum};
}

}  // namespace chebosc
