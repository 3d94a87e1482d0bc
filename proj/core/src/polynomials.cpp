#include "chebosc/polynomials.hpp"

#include <cmath>
#include <cstddef>

namespace chebosc {

FamilySpec::FamilySpec(int k, double a) : k_(k), a_(a) {
  if (k < 1) throw domain_error("FamilySpec: k must be a positive integer");
  if (!(a > 0.0) || !std::isfinite(a))
    throw domain_error("FamilySpec: a must be a finite positive number");
}

double CoefficientList::eval(double x) const noexcept {
  double acc = 0.0;
  for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * x + coeffs[j];
  return acc;
}

double eval_poly(const FamilySpec& spec, int n, double x) {
  if (n < 0) throw domain_error("eval_poly: degree must be non-negative");
  double prev = 0.0;  // P_{-1}
  double cur = 1.0;   // P_0
  for (int m = 0; m < n; ++m) {
    const double next = (x * cur - spec.b(m - 1) * prev) / spec.b(m);
    prev = cur;
    cur = next;
  }
  return cur;
}

CoefficientList coeff_list_recurrence(const FamilySpec& spec, int n) {
  if (n < 0)
    throw domain_error("coeff_list_recurrence: degree must be non-negative");
  std::vector<double> prev;         // P_{-1} = 0
  std::vector<double> cur = {1.0};  // P_0 = 1
  for (int m = 0; m < n; ++m) {
    std::vector<double> next(static_cast<std::size_t>(m) + 2, 0.0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += cur[j];
    const double bl = spec.b(m - 1);
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= bl * prev[j];
    const double bn = spec.b(m);
    for (double& c : next) c /= bn;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return CoefficientList{n, std::move(cur)};
}

namespace {

// Bracket value [s] = b_{s-1}^2 / b_0^2; [0] = 0 because b_{-1} = 0.
double bracket(const FamilySpec& spec, int s) {
  const double b0 = spec.b(0);
  const double bs = spec.b(s - 1);
  return (bs * bs) / (b0 * b0);
}

// Nested bracket sum with m summation levels and outermost index bounded by
// hi: sum over k_1 = 2m-1..hi of [k_1] times the same object with one level
// fewer and outer bound k_1 - 2.  Zero levels give the empty product 1.
double nested_bracket_sum(const FamilySpec& spec, int m, int hi) {
  if (m == 0) return 1.0;
  double sum = 0.0;
  for (int k1 = 2 * m - 1; k1 <= hi; ++k1)
    sum += bracket(spec, k1) * nested_bracket_sum(spec, m - 1, k1 - 2);
  return sum;
}

}  // namespace

CoefficientList coeff_list_explicit(const FamilySpec& spec, int n) {
  if (n < 0)
    throw domain_error("coeff_list_explicit: degree must be non-negative");
  double bracket_factorial = 1.0;  // [n]! = product of [j], j = 1..n
  for (int j = 1; j <= n; ++j) bracket_factorial *= bracket(spec, j);
  const double norm = 1.0 / std::sqrt(bracket_factorial);
  const double b0 = spec.b(0);

  std::vector<double> coeffs(static_cast<std::size_t>(n) + 1, 0.0);
  double sign = 1.0;
  for (int m = 0; 2 * m <= n; ++m) {
    const double beta = nested_bracket_sum(spec, m, n - 1);
    coeffs[static_cast<std::size_t>(n - 2 * m)] =
        sign * norm * std::pow(b0, 2 * m - n) * beta;
    sign = -sign;
  }
  return CoefficientList{n, std::move(coeffs)};
}

std::vector<double> TridiagonalMatrix::apply(std::span<const double> v) const {
  if (v.size() != size)
    throw domain_error("TridiagonalMatrix::apply: size mismatch");
  std::vector<double> out(size, 0.0);
  for (std::size_t i = 0; i < size; ++i) {
    if (i > 0) out[i] += off[i - 1] * v[i - 1];
    if (i + 1 < size) out[i] += off[i] * v[i + 1];
  }
  return out;
}

TridiagonalMatrix jacobi_matrix(const FamilySpec& spec, std::size_t size) {
  TridiagonalMatrix m;
  m.size = size;
  if (size > 0) m.off.resize(size - 1);
  for (std::size_t i = 0; i + 1 < size; ++i)
    m.off[i] = spec.b(static_cast<long>(i));
  return m;
}

double measure_density(double a, double x) {
  if (!(a > 0.0)) throw domain_error("measure_density: requires a > 0");
  if (!(std::abs(x) < 2.0)) return 0.0;
  const double a2 = a * a;
  const double denom = a2 * a2 - (a2 - 1.0) * x * x;
  if (!(denom > 0.0))
    throw domain_error("measure_density: denominator vanished inside (-2, 2)");
  return a2 * std::sqrt(4.0 - x * x) / (2.0 * std::numbers::pi * denom);
}

std::vector<PointMass> measure_atoms(double a) {
  if (!(a > 0.0)) throw domain_error("measure_atoms: requires a > 0");
  const double a2 = a * a;
  if (a2 <= 2.0) return {};
  const double x0 = a2 / std::sqrt(a2 - 1.0);
  const double mass = (a2 - 2.0) / (2.0 * (a2 - 1.0));
  return {PointMass{-x0, mass}, PointMass{x0, mass}};
}

}  // namespace chebosc
