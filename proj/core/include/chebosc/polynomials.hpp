#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "chebosc/errors.hpp"
#include "chebosc/numerics.hpp"

/**
 * @file polynomials.hpp
 * Orthonormal polynomial family generated by a half-line Jacobi matrix whose
 * off-diagonal entries are all 1 except for a single entry a at position k-1.
 *
 * The family satisfies the three-term recurrence
 *
 *   b_n P_{n+1}(x) = x P_n(x) - b_{n-1} P_{n-1}(x),   P_0 = 1, P_{-1} = 0,
 *
 * with b_{-1} = 0, b_{k-1} = a and b_n = 1 otherwise.  At a = 1 the family
 * degenerates to the Chebyshev polynomials of the second kind on [-2, 2].
 */

namespace chebosc {

/// Parameters of one polynomial family: perturbation position k >= 1 and
/// perturbed coefficient a > 0.
class FamilySpec {
 public:
  FamilySpec(int k, double a);

  int k() const noexcept { return k_; }
  double a() const noexcept { return a_; }

  /// Recurrence coefficient b_n: b_{-1} = 0, b_{k-1} = a, otherwise 1.
  double b(long n) const noexcept {
    if (n < 0) return 0.0;
    return (n == k_ - 1) ? a_ : 1.0;
  }

 private:
  int k_;
  double a_;
};

/// Callable view of the recurrence coefficients of a family.
struct CoefficientSequence {
  FamilySpec spec;
  double operator()(long n) const noexcept { return spec.b(n); }
};

/// Dense monomial coefficients of one polynomial; coeffs[j] multiplies x^j.
/// Entries of parity opposite to the degree are exactly zero.
struct CoefficientList {
  int degree = 0;
  std::vector<double> coeffs;  ///< size degree + 1

  /// Horner evaluation; independent of the recurrence evaluation route.
  double eval(double x) const noexcept;
};

/// P_n(x) by forward recurrence.
double eval_poly(const FamilySpec& spec, int n, double x);

/// Monomial coefficients of P_n obtained by running the recurrence in
/// coefficient space.
CoefficientList coeff_list_recurrence(const FamilySpec& spec, int n);

/// Monomial coefficients of P_n from the closed combinatorial expansion:
/// the x^{n-2m} coefficient is (-1)^m b_0^{2m-n} / sqrt([n]!) times a nested
/// sum of bracket values [s] = b_{s-1}^2 / b_0^2 over decreasing index
/// chains.  Structurally independent of coeff_list_recurrence.
CoefficientList coeff_list_explicit(const FamilySpec& spec, int n);

/// Leading size-by-size truncation of the Jacobi matrix of the family.
/// The diagonal is zero; off[i] couples rows i and i+1 and equals b_i.
struct TridiagonalMatrix {
  std::size_t size = 0;
  std::vector<double> off;  ///< size - 1 entries

  /// Matrix-vector product; v.size() must equal size.
  std::vector<double> apply(std::span<const double> v) const;
};

TridiagonalMatrix jacobi_matrix(const FamilySpec& spec, std::size_t size);

/// Density w_a of the absolutely continuous part of the k = 1 orthogonality
/// measure: w_a(x) = a^2 sqrt(4 - x^2) / (2 pi (a^4 - (a^2 - 1) x^2)) on
/// |x| < 2 and 0 outside.  The denominator is positive on (-2, 2) for every
/// a > 0; its only zero is at |x| = 2 when a^2 = 2.
double measure_density(double a, double x);

/// Callable form of measure_density with the coupling fixed.
struct MeasureDensity {
  double a;
  double operator()(double x) const { return measure_density(a, x); }
};

/// Point mass of a measure.
struct PointMass {
  double x;
  double mass;
};

/// Discrete part of the k = 1 orthogonality measure.  Empty when a^2 <= 2;
/// for a^2 > 2 the perturbed Jacobi matrix has two eigenvalues outside
/// [-2, 2] and the measure carries symmetric atoms at +-a^2/sqrt(a^2 - 1)
/// with mass (a^2 - 2) / (2 (a^2 - 1)) each.  The density alone integrates
/// to 1/(a^2 - 1) in that regime; atoms restore total mass 1.
std::vector<PointMass> measure_atoms(double a);

/**
 * Integral of f against the full k = 1 orthogonality measure (density plus
 * atoms).  The interval part substitutes x = 2 sin(theta), which absorbs the
 * square-root endpoint factor and leaves a smooth integrand for every a > 0,
 * handled by adaptive Gauss panels (nodes never touch the endpoints).
 */
template <class F>
double integrate_measure(F&& f, double a, double tol) {
  if (!(a > 0.0)) throw domain_error("integrate_measure: requires a > 0");
  if (!(tol > 0.0)) throw domain_error("integrate_measure: tol must be positive");
  const double a2 = a * a;
  const double A = (a2 - 2.0) * (a2 - 2.0);
  const double B = 4.0 * (a2 - 1.0);
  const double scale = 2.0 * a2 / std::numbers::pi;
  auto g = [&](double theta) {
    const double c = std::cos(theta);
    const double c2 = c * c;
    return scale * c2 / (A + B * c2) * f(2.0 * std::sin(theta));
  };
  constexpr double half_pi = std::numbers::pi / 2.0;
  double value = adaptive_gauss(g, -half_pi, half_pi, tol);
  for (const PointMass& p : measure_atoms(a)) value += p.mass * f(p.x);
  return value;
}

}  // namespace chebosc
