#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chebosc/polynomials.hpp"

/**
 * @file oscillator.hpp
 * Deformed oscillator algebra attached to a polynomial family and the photon
 * statistics of its coherent states.
 *
 * The ladder operators act on the number basis as
 *
 *   a+ |n> = sqrt(2) b_n |n+1>,     a- |n> = sqrt(2) b_{n-1} |n-1>,
 *
 * so a- a+ = 2 b_n^2 and a+ a- = 2 b_{n-1}^2 on |n>.  Coherent states are
 * eigenvectors of a-; with x = |z|^2 their photon-number distribution is
 * p_n = x^n / (f(n) N(x)) where f is the generalized factorial below and
 * N(x) the normalization series.
 */

namespace chebosc {

/// Matrix elements of the ladder operators in the number basis.
struct LadderCoefficients {
  FamilySpec spec;

  /// Coefficient of |n+1> in a+ |n>.
  double raising(long n) const noexcept { return std::sqrt(2.0) * spec.b(n); }
  /// Coefficient of |n-1> in a- |n>; zero at n = 0.
  double lowering(long n) const noexcept {
    return std::sqrt(2.0) * spec.b(n - 1);
  }
};

/// Generalized factorial f(0) = 1, f(n) = prod_{j=0}^{n-1} 2 b_j^2, i.e.
/// 2^n for n < k and 2^n a^2 for n >= k.  Computed as a direct product;
/// fine for moderate n, but series code must use term ratios instead
/// because f(n) overflows double near n ~ 1000.
double factorial_by_index(const FamilySpec& spec, int n);

/// a+ applied to a finite number-basis vector; output has one more entry.
std::vector<double> apply_raising(const FamilySpec& spec,
                                  std::span<const double> v);

/// a- applied to a finite number-basis vector; output has one fewer entry
/// (the n = 0 component is annihilated).
std::vector<double> apply_lowering(const FamilySpec& spec,
                                   std::span<const double> v);

/// Diagonal of the multiplication operator B built from the squared
/// recurrence coefficients: b_{n-1}^2 at level n, or b_n^2 when shifted.
/// The ladder products act diagonally as a+ a- = 2 B and a- a+ = 2 B
/// shifted, which the test suite verifies against apply_raising/lowering.
double b_operator_diagonal(const FamilySpec& spec, long n, bool shifted);

/// Photon-number moments of a coherent state.
struct PhotonMoments {
  double mean;
  double second_moment;
  double variance;
  std::size_t terms;  ///< series terms consumed by the slowest sum
  double tail_bound;  ///< largest geometric remainder bound among the sums
};

/// Moments of p_n at intensity x in [0, 2).  The three series sum(T_n),
/// sum(n T_n), sum(n^2 T_n) with T_n = x^n / f(n) are accumulated by term
/// ratios T_{n+1} = T_n x / (2 b_n^2) until the geometric tail bound drops
/// below tol; at least k + 2 terms are taken so the perturbed coefficient
/// has entered every sum before the bound is trusted.
PhotonMoments coherent_moments(const FamilySpec& spec, double x,
                               double tol = 1e-12);

/// Mandel parameter variance/mean - 1.  Requires mean > 0.
double mandel_from_moments(const PhotonMoments& m);

/// Truncated photon-number distribution of a coherent state.
struct CoherentStateAmplitudes {
  double x;
  std::vector<double> p;  ///< p[n] = x^n / (f(n) N(x)), n < p.size()
  double tail_bound;      ///< geometric bound on the omitted probability mass
};

/// Distribution at intensity x in [0, 2), truncated when the remaining
/// probability mass is below tol.
CoherentStateAmplitudes coherent_amplitudes(const FamilySpec& spec, double x,
                                            double tol = 1e-12);

}  // namespace chebosc
