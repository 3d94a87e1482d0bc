#pragma once

#include "chebosc/polynomials.hpp"

/**
 * @file normalization.hpp
 * Normalization factor N(x) = sum_{n>=0} x^n / f(n) of the coherent states,
 * together with its first two derivatives in x.  Three routes are provided:
 * direct series summation, the closed form for k = 1, and the closed
 * rational form valid for every k.  The routes are independent and their
 * agreement is exercised by the test suite.
 */

namespace chebosc {

/// Which formula produced a NormalizationFactor.
enum class NormRoute { series, closed_k1, closed_general };

/// N(x) and its x-derivatives.
struct NormalizationFactor {
  double value;
  double d1;  ///< dN/dx
  double d2;  ///< d2N/dx2
  NormRoute route;
};

/// Series route, valid for x in [0, 2).  Value and both derivatives are
/// summed by term ratios with geometric tail bounds below tol.
NormalizationFactor n_series(const FamilySpec& spec, double x,
                             double tol = 1e-12);

/// Closed form for k = 1:
/// N(x) = (a^2 - 1 + 2/(2 - x)) / a^2.
NormalizationFactor n_closed_k1(double a, double x);

/// Closed rational form for any k, expressed through t = x/2, tau = a^2 and
/// converted back to x-derivatives.
NormalizationFactor n_closed_general(const FamilySpec& spec, double x);

/// N and its derivatives in the variable t = x/2.
struct NormTDerivatives {
  double value;
  double d1t;  ///< dN/dt
  double d2t;  ///< d2N/dt2
};

/// Closed rational form in t:
///   N   = (tau + (1 - tau) t^k) / (tau (1 - t)),
///   N'  = (tau + (1 - tau) (k t^{k-1} + (1 - k) t^k)) / (tau (1 - t)^2),
///   N'' = (2 tau + (1 - tau) [k(k-1) - 2k(k-2) t + (k-1)(k-2) t^2] t^{k-2})
///         / (tau (1 - t)^3),
/// where for k = 1 the bracketed polynomial times t^{k-2} reduces to the
/// constant 2 (the apparent negative power cancels).
NormTDerivatives n_closed_general_t(int k, double tau, double t);

}  // namespace chebosc
