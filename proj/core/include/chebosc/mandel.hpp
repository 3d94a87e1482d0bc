#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chebosc/normalization.hpp"
#include "chebosc/polynomials.hpp"

/**
 * @file mandel.hpp
 * Mandel parameter Q(x) = variance/mean - 1 of the coherent-state photon
 * statistics, its closed forms, and the analysis of where it changes sign.
 *
 * With N the normalization factor, Q(x) = x (N''/N' - N'/N), and in the
 * variable t = x/2 the sign of Q for x > 0 equals the sign of the
 * polynomial P_k(t; tau) defined by
 *   tau^2 (1-t)^4 (N'' N - N'^2) = P_k(t; tau),   tau = a^2,
 * where primes are t-derivatives.  Sub-Poissonian windows (Q < 0) are the
 * sets where P_k < 0.
 */

namespace chebosc {

/// Formula that produced a Mandel value.
enum class MandelRoute { closed_k1, closed_k2, closed_general, series, moments };

const char* mandel_route_name(MandelRoute route) noexcept;

struct MandelResult {
  double x;
  double q;
  MandelRoute route;
};

/// Q from a precomputed normalization factor; Q(0) is defined as 0.
double mandel_general(const NormalizationFactor& nf, double x);

/// Closed form for k = 1:  Q = (2x/(2-x)) (1 - 1/(x + a^2 (2-x))).
double mandel_closed_k1(double a, double x);

/// Closed rational form for k = 2.
double mandel_closed_k2(double a, double x);

/// Fastest available closed route: the k = 1 and k = 2 shortcuts, otherwise
/// the general closed normalization.
MandelResult mandel_auto(const FamilySpec& spec, double x);

/// Q from the series normalization route.
MandelResult mandel_series(const FamilySpec& spec, double x,
                           double tol = 1e-12);

/// Q from the raw photon-number moments route.
MandelResult mandel_moments(const FamilySpec& spec, double x,
                            double tol = 1e-12);

/// Sign of Q for k = 1 at intensity x: the sign of x (1 - a^2) + 2 a^2 - 1
/// for x > 0, and 0 at x = 0.
int sign_k1(double a, double x);

/// Location of the k = 1 sign change (1 - 2a^2) / (1 - a^2), present only
/// when a^2 < 1/2; for a^2 >= 1/2 the parameter is non-negative on [0, 2).
std::optional<double> boundary_k1(double a);

/// Sign polynomial P_k(t; tau).  Terms whose coefficient vanishes are
/// skipped before any power is formed, so the k = 1 case never touches the
/// formal t^{k-2} power.
double p_poly(int k, double tau, double t);

/// q = N'' N - N'^2 in the variable t, from the closed normalization.
/// Satisfies tau^2 (1-t)^4 q = P_k(t; tau).
double q_k(int k, double tau, double t);

/// Same quantity with derivatives taken by central differences of the
/// closed N only; an independent cross-check accurate to O(h^2).
double q_k_fd_oracle(int k, double tau, double t, double h = 1e-5);

/// Coupling regimes in tau = a^2.
enum class Region { pi1, pi2, pi3 };

/// pi1 for tau <= 1, pi2 for 1 < tau <= 2, pi3 for tau > 2.
Region classify_region(double tau);

const char* region_name(Region region) noexcept;

/// psi(t) = 3t^3 - 2t^2 - 1, the shape factor controlling one term of the
/// k = 2 decomposition; non-positive on [0, 1] with minimum -275/243 at
/// t = 4/9.
double psi_poly(double t);

/// Extrema of psi over a uniform grid on [0, 1].
struct PsiBound {
  double max_value;
  double min_value;
  double argmin;
  bool nonpositive;  ///< max_value <= 0
};

PsiBound psi_bound_check(std::size_t grid = 10000);

/// Term-by-term decomposition P_2 = gamma1 + gamma2 + gamma3 with
///   gamma1 = 1 - (tau-1)^2 - 2 (tau-1)^2 t^2 + 3 (tau-1)^2 t^3,
///   gamma2 = 4 tau (tau-1) t (1-t),
///   gamma3 = (tau-1)^2 (1-t) t^3.
/// The certificate holds when every term is non-negative and the
/// decomposition reproduces P_2; it is sufficient but not necessary for
/// P_2 > 0, and it fails on part of 1 < tau <= 2 (for example tau = 2,
/// t = 1/2 gives gamma1 = -1/8 while P_2 = 31/16 > 0).
struct Pi2Certificate {
  double gamma1;
  double gamma2;
  double gamma3;
  double sum;
  double p2;
  bool ok;
};

Pi2Certificate pi2_positivity_check(double tau, double t);

/// One maximal open interval of constant sign of Q in x.
struct SignInterval {
  double lo;
  double hi;
  int sign;  ///< -1, 0 or +1
};

/// Location and value of a local minimum of Q.
struct QMinimum {
  double x;
  double q;
};

/// Sign layout of Q over (0, 2) for one family.
struct SignRegionReport {
  int k;
  double a;
  double tau;
  Region region;
  std::vector<double> boundaries;      ///< zeros of Q in x, increasing
  std::vector<SignInterval> intervals; ///< consecutive constant-sign windows
  std::vector<QMinimum> minima;        ///< one refined minimum per Q < 0 window
};

/// Locates the sign changes of P_k on a uniform interior t-grid, refines
/// each by bisection to root_tol (in t), and refines the minimum of Q
/// inside every negative window by golden-section search to min_tol (in x).
SignRegionReport scan_regions(const FamilySpec& spec, std::size_t grid = 10000,
                              double root_tol = 1e-10, double min_tol = 1e-8);

/// Smallest interior local minimum of Q on (0, 2) regardless of sign, or
/// nothing when Q is monotone on the grid.  Used for couplings whose
/// sub-Poissonian window has closed but whose dip is still visible.
std::optional<QMinimum> interior_minimum(const FamilySpec& spec,
                                         std::size_t grid = 10000,
                                         double min_tol = 1e-8);

}  // namespace chebosc
