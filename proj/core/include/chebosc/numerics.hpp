#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>

#include "chebosc/errors.hpp"

/**
 * @file numerics.hpp
 * Generic numerical kernels: compensated summation, tail-bounded series,
 * bracketed root finding, golden-section minimization, central differences,
 * and adaptive Gauss quadrature with embedded 7/15-point rules.
 *
 * Everything here is deterministic and allocation-free on the hot path.
 */

namespace chebosc {

/// Kahan compensated accumulator.
class KahanSum {
 public:
  void add(double term) noexcept {
    const double y = term - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const noexcept { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline constexpr std::size_t series_term_cap = 1'000'000;

struct SeriesSum {
  double sum;
  double tail_bound;  ///< geometric bound on the omitted remainder
  std::size_t terms;  ///< number of terms accumulated
};

/**
 * Sums term(0) + term(1) + ... with compensated accumulation until the
 * geometric remainder bound |term(n)| * r / (1 - r) drops below tol.
 *
 * `ratio_bound` must eventually dominate |term(n+1)/term(n)|.  The bound uses
 * r = max(ratio_bound, last observed ratio), which is rigorous for series
 * whose term ratio decreases monotonically toward ratio_bound (the case for
 * every series in this library).  `min_terms` defers the stopping test, e.g.
 * past a known bump in the term sequence.  term is invoked once per index,
 * in ascending order, so stateful (running-product) callables are fine.
 *
 * Throws convergence_error when term_cap is exhausted.
 */
template <class Term>
SeriesSum sum_tail_bounded(Term&& term, double ratio_bound, double tol,
                           std::size_t min_terms = 2,
                           std::size_t term_cap = series_term_cap) {
  if (!(ratio_bound >= 0.0) || ratio_bound >= 1.0)
    throw domain_error("sum_tail_bounded: ratio bound must lie in [0, 1)");
  if (!(tol > 0.0)) throw domain_error("sum_tail_bounded: tol must be positive");

  KahanSum acc;
  double prev = 0.0;
  for (std::size_t n = 0; n < term_cap; ++n) {
    const double t = term(n);
    acc.add(t);
    if (n + 1 >= min_terms && n >= 1) {
      double observed;
      if (prev == 0.0)
        observed = (t == 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
      else
        observed = std::abs(t / prev);
      const double r = std::max(ratio_bound, observed);
      if (r < 1.0) {
        const double bound = std::abs(t) * r / (1.0 - r);
        if (bound < tol) return {acc.value(), bound, n + 1};
      }
    }
    prev = t;
  }
  throw convergence_error("sum_tail_bounded: term cap reached");
}

struct BracketedRoot {
  double lo;
  double hi;
  double root;  ///< midpoint of the final bracket
  std::size_t iterations;
};

/// Bisection on a sign change.  Requires f(lo) and f(hi) of opposite sign.
template <class F>
BracketedRoot bisect(F&& f, double lo, double hi, double tol,
                     std::size_t max_iter = 200) {
  if (!(lo < hi)) throw domain_error("bisect: requires lo < hi");
  if (!(tol > 0.0)) throw domain_error("bisect: tol must be positive");
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return {lo, lo, lo, 0};
  if (fhi == 0.0) return {hi, hi, hi, 0};
  if ((flo < 0.0) == (fhi < 0.0))
    throw domain_error("bisect: endpoints do not bracket a sign change");

  std::size_t it = 0;
  while (hi - lo > tol) {
    if (++it > max_iter) throw convergence_error("bisect: iteration cap reached");
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    const double fm = f(mid);
    if (fm == 0.0) return {mid, mid, mid, it};
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return {lo, hi, 0.5 * (lo + hi), it};
}

struct GoldenMinimum {
  double x;
  double value;
  std::size_t iterations;
};

/// Golden-section search for the minimum of a unimodal function on [lo, hi].
template <class F>
GoldenMinimum golden_min(F&& f, double lo, double hi, double tol,
                         std::size_t max_iter = 500) {
  if (!(lo < hi)) throw domain_error("golden_min: requires lo < hi");
  if (!(tol > 0.0)) throw domain_error("golden_min: tol must be positive");
  constexpr double invphi = 0.6180339887498948482;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  std::size_t it = 0;
  while (hi - lo > tol) {
    if (++it > max_iter)
      throw convergence_error("golden_min: iteration cap reached");
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = f(x2);
    }
  }
  const double xm = 0.5 * (lo + hi);
  return {xm, f(xm), it};
}

struct CentralDerivatives {
  double d1;
  double d2;
};

/// Second-order central differences for f' and f'' at x with step h.
template <class F>
CentralDerivatives central_diff(F&& f, double x, double h) {
  if (!(h > 0.0)) throw domain_error("central_diff: step must be positive");
  const double fp = f(x + h);
  const double fm = f(x - h);
  const double f0 = f(x);
  return {(fp - fm) / (2.0 * h), (fp - 2.0 * f0 + fm) / (h * h)};
}

/// Gauss-Legendre rule on (-1, 1); all nodes are interior.
struct QuadratureRule {
  std::span<const double> nodes;
  std::span<const double> weights;
};

namespace detail {

inline constexpr std::array<double, 7> gauss7_nodes = {
    -0.9491079123427585245261897, -0.7415311855993944398638648,
    -0.4058451513773971669066064, 0.0,
    0.4058451513773971669066064,  0.7415311855993944398638648,
    0.9491079123427585245261897};
inline constexpr std::array<double, 7> gauss7_weights = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020,
    0.3818300505051189449503698, 0.2797053914892766679014678,
    0.1294849661688696932706114};

inline constexpr std::array<double, 15> gauss15_nodes = {
    -0.9879925180204854284895657, -0.9372733924007059043077589,
    -0.8482065834104272162006483, -0.7244177313601700474161861,
    -0.5709721726085388475372267, -0.3941513470775633698972074,
    -0.2011940939974345223006283, 0.0,
    0.2011940939974345223006283,  0.3941513470775633698972074,
    0.5709721726085388475372267,  0.7244177313601700474161861,
    0.8482065834104272162006483,  0.9372733924007059043077589,
    0.9879925180204854284895657};
inline constexpr std::array<double, 15> gauss15_weights = {
    0.0307532419961172683546284, 0.0703660474881081247092674,
    0.1071592204671719350118695, 0.1395706779261543144478048,
    0.1662692058169939335532009, 0.1861610000155622110268006,
    0.1984314853271115764561183, 0.2025782419255612728806202,
    0.1984314853271115764561183, 0.1861610000155622110268006,
    0.1662692058169939335532009, 0.1395706779261543144478048,
    0.1071592204671719350118695, 0.0703660474881081247092674,
    0.0307532419961172683546284};

}  // namespace detail

inline QuadratureRule gauss_rule_7() {
  return {detail::gauss7_nodes, detail::gauss7_weights};
}
inline QuadratureRule gauss_rule_15() {
  return {detail::gauss15_nodes, detail::gauss15_weights};
}

namespace detail {

template <class F>
double panel(F& f, double lo, double hi, const QuadratureRule& rule) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  KahanSum s;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    s.add(rule.weights[i] * f(mid + half * rule.nodes[i]));
  return half * s.value();
}

template <class F>
double adaptive_gauss_impl(F& f, double lo, double hi, double tol, int depth) {
  const double coarse = panel(f, lo, hi, gauss_rule_7());
  const double fine = panel(f, lo, hi, gauss_rule_15());
  if (std::abs(fine - coarse) <= tol) return fine;
  if (depth <= 0)
    throw convergence_error("adaptive_gauss: refinement depth cap reached");
  const double mid = 0.5 * (lo + hi);
  return adaptive_gauss_impl(f, lo, mid, 0.5 * tol, depth - 1) +
         adaptive_gauss_impl(f, mid, hi, 0.5 * tol, depth - 1);
}

}  // namespace detail

inline constexpr int adaptive_depth_cap = 30;

/**
 * Adaptive integration of f over [lo, hi]: each panel is accepted when the
 * embedded 7- vs 15-point Gauss estimates agree within the local tolerance,
 * otherwise it is split.  Endpoints are never evaluated.
 */
template <class F>
double adaptive_gauss(F&& f, double lo, double hi, double tol,
                      int depth = adaptive_depth_cap) {
  if (!(lo < hi)) throw domain_error("adaptive_gauss: requires lo < hi");
  if (!(tol > 0.0)) throw domain_error("adaptive_gauss: tol must be positive");
  return detail::adaptive_gauss_impl(f, lo, hi, tol, depth);
}

}  // namespace chebosc
