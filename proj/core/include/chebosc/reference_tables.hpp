#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chebosc/mandel.hpp"

/**
 * @file reference_tables.hpp
 * Fixed-resolution reference scans of the k = 2 sub-Poissonian windows and
 * machinery for checking freshly computed sign layouts against them.
 *
 * Each reference row records, for one coupling a, the abscissae at which a
 * sign scan of Q at two-to-four decimal resolution saw the sign change, and
 * the location/value of the minimum of Q.  A sign change is therefore known
 * only as a pair of samples straddling it, which fixes the natural
 * comparison tolerances in kRowTolerances.
 */

namespace chebosc {

/// One recorded sign change of Q: the last reference sample on each side.
/// A side whose checked flag is off is kept for completeness but excluded
/// from comparisons (one row carries a pair that is internally inconsistent
/// at the stated resolution; see ReferenceRow::flagged).
struct ReferenceBoundary {
  double below;
  double above;
  bool below_checked = true;
  bool above_checked = true;
};

/// One reference row: coupling, recorded sign changes in increasing x, and
/// the recorded minimum of Q.  When no negative window exists the minimum
/// is an interior local minimum with positive value.
struct ReferenceRow {
  double a;
  std::vector<ReferenceBoundary> boundaries;
  double x_min;
  double q_min;
  bool has_negative_interval;
  bool flagged;  ///< row contains an excluded inconsistent entry
};

/// Rows for strong coupling tau = a^2 > 2: one sign change, with Q negative
/// on (0, root) and positive beyond.
const std::vector<ReferenceRow>& reference_pi3_rows();

/// Rows for weak coupling 0 < a < 1: up to two sign changes enclosing an
/// interior negative window that closes between a = 0.25 and a = 0.3.
const std::vector<ReferenceRow>& reference_pi1_rows();

/// Comparison tolerances implied by the reference scan resolution.
struct RowTolerances {
  double boundary;  ///< on each recorded side of a sign change, in x
  double x_min;     ///< on the minimum abscissa
  double q_min;     ///< on the minimum value
};

inline constexpr RowTolerances kRowTolerances{0.01, 0.005, 0.0015};

/// Freshly computed counterpart of one reference row.
struct ComputedRow {
  double a;
  SignRegionReport report;
  /// Deepest negative-window minimum, or the interior dip when no negative
  /// window exists.
  std::optional<QMinimum> minimum;
};

ComputedRow compute_row(int k, double a, std::size_t grid = 10000,
                        double root_tol = 1e-10, double min_tol = 1e-8);

/// Outcome of checking one computed row against its reference row.
struct RowCheck {
  bool structure_ok;   ///< same number of sign changes, same window layout
  bool boundaries_ok;  ///< every checked side within tolerance
  bool minimum_ok;     ///< minimum location and value within tolerance
  bool passed;
  std::string detail;  ///< empty when passed, otherwise what differed
};

/// tol_scale multiplies every entry of kRowTolerances.
RowCheck check_row(const ReferenceRow& ref, const ComputedRow& comp,
                   double tol_scale = 1.0);

/// Coupling in (lo, hi) at which the Q < 0 window of the k = 2 family
/// closes, located by bisection over a sign scan of P_2.  Requires the
/// window to be present at lo and absent at hi.
double negative_window_vanishing_point(double lo = 0.25, double hi = 0.30,
                                       std::size_t grid = 20000,
                                       double tol = 1e-7);

/// Monomial coefficients of the k = 1 polynomials of degree 0 through 10,
/// reconstructed from their published factored form: each numerator is a
/// polynomial whose coefficients are affine in alpha = a^2, and every
/// polynomial of degree >= 1 carries an overall 1/a.  Independent of both
/// coefficient builders in polynomials.hpp, so it cross-checks them.
std::vector<CoefficientList> reference_low_order_polynomials(double a);

}  // namespace chebosc
