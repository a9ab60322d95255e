#pragma once

#include "pointint/transfer_core.hpp"

namespace pointint {

/// Which strength schedule applies to a parameter set.
enum class BranchTag {
  GammaNonZero,               // |gamma| > 1e-12: 1/a^2 middle delta
  GammaZero,                  // gamma = 0, generic: constant middle delta
  GammaZeroNegativeIdentity,  // gamma = 0, alpha = delta = -1: single delta
                              // plus a pi phase shift
};

BranchTag classify_branch(const PointParams& p);

/// True for 1e-12 < |gamma| < 1e-6: the gamma schedule is formally valid but
/// its 1/gamma strengths make finite-a arithmetic ill-conditioned.
bool near_singular_gamma(const PointParams& p);

/// Three deltas at x = -a, 0, +a with distance-dependent strengths, plus the
/// constant vector potential A = theta/(2a) applied on (-a, a).
struct ThreeDeltaRealization {
  ThreeDeltaRealization(double a, double v_minus, double v_0, double v_plus,
                        double A, bool extra_phase_pi);

  double a;
  double v_minus;
  double v_0;
  double v_plus;
  double A;
  /// Set only for the alpha = delta = -1, gamma = 0 case, where the target is
  /// reached by a single delta together with the phase theta + pi.  The flag
  /// carries the extra pi; A stays theta/(2a).
  bool extra_phase_pi;
};

/// Strength schedules mapping target parameters to a finite-distance
/// realization:
///
///   |gamma| > 0:  v0 = gamma/a^2,
///                 v+ = -1/a + (alpha+1)/gamma,
///                 v- = -1/a + (delta+1)/gamma
///   gamma  = 0:   v+ = (alpha-1)/(2a),  v- = (delta-1)/(2a),
///                 v0 = 4 beta / (alpha+delta+2)
///   gamma = 0, alpha = delta = -1:
///                 v+ = v- = 0, v0 = -beta, extra pi phase
///
/// with A = theta/(2a) in every branch.
ThreeDeltaRealization realize(const PointParams& p, double a);

/// Composite transfer matrix of the realized system from -a-0 to a+0:
/// the five-factor product
///
///   V_delta(v+ - iA) G(A,k;a) V_delta(v0) G(A,k;a) V_delta(v- + iA),
///
/// negated when extra_phase_pi is set.
ComplexMat2 three_delta_matrix(const ThreeDeltaRealization& r, double k);

/// The real SL(2,R) factor of the composite: three_delta_matrix equals
/// e^{2iAa} times this matrix.  Evaluated from the closed-form elements
///
///   u21 = sin(2ka)/k + sin^2(ka)/k^2 v0
///   u11 = cos(2ka) + sin(2ka)/(2k) v0 + u21 v+
///   u22 = cos(2ka) + sin(2ka)/(2k) v0 + u21 v-
///   u12 = cos^2(ka)(v+ + v0 + v-) - sin^2(ka)(v+ + v-)
///         + sin(2ka)/(2k) (-2k^2 + v0 (v+ + v-)) + u21 v+ v-
///
/// independent of A.  The terms mix orders 1/a^2 .. a for renormalized
/// strengths and cancel down to O(1); they are combined in __float128 so the
/// cancellation costs none of the double-precision result.  All entries are
/// negated when extra_phase_pi is set (the theta + pi phase absorbs the sign).
RealMat2 u_elements_closed_form(const ThreeDeltaRealization& r, double k);

}  // namespace pointint
