#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "pointint/spectrum.hpp"

namespace pointint {

/// One row of an a -> 0 study: element-wise distance of U_a(k) from the
/// target connection matrix, plus the determinant defect.
struct ConvergenceRow {
  double a;
  /// |u11 - alpha|, |u12 - beta|, |u21 - gamma|, |u22 - delta|.
  std::array<double, 4> element_errors;
  double det_error;
  std::optional<double> k_n_error;
};

/// {0.2, 0.1, 0.05, 0.02, 0.01, 1e-3, 1e-4, 1e-5, 1e-6}.  Stops above 1e-7:
/// beyond that v0 = gamma/a^2 exceeds 1e14 and even the extended-precision
/// closed forms stop improving the double-format result.
std::vector<double> default_a_seq();

/// Evaluates the realized U_a(k) for each a (descending sequence required)
/// and tabulates the element errors against (alpha, beta, gamma, delta).
/// k_n_error stays empty here; eigenvalue columns come from eigenvalue_drift.
std::vector<ConvergenceRow> u_limit_table(const PointParams& p, double k,
                                          std::span<const double> a_seq);

/// For |gamma| > 0 schedules: fits the log-log slope of
///
///   R(a) = [U_a(k)]_21 - gamma - 2a + (gamma/3) k^2 a^2
///
/// over a_seq, excluding |R| < 1e-12 (noise floor).  The remainder is cubic,
/// so the slope should land near 3.
double expansion_check(const PointParams& p, double k,
                       std::span<const double> a_seq);

struct DriftRow {
  double a;
  double k_n;
  double error;  // k_n(a) - k_n of the exact interaction
};

/// Tracks the absolutely-numbered eigenvalue k_n of the realized system over
/// a descending a sequence against the exact interaction's k_n.  n is
/// resolved with the negative-energy offset of the first (coarsest) a; each
/// finite-a root is then matched to the exact one by value, which is
/// unambiguous because the drift stays below the level spacing.
std::vector<DriftRow> eigenvalue_drift(const PointParams& p,
                                       const BoxDomain& d, int n,
                                       std::span<const double> a_seq);

}  // namespace pointint
