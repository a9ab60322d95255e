#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pointint/renormalization.hpp"

namespace pointint {

/// Interval [x1, x2] with Dirichlet walls; the interaction sits at the
/// origin, so x1 < 0 < x2 is required.
struct BoxDomain {
  BoxDomain(double x1, double x2);

  double x1;
  double x2;

  double width() const { return x2 - x1; }
};

/// One box eigenvalue: quantum number n and wave number k (E = k^2).
struct Eigenpair {
  int n;
  double k;
};

enum class WaveKind { Exact, ThreeDelta };

/// Sampled eigenfunction on an ascending grid, L2-normalized by trapezoid
/// rule over that grid and sign-fixed so phi'(x1) > 0.
struct WaveSamples {
  std::vector<double> xs;
  std::vector<Complex> phis;
  WaveKind kind;
  /// Exact kind only: phi(0-) under the same normalization.  The x = 0
  /// sample itself reports the x -> +0 limit; the pair exposes the jump.
  std::optional<Complex> left_limit_at_zero;
};

/// Secular function of the point interaction in the box: the (2,1) element
/// of G(0,k;x2) U G(0,k;-x1) with the phase e^{i theta} stripped (it cannot
/// move a zero).  Roots in k are the positive-energy eigenvalues.
double secular_exact(const PointParams& p, const BoxDomain& d, double k);

/// Same for the realized three-delta system: the (2,1) element of
/// G(0,k;x2-a) U_a(k) G(0,k;-a-x1), with e^{2iAa} dropped.
double secular_approx(const ThreeDeltaRealization& r, const BoxDomain& d,
                      double k);

struct ScanResult {
  /// Roots in ascending order, numbered 1, 2, ... within the scanned window.
  std::vector<Eigenpair> roots;
  std::vector<std::string> warnings;
};

/// Scans f over a uniform grid of grid_steps intervals on [k_lo, k_hi] and
/// refines every sign change by bisection to |dk| <= 1e-10.  Exact zeros at
/// grid points count as roots.  Warns when two roots share fewer than 4 grid
/// points and when the first bracket sits at the scan edge.
ScanResult find_eigenvalues(const std::function<double(double)>& f,
                            double k_lo, double k_hi, int grid_steps);

/// Number of box eigenvalues below E = 0 for the realized three-delta
/// system, via the node count of the zero-energy shooting solution (piecewise
/// linear between the deltas).  Exact and O(1); no kappa scan involved.
int negative_energy_count(const ThreeDeltaRealization& r, const BoxDomain& d);

/// Positive-k spectra of the exact interaction and its realization at
/// distance a, numbered absolutely: n = n_negative + positive-k rank, where
/// n_negative counts the finite-a system's negative-energy states.  The same
/// offset applies to the exact column, which labels exact states by
/// continuation from the finite-a system (states escaping to E = -infinity
/// as a -> 0 keep their slot).
struct BoxSpectra {
  int n_negative;
  std::vector<Eigenpair> exact;
  std::vector<Eigenpair> approx;
  std::vector<std::string> warnings;
};

BoxSpectra compute_box_spectra(const PointParams& p, const BoxDomain& d,
                               double a, double k_lo, double k_hi,
                               int grid_steps);

/// Eigenfunction of the exact interaction at eigenvalue k, sampled on grid:
/// phi(x) = [G(0,k;x-x1)]_21 left of the origin and
/// [G(0,k;x) V G(0,k;-x1)]_21 right of it, V = e^{i theta} U.
/// Throws NotAnEigenvalue when |secular| > 1e-6 relative to the chain scale.
WaveSamples eigenfunction_exact(const PointParams& p, const BoxDomain& d,
                                double k, std::span<const double> grid);

/// Eigenfunction of the realized system: free propagation outside [-a, a],
/// vector-potential propagation between the deltas, delta kicks at -a, 0, a.
/// Continuous everywhere; when extra_phase_pi is set the pi is spread over
/// the middle regions (A_eff = A + pi/(2a)) so continuity survives.
WaveSamples eigenfunction_approx(const ThreeDeltaRealization& r,
                                 const BoxDomain& d, double k,
                                 std::span<const double> grid);

/// Strict sign changes of Re phi between consecutive interior samples,
/// endpoints ignored; samples with |Re phi| < 1e-10 inherit the sign of the
/// nearest non-tiny neighbor.
int count_nodes(const WaveSamples& w);

std::vector<double> uniform_grid(double lo, double hi, int points);

}  // namespace pointint
