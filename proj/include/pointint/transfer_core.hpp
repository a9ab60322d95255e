#pragma once

#include "pointint/errors.hpp"
#include "pointint/mat2.hpp"

namespace pointint {

/// sin(t)/t, switching to the 3-term series below |t| = 1e-8 so the
/// removable singularity at t = 0 never divides by zero.
double sinc(double t);

/// Connection parameters (theta, alpha, beta, gamma, delta) of a generalized
/// point interaction at the origin:
///
///   (phi'(+0), phi(+0)) = e^{i theta} [[alpha, beta], [gamma, delta]]
///                         (phi'(-0), phi(-0)),
///
/// with alpha*delta - beta*gamma = 1.  Construction rejects parameter sets
/// off the SL(2,R) surface by more than 1e-12, and any non-finite value.
struct PointParams {
  PointParams(double theta, double alpha, double beta, double gamma,
              double delta);

  double theta;
  double alpha;
  double beta;
  double gamma;
  double delta;

  /// Identity connection: free particle, no interaction.
  static PointParams free_particle() { return {0.0, 1.0, 0.0, 0.0, 1.0}; }
  /// Single delta of strength v (continuous phi, kinked phi').
  static PointParams single_delta(double v) { return {0.0, 1.0, v, 0.0, 1.0}; }
  /// Epsilon interaction of strength u (continuous phi', jumping phi).
  static PointParams epsilon(double u) { return {0.0, 1.0, 0.0, u, 1.0}; }
};

/// Transfer matrix across a potential-free stretch of length x with constant
/// vector potential A, in natural units (hbar = 2m = 1):
///
///   e^{iAx} { cos(kx) I + sin(kx)/k [[iA, A^2 - k^2], [1, -iA]] }.
///
/// k must be >= 0 and finite; x may have either sign (inverse transfer).
ComplexMat2 propagator(double A, double k, double x);

/// A = 0 specialization; purely real and in SL(2,R).
RealMat2 free_propagator(double k, double x);

/// Delta interaction of strength v: phi continuous, phi' jumps by v phi.
ComplexMat2 delta_matrix(double v);

/// Complex-strength overload; the side deltas of the three-delta system
/// acquire strengths v -+ iA from the vector-potential step beneath them.
ComplexMat2 delta_matrix(Complex v);

/// Epsilon interaction of strength u: phi' continuous, phi jumps by u phi'.
ComplexMat2 eps_matrix(double u);

/// Full connection matrix e^{i theta} [[alpha, beta], [gamma, delta]].
ComplexMat2 connection_matrix(const PointParams& p);

/// Phase-stripped real part [[alpha, beta], [gamma, delta]].
RealMat2 connection_matrix_real(const PointParams& p);

}  // namespace pointint
