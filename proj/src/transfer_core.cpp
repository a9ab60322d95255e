#include "pointint/transfer_core.hpp"

#include <cmath>

namespace pointint {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw ValidationError(std::string(name) + " must be finite");
  }
}

}  // namespace

double sinc(double t) {
  if (std::abs(t) < 1e-8) {
    const double t2 = t * t;
    return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
  }
  return std::sin(t) / t;
}

PointParams::PointParams(double theta_, double alpha_, double beta_,
                         double gamma_, double delta_)
    : theta(theta_), alpha(alpha_), beta(beta_), gamma(gamma_), delta(delta_) {
  require_finite(theta, "theta");
  require_finite(alpha, "alpha");
  require_finite(beta, "beta");
  require_finite(gamma, "gamma");
  require_finite(delta, "delta");
  const double defect = alpha * delta - beta * gamma - 1.0;
  if (std::abs(defect) > 1e-12) {
    throw ValidationError(
        "alpha*delta - beta*gamma must equal 1 (defect = " +
        std::to_string(defect) + ")");
  }
}

ComplexMat2 propagator(double A, double k, double x) {
  require_finite(A, "A");
  require_finite(k, "k");
  require_finite(x, "x");
  if (k < 0.0) {
    throw ValidationError("propagator requires k >= 0");
  }
  const double t = k * x;
  const double c = std::cos(t);
  const double s_over_k = x * sinc(t);  // sin(kx)/k, finite at k = 0
  const Complex phase = std::polar(1.0, A * x);
  const Complex iA(0.0, A);
  ComplexMat2 g{c + s_over_k * iA, s_over_k * (A * A - k * k),
                Complex(s_over_k, 0.0), c - s_over_k * iA};
  return phase * g;
}

RealMat2 free_propagator(double k, double x) {
  require_finite(k, "k");
  require_finite(x, "x");
  if (k < 0.0) {
    throw ValidationError("free_propagator requires k >= 0");
  }
  const double t = k * x;
  const double c = std::cos(t);
  return {c, -k * std::sin(t), x * sinc(t), c};
}

ComplexMat2 delta_matrix(double v) {
  require_finite(v, "v");
  return {1.0, v, 0.0, 1.0};
}

ComplexMat2 delta_matrix(Complex v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw ValidationError("v must be finite");
  }
  return {1.0, v, 0.0, 1.0};
}

ComplexMat2 eps_matrix(double u) {
  require_finite(u, "u");
  return {1.0, 0.0, u, 1.0};
}

ComplexMat2 connection_matrix(const PointParams& p) {
  const Complex phase = std::polar(1.0, p.theta);
  return phase * ComplexMat2{p.alpha, p.beta, p.gamma, p.delta};
}

RealMat2 connection_matrix_real(const PointParams& p) {
  return {p.alpha, p.beta, p.gamma, p.delta};
}

}  // namespace pointint
