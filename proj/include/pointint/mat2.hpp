#pragma once

#include <cmath>
#include <complex>

namespace pointint {

using Complex = std::complex<double>;

/// Column vector (phi', phi): a wave function value and its derivative,
/// derivative first.
struct StateVec {
  Complex dphi;
  Complex phi;
};

/// 2x2 complex matrix acting on (phi', phi) columns.  Everything that moves a
/// state across a region or an interaction is one of these.
struct ComplexMat2 {
  Complex a11, a12, a21, a22;

  static constexpr ComplexMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Complex det() const { return a11 * a22 - a12 * a21; }
};

inline ComplexMat2 operator*(const ComplexMat2& a, const ComplexMat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

inline StateVec operator*(const ComplexMat2& m, const StateVec& v) {
  return {m.a11 * v.dphi + m.a12 * v.phi, m.a21 * v.dphi + m.a22 * v.phi};
}

inline ComplexMat2 operator*(const Complex& c, const ComplexMat2& m) {
  return {c * m.a11, c * m.a12, c * m.a21, c * m.a22};
}

inline bool all_finite(const ComplexMat2& m) {
  auto ok = [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  };
  return ok(m.a11) && ok(m.a12) && ok(m.a21) && ok(m.a22);
}

/// Real companion for chains known to stay in SL(2,R): the A = 0 propagator
/// and the phase-stripped composite of the three-delta system.
struct RealMat2 {
  double a11, a12, a21, a22;

  static constexpr RealMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  double det() const { return a11 * a22 - a12 * a21; }
};

inline RealMat2 operator*(const RealMat2& a, const RealMat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

inline ComplexMat2 to_complex(const RealMat2& m) {
  return {m.a11, m.a12, m.a21, m.a22};
}

}  // namespace pointint
