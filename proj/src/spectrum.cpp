#include "pointint/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pointint/parallel.hpp"

namespace pointint {

namespace {

constexpr double kBisectTol = 1e-12;  // tighter than the 1e-10 contract
constexpr int kBisectMaxIter = 200;

void check_geometry(const ThreeDeltaRealization& r, const BoxDomain& d) {
  if (r.a >= std::min(-d.x1, d.x2)) {
    throw GeometryError("delta spacing a must be smaller than min(-x1, x2)");
  }
}

double require_positive_k(double k, const char* where) {
  if (!std::isfinite(k) || k <= 0.0) {
    throw ValidationError(std::string(where) + " requires k > 0");
  }
  return k;
}

// Secular chain value together with the magnitude of the full product
// matrix, so residuals can be judged relative to the chain's scale.
struct ChainValue {
  double value;
  double scale;
};

ChainValue exact_chain(const PointParams& p, const BoxDomain& d, double k) {
  const RealMat2 m = free_propagator(k, d.x2) * connection_matrix_real(p) *
                     free_propagator(k, -d.x1);
  const double scale =
      std::max({std::abs(m.a11), std::abs(m.a12), std::abs(m.a21),
                std::abs(m.a22)});
  return {m.a21, scale};
}

ChainValue approx_chain(const ThreeDeltaRealization& r, const BoxDomain& d,
                        double k) {
  const RealMat2 m = free_propagator(k, d.x2 - r.a) *
                     u_elements_closed_form(r, k) *
                     free_propagator(k, -r.a - d.x1);
  const double scale =
      std::max({std::abs(m.a11), std::abs(m.a12), std::abs(m.a21),
                std::abs(m.a22)});
  return {m.a21, scale};
}

void require_grid(std::span<const double> grid) {
  if (grid.size() < 2) {
    throw ValidationError("sample grid needs at least 2 points");
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (!(grid[i] < grid[i + 1])) {
      throw ValidationError("sample grid must be strictly ascending");
    }
  }
}

// Trapezoid L2 norm; divides the samples in place.
void normalize(WaveSamples& w) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < w.xs.size(); ++i) {
    const double h = w.xs[i + 1] - w.xs[i];
    sum += 0.5 * h * (std::norm(w.phis[i]) + std::norm(w.phis[i + 1]));
  }
  const double norm = std::sqrt(sum);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw NumericalError("eigenfunction norm vanished or overflowed");
  }
  for (auto& phi : w.phis) {
    phi /= norm;
  }
  if (w.left_limit_at_zero) {
    *w.left_limit_at_zero /= norm;
  }
}

}  // namespace

BoxDomain::BoxDomain(double x1_, double x2_) : x1(x1_), x2(x2_) {
  if (!std::isfinite(x1) || !std::isfinite(x2)) {
    throw ValidationError("box endpoints must be finite");
  }
  if (!(x1 < 0.0) || !(0.0 < x2)) {
    throw ValidationError("box must satisfy x1 < 0 < x2");
  }
}

double secular_exact(const PointParams& p, const BoxDomain& d, double k) {
  require_positive_k(k, "secular_exact");
  return exact_chain(p, d, k).value;
}

double secular_approx(const ThreeDeltaRealization& r, const BoxDomain& d,
                      double k) {
  require_positive_k(k, "secular_approx");
  check_geometry(r, d);
  return approx_chain(r, d, k).value;
}

ScanResult find_eigenvalues(const std::function<double(double)>& f,
                            double k_lo, double k_hi, int grid_steps) {
  if (!std::isfinite(k_lo) || !std::isfinite(k_hi) || k_lo <= 0.0 ||
      k_lo >= k_hi) {
    throw ValidationError("find_eigenvalues requires 0 < k_lo < k_hi");
  }
  if (grid_steps < 2) {
    throw ValidationError("find_eigenvalues requires grid_steps >= 2");
  }

  const double h = (k_hi - k_lo) / grid_steps;
  std::vector<double> ks(grid_steps + 1);
  std::vector<double> fs(grid_steps + 1);
  for (int i = 0; i <= grid_steps; ++i) {
    ks[i] = (i == grid_steps) ? k_hi : k_lo + i * h;
  }
  parallel_chunks(ks.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      fs[i] = f(ks[i]);
    }
  });

  // root = grid index of an exact zero, or bracket [i, i+1] to refine
  struct Candidate {
    int index;
    bool exact_hit;
  };
  std::vector<Candidate> cands;
  for (int i = 0; i <= grid_steps; ++i) {
    if (fs[i] == 0.0) {
      cands.push_back({i, true});
    } else if (i < grid_steps && fs[i + 1] != 0.0 && fs[i] * fs[i + 1] < 0.0) {
      cands.push_back({i, false});
    }
  }

  ScanResult out;
  if (!cands.empty() && cands.front().index == 0 && !cands.front().exact_hit) {
    out.warnings.push_back(
        "first bracket sits at the scan edge; states may exist below k_lo");
  }
  for (std::size_t j = 0; j + 1 < cands.size(); ++j) {
    if (cands[j + 1].index - cands[j].index < 4) {
      out.warnings.push_back(
          "roots near k = " + std::to_string(ks[cands[j].index]) +
          " separated by fewer than 4 grid points; increase grid_steps");
    }
  }

  std::vector<double> roots(cands.size());
  parallel_chunks(cands.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t j = b; j < e; ++j) {
      if (cands[j].exact_hit) {
        roots[j] = ks[cands[j].index];
        continue;
      }
      double lo = ks[cands[j].index];
      double hi = ks[cands[j].index + 1];
      double flo = fs[cands[j].index];
      for (int iter = 0; iter < kBisectMaxIter && hi - lo > kBisectTol;
           ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (flo * fm < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      roots[j] = 0.5 * (lo + hi);
    }
  });

  out.roots.reserve(roots.size());
  for (std::size_t j = 0; j < roots.size(); ++j) {
    out.roots.push_back({static_cast<int>(j) + 1, roots[j]});
  }
  return out;
}

int negative_energy_count(const ThreeDeltaRealization& r, const BoxDomain& d) {
  check_geometry(r, d);
  // Zero-energy shooting from the left wall: phi'' = 0 between the deltas,
  // so phi is piecewise linear and every node is exact.
  const double joints[4] = {-r.a, 0.0, r.a, d.x2};
  const double strengths[3] = {r.v_minus, r.v_0, r.v_plus};
  double x = d.x1;
  double dphi = 1.0;
  double phi = 0.0;
  int nodes = 0;
  for (int i = 0; i < 4; ++i) {
    const double phi_end = phi + dphi * (joints[i] - x);
    if (phi != 0.0 && phi_end != 0.0 && phi * phi_end < 0.0) {
      ++nodes;
    }
    if (phi_end == 0.0 && i < 3) {
      ++nodes;
    }
    phi = phi_end;
    x = joints[i];
    if (i < 3) {
      dphi += strengths[i] * phi;
    }
  }
  return nodes;
}

BoxSpectra compute_box_spectra(const PointParams& p, const BoxDomain& d,
                               double a, double k_lo, double k_hi,
                               int grid_steps) {
  const ThreeDeltaRealization r = realize(p, a);
  check_geometry(r, d);
  BoxSpectra out;
  out.n_negative = negative_energy_count(r, d);

  ScanResult exact = find_eigenvalues(
      [&](double k) { return secular_exact(p, d, k); }, k_lo, k_hi,
      grid_steps);
  ScanResult approx = find_eigenvalues(
      [&](double k) { return secular_approx(r, d, k); }, k_lo, k_hi,
      grid_steps);

  for (auto& e : exact.roots) {
    e.n += out.n_negative;
  }
  for (auto& e : approx.roots) {
    e.n += out.n_negative;
  }
  out.exact = std::move(exact.roots);
  out.approx = std::move(approx.roots);
  for (const auto& w : exact.warnings) {
    out.warnings.push_back("exact: " + w);
  }
  for (const auto& w : approx.warnings) {
    out.warnings.push_back("approx: " + w);
  }
  return out;
}

WaveSamples eigenfunction_exact(const PointParams& p, const BoxDomain& d,
                                double k, std::span<const double> grid) {
  require_positive_k(k, "eigenfunction_exact");
  require_grid(grid);
  const ChainValue sec = exact_chain(p, d, k);
  if (std::abs(sec.value) > 1e-6 * sec.scale) {
    throw NotAnEigenvalue("k = " + std::to_string(k) +
                          " does not zero the secular function");
  }

  const RealMat2 to_origin = free_propagator(k, -d.x1);
  const StateVec left_of_origin{Complex(to_origin.a11), Complex(to_origin.a21)};
  const StateVec right_of_origin = connection_matrix(p) * left_of_origin;

  WaveSamples w;
  w.kind = WaveKind::Exact;
  w.xs.assign(grid.begin(), grid.end());
  w.phis.resize(grid.size());
  w.left_limit_at_zero = left_of_origin.phi;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    if (x < 0.0) {
      w.phis[i] = (x - d.x1) * sinc(k * (x - d.x1));  // [G(0,k;x-x1)]_21
    } else {
      const StateVec s = to_complex(free_propagator(k, x)) * right_of_origin;
      w.phis[i] = s.phi;
    }
  }
  normalize(w);
  return w;
}

WaveSamples eigenfunction_approx(const ThreeDeltaRealization& r,
                                 const BoxDomain& d, double k,
                                 std::span<const double> grid) {
  require_positive_k(k, "eigenfunction_approx");
  require_grid(grid);
  check_geometry(r, d);
  const ChainValue sec = approx_chain(r, d, k);
  if (std::abs(sec.value) > 1e-6 * sec.scale) {
    throw NotAnEigenvalue("k = " + std::to_string(k) +
                          " does not zero the secular function");
  }

  // theta + pi (when flagged) is realized by the vector potential itself so
  // that phi stays continuous across the whole chain.
  const double a_eff =
      r.A + (r.extra_phase_pi ? std::numbers::pi / (2.0 * r.a) : 0.0);
  const Complex i_a(0.0, a_eff);

  const StateVec at_wall{1.0, 0.0};
  const StateVec before_minus =
      to_complex(free_propagator(k, -r.a - d.x1)) * at_wall;
  const StateVec after_minus =
      delta_matrix(Complex(r.v_minus) + i_a) * before_minus;
  const StateVec after_mid =
      delta_matrix(Complex(r.v_0)) *
      (propagator(a_eff, k, r.a) * after_minus);
  const StateVec after_plus =
      delta_matrix(Complex(r.v_plus) - i_a) *
      (propagator(a_eff, k, r.a) * after_mid);

  WaveSamples w;
  w.kind = WaveKind::ThreeDelta;
  w.xs.assign(grid.begin(), grid.end());
  w.phis.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    StateVec s{};
    if (x <= -r.a) {
      s = to_complex(free_propagator(k, x - d.x1)) * at_wall;
    } else if (x <= 0.0) {
      s = propagator(a_eff, k, x + r.a) * after_minus;
    } else if (x <= r.a) {
      s = propagator(a_eff, k, x) * after_mid;
    } else {
      s = to_complex(free_propagator(k, x - r.a)) * after_plus;
    }
    w.phis[i] = s.phi;
  }
  normalize(w);
  return w;
}

int count_nodes(const WaveSamples& w) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(w.phis.size()) - 2;
  if (n < 2) {
    return 0;
  }
  std::vector<int> sign(n, 0);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double re = w.phis[i + 1].real();
    if (std::abs(re) >= 1e-10) {
      sign[i] = re > 0.0 ? 1 : -1;
    }
  }
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (sign[i] != 0) {
      continue;
    }
    for (std::ptrdiff_t dist = 1; dist < n; ++dist) {
      if (i - dist >= 0 && sign[i - dist] != 0) {
        sign[i] = sign[i - dist];
        break;
      }
      if (i + dist < n && sign[i + dist] != 0) {
        sign[i] = sign[i + dist];
        break;
      }
    }
  }
  int nodes = 0;
  for (std::ptrdiff_t i = 0; i + 1 < n; ++i) {
    if (sign[i] * sign[i + 1] < 0) {
      ++nodes;
    }
  }
  return nodes;
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (points < 2 || !(lo < hi)) {
    throw ValidationError("uniform_grid requires lo < hi and points >= 2");
  }
  std::vector<double> xs(points);
  const double h = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) {
    xs[i] = lo + i * h;
  }
  xs.back() = hi;
  return xs;
}

}  // namespace pointint
