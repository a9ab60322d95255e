#include "pointint/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "pointint/parallel.hpp"

namespace pointint {

namespace {

void require_descending_positive(std::span<const double> a_seq) {
  if (a_seq.empty()) {
    throw ValidationError("a sequence must not be empty");
  }
  for (std::size_t i = 0; i < a_seq.size(); ++i) {
    if (!std::isfinite(a_seq[i]) || a_seq[i] <= 0.0) {
      throw ValidationError("a sequence entries must be positive");
    }
    if (i > 0 && !(a_seq[i] < a_seq[i - 1])) {
      throw ValidationError("a sequence must be strictly descending");
    }
  }
}

// n-th positive root of f, scanning upward from k_lo in windows sized by the
// free-box level spacing until enough roots accumulate.
double nth_positive_root(const std::function<double(double)>& f, int rank,
                         double spacing, double k_lo) {
  double k_hi = k_lo + (rank + 2) * spacing;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const int steps = std::max(400, static_cast<int>(
                                        std::ceil(4000.0 * (k_hi - k_lo))));
    const ScanResult scan = find_eigenvalues(f, k_lo, k_hi, steps);
    if (static_cast<int>(scan.roots.size()) >= rank) {
      return scan.roots[rank - 1].k;
    }
    k_hi += (rank + 2) * spacing;
  }
  throw NumericalError("could not isolate the requested eigenvalue rank");
}

}  // namespace

std::vector<double> default_a_seq() {
  return {0.2, 0.1, 0.05, 0.02, 0.01, 1e-3, 1e-4, 1e-5, 1e-6};
}

std::vector<ConvergenceRow> u_limit_table(const PointParams& p, double k,
                                          std::span<const double> a_seq) {
  if (!std::isfinite(k) || k <= 0.0) {
    throw ValidationError("u_limit_table requires k > 0");
  }
  require_descending_positive(a_seq);

  std::vector<ConvergenceRow> rows(a_seq.size());
  parallel_chunks(a_seq.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const ThreeDeltaRealization r = realize(p, a_seq[i]);
      const RealMat2 u = u_elements_closed_form(r, k);
      rows[i].a = a_seq[i];
      rows[i].element_errors = {
          std::abs(u.a11 - p.alpha), std::abs(u.a12 - p.beta),
          std::abs(u.a21 - p.gamma), std::abs(u.a22 - p.delta)};
      rows[i].det_error = std::abs(u.det() - 1.0);
    }
  });
  return rows;
}

double expansion_check(const PointParams& p, double k,
                       std::span<const double> a_seq) {
  if (classify_branch(p) != BranchTag::GammaNonZero) {
    throw ValidationError("expansion_check applies to |gamma| > 0 schedules");
  }
  if (!std::isfinite(k) || k < 0.0) {
    throw ValidationError("expansion_check requires k >= 0");
  }
  require_descending_positive(a_seq);

  // least squares on log|R| vs log a
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int used = 0;
  for (const double a : a_seq) {
    const ThreeDeltaRealization r = realize(p, a);
    const RealMat2 u = u_elements_closed_form(r, k);
    const double res =
        u.a21 - p.gamma - 2.0 * a + (p.gamma / 3.0) * k * k * a * a;
    if (std::abs(res) < 1e-12) {
      continue;
    }
    const double lx = std::log(a);
    const double ly = std::log(std::abs(res));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++used;
  }
  if (used < 2) {
    throw NumericalError(
        "expansion residuals all below the noise floor; nothing to fit");
  }
  const double denom = used * sxx - sx * sx;
  return (used * sxy - sx * sy) / denom;
}

std::vector<DriftRow> eigenvalue_drift(const PointParams& p,
                                       const BoxDomain& d, int n,
                                       std::span<const double> a_seq) {
  require_descending_positive(a_seq);
  if (n < 1) {
    throw ValidationError("quantum number n must be >= 1");
  }
  const ThreeDeltaRealization coarse = realize(p, a_seq.front());
  const int offset = negative_energy_count(coarse, d);
  const int rank = n - offset;
  if (rank < 1) {
    throw NotAnEigenvalue(
        "state n = " + std::to_string(n) +
        " lies below the positive-energy window (negative energy)");
  }

  const double spacing = std::numbers::pi / d.width();
  const double k_lo = 1e-3;
  const double k_exact = nth_positive_root(
      [&](double k) { return secular_exact(p, d, k); }, rank, spacing, k_lo);

  std::vector<DriftRow> rows(a_seq.size());
  parallel_chunks(a_seq.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const ThreeDeltaRealization r = realize(p, a_seq[i]);
      double half_window = 0.6 * spacing;
      double best = 0.0;
      bool found = false;
      for (int widen = 0; widen < 2 && !found; ++widen) {
        const double lo = std::max(k_lo, k_exact - half_window);
        const double hi = k_exact + half_window;
        const int steps = std::max(
            200, static_cast<int>(std::ceil(4000.0 * (hi - lo))));
        const ScanResult scan = find_eigenvalues(
            [&](double k) { return secular_approx(r, d, k); }, lo, hi, steps);
        double dist = std::numeric_limits<double>::infinity();
        for (const auto& root : scan.roots) {
          const double delta = std::abs(root.k - k_exact);
          if (delta < dist) {
            dist = delta;
            best = root.k;
            found = true;
          }
        }
        half_window *= 2.0;
      }
      if (!found) {
        throw NumericalError("no finite-a eigenvalue near k = " +
                             std::to_string(k_exact));
      }
      rows[i] = {a_seq[i], best, best - k_exact};
    }
  });
  return rows;
}

}  // namespace pointint
