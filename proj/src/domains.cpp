#include "penta/domains.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace penta {

namespace {

// Radii stop short of the circle; the functional is continuous up to
// the boundary, so the cap costs at most a sliver covered by member_tol.
constexpr double kAlphaRadiusCap = 1.0 - 1e-3;

double abs_psi_unchecked(double radius, double angle, const Point3& x) {
  const Complex alpha = std::polar(radius, angle);
  const Complex den = 1.0 - x.s * alpha + x.p * alpha * alpha;
  return std::abs(x.a) * (1.0 - radius * radius) / std::abs(den);
}

}  // namespace

double max_abs_diff(const Matrix2& a, const Matrix2& b) {
  return std::max(std::max(std::abs(a.u11 - b.u11), std::abs(a.u12 - b.u12)),
                  std::max(std::abs(a.u21 - b.u21), std::abs(a.u22 - b.u22)));
}

Point3 pi_map(const Matrix2& a) { return {a.u21, a.trace(), a.det()}; }

double unitarity_residual(const Matrix2& u) {
  return max_abs_diff(u.adjoint() * u, Matrix2::identity());
}

bool is_unitary(const Matrix2& u, double tol) { return unitarity_residual(u) <= tol; }

std::pair<Complex, Complex> gamma_quadratic_roots(const Point2& q) {
  const Complex d = std::sqrt(q.s * q.s - 4.0 * q.p);
  // Pick the branch that avoids cancellation, then Viete for the other root.
  const Complex big = (std::abs(q.s + d) >= std::abs(q.s - d)) ? q.s + d : q.s - d;
  if (std::abs(big) == 0.0) return {Complex(0.0, 0.0), Complex(0.0, 0.0)};
  const Complex z1 = big / 2.0;
  return {z1, q.p / z1};
}

bool in_gamma(const Point2& q, const Tolerances& tol, bool strict) {
  const auto [z1, z2] = gamma_quadratic_roots(q);
  const double m = std::max(std::abs(z1), std::abs(z2));
  return strict ? m < 1.0 - tol.member_tol : m <= 1.0 + tol.member_tol;
}

double b_gamma_residual(const Point2& q) {
  return std::max({std::abs(q.s) - 2.0, std::abs(std::abs(q.p) - 1.0),
                   std::abs(q.s - std::conj(q.s) * q.p)});
}

bool in_b_gamma(const Point2& q, const Tolerances& tol) {
  return b_gamma_residual(q) <= tol.boundary_tol;
}

Complex psi(Complex alpha, const Point3& x, const Tolerances& tol) {
  if (std::abs(alpha) >= 1.0)
    throw std::invalid_argument("psi: alpha must lie in the open unit disc");
  if (!in_gamma(x.sp(), tol))
    throw std::invalid_argument("psi: (s, p) is not in the closed symmetrized bidisc");
  const Complex den = 1.0 - x.s * alpha + x.p * alpha * alpha;
  if (std::abs(den) < 1e-14)
    throw std::runtime_error("psi: denominator vanished (numerical guard)");
  return x.a * (1.0 - std::norm(alpha)) / den;
}

double sup_abs_psi(const Point3& x, const Tolerances& tol) {
  if (!tol.is_valid())
    throw std::invalid_argument("sup_abs_psi: tolerances must be positive with grid counts >= 8");
  if (!in_gamma(x.sp(), tol))
    throw std::invalid_argument("sup_abs_psi: (s, p) is not in the closed symmetrized bidisc");

  const int radial = tol.alpha_grid.radial;
  const int angular = tol.alpha_grid.angular;
  const double dr0 = kAlphaRadiusCap / (radial - 1);
  const double dphi0 = 2.0 * M_PI / angular;

  // alpha = 0 once, then the full polar grid.
  double best = std::abs(x.a);
  double best_r = 0.0;
  double best_phi = 0.0;
  for (int i = 1; i < radial; ++i) {
    const double r = i * dr0;
    for (int j = 0; j < angular; ++j) {
      const double phi = j * dphi0;
      const double v = abs_psi_unchecked(r, phi, x);
      if (v > best) {
        best = v;
        best_r = r;
        best_phi = phi;
      }
    }
  }

  double dr = dr0;
  double dphi = dphi0;
  for (int pass = 0; pass < 3; ++pass) {
    dr *= 0.5;
    dphi *= 0.5;
    const double r0 = best_r;
    const double phi0 = best_phi;
    for (int di = -1; di <= 1; ++di) {
      for (int dj = -1; dj <= 1; ++dj) {
        if (di == 0 && dj == 0) continue;
        const double r = std::clamp(r0 + di * dr, 0.0, kAlphaRadiusCap);
        const double phi = phi0 + dj * dphi;
        const double v = abs_psi_unchecked(r, phi, x);
        if (v > best) {
          best = v;
          best_r = r;
          best_phi = phi;
        }
      }
    }
  }
  return best;
}

bool in_closed_penta(const Point3& x, const Tolerances& tol) {
  if (!in_gamma(x.sp(), tol)) return false;
  return sup_abs_psi(x, tol) <= 1.0 + tol.member_tol;
}

double k0_residual(const Point3& x) {
  const double flat = std::abs(std::norm(x.a) - (1.0 - 0.25 * std::norm(x.s)));
  return std::max(b_gamma_residual(x.sp()), flat);
}

double k1_residual(const Point3& x) {
  const double flat = std::norm(x.a) - (1.0 - 0.25 * std::norm(x.s));
  return std::max(b_gamma_residual(x.sp()), flat);
}

bool in_K0(const Point3& x, const Tolerances& tol) {
  return in_b_gamma(x.sp(), tol) &&
         std::abs(std::norm(x.a) - (1.0 - 0.25 * std::norm(x.s))) <= tol.boundary_tol;
}

bool in_K1(const Point3& x, const Tolerances& tol) {
  return in_b_gamma(x.sp(), tol) &&
         std::norm(x.a) <= 1.0 - 0.25 * std::norm(x.s) + tol.boundary_tol;
}

}  // namespace penta
