#include "penta/lift.hpp"

#include <cmath>
#include <stdexcept>

namespace penta {

namespace {

constexpr double kConditioningBand = 1e-6;

void require_k0(const Point3& x, const Tolerances& tol) {
  if (std::abs(std::abs(x.p) - 1.0) > tol.boundary_tol)
    throw std::invalid_argument("lift: point is not in K0 (|p| = 1 fails)");
  if (std::abs(x.s - std::conj(x.s) * x.p) > tol.boundary_tol)
    throw std::invalid_argument("lift: point is not in K0 (s = conj(s) p fails)");
  if (std::abs(x.s) > 2.0 + tol.boundary_tol)
    throw std::invalid_argument("lift: point is not in K0 (|s| <= 2 fails)");
  if (std::abs(std::norm(x.a) - (1.0 - 0.25 * std::norm(x.s))) > tol.boundary_tol)
    throw std::invalid_argument("lift: point is not in K0 (|a|^2 = 1 - |s|^2/4 fails)");
}

}  // namespace

LiftResult lift_to_unitary(const Point3& x, const Tolerances& tol) {
  require_k0(x, tol);

  const double abs_a = std::abs(x.a);
  if (abs_a <= tol.boundary_tol) {
    if (std::abs(x.s * x.s - 4.0 * x.p) > tol.boundary_tol)
      throw std::invalid_argument("lift: a = 0 branch requires s^2 = 4p");
    const Complex half_s = x.s / 2.0;
    return {{half_s, Complex(0.0, 0.0), Complex(0.0, 0.0), half_s}, std::nullopt};
  }

  const Complex half_s = x.s / 2.0;
  const Matrix2 u{half_s, (x.s * x.s - 4.0 * x.p) / (4.0 * x.a), x.a, half_s};

  if (abs_a < kConditioningBand) {
    if (!is_unitary(u, 10.0 * tol.boundary_tol))
      throw std::runtime_error(
          "lift: result failed the unitarity recheck near the a = 0 branch cut");
    return {u, std::string("|a| is close to the branch cut; the off-diagonal entry "
                           "(s^2 - 4p)/(4a) is ill-conditioned")};
  }
  return {u, std::nullopt};
}

Point3 project_from_unitary(const Matrix2& u, const Tolerances& tol) {
  if (!is_unitary(u, tol.boundary_tol))
    throw std::invalid_argument("project: matrix is not unitary within tolerance");
  if (std::abs(u.u11 - u.u22) > tol.boundary_tol)
    throw std::invalid_argument("project: diagonal entries differ");
  return pi_map(u);
}

}  // namespace penta
