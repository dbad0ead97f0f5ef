#ifndef PENTA_DOMAINS_HPP
#define PENTA_DOMAINS_HPP

#include <utility>

#include "penta/cpoly.hpp"

namespace penta {

/// 2x2 complex matrix, row-major.
struct Matrix2 {
  Complex u11, u12, u21, u22;

  static Matrix2 identity() {
    return {Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)};
  }

  Matrix2 adjoint() const {
    return {std::conj(u11), std::conj(u21), std::conj(u12), std::conj(u22)};
  }

  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return {a.u11 * b.u11 + a.u12 * b.u21, a.u11 * b.u12 + a.u12 * b.u22,
            a.u21 * b.u11 + a.u22 * b.u21, a.u21 * b.u12 + a.u22 * b.u22};
  }

  Complex trace() const { return u11 + u22; }
  Complex det() const { return u11 * u22 - u12 * u21; }
};

// Largest entrywise absolute difference.
double max_abs_diff(const Matrix2& a, const Matrix2& b);

/// Candidate point (s, p) of the symmetrized bidisc or its boundary.
struct Point2 {
  Complex s, p;
};

/// Candidate point (a, s, p) of the closed pentablock or its boundary sets.
struct Point3 {
  Complex a, s, p;

  Point2 sp() const { return {s, p}; }
};

struct AlphaGrid {
  int radial = 32;
  int angular = 64;
};

/**
 * Numeric policy for the membership predicates. Boundary identities are
 * algebraic and get the tight slack; the alpha sweep is approximate and
 * gets the looser one.
 */
struct Tolerances {
  double boundary_tol = 1e-9;
  double member_tol = 1e-7;
  AlphaGrid alpha_grid{};

  bool is_valid() const {
    return boundary_tol > 0.0 && member_tol > 0.0 && alpha_grid.radial >= 8 &&
           alpha_grid.angular >= 8;
  }
};

// A = [a_ij] |-> (a21, tr A, det A).
Point3 pi_map(const Matrix2& a);

// max-abs-entry norm of U*U - I.
double unitarity_residual(const Matrix2& u);
bool is_unitary(const Matrix2& u, double tol);

// Roots of z^2 - s z + p, the eigenvalues of any matrix with trace s
// and determinant p.
std::pair<Complex, Complex> gamma_quadratic_roots(const Point2& q);

// Closed test: both roots in the closed disc (slack member_tol);
// strict = true tests the open symmetrized bidisc instead.
bool in_gamma(const Point2& q, const Tolerances& tol, bool strict = false);

// max(|s| - 2, ||p| - 1|, |s - conj(s) p|); <= 0 means exactly on the
// distinguished boundary of the symmetrized bidisc.
double b_gamma_residual(const Point2& q);
bool in_b_gamma(const Point2& q, const Tolerances& tol);

// a (1 - |alpha|^2) / (1 - s alpha + p alpha^2). Requires |alpha| < 1
// and (s, p) in the closed symmetrized bidisc, which keeps the
// denominator away from zero; a guard rejects |denominator| < 1e-14.
Complex psi(Complex alpha, const Point3& x, const Tolerances& tol = {});

// Grid sweep of |psi| over a polar alpha grid with three local halving
// refinements around the maximizer. Requires (s, p) in Gamma.
double sup_abs_psi(const Point3& x, const Tolerances& tol = {});

// Closed-pentablock membership: (s, p) in Gamma and sup over the alpha
// grid of |psi| <= 1 + member_tol.
bool in_closed_penta(const Point3& x, const Tolerances& tol = {});

// Distinguished-boundary residuals: K0 pins |a|^2 = 1 - |s|^2/4 over
// b Gamma; K1 relaxes the equality to <=.
double k0_residual(const Point3& x);
double k1_residual(const Point3& x);
bool in_K0(const Point3& x, const Tolerances& tol = {});
bool in_K1(const Point3& x, const Tolerances& tol = {});

}  // namespace penta

#endif  // PENTA_DOMAINS_HPP
