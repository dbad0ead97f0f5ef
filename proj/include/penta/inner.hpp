#ifndef PENTA_INNER_HPP
#define PENTA_INNER_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "penta/blaschke.hpp"
#include "penta/domains.hpp"

namespace penta {

// Relative slack for coefficient-level identities (self-inversiveness
// and the squared-modulus identity), measured against the largest
// coefficient magnitude involved.
inline constexpr double kCoeffTol = 1e-9;

/**
 * Thrown when construction data violates one of the numbered validation
 * conditions; condition() carries the number ("1".."4", or
 * "N1-constant-term" for the numerator normalization).
 */
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string condition, const std::string& message)
      : std::runtime_error(message), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/**
 * Rational function h = (s, p) of the disc into the closed symmetrized
 * bidisc that maps the circle into its distinguished boundary,
 * represented by the polynomial pair s = N/D, p = D~/D where D~ is the
 * degree-n conjugate reflection of D. Valid data satisfies
 *   (1) deg(N), deg(D) <= n,
 *   (2) N is self-inversive at degree n,
 *   (3) D has no zero in the closed unit disc,
 *   (4) |N| <= 2|D| on the circle.
 */
class GammaInnerFunction {
 public:
  const Polynomial& numerator() const noexcept { return n_; }
  const Polynomial& denominator() const noexcept { return d_; }
  const Polynomial& denominator_reflect() const noexcept { return d_reflect_; }
  int degree_bound() const noexcept { return bound_; }

  Point2 operator()(Complex lambda) const;

 private:
  GammaInnerFunction(Polynomial n, Polynomial d, Polynomial d_reflect, int bound)
      : n_(std::move(n)), d_(std::move(d)), d_reflect_(std::move(d_reflect)), bound_(bound) {}

  friend GammaInnerFunction make_gamma_inner(Polynomial n, Polynomial d, int bound,
                                             const Tolerances& tol);

  Polynomial n_;
  Polynomial d_;
  Polynomial d_reflect_;
  int bound_;
};

// Validates conditions (1)-(4) and returns the function; throws
// ValidationError naming the violated condition.
GammaInnerFunction make_gamma_inner(Polynomial n, Polynomial d, int bound,
                                    const Tolerances& tol = {});

// (N(lambda)/D(lambda), D~(lambda)/D(lambda)); on the circle the value
// lies on the distinguished boundary. Rejects lambda outside the closed
// disc.
Point2 gamma_inner_eval(const GammaInnerFunction& h, Complex lambda);

/**
 * Rational function x = (x1, x2, x3) of the disc into the closed
 * pentablock mapping the circle into its distinguished boundary:
 *   x1 = B N1/D,  x2 = N2/D,  x3 = D~/D
 * with B a finite Blaschke product. Valid data satisfies
 *   (1) (N2, D, n) is a valid GammaInnerFunction,
 *   (3) N1 N1~ = D D~ - (1/4) N2 N2~ coefficientwise (the circle
 *       identity |N1|^2 = |D|^2 - |N2|^2/4 in polynomial form),
 *   (4) deg(N1) <= n,
 * and N1(0) != 0 so that every zero of x1 at the origin lives in B.
 */
class PentaInnerFunction {
 public:
  const BlaschkeProduct& blaschke() const noexcept { return b_; }
  const Polynomial& n1() const noexcept { return n1_; }
  const Polynomial& n2() const noexcept { return n2_; }
  const Polynomial& den() const noexcept { return d_; }
  const Polynomial& den_reflect() const noexcept { return d_reflect_; }
  int degree_bound() const noexcept { return bound_; }

  Point3 operator()(Complex lambda) const;

  // Bypasses validation; for verification drivers that must accept and
  // then report on bad data.
  static PentaInnerFunction unchecked(BlaschkeProduct b, Polynomial n1, Polynomial n2,
                                      Polynomial d, int bound);

 private:
  PentaInnerFunction(BlaschkeProduct b, Polynomial n1, Polynomial n2, Polynomial d,
                     Polynomial d_reflect, int bound)
      : b_(std::move(b)),
        n1_(std::move(n1)),
        n2_(std::move(n2)),
        d_(std::move(d)),
        d_reflect_(std::move(d_reflect)),
        bound_(bound) {}

  friend PentaInnerFunction make_penta_inner(BlaschkeProduct b, Polynomial n1, Polynomial n2,
                                             Polynomial d, int bound, const Tolerances& tol);
  friend PentaInnerFunction multiply_blaschke(const PentaInnerFunction& x,
                                              const BlaschkeProduct& extra);
  friend PentaInnerFunction divide_blaschke(const PentaInnerFunction& x);
  friend std::pair<PentaInnerFunction, struct ScalingWitness> normalize_triple(
      const PentaInnerFunction& x);

  BlaschkeProduct b_;
  Polynomial n1_;
  Polynomial n2_;
  Polynomial d_;
  Polynomial d_reflect_;
  int bound_;
};

PentaInnerFunction make_penta_inner(BlaschkeProduct b, Polynomial n1, Polynomial n2,
                                    Polynomial d, int bound, const Tolerances& tol = {});

Point3 penta_inner_eval(const PentaInnerFunction& x, Complex lambda);

// Relative residual of N1 N1~ = D D~ - (1/4) N2 N2~; +inf when a degree
// exceeds the bound and the reflections cannot be formed.
double coefficient_identity_residual(const Polynomial& n1, const Polynomial& n2,
                                     const Polynomial& d, int bound);

struct VerificationReport {
  double circle_residual = 0.0;     // max |4|x1|^2 + |x2|^2 - 4| on the circle
  double bgamma_residual = 0.0;     // max b-Gamma residual of (x2, x3) on the circle
  double disc_pass_fraction = 0.0;  // fraction of interior samples inside the closed pentablock
  double coeff_residual = 0.0;      // relative coefficient-identity residual
  bool pass = false;
};

// Samples the defining boundary identity on the circle and membership on
// the open disc. Requires both sample counts >= 16. Failures are data in
// the report, never exceptions.
VerificationReport verify_penta_inner(const PentaInnerFunction& x, int circle_samples,
                                      int disc_samples, const Tolerances& tol = {});

// x1 -> B x1 leaves the boundary identity untouched; zeros concatenate
// and phases add.
PentaInnerFunction multiply_blaschke(const PentaInnerFunction& x, const BlaschkeProduct& extra);

// Strips the Blaschke part entirely (empty product, phase 0).
PentaInnerFunction divide_blaschke(const PentaInnerFunction& x);

// Matches the denominator root multisets of two reduced rational
// functions and returns the leading-coefficient ratio den(x1)/den(x2).
// x1 must already be free of Blaschke factors; throws with the first
// unmatched root when the multisets differ.
Complex check_denominator_compatibility(const RationalFunction& x1, const RationalFunction& x2,
                                        double match_tol = kMatchTol);

/// Real scale factor relating two representations of the same function.
struct ScalingWitness {
  double t;
};

// Canonical representative of the real-scalar class: scales (N1, N2, D)
// so the Euclidean norm of D's coefficients is 1 and D(0) has positive
// real part (tie-break: positive imaginary part). Returns the applied t.
std::pair<PentaInnerFunction, ScalingWitness> normalize_triple(const PentaInnerFunction& x);

// The one-parameter family ((beta - conj(beta) lambda)/2,
// beta + conj(beta) lambda, lambda) for unimodular beta.
PentaInnerFunction make_beta_example(Complex beta);

// The family (B, 0, B) for a finite Blaschke product B.
PentaInnerFunction make_B0B_example(const BlaschkeProduct& b);

}  // namespace penta

#endif  // PENTA_INNER_HPP
