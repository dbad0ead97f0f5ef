#ifndef PENTA_BLASCHKE_HPP
#define PENTA_BLASCHKE_HPP

#include <vector>

#include "penta/cpoly.hpp"

namespace penta {

// Zeros must stay strictly inside the disc by at least this margin.
inline constexpr double kZeroModulusMargin = 1e-12;

// Evaluation slack on the closed-disc precondition |lambda| <= 1.
inline constexpr double kClosedDiscSlack = 1e-9;

/**
 * Finite Blaschke product: a unimodular constant e^{i theta} times one
 * disc-automorphism factor (lambda - a)/(1 - conj(a) lambda) per zero.
 * The empty product is the constant e^{i theta}; degree = number of
 * zeros.
 */
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;

  // Validates |a| < 1 - kZeroModulusMargin for every zero and wraps the
  // phase into [0, 2pi).
  BlaschkeProduct(std::vector<Complex> zeros, double theta);

  const std::vector<Complex>& zeros() const noexcept { return zeros_; }
  double theta() const noexcept { return theta_; }
  int degree() const noexcept { return static_cast<int>(zeros_.size()); }

  // Product value; rejects lambda outside the closed disc (poles live
  // at the mirror points 1/conj(a)).
  Complex operator()(Complex lambda) const;

 private:
  std::vector<Complex> zeros_;
  double theta_ = 0.0;
};

Complex blaschke_eval(const BlaschkeProduct& b, Complex lambda);

// Expanded coefficient form: e^{i theta} prod (lambda - a_j) over
// prod (1 - conj(a_j) lambda); numerator and denominator are coprime by
// construction, so the result is reduced.
RationalFunction as_rational(const BlaschkeProduct& b);

struct BlaschkeFactorization {
  BlaschkeProduct blaschke;
  RationalFunction residual;
};

// Factors a reduced rational function r = B * residual where B collects
// every numerator root inside the disc that is either at the origin
// (factor lambda) or mirrored by a denominator root at 1/conj(a). The
// residual carries no Blaschke factor and is normalized to a positive
// real value at lambda = 0; all unimodular phase lives in B's theta.
// Requires the denominator of r to be zero-free on the closed disc.
BlaschkeFactorization extract_blaschke(const RationalFunction& r,
                                       double match_tol = kMatchTol);

}  // namespace penta

#endif  // PENTA_BLASCHKE_HPP
