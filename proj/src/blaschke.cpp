#include "penta/blaschke.hpp"

#include <cmath>
#include <stdexcept>

namespace penta {

namespace {

double wrap_phase(double theta) {
  const double two_pi = 2.0 * M_PI;
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  if (t >= two_pi) t = 0.0;
  return t;
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<Complex> zeros, double theta)
    : zeros_(std::move(zeros)), theta_(wrap_phase(theta)) {
  for (const Complex& a : zeros_) {
    if (!(std::abs(a) < 1.0 - kZeroModulusMargin))
      throw std::invalid_argument("BlaschkeProduct: zero is not strictly inside the unit disc");
  }
}

Complex BlaschkeProduct::operator()(Complex lambda) const {
  if (std::abs(lambda) > 1.0 + kClosedDiscSlack)
    throw std::invalid_argument("BlaschkeProduct: evaluation outside the closed unit disc");
  Complex v = std::polar(1.0, theta_);
  for (const Complex& a : zeros_) v *= (lambda - a) / (1.0 - std::conj(a) * lambda);
  return v;
}

Complex blaschke_eval(const BlaschkeProduct& b, Complex lambda) { return b(lambda); }

RationalFunction as_rational(const BlaschkeProduct& b) {
  Polynomial num = Polynomial::one() * std::polar(1.0, b.theta());
  Polynomial den = Polynomial::one();
  for (const Complex& a : b.zeros()) {
    num *= Polynomial{-a, Complex(1.0, 0.0)};
    den *= Polynomial{Complex(1.0, 0.0), -std::conj(a)};
  }
  return RationalFunction::as_reduced(std::move(num), std::move(den));
}

BlaschkeFactorization extract_blaschke(const RationalFunction& r, double match_tol) {
  if (!r.is_reduced())
    throw std::invalid_argument("extract_blaschke: input is not reduced");
  if (r.num().is_zero())
    throw std::invalid_argument("extract_blaschke: zero numerator has no factorization");

  std::vector<Complex> den_roots;
  if (r.den().degree().value_or(0) >= 1) den_roots = roots(r.den());
  for (const Complex& d : den_roots) {
    if (std::abs(d) <= 1.0 + kZeroModulusMargin)
      throw std::invalid_argument("extract_blaschke: denominator has a root in the closed disc");
  }

  std::vector<Complex> num_roots;
  if (r.num().degree().value_or(0) >= 1) num_roots = roots(r.num());

  std::vector<Complex> blaschke_zeros;
  std::vector<Complex> residual_num_roots;
  std::vector<bool> den_used(den_roots.size(), false);

  for (const Complex& a : num_roots) {
    if (std::abs(a) <= match_tol) {
      blaschke_zeros.push_back(Complex(0.0, 0.0));
      continue;
    }
    if (std::abs(a) < 1.0 - kZeroModulusMargin) {
      const Complex mirror = 1.0 / std::conj(a);
      std::size_t best = den_roots.size();
      double best_dist = match_tol;
      for (std::size_t j = 0; j < den_roots.size(); ++j) {
        if (den_used[j]) continue;
        const double d = std::abs(mirror - den_roots[j]);
        if (d <= best_dist) {
          best_dist = d;
          best = j;
        }
      }
      if (best < den_roots.size()) {
        den_used[best] = true;
        blaschke_zeros.push_back(a);
        continue;
      }
    }
    residual_num_roots.push_back(a);
  }

  std::vector<Complex> residual_den_roots;
  for (std::size_t j = 0; j < den_roots.size(); ++j)
    if (!den_used[j]) residual_den_roots.push_back(den_roots[j]);

  // r / B0 = C * (monic residual ratio), where the consumed denominator
  // factors collapse to the constant prod(-conj(a)) per nonzero zero.
  Complex scale = r.num().leading_coeff() / r.den().leading_coeff();
  for (const Complex& a : blaschke_zeros)
    if (a != Complex(0.0, 0.0)) scale *= -std::conj(a);

  Complex residual_at_zero = scale;
  for (const Complex& b : residual_num_roots) residual_at_zero *= -b;
  for (const Complex& d : residual_den_roots) residual_at_zero /= -d;

  const double theta = std::abs(residual_at_zero) > 0.0 ? std::arg(residual_at_zero) : 0.0;
  const Complex rotated = scale * std::polar(1.0, -theta);

  BlaschkeFactorization out{
      BlaschkeProduct(std::move(blaschke_zeros), theta),
      RationalFunction::as_reduced(Polynomial::from_roots(residual_num_roots, rotated),
                                   Polynomial::from_roots(residual_den_roots))};
  return out;
}

}  // namespace penta
