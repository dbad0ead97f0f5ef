#ifndef PENTA_TESTS_INSTANCES_HPP
#define PENTA_TESTS_INSTANCES_HPP

// Seeded generators for valid (and deliberately broken) inner-function
// data, shared by the unit tests and the acceptance suite. Valid
// instances come from closed-form seed families pushed around by the
// operations that provably preserve validity: precomposition with a
// Blaschke product, real scaling, and multiplication of the first
// coordinate by a Blaschke product.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "penta/inner.hpp"
#include "penta/oracle.hpp"

namespace penta::testing {

inline BlaschkeProduct random_blaschke(Sampler& rng, int max_degree, double max_modulus = 0.8) {
  const int deg = int(rng.uniform01() * (max_degree + 1));
  std::vector<Complex> zeros;
  for (int i = 0; i < deg; ++i)
    zeros.push_back(std::polar(max_modulus * rng.uniform01(), rng.uniform(0.0, 2.0 * M_PI)));
  return BlaschkeProduct(std::move(zeros), rng.uniform(0.0, 2.0 * M_PI));
}

// sum_i f_i P^i Q^(bound - i): the polynomial Q^bound f(P/Q).
inline Polynomial compose_scaled(const Polynomial& f, const Polynomial& p, const Polynomial& q,
                                 int bound) {
  Polynomial acc;
  Polynomial p_power = Polynomial::one();
  std::vector<Polynomial> q_powers(std::size_t(bound) + 1);
  q_powers[0] = Polynomial::one();
  for (int i = 1; i <= bound; ++i) q_powers[i] = q_powers[i - 1] * q;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    acc += f.coeffs()[i] * p_power * q_powers[std::size_t(bound) - i];
    p_power *= p;
  }
  return acc;
}

// x o m for a Blaschke product m of degree >= 1; the Blaschke part of x
// must already be empty (strip it first). The composed polynomials are
// rotated by e^{-i n theta / 2} so the numerator of x2 stays
// self-inversive when m carries a phase.
inline PentaInnerFunction precompose(const PentaInnerFunction& x, const BlaschkeProduct& m) {
  if (m.degree() < 1) throw std::invalid_argument("precompose: m must have degree >= 1");
  if (x.blaschke().degree() != 0)
    throw std::invalid_argument("precompose: strip the Blaschke part first");
  const RationalFunction mr = as_rational(m);
  const int n = x.degree_bound();
  const Complex fix = std::polar(1.0, -0.5 * n * m.theta());
  return make_penta_inner(BlaschkeProduct(),
                          fix * compose_scaled(x.n1(), mr.num(), mr.den(), n),
                          fix * compose_scaled(x.n2(), mr.num(), mr.den(), n),
                          fix * compose_scaled(x.den(), mr.num(), mr.den(), n),
                          n * m.degree());
}

inline PentaInnerFunction scale_triple(const PentaInnerFunction& x, double t) {
  const Complex c(t, 0.0);
  return make_penta_inner(x.blaschke(), x.n1() * c, x.n2() * c, x.den() * c, x.degree_bound());
}

// Constant function at a distinguished-boundary point with p = 1:
// a = sqrt(1 - s^2/4) e^{i eta} for real s.
inline PentaInnerFunction constant_k0_instance(Sampler& rng) {
  const double s = rng.uniform(-1.9, 1.9);
  const Complex a = std::polar(std::sqrt(1.0 - 0.25 * s * s), rng.uniform(0.0, 2.0 * M_PI));
  return make_penta_inner(BlaschkeProduct(), Polynomial{a}, Polynomial{Complex(s, 0.0)},
                          Polynomial::one(), 0);
}

inline PentaInnerFunction random_valid_instance(Sampler& rng, int max_n = 4) {
  PentaInnerFunction x = [&] {
    const double kind = rng.uniform01();
    if (kind < 0.34) return make_beta_example(rng.unit_complex());
    if (kind < 0.67) return make_B0B_example(random_blaschke(rng, 2, 0.7));
    return constant_k0_instance(rng);
  }();

  if (rng.uniform01() < 0.7 && x.degree_bound() >= 1) {
    const int max_factor = max_n / std::max(x.degree_bound(), 1);
    if (max_factor >= 1) {
      const int deg = 1 + int(rng.uniform01() * std::min(max_factor - 1, 1));
      std::vector<Complex> zeros;
      for (int i = 0; i < deg; ++i)
        zeros.push_back(std::polar(0.6 * rng.uniform01(), rng.uniform(0.0, 2.0 * M_PI)));
      x = precompose(divide_blaschke(x),
                     BlaschkeProduct(std::move(zeros), rng.uniform(0.0, 2.0 * M_PI)));
    }
  }

  if (rng.uniform01() < 0.5) {
    double t = rng.uniform(0.3, 3.0);
    if (rng.uniform01() < 0.5) t = -t;
    x = scale_triple(x, t);
  }

  if (rng.uniform01() < 0.6) x = multiply_blaschke(x, random_blaschke(rng, 3, 0.8));
  return x;
}

// Random valid Gamma-inner data: a self-inversive numerator scaled to
// keep |N| strictly below 2|D| on the circle, over a zero-free
// denominator with roots of modulus in [1.2, 3].
inline GammaInnerFunction random_gamma_inner(Sampler& rng, int max_n = 4) {
  const int n = int(rng.uniform01() * (max_n + 1));
  const int den_deg = int(rng.uniform01() * (n + 1));

  std::vector<Complex> den_roots;
  for (int i = 0; i < den_deg; ++i)
    den_roots.push_back(std::polar(rng.uniform(1.2, 3.0), rng.uniform(0.0, 2.0 * M_PI)));
  const Polynomial d = Polynomial::from_roots(
      den_roots, std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 2.0 * M_PI)));

  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Complex> m_coeffs;
    for (int i = 0; i <= n; ++i) m_coeffs.push_back(rng.gaussian_complex());
    const Polynomial m(std::move(m_coeffs));
    Polynomial num = m + conj_reflect(m, n);
    if (num.is_zero()) continue;

    double ratio = 0.0;
    for (int k = 0; k < 512; ++k) {
      const Complex lambda = std::polar(1.0, 2.0 * M_PI * k / 512);
      ratio = std::max(ratio, std::abs(num(lambda)) / std::abs(d(lambda)));
    }
    if (ratio <= 0.0) continue;
    num *= Complex(rng.uniform(0.3, 1.95) / ratio, 0.0);
    return make_gamma_inner(std::move(num), d, n);
  }
  throw std::runtime_error("random_gamma_inner: failed to draw a nonzero numerator");
}

enum class Tamper { kGammaPart, kDenominatorZero, kIdentity, kDegreeBound };

struct TamperedInstance {
  BlaschkeProduct blaschke;
  Polynomial n1, n2, d;
  int bound;
  Tamper kind;
};

// Breaks exactly one validation condition of a valid instance at the
// 1e-2 scale.
inline TamperedInstance tampered_instance(const PentaInnerFunction& x, Tamper kind,
                                          Sampler& rng) {
  TamperedInstance out{x.blaschke(), x.n1(), x.n2(), x.den(), x.degree_bound(), kind};
  switch (kind) {
    case Tamper::kGammaPart: {
      // break self-inversiveness of N2
      std::vector<Complex> c(out.n2.coeffs());
      c.resize(std::size_t(out.bound) + 1, Complex(0.0, 0.0));
      const std::size_t idx = std::size_t(rng.uniform01() * c.size());
      c[idx] += 1e-2 * std::max(out.n2.max_coeff_abs(), 1.0) *
                std::polar(1.0, rng.uniform(0.0, 2.0 * M_PI));
      out.n2 = Polynomial(std::move(c));
      break;
    }
    case Tamper::kDenominatorZero:
      // plant a denominator zero just inside the circle
      out.d *= Polynomial{Complex(1.0, 0.0), Complex(-1.0 / (1.0 - 1e-2), 0.0)};
      out.bound += 1;
      break;
    case Tamper::kIdentity:
      out.n1 *= Complex(1.0 + 1e-2, 0.0);
      break;
    case Tamper::kDegreeBound: {
      std::vector<Complex> c(out.n1.coeffs());
      c.resize(std::size_t(out.bound) + 2, Complex(0.0, 0.0));
      c.back() = 1e-2 * std::max(out.n1.max_coeff_abs(), 1.0);
      out.n1 = Polynomial(std::move(c));
      break;
    }
  }
  return out;
}

// True when the tampered data is caught, either by construction-time
// validation or by the sampling verifier.
inline bool tamper_detected(const TamperedInstance& t, const Tolerances& tol = {}) {
  try {
    make_penta_inner(t.blaschke, t.n1, t.n2, t.d, t.bound, tol);
  } catch (const ValidationError&) {
    return true;
  }
  const PentaInnerFunction x =
      PentaInnerFunction::unchecked(t.blaschke, t.n1, t.n2, t.d, t.bound);
  return !verify_penta_inner(x, 256, 64, tol).pass;
}

}  // namespace penta::testing

#endif  // PENTA_TESTS_INSTANCES_HPP
