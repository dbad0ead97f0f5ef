#include "penta/inner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace penta {

namespace {

constexpr int kBoundaryGridSize = 256;

Complex circle_point(int k, int m) { return std::polar(1.0, 2.0 * M_PI * k / m); }

void require_in_closed_disc(Complex lambda, const char* who) {
  if (std::abs(lambda) > 1.0 + kClosedDiscSlack)
    throw std::invalid_argument(std::string(who) + ": lambda outside the closed unit disc");
}

double relative_scale(double a, double b) { return std::max({a, b, 1e-30}); }

}  // namespace

Point2 GammaInnerFunction::operator()(Complex lambda) const {
  require_in_closed_disc(lambda, "gamma_inner_eval");
  const Complex d = d_(lambda);
  return {n_(lambda) / d, d_reflect_(lambda) / d};
}

GammaInnerFunction make_gamma_inner(Polynomial n, Polynomial d, int bound,
                                    const Tolerances& tol) {
  if (bound < 0) throw std::invalid_argument("make_gamma_inner: negative degree bound");
  if (d.is_zero()) throw ValidationError("3", "denominator is the zero polynomial");

  if (!n.degree_at_most(bound) || !d.degree_at_most(bound))
    throw ValidationError("1", "condition (1) failed: a degree exceeds the bound " +
                                   std::to_string(bound));

  const double n_scale = relative_scale(n.max_coeff_abs(), 0.0);
  if (max_coeff_distance(conj_reflect(n, bound), n) > kCoeffTol * n_scale)
    throw ValidationError("2", "condition (2) failed: numerator is not self-inversive at degree " +
                                   std::to_string(bound));

  if (d.degree().value_or(0) >= 1) {
    for (const Complex& r : roots(d)) {
      if (std::abs(r) <= 1.0 + kMatchTol) {
        std::ostringstream os;
        os << "condition (3) failed: denominator root at (" << r.real() << ", " << r.imag()
           << ") lies in the closed unit disc";
        throw ValidationError("3", os.str());
      }
    }
  }

  for (int k = 0; k < kBoundaryGridSize; ++k) {
    const Complex lambda = circle_point(k, kBoundaryGridSize);
    if (std::abs(n(lambda)) > 2.0 * std::abs(d(lambda)) + tol.boundary_tol)
      throw ValidationError("4", "condition (4) failed: |N| exceeds 2|D| on the circle");
  }

  Polynomial d_reflect = conj_reflect(d, bound);
  return GammaInnerFunction(std::move(n), std::move(d), std::move(d_reflect), bound);
}

Point2 gamma_inner_eval(const GammaInnerFunction& h, Complex lambda) { return h(lambda); }

Point3 PentaInnerFunction::operator()(Complex lambda) const {
  require_in_closed_disc(lambda, "penta_inner_eval");
  const Complex d = d_(lambda);
  return {b_(lambda) * n1_(lambda) / d, n2_(lambda) / d, d_reflect_(lambda) / d};
}

PentaInnerFunction PentaInnerFunction::unchecked(BlaschkeProduct b, Polynomial n1,
                                                 Polynomial n2, Polynomial d, int bound) {
  Polynomial d_reflect =
      bound >= 0 && d.degree_at_most(bound) ? conj_reflect(d, bound) : Polynomial();
  return PentaInnerFunction(std::move(b), std::move(n1), std::move(n2), std::move(d),
                            std::move(d_reflect), bound);
}

double coefficient_identity_residual(const Polynomial& n1, const Polynomial& n2,
                                     const Polynomial& d, int bound) {
  if (bound < 0 || !n1.degree_at_most(bound) || !n2.degree_at_most(bound) ||
      !d.degree_at_most(bound))
    return std::numeric_limits<double>::infinity();
  const Polynomial lhs = n1 * conj_reflect(n1, bound);
  const Polynomial rhs =
      d * conj_reflect(d, bound) - 0.25 * (n2 * conj_reflect(n2, bound));
  return max_coeff_distance(lhs, rhs) / relative_scale(lhs.max_coeff_abs(), rhs.max_coeff_abs());
}

PentaInnerFunction make_penta_inner(BlaschkeProduct b, Polynomial n1, Polynomial n2,
                                    Polynomial d, int bound, const Tolerances& tol) {
  try {
    make_gamma_inner(n2, d, bound, tol);
  } catch (const ValidationError& e) {
    throw ValidationError("1", std::string("condition (1) failed: the pair (N2, D) is not a "
                                           "valid Gamma-inner representation: ") +
                                   e.what());
  }

  if (!n1.degree_at_most(bound))
    throw ValidationError("4", "condition (4) failed: deg(N1) exceeds the bound " +
                                   std::to_string(bound));

  if (n1.is_zero() || std::abs(n1.coeff(0)) <= kCoeffTol * n1.max_coeff_abs())
    throw ValidationError("N1-constant-term",
                          "N1 has a zero constant term; zeros of x1 at the origin must be "
                          "carried by the Blaschke part");

  const double residual = coefficient_identity_residual(n1, n2, d, bound);
  if (!(residual <= kCoeffTol)) {
    std::ostringstream os;
    os << "condition (3) failed: coefficient identity residual " << residual << " exceeds "
       << kCoeffTol;
    throw ValidationError("3", os.str());
  }

  Polynomial d_reflect = conj_reflect(d, bound);
  return PentaInnerFunction(std::move(b), std::move(n1), std::move(n2), std::move(d),
                            std::move(d_reflect), bound);
}

Point3 penta_inner_eval(const PentaInnerFunction& x, Complex lambda) { return x(lambda); }

VerificationReport verify_penta_inner(const PentaInnerFunction& x, int circle_samples,
                                      int disc_samples, const Tolerances& tol) {
  if (circle_samples < 16 || disc_samples < 16)
    throw std::invalid_argument("verify_penta_inner: sample counts must be at least 16");

  VerificationReport report;
  report.coeff_residual = coefficient_identity_residual(x.n1(), x.n2(), x.den(), x.degree_bound());

  for (int k = 0; k < circle_samples; ++k) {
    const Point3 v = x(circle_point(k, circle_samples));
    const double identity = std::abs(4.0 * std::norm(v.a) + std::norm(v.s) - 4.0);
    const double bgamma = b_gamma_residual(v.sp());
    report.circle_residual = std::max(report.circle_residual,
                                      std::isfinite(identity) ? identity
                                                              : std::numeric_limits<double>::infinity());
    report.bgamma_residual = std::max(report.bgamma_residual,
                                      std::isfinite(bgamma) ? bgamma
                                                            : std::numeric_limits<double>::infinity());
  }

  std::mt19937_64 rng(0x70656e7461626c6bull);
  int passed = 0;
  for (int k = 0; k < disc_samples; ++k) {
    const double u = double(rng() >> 11) * 0x1.0p-53;
    const double v = double(rng() >> 11) * 0x1.0p-53;
    const Complex lambda = std::polar(std::sqrt(u), 2.0 * M_PI * v);
    if (in_closed_penta(x(lambda), tol)) ++passed;
  }
  report.disc_pass_fraction = double(passed) / disc_samples;

  report.pass = report.circle_residual <= tol.boundary_tol &&
                report.bgamma_residual <= tol.boundary_tol &&
                report.coeff_residual <= tol.boundary_tol && report.disc_pass_fraction == 1.0;
  return report;
}

PentaInnerFunction multiply_blaschke(const PentaInnerFunction& x, const BlaschkeProduct& extra) {
  std::vector<Complex> zeros = x.blaschke().zeros();
  zeros.insert(zeros.end(), extra.zeros().begin(), extra.zeros().end());
  BlaschkeProduct combined(std::move(zeros), x.blaschke().theta() + extra.theta());
  return PentaInnerFunction(std::move(combined), x.n1_, x.n2_, x.d_, x.d_reflect_, x.bound_);
}

PentaInnerFunction divide_blaschke(const PentaInnerFunction& x) {
  return PentaInnerFunction(BlaschkeProduct(), x.n1_, x.n2_, x.d_, x.d_reflect_, x.bound_);
}

Complex check_denominator_compatibility(const RationalFunction& x1, const RationalFunction& x2,
                                        double match_tol) {
  if (!x1.is_reduced() || !x2.is_reduced())
    throw std::invalid_argument("check_denominator_compatibility: inputs must be reduced");

  std::vector<Complex> g1 = x1.den().degree().value_or(0) >= 1 ? roots(x1.den())
                                                               : std::vector<Complex>{};
  std::vector<Complex> g2 = x2.den().degree().value_or(0) >= 1 ? roots(x2.den())
                                                               : std::vector<Complex>{};

  for (const Complex& r : g2) {
    if (std::abs(r) <= 1.0 + kZeroModulusMargin)
      throw std::invalid_argument(
          "check_denominator_compatibility: x2 denominator has a root in the closed disc");
  }

  // A stripped x1 carries neither zeros at the origin nor mirror pairs.
  if (x1.num().degree().value_or(0) >= 1) {
    for (const Complex& a : roots(x1.num())) {
      if (std::abs(a) <= match_tol)
        throw std::invalid_argument(
            "check_denominator_compatibility: x1 still has a zero at the origin");
      if (std::abs(a) < 1.0 - kZeroModulusMargin) {
        const Complex mirror = 1.0 / std::conj(a);
        for (const Complex& d : g1)
          if (std::abs(mirror - d) <= match_tol)
            throw std::invalid_argument(
                "check_denominator_compatibility: x1 still carries a Blaschke factor");
      }
    }
  }

  std::vector<bool> used(g2.size(), false);
  for (const Complex& r : g1) {
    std::size_t best = g2.size();
    double best_dist = match_tol;
    for (std::size_t j = 0; j < g2.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(r - g2[j]);
      if (dist <= best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best == g2.size()) {
      std::ostringstream os;
      os << "denominator root multisets differ: no partner for root (" << r.real() << ", "
         << r.imag() << ")";
      throw std::runtime_error(os.str());
    }
    used[best] = true;
  }
  for (std::size_t j = 0; j < g2.size(); ++j) {
    if (!used[j]) {
      std::ostringstream os;
      os << "denominator root multisets differ: no partner for root (" << g2[j].real() << ", "
         << g2[j].imag() << ")";
      throw std::runtime_error(os.str());
    }
  }
  return x1.den().leading_coeff() / x2.den().leading_coeff();
}

std::pair<PentaInnerFunction, ScalingWitness> normalize_triple(const PentaInnerFunction& x) {
  double norm_sq = 0.0;
  for (const Complex& c : x.den().coeffs()) norm_sq += std::norm(c);
  const double inv_norm = 1.0 / std::sqrt(norm_sq);

  const Complex d0 = x.den().coeff(0) * inv_norm;
  double sign = 1.0;
  if (d0.real() < 0.0)
    sign = -1.0;
  else if (d0.real() == 0.0 && d0.imag() < 0.0)
    sign = -1.0;

  const double t = sign * inv_norm;
  const Complex scale(t, 0.0);
  return {PentaInnerFunction(x.blaschke(), x.n1() * scale, x.n2() * scale, x.den() * scale,
                             x.den_reflect() * scale, x.degree_bound()),
          ScalingWitness{t}};
}

PentaInnerFunction make_beta_example(Complex beta) {
  if (std::abs(std::abs(beta) - 1.0) > 1e-12)
    throw std::invalid_argument("make_beta_example: beta must be unimodular");
  const Complex conj_beta = std::conj(beta);
  return make_penta_inner(BlaschkeProduct(), Polynomial{beta / 2.0, -conj_beta / 2.0},
                          Polynomial{beta, conj_beta}, Polynomial::one(), 1);
}

PentaInnerFunction make_B0B_example(const BlaschkeProduct& b) {
  // D = e^{-i theta/2} prod (1 - conj(a) lambda) makes x3 = D~/D
  // reproduce B including its phase, and N1 = D turns x1 into exactly B.
  Polynomial d = Polynomial::one() * std::polar(1.0, -0.5 * b.theta());
  for (const Complex& a : b.zeros()) d *= Polynomial{Complex(1.0, 0.0), -std::conj(a)};
  return make_penta_inner(b, d, Polynomial(), d, b.degree());
}

}  // namespace penta
