#include "penta/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "penta/lift.hpp"

namespace penta {

namespace {

double largest_singular_value(const Matrix2& a) {
  // Eigenvalues of the 2x2 Hermitian matrix A*A in closed form.
  const Matrix2 h = a.adjoint() * a;
  const double tr = h.u11.real() + h.u22.real();
  const double det = (h.u11 * h.u22 - h.u12 * h.u21).real();
  const double disc = std::max(tr * tr - 4.0 * det, 0.0);
  return std::sqrt(std::max(0.5 * (tr + std::sqrt(disc)), 0.0));
}

Matrix2 scaled(const Matrix2& a, double f) {
  return {a.u11 * f, a.u12 * f, a.u21 * f, a.u22 * f};
}

void require_valid(const SamplerConfig& cfg) {
  if (!cfg.is_valid())
    throw std::invalid_argument("SamplerConfig: count must be >= 1 and margin in (0, 1)");
}

}  // namespace

double Sampler::gaussian() {
  // Box-Muller; u is kept away from 0 so the log is finite.
  double u = 0.0;
  do {
    u = uniform01();
  } while (u <= 0.0);
  const double v = uniform01();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
}

Matrix2 sample_contraction(Sampler& rng, double margin) {
  for (;;) {
    const Matrix2 g{rng.gaussian_complex(), rng.gaussian_complex(), rng.gaussian_complex(),
                    rng.gaussian_complex()};
    const double sigma = largest_singular_value(g);
    if (sigma < 1e-12) continue;
    const double target = rng.uniform(0.0, 1.0 - margin);
    return scaled(g, target / sigma);
  }
}

Matrix2 sample_unitary(Sampler& rng) {
  for (;;) {
    const Complex z11 = rng.gaussian_complex();
    const Complex z21 = rng.gaussian_complex();
    const Complex z12 = rng.gaussian_complex();
    const Complex z22 = rng.gaussian_complex();

    const double n1 = std::sqrt(std::norm(z11) + std::norm(z21));
    if (n1 < 1e-12) continue;
    const Complex q11 = z11 / n1;
    const Complex q21 = z21 / n1;

    const Complex inner = std::conj(q11) * z12 + std::conj(q21) * z22;
    const Complex w12 = z12 - inner * q11;
    const Complex w22 = z22 - inner * q21;
    const double n2 = std::sqrt(std::norm(w12) + std::norm(w22));
    if (n2 < 1e-12) continue;

    // Gram-Schmidt with positive normalizers is the positive-diagonal QR
    // of a Ginibre matrix, hence Haar.
    return {q11, w12 / n2, q21, w22 / n2};
  }
}

Point3 sample_k0_point(Sampler& rng) {
  const double c = rng.uniform(-1.0, 1.0);
  const double theta = rng.uniform(0.0, 2.0 * M_PI);
  const double eta = rng.uniform(0.0, 2.0 * M_PI);
  return {std::polar(std::sqrt(1.0 - c * c), eta), std::polar(2.0 * c, theta),
          std::polar(1.0, 2.0 * theta)};
}

std::vector<Matrix2> sample_contractions(const SamplerConfig& cfg) {
  require_valid(cfg);
  Sampler rng(cfg.seed);
  std::vector<Matrix2> out;
  out.reserve(cfg.count);
  for (int i = 0; i < cfg.count; ++i) out.push_back(sample_contraction(rng, cfg.contraction_margin));
  return out;
}

std::vector<Matrix2> sample_unitaries(const SamplerConfig& cfg) {
  require_valid(cfg);
  Sampler rng(cfg.seed);
  std::vector<Matrix2> out;
  out.reserve(cfg.count);
  for (int i = 0; i < cfg.count; ++i) out.push_back(sample_unitary(rng));
  return out;
}

std::vector<Point3> sample_k0_points(const SamplerConfig& cfg) {
  require_valid(cfg);
  Sampler rng(cfg.seed);
  std::vector<Point3> out;
  out.reserve(cfg.count);
  for (int i = 0; i < cfg.count; ++i) out.push_back(sample_k0_point(rng));
  return out;
}

AuditReport audit(const SamplerConfig& cfg, const Tolerances& tol) {
  require_valid(cfg);
  AuditReport report;
  report.seed = cfg.seed;

  {
    CampaignReport c{"contractions-in-penta", cfg.count, 0, 0.0};
    Sampler rng = Sampler::substream(cfg.seed, 0);
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < cfg.count; ++i) {
      const Point3 x = pi_map(sample_contraction(rng, cfg.contraction_margin));
      if (in_closed_penta(x, tol)) ++c.pass;
      worst = std::max(worst, sup_abs_psi(x, tol) - 1.0);
    }
    c.worst_residual = worst;
    report.campaigns.push_back(std::move(c));
  }

  {
    CampaignReport c{"unitaries-in-k1", cfg.count, 0, 0.0};
    Sampler rng = Sampler::substream(cfg.seed, 1);
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < cfg.count; ++i) {
      const Point3 x = pi_map(sample_unitary(rng));
      if (in_K1(x, tol)) ++c.pass;
      worst = std::max(worst, k1_residual(x));
    }
    c.worst_residual = worst;
    report.campaigns.push_back(std::move(c));
  }

  {
    CampaignReport c{"k0-lift-roundtrip", cfg.count, 0, 0.0};
    Sampler rng = Sampler::substream(cfg.seed, 2);
    double worst = 0.0;
    for (int i = 0; i < cfg.count; ++i) {
      const Point3 x = sample_k0_point(rng);
      const Point3 back = project_from_unitary(lift_to_unitary(x, tol).unitary, tol);
      const double residual = std::max(
          {std::abs(back.a - x.a), std::abs(back.s - x.s), std::abs(back.p - x.p)});
      if (residual <= 1e-9) ++c.pass;
      worst = std::max(worst, residual);
    }
    c.worst_residual = worst;
    report.campaigns.push_back(std::move(c));
  }

  {
    CampaignReport c{"equal-diagonal-project", cfg.count, 0, 0.0};
    Sampler rng = Sampler::substream(cfg.seed, 3);
    double worst = 0.0;
    for (int i = 0; i < cfg.count; ++i) {
      const Matrix2 u = lift_to_unitary(sample_k0_point(rng), tol).unitary;
      const Point3 x = project_from_unitary(u, tol);
      if (in_K0(x, tol)) ++c.pass;
      worst = std::max(worst, k0_residual(x));
    }
    c.worst_residual = worst;
    report.campaigns.push_back(std::move(c));
  }

  return report;
}

}  // namespace penta
