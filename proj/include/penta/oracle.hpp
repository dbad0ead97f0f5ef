#ifndef PENTA_ORACLE_HPP
#define PENTA_ORACLE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "penta/domains.hpp"

namespace penta {

/**
 * Deterministic random stream. The generator identity is part of the
 * external contract: a standard mt19937_64 engine, uniform doubles taken
 * as (draw >> 11) * 2^-53, Gaussians by Box-Muller. Campaign k of an
 * audit draws from the substream seeded with
 * seed XOR ((k + 1) * 0x9E3779B97F4A7C15). No standard-library
 * distribution objects are involved, so streams are reproducible across
 * toolchains.
 */
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  static Sampler substream(std::uint64_t seed, int k) {
    return Sampler(seed ^ (0x9E3779B97F4A7C15ull * (std::uint64_t(k) + 1)));
  }

  double uniform01() { return double(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double gaussian();
  Complex gaussian_complex() { return {gaussian(), gaussian()}; }
  Complex unit_complex() { return std::polar(1.0, uniform(0.0, 2.0 * M_PI)); }

 private:
  std::mt19937_64 engine_;
};

struct SamplerConfig {
  std::uint64_t seed = 0;
  int count = 1;
  double contraction_margin = 0.01;  // largest allowed singular value = 1 - margin

  bool is_valid() const {
    return count >= 1 && contraction_margin > 0.0 && contraction_margin < 1.0;
  }
};

// Gaussian 2x2 matrix rescaled so its largest singular value equals a
// uniform draw in (0, 1 - margin).
Matrix2 sample_contraction(Sampler& rng, double margin);

// Haar-distributed unitary: Gram-Schmidt of a Gaussian matrix with
// positive normalizers.
Matrix2 sample_unitary(Sampler& rng);

// (sqrt(1-c^2) e^{i eta}, 2c e^{i theta}, e^{2i theta}) with c uniform
// in [-1, 1] and eta, theta uniform in [0, 2pi); always lands in K0.
Point3 sample_k0_point(Sampler& rng);

std::vector<Matrix2> sample_contractions(const SamplerConfig& cfg);
std::vector<Matrix2> sample_unitaries(const SamplerConfig& cfg);
std::vector<Point3> sample_k0_points(const SamplerConfig& cfg);

struct CampaignReport {
  std::string name;
  int count = 0;
  int pass = 0;
  double worst_residual = 0.0;
};

struct AuditReport {
  std::vector<CampaignReport> campaigns;
  std::uint64_t seed = 0;

  bool all_passed() const {
    for (const auto& c : campaigns)
      if (c.pass != c.count) return false;
    return true;
  }
};

// Four brute-force campaigns grounding the analytic predicates in the
// matrix-image definitions: contractions land in the closed pentablock,
// unitaries in K1, K0 points survive the lift round trip, and lifted
// equal-diagonal unitaries project back into K0.
AuditReport audit(const SamplerConfig& cfg, const Tolerances& tol = {});

}  // namespace penta

#endif  // PENTA_ORACLE_HPP
