#include <doctest.h>

#include <cmath>
#include <random>

#include "penta/blaschke.hpp"

using namespace penta;

namespace {

BlaschkeProduct random_product(std::mt19937_64& rng, int max_deg) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Complex> zeros;
  const int deg = int(rng() % (max_deg + 1));
  for (int i = 0; i < deg; ++i) zeros.push_back(std::polar(0.85 * u(rng), 2 * M_PI * u(rng)));
  return BlaschkeProduct(std::move(zeros), 2 * M_PI * u(rng));
}

}  // namespace

TEST_SUITE("blaschke") {

TEST_CASE("construction validates zeros") {
  CHECK_NOTHROW(BlaschkeProduct({Complex(0.5, 0.3)}, 0.1));
  CHECK_THROWS_AS(BlaschkeProduct({Complex(1.0, 0.0)}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(BlaschkeProduct({Complex(0.8, 0.8)}, 0.0), std::invalid_argument);

  // phase wraps into [0, 2pi)
  CHECK(BlaschkeProduct({}, -M_PI).theta() == doctest::Approx(M_PI));
  CHECK(BlaschkeProduct({}, 5 * M_PI).theta() == doctest::Approx(M_PI));
}

TEST_CASE("evaluation examples") {
  CHECK(std::abs(blaschke_eval(BlaschkeProduct(), Complex(0.3, 0.1)) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(blaschke_eval(BlaschkeProduct({Complex(0, 0)}, 0.0), Complex(0, 1)) -
                 Complex(0, 1)) < 1e-15);
  CHECK(std::abs(blaschke_eval(BlaschkeProduct({Complex(0.5, 0)}, 0.0), Complex(1, 0)) -
                 Complex(1, 0)) < 1e-15);

  CHECK_THROWS_AS(blaschke_eval(BlaschkeProduct(), Complex(1.5, 0)), std::invalid_argument);
}

TEST_CASE("unimodular on the circle, contractive inside") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const BlaschkeProduct b = random_product(rng, 4);
    for (int k = 0; k < 256; ++k) {
      const Complex lambda = std::polar(1.0, 2 * M_PI * k / 256);
      CHECK(std::abs(std::abs(b(lambda)) - 1.0) <= 1e-10);
    }
    for (int k = 0; k < 32; ++k) {
      const Complex lambda = std::polar(u(rng), 2 * M_PI * u(rng));
      CHECK(std::abs(b(lambda)) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("as_rational") {
  RationalFunction r = as_rational(BlaschkeProduct({}, M_PI));
  CHECK(std::abs(r.num().coeff(0) - Complex(-1, 0)) < 1e-15);
  CHECK(max_coeff_distance(r.den(), Polynomial::one()) == 0.0);

  r = as_rational(BlaschkeProduct({Complex(0, 0)}, 0.0));
  CHECK(max_coeff_distance(r.num(), Polynomial{Complex(0, 0), Complex(1, 0)}) < 1e-15);
  CHECK(max_coeff_distance(r.den(), Polynomial::one()) < 1e-15);

  // zeros 1/2, -1/2: (lambda^2 - 1/4) / (1 - lambda^2/4)
  r = as_rational(BlaschkeProduct({Complex(0.5, 0), Complex(-0.5, 0)}, 0.0));
  CHECK(max_coeff_distance(r.num(),
                           Polynomial{Complex(-0.25, 0), Complex(0, 0), Complex(1, 0)}) < 1e-15);
  CHECK(max_coeff_distance(r.den(),
                           Polynomial{Complex(1, 0), Complex(0, 0), Complex(-0.25, 0)}) < 1e-15);

  SUBCASE("agrees with direct evaluation and adds degree") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      const BlaschkeProduct b = random_product(rng, 4);
      const RationalFunction rat = as_rational(b);
      CHECK(rat.is_reduced());
      CHECK(rational_degree(rat) == b.degree());
      for (int k = 0; k < 64; ++k) {
        const Complex lambda = std::polar(u(rng), 2 * M_PI * u(rng));
        CHECK(std::abs(rat(lambda) - b(lambda)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("extract_blaschke examples") {
  // lambda/1 is itself a Blaschke factor
  auto f = extract_blaschke(
      RationalFunction::as_reduced(Polynomial{Complex(0, 0), Complex(1, 0)}, Polynomial::one()));
  REQUIRE(f.blaschke.degree() == 1);
  CHECK(std::abs(f.blaschke.zeros()[0]) < 1e-12);
  CHECK(std::abs(f.residual(Complex(0.2, 0.1)) - Complex(1, 0)) < 1e-12);

  // no numerator roots: nothing to extract, function unchanged
  const RationalFunction pole_only = RationalFunction::as_reduced(
      Polynomial::one(), Polynomial{Complex(1, 0), Complex(-0.5, 0)});
  f = extract_blaschke(pole_only);
  CHECK(f.blaschke.degree() == 0);
  CHECK(f.blaschke.theta() == doctest::Approx(0.0));
  for (const Complex lambda : {Complex(0, 0), Complex(0.4, 0.2), Complex(-0.3, 0.6)})
    CHECK(std::abs(f.residual(lambda) - pole_only(lambda)) < 1e-12);

  // mirror pair (lambda - 1/2)/(1 - lambda/2)
  f = extract_blaschke(RationalFunction::as_reduced(
      Polynomial{Complex(-0.5, 0), Complex(1, 0)}, Polynomial{Complex(1, 0), Complex(-0.5, 0)}));
  REQUIRE(f.blaschke.degree() == 1);
  CHECK(std::abs(f.blaschke.zeros()[0] - Complex(0.5, 0)) < 1e-10);
  CHECK(std::abs(f.residual(Complex(0, 0)) - Complex(1, 0)) < 1e-10);

  CHECK_THROWS_AS(extract_blaschke(RationalFunction::as_reduced(
                      Polynomial::one(), Polynomial{Complex(0.5, 0), Complex(1, 0)})),
                  std::invalid_argument);
}

TEST_CASE("extract_blaschke round trip") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const BlaschkeProduct b = random_product(rng, 3);

    // residual with zeros and poles outside the closed disc
    const Polynomial res_num = Polynomial::from_roots(
        {std::polar(1.4 + u(rng), 2 * M_PI * u(rng))}, Complex(0.5 + u(rng), u(rng)));
    const Polynomial res_den =
        Polynomial::from_roots({std::polar(1.6 + u(rng), 2 * M_PI * u(rng))});

    const RationalFunction brat = as_rational(b);
    const RationalFunction input =
        reduce(RationalFunction(brat.num() * res_num, brat.den() * res_den));
    const auto f = extract_blaschke(input);

    CHECK(f.blaschke.degree() == b.degree());
    CHECK(f.residual(Complex(0, 0)).real() > 0.0);
    CHECK(std::abs(f.residual(Complex(0, 0)).imag()) <= 1e-9 * f.residual(Complex(0, 0)).real());

    for (int k = 0; k < 64; ++k) {
      const Complex lambda = std::polar(u(rng), 2 * M_PI * u(rng));
      const Complex recombined = f.blaschke(lambda) * f.residual(lambda);
      CHECK(std::abs(recombined - input(lambda)) <= 1e-8 * (1.0 + std::abs(input(lambda))));
    }
  }
}

}  // TEST_SUITE
