#ifndef PENTA_CPOLY_HPP
#define PENTA_CPOLY_HPP

#include <complex>
#include <initializer_list>
#include <optional>
#include <vector>

namespace penta {

using Complex = std::complex<double>;

// Absolute distance under which two roots are considered equal
// (cancellation in reduce, mirror detection, denominator matching).
inline constexpr double kMatchTol = 1e-8;

// Residual bound scale for the companion-matrix root finder.
inline constexpr double kRootResidualTol = 1e-8;

// Largest degree accepted by roots().
inline constexpr int kMaxRootDegree = 64;

/**
 * Univariate polynomial with complex coefficients, stored lowest power
 * first. Exact trailing zeros are trimmed, so the representation is
 * canonical: a non-empty coefficient vector has a nonzero last element
 * and the zero polynomial is the empty vector. Values are immutable in
 * spirit; all operations return new polynomials.
 */
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Complex> coeffs);
  explicit Polynomial(std::vector<Complex> coeffs);

  static Polynomial one() { return Polynomial{Complex(1.0, 0.0)}; }

  // lead * prod (lambda - r) expanded to coefficient form.
  static Polynomial from_roots(const std::vector<Complex>& roots,
                               Complex lead = Complex(1.0, 0.0));

  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Degree of the zero polynomial is not a number; callers get nullopt
  // instead of a -1 that could leak into arithmetic.
  std::optional<int> degree() const noexcept;

  // True when degree() <= n; the zero polynomial satisfies every bound.
  bool degree_at_most(int n) const noexcept;

  Complex coeff(std::size_t i) const noexcept;
  Complex leading_coeff() const noexcept;
  double max_coeff_abs() const noexcept;

  // Horner evaluation; the zero polynomial evaluates to 0.
  Complex operator()(Complex lambda) const noexcept;

  Polynomial derivative() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(Complex scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) {
    lhs *= rhs;
    return lhs;
  }
  friend Polynomial operator*(Polynomial lhs, Complex scalar) {
    lhs *= scalar;
    return lhs;
  }
  friend Polynomial operator*(Complex scalar, Polynomial rhs) {
    rhs *= scalar;
    return rhs;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::vector<Complex> coeffs_;
};

// Largest |a_i - b_i| over the padded coefficient vectors.
double max_coeff_distance(const Polynomial& a, const Polynomial& b);

Complex eval(const Polynomial& p, Complex lambda);

// The degree-n conjugate reflection: the coefficient of lambda^(n-i) in
// the result is the conjugate of the coefficient of lambda^i in f.
// Involution on {deg <= n}; throws std::invalid_argument when deg(f) > n.
Polynomial conj_reflect(const Polynomial& f, int n);

// Conjugates every coefficient, the constant term included; involution.
Polynomial conj_coeffs(const Polynomial& f);

// All complex roots with multiplicity via companion-matrix eigenvalues
// plus one Newton polish. Throws for the zero or constant polynomial and
// for degree > kMaxRootDegree; throws std::runtime_error when the
// residual bound |p(r)| <= tol * (1+|r|)^deg * max|coeff| fails.
std::vector<Complex> roots(const Polynomial& p);

/**
 * Quotient of two polynomials. The denominator may not be the zero
 * polynomial. A RationalFunction is `reduced` when the numerator and
 * denominator are known to share no root; reduce() establishes that,
 * and as_reduced() asserts it for quotients that are coprime by
 * construction.
 */
class RationalFunction {
 public:
  RationalFunction(Polynomial num, Polynomial den);

  // For quotients coprime by construction; skips the root matching.
  static RationalFunction as_reduced(Polynomial num, Polynomial den);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  bool is_reduced() const noexcept { return reduced_; }

  Complex operator()(Complex lambda) const { return num_(lambda) / den_(lambda); }

 private:
  Polynomial num_;
  Polynomial den_;
  bool reduced_ = false;
};

// max(deg num, deg den); a zero numerator contributes no degree.
// Throws std::invalid_argument for unreduced input.
int rational_degree(const RationalFunction& r);

// Cancels numerator/denominator root pairs closer than match_tol and
// cross-checks the result against the input at 64 sample points.
// Throws std::runtime_error when the sampling check disagrees.
RationalFunction reduce(const RationalFunction& r, double match_tol = kMatchTol);

}  // namespace penta

#endif  // PENTA_CPOLY_HPP
