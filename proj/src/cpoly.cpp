#include "penta/cpoly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace penta {

namespace {

std::string poly_to_string(const Polynomial& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ", ";
    os << p.coeffs()[i].real() << (p.coeffs()[i].imag() < 0 ? "-" : "+")
       << std::abs(p.coeffs()[i].imag()) << "i";
  }
  os << "]";
  return os.str();
}

}  // namespace

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots, Complex lead) {
  std::vector<Complex> c{lead};
  for (const Complex& r : roots) {
    c.push_back(Complex(0.0, 0.0));
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
    c[0] *= -r;
  }
  return Polynomial(std::move(c));
}

std::optional<int> Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

bool Polynomial::degree_at_most(int n) const noexcept {
  return coeffs_.empty() || static_cast<int>(coeffs_.size()) - 1 <= n;
}

Complex Polynomial::coeff(std::size_t i) const noexcept {
  return i < coeffs_.size() ? coeffs_[i] : Complex(0.0, 0.0);
}

Complex Polynomial::leading_coeff() const noexcept {
  return coeffs_.empty() ? Complex(0.0, 0.0) : coeffs_.back();
}

double Polynomial::max_coeff_abs() const noexcept {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex Polynomial::operator()(Complex lambda) const noexcept {
  Complex v(0.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * lambda + *it;
  return v;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = double(i) * coeffs_[i];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (Complex& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Complex> prod(coeffs_.size() + rhs.coeffs_.size() - 1, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(Complex scalar) {
  if (scalar == Complex(0.0, 0.0)) {
    coeffs_.clear();
    return *this;
  }
  for (Complex& c : coeffs_) c *= scalar;
  return *this;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0, 0.0)) coeffs_.pop_back();
}

double max_coeff_distance(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a.coeff(i) - b.coeff(i)));
  return m;
}

Complex eval(const Polynomial& p, Complex lambda) { return p(lambda); }

Polynomial conj_reflect(const Polynomial& f, int n) {
  if (n < 0) throw std::invalid_argument("conj_reflect: negative degree bound");
  if (!f.degree_at_most(n))
    throw std::invalid_argument("conj_reflect: polynomial degree exceeds bound " +
                                std::to_string(n));
  std::vector<Complex> out(static_cast<std::size_t>(n) + 1, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    out[static_cast<std::size_t>(n) - i] = std::conj(f.coeffs()[i]);
  return Polynomial(std::move(out));
}

Polynomial conj_coeffs(const Polynomial& f) {
  std::vector<Complex> out(f.coeffs());
  for (Complex& c : out) c = std::conj(c);
  return Polynomial(std::move(out));
}

std::vector<Complex> roots(const Polynomial& p) {
  const auto deg = p.degree();
  if (!deg || *deg < 1)
    throw std::invalid_argument("roots: requires a nonconstant polynomial");
  if (*deg > kMaxRootDegree)
    throw std::invalid_argument("roots: degree " + std::to_string(*deg) +
                                " exceeds supported maximum " + std::to_string(kMaxRootDegree));

  const int n = *deg;
  const Complex lead = p.leading_coeff();

  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    out.push_back(-p.coeff(0) / lead);
  } else {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = Complex(1.0, 0.0);
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeff(static_cast<std::size_t>(i)) / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("roots: eigenvalue iteration failed for " + poly_to_string(p));
    for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i));
  }

  // One Newton step sharpens simple roots; skipped where p' is tiny
  // (clustered roots), where it would not help.
  const Polynomial dp = p.derivative();
  for (Complex& r : out) {
    const Complex d = dp(r);
    if (std::abs(d) > 1e-8 * std::max(1.0, p.max_coeff_abs())) {
      const Complex step = p(r) / d;
      if (std::abs(step) < 0.1 * (1.0 + std::abs(r))) r -= step;
    }
  }

  const double scale = p.max_coeff_abs();
  for (const Complex& r : out) {
    const double bound = kRootResidualTol * std::pow(1.0 + std::abs(r), n) * scale;
    if (!(std::abs(p(r)) <= bound))
      throw std::runtime_error("roots: residual check failed for " + poly_to_string(p));
  }

  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
}

RationalFunction RationalFunction::as_reduced(Polynomial num, Polynomial den) {
  RationalFunction r(std::move(num), std::move(den));
  r.reduced_ = true;
  return r;
}

int rational_degree(const RationalFunction& r) {
  if (!r.is_reduced()) throw std::invalid_argument("rational_degree: input is not reduced");
  const auto dn = r.num().degree();
  const auto dd = r.den().degree();
  return std::max(dn.value_or(0), dd.value_or(0));
}

RationalFunction reduce(const RationalFunction& r, double match_tol) {
  if (r.num().is_zero())
    return RationalFunction::as_reduced(Polynomial(), Polynomial::one());

  const auto num_deg = r.num().degree();
  const auto den_deg = r.den().degree();
  if (*num_deg == 0 || *den_deg == 0)
    return RationalFunction::as_reduced(r.num(), r.den());

  std::vector<Complex> nr = roots(r.num());
  std::vector<Complex> dr = roots(r.den());
  std::vector<bool> used(dr.size(), false);

  std::vector<Complex> kept_num;
  for (const Complex& root : nr) {
    std::size_t best = dr.size();
    double best_dist = match_tol;
    for (std::size_t j = 0; j < dr.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(root - dr[j]);
      if (d <= best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best < dr.size())
      used[best] = true;
    else
      kept_num.push_back(root);
  }
  std::vector<Complex> kept_den;
  for (std::size_t j = 0; j < dr.size(); ++j)
    if (!used[j]) kept_den.push_back(dr[j]);

  RationalFunction out = RationalFunction::as_reduced(
      Polynomial::from_roots(kept_num, r.num().leading_coeff()),
      Polynomial::from_roots(kept_den, r.den().leading_coeff()));

  // The cancelled representation must still be the same function. The
  // comparison is cross-multiplied so poles cannot amplify root noise.
  const double scale =
      std::max(r.num().max_coeff_abs() * out.den().max_coeff_abs(),
               out.num().max_coeff_abs() * r.den().max_coeff_abs()) *
      double(r.num().coeffs().size() + r.den().coeffs().size() + out.num().coeffs().size() +
             out.den().coeffs().size());
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  for (int k = 0; k < 64; ++k) {
    const double u = double(rng() >> 11) * 0x1.0p-53;
    const double v = double(rng() >> 11) * 0x1.0p-53;
    const Complex lambda = std::polar(std::sqrt(u), 2.0 * M_PI * v);
    const Complex lhs = r.num()(lambda) * out.den()(lambda);
    const Complex rhs = out.num()(lambda) * r.den()(lambda);
    if (std::abs(lhs - rhs) > 1e-6 * scale)
      throw std::runtime_error("reduce: cancelled form disagrees with input (ill-conditioned)");
  }
  return out;
}

}  // namespace penta
