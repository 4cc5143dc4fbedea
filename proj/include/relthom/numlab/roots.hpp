#ifndef RELTHOM_NUMLAB_ROOTS_HPP
#define RELTHOM_NUMLAB_ROOTS_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "relthom/numlab/report.hpp"
#include "relthom/ring.hpp"

namespace relthom::numlab {

/// Exact rational with int64 numerator/denominator, enough headroom for
/// differentiating the small preset polynomials.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw input_error("rational with zero denominator");
    if (den < 0) {
      num = detail::checked_neg(num);
      den = detail::checked_neg(den);
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  Rational operator+(const Rational& o) const {
    return Rational(detail::checked_add(detail::checked_mul(num, o.den),
                                        detail::checked_mul(o.num, den)),
                    detail::checked_mul(den, o.den));
  }
  Rational operator-(const Rational& o) const { return *this + o.negated(); }
  Rational operator*(const Rational& o) const {
    return Rational(detail::checked_mul(num, o.num), detail::checked_mul(den, o.den));
  }
  Rational negated() const { return Rational(detail::checked_neg(num), den); }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool is_zero() const { return num == 0; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct RationalComplex {
  Rational re, im;
  RationalComplex() = default;
  RationalComplex(Rational r, Rational i = Rational(0)) : re(r), im(i) {}
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  RationalComplex operator+(const RationalComplex& o) const {
    return {re + o.re, im + o.im};
  }
  RationalComplex operator-(const RationalComplex& o) const {
    return {re - o.re, im - o.im};
  }
  RationalComplex operator*(const RationalComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
};

/// Univariate polynomial with exact rational-complex coefficients.
/// Differentiation stays exact; evaluation drops to double via Horner.
class ComplexPoly {
 public:
  ComplexPoly() = default;
  explicit ComplexPoly(std::vector<RationalComplex> coeffs) : c_(std::move(coeffs)) { trim(); }

  static ComplexPoly from_integers(const std::vector<std::int64_t>& coeffs) {
    std::vector<RationalComplex> c;
    c.reserve(coeffs.size());
    for (std::int64_t v : coeffs) c.emplace_back(Rational(v));
    return ComplexPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<RationalComplex>& coefficients() const { return c_; }

  ComplexPoly derivative() const {
    if (c_.size() <= 1) return ComplexPoly();
    std::vector<RationalComplex> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) {
      Rational m(static_cast<std::int64_t>(k));
      d[k - 1] = RationalComplex(c_[k].re * m, c_[k].im * m);
    }
    return ComplexPoly(std::move(d));
  }

  std::vector<std::complex<double>> double_coefficients() const {
    std::vector<std::complex<double>> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(v.to_complex());
    return out;
  }

  std::complex<double> eval(std::complex<double> z) const {
    std::complex<double> acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->to_complex();
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<RationalComplex> c_;  // c_[k] multiplies z^k
};

namespace detail_roots {

inline std::complex<double> horner(const std::vector<std::complex<double>>& c,
                                   std::complex<double> z) {
  std::complex<double> acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace detail_roots

/// All complex roots of a polynomial given by its coefficient list
/// (index = power), via the companion-matrix eigenproblem followed by a
/// short Newton polish of each eigenvalue.
inline std::vector<std::complex<double>> companion_roots(
    std::vector<std::complex<double>> c) {
  double mag = 0;
  for (auto& v : c) mag = std::max(mag, std::abs(v));
  while (!c.empty() && std::abs(c.back()) <= 1e-14 * std::max(1.0, mag)) c.pop_back();
  if (c.size() <= 1) {
    if (c.empty()) throw consistency_error("root solve on the zero polynomial");
    return {};
  }
  int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw consistency_error("companion eigenvalue solve failed");

  std::vector<std::complex<double>> deriv(n);
  for (int k = 1; k <= n; ++k) deriv[k - 1] = c[k] * static_cast<double>(k);

  std::vector<std::complex<double>> roots;
  roots.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::complex<double> z = solver.eigenvalues()(i);
    for (int it = 0; it < 8; ++it) {
      std::complex<double> f = detail_roots::horner(c, z);
      std::complex<double> df = detail_roots::horner(deriv, z);
      if (std::abs(df) < 1e-14) break;  // multiple root: keep the eigenvalue
      std::complex<double> step = f / df;
      z -= step;
      if (std::abs(step) < kNewtonTol) break;
    }
    roots.push_back(z);
  }
  return roots;
}

/// Critical points of a holomorphic polynomial strictly inside |z| < radius,
/// counted with multiplicity.  Roots of p' in the genericity band around the
/// circle are rejected rather than guessed at.
inline SingularityReport critical_points_in_disk(const ComplexPoly& p, double radius) {
  if (p.degree() < 1) throw input_error("critical point count needs degree >= 1");
  ComplexPoly dp = p.derivative();
  SingularityReport report;
  if (dp.degree() < 1) {
    if (dp.is_zero()) throw consistency_error("derivative vanishes identically");
    report.diagnostics["derivative_degree"] = dp.degree();
    return report;  // nonzero constant derivative: no critical points
  }

  std::vector<std::complex<double>> roots = companion_roots(dp.double_coefficients());

  // Cluster coincident eigenvalues into one point with multiplicity.
  std::vector<std::pair<double, double>> sorted;
  sorted.reserve(roots.size());
  for (auto z : roots) sorted.emplace_back(z.real(), z.imag());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<std::complex<double>, int>> clusters;
  for (auto [re, im] : sorted) {
    std::complex<double> z(re, im);
    bool merged = false;
    for (auto& [rep, mult] : clusters) {
      if (std::abs(z - rep) < kClusterRadius * std::max(1.0, radius)) {
        rep = (rep * static_cast<double>(mult) + z) / static_cast<double>(mult + 1);
        ++mult;
        merged = true;
        break;
      }
    }
    if (!merged) clusters.emplace_back(z, 1);
  }

  double scale = 0;
  for (auto& v : dp.double_coefficients()) scale = std::max(scale, std::abs(v));
  double max_residual = 0;
  for (auto& [z, mult] : clusters) {
    double r = std::abs(z);
    if (std::abs(r - radius) < kBoundaryBand)
      throw consistency_error("critical point on the disk boundary, radius " +
                              std::to_string(radius));
    if (r >= radius) continue;
    double residual = std::abs(dp.eval(z)) / std::max(1.0, scale);
    if (mult == 1 && residual > kAcceptResidual)
      throw consistency_error("root polish failed to meet the residual bound");
    max_residual = std::max(max_residual, residual);
    FoundPoint fp;
    fp.x = {z.real(), z.imag()};
    fp.residual = residual;
    fp.multiplicity = mult;
    report.points.push_back(fp);
    report.count += mult;
  }
  std::sort(report.points.begin(), report.points.end(),
            [](const FoundPoint& a, const FoundPoint& b) { return a.x < b.x; });
  report.diagnostics["derivative_degree"] = dp.degree();
  report.diagnostics["max_residual"] = max_residual;
  return report;
}

}  // namespace relthom::numlab

#endif  // RELTHOM_NUMLAB_ROOTS_HPP
