#ifndef RELTHOM_NUMLAB_CROSSCAP_HPP
#define RELTHOM_NUMLAB_CROSSCAP_HPP

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "relthom/numlab/poly2.hpp"
#include "relthom/numlab/report.hpp"
#include "relthom/numlab/roots.hpp"
#include "relthom/ring.hpp"

namespace relthom::numlab {

/// Map germ (x, y) -> R^3 or C^3 with the three 2x2 minors of its
/// Jacobian precomputed.  Cross-caps are the rank-drop points, i.e. the
/// common zeros of the minors.
template <class S>
struct SpaceGerm {
  Poly2<S> f1, f2, f3;
  std::array<Poly2<S>, 3> minors;
  std::array<Poly2<S>, 3> minors_x, minors_y;

  SpaceGerm(Poly2<S> a, Poly2<S> b, Poly2<S> c)
      : f1(std::move(a)), f2(std::move(b)), f3(std::move(c)) {
    Poly2<S> g1x = f1.dx(), g1y = f1.dy();
    Poly2<S> g2x = f2.dx(), g2y = f2.dy();
    Poly2<S> g3x = f3.dx(), g3y = f3.dy();
    minors[0] = g1x * g2y - g1y * g2x;
    minors[1] = g1x * g3y - g1y * g3x;
    minors[2] = g2x * g3y - g2y * g3x;
    for (int i = 0; i < 3; ++i) {
      minors_x[i] = minors[i].dx();
      minors_y[i] = minors[i].dy();
    }
  }

  double scale() const {
    double s = 1.0;
    for (const auto& p : minors) s = std::max(s, p.magnitude());
    return s;
  }
};

using RealGerm = SpaceGerm<double>;
using ComplexGerm = SpaceGerm<std::complex<double>>;

namespace detail_cc {

/// Gauss-Newton on the three minor residuals from one seed; returns the
/// converged point when it passes the residual and rank certificates.
template <class S>
std::optional<std::array<S, 2>> gauss_newton(const SpaceGerm<S>& germ, S x, S y,
                                             double scale) {
  using Mat = Eigen::Matrix<S, 3, 2>;
  using Vec3 = Eigen::Matrix<S, 3, 1>;
  auto residual = [&](S px, S py) {
    Vec3 r;
    for (int i = 0; i < 3; ++i) r(i) = germ.minors[i].eval(px, py);
    return r;
  };
  Vec3 r = residual(x, y);
  for (int it = 0; it < 100; ++it) {
    double rn = std::sqrt(std::norm(r(0)) + std::norm(r(1)) + std::norm(r(2)));
    if (rn < kNewtonTol * scale) break;
    Mat J;
    for (int i = 0; i < 3; ++i) {
      J(i, 0) = germ.minors_x[i].eval(x, y);
      J(i, 1) = germ.minors_y[i].eval(x, y);
    }
    Eigen::Matrix<S, 2, 2> JtJ = J.adjoint() * J;
    Eigen::Matrix<S, 2, 1> Jtr = J.adjoint() * r;
    S det = JtJ(0, 0) * JtJ(1, 1) - JtJ(0, 1) * JtJ(1, 0);
    if (std::abs(det) < 1e-20) return std::nullopt;
    S dx = (JtJ(1, 1) * Jtr(0) - JtJ(0, 1) * Jtr(1)) / det;
    S dy = (JtJ(0, 0) * Jtr(1) - JtJ(1, 0) * Jtr(0)) / det;
    double step = 1.0;
    for (int halve = 0; halve < 8; ++halve) {
      S nx = x - S(step) * dx, ny = y - S(step) * dy;
      Vec3 nr = residual(nx, ny);
      double nn = std::sqrt(std::norm(nr(0)) + std::norm(nr(1)) + std::norm(nr(2)));
      if (nn < rn || halve == 7) {
        x = nx;
        y = ny;
        r = nr;
        break;
      }
      step *= 0.5;
    }
    if (std::abs(x) > 1e4 || std::abs(y) > 1e4) return std::nullopt;
  }
  double rn = std::sqrt(std::norm(r(0)) + std::norm(r(1)) + std::norm(r(2)));
  if (rn > kAcceptResidual * scale) return std::nullopt;
  return std::array<S, 2>{x, y};
}

/// Smallest singular value of the 3x2 minor Jacobian; the simple-point
/// certificate.
template <class S>
double min_singular_value(const SpaceGerm<S>& germ, S x, S y) {
  Eigen::Matrix<S, 3, 2> J;
  for (int i = 0; i < 3; ++i) {
    J(i, 0) = germ.minors_x[i].eval(x, y);
    J(i, 1) = germ.minors_y[i].eval(x, y);
  }
  Eigen::Matrix<S, 2, 2> JtJ = J.adjoint() * J;
  double a = std::real(JtJ(0, 0)), d = std::real(JtJ(1, 1));
  double off = std::abs(JtJ(0, 1));
  double tr = a + d, det = a * d - off * off;
  double disc = std::sqrt(std::max(0.0, tr * tr - 4 * det));
  double lmin = 0.5 * (tr - disc);
  return std::sqrt(std::max(0.0, lmin));
}

}  // namespace detail_cc

/// Count cross-cap points of a real germ inside |(x, y)| < radius by
/// multi-start Gauss-Newton on the minor system.
inline SingularityReport cross_caps_real(const RealGerm& germ, double radius) {
  double scale = germ.scale();
  std::vector<std::vector<double>> raw;
  const int grid = 25;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      double x = radius * (2.0 * i / (grid - 1) - 1.0);
      double y = radius * (2.0 * j / (grid - 1) - 1.0);
      auto sol = detail_cc::gauss_newton<double>(germ, x, y, scale);
      if (!sol) continue;
      if (std::hypot((*sol)[0], (*sol)[1]) >= radius) continue;
      raw.push_back({(*sol)[0], (*sol)[1]});
    }

  SingularityReport report;
  for (const auto& p : dedup_sorted(std::move(raw), kDedupRadius)) {
    double sigma = detail_cc::min_singular_value<double>(germ, p[0], p[1]);
    if (sigma < kGenericityFloor)
      throw consistency_error("cross-cap candidate is not a simple rank-drop point");
    FoundPoint fp;
    fp.x = p;
    double r = 0;
    for (int i = 0; i < 3; ++i)
      r += std::pow(germ.minors[i].eval(p[0], p[1]), 2);
    fp.residual = std::sqrt(r) / scale;
    report.points.push_back(fp);
    report.count += 1;
  }
  report.diagnostics["sigma_floor"] = kGenericityFloor;
  return report;
}

/// Complex count, pipeline one: multi-start Gauss-Newton over C^2 with a
/// real 4-dimensional seed grid.
inline SingularityReport cross_caps_complex_newton(const ComplexGerm& germ, double radius) {
  using C = std::complex<double>;
  double scale = germ.scale();
  std::vector<std::vector<double>> raw;
  const int grid = 5;
  auto coord = [&](int i) { return radius * (2.0 * i / (grid - 1) - 1.0); };
  for (int a = 0; a < grid; ++a)
    for (int b = 0; b < grid; ++b)
      for (int c = 0; c < grid; ++c)
        for (int d = 0; d < grid; ++d) {
          C x(coord(a), coord(b)), y(coord(c), coord(d));
          auto sol = detail_cc::gauss_newton<C>(germ, x, y, scale);
          if (!sol) continue;
          C sx = (*sol)[0], sy = (*sol)[1];
          if (std::sqrt(std::norm(sx) + std::norm(sy)) >= radius) continue;
          raw.push_back({sx.real(), sx.imag(), sy.real(), sy.imag()});
        }

  SingularityReport report;
  for (const auto& p : dedup_sorted(std::move(raw), kDedupRadius)) {
    C x(p[0], p[1]), y(p[2], p[3]);
    double sigma = detail_cc::min_singular_value<C>(germ, x, y);
    if (sigma < kGenericityFloor)
      throw consistency_error("cross-cap candidate is not a simple rank-drop point");
    FoundPoint fp;
    fp.x = p;
    double r = 0;
    for (int i = 0; i < 3; ++i) r += std::norm(germ.minors[i].eval(x, y));
    fp.residual = std::sqrt(r) / scale;
    report.points.push_back(fp);
    report.count += 1;
  }
  return report;
}

namespace detail_cc {

using UPoly = std::vector<std::complex<double>>;  // index = power

inline UPoly trim(UPoly p) {
  double mag = 0;
  for (auto& c : p) mag = std::max(mag, std::abs(c));
  while (!p.empty() && std::abs(p.back()) <= 1e-9 * std::max(1.0, mag)) p.pop_back();
  return p;
}

inline UPoly eval_in_y(const std::vector<UPoly>& poly_in_y, std::complex<double> x) {
  UPoly out(poly_in_y.size());
  for (std::size_t k = 0; k < poly_in_y.size(); ++k)
    out[k] = detail_roots::horner(poly_in_y[k], x);
  return out;
}

/// Sylvester resultant of two univariate polynomials (numeric
/// coefficients) via the determinant of the Sylvester matrix.
inline std::complex<double> sylvester_det(const UPoly& a, const UPoly& b) {
  int p = static_cast<int>(a.size()) - 1, q = static_cast<int>(b.size()) - 1;
  if (p < 0 || q < 0) return 0.0;
  if (p == 0 && q == 0) return 1.0;
  if (q == 0) return std::pow(b[0], p);
  if (p == 0) return std::pow(a[0], q);
  int n = p + q;
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j <= p; ++j) s(i, i + j) = a[p - j];
  for (int i = 0; i < p; ++i)
    for (int j = 0; j <= q; ++j) s(q + i, i + j) = b[q - j];
  return Eigen::FullPivLU<Eigen::MatrixXcd>(s).determinant();
}

}  // namespace detail_cc

/// Complex count, pipeline two: eliminate y with a Sylvester resultant
/// (sampled at roots of unity, recovered by inverse DFT), solve for x by
/// companion matrix, back-substitute, then polish with Gauss-Newton.
inline SingularityReport cross_caps_complex_resultant(const ComplexGerm& germ,
                                                     double radius) {
  using C = std::complex<double>;
  double scale = germ.scale();

  // Pick the first minor pair whose resultant does not vanish identically.
  std::vector<std::vector<double>> raw;
  const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
  bool eliminated = false;
  for (auto [ia, ib] : pairs) {
    auto A = as_poly_in_y(germ.minors[ia]);
    auto B = as_poly_in_y(germ.minors[ib]);
    int p = static_cast<int>(A.size()) - 1, q = static_cast<int>(B.size()) - 1;
    if (p < 0 || q < 0) continue;
    int dxa = germ.minors[ia].degree_x(), dxb = germ.minors[ib].degree_x();
    int bound = std::max(1, p * dxb + q * dxa);
    int K = bound + 1;

    std::vector<C> samples(K), values(K);
    for (int j = 0; j < K; ++j) {
      double t = 2.0 * M_PI * j / K;
      samples[j] = C(std::cos(t), std::sin(t));
      values[j] = detail_cc::sylvester_det(detail_cc::trim(detail_cc::eval_in_y(A, samples[j])),
                                           detail_cc::trim(detail_cc::eval_in_y(B, samples[j])));
    }
    detail_cc::UPoly res(K);
    for (int k = 0; k < K; ++k) {
      C acc(0);
      for (int j = 0; j < K; ++j) {
        double t = -2.0 * M_PI * j * k / K;
        acc += values[j] * C(std::cos(t), std::sin(t));
      }
      res[k] = acc / static_cast<double>(K);
    }
    res = detail_cc::trim(res);
    if (res.empty()) continue;  // the pair shares a curve of zeros
    eliminated = true;

    std::vector<C> xs = res.size() == 1 ? std::vector<C>{} : companion_roots(res);
    for (C x : xs) {
      detail_cc::UPoly ay = detail_cc::trim(detail_cc::eval_in_y(A, x));
      std::vector<C> ys;
      if (ay.size() <= 1) {
        // A became constant at this x; fall back to the partner.
        detail_cc::UPoly by = detail_cc::trim(detail_cc::eval_in_y(B, x));
        if (by.size() <= 1) continue;
        ys = companion_roots(by);
      } else {
        ys = companion_roots(ay);
      }
      for (C y : ys) {
        auto sol = detail_cc::gauss_newton<C>(germ, x, y, scale);
        if (!sol) continue;
        C sx = (*sol)[0], sy = (*sol)[1];
        if (std::sqrt(std::norm(sx) + std::norm(sy)) >= radius) continue;
        raw.push_back({sx.real(), sx.imag(), sy.real(), sy.imag()});
      }
    }
    break;
  }
  if (!eliminated)
    throw consistency_error("all minor pairs have identically vanishing resultants");

  SingularityReport report;
  for (const auto& p : dedup_sorted(std::move(raw), kDedupRadius)) {
    C x(p[0], p[1]), y(p[2], p[3]);
    double sigma = detail_cc::min_singular_value<C>(germ, x, y);
    if (sigma < kGenericityFloor)
      throw consistency_error("cross-cap candidate is not a simple rank-drop point");
    FoundPoint fp;
    fp.x = p;
    double r = 0;
    for (int i = 0; i < 3; ++i) r += std::norm(germ.minors[i].eval(x, y));
    fp.residual = std::sqrt(r) / scale;
    report.points.push_back(fp);
    report.count += 1;
  }
  return report;
}

/// The complex count: both pipelines must find the same points.
inline SingularityReport cross_caps_complex(const ComplexGerm& germ, double radius) {
  SingularityReport newton = cross_caps_complex_newton(germ, radius);
  SingularityReport resultant = cross_caps_complex_resultant(germ, radius);
  if (newton.count != resultant.count)
    throw consistency_error("cross-cap pipelines disagree: newton " +
                            std::to_string(newton.count) + " vs resultant " +
                            std::to_string(resultant.count));
  for (std::size_t i = 0; i < newton.points.size(); ++i) {
    double d2 = 0;
    for (int k = 0; k < 4; ++k) {
      double d = newton.points[i].x[k] - resultant.points[i].x[k];
      d2 += d * d;
    }
    if (std::sqrt(d2) > kDedupRadius)
      throw consistency_error("cross-cap pipelines disagree on a point location");
  }
  newton.diagnostics["newton_count"] = static_cast<double>(newton.count);
  newton.diagnostics["resultant_count"] = static_cast<double>(resultant.count);
  return newton;
}

}  // namespace relthom::numlab

#endif  // RELTHOM_NUMLAB_CROSSCAP_HPP
