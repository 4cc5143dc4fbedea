#ifndef RELTHOM_NUMLAB_CURVES_HPP
#define RELTHOM_NUMLAB_CURVES_HPP

#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "relthom/numlab/report.hpp"
#include "relthom/ring.hpp"

namespace relthom::numlab {

using Vec2 = std::array<double, 2>;

/// Parametrized plane curve as evaluation closures. Position, velocity and
/// acceleration are all analytic so offsets stay differentiable.
struct CurveFn {
  std::function<Vec2(double)> pos;
  std::function<Vec2(double)> vel;
  std::function<Vec2(double)> acc;
  double t0 = 0, t1 = 1;
  bool closed = false;

  double period() const { return t1 - t0; }
};

/// Polynomial arc: components are dense coefficient lists in t.
inline CurveFn polynomial_arc(std::vector<double> px, std::vector<double> py, double t0,
                              double t1) {
  auto horner = [](const std::vector<double>& c, double t) {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  };
  auto deriv = [](const std::vector<double>& c) {
    std::vector<double> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<double>(k));
    return d;
  };
  std::vector<double> dx = deriv(px), dy = deriv(py);
  std::vector<double> ddx = deriv(dx), ddy = deriv(dy);
  CurveFn c;
  c.pos = [=](double t) -> Vec2 { return {horner(px, t), horner(py, t)}; };
  c.vel = [=](double t) -> Vec2 { return {horner(dx, t), horner(dy, t)}; };
  c.acc = [=](double t) -> Vec2 { return {horner(ddx, t), horner(ddy, t)}; };
  c.t0 = t0;
  c.t1 = t1;
  c.closed = false;
  return c;
}

/// One trigonometric component: a0 + sum_k cos_k cos(kt) + sin_k sin(kt).
struct FourierSeries {
  double a0 = 0;
  std::vector<double> cos_coeffs;  // index k-1 multiplies cos(kt)
  std::vector<double> sin_coeffs;  // index k-1 multiplies sin(kt)

  double eval(double t) const {
    double v = a0;
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k) v += cos_coeffs[k] * std::cos((k + 1) * t);
    for (std::size_t k = 0; k < sin_coeffs.size(); ++k) v += sin_coeffs[k] * std::sin((k + 1) * t);
    return v;
  }
  double eval_d(double t) const {
    double v = 0;
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k)
      v -= cos_coeffs[k] * (k + 1) * std::sin((k + 1) * t);
    for (std::size_t k = 0; k < sin_coeffs.size(); ++k)
      v += sin_coeffs[k] * (k + 1) * std::cos((k + 1) * t);
    return v;
  }
  double eval_dd(double t) const {
    double v = 0;
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k)
      v -= cos_coeffs[k] * (k + 1) * (k + 1) * std::cos((k + 1) * t);
    for (std::size_t k = 0; k < sin_coeffs.size(); ++k)
      v -= sin_coeffs[k] * (k + 1) * (k + 1) * std::sin((k + 1) * t);
    return v;
  }
};

/// Closed trigonometric loop on [0, 2*pi).
inline CurveFn fourier_loop(FourierSeries fx, FourierSeries fy) {
  CurveFn c;
  c.pos = [=](double t) -> Vec2 { return {fx.eval(t), fy.eval(t)}; };
  c.vel = [=](double t) -> Vec2 { return {fx.eval_d(t), fy.eval_d(t)}; };
  c.acc = [=](double t) -> Vec2 { return {fx.eval_dd(t), fy.eval_dd(t)}; };
  c.t0 = 0;
  c.t1 = 2 * M_PI;
  c.closed = true;
  return c;
}

/// Normal pushoff at distance delta (rotate the unit tangent a quarter
/// turn).  Velocity of the offset is analytic in the base derivatives.
inline CurveFn normal_offset(const CurveFn& base, double delta) {
  CurveFn c;
  c.pos = [base, delta](double t) -> Vec2 {
    Vec2 p = base.pos(t), v = base.vel(t);
    double n = std::hypot(v[0], v[1]);
    if (n < 1e-12) throw consistency_error("offset of a curve with a velocity zero");
    return {p[0] - delta * v[1] / n, p[1] + delta * v[0] / n};
  };
  c.vel = [base, delta](double t) -> Vec2 {
    Vec2 v = base.vel(t), a = base.acc(t);
    double n = std::hypot(v[0], v[1]);
    if (n < 1e-12) throw consistency_error("offset of a curve with a velocity zero");
    double va = v[0] * a[0] + v[1] * a[1];
    // d/dt [rot90(v)/|v|] = rot90(a)/|v| - rot90(v) (v.a)/|v|^3
    double nx = -a[1] / n + v[1] * va / (n * n * n);
    double ny = a[0] / n - v[0] * va / (n * n * n);
    return {v[0] + delta * nx, v[1] + delta * ny};
  };
  c.acc = [base, delta](double t) -> Vec2 {
    // Second derivative by central difference; only bounding boxes use it.
    double h = 1e-5;
    CurveFn tmp = normal_offset(base, delta);
    Vec2 vp = tmp.vel(t + h), vm = tmp.vel(t - h);
    return {(vp[0] - vm[0]) / (2 * h), (vp[1] - vm[1]) / (2 * h)};
  };
  c.t0 = base.t0;
  c.t1 = base.t1;
  c.closed = base.closed;
  return c;
}

namespace detail_curves {

struct ParamBox {
  double a0, a1, b0, b1;
};

inline double max_speed(const CurveFn& c, double lo, double hi) {
  double m = 0;
  for (int i = 0; i <= 16; ++i) {
    Vec2 v = c.vel(lo + (hi - lo) * i / 16.0);
    m = std::max(m, std::hypot(v[0], v[1]));
  }
  return m * 1.5;
}

inline void bounding_box(const CurveFn& c, double lo, double hi, double& x0, double& x1,
                         double& y0, double& y1) {
  x0 = y0 = 1e300;
  x1 = y1 = -1e300;
  const int M = 8;
  for (int i = 0; i <= M; ++i) {
    Vec2 p = c.pos(lo + (hi - lo) * i / M);
    x0 = std::min(x0, p[0]);
    x1 = std::max(x1, p[0]);
    y0 = std::min(y0, p[1]);
    y1 = std::max(y1, p[1]);
  }
  double pad = max_speed(c, lo, hi) * (hi - lo) / M;
  x0 -= pad;
  x1 += pad;
  y0 -= pad;
  y1 += pad;
}

inline double cyclic_gap(double s, double t, double period, bool closed) {
  double d = std::abs(s - t);
  if (closed) d = std::min(d, period - d);
  return d;
}

}  // namespace detail_curves

struct CurveIntersection {
  double s, t;       // parameters on the two curves
  Vec2 point;        // common image point
  double residual;
  double crossing_angle_sine;  // transversality certificate
};

/// All transverse intersections A(s) = B(t).  Subdivision with interval
/// bounding boxes prunes the parameter square, Newton finishes.  In self
/// mode (A and B the same curve) pairs are canonicalized to s < t and the
/// near-diagonal is excluded.
inline std::vector<CurveIntersection> curve_pair_intersections(const CurveFn& A,
                                                               const CurveFn& B,
                                                               bool self_mode) {
  double scale = 1.0;
  for (int i = 0; i <= 32; ++i) {
    Vec2 p = A.pos(A.t0 + (A.t1 - A.t0) * i / 32.0);
    scale = std::max({scale, std::abs(p[0]), std::abs(p[1])});
  }

  const int n0 = self_mode ? 64 : 16;
  double pa = A.period(), pb = B.period();
  std::vector<detail_curves::ParamBox> stack;
  for (int i = 0; i < n0; ++i)
    for (int j = self_mode ? i : 0; j < n0; ++j) {
      if (self_mode) {
        if (i == j) continue;
        int gap = j - i;
        if (gap == 1) continue;
        if (A.closed && i == 0 && j == n0 - 1) continue;
      }
      stack.push_back({A.t0 + pa * i / n0, A.t0 + pa * (i + 1) / n0,
                       B.t0 + pb * j / n0, B.t0 + pb * (j + 1) / n0});
    }

  std::vector<std::vector<double>> raw;
  double min_len = 1e-3 * std::max(pa, pb);
  while (!stack.empty()) {
    auto box = stack.back();
    stack.pop_back();
    double ax0, ax1, ay0, ay1, bx0, bx1, by0, by1;
    detail_curves::bounding_box(A, box.a0, box.a1, ax0, ax1, ay0, ay1);
    detail_curves::bounding_box(B, box.b0, box.b1, bx0, bx1, by0, by1);
    if (ax1 < bx0 || bx1 < ax0 || ay1 < by0 || by1 < ay0) continue;
    double la = box.a1 - box.a0, lb = box.b1 - box.b0;
    if (la > min_len || lb > min_len) {
      if (la >= lb) {
        double mid = 0.5 * (box.a0 + box.a1);
        stack.push_back({box.a0, mid, box.b0, box.b1});
        stack.push_back({mid, box.a1, box.b0, box.b1});
      } else {
        double mid = 0.5 * (box.b0 + box.b1);
        stack.push_back({box.a0, box.a1, box.b0, mid});
        stack.push_back({box.a0, box.a1, mid, box.b1});
      }
      continue;
    }
    // Newton on A(s) - B(t) = 0 from the box center.
    double s = 0.5 * (box.a0 + box.a1), t = 0.5 * (box.b0 + box.b1);
    bool ok = false;
    for (int it = 0; it < 50; ++it) {
      Vec2 p = A.pos(s), q = B.pos(t);
      double r1 = p[0] - q[0], r2 = p[1] - q[1];
      if (std::abs(r1) < kNewtonTol * scale && std::abs(r2) < kNewtonTol * scale) {
        ok = true;
        break;
      }
      Vec2 va = A.vel(s), vb = B.vel(t);
      double det = va[0] * (-vb[1]) - (-vb[0]) * va[1];
      if (std::abs(det) < 1e-14) break;
      double ds = (-vb[1] * r1 + vb[0] * r2) / det;
      double dt = (va[0] * r2 - va[1] * r1) / det;
      s -= ds;
      t -= dt;
      if (std::abs(s - A.t0) > 2 * pa || std::abs(t - B.t0) > 2 * pb) break;
    }
    if (!ok) continue;
    if (A.closed) s = A.t0 + std::fmod(std::fmod(s - A.t0, pa) + pa, pa);
    if (B.closed) t = B.t0 + std::fmod(std::fmod(t - B.t0, pb) + pb, pb);
    if (s < A.t0 - 1e-9 || s > A.t1 + 1e-9 || t < B.t0 - 1e-9 || t > B.t1 + 1e-9) continue;
    if (self_mode) {
      if (detail_curves::cyclic_gap(s, t, pa, A.closed) < pa / n0) continue;
      if (s > t) std::swap(s, t);
    }
    raw.push_back({s, t});
  }

  std::vector<CurveIntersection> out;
  for (const auto& p : dedup_sorted(std::move(raw), kDedupRadius * std::max(1.0, pa))) {
    CurveIntersection ci;
    ci.s = p[0];
    ci.t = p[1];
    Vec2 pa_ = A.pos(ci.s), pb_ = B.pos(ci.t);
    ci.point = {0.5 * (pa_[0] + pb_[0]), 0.5 * (pa_[1] + pb_[1])};
    ci.residual = std::hypot(pa_[0] - pb_[0], pa_[1] - pb_[1]) / scale;
    if (ci.residual > kAcceptResidual)
      throw consistency_error("curve intersection failed the residual bound");
    Vec2 va = A.vel(ci.s), vb = B.vel(ci.t);
    double cross = va[0] * vb[1] - va[1] * vb[0];
    ci.crossing_angle_sine =
        std::abs(cross) / (std::hypot(va[0], va[1]) * std::hypot(vb[0], vb[1]));
    if (ci.crossing_angle_sine < kGenericityFloor)
      throw consistency_error("curve intersection is not transverse");
    out.push_back(ci);
  }
  return out;
}

/// Double points of one immersed curve.
inline SingularityReport planar_double_points(const CurveFn& curve) {
  auto hits = curve_pair_intersections(curve, curve, /*self_mode=*/true);
  SingularityReport report;
  for (const auto& h : hits) {
    FoundPoint fp;
    fp.x = {h.point[0], h.point[1]};
    fp.residual = h.residual;
    report.points.push_back(fp);
  }
  std::sort(report.points.begin(), report.points.end(),
            [](const FoundPoint& a, const FoundPoint& b) { return a.x < b.x; });
  report.count = static_cast<long long>(report.points.size());
  return report;
}

/// Independent crossing count from dense polylines and exact segment
/// orientation tests; no Newton anywhere.
inline long long dense_pair_count(const CurveFn& A, const CurveFn& B, bool self_mode,
                                  int samples = 2048) {
  auto polyline = [samples](const CurveFn& c) {
    std::vector<Vec2> pts;
    int n = c.closed ? samples : samples + 1;
    for (int i = 0; i < n; ++i) pts.push_back(c.pos(c.t0 + c.period() * i / samples));
    return pts;
  };
  auto ccw = [](const Vec2& a, const Vec2& b, const Vec2& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  };
  std::vector<Vec2> pa = polyline(A), pb = self_mode ? pa : polyline(B);
  long long count = 0;
  std::size_t na = A.closed ? pa.size() : pa.size() - 1;
  std::size_t nb = B.closed ? pb.size() : pb.size() - 1;
  for (std::size_t i = 0; i < na; ++i) {
    const Vec2& a1 = pa[i];
    const Vec2& a2 = pa[(i + 1) % pa.size()];
    std::size_t jstart = self_mode ? i + 2 : 0;
    for (std::size_t j = jstart; j < nb; ++j) {
      if (self_mode && A.closed && i == 0 && j == nb - 1) continue;
      const Vec2& b1 = pb[j];
      const Vec2& b2 = pb[(j + 1) % pb.size()];
      double d1 = ccw(a1, a2, b1), d2 = ccw(a1, a2, b2);
      double d3 = ccw(b1, b2, a1), d4 = ccw(b1, b2, a2);
      if (d1 * d2 < 0 && d3 * d4 < 0) ++count;
    }
  }
  return count;
}

/// Parity bookkeeping for the double-point formula on plane curves: the
/// preimage of the double-point set against pushoff intersections. The
/// plane admits a global normal frame, so the Euler contribution is zero.
struct PushoffCheck {
  long long crossings = 0;
  long long preimage_points = 0;   // 2 * crossings
  long long pushoff_hits = 0;
  long long euler_term = 0;
  bool parity_holds = false;
};

inline PushoffCheck verify_pushoff_parity(const CurveFn& curve, double delta) {
  PushoffCheck check;
  SingularityReport doubles = planar_double_points(curve);
  long long oracle = dense_pair_count(curve, curve, /*self_mode=*/true);
  if (oracle != doubles.count)
    throw consistency_error("double point count disagrees with the polyline oracle");
  check.crossings = doubles.count;
  check.preimage_points = 2 * doubles.count;

  CurveFn off = normal_offset(curve, delta);
  auto hits = curve_pair_intersections(off, curve, /*self_mode=*/false);
  long long dense = dense_pair_count(off, curve, /*self_mode=*/false);
  if (dense != static_cast<long long>(hits.size()))
    throw consistency_error("pushoff count disagrees with the polyline oracle");
  check.pushoff_hits = static_cast<long long>(hits.size());
  check.euler_term = 0;
  check.parity_holds =
      (check.preimage_points % 2) == ((check.pushoff_hits + check.euler_term) % 2);
  return check;
}

}  // namespace relthom::numlab

#endif  // RELTHOM_NUMLAB_CURVES_HPP
