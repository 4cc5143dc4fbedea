#ifndef RELTHOM_NUMLAB_FOLDCUSP_HPP
#define RELTHOM_NUMLAB_FOLDCUSP_HPP

#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "relthom/numlab/poly2.hpp"
#include "relthom/numlab/report.hpp"
#include "relthom/ring.hpp"

namespace relthom::numlab {

/// Polynomial map of the plane, (x, y) -> (f1, f2), with every derived
/// polynomial the fold/cusp pipeline needs precomputed once.
struct PlaneMap {
  Poly2d f1, f2;
  Poly2d f1x, f1y, f2x, f2y;
  Poly2d det, det_x, det_y;
  // Tangency of the kernel line with the fold curve, one variant per
  // Jacobian row (the kernel is read off the row with the larger norm).
  Poly2d tanA, tanA_x, tanA_y;
  Poly2d tanB, tanB_x, tanB_y;

  PlaneMap(Poly2d a, Poly2d b) : f1(std::move(a)), f2(std::move(b)) {
    f1x = f1.dx();
    f1y = f1.dy();
    f2x = f2.dx();
    f2y = f2.dy();
    det = f1x * f2y - f1y * f2x;
    det_x = det.dx();
    det_y = det.dy();
    tanA = f1x * det_y - f1y * det_x;
    tanB = f2x * det_y - f2y * det_x;
    tanA_x = tanA.dx();
    tanA_y = tanA.dy();
    tanB_x = tanB.dx();
    tanB_y = tanB.dy();
  }

  std::array<double, 4> jacobian(double x, double y) const {
    return {f1x.eval(x, y), f1y.eval(x, y), f2x.eval(x, y), f2y.eval(x, y)};
  }
};

struct FoldComponent {
  std::vector<std::array<double, 2>> points;
  bool closed = false;
  int cusp_count = 0;
  long long prot = 0;    // image line field winding, closed components only
  bool prot_valid = false;
};

struct FoldCuspResult {
  std::vector<FoldComponent> components;
  SingularityReport cusps;
};

namespace detail_fold {

inline double wrap_pi(double a) {
  while (a > M_PI) a -= 2 * M_PI;
  while (a <= -M_PI) a += 2 * M_PI;
  return a;
}

/// Pull a nearby point onto {det = 0} by Newton along grad det.
inline bool project_to_fold(const PlaneMap& m, double& x, double& y, double scale) {
  for (int it = 0; it < 50; ++it) {
    double d = m.det.eval(x, y);
    if (std::abs(d) < kNewtonTol * scale) return true;
    double gx = m.det_x.eval(x, y), gy = m.det_y.eval(x, y);
    double g2 = gx * gx + gy * gy;
    if (g2 < kGenericityFloor * kGenericityFloor) return false;
    x -= d * gx / g2;
    y -= d * gy / g2;
  }
  return std::abs(m.det.eval(x, y)) < kAcceptResidual * scale;
}

/// Unit tangent of the fold curve (perpendicular to grad det).
inline bool fold_tangent(const PlaneMap& m, double x, double y, double& tx, double& ty) {
  double gx = m.det_x.eval(x, y), gy = m.det_y.eval(x, y);
  double n = std::hypot(gx, gy);
  if (n < kGenericityFloor) return false;
  tx = -gy / n;
  ty = gx / n;
  return true;
}

inline double dist_to_polyline(const std::vector<std::array<double, 2>>& pts, bool closed,
                               double x, double y) {
  double best = 1e300;
  std::size_t n = pts.size();
  if (n == 0) return best;
  std::size_t segs = closed ? n : n - 1;
  for (std::size_t i = 0; i < segs; ++i) {
    const auto& a = pts[i];
    const auto& b = pts[(i + 1) % n];
    double vx = b[0] - a[0], vy = b[1] - a[1];
    double wx = x - a[0], wy = y - a[1];
    double vv = vx * vx + vy * vy;
    double t = vv > 0 ? std::clamp((wx * vx + wy * vy) / vv, 0.0, 1.0) : 0.0;
    best = std::min(best, std::hypot(wx - t * vx, wy - t * vy));
  }
  return best;
}

/// Winding number of the angle-doubled line direction along a closed
/// polyline; the direction comes from the larger Jacobian column.
inline bool line_field_winding(const PlaneMap& m,
                               const std::vector<std::array<double, 2>>& pts,
                               long long& winding) {
  double total = 0, prev = 0;
  bool have_prev = false;
  for (std::size_t i = 0; i <= pts.size(); ++i) {
    const auto& p = pts[i % pts.size()];
    auto J = m.jacobian(p[0], p[1]);
    double c1 = std::hypot(J[0], J[2]), c2 = std::hypot(J[1], J[3]);
    double ux, uy;
    if (c1 >= c2) {
      ux = J[0];
      uy = J[2];
    } else {
      ux = J[1];
      uy = J[3];
    }
    if (std::hypot(ux, uy) < kGenericityFloor) return false;
    double phi = 2.0 * std::atan2(uy, ux);
    if (have_prev) total += wrap_pi(phi - prev);
    prev = phi;
    have_prev = true;
  }
  double w = total / (2 * M_PI);
  if (std::abs(w - std::llround(w)) > 0.05) return false;
  winding = std::llround(w);
  return true;
}

}  // namespace detail_fold

/// Locate every cusp of the map inside |p| < radius.  Candidates come from
/// Newton on (det, tangency) seeded at the given points; each survivor
/// carries a transversality certificate for the variant matching its
/// dominant Jacobian row.
inline SingularityReport find_cusps(const PlaneMap& m, double radius,
                                    const std::vector<std::array<double, 2>>& extra_seeds) {
  double scale = std::max({1.0, m.det.magnitude(), m.tanA.magnitude(), m.tanB.magnitude()});
  std::vector<std::vector<double>> raw;

  auto run_newton = [&](double x, double y, bool variant_a) {
    const Poly2d& g = variant_a ? m.tanA : m.tanB;
    const Poly2d& gx = variant_a ? m.tanA_x : m.tanB_x;
    const Poly2d& gy = variant_a ? m.tanA_y : m.tanB_y;
    for (int it = 0; it < 80; ++it) {
      double r1 = m.det.eval(x, y), r2 = g.eval(x, y);
      if (std::abs(r1) < kNewtonTol * scale && std::abs(r2) < kNewtonTol * scale) {
        if (std::hypot(x, y) < radius) raw.push_back({x, y});
        return;
      }
      double a = m.det_x.eval(x, y), b = m.det_y.eval(x, y);
      double c = gx.eval(x, y), d = gy.eval(x, y);
      double det = a * d - b * c;
      if (std::abs(det) < 1e-14) return;
      x -= (d * r1 - b * r2) / det;
      y -= (a * r2 - c * r1) / det;
      if (std::abs(x) > 1e4 || std::abs(y) > 1e4) return;
    }
  };

  std::vector<std::array<double, 2>> seeds = extra_seeds;
  const int grid = 21;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      double x = radius * (2.0 * i / (grid - 1) - 1.0);
      double y = radius * (2.0 * j / (grid - 1) - 1.0);
      if (std::hypot(x, y) <= radius) seeds.push_back({x, y});
    }
  for (const auto& s : seeds) {
    run_newton(s[0], s[1], true);
    run_newton(s[0], s[1], false);
  }

  // Judge each candidate by the tangency of its dominant Jacobian row
  // before dedup, so a half-converged run of the other variant cannot
  // become a cluster representative and shadow the sharp solution.
  auto dominant_variant = [&](double x, double y, bool& use_a) {
    auto J = m.jacobian(x, y);
    double row1 = std::hypot(J[0], J[1]), row2 = std::hypot(J[2], J[3]);
    if (std::max(row1, row2) < kGenericityFloor)
      throw consistency_error("rank-zero point on the fold curve");
    use_a = row1 >= row2;
  };
  std::vector<std::vector<double>> sharp;
  for (const auto& p : raw) {
    bool use_a = true;
    dominant_variant(p[0], p[1], use_a);
    const Poly2d& g = use_a ? m.tanA : m.tanB;
    double r = std::hypot(m.det.eval(p[0], p[1]), g.eval(p[0], p[1])) / scale;
    if (r <= kAcceptResidual) sharp.push_back(p);
  }

  SingularityReport report;
  for (const auto& p : dedup_sorted(std::move(sharp), kDedupRadius)) {
    double x = p[0], y = p[1];
    bool use_a = true;
    dominant_variant(x, y, use_a);
    const Poly2d& g = use_a ? m.tanA : m.tanB;
    const Poly2d& gx = use_a ? m.tanA_x : m.tanB_x;
    const Poly2d& gy = use_a ? m.tanA_y : m.tanB_y;
    double cert = m.det_x.eval(x, y) * gy.eval(x, y) - m.det_y.eval(x, y) * gx.eval(x, y);
    if (std::abs(cert) < kGenericityFloor)
      throw consistency_error("cusp candidate without a transversality certificate");
    FoundPoint fp;
    fp.x = {x, y};
    fp.residual = std::hypot(m.det.eval(x, y), g.eval(x, y)) / scale;
    report.points.push_back(fp);
    report.count += 1;
  }
  return report;
}

/// Trace all fold components inside |p| < radius by predictor-corrector
/// continuation, then attach cusps and compute the image line field
/// winding of each closed component.
inline FoldCuspResult detect_folds_and_cusps(const PlaneMap& m, double radius) {
  FoldCuspResult result;
  double scale = std::max(1.0, m.det.magnitude());
  const double h = 0.01;
  const int max_steps = static_cast<int>(40.0 * radius / h) + 1000;

  // Seeds: sign changes of det along horizontal and vertical scanlines.
  std::vector<std::array<double, 2>> seeds;
  const int rows = 48, cols = 96;
  for (int axis = 0; axis < 2; ++axis) {
    for (int i = 0; i < rows; ++i) {
      double fixed = radius * (2.0 * (i + 0.5) / rows - 1.0);
      double prev = 0;
      bool have_prev = false;
      for (int j = 0; j <= cols; ++j) {
        double s = radius * (2.0 * j / cols - 1.0);
        double x = axis == 0 ? s : fixed, y = axis == 0 ? fixed : s;
        if (std::hypot(x, y) >= radius) {
          have_prev = false;
          continue;
        }
        double v = m.det.eval(x, y);
        if (have_prev && ((prev < 0) != (v < 0))) {
          double lo = radius * (2.0 * (j - 1) / cols - 1.0), hi = s, plo = prev;
          for (int it = 0; it < 60; ++it) {
            double mid = 0.5 * (lo + hi);
            double vm = axis == 0 ? m.det.eval(mid, fixed) : m.det.eval(fixed, mid);
            if ((vm < 0) == (plo < 0)) {
              lo = mid;
              plo = vm;
            } else {
              hi = mid;
            }
          }
          double root = 0.5 * (lo + hi);
          if (axis == 0)
            seeds.push_back({root, fixed});
          else
            seeds.push_back({fixed, root});
        }
        prev = v;
        have_prev = true;
      }
    }
  }

  auto near_existing = [&](double x, double y) {
    for (const auto& comp : result.components)
      if (detail_fold::dist_to_polyline(comp.points, comp.closed, x, y) < 0.6 * h)
        return true;
    return false;
  };

  for (const auto& seed : seeds) {
    double sx = seed[0], sy = seed[1];
    if (!detail_fold::project_to_fold(m, sx, sy, scale)) continue;
    if (std::hypot(sx, sy) >= radius) continue;
    if (near_existing(sx, sy)) continue;

    auto march = [&](double dir, std::vector<std::array<double, 2>>& out, bool& closed) {
      double x = sx, y = sy;
      double tx, ty;
      if (!detail_fold::fold_tangent(m, x, y, tx, ty))
        throw consistency_error("fold curve is not smooth at a trace point");
      tx *= dir;
      ty *= dir;
      bool armed = false;
      for (int step = 0; step < max_steps; ++step) {
        double nx = x + h * tx, ny = y + h * ty;
        if (!detail_fold::project_to_fold(m, nx, ny, scale)) return;
        if (std::hypot(nx, ny) >= radius) return;  // open arc leaving the disk
        double ntx, nty;
        if (!detail_fold::fold_tangent(m, nx, ny, ntx, nty))
          throw consistency_error("fold curve is not smooth at a trace point");
        if (ntx * tx + nty * ty < 0) {
          ntx = -ntx;
          nty = -nty;
        }
        out.push_back({nx, ny});
        x = nx;
        y = ny;
        tx = ntx;
        ty = nty;
        double d0 = std::hypot(x - sx, y - sy);
        if (d0 > 5 * h) armed = true;
        if (armed && d0 < 0.75 * h) {
          closed = true;
          return;
        }
      }
      throw consistency_error("fold tracing exceeded the step budget");
    };

    FoldComponent comp;
    comp.points.push_back({sx, sy});
    std::vector<std::array<double, 2>> fwd;
    bool closed = false;
    march(+1.0, fwd, closed);
    if (closed) {
      comp.points.insert(comp.points.end(), fwd.begin(), fwd.end());
      comp.closed = true;
    } else {
      std::vector<std::array<double, 2>> bwd;
      bool closed_b = false;
      march(-1.0, bwd, closed_b);
      comp.points.assign(bwd.rbegin(), bwd.rend());
      comp.points.push_back({sx, sy});
      comp.points.insert(comp.points.end(), fwd.begin(), fwd.end());
    }
    result.components.push_back(std::move(comp));
  }

  result.cusps = find_cusps(m, radius, seeds);

  for (auto& comp : result.components) {
    for (const auto& c : result.cusps.points) {
      if (detail_fold::dist_to_polyline(comp.points, comp.closed, c.x[0], c.x[1]) < h)
        comp.cusp_count += 1;
    }
    if (comp.closed) {
      long long w = 0;
      auto pts = comp.points;
      for (int attempt = 0; attempt < 4; ++attempt) {
        if (detail_fold::line_field_winding(m, pts, w)) {
          comp.prot = w;
          comp.prot_valid = true;
          break;
        }
        // Halve the sampling step by inserting corrected midpoints.
        std::vector<std::array<double, 2>> fine;
        fine.reserve(pts.size() * 2);
        for (std::size_t i = 0; i < pts.size(); ++i) {
          const auto& a = pts[i];
          const auto& b = pts[(i + 1) % pts.size()];
          fine.push_back(a);
          double mx = 0.5 * (a[0] + b[0]), my = 0.5 * (a[1] + b[1]);
          if (detail_fold::project_to_fold(m, mx, my, scale)) fine.push_back({mx, my});
        }
        pts = std::move(fine);
      }
      if (!comp.prot_valid)
        throw consistency_error("line field winding did not stabilize");
      result.cusps.prot_values.push_back(comp.prot);
    }
  }
  result.cusps.diagnostics["fold_components"] = static_cast<double>(result.components.size());
  return result;
}

/// Rotation of a nowhere-zero plane field around a circle, normalized so
/// that the outward radial field has rotation 0 (winding minus one).
inline long long boundary_rotation(
    const std::function<std::array<double, 2>(double, double)>& field, double cx,
    double cy, double r) {
  long long prev_winding = 0;
  bool have_prev = false;
  for (int n = 512; n <= (1 << 16); n *= 2) {
    double total = 0, prev_angle = 0;
    bool ok = true, first = true;
    for (int k = 0; k <= n; ++k) {
      double t = 2.0 * M_PI * k / n;
      auto v = field(cx + r * std::cos(t), cy + r * std::sin(t));
      if (std::hypot(v[0], v[1]) < 1e-9)
        throw consistency_error("boundary field has a zero on the circle");
      double a = std::atan2(v[1], v[0]);
      if (!first) total += detail_fold::wrap_pi(a - prev_angle);
      prev_angle = a;
      first = false;
    }
    double w = total / (2 * M_PI);
    if (std::abs(w - std::llround(w)) > 0.01) ok = false;
    if (ok) {
      long long winding = std::llround(w);
      if (have_prev && winding == prev_winding) return winding - 1;
      prev_winding = winding;
      have_prev = true;
    } else {
      have_prev = false;
    }
  }
  throw consistency_error("boundary rotation did not stabilize under refinement");
}

/// Rotation of the pullback of the horizontal frame, the boundary term in
/// the cusp-parity count: uses the field J(x,y)^{-1} e1, defined wherever
/// the circle avoids the fold curve.
inline long long frame_pullback_rotation(const PlaneMap& m, double cx, double cy, double r) {
  auto field = [&m](double x, double y) -> std::array<double, 2> {
    auto J = m.jacobian(x, y);
    double det = J[0] * J[3] - J[1] * J[2];
    if (std::abs(det) < 1e-9)
      throw consistency_error("frame pullback evaluated on the fold curve");
    return {J[3] / det, -J[2] / det};
  };
  return boundary_rotation(field, cx, cy, r);
}

}  // namespace relthom::numlab

#endif  // RELTHOM_NUMLAB_FOLDCUSP_HPP
