#ifndef RELTHOM_NUMLAB_MORSE_HPP
#define RELTHOM_NUMLAB_MORSE_HPP

#include <cmath>
#include <string>
#include <vector>

#include "relthom/numlab/poly2.hpp"
#include "relthom/numlab/report.hpp"
#include "relthom/ring.hpp"

namespace relthom::numlab {

/// Round disk (r_in == 0) or annulus centered at (cx, cy).
struct DiskComponent {
  double cx = 0, cy = 0;
  double r_in = 0, r_out = 1;
};

/// Disjoint union of disks and annuli.  Enough shapes to realize every
/// small Euler characteristic without meshing anything.
struct Domain {
  std::vector<DiskComponent> components;

  bool contains(double x, double y, double margin = 0.0) const {
    for (const auto& c : components) {
      double r = std::hypot(x - c.cx, y - c.cy);
      if (r >= c.r_in + margin && r <= c.r_out - margin) return true;
    }
    return false;
  }

  /// Smallest distance from an interior point to any boundary circle.
  double boundary_distance(double x, double y) const {
    double best = 1e300;
    for (const auto& c : components) {
      double r = std::hypot(x - c.cx, y - c.cy);
      if (r < c.r_in || r > c.r_out) continue;
      best = std::min(best, c.r_out - r);
      if (c.r_in > 0) best = std::min(best, r - c.r_in);
    }
    return best;
  }

  long long euler() const {
    long long chi = 0;
    for (const auto& c : components) chi += (c.r_in > 0 ? 0 : 1);
    return chi;
  }

  static Domain disk(double r, double cx = 0, double cy = 0) {
    return Domain{{DiskComponent{cx, cy, 0, r}}};
  }
  static Domain annulus(double r_in, double r_out, double cx = 0, double cy = 0) {
    return Domain{{DiskComponent{cx, cy, r_in, r_out}}};
  }
};

struct MorsePreset {
  std::string name;
  Poly2d f;
  Domain domain;
  // The Euler count the gradient field realizes. For domains where the
  // gradient is not transverse-inward everywhere this is the index sum the
  // preset is constructed to produce, not Domain::euler().
  long long declared_chi = 0;
};

/// Signed count of nondegenerate critical points of f inside the domain:
/// sign = sign(det Hess f).  Grid-seeded Newton on grad f = 0, canonical
/// dedup, Hessian certificates; boundary tangencies abort the count.
inline SingularityReport morse_signed_count(const Poly2d& f, const Domain& domain) {
  Poly2d fx = f.dx(), fy = f.dy();
  Poly2d hxx = fx.dx(), hxy = fx.dy(), hyy = fy.dy();

  // The count is only meaningful when grad f never vanishes on the boundary.
  for (const auto& c : domain.components) {
    for (int ring = 0; ring < 2; ++ring) {
      double r = ring == 0 ? c.r_out : c.r_in;
      if (r <= 0) continue;
      for (int k = 0; k < 1024; ++k) {
        double t = 2.0 * M_PI * k / 1024.0;
        double x = c.cx + r * std::cos(t), y = c.cy + r * std::sin(t);
        double gx = fx.eval(x, y), gy = fy.eval(x, y);
        if (std::hypot(gx, gy) < kGenericityFloor)
          throw consistency_error("gradient vanishes on the domain boundary");
      }
    }
  }

  double scale = std::max(1.0, std::max(fx.magnitude(), fy.magnitude()));
  std::vector<std::vector<double>> hits;
  for (const auto& c : domain.components) {
    const int grid = 61;
    for (int i = 0; i < grid; ++i) {
      for (int j = 0; j < grid; ++j) {
        double x = c.cx + c.r_out * (2.0 * i / (grid - 1) - 1.0);
        double y = c.cy + c.r_out * (2.0 * j / (grid - 1) - 1.0);
        if (!domain.contains(x, y, 1e-3)) continue;
        bool ok = false;
        for (int it = 0; it < 60; ++it) {
          double g1 = fx.eval(x, y), g2 = fy.eval(x, y);
          if (std::abs(g1) < kNewtonTol * scale && std::abs(g2) < kNewtonTol * scale) {
            ok = true;
            break;
          }
          double a = hxx.eval(x, y), b = hxy.eval(x, y), d = hyy.eval(x, y);
          double det = a * d - b * b;
          if (std::abs(det) < 1e-14) break;
          double sx = (d * g1 - b * g2) / det, sy = (a * g2 - b * g1) / det;
          x -= sx;
          y -= sy;
          if (std::abs(x) > 1e6 || std::abs(y) > 1e6) break;
        }
        if (!ok) continue;
        if (!domain.contains(x, y)) continue;
        hits.push_back({x, y});
      }
    }
  }

  SingularityReport report;
  double max_residual = 0;
  for (const auto& p : dedup_sorted(std::move(hits), kDedupRadius)) {
    double x = p[0], y = p[1];
    if (domain.boundary_distance(x, y) < kBoundaryBand)
      throw consistency_error("critical point in the domain boundary band");
    double residual = std::hypot(fx.eval(x, y), fy.eval(x, y)) / scale;
    if (residual > kAcceptResidual)
      throw consistency_error("critical point failed the residual bound");
    double det = hxx.eval(x, y) * hyy.eval(x, y) - hxy.eval(x, y) * hxy.eval(x, y);
    if (std::abs(det) < kGenericityFloor)
      throw consistency_error("degenerate critical point (Hessian determinant near zero)");
    FoundPoint fp;
    fp.x = {x, y};
    fp.residual = residual;
    fp.sign = det > 0 ? 1 : -1;
    report.points.push_back(fp);
    report.count += fp.sign;
    max_residual = std::max(max_residual, residual);
  }
  report.diagnostics["critical_points"] = static_cast<double>(report.points.size());
  report.diagnostics["max_residual"] = max_residual;
  return report;
}

inline SingularityReport morse_signed_count(const MorsePreset& preset) {
  return morse_signed_count(preset.f, preset.domain);
}

}  // namespace relthom::numlab

#endif  // RELTHOM_NUMLAB_MORSE_HPP
