#ifndef RELTHOM_NUMLAB_REPORT_HPP
#define RELTHOM_NUMLAB_REPORT_HPP

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "relthom/ring.hpp"

namespace relthom::numlab {

// Pinned solver tolerances.  The presets are low-degree polynomials whose
// root separations are orders of magnitude above these bands.
inline constexpr double kNewtonTol = 1e-12;      // convergence inside Newton loops
inline constexpr double kAcceptResidual = 1e-10; // residual bound to accept a point
inline constexpr double kDedupRadius = 1e-6;     // distinct-solution separation
inline constexpr double kClusterRadius = 1e-7;   // eigenvalue multiplicity clustering
inline constexpr double kBoundaryBand = 1e-8;    // genericity band at domain boundaries
inline constexpr double kGenericityFloor = 1e-6; // smallest allowed certificate value

struct FoundPoint {
  std::vector<double> x;  // coordinates (2 reals, or 4 for complex pairs)
  double residual = 0.0;
  int multiplicity = 1;
  int sign = 0;  // +-1 for signed counts, 0 where signs are not meaningful
};

/// Uniform result of every counting pipeline.  Deterministic: points are
/// sorted lexicographically, diagnostics are a sorted map.
struct SingularityReport {
  std::vector<FoundPoint> points;
  long long count = 0;
  std::vector<long long> prot_values;  // closed fold components only
  std::map<std::string, double> diagnostics;

  long long count_mod2() const { return ((count % 2) + 2) % 2; }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const FoundPoint& p : points) {
      nlohmann::ordered_json e;
      e["x"] = p.x;
      e["residual"] = p.residual;
      e["multiplicity"] = p.multiplicity;
      e["sign"] = p.sign;
      pts.push_back(e);
    }
    nlohmann::ordered_json j;
    j["count"] = count;
    j["count_mod2"] = count_mod2();
    j["points"] = pts;
    j["prot_values"] = prot_values;
    nlohmann::ordered_json d = nlohmann::ordered_json::object();
    for (auto& [k, v] : diagnostics) d[k] = v;
    j["diagnostics"] = d;
    return j;
  }
};

/// Lexicographic sort followed by greedy clustering; the canonical merge
/// for grid-seeded searches, independent of seed scheduling.
inline std::vector<std::vector<double>> dedup_sorted(
    std::vector<std::vector<double>> pts, double radius) {
  std::sort(pts.begin(), pts.end());
  std::vector<std::vector<double>> out;
  for (const auto& p : pts) {
    bool fresh = true;
    for (const auto& q : out) {
      double d2 = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        d2 += (p[i] - q[i]) * (p[i] - q[i]);
      if (d2 < radius * radius) {
        fresh = false;
        break;
      }
    }
    if (fresh) out.push_back(p);
  }
  return out;
}

}  // namespace relthom::numlab

#endif  // RELTHOM_NUMLAB_REPORT_HPP
