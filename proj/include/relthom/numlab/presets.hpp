#ifndef RELTHOM_NUMLAB_PRESETS_HPP
#define RELTHOM_NUMLAB_PRESETS_HPP

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "relthom/numlab/curves.hpp"
#include "relthom/numlab/morse.hpp"
#include "relthom/numlab/poly2.hpp"
#include "relthom/numlab/roots.hpp"
#include "relthom/profile.hpp"
#include "relthom/ring.hpp"

namespace relthom::numlab {

using json = nlohmann::ordered_json;

struct HolomorphicPreset {
  std::string name;
  ComplexPoly poly;
  double radius = 1.0;
  long long expected = 0;  // critical points in the disk, with multiplicity
};

struct PlaneMapPreset {
  std::string name;
  Poly2d f1, f2;
  double radius = 1.0;
  long long expected_cusps = 0;
  long long expected_closed = 0;  // closed fold components
  bool parity_check = false;      // cusp parity against chi + boundary rotation
  std::string family;             // nonempty for one-parameter families
  double epsilon = 0.0;
};

struct RealGermPreset {
  std::string name;
  Poly2d f1, f2, f3;
  double radius = 1.0;
  long long expected = 0;
  std::string family;
  double epsilon = 0.0;
};

struct ComplexGermPreset {
  std::string name;
  Poly2c f1, f2, f3;
  double radius = 1.0;
  long long expected = 0;
  std::string family;
  double epsilon = 0.0;
};

struct CurvePreset {
  std::string name;
  bool closed = false;
  std::vector<double> px, py;  // polynomial arc coefficients
  double t0 = 0, t1 = 1;
  FourierSeries fx, fy;        // closed loops
  long long expected = 0;      // double points

  CurveFn curve() const {
    return closed ? fourier_loop(fx, fy) : polynomial_arc(px, py, t0, t1);
  }
};

struct PresetCorpus {
  std::vector<HolomorphicPreset> holomorphic;
  std::vector<MorsePreset> morse;
  std::vector<PlaneMapPreset> plane_maps;
  std::vector<RealGermPreset> germs_real;
  std::vector<ComplexGermPreset> germs_complex;
  std::vector<CurvePreset> curves;
};

// ---------------------------------------------------------------------------
// One-parameter families, rebuildable at any epsilon.

/// Cuspidal family (x, y^3 - xy + eps x^2 y): exactly one cusp stays inside
/// the unit disk for every small eps, the second solution escapes to 1/eps.
inline std::pair<Poly2d, Poly2d> pleat_family(double eps) {
  Poly2d f2 = Poly2d::term(0, 3, 1) + Poly2d::term(1, 1, -1) + Poly2d::term(2, 1, eps);
  return {Poly2d::x(), f2};
}

/// Real germ families with fully real rank-drop sets: the third component
/// is y^3 - q(x) y with q chosen so q has k+1 simple real roots.
inline std::array<Poly2d, 3> real_germ_family(const std::string& family, double eps) {
  Poly2d f1 = Poly2d::x(), f2 = Poly2d::term(0, 2, 1);
  if (family == "whitney") return {f1, f2, Poly2d::term(1, 1, 1)};
  if (family == "S1")
    return {f1, f2, Poly2d::term(0, 3, 1) + Poly2d::term(2, 1, -1) + Poly2d::term(0, 1, eps)};
  if (family == "S2")
    return {f1, f2,
            Poly2d::term(0, 3, 1) + Poly2d::term(3, 1, -1) + Poly2d::term(1, 1, 3 * eps * eps)};
  if (family == "S3")
    return {f1, f2,
            Poly2d::term(0, 3, 1) + Poly2d::term(4, 1, -1) +
                Poly2d::term(2, 1, 5 * eps * eps) +
                Poly2d::term(0, 1, -4 * eps * eps * eps * eps)};
  throw input_error("unknown real germ family: " + family);
}

/// Complex germ families (x, y^2, y^3 - x^{k+1} y + eps y): the rank-drop
/// set is y = 0, x^{k+1} = eps, so the count is k+1 for any eps != 0.
inline std::array<Poly2c, 3> complex_germ_family(const std::string& family, double eps) {
  using C = std::complex<double>;
  Poly2c f1 = Poly2c::x(), f2 = Poly2c::term(0, 2, C(1));
  if (family == "whitney")
    return {f1, f2, Poly2c::term(1, 1, C(1)) + Poly2c::term(0, 1, C(-eps))};
  for (int k = 1; k <= 3; ++k) {
    if (family == "S" + std::to_string(k))
      return {f1, f2,
              Poly2c::term(0, 3, C(1)) + Poly2c::term(k + 1, 1, C(-1)) +
                  Poly2c::term(0, 1, C(eps))};
  }
  throw input_error("unknown complex germ family: " + family);
}

// ---------------------------------------------------------------------------
// Built-in corpus.

inline const PresetCorpus& built_in_presets() {
  static const PresetCorpus corpus = [] {
    PresetCorpus c;

    // Holomorphic: critical points in a disk, multiplicity included.
    c.holomorphic.push_back({"cubic-monomial", ComplexPoly::from_integers({0, 0, 0, 1}),
                             1.0, 2});
    c.holomorphic.push_back(
        {"split-cubic",
         ComplexPoly(std::vector<RationalComplex>{RationalComplex(Rational(0)),
                                                  RationalComplex(Rational(-3, 100)),
                                                  RationalComplex(Rational(0)),
                                                  RationalComplex(Rational(1))}),
         1.0, 2});
    c.holomorphic.push_back({"even-quartic", ComplexPoly::from_integers({0, 0, -1, 0, 1}),
                             1.0, 3});
    c.holomorphic.push_back({"airy-quintic", ComplexPoly::from_integers({1, -5, 0, 0, 0, 1}),
                             1.25, 4});

    // Morse functions against their declared index sums.
    using P = Poly2d;
    c.morse.push_back({"bowl", P::term(2, 0, 1) + P::term(0, 2, 1) + P::constant(-1),
                       Domain::disk(1.0), 1});
    c.morse.push_back({"peak", P::constant(1) + P::term(2, 0, -1) + P::term(0, 2, -1),
                       Domain::disk(1.0), 1});
    {
      P q = P::term(2, 0, 1) + P::constant(-0.25);
      c.morse.push_back({"two-bumps", (q * q).scaled(-1.0) + P::term(0, 2, -1),
                         Domain::disk(1.0), 1});
    }
    c.morse.push_back({"saddle", P::term(2, 0, 1) + P::term(0, 2, -1), Domain::disk(1.0), -1});
    c.morse.push_back({"ring-saddle", P::term(2, 0, 1) + P::term(0, 2, -1),
                       Domain::annulus(0.5, 1.5), 0});
    {
      P q = P::term(2, 0, 1) + P::constant(-4);
      c.morse.push_back({"twin-bowls", (q * q).scaled(1.0 / 16.0) + P::term(0, 2, 1),
                         Domain{{DiskComponent{-2, 0, 0, 1}, DiskComponent{2, 0, 0, 1}}}, 2});
    }

    // Plane-to-plane maps.
    c.plane_maps.push_back({"pleat", P::x(), P::term(0, 3, 1) + P::term(1, 1, -1), 1.0, 1,
                            0, false, "", 0.0});
    c.plane_maps.push_back({"fold-line", P::x(), P::term(0, 2, 1), 1.0, 0, 0, false, "", 0.0});
    {
      auto [f1, f2] = pleat_family(0.01);
      c.plane_maps.push_back({"pleat-drift", f1, f2, 1.0, 1, 0, false, "pleat", 0.01});
    }
    c.plane_maps.push_back({"fold-circle", P::x(),
                            P::term(0, 3, 1) + P::term(0, 1, -3) + P::term(2, 1, 3), 1.5, 2,
                            1, true, "", 0.0});
    {
      // u = (x^2-1)(4-x^2); folds are the two ovals y^2 = u.
      P u = P::term(4, 0, -1) + P::term(2, 0, 5) + P::constant(-4);
      P f2 = P::term(0, 3, 1) + (u * P::y()).scaled(-3.0);
      c.plane_maps.push_back({"two-ovals", P::x(), f2, 2.5, 4, 2, true, "", 0.0});
    }

    // Space germs, real and complex.
    auto push_real = [&](const std::string& name, const std::string& family, double eps,
                         long long expected) {
      auto f = real_germ_family(family, eps);
      c.germs_real.push_back({name, f[0], f[1], f[2], 1.0, expected, family, eps});
    };
    push_real("cross-cap", "whitney", 0.0, 1);
    push_real("split-1", "S1", 0.01, 2);
    push_real("split-2", "S2", 0.01, 3);
    push_real("split-3", "S3", 0.01, 4);

    auto push_complex = [&](const std::string& name, const std::string& family, double eps,
                            long long expected) {
      auto f = complex_germ_family(family, eps);
      c.germs_complex.push_back({name, f[0], f[1], f[2], 1.0, expected, family, eps});
    };
    push_complex("cross-cap-c", "whitney", 0.01, 1);
    push_complex("split-1c", "S1", 0.01, 2);
    push_complex("split-2c", "S2", 0.01, 3);
    push_complex("split-3c", "S3", 0.01, 4);

    // Immersed curves.
    c.curves.push_back({"embedded-arc", false, {0, 1}, {0, -1, 0, 1}, -1.5, 1.5, {}, {}, 0});
    c.curves.push_back({"nodal-cubic", false, {-1, 0, 1}, {0, -1, 0, 1}, -1.5, 1.5, {}, {}, 1});
    {
      FourierSeries fx, fy;
      fx.cos_coeffs = {1};
      fy.sin_coeffs = {1};
      c.curves.push_back({"round-circle", true, {}, {}, 0, 0, fx, fy, 0});
    }
    {
      FourierSeries fx, fy;
      fx.sin_coeffs = {1, 2};
      fy.cos_coeffs = {1, -2};
      c.curves.push_back({"trefoil-shadow", true, {}, {}, 0, 0, fx, fy, 3});
    }
    return c;
  }();
  return corpus;
}

// ---------------------------------------------------------------------------
// JSON serialization.  Formats are exact: dyadic-friendly doubles round-trip
// through the shortest-representation printer, rationals stay rational.

namespace detail_presets {

inline json poly2d_to_json(const Poly2d& p) {
  json arr = json::array();
  for (auto& [k, v] : p.terms()) arr.push_back(json::array({k.first, k.second, v}));
  return arr;
}

inline Poly2d poly2d_from_json(const json& j) {
  Poly2d p;
  if (!j.is_array()) throw input_error("polynomial table must be an array");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) throw input_error("polynomial term must be [i, j, c]");
    p.set(e[0].get<int>(), e[1].get<int>(), e[2].get<double>());
  }
  return p;
}

inline json poly2c_to_json(const Poly2c& p) {
  json arr = json::array();
  for (auto& [k, v] : p.terms())
    arr.push_back(json::array({k.first, k.second, v.real(), v.imag()}));
  return arr;
}

inline Poly2c poly2c_from_json(const json& j) {
  Poly2c p;
  if (!j.is_array()) throw input_error("polynomial table must be an array");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4)
      throw input_error("complex polynomial term must be [i, j, re, im]");
    p.set(e[0].get<int>(), e[1].get<int>(),
          std::complex<double>(e[2].get<double>(), e[3].get<double>()));
  }
  return p;
}

inline json rational_poly_to_json(const ComplexPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients())
    arr.push_back(json::array({c.re.num, c.re.den, c.im.num, c.im.den}));
  return arr;
}

inline ComplexPoly rational_poly_from_json(const json& j) {
  if (!j.is_array()) throw input_error("rational polynomial must be an array");
  std::vector<RationalComplex> coeffs;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4)
      throw input_error("rational coefficient must be [re_num, re_den, im_num, im_den]");
    coeffs.emplace_back(Rational(e[0].get<std::int64_t>(), e[1].get<std::int64_t>()),
                        Rational(e[2].get<std::int64_t>(), e[3].get<std::int64_t>()));
  }
  return ComplexPoly(std::move(coeffs));
}

inline json domain_to_json(const Domain& d) {
  json arr = json::array();
  for (const auto& c : d.components) {
    json e;
    e["cx"] = c.cx;
    e["cy"] = c.cy;
    e["r_in"] = c.r_in;
    e["r_out"] = c.r_out;
    arr.push_back(e);
  }
  return arr;
}

inline Domain domain_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw input_error("domain must be a nonempty array");
  Domain d;
  for (const auto& e : j) {
    relthom::detail::JsonReader r(e, "domain component");
    DiskComponent c;
    c.cx = r.require("cx").get<double>();
    c.cy = r.require("cy").get<double>();
    c.r_in = r.require("r_in").get<double>();
    c.r_out = r.require("r_out").get<double>();
    r.finish();
    if (c.r_out <= c.r_in || c.r_out <= 0)
      throw input_error("domain component radii out of order");
    d.components.push_back(c);
  }
  return d;
}

inline json fourier_to_json(const FourierSeries& f) {
  json j;
  j["a0"] = f.a0;
  j["cos"] = f.cos_coeffs;
  j["sin"] = f.sin_coeffs;
  return j;
}

inline FourierSeries fourier_from_json(const json& j) {
  relthom::detail::JsonReader r(j, "fourier series");
  FourierSeries f;
  f.a0 = r.require("a0").get<double>();
  f.cos_coeffs = r.require("cos").get<std::vector<double>>();
  f.sin_coeffs = r.require("sin").get<std::vector<double>>();
  r.finish();
  return f;
}

}  // namespace detail_presets

inline json corpus_to_json(const PresetCorpus& c) {
  using namespace detail_presets;
  json j;
  j["holomorphic"] = json::array();
  for (const auto& p : c.holomorphic) {
    json e;
    e["name"] = p.name;
    e["coefficients"] = rational_poly_to_json(p.poly);
    e["radius"] = p.radius;
    e["expected"] = p.expected;
    j["holomorphic"].push_back(e);
  }
  j["morse"] = json::array();
  for (const auto& p : c.morse) {
    json e;
    e["name"] = p.name;
    e["f"] = poly2d_to_json(p.f);
    e["domain"] = domain_to_json(p.domain);
    e["declared_chi"] = p.declared_chi;
    j["morse"].push_back(e);
  }
  j["plane_maps"] = json::array();
  for (const auto& p : c.plane_maps) {
    json e;
    e["name"] = p.name;
    e["f1"] = poly2d_to_json(p.f1);
    e["f2"] = poly2d_to_json(p.f2);
    e["radius"] = p.radius;
    e["expected_cusps"] = p.expected_cusps;
    e["expected_closed"] = p.expected_closed;
    e["parity_check"] = p.parity_check;
    e["family"] = p.family;
    e["epsilon"] = p.epsilon;
    j["plane_maps"].push_back(e);
  }
  j["germs_real"] = json::array();
  for (const auto& p : c.germs_real) {
    json e;
    e["name"] = p.name;
    e["f1"] = poly2d_to_json(p.f1);
    e["f2"] = poly2d_to_json(p.f2);
    e["f3"] = poly2d_to_json(p.f3);
    e["radius"] = p.radius;
    e["expected"] = p.expected;
    e["family"] = p.family;
    e["epsilon"] = p.epsilon;
    j["germs_real"].push_back(e);
  }
  j["germs_complex"] = json::array();
  for (const auto& p : c.germs_complex) {
    json e;
    e["name"] = p.name;
    e["f1"] = poly2c_to_json(p.f1);
    e["f2"] = poly2c_to_json(p.f2);
    e["f3"] = poly2c_to_json(p.f3);
    e["radius"] = p.radius;
    e["expected"] = p.expected;
    e["family"] = p.family;
    e["epsilon"] = p.epsilon;
    j["germs_complex"].push_back(e);
  }
  j["curves"] = json::array();
  for (const auto& p : c.curves) {
    json e;
    e["name"] = p.name;
    e["closed"] = p.closed;
    if (p.closed) {
      e["x"] = fourier_to_json(p.fx);
      e["y"] = fourier_to_json(p.fy);
    } else {
      e["px"] = p.px;
      e["py"] = p.py;
      e["t0"] = p.t0;
      e["t1"] = p.t1;
    }
    e["expected"] = p.expected;
    j["curves"].push_back(e);
  }
  return j;
}

inline PresetCorpus corpus_from_json(const json& j) {
  using namespace detail_presets;
  if (!j.is_object()) throw input_error("preset corpus must be a JSON object");
  relthom::detail::JsonReader top(j, "preset corpus");
  PresetCorpus c;
  for (const auto& e : top.require("holomorphic")) {
    relthom::detail::JsonReader r(e, "holomorphic preset");
    HolomorphicPreset p;
    p.name = r.require("name").get<std::string>();
    p.poly = rational_poly_from_json(r.require("coefficients"));
    p.radius = r.require("radius").get<double>();
    p.expected = r.require("expected").get<long long>();
    r.finish();
    c.holomorphic.push_back(std::move(p));
  }
  for (const auto& e : top.require("morse")) {
    relthom::detail::JsonReader r(e, "morse preset");
    MorsePreset p;
    p.name = r.require("name").get<std::string>();
    p.f = poly2d_from_json(r.require("f"));
    p.domain = domain_from_json(r.require("domain"));
    p.declared_chi = r.require("declared_chi").get<long long>();
    r.finish();
    c.morse.push_back(std::move(p));
  }
  for (const auto& e : top.require("plane_maps")) {
    relthom::detail::JsonReader r(e, "plane map preset");
    PlaneMapPreset p;
    p.name = r.require("name").get<std::string>();
    p.f1 = poly2d_from_json(r.require("f1"));
    p.f2 = poly2d_from_json(r.require("f2"));
    p.radius = r.require("radius").get<double>();
    p.expected_cusps = r.require("expected_cusps").get<long long>();
    p.expected_closed = r.require("expected_closed").get<long long>();
    p.parity_check = r.require("parity_check").get<bool>();
    p.family = r.require("family").get<std::string>();
    p.epsilon = r.require("epsilon").get<double>();
    r.finish();
    c.plane_maps.push_back(std::move(p));
  }
  for (const auto& e : top.require("germs_real")) {
    relthom::detail::JsonReader r(e, "real germ preset");
    RealGermPreset p;
    p.name = r.require("name").get<std::string>();
    p.f1 = poly2d_from_json(r.require("f1"));
    p.f2 = poly2d_from_json(r.require("f2"));
    p.f3 = poly2d_from_json(r.require("f3"));
    p.radius = r.require("radius").get<double>();
    p.expected = r.require("expected").get<long long>();
    p.family = r.require("family").get<std::string>();
    p.epsilon = r.require("epsilon").get<double>();
    r.finish();
    c.germs_real.push_back(std::move(p));
  }
  for (const auto& e : top.require("germs_complex")) {
    relthom::detail::JsonReader r(e, "complex germ preset");
    ComplexGermPreset p;
    p.name = r.require("name").get<std::string>();
    p.f1 = poly2c_from_json(r.require("f1"));
    p.f2 = poly2c_from_json(r.require("f2"));
    p.f3 = poly2c_from_json(r.require("f3"));
    p.radius = r.require("radius").get<double>();
    p.expected = r.require("expected").get<long long>();
    p.family = r.require("family").get<std::string>();
    p.epsilon = r.require("epsilon").get<double>();
    r.finish();
    c.germs_complex.push_back(std::move(p));
  }
  for (const auto& e : top.require("curves")) {
    relthom::detail::JsonReader r(e, "curve preset");
    CurvePreset p;
    p.name = r.require("name").get<std::string>();
    p.closed = r.require("closed").get<bool>();
    if (p.closed) {
      p.fx = fourier_from_json(r.require("x"));
      p.fy = fourier_from_json(r.require("y"));
    } else {
      p.px = r.require("px").get<std::vector<double>>();
      p.py = r.require("py").get<std::vector<double>>();
      p.t0 = r.require("t0").get<double>();
      p.t1 = r.require("t1").get<double>();
    }
    p.expected = r.require("expected").get<long long>();
    r.finish();
    c.curves.push_back(std::move(p));
  }
  top.finish();
  return c;
}

}  // namespace relthom::numlab

#endif  // RELTHOM_NUMLAB_PRESETS_HPP
