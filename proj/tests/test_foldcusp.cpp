#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "relthom/numlab/foldcusp.hpp"
#include "relthom/numlab/presets.hpp"

using namespace relthom;
using namespace relthom::numlab;

TEST_CASE("the pleat has a single cusp at the origin") {
  // (x, y^3 - xy): the standard picture with one cusp point.
  PlaneMap m(Poly2d::x(), Poly2d::term(0, 3, 1) + Poly2d::term(1, 1, -1));
  FoldCuspResult r = detect_folds_and_cusps(m, 1.0);
  CHECK(r.cusps.count == 1);
  REQUIRE(r.cusps.points.size() == 1);
  CHECK(std::hypot(r.cusps.points[0].x[0], r.cusps.points[0].x[1]) < 1e-8);

  // One open fold arc through the disk, carrying the cusp.
  REQUIRE(r.components.size() == 1);
  CHECK_FALSE(r.components[0].closed);
  CHECK(r.components[0].cusp_count == 1);
}

TEST_CASE("a pure fold line has no cusps") {
  // (x, y^2) folds along y = 0 with the kernel never tangent.
  PlaneMap m(Poly2d::x(), Poly2d::term(0, 2, 1));
  FoldCuspResult r = detect_folds_and_cusps(m, 1.0);
  CHECK(r.cusps.count == 0);
  REQUIRE(r.components.size() == 1);
  CHECK_FALSE(r.components[0].closed);
  CHECK(r.components[0].points.size() >= 50);
  for (const auto& p : r.components[0].points)
    CHECK(std::abs(p[1]) < 1e-8);  // the fold curve is the x-axis
}

TEST_CASE("a closed fold circle is traced as one loop with two cusps") {
  // (x, y^3 - 3y + 3x^2 y): det vanishes on an oval around the origin.
  PlaneMap m(Poly2d::x(), Poly2d::term(0, 3, 1) + Poly2d::term(0, 1, -3) +
                              Poly2d::term(2, 1, 3));
  FoldCuspResult r = detect_folds_and_cusps(m, 1.5);
  CHECK(r.cusps.count == 2);
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].closed);
  CHECK(r.components[0].cusp_count == 2);
  CHECK(r.components[0].prot_valid);
  CHECK(r.components[0].prot == 0);
}

TEST_CASE("fold components separate when the singular set splits") {
  for (const PlaneMapPreset& preset : built_in_presets().plane_maps) {
    if (preset.name != "two-ovals") continue;
    PlaneMap m(preset.f1, preset.f2);
    FoldCuspResult r = detect_folds_and_cusps(m, preset.radius);
    CHECK(r.cusps.count == 4);
    long long closed = 0;
    for (const auto& c : r.components) closed += c.closed ? 1 : 0;
    CHECK(closed == 2);
  }
}

TEST_CASE("cusp counts are stable across the documented family") {
  for (double eps : {0.0, 0.01, 0.05}) {
    auto [f1, f2] = pleat_family(eps);
    PlaneMap m(f1, f2);
    INFO("eps = " << eps);
    CHECK(detect_folds_and_cusps(m, 1.0).cusps.count == 1);
  }
}

TEST_CASE("maps that are regular everywhere have empty fold sets") {
  // (x + y^3/10, y): det = 1 everywhere.
  PlaneMap m(Poly2d::x() + Poly2d::term(0, 3, 0.1), Poly2d::y());
  FoldCuspResult r = detect_folds_and_cusps(m, 1.0);
  CHECK(r.components.empty());
  CHECK(r.cusps.count == 0);
}

TEST_CASE("boundary rotation measures the field winding minus one") {
  auto radial = [](double x, double y) -> std::array<double, 2> {
    return {x, y};
  };
  CHECK(boundary_rotation(radial, 0, 0, 1.0) == 0);

  auto squared = [](double x, double y) -> std::array<double, 2> {
    return {x * x - y * y, 2 * x * y};
  };
  CHECK(boundary_rotation(squared, 0, 0, 1.0) == 1);

  auto constant = [](double, double) -> std::array<double, 2> {
    return {1.0, 0.0};
  };
  CHECK(boundary_rotation(constant, 0, 0, 1.0) == -1);

  auto conjugate = [](double x, double y) -> std::array<double, 2> {
    return {x, -y};
  };
  CHECK(boundary_rotation(conjugate, 0, 0, 1.0) == -2);

  SECTION("a field vanishing on the circle is rejected") {
    auto bad = [](double x, double y) -> std::array<double, 2> {
      return {x * x + y * y - 1.0, 0.0};
    };
    CHECK_THROWS_AS(boundary_rotation(bad, 0, 0, 1.0), consistency_error);
  }
}

TEST_CASE("frame pullback rotation is read off the inverse differential") {
  // Regular linear map: the pulled-back frame is constant, and a constant
  // field reads -1 under the winding-minus-one convention.
  PlaneMap id(Poly2d::x(), Poly2d::y());
  CHECK(frame_pullback_rotation(id, 0, 0, 1.0) == -1);

  // Around the fold circle of the cusped oval map the frame turns by -1.
  PlaneMap oval(Poly2d::x(), Poly2d::term(0, 3, 1) + Poly2d::term(0, 1, -3) +
                                 Poly2d::term(2, 1, 3));
  CHECK(frame_pullback_rotation(oval, 0, 0, 1.5) == -1);

  SECTION("evaluating on the fold curve itself is an error") {
    PlaneMap fold(Poly2d::x(), Poly2d::term(0, 2, 1));
    // The circle of radius 1 crosses the fold line y = 0.
    CHECK_THROWS_AS(frame_pullback_rotation(fold, 0, 0, 1.0),
                    consistency_error);
  }
}

TEST_CASE("cusp parity matches the Euler count plus frame rotation") {
  for (const PlaneMapPreset& preset : built_in_presets().plane_maps) {
    if (!preset.parity_check) continue;
    INFO(preset.name);
    PlaneMap m(preset.f1, preset.f2);
    FoldCuspResult r = detect_folds_and_cusps(m, preset.radius);
    long long rot = frame_pullback_rotation(m, 0, 0, preset.radius);
    long long chi = 1;  // disk domain
    CHECK(((r.cusps.count % 2) + 2) % 2 == (((chi + rot) % 2) + 2) % 2);
  }
}

TEST_CASE("accepted cusps have tiny residuals and the detector counts loops") {
  PlaneMap m(Poly2d::x(), Poly2d::term(0, 3, 1) + Poly2d::term(1, 1, -1));
  SingularityReport cusps = find_cusps(m, 1.0, {});
  REQUIRE(cusps.count == 1);
  for (const auto& p : cusps.points) CHECK(p.residual < 1e-10);

  FoldCuspResult r = detect_folds_and_cusps(m, 1.0);
  REQUIRE(r.cusps.diagnostics.count("fold_components") == 1);
  CHECK(r.cusps.diagnostics.at("fold_components") >= 1.0);
}
