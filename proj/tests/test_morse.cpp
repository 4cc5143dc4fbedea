#include <catch2/catch_amalgamated.hpp>

#include "relthom/numlab/morse.hpp"
#include "relthom/numlab/presets.hpp"

using namespace relthom;
using namespace relthom::numlab;

TEST_CASE("domains know their topology") {
  Domain disk = Domain::disk(1.0);
  CHECK(disk.euler() == 1);
  CHECK(disk.contains(0.5, 0.0, 0.0));
  CHECK_FALSE(disk.contains(1.5, 0.0, 0.0));

  Domain ring = Domain::annulus(0.5, 1.5);
  CHECK(ring.euler() == 0);
  CHECK(ring.contains(1.0, 0.0, 0.0));
  CHECK_FALSE(ring.contains(0.0, 0.0, 0.0));

  Domain pair{{DiskComponent{-2.0, 0.0, 0.0, 1.0},
               DiskComponent{2.0, 0.0, 0.0, 1.0}}};
  CHECK(pair.euler() == 2);
}

TEST_CASE("a single bowl has one positive zero") {
  Poly2d bowl = Poly2d::term(2, 0, 1) + Poly2d::term(0, 2, 1);
  SingularityReport r = morse_signed_count(bowl, Domain::disk(1.0));
  CHECK(r.count == 1);
  REQUIRE(r.points.size() == 1);
  CHECK(r.points[0].sign == 1);
  CHECK(std::abs(r.points[0].x[0]) < 1e-10);
  CHECK(std::abs(r.points[0].x[1]) < 1e-10);
}

TEST_CASE("a saddle counts negatively") {
  Poly2d saddle = Poly2d::term(2, 0, 1) + Poly2d::term(0, 2, -1);
  SingularityReport r = morse_signed_count(saddle, Domain::disk(1.0));
  CHECK(r.count == -1);
  REQUIRE(r.points.size() == 1);
  CHECK(r.points[0].sign == -1);
}

TEST_CASE("cancelling pairs still sum to the Euler count") {
  // f = x^4/4 - x^2/2 + y^2: minima at x = +-1 shift inside a radius-1.6
  // disk together with the saddle between them, so 1 - 1 + 1 = 1.
  Poly2d f = Poly2d::term(4, 0, 0.25) + Poly2d::term(2, 0, -0.5) +
             Poly2d::term(0, 2, 1);
  SingularityReport r = morse_signed_count(f, Domain::disk(1.6));
  CHECK(r.count == 1);
  CHECK(r.points.size() == 3);
  long long plus = 0, minus = 0;
  for (const auto& p : r.points) (p.sign > 0 ? plus : minus) += 1;
  CHECK(plus == 2);
  CHECK(minus == 1);
}

TEST_CASE("every shipped preset realizes its declared count") {
  for (const MorsePreset& preset : built_in_presets().morse) {
    INFO(preset.name);
    SingularityReport r = morse_signed_count(preset);
    CHECK(r.count == preset.declared_chi);
  }
}

TEST_CASE("gradients vanishing on the boundary are refused") {
  // f = (x^2 + y^2 - 1)^2 has critical circle exactly on the rim.
  Poly2d r2 = Poly2d::term(2, 0, 1) + Poly2d::term(0, 2, 1) + Poly2d::constant(-1);
  CHECK_THROWS_AS(morse_signed_count(r2 * r2, Domain::disk(1.0)),
                  consistency_error);
}

TEST_CASE("near-degenerate interior zeros are refused, not miscounted") {
  // f = 1e-8 x^2 + y^2 + x^4: the only zero sits at the origin with a
  // Hessian determinant of 4e-8, far inside the genericity floor.
  Poly2d f = Poly2d::term(2, 0, 1e-8) + Poly2d::term(0, 2, 1) +
             Poly2d::term(4, 0, 1);
  CHECK_THROWS_AS(morse_signed_count(f, Domain::disk(1.0)), consistency_error);
}

TEST_CASE("annulus counts ignore the excluded core") {
  // The ring-shaped saddle field x^2 - y^2 has its only zero at the origin,
  // outside the annulus, so the signed count is the annulus Euler count 0.
  Poly2d f = Poly2d::term(2, 0, 1) + Poly2d::term(0, 2, -1);
  SingularityReport r = morse_signed_count(f, Domain::annulus(0.5, 1.5));
  CHECK(r.count == 0);
  CHECK(r.points.empty());
}
