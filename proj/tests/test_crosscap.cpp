// Cross-cap counting: real germs by multi-start Gauss-Newton on the minor
// system, complex germs by two independent pipelines that must agree.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "relthom/numlab/crosscap.hpp"
#include "relthom/numlab/presets.hpp"

using namespace relthom;
using namespace relthom::numlab;

TEST_CASE("real germ presets match their declared counts") {
  for (const RealGermPreset& preset : built_in_presets().germs_real) {
    INFO(preset.name);
    RealGerm germ(preset.f1, preset.f2, preset.f3);
    SingularityReport report = cross_caps_real(germ, preset.radius);
    CHECK(report.count == preset.expected);
    for (const auto& p : report.points) CHECK(p.residual < 1e-10);
  }
}

TEST_CASE("complex germ presets match their declared counts") {
  for (const ComplexGermPreset& preset : built_in_presets().germs_complex) {
    INFO(preset.name);
    ComplexGerm germ(preset.f1, preset.f2, preset.f3);
    SingularityReport report = cross_caps_complex(germ, preset.radius);
    CHECK(report.count == preset.expected);

    // The merged report records what each pipeline saw.
    REQUIRE(report.diagnostics.count("newton_count") == 1);
    REQUIRE(report.diagnostics.count("resultant_count") == 1);
    CHECK(report.diagnostics.at("newton_count") == Catch::Approx(report.count));
    CHECK(report.diagnostics.at("resultant_count") == Catch::Approx(report.count));
  }
}

TEST_CASE("rank-drop positions land where the split family puts them") {
  // At eps = 0.2 the four cross-caps of the S3 family sit on the x axis at
  // +-eps and +-2 eps, far enough apart to certify each position.
  auto f = real_germ_family("S3", 0.2);
  RealGerm germ(f[0], f[1], f[2]);
  SingularityReport report = cross_caps_real(germ, 1.0);
  REQUIRE(report.count == 4);

  const double expect_x[4] = {-0.4, -0.2, 0.2, 0.4};
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(report.points[i].x[0] - expect_x[i]) < 1e-6);
    CHECK(std::abs(report.points[i].x[1]) < 1e-6);
  }
}

TEST_CASE("complex counts do not move when the perturbation changes") {
  for (const char* family : {"S1", "S2", "S3"}) {
    INFO(family);
    long long counts[2];
    double epsilons[2] = {0.01, 0.03};
    for (int i = 0; i < 2; ++i) {
      auto f = complex_germ_family(family, epsilons[i]);
      ComplexGerm germ(f[0], f[1], f[2]);
      counts[i] = cross_caps_complex(germ, 1.0).count;
    }
    CHECK(counts[0] == counts[1]);
  }
}

TEST_CASE("a non-simple rank-drop point is rejected, not counted") {
  // The unperturbed S1 germ collapses both cross-caps onto the origin where
  // the minor Jacobian loses rank; the certificate must refuse it.
  auto f = real_germ_family("S1", 0.0);
  RealGerm germ(f[0], f[1], f[2]);
  CHECK_THROWS_AS(cross_caps_real(germ, 1.0), consistency_error);
}

TEST_CASE("reports are deterministic across repeated runs") {
  auto f = complex_germ_family("S2", 0.01);
  ComplexGerm germ(f[0], f[1], f[2]);
  SingularityReport a = cross_caps_complex(germ, 1.0);
  SingularityReport b = cross_caps_complex(germ, 1.0);
  REQUIRE(a.count == b.count);
  for (std::size_t i = 0; i < a.points.size(); ++i)
    for (std::size_t k = 0; k < a.points[i].x.size(); ++k)
      CHECK(a.points[i].x[k] == b.points[i].x[k]);
}
