#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "relthom/predict.hpp"
#include "relthom/profile.hpp"

using namespace relthom;
using nlohmann::ordered_json;

namespace {

PredictionRequest load_request(const std::string& name) {
  std::ifstream in(std::string(RELTHOM_DATA_DIR) + "/profiles/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return PredictionRequest::from_json(ordered_json::parse(buf.str()));
}

PrescribedProfile disk_pair(int degree_unused = 0) {
  (void)degree_unused;
  PrescribedProfile pre;
  pre.m = pre.n = 1;
  pre.category = Category::Complex;
  pre.boundary = {"S1", BoundaryKind::Sphere, 0};
  pre.invariants["d_1"] = 0;
  return pre;
}

}  // namespace

TEST_CASE("branched covers of the disk lose one sheet per critical point") {
  for (int d = 2; d <= 9; ++d) {
    ExtensionProfile ext;
    ext.euler = 1;
    ext.degree_of_map = d;
    ext.rel_numbers["c1"] = 1;
    ext.rel_numbers["c'1"] = d;
    Prediction p =
        predict_count({SingName::A1, Category::Complex}, disk_pair(), ext);
    INFO("degree " << d);
    CHECK(p.correction_case == "ii");
    CHECK(p.total.as_integer() == d - 1);
  }
}

TEST_CASE("the shipped profile files predict their documented totals") {
  struct Expect {
    const char* file;
    const char* tag;
    std::int64_t total;
  } table[] = {
      {"branched-cover-deg5.json", "ii", 4},
      {"fold-sphere-boundary.json", "i", 0},
      {"cusps-flat-boundary.json", "viii", 0},
      {"immersed-sphere-omega1.json", "vii", 2},
  };
  for (const auto& e : table) {
    INFO(e.file);
    Prediction p = predict_count(load_request(e.file));
    CHECK(p.correction_case == e.tag);
    CHECK(p.total.as_integer() == e.total);
  }
}

TEST_CASE("sphere-boundary corrections add the frame defect") {
  // Nonzero d_1 shifts the count by twice the difference class number.
  ExtensionProfile ext;
  ext.euler = 1;
  ext.degree_of_map = 4;
  ext.rel_numbers["c1"] = 1;
  ext.rel_numbers["c'1"] = 4;
  PrescribedProfile pre = disk_pair();
  pre.invariants["d_1"] = 5;
  Prediction p = predict_count({SingName::A1, Category::Complex}, pre, ext);
  CHECK(p.naive.as_integer() == 3);
  CHECK(p.correction.as_integer() == 10);
  CHECK(p.total.as_integer() == 13);
}

TEST_CASE("unoriented counts live mod 2 no matter the inputs") {
  PrescribedProfile pre;
  pre.m = 3;
  pre.n = 2;
  pre.category = Category::RealUnoriented;
  pre.boundary = {"torus", BoundaryKind::General, 0};
  ExtensionProfile ext;
  ext.rel_numbers["w2"] = 7;
  Prediction p =
      predict_count({SingName::A1, Category::RealUnoriented}, pre, ext);
  CHECK(p.ring == Ring::z2());
  CHECK(p.correction_case == "iii");
  CHECK(p.total.as_integer() == 1);
}

TEST_CASE("the mod-24 row reduces its three-term bracket") {
  PrescribedProfile pre;
  pre.m = pre.n = 4;
  pre.category = Category::RealOriented;
  pre.boundary = {"Sigma", BoundaryKind::General, 0};
  pre.invariants["T"] = 23;
  pre.invariants["mu"] = 15;
  pre.invariants["delta"] = 4;
  ExtensionProfile ext;
  ext.rel_numbers["p1"] = -1;

  Prediction p =
      predict_count({SingName::Sigma2, Category::RealOriented}, pre, ext);
  CHECK(p.correction_case == "x");
  CHECK(p.ring == Ring::mod(24));
  // naive = -p1 = 1; correction = 2*23 + 3*15 + 4 = 95; 96 mod 24 = 0.
  CHECK(p.total.as_integer() == 0);
}

TEST_CASE("sphere boundaries double the complex regular-homotopy class") {
  PrescribedProfile pre;
  pre.m = pre.n = 4;
  pre.category = Category::RealOriented;
  pre.boundary = {"S3", BoundaryKind::Sphere, 0};
  pre.invariants["Omega_j"] = 3;
  ExtensionProfile ext;
  ext.rel_numbers["p1"] = 0;
  Prediction p =
      predict_count({SingName::Sigma2, Category::RealOriented}, pre, ext);
  CHECK(p.correction_case == "ix");
  CHECK(p.total.as_integer() == 6);
}

TEST_CASE("the normal-form override reaches the materialized row") {
  PrescribedProfile pre;
  pre.m = 4;
  pre.n = 5;
  pre.category = Category::RealOriented;
  pre.boundary = {"S3", BoundaryKind::Sphere, 0};
  pre.invariants["Omega"] = 1;
  ExtensionProfile ext;
  ext.rel_numbers["p1"] = 0;

  Prediction stock =
      predict_count({SingName::A2, Category::RealOriented}, pre, ext);
  CHECK(stock.total.as_integer() == 2);
  Prediction other = predict_count({SingName::A2, Category::RealOriented}, pre,
                                   ext, std::int64_t(1));
  CHECK(other.total.as_integer() == 1);
}

TEST_CASE("profiles missing a required invariant fail by name") {
  PrescribedProfile pre;
  pre.m = 4;
  pre.n = 5;
  pre.category = Category::RealOriented;
  pre.boundary = {"S3", BoundaryKind::Sphere, 0};  // Omega not given
  ExtensionProfile ext;
  ext.rel_numbers["p1"] = 0;
  try {
    predict_count({SingName::A2, Category::RealOriented}, pre, ext);
    FAIL("expected input_error");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("Omega") != std::string::npos);
  }
}

TEST_CASE("category mismatches between type and profile are rejected") {
  ExtensionProfile ext;
  ext.rel_numbers["c1"] = 1;
  ext.rel_numbers["c'1"] = 2;
  ext.degree_of_map = 2;
  ext.euler = 1;
  CHECK_THROWS_AS(
      predict_count({SingName::A1, Category::RealUnoriented}, disk_pair(), ext),
      input_error);
}

TEST_CASE("rel numbers of the wrong degree are refused") {
  PrescribedProfile pre;
  pre.m = 2;
  pre.n = 3;
  pre.category = Category::RealUnoriented;
  pre.boundary = {"S2", BoundaryKind::Sphere, 2};
  ExtensionProfile ext;
  ext.rel_numbers["w1"] = 1;  // degree 1, but the class is homogeneous of 2
  CHECK_THROWS_AS(
      predict_count({SingName::A1, Category::RealUnoriented}, pre, ext),
      input_error);
}

TEST_CASE("vanishing defaults fill monomials the profile omits") {
  PrescribedProfile pre;
  pre.m = 2;
  pre.n = 3;
  pre.category = Category::RealUnoriented;
  pre.boundary = {"S2", BoundaryKind::Sphere, 2};
  ExtensionProfile ext;
  ext.rel_numbers["w2"] = 1;  // w1^2 not given

  CHECK_THROWS_AS(
      predict_count({SingName::A1, Category::RealUnoriented}, pre, ext),
      input_error);
  ext.vanishing_defaults = true;
  Prediction p =
      predict_count({SingName::A1, Category::RealUnoriented}, pre, ext);
  CHECK(p.total.as_integer() == 1);
}

TEST_CASE("prediction reports serialize with fixed key order") {
  Prediction p = predict_count(load_request("branched-cover-deg5.json"));
  ordered_json j = p.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"type", "category", "m", "n", "ring",
                                         "correction_case", "naive",
                                         "correction", "total"});
}
