// Preset corpus serialization: exact JSON round-trips, drift detection
// against the shipped file, and fail-closed parsing.

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include "relthom/numlab/presets.hpp"

using namespace relthom;
using namespace relthom::numlab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("the built-in corpus has the documented shape") {
  const PresetCorpus& c = built_in_presets();
  CHECK(c.holomorphic.size() == 4);
  CHECK(c.morse.size() == 6);
  CHECK(c.plane_maps.size() == 5);
  CHECK(c.germs_real.size() == 4);
  CHECK(c.germs_complex.size() == 4);
  CHECK(c.curves.size() == 4);
}

TEST_CASE("corpus serialization round-trips byte for byte") {
  json first = corpus_to_json(built_in_presets());
  PresetCorpus rebuilt = corpus_from_json(first);
  json second = corpus_to_json(rebuilt);
  CHECK(first == second);
  CHECK(first.dump(2) == second.dump(2));
}

TEST_CASE("the shipped preset file matches the built-in corpus") {
  std::string path = std::string(RELTHOM_DATA_DIR) + "/presets/presets.json";
  std::string on_disk = slurp(path);
  std::string generated = corpus_to_json(built_in_presets()).dump(2) + "\n";
  CHECK(on_disk == generated);
}

TEST_CASE("corpus parsing is fail-closed") {
  json good = corpus_to_json(built_in_presets());

  SECTION("an unknown top-level key is rejected") {
    json doc = good;
    doc["extras"] = json::array();
    CHECK_THROWS_AS(corpus_from_json(doc), input_error);
  }

  SECTION("a missing section is rejected") {
    json doc = good;
    doc.erase("curves");
    CHECK_THROWS_AS(corpus_from_json(doc), input_error);
  }

  SECTION("an unknown key inside a preset is rejected") {
    json doc = good;
    doc["morse"][0]["comment"] = "not allowed";
    CHECK_THROWS_AS(corpus_from_json(doc), input_error);
  }

  SECTION("a malformed polynomial term is rejected") {
    json doc = good;
    doc["morse"][0]["f"][0] = json::array({1, 2});
    CHECK_THROWS_AS(corpus_from_json(doc), input_error);
  }

  SECTION("domain radii out of order are rejected") {
    json doc = good;
    doc["morse"][0]["domain"][0]["r_out"] = -1.0;
    CHECK_THROWS_AS(corpus_from_json(doc), input_error);
  }

  SECTION("a non-object corpus is rejected") {
    CHECK_THROWS_AS(corpus_from_json(json::array()), input_error);
  }
}

TEST_CASE("expected counts survive the round-trip unchanged") {
  PresetCorpus rebuilt = corpus_from_json(corpus_to_json(built_in_presets()));
  const PresetCorpus& orig = built_in_presets();
  REQUIRE(rebuilt.curves.size() == orig.curves.size());
  for (std::size_t i = 0; i < orig.curves.size(); ++i) {
    CHECK(rebuilt.curves[i].name == orig.curves[i].name);
    CHECK(rebuilt.curves[i].expected == orig.curves[i].expected);
  }
  REQUIRE(rebuilt.morse.size() == orig.morse.size());
  for (std::size_t i = 0; i < orig.morse.size(); ++i) {
    CHECK(rebuilt.morse[i].declared_chi == orig.morse[i].declared_chi);
    // The polynomial tables agree pointwise, not just structurally.
    CHECK(rebuilt.morse[i].f.eval(0.3, -0.7) ==
          Catch::Approx(orig.morse[i].f.eval(0.3, -0.7)).margin(0));
  }
}
