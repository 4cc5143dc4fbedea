#include <catch2/catch_amalgamated.hpp>

#include "relthom/catalog.hpp"

using namespace relthom;

TEST_CASE("the catalog carries nine absolute rows and eleven corrections") {
  CHECK(thom_rows().size() == 9);
  CHECK(correction_rows().size() == 11);

  // Correction tags are the roman numerals i..xi in order.
  const char* tags[] = {"i", "ii", "iii", "iv", "v", "vi",
                        "vii", "viii", "ix", "x", "xi"};
  for (std::size_t k = 0; k < correction_rows().size(); ++k)
    CHECK(correction_rows()[k].case_tag == tags[k]);
}

TEST_CASE("absolute classes render to their frozen forms") {
  struct Golden {
    SingTypeId id;
    int m, n;
    const char* text;
  } golden[] = {
      {{SingName::A1, Category::RealUnoriented}, 2, 3, "w1^2 + w2"},
      {{SingName::A1, Category::RealUnoriented}, 2, 4, "w1^3"},
      {{SingName::A1, Category::RealUnoriented}, 3, 5, "w1^3 + w3"},
      {{SingName::A1, Category::RealUnoriented}, 3, 2, "w2"},
      {{SingName::A1, Category::RealUnoriented}, 5, 5, "w1"},
      {{SingName::A1, Category::Complex}, 1, 2, "c1^2"},
      {{SingName::A1, Category::Complex}, 2, 3, "c1^2 - c2"},
      {{SingName::A1, Category::Complex}, 1, 1, "-c1 + c'1"},
      {{SingName::A1, Category::Function}, 2, 1, "e"},
      {{SingName::A2, Category::RealOriented}, 4, 5, "-p1"},
      {{SingName::A2, Category::RealOriented}, 8, 11, "p1^2 - p2"},
      {{SingName::A2, Category::RealUnoriented}, 2, 2, "w2"},
      {{SingName::A2, Category::RealUnoriented}, 6, 2, "w6"},
      {{SingName::Sigma2, Category::RealOriented}, 4, 4, "-p1"},
      {{SingName::SigmaFR, Category::RealOriented}, 8, 8, "12*p1^2 - 9*p2"},
  };
  for (const auto& g : golden) {
    INFO(render_sing_name(g.id.name) << " at (" << g.m << ", " << g.n << ")");
    CHECK(lookup_tp(g.id, g.m, g.n).render() == g.text);
  }
}

TEST_CASE("codimension equals the homogeneous degree of the class") {
  struct Probe {
    SingTypeId id;
    int m, n;
  } probes[] = {
      {{SingName::A1, Category::RealUnoriented}, 2, 3},
      {{SingName::A1, Category::RealUnoriented}, 4, 2},
      {{SingName::A1, Category::Complex}, 2, 4},
      {{SingName::A1, Category::Complex}, 1, 1},
      {{SingName::A1, Category::Function}, 6, 1},
      {{SingName::A2, Category::RealOriented}, 8, 11},
      {{SingName::A2, Category::RealUnoriented}, 8, 2},
      {{SingName::Sigma2, Category::RealOriented}, 4, 4},
      {{SingName::SigmaFR, Category::RealOriented}, 8, 8},
  };
  for (const auto& p : probes) {
    int q = codimension(p.id, p.m, p.n);
    GradedPoly tp = lookup_tp(p.id, p.m, p.n);
    INFO(render_sing_name(p.id.name) << " at (" << p.m << ", " << p.n << ")");
    CHECK(tp.is_homogeneous(q));
  }
}

TEST_CASE("unsupported combinations miss loudly") {
  CHECK_THROWS_AS(lookup_tp({SingName::A1, Category::Complex}, 3, 3),
                  input_error);
  CHECK_THROWS_AS(lookup_tp({SingName::Sigma2, Category::RealOriented}, 4, 5),
                  input_error);
  CHECK_THROWS_AS(lookup_tp({SingName::A2, Category::RealOriented}, 4, 6),
                  input_error);
  CHECK_THROWS_AS(lookup_tp({SingName::SigmaFR, Category::RealOriented}, 8, 9),
                  input_error);
  CHECK_THROWS_AS(lookup_tp({SingName::A2, Category::RealUnoriented}, 5, 2),
                  input_error);
}

TEST_CASE("correction resolution picks the most specific matching row") {
  auto tag = [](SingTypeId id, int m, int n, BoundaryKind b) {
    return lookup_correction(id, m, n, b).case_tag;
  };

  // Boundary specificity outranks dimension specificity.
  CHECK(tag({SingName::A2, Category::RealOriented}, 4, 5,
            BoundaryKind::Sphere) == "vii");
  CHECK(tag({SingName::A2, Category::RealOriented}, 4, 5,
            BoundaryKind::General) == "viii");
  CHECK(tag({SingName::Sigma2, Category::RealOriented}, 4, 4,
            BoundaryKind::Sphere) == "ix");
  CHECK(tag({SingName::Sigma2, Category::RealOriented}, 4, 4,
            BoundaryKind::NullCobordant) == "x");
  CHECK(tag({SingName::Sigma2, Category::RealOriented}, 4, 4,
            BoundaryKind::General) == "x");

  // Exact dimensions outrank the parametric family.
  CHECK(tag({SingName::A2, Category::RealUnoriented}, 2, 2,
            BoundaryKind::General) == "v");
  CHECK(tag({SingName::A2, Category::RealUnoriented}, 6, 2,
            BoundaryKind::General) == "vi");

  CHECK(tag({SingName::A1, Category::RealUnoriented}, 2, 3,
            BoundaryKind::Sphere) == "i");
  CHECK(tag({SingName::A1, Category::RealUnoriented}, 3, 2,
            BoundaryKind::Sphere) == "iii");
  CHECK(tag({SingName::A1, Category::Function}, 5, 1,
            BoundaryKind::General) == "iv");
  CHECK(tag({SingName::SigmaFR, Category::RealOriented}, 8, 8,
            BoundaryKind::General) == "xi");

  // A complex boundary that is merely null-cobordant has no row.
  CHECK_THROWS_AS(lookup_correction({SingName::A1, Category::Complex}, 1, 3,
                                    BoundaryKind::NullCobordant),
                  input_error);
}

TEST_CASE("correction formulas materialize dimension-dependent terms") {
  const CorrectionRow& two_d = lookup_correction(
      {SingName::A1, Category::Complex}, 1, 4, BoundaryKind::Sphere);
  auto terms = two_d.materialize(1, 4, std::nullopt);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].coeff == 2);
  CHECK(terms[0].invariant == "d_4");

  const CorrectionRow& smale = lookup_correction(
      {SingName::A2, Category::RealOriented}, 4, 5, BoundaryKind::Sphere);
  auto omega = smale.materialize(4, 5, std::nullopt);
  REQUIRE(omega.size() == 1);
  CHECK(omega[0].coeff == 2);  // a_1 * (2*1 - 1)! with a_1 = 2
  CHECK(omega[0].invariant == "Omega");

  // The next member of the family scales by a_2 * 3! = 6.
  auto omega2 = smale.materialize(8, 11, std::nullopt);
  REQUIRE(omega2.size() == 1);
  CHECK(omega2[0].coeff == 6);

  SECTION("the normal-form constant accepts an override") {
    auto with_override = smale.materialize(4, 5, std::int64_t(5));
    CHECK(with_override[0].coeff == 5);
  }
}

TEST_CASE("normal-form constants follow the parity rule") {
  CHECK(smale_coefficient(1) == 2);
  CHECK(smale_coefficient(2) == 1);
  CHECK(smale_coefficient(3) == 2);
  CHECK(smale_coefficient(4) == 1);
  CHECK(smale_coefficient(2, 7) == 7);
  CHECK_THROWS_AS(smale_coefficient(0), input_error);

  CHECK(odd_factorial_bound(1) == 1);
  CHECK(odd_factorial_bound(2) == 6);
  CHECK(odd_factorial_bound(3) == 120);
}

TEST_CASE("rows declare the coefficient rings the formulas live in") {
  CHECK(find_thom_row({SingName::A1, Category::RealUnoriented}, 2, 3)
            .default_ring == Ring::z2());
  CHECK(find_thom_row({SingName::A1, Category::Complex}, 2, 3).default_ring ==
        Ring::integers());
  CHECK(find_thom_row({SingName::A2, Category::RealOriented}, 4, 5)
            .default_ring == Ring::dyadic());
  CHECK(lookup_correction({SingName::Sigma2, Category::RealOriented}, 4, 4,
                          BoundaryKind::General)
            .ring == Ring::mod(24));
  CHECK(lookup_correction({SingName::Sigma2, Category::RealOriented}, 4, 4,
                          BoundaryKind::Sphere)
            .ring == Ring::integers());
}

TEST_CASE("name and category spellings round-trip") {
  for (SingName n : {SingName::A1, SingName::A2, SingName::Sigma2,
                     SingName::SigmaFR})
    CHECK(parse_sing_name(render_sing_name(n)) == n);
  for (Category c : {Category::RealUnoriented, Category::RealOriented,
                     Category::Complex, Category::Function})
    CHECK(parse_category(render_category(c)) == c);
  for (BoundaryKind k : {BoundaryKind::Sphere, BoundaryKind::NullCobordant,
                         BoundaryKind::General})
    CHECK(parse_boundary_kind(render_boundary_kind(k)) == k);
  CHECK_THROWS_AS(parse_sing_name("A3"), input_error);
  CHECK_THROWS_AS(parse_category("spin"), input_error);
}
