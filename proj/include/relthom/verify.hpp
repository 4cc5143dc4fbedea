#ifndef RELTHOM_VERIFY_HPP
#define RELTHOM_VERIFY_HPP

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "relthom/catalog.hpp"
#include "relthom/numlab/crosscap.hpp"
#include "relthom/numlab/curves.hpp"
#include "relthom/numlab/foldcusp.hpp"
#include "relthom/numlab/morse.hpp"
#include "relthom/numlab/presets.hpp"
#include "relthom/numlab/roots.hpp"
#include "relthom/predict.hpp"
#include "relthom/profile.hpp"
#include "relthom/relclass.hpp"
#include "relthom/ring.hpp"

namespace relthom {

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;

  bool passed() const {
    for (const auto& c : cases)
      if (!c.passed) return false;
    return true;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : cases) {
      nlohmann::ordered_json e;
      e["name"] = c.name;
      e["passed"] = c.passed;
      e["detail"] = c.detail;
      arr.push_back(e);
    }
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["passed"] = passed();
    j["cases"] = arr;
    return j;
  }
};

namespace detail_verify {

inline void record(SuiteReport& report, const std::string& name, bool ok,
                   const std::string& detail) {
  report.cases.push_back({name, ok, detail});
}

/// Run a block that must succeed; any exception fails the case with its
/// message in the detail.
template <class Fn>
void guarded(SuiteReport& report, const std::string& name, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    record(report, name, false, std::string("raised: ") + e.what());
  }
}

/// Run a block that must throw the given exception type.
template <class Ex, class Fn>
void expect_raise(SuiteReport& report, const std::string& name, Fn&& fn) {
  try {
    fn();
    record(report, name, false, "no error raised");
  } catch (const Ex& e) {
    record(report, name, true, std::string("raised as required: ") + e.what());
  } catch (const std::exception& e) {
    record(report, name, false, std::string("wrong error type: ") + e.what());
  }
}

/// Inverse by geometric series: independent oracle for GradedPoly::inverse
/// when the constant term is 1.
inline GradedPoly series_inverse(const GradedPoly& p, int trunc) {
  GradedPoly one = GradedPoly::constant(p.ring(), 1, trunc);
  GradedPoly u = (one - p).truncated(trunc);
  GradedPoly acc = one;
  GradedPoly pw = one;
  for (int j = 1; j <= trunc; ++j) {
    pw = (pw * u).truncated(trunc);
    if (pw.is_zero()) break;
    acc = acc + pw;
  }
  return acc;
}

inline Coeff random_unit_free_coeff(const Ring& ring, std::mt19937_64& rng) {
  switch (ring.kind()) {
    case Ring::Kind::Z2:
      return Coeff::of(ring, 1);
    case Ring::Kind::IntDyadic: {
      std::uniform_int_distribution<int> num(-8, 8), ex(0, 3);
      int v = num(rng);
      if (v == 0) v = 3;
      return Coeff::dyadic(v, ex(rng));
    }
    default: {
      std::uniform_int_distribution<int> num(-4, 4);
      int v = num(rng);
      if (v == 0) v = 1;
      return Coeff::of(ring, v);
    }
  }
}

inline GradedPoly random_unit_poly(const Ring& ring, int trunc, std::mt19937_64& rng) {
  GradedPoly p = GradedPoly::constant(ring, 1, trunc);
  const Generator gens[3] = {Generator::sw(1), Generator::chern(1),
                             Generator::pontryagin(1)};
  std::uniform_int_distribution<int> nterms(2, 6), pick(0, 2), expo(1, 3);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial mono = Monomial::of(gens[pick(rng)], expo(rng));
    p.add_term(mono, random_unit_free_coeff(ring, rng));
  }
  return p;
}

}  // namespace detail_verify

// ---------------------------------------------------------------------------

inline SuiteReport verify_algebra(std::uint64_t seed) {
  using namespace detail_verify;
  SuiteReport report;
  report.suite = "algebra";
  report.seed = seed;
  std::mt19937_64 rng(seed);

  const Ring rings[3] = {Ring::z2(), Ring::integers(), Ring::dyadic()};
  for (const Ring& ring : rings) {
    guarded(report, "inverse-round-trip-" + ring.name(), [&] {
      const int trunc = 12;
      int bad = 0;
      for (int i = 0; i < 30; ++i) {
        GradedPoly p = random_unit_poly(ring, trunc, rng);
        GradedPoly q = p.inverse();
        GradedPoly one = GradedPoly::constant(ring, 1, trunc);
        if (!((p * q) == one)) ++bad;
        if (!(q == series_inverse(p, trunc))) ++bad;
      }
      record(report, "inverse-round-trip-" + ring.name(), bad == 0,
             bad == 0 ? "30 random truncated units invert both ways"
                      : std::to_string(bad) + " mismatches");
    });
  }

  guarded(report, "dual-class-vs-series", [&] {
    struct Probe {
      Family family;
      int rank, q;
      Ring ring;
    } probes[] = {{Family::SW, 3, 4, Ring::z2()},
                  {Family::Chern, 2, 6, Ring::integers()},
                  {Family::Pontryagin, 2, 8, Ring::integers()},
                  {Family::Pontryagin, 2, 8, Ring::dyadic()}};
    int bad = 0;
    for (const auto& pr : probes) {
      GradedPoly dual = dual_class(pr.family, Side::Source, pr.rank, pr.q, pr.ring);
      GradedPoly total = total_class(pr.family, Side::Source, pr.rank, pr.ring, pr.q);
      if (!(dual == series_inverse(total, pr.q).homogeneous_part(pr.q))) ++bad;
    }
    record(report, "dual-class-vs-series", bad == 0,
           bad == 0 ? "4 family probes match the geometric series"
                    : std::to_string(bad) + " mismatches");
  });

  guarded(report, "product-drops-delta", [&] {
    std::uniform_int_distribution<int> sc(-5, 5);
    int bad = 0;
    for (int i = 0; i < 50; ++i) {
      Ring ring = Ring::integers();
      int a = sc(rng), b = sc(rng);
      if (a == 0) a = 2;
      if (b == 0) b = -1;
      GradedPoly na = GradedPoly::generator(ring, Generator::pontryagin(1)).scaled(
          Coeff::of(ring, a));
      GradedPoly nb = GradedPoly::generator(ring, Generator::pontryagin(1)).scaled(
          Coeff::of(ring, b));
      RelClass u(na, DeltaSymbol{"alpha", 4, Coeff::of(ring, sc(rng))});
      RelClass v(nb, DeltaSymbol{"beta", 4, Coeff::of(ring, sc(rng))});
      RelClass w = u * v;
      if (w.has_delta()) ++bad;
      if (!(w.naive() == na * nb)) ++bad;
      if (u.squared().has_delta()) ++bad;
    }
    record(report, "product-drops-delta", bad == 0,
           bad == 0 ? "50 random relative products kill the connecting part"
                    : std::to_string(bad) + " kept a delta");
  });

  guarded(report, "delta-addition-merges", [&] {
    Ring ring = Ring::integers();
    GradedPoly n1 = GradedPoly::generator(ring, Generator::chern(1));
    RelClass u(n1, DeltaSymbol{"alpha", 2, Coeff::of(ring, 3)});
    RelClass v(n1, DeltaSymbol{"alpha", 2, Coeff::of(ring, -3)});
    RelClass sum = u + v;
    bool merged_away = !sum.has_delta();
    RelClass sum2 = u + u;
    bool doubled = sum2.has_delta() && sum2.delta()->scale == Coeff::of(ring, 6);
    record(report, "delta-addition-merges", merged_away && doubled,
           "opposite scales cancel, equal labels accumulate");
  });

  guarded(report, "dyadic-normalization", [&] {
    std::uniform_int_distribution<int> num(-64, 64), ex(0, 5);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      Coeff c = Coeff::dyadic(num(rng), ex(rng));
      Coeff d = Coeff::dyadic(num(rng), ex(rng));
      for (const Coeff& v : {c + d, c * d, c - d}) {
        if (v.exp2() > 0 && v.numerator() % 2 == 0) ++bad;
      }
    }
    if (!(Coeff::dyadic(6, 1).as_integer() == 3)) ++bad;
    record(report, "dyadic-normalization", bad == 0,
           bad == 0 ? "halved numerators stay odd under ring operations"
                    : std::to_string(bad) + " violations");
  });
  expect_raise<consistency_error>(report, "dyadic-integrality-guard",
                                  [] { Coeff::dyadic(1, 1).as_integer(); });

  guarded(report, "mod24-units", [&] {
    Ring ring = Ring::mod(24);
    int bad = 0;
    for (std::int64_t u : {1, 5, 7, 11, 13, 17, 19, 23}) {
      Coeff c = Coeff::of(ring, u);
      if (!c.is_unit()) ++bad;
      if (!((c * c.inverse()) == Coeff::of(ring, 1))) ++bad;
    }
    record(report, "mod24-units", bad == 0, "all residues coprime to 24 invert");
  });

  return report;
}

// ---------------------------------------------------------------------------

inline SuiteReport verify_catalog(std::uint64_t seed) {
  using namespace detail_verify;
  SuiteReport report;
  report.suite = "catalog";
  report.seed = seed;

  guarded(report, "table-size", [&] {
    record(report, "table-size",
           thom_rows().size() == 9 && correction_rows().size() == 11,
           std::to_string(thom_rows().size()) + " absolute rows, " +
               std::to_string(correction_rows().size()) + " correction rows");
  });

  guarded(report, "frozen-renderings", [&] {
    struct Golden {
      SingTypeId id;
      int m, n;
      std::string text;
    } golden[] = {
        {{SingName::A1, Category::RealUnoriented}, 2, 3, "w1^2 + w2"},
        // On a surface w3 dies, so the same class shrinks with the source.
        {{SingName::A1, Category::RealUnoriented}, 2, 4, "w1^3"},
        {{SingName::A1, Category::RealUnoriented}, 3, 5, "w1^3 + w3"},
        {{SingName::A1, Category::Complex}, 1, 2, "c1^2"},
        {{SingName::A1, Category::Complex}, 2, 3, "c1^2 - c2"},
        {{SingName::A1, Category::Complex}, 1, 1, "-c1 + c'1"},
        {{SingName::A1, Category::RealUnoriented}, 3, 2, "w2"},
        {{SingName::A1, Category::Function}, 2, 1, "e"},
        {{SingName::A2, Category::RealOriented}, 4, 5, "-p1"},
        {{SingName::A2, Category::RealOriented}, 8, 11, "p1^2 - p2"},
        {{SingName::A2, Category::RealUnoriented}, 6, 2, "w6"},
        {{SingName::Sigma2, Category::RealOriented}, 4, 4, "-p1"},
        {{SingName::SigmaFR, Category::RealOriented}, 8, 8, "12*p1^2 - 9*p2"},
    };
    int bad = 0;
    std::string first;
    for (const auto& g : golden) {
      std::string got = lookup_tp(g.id, g.m, g.n).render();
      if (got != g.text) {
        ++bad;
        if (first.empty()) first = got + " != " + g.text;
      }
    }
    record(report, "frozen-renderings", bad == 0,
           bad == 0 ? "13 golden class strings match" : first);
  });

  guarded(report, "codimension-values", [&] {
    struct Probe {
      SingTypeId id;
      int m, n, q;
    } probes[] = {
        {{SingName::A1, Category::RealUnoriented}, 2, 3, 2},
        {{SingName::A1, Category::Complex}, 1, 2, 4},
        {{SingName::A1, Category::Complex}, 1, 1, 2},
        {{SingName::A1, Category::Function}, 5, 1, 5},
        {{SingName::A2, Category::RealOriented}, 4, 5, 4},
        {{SingName::A2, Category::RealOriented}, 8, 11, 8},
        {{SingName::A2, Category::RealUnoriented}, 6, 2, 6},
        {{SingName::Sigma2, Category::RealOriented}, 4, 4, 4},
        {{SingName::SigmaFR, Category::RealOriented}, 8, 8, 8},
    };
    int bad = 0;
    for (const auto& p : probes)
      if (codimension(p.id, p.m, p.n) != p.q) ++bad;
    record(report, "codimension-values", bad == 0,
           bad == 0 ? "9 codimension probes agree" : std::to_string(bad) + " off");
  });

  guarded(report, "correction-precedence", [&] {
    struct Probe {
      SingTypeId id;
      int m, n;
      BoundaryKind b;
      std::string tag;
    } probes[] = {
        {{SingName::A1, Category::RealUnoriented}, 2, 3, BoundaryKind::Sphere, "i"},
        {{SingName::A1, Category::Complex}, 1, 3, BoundaryKind::Sphere, "ii"},
        {{SingName::A1, Category::RealUnoriented}, 3, 2, BoundaryKind::Sphere, "iii"},
        {{SingName::A1, Category::Function}, 2, 1, BoundaryKind::General, "iv"},
        {{SingName::A2, Category::RealUnoriented}, 2, 2, BoundaryKind::NullCobordant, "v"},
        {{SingName::A2, Category::RealUnoriented}, 6, 2, BoundaryKind::General, "vi"},
        {{SingName::A2, Category::RealOriented}, 4, 5, BoundaryKind::Sphere, "vii"},
        {{SingName::A2, Category::RealOriented}, 4, 5, BoundaryKind::General, "viii"},
        {{SingName::A2, Category::RealOriented}, 8, 11, BoundaryKind::Sphere, "vii"},
        {{SingName::Sigma2, Category::RealOriented}, 4, 4, BoundaryKind::Sphere, "ix"},
        {{SingName::Sigma2, Category::RealOriented}, 4, 4, BoundaryKind::NullCobordant,
         "x"},
        {{SingName::SigmaFR, Category::RealOriented}, 8, 8, BoundaryKind::General, "xi"},
    };
    int bad = 0;
    std::string first;
    for (const auto& p : probes) {
      std::string got = lookup_correction(p.id, p.m, p.n, p.b).case_tag;
      if (got != p.tag) {
        ++bad;
        if (first.empty())
          first = "expected " + p.tag + " got " + got;
      }
    }
    record(report, "correction-precedence", bad == 0,
           bad == 0 ? "12 precedence probes resolve to their rows" : first);
  });

  expect_raise<input_error>(report, "missing-row-rejected", [] {
    lookup_correction({SingName::A1, Category::Complex}, 1, 3,
                      BoundaryKind::NullCobordant);
  });

  guarded(report, "ring-assignments", [&] {
    bool ok = find_thom_row({SingName::A1, Category::RealUnoriented}, 2, 3)
                      .default_ring.name() == "Z2" &&
              find_thom_row({SingName::A2, Category::RealOriented}, 4, 5)
                      .default_ring.name() == "Z[1/2]" &&
              find_thom_row({SingName::A1, Category::Complex}, 1, 2)
                      .default_ring.name() == "Z" &&
              lookup_correction({SingName::Sigma2, Category::RealOriented}, 4, 4,
                                BoundaryKind::General)
                      .ring.name() == "Z24";
    record(report, "ring-assignments", ok, "coefficient rings per row");
  });

  guarded(report, "normal-form-constants", [&] {
    bool ok = smale_coefficient(1) == 2 && smale_coefficient(2) == 1 &&
              smale_coefficient(3) == 2 && smale_coefficient(2, 5) == 5 &&
              odd_factorial_bound(1) == 1 && odd_factorial_bound(2) == 6 &&
              odd_factorial_bound(3) == 120;
    record(report, "normal-form-constants", ok,
           "parity-dependent coefficient and (2k-1)! scale");
  });

  return report;
}

// ---------------------------------------------------------------------------

inline SuiteReport verify_ledger(std::uint64_t seed) {
  using namespace detail_verify;
  SuiteReport report;
  report.suite = "ledger";
  report.seed = seed;
  std::mt19937_64 rng(seed);

  guarded(report, "signature-defect", [&] {
    bool ok = hirzebruch_defect(45, 15) == 0 && hirzebruch_defect(-4, 0) == -4 &&
              hirzebruch_defect(7, 1) == 4;
    record(report, "signature-defect", ok, "p1 - 3*sigma spot values");
  });

  guarded(report, "immersion-bracket", [&] {
    std::uniform_int_distribution<int> small(-6, 6), half(0, 6);
    int bad = 0;
    for (int i = 0; i < 40; ++i) {
      std::int64_t sigma = small(rng), tau = small(rng);
      std::int64_t a2 = 2 * half(rng) + (((sigma - tau) % 2) + 2) % 2;
      std::int64_t bracket = 3 * (sigma - tau) + a2;
      if (2 * saeki_szucs_takase(sigma, tau, a2) != bracket) ++bad;
    }
    record(report, "immersion-bracket", bad == 0,
           "40 even brackets halve exactly");
  });
  expect_raise<consistency_error>(report, "immersion-bracket-parity-guard",
                                  [] { saeki_szucs_takase(0, 1, 2); });

  guarded(report, "takase-residue", [&] {
    std::uniform_int_distribution<int> small(-6, 6), mu_d(0, 15), half(0, 9);
    int bad = 0;
    for (int i = 0; i < 40; ++i) {
      std::int64_t sigma = small(rng), mu = mu_d(rng);
      std::int64_t s2 = 2 * half(rng) + (((sigma - mu) % 2) + 2) % 2;
      std::int64_t t = takase_T(sigma, mu, s2);
      if (t < 0 || t >= 24) ++bad;
    }
    if (takase_T(1, 1, 2) != 1 || takase_T(0, 16, 0) != 0) ++bad;
    record(report, "takase-residue", bad == 0,
           "mod-24 residues stay in range; spot values hold");
  });

  guarded(report, "smale-round-trip", [&] {
    std::uniform_int_distribution<int> om(-20, 20), pk(-12, 12);
    int bad = 0;
    for (int i = 0; i < 60; ++i) {
      std::int64_t omega = om(rng), p1 = pk(rng);
      PrescribedProfile pre;
      pre.m = 4;
      pre.n = 5;
      pre.category = Category::RealOriented;
      pre.boundary = {"S3", BoundaryKind::Sphere, 0};
      pre.invariants["Omega"] = omega;
      ExtensionProfile ext;
      ext.rel_numbers["p1"] = p1;
      Prediction p =
          predict_count({SingName::A2, Category::RealOriented}, pre, ext);
      if (smale_from_singularities(1, p1, p.total.as_integer()) != omega) ++bad;
    }
    record(report, "smale-round-trip", bad == 0,
           "60 random profiles recover the invariant exactly");
  });

  guarded(report, "unknot-baseline", [&] {
    PrescribedProfile pre;
    pre.m = 4;
    pre.n = 5;
    pre.category = Category::RealOriented;
    pre.boundary = {"S3", BoundaryKind::Sphere, 0};
    pre.invariants["Omega"] = 0;
    ExtensionProfile ext;
    ext.rel_numbers["p1"] = 0;
    Prediction p = predict_count({SingName::A2, Category::RealOriented}, pre, ext);
    record(report, "unknot-baseline",
           p.total.as_integer() == 0 && p.correction_case == "vii",
           "standard sphere predicts zero through row vii");
  });

  guarded(report, "frame-round-trip", [&] {
    std::uniform_int_distribution<int> v(-9, 9), s(-3, 3);
    int bad = 0;
    for (int i = 0; i < 30; ++i) {
      std::vector<std::int64_t> alpha = {v(rng), v(rng), v(rng)};
      std::int64_t ds = v(rng), dt = v(rng), a = s(rng), b = s(rng);
      auto shifted = frame_change(alpha, ds, dt, a, b);
      auto back = frame_change(shifted, ds, dt, -a, -b);
      if (back != alpha) ++bad;
    }
    record(report, "frame-round-trip", bad == 0,
           "frame shifts undo with negated sensitivities");
  });

  guarded(report, "map-compare-self", [&] {
    int bad = 0;
    for (std::int64_t d = -10; d <= 10; ++d)
      if (map_compare(d, d, 1) != 0) ++bad;
    if (map_compare(5, 2, 2) != 1) ++bad;
    record(report, "map-compare-self", bad == 0,
           "identical jet data compares to zero");
  });

  return report;
}

// ---------------------------------------------------------------------------

namespace detail_verify {

/// Branched-cover prediction for a polynomial seen as a degree-d map of
/// disks: relative first Chern numbers are the Euler counts of the two
/// sides.
inline std::int64_t predicted_branch_points(int degree) {
  PrescribedProfile pre;
  pre.m = pre.n = 1;
  pre.category = Category::Complex;
  pre.boundary = {"S1", BoundaryKind::Sphere, 0};
  pre.invariants["d_1"] = 0;
  ExtensionProfile ext;
  ext.euler = 1;
  ext.degree_of_map = degree;
  ext.rel_numbers["c1"] = 1;
  ext.rel_numbers["c'1"] = degree;
  Prediction p = predict_count({SingName::A1, Category::Complex}, pre, ext);
  return p.total.as_integer();
}

/// Monic degree-d polynomial whose critical points are the given exact
/// rational-complex nodes: integrate d * prod (z - node).
inline numlab::ComplexPoly integrate_critical_product(
    const std::vector<numlab::RationalComplex>& nodes) {
  using numlab::Rational;
  using numlab::RationalComplex;
  std::vector<RationalComplex> dp{RationalComplex(
      Rational(static_cast<std::int64_t>(nodes.size()) + 1))};
  for (const auto& node : nodes) {
    std::vector<RationalComplex> next(dp.size() + 1);
    for (std::size_t i = 0; i < dp.size(); ++i) {
      next[i + 1] = next[i + 1] + dp[i];
      next[i] = next[i] - dp[i] * node;
    }
    dp = std::move(next);
  }
  std::vector<RationalComplex> p(dp.size() + 1);
  for (std::size_t k = 0; k < dp.size(); ++k) {
    Rational inv(1, static_cast<std::int64_t>(k) + 1);
    p[k + 1] = RationalComplex(dp[k].re * inv, dp[k].im * inv);
  }
  return numlab::ComplexPoly(std::move(p));
}

}  // namespace detail_verify

inline SuiteReport verify_riemann_hurwitz(std::uint64_t seed,
                                          const numlab::PresetCorpus& corpus) {
  using namespace detail_verify;
  using namespace numlab;
  SuiteReport report;
  report.suite = "riemann-hurwitz";
  report.seed = seed;
  std::mt19937_64 rng(seed);

  for (const auto& preset : corpus.holomorphic) {
    guarded(report, "preset-" + preset.name, [&] {
      SingularityReport counted = critical_points_in_disk(preset.poly, preset.radius);
      std::int64_t predicted = predicted_branch_points(preset.poly.degree());
      bool ok = counted.count == preset.expected && counted.count == predicted;
      std::ostringstream os;
      os << "counted " << counted.count << ", predicted " << predicted;
      record(report, "preset-" + preset.name, ok, os.str());
    });
  }

  guarded(report, "random-covers", [&] {
    std::uniform_int_distribution<int> deg(2, 6), grid(-8, 8);
    int bad = 0;
    for (int i = 0; i < 40; ++i) {
      int d = deg(rng);
      std::vector<RationalComplex> nodes;
      while (static_cast<int>(nodes.size()) < d - 1) {
        RationalComplex z(Rational(grid(rng), 16), Rational(grid(rng), 16));
        bool dup = false;
        for (const auto& w : nodes)
          if (w.re == z.re && w.im == z.im) dup = true;
        if (!dup) nodes.push_back(z);
      }
      ComplexPoly p = integrate_critical_product(nodes);
      SingularityReport counted = critical_points_in_disk(p, 1.0);
      if (counted.count != d - 1) ++bad;
      if (predicted_branch_points(d) != d - 1) ++bad;
    }
    record(report, "random-covers", bad == 0,
           "40 random covers match the degree defect");
  });

  guarded(report, "multiplicity-merge", [&] {
    SingularityReport r =
        critical_points_in_disk(ComplexPoly::from_integers({0, 0, 0, 1}), 1.0);
    bool ok = r.count == 2 && r.points.size() == 1 && r.points[0].multiplicity == 2;
    record(report, "multiplicity-merge", ok,
           "triple branch point carries multiplicity two");
  });

  expect_raise<consistency_error>(report, "boundary-band-guard", [] {
    critical_points_in_disk(ComplexPoly::from_integers({1, -2, 1}), 1.0);
  });

  return report;
}

// ---------------------------------------------------------------------------

inline SuiteReport verify_poincare_hopf(std::uint64_t seed,
                                        const numlab::PresetCorpus& corpus) {
  using namespace detail_verify;
  using namespace numlab;
  SuiteReport report;
  report.suite = "poincare-hopf";
  report.seed = seed;

  for (const auto& preset : corpus.morse) {
    guarded(report, "preset-" + preset.name, [&] {
      SingularityReport counted = morse_signed_count(preset);

      PrescribedProfile pre;
      pre.m = 2;
      pre.n = 1;
      pre.category = Category::Function;
      pre.boundary = {"S1", BoundaryKind::Sphere, 0};
      ExtensionProfile ext;
      ext.rel_numbers["e"] = preset.declared_chi;
      Prediction p = predict_count({SingName::A1, Category::Function}, pre, ext);

      bool ok = counted.count == preset.declared_chi &&
                p.total.as_integer() == preset.declared_chi &&
                p.correction_case == "iv";
      std::ostringstream os;
      os << "signed count " << counted.count << ", declared " << preset.declared_chi
         << ", predicted " << p.total.as_integer();
      record(report, "preset-" + preset.name, ok, os.str());
    });
  }

  expect_raise<consistency_error>(report, "boundary-tangency-guard", [] {
    using P = numlab::Poly2d;
    P r2 = P::term(2, 0, 1) + P::term(0, 2, 1) + P::constant(-1);
    numlab::morse_signed_count(r2 * r2, numlab::Domain::disk(1.0));
  });

  return report;
}

// ---------------------------------------------------------------------------

inline SuiteReport verify_cusp_parity(std::uint64_t seed,
                                      const numlab::PresetCorpus& corpus) {
  using namespace detail_verify;
  using namespace numlab;
  SuiteReport report;
  report.suite = "cusp-parity";
  report.seed = seed;

  for (const auto& preset : corpus.plane_maps) {
    guarded(report, "preset-" + preset.name, [&] {
      PlaneMap m(preset.f1, preset.f2);
      FoldCuspResult res = detect_folds_and_cusps(m, preset.radius);
      long long closed = 0;
      for (const auto& c : res.components) closed += c.closed ? 1 : 0;
      bool ok = res.cusps.count == preset.expected_cusps &&
                closed == preset.expected_closed;
      std::ostringstream os;
      os << res.cusps.count << " cusps on " << res.components.size()
         << " fold components (" << closed << " closed)";

      if (preset.parity_check) {
        long long rot = frame_pullback_rotation(m, 0, 0, preset.radius);
        long long chi = 1;  // the domain disk
        long long lhs = ((res.cusps.count % 2) + 2) % 2;
        long long rhs = (((chi + rot) % 2) + 2) % 2;
        ok = ok && lhs == rhs;
        os << "; parity " << lhs << " vs chi+rot " << rhs;

        // The same parity through the catalog: the degree-2 class number
        // of the disk relative to its boundary framing is chi + rot.
        PrescribedProfile pre;
        pre.m = pre.n = 2;
        pre.category = Category::RealUnoriented;
        pre.boundary = {"S1", BoundaryKind::General, 0};
        ExtensionProfile ext;
        ext.rel_numbers["w2"] = chi + rot;
        Prediction p =
            predict_count({SingName::A2, Category::RealUnoriented}, pre, ext);
        ok = ok && p.correction_case == "v" &&
             detail::floor_mod(p.total.as_integer(), 2) == lhs;
        os << "; predicted " << p.total.as_integer() << " through row v";
      }
      record(report, "preset-" + preset.name, ok, os.str());
    });
  }

  guarded(report, "family-invariance", [&] {
    int bad = 0;
    for (double eps : {0.0, 0.01, 0.05}) {
      auto [f1, f2] = pleat_family(eps);
      PlaneMap m(f1, f2);
      if (detect_folds_and_cusps(m, 1.0).cusps.count != 1) ++bad;
    }
    record(report, "family-invariance", bad == 0,
           "cusp count stays 1 across the deformation family");
  });

  guarded(report, "cusp-position", [&] {
    PlaneMap m(Poly2d::x(), Poly2d::term(0, 3, 1) + Poly2d::term(1, 1, -1));
    SingularityReport cusps = find_cusps(m, 1.0, {});
    bool ok = cusps.count == 1 && std::hypot(cusps.points[0].x[0],
                                             cusps.points[0].x[1]) < 1e-8;
    record(report, "cusp-position", ok, "pleat cusp sits at the origin");
  });

  guarded(report, "prot-values", [&] {
    int bad = 0;
    for (const auto& preset : corpus.plane_maps) {
      if (preset.expected_closed == 0) continue;
      PlaneMap m(preset.f1, preset.f2);
      FoldCuspResult res = detect_folds_and_cusps(m, preset.radius);
      for (const auto& c : res.components)
        if (c.closed && (!c.prot_valid || c.prot != 0)) ++bad;
    }
    record(report, "prot-values", bad == 0,
           "closed folds of the corpus have null image line field winding");
  });

  return report;
}

// ---------------------------------------------------------------------------

inline SuiteReport verify_cross_caps(std::uint64_t seed,
                                     const numlab::PresetCorpus& corpus) {
  using namespace detail_verify;
  using namespace numlab;
  SuiteReport report;
  report.suite = "cross-caps";
  report.seed = seed;

  for (const auto& preset : corpus.germs_real) {
    guarded(report, "real-" + preset.name, [&] {
      RealGerm germ(preset.f1, preset.f2, preset.f3);
      SingularityReport r = cross_caps_real(germ, preset.radius);
      std::ostringstream os;
      os << "counted " << r.count << ", expected " << preset.expected;
      record(report, "real-" + preset.name, r.count == preset.expected, os.str());
    });
  }

  for (const auto& preset : corpus.germs_complex) {
    guarded(report, "complex-" + preset.name, [&] {
      ComplexGerm germ(preset.f1, preset.f2, preset.f3);
      SingularityReport r = cross_caps_complex(germ, preset.radius);
      std::ostringstream os;
      os << "counted " << r.count << " (newton " << r.diagnostics["newton_count"]
         << ", resultant " << r.diagnostics["resultant_count"] << "), expected "
         << preset.expected;
      record(report, "complex-" + preset.name, r.count == preset.expected, os.str());
    });
  }

  guarded(report, "real-positions", [&] {
    // eps = 0.2 keeps the rank-drop set well conditioned (the minors grow
    // like eps^3 off the zero), so positions are trustworthy to 1e-6.
    auto f = real_germ_family("S3", 0.2);
    SingularityReport r = cross_caps_real(RealGerm(f[0], f[1], f[2]), 1.0);
    bool ok = r.count == 4;
    const double xs[4] = {-0.4, -0.2, 0.2, 0.4};
    for (int i = 0; i < 4 && ok; ++i)
      ok = std::abs(r.points[i].x[0] - xs[i]) < 1e-6 &&
           std::abs(r.points[i].x[1]) < 1e-6;
    record(report, "real-positions", ok,
           "rank-drop points sit at -2e, -e, e, 2e to 1e-6");
  });

  guarded(report, "family-invariance", [&] {
    int bad = 0;
    for (double eps : {0.01, 0.02}) {
      auto fc = complex_germ_family("S2", eps);
      if (cross_caps_complex(ComplexGerm(fc[0], fc[1], fc[2]), 1.0).count != 3) ++bad;
    }
    for (double eps : {0.01, 0.04}) {
      auto fr = real_germ_family("S1", eps);
      if (cross_caps_real(RealGerm(fr[0], fr[1], fr[2]), 1.0).count != 2) ++bad;
    }
    record(report, "family-invariance", bad == 0,
           "counts survive changing the deformation size");
  });

  return report;
}

// ---------------------------------------------------------------------------

inline SuiteReport verify_herbert_planar(std::uint64_t seed,
                                         const numlab::PresetCorpus& corpus) {
  using namespace detail_verify;
  using namespace numlab;
  SuiteReport report;
  report.suite = "herbert-planar";
  report.seed = seed;

  for (const auto& preset : corpus.curves) {
    guarded(report, "preset-" + preset.name, [&] {
      CurveFn curve = preset.curve();
      SingularityReport doubles = planar_double_points(curve);
      PushoffCheck check = verify_pushoff_parity(curve, 0.01);
      bool ok = doubles.count == preset.expected && check.parity_holds &&
                check.pushoff_hits == 2 * check.crossings;
      std::ostringstream os;
      os << doubles.count << " double points, pushoff meets the curve "
         << check.pushoff_hits << " times, euler term " << check.euler_term;
      record(report, "preset-" + preset.name, ok, os.str());
    });
  }

  return report;
}

// ---------------------------------------------------------------------------

inline std::vector<std::string> suite_names() {
  return {"algebra",     "catalog",    "ledger",     "riemann-hurwitz",
          "poincare-hopf", "cusp-parity", "cross-caps", "herbert-planar"};
}

inline SuiteReport run_suite(const std::string& name, std::uint64_t seed,
                             const numlab::PresetCorpus& corpus) {
  if (name == "algebra") return verify_algebra(seed);
  if (name == "catalog") return verify_catalog(seed);
  if (name == "ledger") return verify_ledger(seed);
  if (name == "riemann-hurwitz") return verify_riemann_hurwitz(seed, corpus);
  if (name == "poincare-hopf") return verify_poincare_hopf(seed, corpus);
  if (name == "cusp-parity") return verify_cusp_parity(seed, corpus);
  if (name == "cross-caps") return verify_cross_caps(seed, corpus);
  if (name == "herbert-planar") return verify_herbert_planar(seed, corpus);
  throw input_error("unknown suite: " + name);
}

inline std::vector<SuiteReport> run_all_suites(std::uint64_t seed,
                                               const numlab::PresetCorpus& corpus) {
  std::vector<SuiteReport> out;
  for (const std::string& name : suite_names()) out.push_back(run_suite(name, seed, corpus));
  return out;
}

}  // namespace relthom

#endif  // RELTHOM_VERIFY_HPP
