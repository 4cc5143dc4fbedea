#ifndef RELTHOM_CATALOG_HPP
#define RELTHOM_CATALOG_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "relthom/poly.hpp"

namespace relthom {

enum class SingName { A1, A2, Sigma2, SigmaFR };

enum class Category { RealUnoriented, RealOriented, Complex, Function };

/// Identity of a singularity type: the local normal form together with the
/// category of maps it is counted in.
struct SingTypeId {
  SingName name;
  Category category;

  bool operator==(const SingTypeId& o) const {
    return name == o.name && category == o.category;
  }
};

inline std::string render_sing_name(SingName n) {
  switch (n) {
    case SingName::A1: return "A1";
    case SingName::A2: return "A2";
    case SingName::Sigma2: return "Sigma2";
    case SingName::SigmaFR: return "Sigma_FR";
  }
  return "?";
}

inline SingName parse_sing_name(const std::string& s) {
  if (s == "A1") return SingName::A1;
  if (s == "A2") return SingName::A2;
  if (s == "Sigma2") return SingName::Sigma2;
  if (s == "Sigma_FR") return SingName::SigmaFR;
  throw input_error("unknown singularity type: " + s);
}

inline std::string render_category(Category c) {
  switch (c) {
    case Category::RealUnoriented: return "unoriented";
    case Category::RealOriented: return "oriented";
    case Category::Complex: return "complex";
    case Category::Function: return "function";
  }
  return "?";
}

inline Category parse_category(const std::string& s) {
  if (s == "unoriented") return Category::RealUnoriented;
  if (s == "oriented") return Category::RealOriented;
  if (s == "complex") return Category::Complex;
  if (s == "function") return Category::Function;
  throw input_error("unknown category: " + s);
}

/// Boundary manifold classification carried by a prescribed profile.
enum class BoundaryKind { Sphere, NullCobordant, General };

inline BoundaryKind parse_boundary_kind(const std::string& s) {
  if (s == "sphere") return BoundaryKind::Sphere;
  if (s == "null-cobordant") return BoundaryKind::NullCobordant;
  if (s == "general") return BoundaryKind::General;
  throw input_error("unknown boundary kind: " + s);
}

inline std::string render_boundary_kind(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::Sphere: return "sphere";
    case BoundaryKind::NullCobordant: return "null-cobordant";
    case BoundaryKind::General: return "general";
  }
  return "?";
}

/// What a correction row demands of the boundary.
enum class BoundaryPredicate { Sphere, NullCobordant, Any };

inline bool boundary_accepts(BoundaryPredicate p, BoundaryKind k) {
  switch (p) {
    case BoundaryPredicate::Sphere: return k == BoundaryKind::Sphere;
    case BoundaryPredicate::NullCobordant:
      return k == BoundaryKind::Sphere || k == BoundaryKind::NullCobordant;
    case BoundaryPredicate::Any: return true;
  }
  return false;
}

inline std::string render_boundary_predicate(BoundaryPredicate p) {
  switch (p) {
    case BoundaryPredicate::Sphere: return "sphere";
    case BoundaryPredicate::NullCobordant: return "null-cobordant";
    case BoundaryPredicate::Any: return "any";
  }
  return "?";
}

/// Cohomological codimension of a type at dimensions (m, n).  For the
/// complex rows this is twice the complex codimension, so it always equals
/// the homogeneous degree of the catalog polynomial.
inline int codimension(const SingTypeId& id, int m, int n) {
  int gap = m > n ? m - n : n - m;
  switch (id.name) {
    case SingName::A1:
      return id.category == Category::Complex ? 2 * (gap + 1) : gap + 1;
    case SingName::A2:
      // For m <= n the cusp locus has codimension 2(n-m+1); past the
      // diagonal it grows by one per extra source dimension, giving
      // codimension m for the (2k, 2) family.
      if (m <= n) {
        int c = 2 * (gap + 1);
        return id.category == Category::Complex ? 2 * c : c;
      }
      return 2 + gap;
    case SingName::Sigma2:
      return 2 * (gap + 2);
    case SingName::SigmaFR:
      return 8;
  }
  return 0;
}

/// One absolute-class row: a family of dimensions together with a recipe
/// building the universal polynomial at concrete (m, n).
struct ThomRow {
  std::string key;           // stable identifier for dumps and goldens
  SingTypeId id;
  std::string dims_text;     // human-readable dimension pattern
  std::string pattern;       // generic formula text
  int sample_m, sample_n;    // representative dimensions for dumps
  Ring default_ring;
  std::function<bool(int, int)> matches;
  std::function<GradedPoly(int, int, Ring, std::optional<int>)> build;
};

namespace detail {

inline GradedPoly single_sw(int index, int m, int n, Ring ring,
                            std::optional<int> trunc) {
  (void)m; (void)n;
  return GradedPoly::generator(ring, Generator::sw(index), trunc);
}

}  // namespace detail

/// The nine absolute rows.  Order matters only for deterministic dumps;
/// at dimensions matched by two rows (m = n real A1) the built
/// polynomials coincide.
inline const std::vector<ThomRow>& thom_rows() {
  static const std::vector<ThomRow> rows = [] {
    std::vector<ThomRow> r;
    r.push_back({"A1.unoriented.m<=n",
                 {SingName::A1, Category::RealUnoriented},
                 "(m, n), m <= n",
                 "wbar_{n-m+1}",
                 2, 3,
                 Ring::z2(),
                 [](int m, int n) { return m >= 1 && m <= n; },
                 [](int m, int n, Ring ring, std::optional<int> trunc) {
                   int q = n - m + 1;
                   GradedPoly p = dual_class(Family::SW, Side::Source, m, q, ring);
                   return p.truncated(trunc ? trunc : std::optional<int>(q));
                 }});
    r.push_back({"A1.complex.m<n",
                 {SingName::A1, Category::Complex},
                 "(m, n), m < n",
                 "cbar_{n-m+1}",
                 2, 3,
                 Ring::integers(),
                 [](int m, int n) { return m >= 1 && m < n; },
                 [](int m, int n, Ring ring, std::optional<int> trunc) {
                   int q = 2 * (n - m + 1);
                   GradedPoly p =
                       dual_class(Family::Chern, Side::Source, m, q, ring);
                   return p.truncated(trunc ? trunc : std::optional<int>(q));
                 }});
    r.push_back({"A1.complex.equidim",
                 {SingName::A1, Category::Complex},
                 "(1, 1), full target classes",
                 "-c1 + c'1",
                 1, 1,
                 Ring::integers(),
                 [](int m, int n) { return m == 1 && n == 1; },
                 [](int, int, Ring ring, std::optional<int> trunc) {
                   auto t = trunc ? trunc : std::optional<int>(2);
                   GradedPoly p(ring, t);
                   p.add_term(Monomial::of(Generator::chern(1, Side::Source)),
                              Coeff::of(ring, -1));
                   p.add_term(Monomial::of(Generator::chern(1, Side::Target)),
                              Coeff::of(ring, 1));
                   return p;
                 }});
    r.push_back({"A1.unoriented.m>=n",
                 {SingName::A1, Category::RealUnoriented},
                 "(m, n), m >= n",
                 "w_{m-n+1}",
                 3, 2,
                 Ring::z2(),
                 [](int m, int n) { return n >= 1 && m >= n; },
                 [](int m, int n, Ring ring, std::optional<int> trunc) {
                   int q = m - n + 1;
                   return detail::single_sw(q, m, n, ring,
                                            trunc ? trunc : std::optional<int>(q));
                 }});
    r.push_back({"A1.function",
                 {SingName::A1, Category::Function},
                 "(m, 1), m >= 1",
                 "e",
                 2, 1,
                 Ring::integers(),
                 [](int m, int n) { return m >= 1 && n == 1; },
                 [](int m, int, Ring ring, std::optional<int> trunc) {
                   return GradedPoly::generator(
                       ring, Generator::euler(m),
                       trunc ? trunc : std::optional<int>(m));
                 }});
    r.push_back({"A2.oriented.(4k,6k-1)",
                 {SingName::A2, Category::RealOriented},
                 "(4k, 6k-1), k >= 1",
                 "pbar_k",
                 4, 5,
                 Ring::dyadic(),
                 [](int m, int n) {
                   return m >= 4 && m % 4 == 0 && n == (6 * (m / 4)) - 1;
                 },
                 [](int m, int n, Ring ring, std::optional<int> trunc) {
                   (void)n;
                   int q = m;  // cohomological degree 4k
                   GradedPoly p = dual_class(Family::Pontryagin, Side::Source,
                                             m / 2, q, ring);
                   return p.truncated(trunc ? trunc : std::optional<int>(q));
                 }});
    r.push_back({"A2.unoriented.(2k,2)",
                 {SingName::A2, Category::RealUnoriented},
                 "(2k, 2), k >= 1",
                 "w_m",
                 6, 2,
                 Ring::z2(),
                 [](int m, int n) { return m >= 2 && m % 2 == 0 && n == 2; },
                 [](int m, int n, Ring ring, std::optional<int> trunc) {
                   return detail::single_sw(m, m, n, ring,
                                            trunc ? trunc : std::optional<int>(m));
                 }});
    r.push_back({"Sigma2.oriented.(4,4)",
                 {SingName::Sigma2, Category::RealOriented},
                 "(4, 4)",
                 "-p1",
                 4, 4,
                 Ring::dyadic(),
                 [](int m, int n) { return m == 4 && n == 4; },
                 [](int, int, Ring ring, std::optional<int> trunc) {
                   auto t = trunc ? trunc : std::optional<int>(4);
                   GradedPoly p(ring, t);
                   p.add_term(Monomial::of(Generator::pontryagin(1)),
                              Coeff::of(ring, -1));
                   return p;
                 }});
    r.push_back({"SigmaFR.oriented.(8,8)",
                 {SingName::SigmaFR, Category::RealOriented},
                 "(8, 8)",
                 "12*p1^2 - 9*p2",
                 8, 8,
                 Ring::dyadic(),
                 [](int m, int n) { return m == 8 && n == 8; },
                 [](int, int, Ring ring, std::optional<int> trunc) {
                   auto t = trunc ? trunc : std::optional<int>(8);
                   GradedPoly p(ring, t);
                   p.add_term(Monomial::of(Generator::pontryagin(1), 2),
                              Coeff::of(ring, 12));
                   p.add_term(Monomial::of(Generator::pontryagin(2)),
                              Coeff::of(ring, -9));
                   return p;
                 }});
    return r;
  }();
  return rows;
}

inline const ThomRow& find_thom_row(const SingTypeId& id, int m, int n) {
  for (const ThomRow& row : thom_rows())
    if (row.id == id && row.matches(m, n)) return row;
  throw input_error("no catalog row for " + render_sing_name(id.name) + " (" +
                    render_category(id.category) + ") at (" +
                    std::to_string(m) + ", " + std::to_string(n) + ")");
}

/// Build the absolute class of a type at concrete dimensions.  ring and
/// truncation default to the row's conventions (truncation defaults to the
/// codimension, which the class is homogeneous of anyway).
inline GradedPoly lookup_tp(const SingTypeId& id, int m, int n,
                            std::optional<Ring> ring = std::nullopt,
                            std::optional<int> truncation = std::nullopt) {
  const ThomRow& row = find_thom_row(id, m, n);
  return row.build(m, n, ring.value_or(row.default_ring), truncation);
}

/// Default value of the normal-form constant in correction row (vii):
/// 2 for odd k, 1 for even k.  The override hook exists because the row's
/// source leaves the constant to the regular-homotopy literature; pinning
/// it here keeps the row testable under either convention.
inline std::int64_t smale_coefficient(int k,
                                      std::optional<std::int64_t> override_ak =
                                          std::nullopt) {
  if (k < 1) throw input_error("smale coefficient index must be positive");
  if (override_ak) return *override_ak;
  return k % 2 == 1 ? 2 : 1;
}

inline std::int64_t odd_factorial_bound(int k) {
  // (2k-1)!
  std::int64_t f = 1;
  for (int i = 2; i <= 2 * k - 1; ++i) f = detail::checked_mul(f, i);
  return f;
}

/// One additive term of a correction formula: coefficient times a named
/// boundary invariant.
struct CorrectionTerm {
  std::int64_t coeff;
  std::string invariant;
};

/// One row of the boundary-correction table.  The formula is symbolic:
/// materialize(m, n, a_k override) resolves dimension-dependent pieces
/// (the d_q degree, the a_k(2k-1)! coefficient) into concrete terms, and
/// evaluation against a profile happens elsewhere.
struct CorrectionRow {
  std::string case_tag;  // "i" .. "xi"
  SingTypeId id;
  std::string dims_text;
  int dims_specificity;  // 2 exact dims, 1 parametric family, 0 side condition
  BoundaryPredicate boundary;
  Ring ring;
  std::string formula_text;
  std::function<bool(int, int)> matches;
  std::function<std::vector<CorrectionTerm>(int, int,
                                            std::optional<std::int64_t>)>
      materialize;
};

inline const std::vector<CorrectionRow>& correction_rows() {
  using Terms = std::vector<CorrectionTerm>;
  static const std::vector<CorrectionRow> rows = [] {
    auto none = [](int, int, std::optional<std::int64_t>) { return Terms{}; };
    std::vector<CorrectionRow> r;
    r.push_back({"i",
                 {SingName::A1, Category::RealUnoriented},
                 "(m, n), m <= n", 0,
                 BoundaryPredicate::Sphere,
                 Ring::z2(),
                 "0",
                 [](int m, int n) { return m >= 1 && m <= n; },
                 none});
    r.push_back({"ii",
                 {SingName::A1, Category::Complex},
                 "(m, n), m <= n", 0,
                 BoundaryPredicate::Sphere,
                 Ring::integers(),
                 "2*d_{n-m+1}",
                 [](int m, int n) { return m >= 1 && m <= n; },
                 [](int m, int n, std::optional<std::int64_t>) {
                   return Terms{{2, "d_" + std::to_string(n - m + 1)}};
                 }});
    r.push_back({"iii",
                 {SingName::A1, Category::RealUnoriented},
                 "(m, n), m >= n", 0,
                 BoundaryPredicate::Any,
                 Ring::z2(),
                 "0",
                 [](int m, int n) { return n >= 1 && m >= n; },
                 none});
    r.push_back({"iv",
                 {SingName::A1, Category::Function},
                 "(m, 1), m >= 1", 0,
                 BoundaryPredicate::Any,
                 Ring::integers(),
                 "0",
                 [](int m, int n) { return m >= 1 && n == 1; },
                 none});
    r.push_back({"v",
                 {SingName::A2, Category::RealUnoriented},
                 "(2, 2)", 2,
                 BoundaryPredicate::Any,
                 Ring::z2(),
                 "0",
                 [](int m, int n) { return m == 2 && n == 2; },
                 none});
    r.push_back({"vi",
                 {SingName::A2, Category::RealUnoriented},
                 "(2k, 2), k > 1", 1,
                 BoundaryPredicate::Any,
                 Ring::z2(),
                 "rot_boundary",
                 [](int m, int n) { return m >= 4 && m % 2 == 0 && n == 2; },
                 [](int, int, std::optional<std::int64_t>) {
                   return Terms{{1, "rot_boundary"}};
                 }});
    r.push_back({"vii",
                 {SingName::A2, Category::RealOriented},
                 "(4k, 6k-1), k >= 1", 1,
                 BoundaryPredicate::Sphere,
                 Ring::integers(),
                 "a_k*(2k-1)!*Omega",
                 [](int m, int n) {
                   return m >= 4 && m % 4 == 0 && n == (6 * (m / 4)) - 1;
                 },
                 [](int m, int, std::optional<std::int64_t> ak) {
                   int k = m / 4;
                   std::int64_t c = detail::checked_mul(
                       smale_coefficient(k, ak), odd_factorial_bound(k));
                   return Terms{{c, "Omega"}};
                 }});
    r.push_back({"viii",
                 {SingName::A2, Category::RealOriented},
                 "(4, 5)", 2,
                 BoundaryPredicate::Any,
                 Ring::integers(),
                 "2*i_a + 3*tau + delta",
                 [](int m, int n) { return m == 4 && n == 5; },
                 [](int, int, std::optional<std::int64_t>) {
                   return Terms{{2, "i_a"}, {3, "tau"}, {1, "delta"}};
                 }});
    r.push_back({"ix",
                 {SingName::Sigma2, Category::RealOriented},
                 "(4, 4)", 2,
                 BoundaryPredicate::Sphere,
                 Ring::integers(),
                 "2*Omega_j",
                 [](int m, int n) { return m == 4 && n == 4; },
                 [](int, int, std::optional<std::int64_t>) {
                   return Terms{{2, "Omega_j"}};
                 }});
    r.push_back({"x",
                 {SingName::Sigma2, Category::RealOriented},
                 "(4, 4)", 2,
                 BoundaryPredicate::Any,
                 Ring::mod(24),
                 "2*T + 3*mu + delta (mod 24)",
                 [](int m, int n) { return m == 4 && n == 4; },
                 [](int, int, std::optional<std::int64_t>) {
                   return Terms{{2, "T"}, {3, "mu"}, {1, "delta"}};
                 }});
    r.push_back({"xi",
                 {SingName::SigmaFR, Category::RealOriented},
                 "(8, 8)", 2,
                 BoundaryPredicate::Any,
                 Ring::integers(),
                 "0",
                 [](int m, int n) { return m == 8 && n == 8; },
                 none});
    return r;
  }();
  return rows;
}

/// Select the correction row for a query.  Among matching rows the most
/// specific wins: a sphere-only row beats an any-boundary row, then exact
/// dimensions beat parametric families beat side conditions.
inline const CorrectionRow& lookup_correction(const SingTypeId& id, int m,
                                              int n, BoundaryKind boundary) {
  const CorrectionRow* best = nullptr;
  int best_score = -1;
  for (const CorrectionRow& row : correction_rows()) {
    if (!(row.id == id) || !row.matches(m, n)) continue;
    if (!boundary_accepts(row.boundary, boundary)) continue;
    int bspec = row.boundary == BoundaryPredicate::Sphere ? 2
                : row.boundary == BoundaryPredicate::NullCobordant ? 1
                                                                   : 0;
    int score = 4 * bspec + row.dims_specificity;
    if (score > best_score) {
      best = &row;
      best_score = score;
    }
  }
  if (!best)
    throw input_error("no correction row for " + render_sing_name(id.name) +
                      " (" + render_category(id.category) + ") at (" +
                      std::to_string(m) + ", " + std::to_string(n) +
                      "), boundary " + render_boundary_kind(boundary));
  return *best;
}

}  // namespace relthom

#endif  // RELTHOM_CATALOG_HPP
