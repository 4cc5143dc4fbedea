#ifndef RELTHOM_POLY_HPP
#define RELTHOM_POLY_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

#include "relthom/ring.hpp"

namespace relthom {

/// Which characteristic-class family a generator belongs to.  Degrees:
/// Stiefel-Whitney w_i has degree i, Pontryagin p_i degree 4i, Chern c_i
/// degree 2i.  The Euler generator carries a declared degree (the rank of
/// the bundle it is attached to).
enum class Family : int { SW = 0, Pontryagin = 1, Chern = 2, Euler = 3 };

/// Source-side classes describe the domain bundle, target-side classes the
/// pulled-back image bundle.  Target generators render with a prime: c'1.
enum class Side : int { Source = 0, Target = 1 };

struct Generator {
  Family family;
  Side side;
  int index;   // subscript; for Euler always 1
  int degree;  // derived except for Euler, where it is declared

  static Generator sw(int i, Side s = Side::Source) {
    if (i < 1) throw input_error("generator index must be positive");
    return {Family::SW, s, i, i};
  }
  static Generator pontryagin(int i, Side s = Side::Source) {
    if (i < 1) throw input_error("generator index must be positive");
    return {Family::Pontryagin, s, i, 4 * i};
  }
  static Generator chern(int i, Side s = Side::Source) {
    if (i < 1) throw input_error("generator index must be positive");
    return {Family::Chern, s, i, 2 * i};
  }
  static Generator euler(int declared_degree, Side s = Side::Source) {
    if (declared_degree < 1) throw input_error("euler degree must be positive");
    return {Family::Euler, s, 1, declared_degree};
  }

  /// Canonical order: side, then family, then index.  Degree does not
  /// participate; two generators that compare equal must agree on degree
  /// (checked where monomials are merged).
  friend bool operator<(const Generator& a, const Generator& b) {
    return std::tie(a.side, a.family, a.index) <
           std::tie(b.side, b.family, b.index);
  }
  friend bool operator==(const Generator& a, const Generator& b) {
    return a.side == b.side && a.family == b.family && a.index == b.index;
  }
  friend bool operator!=(const Generator& a, const Generator& b) {
    return !(a == b);
  }

  std::string render() const {
    std::string s;
    switch (family) {
      case Family::SW: s = "w"; break;
      case Family::Pontryagin: s = "p"; break;
      case Family::Chern: s = "c"; break;
      case Family::Euler: return side == Side::Target ? "e'" : "e";
    }
    if (side == Side::Target) s += "'";
    return s + std::to_string(index);
  }
};

/// Product of generator powers, stored sparse and sorted.  The empty
/// monomial is the multiplicative unit.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::vector<std::pair<Generator, int>> entries) {
    for (auto& [g, e] : entries) {
      if (e < 0) throw input_error("negative exponent in monomial");
      if (e > 0) push(g, e);
    }
    normalize();
  }

  static Monomial unit() { return Monomial(); }
  static Monomial of(const Generator& g, int e = 1) {
    return Monomial({{g, e}});
  }

  const std::vector<std::pair<Generator, int>>& entries() const {
    return entries_;
  }
  bool is_unit() const { return entries_.empty(); }

  int degree() const {
    int d = 0;
    for (auto& [g, e] : entries_) d += g.degree * e;
    return d;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (auto& [g, e] : o.entries_) r.push(g, e);
    r.normalize();
    return r;
  }

  Monomial pow(int e) const {
    if (e < 0) throw input_error("negative monomial power");
    Monomial r = *this;
    for (auto& [g, x] : r.entries_) x *= e;
    if (e == 0) r.entries_.clear();
    return r;
  }

  /// Degree-graded order: lower total degree first, then lexicographic on
  /// the sorted generator sequence with higher powers of earlier
  /// generators first.  This is the order terms render in.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    auto ia = a.entries_.begin(), ib = b.entries_.begin();
    for (; ia != a.entries_.end() && ib != b.entries_.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first;
      if (ia->second != ib->second) return ia->second > ib->second;
    }
    return ia == a.entries_.end() && ib != b.entries_.end();
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

  std::string render() const {
    if (entries_.empty()) return "1";
    std::string s;
    for (auto& [g, e] : entries_) {
      if (!s.empty()) s += "*";
      s += g.render();
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  void push(const Generator& g, int e) { entries_.emplace_back(g, e); }

  void normalize() {
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Generator, int>> merged;
    for (auto& [g, e] : entries_) {
      if (!merged.empty() && merged.back().first == g) {
        if (merged.back().first.degree != g.degree)
          throw input_error("conflicting degrees declared for generator " +
                            g.render());
        merged.back().second += e;
      } else {
        merged.emplace_back(g, e);
      }
    }
    entries_ = std::move(merged);
  }

  std::vector<std::pair<Generator, int>> entries_;
};

/// Sparse graded polynomial over a coefficient Ring, optionally truncated
/// above a maximum degree.  Invariants: no stored zero coefficients, no
/// stored term above the truncation bound.
class GradedPoly {
 public:
  explicit GradedPoly(Ring ring, std::optional<int> truncation = std::nullopt)
      : ring_(ring), truncation_(truncation) {
    if (truncation_ && *truncation_ < 0)
      throw input_error("truncation degree must be non-negative");
  }

  static GradedPoly zero(Ring ring, std::optional<int> trunc = std::nullopt) {
    return GradedPoly(ring, trunc);
  }

  static GradedPoly constant(Ring ring, std::int64_t value,
                             std::optional<int> trunc = std::nullopt) {
    GradedPoly p(ring, trunc);
    p.add_term(Monomial::unit(), Coeff::of(ring, value));
    return p;
  }

  static GradedPoly term(Ring ring, const Monomial& m, std::int64_t value,
                         std::optional<int> trunc = std::nullopt) {
    GradedPoly p(ring, trunc);
    p.add_term(m, Coeff::of(ring, value));
    return p;
  }

  static GradedPoly generator(Ring ring, const Generator& g,
                              std::optional<int> trunc = std::nullopt) {
    return term(ring, Monomial::of(g), 1, trunc);
  }

  const Ring& ring() const { return ring_; }
  std::optional<int> truncation() const { return truncation_; }
  const std::map<Monomial, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff::zero(ring_) : it->second;
  }

  Coeff constant_term() const { return coefficient(Monomial::unit()); }

  int max_degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  /// Lowest degree with a nonzero term; zero polynomial reports -1.
  int min_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree();
  }

  bool is_homogeneous(int degree) const {
    for (auto& [m, c] : terms_)
      if (m.degree() != degree) return false;
    return true;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (c.ring() != ring_) throw input_error("coefficient ring mismatch");
    if (c.is_zero()) return;
    if (truncation_ && m.degree() > *truncation_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  GradedPoly operator+(const GradedPoly& o) const {
    require_same_ring(o);
    GradedPoly r(ring_, combined_truncation(o));
    for (auto& [m, c] : terms_) r.add_term(m, c);
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  GradedPoly operator-() const {
    GradedPoly r(ring_, truncation_);
    for (auto& [m, c] : terms_) r.add_term(m, -c);
    return r;
  }

  GradedPoly operator-(const GradedPoly& o) const { return *this + (-o); }

  GradedPoly operator*(const GradedPoly& o) const {
    require_same_ring(o);
    GradedPoly r(ring_, combined_truncation(o));
    for (auto& [ma, ca] : terms_)
      for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  GradedPoly scaled(const Coeff& c) const {
    GradedPoly r(ring_, truncation_);
    for (auto& [m, x] : terms_) r.add_term(m, x * c);
    return r;
  }

  friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GradedPoly& a, const GradedPoly& b) {
    return !(a == b);
  }

  /// Copy with a (possibly tighter) truncation bound applied.
  GradedPoly truncated(std::optional<int> trunc) const {
    GradedPoly r(ring_, trunc);
    for (auto& [m, c] : terms_) r.add_term(m, c);
    return r;
  }

  /// Sum of the terms of exactly the given degree.
  GradedPoly homogeneous_part(int degree) const {
    GradedPoly r(ring_, truncation_);
    for (auto& [m, c] : terms_)
      if (m.degree() == degree) r.add_term(m, c);
    return r;
  }

  /// Multiplicative inverse of a series with unit constant term, computed
  /// degree by degree.  Requires a truncation bound, otherwise the inverse
  /// is an infinite series.
  GradedPoly inverse() const {
    if (!truncation_)
      throw input_error("series inversion requires a truncation bound");
    Coeff c0 = constant_term();
    if (!c0.is_unit())
      throw input_error("series inversion requires a unit constant term");
    Coeff c0inv = c0.inverse();
    int n = *truncation_;
    // q_0 = c0^-1;  q_d = -c0^-1 * sum_{j=1..d} p_j q_{d-j}
    std::vector<GradedPoly> q(n + 1, GradedPoly(ring_, truncation_));
    std::vector<GradedPoly> p(n + 1, GradedPoly(ring_, truncation_));
    for (int d = 0; d <= n; ++d) p[d] = homogeneous_part(d);
    GradedPoly result(ring_, truncation_);
    q[0] = GradedPoly::constant(ring_, 1, truncation_).scaled(c0inv);
    result = q[0];
    for (int d = 1; d <= n; ++d) {
      GradedPoly acc(ring_, truncation_);
      for (int j = 1; j <= d; ++j) acc = acc + p[j] * q[d - j];
      q[d] = (-acc).scaled(c0inv);
      result = result + q[d];
    }
    return result;
  }

  /// Ring-homomorphic substitution: replace every generator by an assigned
  /// polynomial.  Every generator appearing in this polynomial must be
  /// assigned.  Unless degree_heterogeneous is set, each assigned value
  /// must be zero or have lowest degree equal to the generator's degree,
  /// so substitution interacts consistently with truncation.
  GradedPoly substitute(const std::map<Monomial, GradedPoly>& assignment,
                        bool degree_heterogeneous = false) const {
    std::map<std::string, const GradedPoly*> by_gen;
    for (auto& [m, value] : assignment) {
      if (m.entries().size() != 1 || m.entries()[0].second != 1)
        throw input_error("substitution keys must be single generators");
      const Generator& g = m.entries()[0].first;
      if (value.ring() != ring_)
        throw input_error("substitution value ring mismatch");
      if (!degree_heterogeneous && !value.is_zero() &&
          value.min_degree() != g.degree)
        throw input_error("substitution for " + g.render() +
                          " does not preserve degree");
      by_gen[g.render()] = &value;
    }
    GradedPoly r(ring_, truncation_);
    for (auto& [m, c] : terms_) {
      GradedPoly prod = GradedPoly::constant(ring_, 1, truncation_).scaled(c);
      for (auto& [g, e] : m.entries()) {
        auto it = by_gen.find(g.render());
        if (it == by_gen.end())
          throw input_error("no substitution given for generator " +
                            g.render());
        for (int i = 0; i < e; ++i) prod = prod * *it->second;
      }
      r = r + prod;
    }
    return r;
  }

  /// Pair a homogeneous polynomial of the given degree against a table of
  /// monomial numbers, producing a ring element.  Every monomial present
  /// must have a number unless vanishing_defaults treats missing entries
  /// as zero.
  Coeff evaluate(int degree, const std::map<Monomial, Coeff>& numbers,
                 bool vanishing_defaults = false) const {
    if (!is_homogeneous(degree))
      throw input_error("evaluation requires a homogeneous polynomial of "
                        "degree " + std::to_string(degree));
    Coeff total = Coeff::zero(ring_);
    for (auto& [m, c] : terms_) {
      auto it = numbers.find(m);
      if (it == numbers.end()) {
        if (vanishing_defaults) continue;
        throw input_error("no number assigned to monomial " + m.render());
      }
      if (it->second.ring() != ring_)
        throw input_error("number ring mismatch for monomial " + m.render());
      total = total + c * it->second;
    }
    return total;
  }

  /// Canonical text form: terms in graded order joined with signs, e.g.
  /// "12*p1^2 - 9*p2", "1 + w1 + w1^2 + w2", "0".
  std::string render() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [m, c] : terms_) {
      std::string cs = c.render();
      bool negative = !cs.empty() && cs[0] == '-';
      std::string mag = negative ? cs.substr(1) : cs;
      if (first) {
        if (negative) out << "-";
        first = false;
      } else {
        out << (negative ? " - " : " + ");
      }
      if (m.is_unit()) {
        out << mag;
      } else if (mag == "1") {
        out << m.render();
      } else {
        out << mag << "*" << m.render();
      }
    }
    return out.str();
  }

 private:
  std::optional<int> combined_truncation(const GradedPoly& o) const {
    if (!truncation_) return o.truncation_;
    if (!o.truncation_) return truncation_;
    return std::min(*truncation_, *o.truncation_);
  }

  void require_same_ring(const GradedPoly& o) const {
    if (ring_ != o.ring_)
      throw input_error("polynomial ring mismatch: " + ring_.name() + " vs " +
                        o.ring_.name());
  }

  Ring ring_;
  std::optional<int> truncation_;
  std::map<Monomial, Coeff> terms_;
};

/// 1 + g_1 + ... + g_rank for a class family on one side, truncated.
inline GradedPoly total_class(Family family, Side side, int rank, Ring ring,
                              std::optional<int> truncation) {
  if (family == Family::Euler)
    throw input_error("the Euler class has no total-class series");
  if (rank < 0) throw input_error("total class rank must be non-negative");
  GradedPoly p = GradedPoly::constant(ring, 1, truncation);
  for (int i = 1; i <= rank; ++i) {
    Generator g = family == Family::SW ? Generator::sw(i, side)
                 : family == Family::Pontryagin ? Generator::pontryagin(i, side)
                                                : Generator::chern(i, side);
    p = p + GradedPoly::generator(ring, g, truncation);
  }
  return p;
}

/// Degree-q part of the inverse total class: the dual class of the family
/// (wbar, cbar, pbar as the family dictates).  q is a cohomological
/// degree; rank bounds the generator indices available, matching the rank
/// of the underlying bundle.
inline GradedPoly dual_class(Family family, Side side, int rank, int q,
                             Ring ring) {
  GradedPoly t = total_class(family, side, rank, ring, q);
  return t.inverse().homogeneous_part(q);
}

/// Parse a monomial in canonical text form ("w1^2*w2", "c'1", "e", "1").
/// The Euler generator needs its declared degree supplied by the caller.
inline Monomial parse_monomial(const std::string& text, int euler_degree = 0) {
  if (text == "1") return Monomial::unit();
  std::vector<std::pair<Generator, int>> entries;
  std::size_t i = 0;
  while (i < text.size()) {
    char f = text[i++];
    Side side = Side::Source;
    if (i < text.size() && text[i] == '\'') {
      side = Side::Target;
      ++i;
    }
    if (f == 'e') {
      if (euler_degree <= 0)
        throw input_error("euler generator needs a declared degree");
      int e = 1;
      if (i < text.size() && text[i] == '^') {
        std::size_t j = ++i;
        while (i < text.size() && std::isdigit(text[i])) ++i;
        if (i == j) throw input_error("bad exponent in monomial: " + text);
        e = std::stoi(text.substr(j, i - j));
      }
      entries.emplace_back(Generator::euler(euler_degree, side), e);
    } else {
      std::size_t j = i;
      while (i < text.size() && std::isdigit(text[i])) ++i;
      if (i == j) throw input_error("bad generator in monomial: " + text);
      int index = std::stoi(text.substr(j, i - j));
      Generator g = f == 'w' ? Generator::sw(index, side)
                   : f == 'p' ? Generator::pontryagin(index, side)
                   : f == 'c' ? Generator::chern(index, side)
                              : throw input_error(
                                    std::string("unknown generator family '") +
                                    f + "' in monomial: " + text);
      int e = 1;
      if (i < text.size() && text[i] == '^') {
        j = ++i;
        while (i < text.size() && std::isdigit(text[i])) ++i;
        if (i == j) throw input_error("bad exponent in monomial: " + text);
        e = std::stoi(text.substr(j, i - j));
      }
      entries.emplace_back(g, e);
    }
    if (i < text.size()) {
      if (text[i] != '*')
        throw input_error("expected '*' between factors in monomial: " + text);
      ++i;
      if (i == text.size())
        throw input_error("trailing '*' in monomial: " + text);
    }
  }
  if (entries.empty()) throw input_error("empty monomial text");
  return Monomial(entries);
}

}  // namespace relthom

#endif  // RELTHOM_POLY_HPP
