#ifndef RELTHOM_NUMLAB_POLY2_HPP
#define RELTHOM_NUMLAB_POLY2_HPP

#include <cmath>
#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace relthom::numlab {

/// Sparse bivariate polynomial with scalar coefficients (double or
/// std::complex<double>).  Just enough arithmetic to form Jacobians,
/// minors and their derivatives; no attempt at a general CAS.
template <class S>
class Poly2 {
 public:
  Poly2() = default;

  static Poly2 constant(S c) {
    Poly2 p;
    p.set(0, 0, c);
    return p;
  }
  static Poly2 x() {
    Poly2 p;
    p.set(1, 0, S(1));
    return p;
  }
  static Poly2 y() {
    Poly2 p;
    p.set(0, 1, S(1));
    return p;
  }
  static Poly2 term(int i, int j, S c) {
    Poly2 p;
    p.set(i, j, c);
    return p;
  }

  void set(int i, int j, S c) {
    if (c == S(0))
      terms_.erase({i, j});
    else
      terms_[{i, j}] = c;
  }

  S coefficient(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? S(0) : it->second;
  }

  const std::map<std::pair<int, int>, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree_x() const {
    int d = 0;
    for (auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
  }
  int degree_y() const {
    int d = 0;
    for (auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
  }

  Poly2 operator+(const Poly2& o) const {
    Poly2 r = *this;
    for (auto& [k, c] : o.terms_) r.set(k.first, k.second, r.coefficient(k.first, k.second) + c);
    return r;
  }
  Poly2 operator-(const Poly2& o) const {
    Poly2 r = *this;
    for (auto& [k, c] : o.terms_) r.set(k.first, k.second, r.coefficient(k.first, k.second) - c);
    return r;
  }
  Poly2 operator*(const Poly2& o) const {
    Poly2 r;
    for (auto& [a, ca] : terms_)
      for (auto& [b, cb] : o.terms_) {
        int i = a.first + b.first, j = a.second + b.second;
        r.set(i, j, r.coefficient(i, j) + ca * cb);
      }
    return r;
  }
  Poly2 operator-() const { return scaled(S(-1)); }
  Poly2 scaled(S c) const {
    Poly2 r;
    for (auto& [k, v] : terms_) r.set(k.first, k.second, c * v);
    return r;
  }

  Poly2 dx() const {
    Poly2 r;
    for (auto& [k, c] : terms_)
      if (k.first > 0) r.set(k.first - 1, k.second, c * S(k.first));
    return r;
  }
  Poly2 dy() const {
    Poly2 r;
    for (auto& [k, c] : terms_)
      if (k.second > 0) r.set(k.first, k.second - 1, c * S(k.second));
    return r;
  }

  S eval(S x, S y) const {
    int dx_ = degree_x(), dy_ = degree_y();
    std::vector<S> px(dx_ + 1), py(dy_ + 1);
    px[0] = S(1);
    for (int i = 1; i <= dx_; ++i) px[i] = px[i - 1] * x;
    py[0] = S(1);
    for (int j = 1; j <= dy_; ++j) py[j] = py[j - 1] * y;
    S acc(0);
    for (auto& [k, c] : terms_) acc += c * px[k.first] * py[k.second];
    return acc;
  }

  /// Largest coefficient magnitude; used to scale residual thresholds.
  double magnitude() const {
    double m = 0;
    for (auto& [k, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

 private:
  std::map<std::pair<int, int>, S> terms_;
};

using Poly2d = Poly2<double>;
using Poly2c = Poly2<std::complex<double>>;

/// View coefficients as a polynomial in y whose coefficients are dense
/// polynomials in x.  Feeds the resultant pipeline.
inline std::vector<std::vector<std::complex<double>>> as_poly_in_y(const Poly2c& p) {
  std::vector<std::vector<std::complex<double>>> out(p.degree_y() + 1);
  int dx = p.degree_x();
  for (auto& v : out) v.assign(dx + 1, std::complex<double>(0));
  for (auto& [k, c] : p.terms()) out[k.second][k.first] = c;
  return out;
}

}  // namespace relthom::numlab

#endif  // RELTHOM_NUMLAB_POLY2_HPP
