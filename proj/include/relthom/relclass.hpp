#ifndef RELTHOM_RELCLASS_HPP
#define RELTHOM_RELCLASS_HPP

#include <optional>
#include <string>

#include "relthom/poly.hpp"

namespace relthom {

/// A formal image of a boundary class under the connecting homomorphism.
/// Opaque: it carries a label, a degree and a scale, and no further
/// structure.  Its only algebraic property is that it annihilates every
/// relative class under cup product.
struct DeltaSymbol {
  std::string label;  // e.g. "alpha", "rot", "d3"
  int degree;
  Coeff scale;

  bool operator==(const DeltaSymbol& o) const {
    return label == o.label && degree == o.degree && scale == o.scale;
  }

  std::string render() const {
    std::string body = "delta(" + label + ")";
    if (scale == Coeff::one(scale.ring())) return body;
    return scale.render() + "*" + body;
  }
};

/// A relative characteristic class: an ordinary polynomial part plus an
/// optional connecting-homomorphism summand.  Addition is componentwise;
/// multiplication drops every delta summand, because the cup product of a
/// relative class with a connecting-homomorphism image vanishes.
class RelClass {
 public:
  explicit RelClass(GradedPoly naive,
                    std::optional<DeltaSymbol> delta = std::nullopt)
      : naive_(std::move(naive)), delta_(std::move(delta)) {
    if (delta_) {
      if (delta_->scale.ring() != naive_.ring())
        throw input_error("delta symbol ring mismatch");
      if (delta_->scale.is_zero()) delta_.reset();
    }
    if (delta_ && !naive_.is_zero() && !naive_.is_homogeneous(delta_->degree))
      throw input_error("delta symbol degree must match the naive part");
  }

  const GradedPoly& naive() const { return naive_; }
  const std::optional<DeltaSymbol>& delta() const { return delta_; }
  bool has_delta() const { return delta_.has_value(); }
  const Ring& ring() const { return naive_.ring(); }

  RelClass operator+(const RelClass& o) const {
    std::optional<DeltaSymbol> d;
    if (delta_ && o.delta_) {
      if (delta_->label != o.delta_->label ||
          delta_->degree != o.delta_->degree)
        throw input_error("cannot add distinct delta symbols");
      Coeff s = delta_->scale + o.delta_->scale;
      if (!s.is_zero()) d = DeltaSymbol{delta_->label, delta_->degree, s};
    } else if (delta_) {
      d = delta_;
    } else if (o.delta_) {
      d = o.delta_;
    }
    return RelClass(naive_ + o.naive_, std::move(d));
  }

  /// Product of two relative classes; the delta parts of both factors die.
  RelClass operator*(const RelClass& o) const {
    return RelClass(naive_ * o.naive_, std::nullopt);
  }

  RelClass squared() const { return *this * *this; }

  friend bool operator==(const RelClass& a, const RelClass& b) {
    return a.naive_ == b.naive_ && a.delta_ == b.delta_;
  }

  std::string render() const {
    if (!delta_) return naive_.render();
    if (naive_.is_zero()) return delta_->render();
    return naive_.render() + " + " + delta_->render();
  }

 private:
  GradedPoly naive_;
  std::optional<DeltaSymbol> delta_;
};

}  // namespace relthom

#endif  // RELTHOM_RELCLASS_HPP
