#ifndef RELTHOM_RING_HPP
#define RELTHOM_RING_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace relthom {

/// Raised on malformed input: schema violations, ring mismatches, unknown
/// catalog rows.  The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when data is well-formed but mathematically inconsistent:
/// integrality/parity violations, failed genericity certificates,
/// non-divisible brackets.  The CLI maps this to exit code 1.
struct consistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw consistency_error("integer overflow in coefficient arithmetic");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw consistency_error("integer overflow in coefficient arithmetic");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
  return checked_mul(a, -1);
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail

/// Coefficient domain of a graded polynomial.  Four variants:
///   Z2        -- the field with two elements
///   Int       -- the integers
///   IntDyadic -- integers with 2 inverted (denominators are powers of 2)
///   IntMod(m) -- integers modulo m
class Ring {
 public:
  enum class Kind { Z2, Int, IntDyadic, IntMod };

  static Ring z2() { return Ring(Kind::Z2, 2); }
  static Ring integers() { return Ring(Kind::Int, 0); }
  static Ring dyadic() { return Ring(Kind::IntDyadic, 0); }
  static Ring mod(std::int64_t modulus) {
    if (modulus < 2) throw input_error("IntMod modulus must be >= 2");
    return Ring(Kind::IntMod, modulus);
  }

  Kind kind() const { return kind_; }
  std::int64_t modulus() const { return modulus_; }

  bool operator==(const Ring& o) const {
    return kind_ == o.kind_ && modulus_ == o.modulus_;
  }
  bool operator!=(const Ring& o) const { return !(*this == o); }

  std::string name() const {
    switch (kind_) {
      case Kind::Z2: return "Z2";
      case Kind::Int: return "Z";
      case Kind::IntDyadic: return "Z[1/2]";
      case Kind::IntMod: return "Z" + std::to_string(modulus_);
    }
    return "?";
  }

 private:
  Ring(Kind k, std::int64_t m) : kind_(k), modulus_(m) {}
  Kind kind_;
  std::int64_t modulus_;
};

/// One element of a Ring.  The interpretation of (num, exp2) depends on the
/// ring: for IntDyadic the value is num / 2^exp2 with num odd whenever
/// exp2 > 0; for the other rings exp2 is zero and num is the value
/// (reduced into [0, m) for Z2 / IntMod).
class Coeff {
 public:
  Coeff() : ring_(Ring::integers()), num_(0), exp2_(0) {}

  static Coeff of(const Ring& ring, std::int64_t value) {
    return make(ring, value, 0);
  }

  static Coeff zero(const Ring& ring) { return of(ring, 0); }
  static Coeff one(const Ring& ring) { return of(ring, 1); }

  /// value / 2^exp2 in the dyadic ring.
  static Coeff dyadic(std::int64_t numerator, int exp2) {
    if (exp2 < 0) throw input_error("dyadic exponent must be non-negative");
    return make(Ring::dyadic(), numerator, exp2);
  }

  const Ring& ring() const { return ring_; }
  std::int64_t numerator() const { return num_; }
  int exp2() const { return exp2_; }
  bool is_zero() const { return num_ == 0; }

  bool operator==(const Coeff& o) const {
    return ring_ == o.ring_ && num_ == o.num_ && exp2_ == o.exp2_;
  }
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  Coeff operator+(const Coeff& o) const {
    require_same_ring(o);
    if (ring_.kind() == Ring::Kind::IntDyadic) {
      // bring both to the common denominator 2^max(exp2)
      int e = std::max(exp2_, o.exp2_);
      std::int64_t a = detail::checked_mul(num_, std::int64_t(1) << (e - exp2_));
      std::int64_t b =
          detail::checked_mul(o.num_, std::int64_t(1) << (e - o.exp2_));
      return make(ring_, detail::checked_add(a, b), e);
    }
    return make(ring_, detail::checked_add(num_, o.num_), 0);
  }

  Coeff operator-() const { return make(ring_, detail::checked_neg(num_), exp2_); }
  Coeff operator-(const Coeff& o) const { return *this + (-o); }

  Coeff operator*(const Coeff& o) const {
    require_same_ring(o);
    if (ring_.kind() == Ring::Kind::IntDyadic)
      return make(ring_, detail::checked_mul(num_, o.num_), exp2_ + o.exp2_);
    return make(ring_, detail::checked_mul(num_, o.num_), 0);
  }

  bool is_unit() const {
    switch (ring_.kind()) {
      case Ring::Kind::Z2: return num_ == 1;
      case Ring::Kind::Int: return num_ == 1 || num_ == -1;
      case Ring::Kind::IntDyadic: {
        // units are +-2^k: the odd part of the numerator must be +-1
        std::int64_t n = num_ < 0 ? -num_ : num_;
        if (n == 0) return false;
        while (n % 2 == 0) n /= 2;
        return n == 1;
      }
      case Ring::Kind::IntMod:
        return std::gcd(num_, ring_.modulus()) == 1;
    }
    return false;
  }

  Coeff inverse() const {
    if (!is_unit()) throw input_error("not a unit in " + ring_.name());
    switch (ring_.kind()) {
      case Ring::Kind::Z2: return *this;
      case Ring::Kind::Int: return *this;
      case Ring::Kind::IntDyadic: {
        // (s * 2^j / 2^e)^-1 = s * 2^(e-j),  s = +-1
        std::int64_t n = num_;
        int sign = n < 0 ? -1 : 1;
        if (n < 0) n = -n;
        int j = 0;
        while (n % 2 == 0) { n /= 2; ++j; }
        int e = exp2_ - j;
        if (e >= 0) return make(ring_, sign * (std::int64_t(1) << e), 0);
        return make(ring_, sign, -e);
      }
      case Ring::Kind::IntMod: {
        // extended Euclid
        std::int64_t m = ring_.modulus();
        std::int64_t a = num_, b = m, x0 = 1, x1 = 0;
        while (b != 0) {
          std::int64_t q = a / b;
          std::int64_t t = a - q * b; a = b; b = t;
          t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return make(ring_, detail::floor_mod(x0, m), 0);
      }
    }
    throw input_error("unreachable");
  }

  /// Integer value; for dyadic elements this asserts exp2 == 0.
  std::int64_t as_integer() const {
    if (exp2_ != 0)
      throw consistency_error("integrality violation: " + render() +
                              " is not an integer");
    return num_;
  }

  /// Reinterpret this element in another ring.  Int -> anything is a ring
  /// map; dyadic -> Int asserts integrality.
  Coeff cast_to(const Ring& target) const {
    if (ring_ == target) return *this;
    return of(target, as_integer());
  }

  std::string render() const {
    if (exp2_ == 0) return std::to_string(num_);
    if (exp2_ == 1) return std::to_string(num_) + "/2";
    return std::to_string(num_) + "/2^" + std::to_string(exp2_);
  }

 private:
  static Coeff make(const Ring& ring, std::int64_t num, int exp2) {
    Coeff c;
    c.ring_ = ring;
    switch (ring.kind()) {
      case Ring::Kind::Z2:
        c.num_ = detail::floor_mod(num, 2);
        c.exp2_ = 0;
        break;
      case Ring::Kind::Int:
        c.num_ = num;
        c.exp2_ = 0;
        break;
      case Ring::Kind::IntDyadic:
        while (num != 0 && num % 2 == 0 && exp2 > 0) { num /= 2; --exp2; }
        c.num_ = num;
        c.exp2_ = num == 0 ? 0 : exp2;
        break;
      case Ring::Kind::IntMod:
        c.num_ = detail::floor_mod(num, ring.modulus());
        c.exp2_ = 0;
        break;
    }
    return c;
  }

  void require_same_ring(const Coeff& o) const {
    if (ring_ != o.ring_)
      throw input_error("ring mismatch: " + ring_.name() + " vs " +
                        o.ring_.name());
  }

  Ring ring_;
  std::int64_t num_;
  int exp2_;
};

}  // namespace relthom

#endif  // RELTHOM_RING_HPP
