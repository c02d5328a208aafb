#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace tf {

/// The prime field GF(p), p < 2^31. Elements are canonical residues.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p = 32003);

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  /// Parses a decimal integer (optionally "a/b") and reduces it modulo p.
  Element from_string(std::string_view digits) const;

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  /// Symmetric representative in (-p/2, p/2].
  long long lift(Element a) const { return a > p_ / 2 ? static_cast<long long>(a) - p_ : a; }
  std::string to_string(Element a) const { return std::to_string(lift(a)); }
  bool is_negative(Element a) const { return a > p_ / 2; }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// The rational numbers with GMP arithmetic.
class RationalField {
 public:
  using Element = mpq_class;

  std::uint32_t characteristic() const { return 0; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const { return Element(static_cast<long>(v)); }
  Element from_string(std::string_view digits) const;

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return a / b; }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  std::string to_string(const Element& a) const { return a.get_str(); }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  bool operator==(const RationalField&) const = default;
};

template <class F>
concept CoefficientField = requires(const F f, typename F::Element a) {
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
  { f.add(a, a) } -> std::convertible_to<typename F::Element>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
  { f.inv(a) } -> std::convertible_to<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
};

bool is_prime(std::uint32_t n);

}  // namespace tf
