#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>

#include "tf/errors.hpp"

namespace tf {

inline constexpr int kMaxVariables = 40;

/// Exponent vector with cached weighted degree and support mask. The
/// component index is 0 for ring elements; free-module elements use it to
/// name the basis vector a term lives in.
struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exponents{};
  std::int32_t degree = 0;
  std::uint16_t component = 0;
  std::uint64_t support = 0;

  std::uint8_t operator[](int var) const { return exponents[static_cast<std::size_t>(var)]; }

  bool is_one() const { return support == 0; }

  int total_degree() const {
    int d = 0;
    for (auto e : exponents) d += e;
    return d;
  }

  bool operator==(const Monomial& o) const {
    return support == o.support && component == o.component &&
           std::memcmp(exponents.data(), o.exponents.data(), kMaxVariables) == 0;
  }
};

inline std::uint64_t support_of(const std::array<std::uint8_t, kMaxVariables>& e) {
  std::uint64_t mask = 0;
  for (int i = 0; i < kMaxVariables; ++i) {
    if (e[static_cast<std::size_t>(i)] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

/// a | b, including equality of components.
inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.component != b.component) return false;
  if ((a.support & ~b.support) != 0) return false;
  for (int i = 0; i < kMaxVariables; ++i) {
    if (a.exponents[static_cast<std::size_t>(i)] > b.exponents[static_cast<std::size_t>(i)]) {
      return false;
    }
  }
  return true;
}

/// Product; at most one operand may carry a nonzero component.
inline Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial r;
  bool overflow = false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned s = unsigned{a.exponents[i]} + b.exponents[i];
    overflow |= s > 255;
    r.exponents[i] = static_cast<std::uint8_t>(s);
  }
  if (overflow) throw ExponentOverflow();
  r.degree = a.degree + b.degree;
  r.component = static_cast<std::uint16_t>(a.component + b.component);
  r.support = a.support | b.support;
  return r;
}

/// b / a, assuming divides(a, b). The quotient lives in component 0.
inline Monomial divide(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exponents[i] = static_cast<std::uint8_t>(b.exponents[i] - a.exponents[i]);
  }
  r.degree = b.degree - a.degree;
  r.component = 0;
  r.support = support_of(r.exponents);
  return r;
}

/// Least common multiple; the caller supplies the grading for the degree.
inline Monomial lcm(const Monomial& a, const Monomial& b, std::span<const int> weights) {
  Monomial r;
  int deg = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    r.exponents[i] = a.exponents[i] > b.exponents[i] ? a.exponents[i] : b.exponents[i];
    deg += weights[i] * r.exponents[i];
  }
  r.degree = deg;
  r.component = a.component;
  r.support = a.support | b.support;
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) { return (a.support & b.support) == 0; }

}  // namespace tf
