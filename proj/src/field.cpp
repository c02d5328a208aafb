#include "tf/field.hpp"

#include "tf/errors.hpp"

namespace tf {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error("characteristic must be 0 or a prime below 2^31, got " + std::to_string(p));
  }
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw Error("division by zero in GF(" + std::to_string(p_) + ")");
  long long t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

PrimeField::Element PrimeField::from_string(std::string_view digits) const {
  auto slash = digits.find('/');
  if (slash != std::string_view::npos) {
    Element num = from_string(digits.substr(0, slash));
    Element den = from_string(digits.substr(slash + 1));
    return div(num, den);
  }
  Element acc = 0;
  bool negative = false;
  for (char c : digits) {
    if (c == '-') {
      negative = !negative;
      continue;
    }
    if (c < '0' || c > '9') throw Error("invalid integer literal '" + std::string(digits) + "'");
    acc = add(mul(acc, 10 % p_), static_cast<Element>((c - '0') % p_));
  }
  return negative ? neg(acc) : acc;
}

RationalField::Element RationalField::from_string(std::string_view digits) const {
  Element v;
  if (v.set_str(std::string(digits), 10) != 0) {
    throw Error("invalid rational literal '" + std::string(digits) + "'");
  }
  v.canonicalize();
  return v;
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw Error("division by zero in Q");
  return Element(1) / a;
}

}  // namespace tf
