// Exact coefficient fields: prime fields GF(p) and the rationals.
//
// Both field classes expose the same interface so that every algorithm in
// the library can be instantiated for either of them:
//
//   using Element = ...;
//   Element zero(), one(), from_int(int64), from_integer(mpz), from_ratio(num, den)
//   add, sub, neg, mul, inv, try_inv, div, is_zero, is_one, equal
//   random(Rng&), random_nonzero(Rng&), format(Element), spec()
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace syzygy {

class Rng;

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Raised by `inv`/`div` when asked to invert zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Runtime description of a coefficient field.
struct FieldSpec {
  enum class Kind { Rationals, Prime };

  Kind kind = Kind::Prime;
  std::uint32_t prime = kDefaultPrime;  // meaningful iff kind == Prime

  static FieldSpec rationals() { return {Kind::Rationals, 0}; }
  static FieldSpec prime_field(std::uint32_t p = kDefaultPrime) {
    return {Kind::Prime, p};
  }

  bool is_prime() const { return kind == Kind::Prime; }
  /// "Q" or the decimal prime, as used in ideal files.
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime_number(std::uint64_t n);

class PrimeField {
 public:
  using Element = std::uint32_t;

  /// Throws std::invalid_argument unless p is a prime in [2, 2^31).
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec::prime_field(p_); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element from_integer(const mpz_class& v) const;
  /// num * den^{-1}; throws DivisionByZero when den vanishes mod p.
  Element from_ratio(const mpz_class& num, const mpz_class& den) const;

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::optional<Element> try_inv(Element a) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }

  Element random(Rng& rng) const;
  Element random_nonzero(Rng& rng) const;

  /// Symmetric representative in (-p/2, p/2].
  std::string format(Element a) const;
  std::int64_t symmetric(Element a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Element = mpq_class;

  RationalField() = default;

  std::uint32_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec::rationals(); }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const;
  Element from_integer(const mpz_class& v) const { return Element(v); }
  Element from_ratio(const mpz_class& num, const mpz_class& den) const;

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  std::optional<Element> try_inv(const Element& a) const;
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return a * inv(b); }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  /// Small random integers in [-kRandomBound, kRandomBound].
  Element random(Rng& rng) const;
  Element random_nonzero(Rng& rng) const;
  static constexpr int kRandomBound = 50;

  std::string format(const Element& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

}  // namespace syzygy
