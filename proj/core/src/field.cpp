#include "syzygy/field.hpp"

#include "syzygy/random.hpp"

namespace syzygy {

std::string FieldSpec::to_string() const {
  return kind == Kind::Rationals ? "Q" : std::to_string(prime);
}

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime_number(p))
    throw std::invalid_argument("not a supported prime: " + std::to_string(p));
}

PrimeField::Element PrimeField::from_integer(const mpz_class& v) const {
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::from_ratio(const mpz_class& num,
                                           const mpz_class& den) const {
  return mul(from_integer(num), inv(from_integer(den)));
}

std::optional<PrimeField::Element> PrimeField::try_inv(Element a) const {
  if (a == 0) return std::nullopt;
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Element>(t);
}

PrimeField::Element PrimeField::inv(Element a) const {
  auto r = try_inv(a);
  if (!r) throw DivisionByZero();
  return *r;
}

PrimeField::Element PrimeField::random(Rng& rng) const {
  return static_cast<Element>(rng.uniform(0, p_ - 1));
}

PrimeField::Element PrimeField::random_nonzero(Rng& rng) const {
  return static_cast<Element>(rng.uniform(1, p_ - 1));
}

std::string PrimeField::format(Element a) const { return std::to_string(symmetric(a)); }

RationalField::Element RationalField::from_int(std::int64_t v) const {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return Element(z);
}

RationalField::Element RationalField::from_ratio(const mpz_class& num,
                                                 const mpz_class& den) const {
  if (den == 0) throw DivisionByZero();
  Element r(num, den);
  r.canonicalize();
  return r;
}

std::optional<RationalField::Element> RationalField::try_inv(const Element& a) const {
  if (sgn(a) == 0) return std::nullopt;
  return Element(1) / a;
}

RationalField::Element RationalField::inv(const Element& a) const {
  auto r = try_inv(a);
  if (!r) throw DivisionByZero();
  return *r;
}

RationalField::Element RationalField::random(Rng& rng) const {
  return from_int(rng.uniform(-kRandomBound, kRandomBound));
}

RationalField::Element RationalField::random_nonzero(Rng& rng) const {
  for (;;) {
    auto v = rng.uniform(-kRandomBound, kRandomBound);
    if (v != 0) return from_int(v);
  }
}

}  // namespace syzygy
