#include "syzygy/monomial.hpp"

#include <algorithm>

namespace syzygy {

namespace {

std::uint8_t checked_exponent(long v) {
  if (v < 0) throw std::invalid_argument("negative exponent");
  if (v > 255) throw std::overflow_error("exponent exceeds 255");
  return static_cast<std::uint8_t>(v);
}

// grevlex restricted to variables [lo, hi)
int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVars)
    throw std::invalid_argument("at most 32 variables are supported");
  for (std::size_t i = 0; i < exponents.size(); ++i) e_[i] = checked_exponent(exponents[i]);
  refresh();
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  if (index >= kMaxVars) throw std::out_of_range("variable index");
  Monomial m;
  m.e_[index] = checked_exponent(power);
  m.refresh();
  return m;
}

void Monomial::refresh() {
  unsigned d = 0;
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    d += e_[i];
    if (e_[i] != 0) mask |= (1u << i);
  }
  deg_ = static_cast<std::uint16_t>(d);
  mask_ = mask;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned v = unsigned(e_[i]) + other.e_[i];
    if (v > 255) throw std::overflow_error("exponent exceeds 255");
    r.e_[i] = static_cast<std::uint8_t>(v);
  }
  r.deg_ = static_cast<std::uint16_t>(deg_ + other.deg_);
  r.mask_ = mask_ | other.mask_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    r.e_[i] = static_cast<std::uint8_t>(e_[i] - other.e_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = std::min(e_[i], other.e_[i]);
  r.refresh();
  return r;
}

Monomial Monomial::with_exponent(std::size_t i, unsigned value) const {
  Monomial r = *this;
  r.e_[i] = checked_exponent(value);
  r.refresh();
  return r;
}

std::vector<int> Monomial::exponents(std::size_t nvars) const {
  std::vector<int> out(nvars);
  for (std::size_t i = 0; i < nvars; ++i) out[i] = e_[i];
  return out;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    h ^= e_[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
  switch (kind_) {
    case Kind::Grevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = nvars; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    }
    case Kind::Lex:
      for (std::size_t i = 0; i < nvars; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::BlockElimination: {
      int c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, nvars);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::BlockElimination:
      return "elimination(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace syzygy
