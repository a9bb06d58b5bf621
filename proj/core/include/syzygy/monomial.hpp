#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace syzygy {

inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector with a cached total degree and support bitmask.
/// Exponents are capped at 255; exceeding it throws std::overflow_error.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);
  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned degree() const { return deg_; }
  std::uint32_t support() const { return mask_; }
  bool is_one() const { return deg_ == 0; }

  bool divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0 || deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; precondition other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  /// Copy with exponent i replaced.
  Monomial with_exponent(std::size_t i, unsigned value) const;

  std::vector<int> exponents(std::size_t nvars) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.mask_ == b.mask_ && a.deg_ == b.deg_ && a.e_ == b.e_;
  }

  std::size_t hash() const;

 private:
  void refresh();

  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint16_t deg_ = 0;
  std::uint32_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Monomial orders. BlockElimination(k) compares the first k variables by
/// grevlex first (so any monomial involving an eliminated variable beats all
/// monomials that do not), then the remaining variables by grevlex.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, BlockElimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder elimination(std::size_t k) {
    return MonomialOrder(Kind::BlockElimination, k);
  }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  Kind kind_;
  std::size_t block_;
};

}  // namespace syzygy
