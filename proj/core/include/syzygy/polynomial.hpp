#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "syzygy/field.hpp"
#include "syzygy/ring.hpp"

namespace syzygy {

/// Sparse polynomial over an exact field. Terms are kept strictly decreasing
/// under the ring's monomial order and never carry a zero coefficient.
template <class F>
class Polynomial {
 public:
  using Element = typename F::Element;
  struct Term {
    Monomial monomial;
    Element coeff;
  };

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<F> ring, const Element& c);
  static Polynomial variable(RingPtr<F> ring, std::size_t index);
  static Polynomial term(RingPtr<F> ring, const Monomial& m, const Element& c);
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> terms);

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Element& leading_coeff() const { return terms_.front().coeff; }

  /// True iff every term has the same weighted degree (zero counts as homogeneous).
  bool is_homogeneous() const;
  /// Weighted degree of the leading term; nullopt for zero.
  std::optional<unsigned> degree() const;
  /// Largest standard total degree among the terms.
  unsigned total_degree() const;
  /// Coefficient of m (zero if absent).
  Element coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial scale(const Element& c) const;
  Polynomial mul_term(const Monomial& m, const Element& c) const;

  /// *this -= c * m * g, in place.
  void sub_mul(const Element& c, const Monomial& m, const Polynomial& g);
  /// Removes and returns the leading term; precondition !is_zero().
  Term pop_leading();
  /// Appends a term strictly smaller than every present term.
  void push_trailing(Term t) { terms_.push_back(std::move(t)); }

  Polynomial monic() const;
  Element evaluate(std::span<const Element> point) const;

  /// Ring homomorphism: variable i is sent to images[i] (all in `target`).
  Polynomial substitute(std::span<const Polynomial> images, const RingPtr<F>& target) const;
  /// Re-express in another ring by renaming variable i to var_map[i].
  /// Throws if a variable mapped to -1 occurs.
  Polynomial rename(const RingPtr<F>& target, std::span<const int> var_map) const;

  bool operator==(const Polynomial& g) const;

  /// Text form using the ring's variable names, e.g. "z0*z2-z1^2".
  std::string to_string() const;

 private:
  void check_ring(const Polynomial& g) const {
    if (!ring_->same_as(*g.ring_)) throw RingMismatch();
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

/// Exact multivariate division; throws std::domain_error if g does not divide f.
template <class F>
Polynomial<F> exact_quotient(const Polynomial<F>& f, const Polynomial<F>& g);

/// Linear form sum_i coeffs[i] * x_i.
template <class F>
Polynomial<F> linear_form(const RingPtr<F>& ring, std::span<const typename F::Element> coeffs);

/// Random homogeneous form of the given (standard) degree in all variables.
template <class F>
Polynomial<F> random_form(const RingPtr<F>& ring, unsigned degree, Rng& rng);

/// All monomials of the given standard degree in the first `nvars` variables,
/// in decreasing lex order of exponent vectors.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

extern template class Polynomial<PrimeField>;
extern template class Polynomial<RationalField>;

}  // namespace syzygy
