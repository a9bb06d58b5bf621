#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "syzygy/polynomial.hpp"

namespace syzygy {

class NotHomogeneous : public std::invalid_argument {
 public:
  explicit NotHomogeneous(const std::string& what)
      : std::invalid_argument("generator is not homogeneous: " + what) {}
};

/// Homogeneous ideal given by generators. Zero generators are dropped;
/// homogeneity is with respect to the ring's variable weights.
template <class F>
class Ideal {
 public:
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators);

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> generators_;
};

template <class F>
class GroebnerBasis;

/// Reduced Groebner basis under the ring's monomial order.
///
/// Buchberger's algorithm with the normal selection strategy (pairs taken by
/// ascending weighted degree of their lcm, ties broken by index) and the
/// Gebauer-Moeller criteria. Input generators are fed in the same degree
/// order, so the result is deterministic for a given generator list.
template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal);

template <class F>
class GroebnerBasis {
 public:
  const Ideal<F>& ideal() const { return ideal_; }
  const RingPtr<F>& ring() const { return ideal_.ring(); }
  /// Monic elements sorted by increasing leading monomial.
  const std::vector<Polynomial<F>>& elements() const { return elements_; }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  bool is_unit() const { return elements_.size() == 1 && leading_[0].is_one(); }

  /// Fully reduced remainder: no term divisible by a leading monomial.
  Polynomial<F> normal_form(const Polynomial<F>& f) const;
  bool contains(const Polynomial<F>& f) const { return normal_form(f).is_zero(); }
  /// True iff some leading monomial divides m.
  bool is_leading_term_multiple(const Monomial& m) const;

  /// The basis as an ideal (useful as generators for further work).
  Ideal<F> as_ideal() const { return Ideal<F>(ring(), elements_); }

 private:
  GroebnerBasis(Ideal<F> ideal, std::vector<Polynomial<F>> elements);
  friend GroebnerBasis<F> buchberger<F>(const Ideal<F>&);

  Ideal<F> ideal_;
  std::vector<Polynomial<F>> elements_;
  std::vector<Monomial> leading_;
};

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& g) {
  return g.normal_form(f);
}

template <class F>
bool ideal_contains(const GroebnerBasis<F>& g, const Polynomial<F>& f) {
  if (!f.ring()->same_as(*g.ring())) throw RingMismatch();
  return g.contains(f);
}

/// I is contained in J (every generator of I reduces to zero modulo J).
/// Note the direction: I_Y contained in I_X means Y contains X.
template <class F>
bool ideal_subset(const Ideal<F>& i, const GroebnerBasis<F>& j);
template <class F>
bool ideal_subset(const Ideal<F>& i, const Ideal<F>& j) {
  return ideal_subset(i, buchberger(j));
}

/// Same ideal (compares reduced Groebner bases).
template <class F>
bool ideals_equal(const Ideal<F>& i, const Ideal<F>& j);

extern template class Ideal<PrimeField>;
extern template class Ideal<RationalField>;
extern template class GroebnerBasis<PrimeField>;
extern template class GroebnerBasis<RationalField>;

}  // namespace syzygy
