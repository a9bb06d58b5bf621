#pragma once

#include <vector>

#include "syzygy/groebner.hpp"

namespace syzygy {

/// I intersected with the subring in the last N-k variables, returned in
/// `target` (which must have N-k variables with matching weights). The
/// generators form a Groebner basis under grevlex of the remaining variables.
template <class F>
Ideal<F> eliminate(const Ideal<F>& ideal, std::size_t k, const RingPtr<F>& target);

/// Same, in a fresh grevlex ring keeping the names and weights of the
/// remaining variables.
template <class F>
Ideal<F> eliminate(const Ideal<F>& ideal, std::size_t k);

template <class F>
Ideal<F> ideal_intersect(const Ideal<F>& i, const Ideal<F>& j);

/// I : f
template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& ideal, const Polynomial<F>& f);

/// I : J, the intersection of I : f over the generators f of J.
template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& ideal, const Ideal<F>& j);

/// I : J^infinity by iterating I <- I : J until it stabilises.
template <class F>
Ideal<F> saturate(const Ideal<F>& ideal, const Ideal<F>& j);

/// The ideal generated by the given variables.
template <class F>
Ideal<F> variables_ideal(const RingPtr<F>& ring, const std::vector<std::size_t>& vars);

/// Irrelevant ideal (all variables).
template <class F>
Ideal<F> irrelevant_ideal(const RingPtr<F>& ring);

/// Restriction of I to the linear subspace where the last k variables equal
/// the given linear forms in the first N-k variables; `forms[j]` holds the
/// N-k coefficients for variable N-k+j. Result lives in `target`.
template <class F>
Ideal<F> restrict_to_subspace(const Ideal<F>& ideal,
                              const std::vector<std::vector<typename F::Element>>& forms,
                              const RingPtr<F>& target);

/// Monomial map / rational parameterization of a projective variety.
///
/// The auxiliary ring carries a multigrading: aux variable i has grading
/// vector `multidegrees[i]`. Every coordinate must be multihomogeneous of one
/// common multidegree; constraints need only be multihomogeneous. `blocks`
/// lists the auxiliary variable groups whose irrelevant ideals are saturated
/// away before elimination.
template <class F>
struct Parameterization {
  RingPtr<F> source;
  std::vector<std::vector<int>> multidegrees;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<Polynomial<F>> coordinates;
  std::vector<Polynomial<F>> constraints;
};

class InconsistentMultidegree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Multidegree of a multihomogeneous polynomial; throws InconsistentMultidegree otherwise.
template <class F>
std::vector<int> multidegree(const Parameterization<F>& param, const Polynomial<F>& f);

/// Saturated ideal of the closure of the image, in `target` (standard grading).
/// When `saturate_blocks` is false the block saturation is skipped (valid
/// when graph ideal plus constraints is already prime).
template <class F>
Ideal<F> implicitize(const Parameterization<F>& param, const RingPtr<F>& target,
                     bool saturate_blocks = true);

extern template struct Parameterization<PrimeField>;
extern template struct Parameterization<RationalField>;

}  // namespace syzygy
