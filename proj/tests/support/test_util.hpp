#pragma once

#include <string>
#include <vector>

#include "syzygy/groebner.hpp"
#include "syzygy/io.hpp"

namespace syzygy::test {

inline RingPtr<PrimeField> fp_ring(std::size_t n, MonomialOrder order = MonomialOrder::grevlex()) {
  return make_ring(PrimeField(), n, order);
}

inline RingPtr<RationalField> q_ring(std::size_t n, MonomialOrder order = MonomialOrder::grevlex()) {
  return make_ring(RationalField(), n, order);
}

template <class F>
Polynomial<F> poly(const RingPtr<F>& ring, const std::string& text) {
  return parse_polynomial(ring, text);
}

template <class F>
Ideal<F> ideal(const RingPtr<F>& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial<F>> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(ring, g));
  return Ideal<F>(ring, std::move(ps));
}

}  // namespace syzygy::test
