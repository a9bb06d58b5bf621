#include "syzygy/invariants.hpp"

#include "syzygy/constructions.hpp"
#include "syzygy/ideal_ops.hpp"

namespace syzygy {

DerivedInvariants derived_invariants(const BettiTable& t, const HilbertData& h) {
  if (t.alternating_sum() != h.numerator) throw IncompleteTable();
  DerivedInvariants d;
  d.pd = t.pd();
  d.depth = t.depth();
  d.reg_module = t.reg();
  d.gl_index = t.gl_index();
  d.acm = d.depth == static_cast<int>(h.dimension);
  return d;
}

template <class F>
std::int64_t sectional_genus(const GroebnerBasis<F>& g, std::uint64_t seed) {
  const auto h = hilbert_data(g);
  if (h.dimension < 2) throw std::invalid_argument("sectional genus needs a scheme of dimension >= 1");
  auto genus = [](const HilbertData& c) {
    mpq_class v = 1 - c.hilbert_polynomial_at(0);
    return static_cast<std::int64_t>(v.get_num().get_si());
  };
  const std::size_t k = h.dimension - 2;
  if (k == 0) return genus(h);
  const auto& ring = g.ring();
  const F& field = ring->field();
  Rng rng(seed);
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<std::vector<typename F::Element>> forms(k, std::vector<typename F::Element>(ring->nvars() - k));
    for (auto& f : forms)
      for (auto& x : f) x = field.random(rng);
    auto target = make_ring(field, ring->nvars() - k);
    auto cut = buchberger(saturate(restrict_to_subspace(g.as_ideal(), forms, target), irrelevant_ideal(target)));
    if (cut.is_unit()) continue;
    auto hc = hilbert_data(cut);
    if (hc.dimension == 2 && hc.degree == h.degree) return genus(hc);
  }
  throw DegenerateChoice("curve section kept degenerating", seed);
}

template std::int64_t sectional_genus(const GroebnerBasis<PrimeField>&, std::uint64_t);
template std::int64_t sectional_genus(const GroebnerBasis<RationalField>&, std::uint64_t);

}  // namespace syzygy
