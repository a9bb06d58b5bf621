#include "syzygy/ideal_ops.hpp"

#include <numeric>

namespace syzygy {

namespace {

template <class F>
std::vector<Polynomial<F>> move_all(const std::vector<Polynomial<F>>& polys, const RingPtr<F>& target,
                                    std::size_t shift) {
  std::vector<int> map(polys.empty() ? 0 : polys.front().ring()->nvars());
  std::iota(map.begin(), map.end(), static_cast<int>(shift));
  std::vector<Polynomial<F>> out;
  for (const auto& p : polys) out.push_back(p.rename(target, map));
  return out;
}

template <class F>
Ideal<F> unit_ideal(const RingPtr<F>& ring) {
  return Ideal<F>(ring, {Polynomial<F>::constant(ring, ring->field().one())});
}

}  // namespace

template <class F>
Ideal<F> eliminate(const Ideal<F>& ideal, std::size_t k, const RingPtr<F>& target) {
  const auto& ring = *ideal.ring();
  const std::size_t n = ring.nvars();
  if (k < 1 || k >= n) throw std::out_of_range("elimination count must be in [1, N)");
  if (target->nvars() != n - k) throw std::invalid_argument("elimination target has wrong size");
  RingPtr<F> work = ideal.ring();
  std::vector<Polynomial<F>> gens = ideal.generators();
  if (!(ring.order() == MonomialOrder::elimination(k))) {
    work = make_ring(ring.field(), n, MonomialOrder::elimination(k), ring.names(), ring.weights());
    gens = move_all(gens, work, 0);
  }
  auto G = buchberger(Ideal<F>(work, std::move(gens)));
  const std::uint32_t low = k >= 32 ? ~0u : ((1u << k) - 1);
  std::vector<int> map(n, -1);
  for (std::size_t i = k; i < n; ++i) map[i] = static_cast<int>(i - k);
  std::vector<Polynomial<F>> out;
  for (const auto& g : G.elements())
    if ((g.leading_monomial().support() & low) == 0) out.push_back(g.rename(target, map));
  return Ideal<F>(target, std::move(out));
}

template <class F>
Ideal<F> eliminate(const Ideal<F>& ideal, std::size_t k) {
  const auto& ring = *ideal.ring();
  if (k < 1 || k >= ring.nvars()) throw std::out_of_range("elimination count must be in [1, N)");
  std::vector<std::string> names(ring.names().begin() + static_cast<std::ptrdiff_t>(k), ring.names().end());
  std::vector<unsigned> weights(ring.weights().begin() + static_cast<std::ptrdiff_t>(k), ring.weights().end());
  auto target = make_ring(ring.field(), ring.nvars() - k, MonomialOrder::grevlex(), names, weights);
  return eliminate(ideal, k, target);
}

template <class F>
Ideal<F> ideal_intersect(const Ideal<F>& i, const Ideal<F>& j) {
  const auto& ring = *i.ring();
  if (!ring.same_as(*j.ring())) throw RingMismatch();
  if (i.is_zero() || j.is_zero()) return Ideal<F>(i.ring(), {});
  std::vector<std::string> names{"_t"};
  names.insert(names.end(), ring.names().begin(), ring.names().end());
  std::vector<unsigned> weights{0};
  weights.insert(weights.end(), ring.weights().begin(), ring.weights().end());
  auto work = make_ring(ring.field(), ring.nvars() + 1, MonomialOrder::elimination(1), names, weights);
  auto t = Polynomial<F>::variable(work, 0);
  std::vector<Polynomial<F>> gens;
  for (auto& f : move_all(i.generators(), work, 1)) gens.push_back(t * f);
  for (auto& g : move_all(j.generators(), work, 1)) gens.push_back(g - t * g);
  return eliminate(Ideal<F>(work, std::move(gens)), 1, i.ring());
}

template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& ideal, const Polynomial<F>& f) {
  if (!f.ring()->same_as(*ideal.ring())) throw RingMismatch();
  if (f.is_zero()) return unit_ideal(ideal.ring());
  auto both = ideal_intersect(ideal, Ideal<F>(ideal.ring(), {f}));
  std::vector<Polynomial<F>> out;
  for (const auto& g : both.generators()) out.push_back(exact_quotient(g, f));
  return Ideal<F>(ideal.ring(), std::move(out));
}

template <class F>
Ideal<F> ideal_quotient(const Ideal<F>& ideal, const Ideal<F>& j) {
  if (!j.ring()->same_as(*ideal.ring())) throw RingMismatch();
  if (j.is_zero()) return unit_ideal(ideal.ring());
  std::optional<Ideal<F>> acc;
  for (const auto& f : j.generators()) {
    auto q = ideal_quotient(ideal, f);
    acc = acc ? ideal_intersect(*acc, q) : q;
  }
  return *acc;
}

template <class F>
Ideal<F> saturate(const Ideal<F>& ideal, const Ideal<F>& j) {
  auto G = buchberger(ideal);
  for (;;) {
    if (G.is_unit()) return G.as_ideal();
    auto next = ideal_quotient(G.as_ideal(), j);
    if (ideal_subset(next, G)) return G.as_ideal();
    G = buchberger(next);
  }
}

template <class F>
Ideal<F> variables_ideal(const RingPtr<F>& ring, const std::vector<std::size_t>& vars) {
  std::vector<Polynomial<F>> gens;
  for (auto v : vars) gens.push_back(Polynomial<F>::variable(ring, v));
  return Ideal<F>(ring, std::move(gens));
}

template <class F>
Ideal<F> irrelevant_ideal(const RingPtr<F>& ring) {
  std::vector<std::size_t> all(ring->nvars());
  std::iota(all.begin(), all.end(), 0);
  return variables_ideal(ring, all);
}

template <class F>
Ideal<F> restrict_to_subspace(const Ideal<F>& ideal,
                              const std::vector<std::vector<typename F::Element>>& forms,
                              const RingPtr<F>& target) {
  const std::size_t n = ideal.ring()->nvars();
  const std::size_t k = forms.size();
  if (k >= n || target->nvars() != n - k) throw std::invalid_argument("subspace dimension mismatch");
  std::vector<Polynomial<F>> images;
  for (std::size_t i = 0; i < n - k; ++i) images.push_back(Polynomial<F>::variable(target, i));
  for (const auto& c : forms) {
    if (c.size() != n - k) throw std::invalid_argument("linear form has wrong length");
    images.push_back(linear_form(target, std::span<const typename F::Element>(c)));
  }
  std::vector<Polynomial<F>> out;
  for (const auto& g : ideal.generators()) out.push_back(g.substitute(images, target));
  return Ideal<F>(target, std::move(out));
}

template <class F>
std::vector<int> multidegree(const Parameterization<F>& param, const Polynomial<F>& f) {
  if (f.is_zero()) throw InconsistentMultidegree("zero polynomial has no multidegree");
  const std::size_t k = param.source->nvars();
  if (param.multidegrees.size() != k) throw std::invalid_argument("one grading vector per auxiliary variable");
  const std::size_t c = param.multidegrees.front().size();
  std::optional<std::vector<int>> deg;
  for (const auto& t : f.terms()) {
    std::vector<int> d(c, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < c; ++j) d[j] += static_cast<int>(t.monomial[i]) * param.multidegrees[i][j];
    if (deg && *deg != d) throw InconsistentMultidegree("not multihomogeneous: " + f.to_string());
    deg = d;
  }
  return *deg;
}

template <class F>
Ideal<F> implicitize(const Parameterization<F>& param, const RingPtr<F>& target, bool saturate_blocks) {
  const auto& src = *param.source;
  const std::size_t k = src.nvars();
  const std::size_t n = target->nvars();
  if (param.coordinates.size() != n) throw std::invalid_argument("one coordinate per target variable");
  auto d0 = multidegree(param, param.coordinates.front());
  for (const auto& c : param.coordinates)
    if (multidegree(param, c) != d0)
      throw InconsistentMultidegree("coordinates have different multidegrees: " + c.to_string());
  for (const auto& g : param.constraints) multidegree(param, g);

  std::vector<unsigned> weights;
  for (const auto& v : param.multidegrees) {
    int w = std::accumulate(v.begin(), v.end(), 0);
    for (int x : v)
      if (x < 0) throw InconsistentMultidegree("grading vectors must be nonnegative");
    if (w <= 0) throw InconsistentMultidegree("auxiliary variable of degree zero");
    weights.push_back(static_cast<unsigned>(w));
  }
  const int total = std::accumulate(d0.begin(), d0.end(), 0);
  weights.insert(weights.end(), n, static_cast<unsigned>(total));
  std::vector<std::string> names = src.names();
  names.insert(names.end(), target->names().begin(), target->names().end());
  auto work = make_ring(src.field(), k + n, MonomialOrder::elimination(k), names, weights);

  std::vector<Polynomial<F>> gens;
  auto phi = move_all(param.coordinates, work, 0);
  for (std::size_t i = 0; i < n; ++i) gens.push_back(Polynomial<F>::variable(work, k + i) - phi[i]);
  for (auto& g : move_all(param.constraints, work, 0)) gens.push_back(std::move(g));
  Ideal<F> graph(work, std::move(gens));
  if (saturate_blocks)
    for (const auto& block : param.blocks) graph = saturate(graph, variables_ideal(work, block));
  return eliminate(graph, k, target);
}

#define SYZYGY_INSTANTIATE(F)                                                                     \
  template Ideal<F> eliminate(const Ideal<F>&, std::size_t, const RingPtr<F>&);                 \
  template Ideal<F> eliminate(const Ideal<F>&, std::size_t);                                    \
  template Ideal<F> ideal_intersect(const Ideal<F>&, const Ideal<F>&);                          \
  template Ideal<F> ideal_quotient(const Ideal<F>&, const Polynomial<F>&);                      \
  template Ideal<F> ideal_quotient(const Ideal<F>&, const Ideal<F>&);                           \
  template Ideal<F> saturate(const Ideal<F>&, const Ideal<F>&);                                 \
  template Ideal<F> variables_ideal(const RingPtr<F>&, const std::vector<std::size_t>&);       \
  template Ideal<F> irrelevant_ideal(const RingPtr<F>&);                                        \
  template Ideal<F> restrict_to_subspace(const Ideal<F>&,                                       \
                                         const std::vector<std::vector<F::Element>>&,           \
                                         const RingPtr<F>&);                                    \
  template std::vector<int> multidegree(const Parameterization<F>&, const Polynomial<F>&);     \
  template Ideal<F> implicitize(const Parameterization<F>&, const RingPtr<F>&, bool);          \
  template struct Parameterization<F>;

SYZYGY_INSTANTIATE(PrimeField)
SYZYGY_INSTANTIATE(RationalField)

}  // namespace syzygy
