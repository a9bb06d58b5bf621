#include "syzygy/groebner.hpp"

#include <algorithm>
#include <tuple>

namespace syzygy {

template <class F>
Ideal<F>::Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!g.ring()->same_as(*ring_)) throw RingMismatch();
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw NotHomogeneous(g.to_string());
    generators_.push_back(std::move(g));
  }
}

namespace {

template <class F>
class Reducer {
 public:
  explicit Reducer(const Ring<F>& ring) : ring_(ring) {}

  std::size_t add(Polynomial<F> g) {
    lead_.push_back(g.leading_monomial());
    polys_.push_back(std::move(g));
    active_.push_back(1);
    return polys_.size() - 1;
  }
  void deactivate(std::size_t i) { active_[i] = 0; }

  const Polynomial<F>& poly(std::size_t i) const { return polys_[i]; }
  const Monomial& lead(std::size_t i) const { return lead_[i]; }
  bool active(std::size_t i) const { return active_[i] != 0; }
  std::size_t size() const { return polys_.size(); }

  // Shortest active element whose leading monomial divides m, or -1.
  long find(const Monomial& m) const {
    long best = -1;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (!active_[i] || !lead_[i].divides(m)) continue;
      if (best < 0 || polys_[i].size() < polys_[static_cast<std::size_t>(best)].size())
        best = static_cast<long>(i);
    }
    return best;
  }

  // Full reduction; every element is monic.
  Polynomial<F> reduce(Polynomial<F> f) const {
    const F& k = ring_.field();
    Polynomial<F> rest(f.ring());
    while (!f.is_zero()) {
      long r = find(f.leading_monomial());
      if (r < 0) {
        rest.push_trailing(f.pop_leading());
        continue;
      }
      const auto& g = polys_[static_cast<std::size_t>(r)];
      auto c = f.leading_coeff();
      Monomial q = f.leading_monomial() / g.leading_monomial();
      f.sub_mul(c, q, g);
      (void)k;
    }
    return rest;
  }

 private:
  const Ring<F>& ring_;
  std::vector<Polynomial<F>> polys_;
  std::vector<Monomial> lead_;
  std::vector<char> active_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned degree;
};

}  // namespace

template <class F>
GroebnerBasis<F>::GroebnerBasis(Ideal<F> ideal, std::vector<Polynomial<F>> elements)
    : ideal_(std::move(ideal)), elements_(std::move(elements)) {
  for (const auto& e : elements_) leading_.push_back(e.leading_monomial());
}

template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal) {
  const auto& ring = ideal.ring();
  const Ring<F>& R = *ring;
  Reducer<F> basis(R);
  std::vector<Pair> pairs;

  std::vector<std::size_t> order(ideal.generators().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return *ideal.generators()[a].degree() < *ideal.generators()[b].degree();
  });
  std::size_t next_gen = 0;

  auto insert = [&](Polynomial<F> h) {
    std::size_t t = basis.add(std::move(h));
    const Monomial& lt = basis.lead(t);
    // old pairs made redundant by the new leading monomial
    std::erase_if(pairs, [&](const Pair& p) {
      if (!lt.divides(p.lcm)) return false;
      return basis.lead(p.i).lcm(lt) != p.lcm && basis.lead(p.j).lcm(lt) != p.lcm;
    });
    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < t; ++i) {
      if (!basis.active(i)) continue;
      cands.push_back({i, basis.lead(i).lcm(lt), basis.lead(i).coprime(lt)});
    }
    for (auto& a : cands) {
      for (const auto& b : cands) {
        if (&a != &b && b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
          a.keep = false;
          break;
        }
      }
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!cands[a].keep) continue;
      bool coprime = cands[a].coprime;
      for (std::size_t b = a + 1; b < cands.size(); ++b) {
        if (cands[b].keep && cands[b].lcm == cands[a].lcm) {
          coprime = coprime || cands[b].coprime;
          cands[b].keep = false;
        }
      }
      if (coprime) cands[a].keep = false;
    }
    for (const auto& c : cands)
      if (c.keep) pairs.push_back({c.i, t, c.lcm, R.weighted_degree(c.lcm)});
    for (std::size_t i = 0; i < t; ++i)
      if (basis.active(i) && lt.divides(basis.lead(i))) basis.deactivate(i);
  };

  const F& k = R.field();
  while (next_gen < order.size() || !pairs.empty()) {
    std::size_t best = pairs.size();
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (best == pairs.size() ||
          std::tie(pairs[p].degree, pairs[p].j, pairs[p].i) <
              std::tie(pairs[best].degree, pairs[best].j, pairs[best].i))
        best = p;
    }
    Polynomial<F> h(ring);
    if (next_gen < order.size() &&
        (best == pairs.size() ||
         *ideal.generators()[order[next_gen]].degree() <= pairs[best].degree)) {
      h = ideal.generators()[order[next_gen++]];
    } else {
      Pair p = pairs[best];
      pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
      const auto& f = basis.poly(p.i);
      const auto& g = basis.poly(p.j);
      h = f.mul_term(p.lcm / f.leading_monomial(), k.one());
      h.sub_mul(k.one(), p.lcm / g.leading_monomial(), g);
    }
    h = basis.reduce(std::move(h));
    if (h.is_zero()) continue;
    insert(h.monic());
  }

  std::vector<Polynomial<F>> result;
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis.active(i)) live.push_back(i);
  // interreduce tails: reduce each element by the others
  for (std::size_t idx : live) {
    Reducer<F> others(R);
    for (std::size_t j : live)
      if (j != idx) others.add(basis.poly(j));
    auto g = basis.poly(idx);
    auto lead = g.pop_leading();
    Polynomial<F> tail = others.reduce(std::move(g));
    Polynomial<F> full(ring);
    full.push_trailing(std::move(lead));
    for (const auto& t : tail.terms()) full.push_trailing(t);
    result.push_back(std::move(full));
  }
  std::sort(result.begin(), result.end(), [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    return R.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return GroebnerBasis<F>(ideal, std::move(result));
}

template <class F>
Polynomial<F> GroebnerBasis<F>::normal_form(const Polynomial<F>& f) const {
  if (!f.ring()->same_as(*ring())) throw RingMismatch();
  Polynomial<F> work = f;
  Polynomial<F> rest(f.ring());
  while (!work.is_zero()) {
    const Monomial& m = work.leading_monomial();
    long best = -1;
    for (std::size_t i = 0; i < leading_.size(); ++i) {
      if (!leading_[i].divides(m)) continue;
      if (best < 0 || elements_[i].size() < elements_[static_cast<std::size_t>(best)].size())
        best = static_cast<long>(i);
    }
    if (best < 0) {
      rest.push_trailing(work.pop_leading());
      continue;
    }
    const auto& g = elements_[static_cast<std::size_t>(best)];
    auto c = work.leading_coeff();
    work.sub_mul(c, m / g.leading_monomial(), g);
  }
  return rest;
}

template <class F>
bool GroebnerBasis<F>::is_leading_term_multiple(const Monomial& m) const {
  for (const auto& l : leading_)
    if (l.divides(m)) return true;
  return false;
}

template <class F>
bool ideal_subset(const Ideal<F>& i, const GroebnerBasis<F>& j) {
  if (!i.ring()->same_as(*j.ring())) throw RingMismatch();
  for (const auto& g : i.generators())
    if (!j.contains(g)) return false;
  return true;
}

template <class F>
bool ideals_equal(const Ideal<F>& i, const Ideal<F>& j) {
  if (!i.ring()->same_as(*j.ring())) throw RingMismatch();
  auto a = buchberger(i);
  auto b = buchberger(j);
  if (a.elements().size() != b.elements().size()) return false;
  for (std::size_t k = 0; k < a.elements().size(); ++k)
    if (!(a.elements()[k] == b.elements()[k])) return false;
  return true;
}

template class Ideal<PrimeField>;
template class Ideal<RationalField>;
template class GroebnerBasis<PrimeField>;
template class GroebnerBasis<RationalField>;
template GroebnerBasis<PrimeField> buchberger(const Ideal<PrimeField>&);
template GroebnerBasis<RationalField> buchberger(const Ideal<RationalField>&);
template bool ideal_subset(const Ideal<PrimeField>&, const GroebnerBasis<PrimeField>&);
template bool ideal_subset(const Ideal<RationalField>&, const GroebnerBasis<RationalField>&);
template bool ideals_equal(const Ideal<PrimeField>&, const Ideal<PrimeField>&);
template bool ideals_equal(const Ideal<RationalField>&, const Ideal<RationalField>&);

}  // namespace syzygy
