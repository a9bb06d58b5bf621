#include "syzygy/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "syzygy/random.hpp"

namespace syzygy {

namespace {

void enumerate_monomials(std::size_t nvars, std::size_t var, unsigned remaining,
                         std::vector<int>& exps, std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    exps[var] = static_cast<int>(remaining);
    out.emplace_back(std::span<const int>(exps));
    exps[var] = 0;
    return;
  }
  for (int e = static_cast<int>(remaining); e >= 0; --e) {
    exps[var] = e;
    enumerate_monomials(nvars, var + 1, remaining - static_cast<unsigned>(e), exps, out);
  }
  exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) return out;
  std::vector<int> exps(nvars, 0);
  enumerate_monomials(nvars, 0, degree, exps, out);
  return out;
}

template <class F>
Polynomial<F> Polynomial<F>::constant(RingPtr<F> ring, const Element& c) {
  return term(std::move(ring), Monomial(), c);
}

template <class F>
Polynomial<F> Polynomial<F>::variable(RingPtr<F> ring, std::size_t index) {
  if (index >= ring->nvars()) throw std::out_of_range("variable index");
  auto one = ring->field().one();
  return term(std::move(ring), Monomial::variable(index), one);
}

template <class F>
Polynomial<F> Polynomial<F>::term(RingPtr<F> ring, const Monomial& m, const Element& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

template <class F>
Polynomial<F> Polynomial<F>::from_terms(RingPtr<F> ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const auto& R = *p.ring_;
  std::sort(terms.begin(), terms.end(), [&R](const Term& a, const Term& b) {
    return R.compare(a.monomial, b.monomial) > 0;
  });
  const F& k = R.field();
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff = k.add(p.terms_.back().coeff, t.coeff);
    } else {
      if (!p.terms_.empty() && k.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && k.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
  return p;
}

template <class F>
bool Polynomial<F>::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = ring_->weighted_degree(terms_.front().monomial);
  for (const auto& t : terms_)
    if (ring_->weighted_degree(t.monomial) != d) return false;
  return true;
}

template <class F>
std::optional<unsigned> Polynomial<F>::degree() const {
  if (terms_.empty()) return std::nullopt;
  return ring_->weighted_degree(terms_.front().monomial);
}

template <class F>
unsigned Polynomial<F>::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

template <class F>
typename F::Element Polynomial<F>::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return field().zero();
}

template <class F>
Polynomial<F> Polynomial<F>::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, field().neg(t.coeff)});
  return r;
}

template <class F>
Polynomial<F> Polynomial<F>::operator+(const Polynomial& g) const {
  Polynomial r = *this;
  r.sub_mul(field().neg(field().one()), Monomial(), g);
  return r;
}

template <class F>
Polynomial<F> Polynomial<F>::operator-(const Polynomial& g) const {
  Polynomial r = *this;
  r.sub_mul(field().one(), Monomial(), g);
  return r;
}

template <class F>
Polynomial<F> Polynomial<F>::operator*(const Polynomial& g) const {
  check_ring(g);
  if (is_zero() || g.is_zero()) return Polynomial(ring_);
  if (g.size() == 1) return mul_term(g.terms_[0].monomial, g.terms_[0].coeff);
  if (size() == 1) return g.mul_term(terms_[0].monomial, terms_[0].coeff);
  const F& k = field();
  std::unordered_map<Monomial, Element, MonomialHash> acc;
  acc.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : g.terms_) {
      Monomial m = a.monomial * b.monomial;
      auto c = k.mul(a.coeff, b.coeff);
      auto [it, inserted] = acc.try_emplace(m, c);
      if (!inserted) it->second = k.add(it->second, c);
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!k.is_zero(c)) terms.push_back({m, std::move(c)});
  return from_terms(ring_, std::move(terms));
}

template <class F>
Polynomial<F> Polynomial<F>::scale(const Element& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, field().mul(t.coeff, c)});
  return r;
}

template <class F>
Polynomial<F> Polynomial<F>::mul_term(const Monomial& m, const Element& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, field().mul(t.coeff, c)});
  return r;
}

template <class F>
void Polynomial<F>::sub_mul(const Element& c, const Monomial& m, const Polynomial& g) {
  check_ring(g);
  const F& k = field();
  if (g.is_zero() || k.is_zero(c)) return;
  const auto& R = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  const bool trivial = m.is_one();
  while (a != terms_.end() && b != g.terms_.end()) {
    Monomial bm = trivial ? b->monomial : b->monomial * m;
    int cmp = R.compare(a->monomial, bm);
    if (cmp > 0) {
      out.push_back(std::move(*a));
      ++a;
    } else if (cmp < 0) {
      out.push_back({bm, k.neg(k.mul(c, b->coeff))});
      ++b;
    } else {
      auto v = k.sub(a->coeff, k.mul(c, b->coeff));
      if (!k.is_zero(v)) out.push_back({a->monomial, std::move(v)});
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) out.push_back(std::move(*a));
  for (; b != g.terms_.end(); ++b) {
    Monomial bm = trivial ? b->monomial : b->monomial * m;
    out.push_back({bm, k.neg(k.mul(c, b->coeff))});
  }
  terms_ = std::move(out);
}

template <class F>
typename Polynomial<F>::Term Polynomial<F>::pop_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

template <class F>
Polynomial<F> Polynomial<F>::monic() const {
  if (is_zero() || field().is_one(leading_coeff())) return *this;
  return scale(field().inv(leading_coeff()));
}

template <class F>
typename F::Element Polynomial<F>::evaluate(std::span<const Element> point) const {
  if (point.size() != ring_->nvars()) throw std::invalid_argument("point dimension mismatch");
  const F& k = field();
  Element sum = k.zero();
  for (const auto& t : terms_) {
    Element v = t.coeff;
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      for (unsigned e = 0; e < t.monomial[i]; ++e) v = k.mul(v, point[i]);
    sum = k.add(sum, v);
  }
  return sum;
}

template <class F>
Polynomial<F> Polynomial<F>::substitute(std::span<const Polynomial> images,
                                        const RingPtr<F>& target) const {
  if (images.size() != ring_->nvars()) throw std::invalid_argument("substitution arity");
  for (const auto& img : images)
    if (!img.ring_->same_as(*target)) throw RingMismatch();
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, target->field().one()));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      unsigned e = t.monomial[i];
      if (e != 0) prod = prod * power(i, e);
    }
    result = result + prod;
  }
  return result;
}

template <class F>
Polynomial<F> Polynomial<F>::rename(const RingPtr<F>& target,
                                    std::span<const int> var_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> exps(target->nvars(), 0);
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (i >= var_map.size() || var_map[i] < 0)
        throw std::invalid_argument("variable " + ring_->names()[i] + " has no image");
      exps[static_cast<std::size_t>(var_map[i])] += static_cast<int>(t.monomial[i]);
    }
    out.push_back({Monomial(exps), t.coeff});
  }
  return from_terms(target, std::move(out));
}

template <class F>
bool Polynomial<F>::operator==(const Polynomial& g) const {
  if (!ring_->same_as(*g.ring_) || terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == g.terms_[i].monomial)) return false;
    if (!field().equal(terms_[i].coeff, g.terms_[i].coeff)) return false;
  }
  return true;
}

template <class F>
std::string Polynomial<F>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& names = ring_->names();
  for (std::size_t idx = 0; idx < terms_.size(); ++idx) {
    const auto& t = terms_[idx];
    std::string c = field().format(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (negative)
      out += "-";
    else if (idx > 0)
      out += "+";
    std::string mono;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

template <class F>
Polynomial<F> exact_quotient(const Polynomial<F>& f, const Polynomial<F>& g) {
  if (g.is_zero()) throw DivisionByZero();
  const F& k = f.field();
  Polynomial<F> q(f.ring());
  Polynomial<F> r = f;
  auto inv_lc = k.inv(g.leading_coeff());
  while (!r.is_zero()) {
    if (!g.leading_monomial().divides(r.leading_monomial()))
      throw std::domain_error("polynomial division is not exact");
    Monomial m = r.leading_monomial() / g.leading_monomial();
    auto c = k.mul(r.leading_coeff(), inv_lc);
    q.push_trailing({m, c});
    r.sub_mul(c, m, g);
  }
  return q;
}

template <class F>
Polynomial<F> linear_form(const RingPtr<F>& ring, std::span<const typename F::Element> coeffs) {
  std::vector<typename Polynomial<F>::Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    terms.push_back({Monomial::variable(i), coeffs[i]});
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

template <class F>
Polynomial<F> random_form(const RingPtr<F>& ring, unsigned degree, Rng& rng) {
  std::vector<typename Polynomial<F>::Term> terms;
  for (const auto& m : monomials_of_degree(ring->nvars(), degree))
    terms.push_back({m, ring->field().random(rng)});
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

template class Polynomial<PrimeField>;
template class Polynomial<RationalField>;

template Polynomial<PrimeField> exact_quotient(const Polynomial<PrimeField>&,
                                               const Polynomial<PrimeField>&);
template Polynomial<RationalField> exact_quotient(const Polynomial<RationalField>&,
                                                  const Polynomial<RationalField>&);
template Polynomial<PrimeField> linear_form(const RingPtr<PrimeField>&,
                                            std::span<const PrimeField::Element>);
template Polynomial<RationalField> linear_form(const RingPtr<RationalField>&,
                                               std::span<const RationalField::Element>);
template Polynomial<PrimeField> random_form(const RingPtr<PrimeField>&, unsigned, Rng&);
template Polynomial<RationalField> random_form(const RingPtr<RationalField>&, unsigned, Rng&);

}  // namespace syzygy
