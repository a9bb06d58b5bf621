#include "syzygy/hilbert.hpp"

#include <algorithm>
#include <map>

#include "syzygy/polynomial.hpp"

namespace syzygy {

namespace {

using Series = std::vector<std::int64_t>;

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

Series add(Series a, const Series& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

Series shift(const Series& a, unsigned k) {
  if (a.empty()) return a;
  Series out(k, 0);
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

Series times_one_minus_zk(const Series& a, unsigned k) {
  return add(a, [&] {
    Series s = shift(a, k);
    for (auto& c : s) c = -c;
    return s;
  }());
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() < b.degree();
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

struct NumeratorSolver {
  std::size_t nvars;
  std::map<std::vector<std::vector<int>>, Series> memo;

  Series solve(std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    for (const auto& g : gens)
      if (g.is_one()) return {};
    // base case: pairwise coprime generators
    std::uint32_t seen = 0;
    bool coprime = true;
    for (const auto& g : gens) {
      if (seen & g.support()) {
        coprime = false;
        break;
      }
      seen |= g.support();
    }
    if (coprime) {
      Series s{1};
      for (const auto& g : gens) s = times_one_minus_zk(s, g.degree());
      return s;
    }
    std::vector<std::vector<int>> key;
    for (const auto& g : gens) key.push_back(g.exponents(nvars));
    std::sort(key.begin(), key.end());
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // pivot on the variable occurring in the most non-linear generators
    std::vector<int> count(nvars, 0);
    for (const auto& g : gens)
      if (g.degree() > 1)
        for (std::size_t i = 0; i < nvars; ++i)
          if (g[i] > 0) ++count[i];
    std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
    Monomial x = Monomial::variable(var);

    std::vector<Monomial> with = gens;
    with.push_back(x);
    std::vector<Monomial> colon;
    for (const auto& g : gens) colon.push_back(g[var] > 0 ? g / x : g);
    Series out = add(solve(std::move(with)), shift(solve(std::move(colon)), 1));
    memo.emplace(std::move(key), out);
    return out;
  }
};

mpz_class binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k || n < 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

std::vector<std::int64_t> monomial_ideal_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  NumeratorSolver solver{nvars, {}};
  return solver.solve(std::move(gens));
}

std::int64_t HilbertData::hilbert_function(std::int64_t m) const {
  if (m < 0) return 0;
  // coefficient of z^m in numerator / (1-z)^N
  mpz_class total = 0;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    std::int64_t r = m - static_cast<std::int64_t>(i);
    if (r < 0) break;
    total += numerator[i] * binomial(r + static_cast<std::int64_t>(nvars) - 1, static_cast<std::int64_t>(nvars) - 1);
  }
  return total.get_si();
}

mpq_class HilbertData::hilbert_polynomial_at(std::int64_t m) const {
  mpq_class v = 0, p = 1;
  for (const auto& c : hilbert_polynomial) {
    v += c * p;
    p *= m;
  }
  return v;
}

template <class F>
HilbertData hilbert_data(const GroebnerBasis<F>& g) {
  const auto& ring = *g.ring();
  if (!ring.standard_grading()) throw std::invalid_argument("Hilbert data needs the standard grading");
  if (g.is_unit()) throw EmptyScheme();
  HilbertData h;
  h.nvars = ring.nvars();
  h.numerator = monomial_ideal_numerator(g.leading_monomials(), h.nvars);

  Series q = h.numerator;
  std::size_t factors = 0;
  for (;;) {
    std::int64_t at_one = 0;
    for (auto c : q) at_one += c;
    if (at_one != 0 || q.empty()) break;
    // synthetic division by (1 - z): q = (1-z) r, r_i = sum_{j<=i} q_j
    Series r(q.size() - 1);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) r[i] = acc += q[i];
    q = r;
    ++factors;
  }
  h.reduced_numerator = q;
  h.dimension = h.nvars - factors;
  h.degree = 0;
  for (auto c : q) h.degree += c;

  // Hilbert polynomial by Newton interpolation of the Hilbert function at
  // m = D, ..., D + dim - 1 where D is past the numerator degree.
  const std::size_t d = h.dimension;
  if (d > 0) {
    const std::int64_t base = static_cast<std::int64_t>(h.numerator.size());
    std::vector<mpq_class> diffs;
    for (std::size_t i = 0; i < d; ++i) diffs.emplace_back(h.hilbert_function(base + static_cast<std::int64_t>(i)));
    std::vector<mpq_class> newton;
    for (std::size_t k = 0; k < d; ++k) {
      newton.push_back(diffs[0]);
      for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
      diffs.pop_back();
    }
    // P(m) = sum_k newton[k] * C(m - base, k), expanded into powers of m
    std::vector<mpq_class> poly(d, mpq_class(0));
    std::vector<mpq_class> basis{mpq_class(1)};  // C(m - base, k) as a polynomial
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t i = 0; i < basis.size(); ++i) poly[i] += newton[k] * basis[i];
      // basis *= (m - base - k) / (k + 1)
      std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
      mpq_class c0(-(base + static_cast<std::int64_t>(k)));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i] += basis[i] * c0;
        next[i + 1] += basis[i];
      }
      for (auto& v : next) v /= static_cast<long>(k + 1);
      basis = std::move(next);
    }
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    h.hilbert_polynomial = std::move(poly);
  }
  return h;
}

template <class F>
std::vector<Monomial> graded_piece_basis(const GroebnerBasis<F>& g, unsigned m) {
  std::vector<Monomial> out;
  if (g.is_unit()) return out;
  for (auto& mono : monomials_of_degree(g.ring()->nvars(), m))
    if (!g.is_leading_term_multiple(mono)) out.push_back(std::move(mono));
  return out;
}

template HilbertData hilbert_data(const GroebnerBasis<PrimeField>&);
template HilbertData hilbert_data(const GroebnerBasis<RationalField>&);
template std::vector<Monomial> graded_piece_basis(const GroebnerBasis<PrimeField>&, unsigned);
template std::vector<Monomial> graded_piece_basis(const GroebnerBasis<RationalField>&, unsigned);

}  // namespace syzygy
