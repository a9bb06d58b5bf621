#include "syzygy/betti.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include "syzygy/ideal_ops.hpp"
#include "syzygy/matrix.hpp"
#include "syzygy/random.hpp"

namespace syzygy {

int BettiTable::pd() const {
  int p = 0;
  for (const auto& [key, v] : entries_) p = std::max(p, key.first);
  return p;
}

int BettiTable::reg() const {
  int q = 0;
  for (const auto& [key, v] : entries_) q = std::max(q, key.second);
  return q;
}

std::optional<int> BettiTable::gl_index() const {
  std::optional<int> first;
  for (const auto& [key, v] : entries_)
    if (key.second >= 2 && (!first || key.first < *first)) first = key.first;
  if (!first) return std::nullopt;
  return *first - 1;
}

std::vector<std::int64_t> BettiTable::alternating_sum() const {
  std::vector<std::int64_t> out;
  for (const auto& [key, v] : entries_) {
    std::size_t d = static_cast<std::size_t>(key.first + key.second);
    if (out.size() <= d) out.resize(d + 1, 0);
    out[d] += (key.first % 2 ? -v : v);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string render_betti_diagram(const BettiTable& t) {
  const int pmax = t.pd();
  const int qmax = t.reg();
  std::size_t width = 1;
  for (const auto& [key, v] : t.entries()) width = std::max(width, std::to_string(v).size());
  width = std::max(width, std::to_string(pmax).size());
  std::size_t label = std::to_string(qmax).size() + 1;
  std::ostringstream out;
  out << std::string(label, ' ');
  for (int p = 0; p <= pmax; ++p) out << ' ' << std::setw(static_cast<int>(width)) << p;
  out << '\n';
  for (int q = 0; q <= qmax; ++q) {
    out << std::setw(static_cast<int>(label - 1)) << q << ':';
    for (int p = 0; p <= pmax; ++p) {
      auto v = t.at(p, q);
      out << ' ' << std::setw(static_cast<int>(width)) << (v == 0 ? std::string(".") : std::to_string(v));
    }
    out << '\n';
  }
  return out.str();
}

namespace {

// Index sets of size p in {0..n-1}, lexicographic, as bitmasks.
std::vector<std::uint32_t> subsets(std::size_t n, std::size_t p) {
  std::vector<std::uint32_t> out;
  std::vector<std::size_t> idx(p);
  for (std::size_t i = 0; i < p; ++i) idx[i] = i;
  if (p > n) return out;
  for (;;) {
    std::uint32_t mask = 0;
    for (auto i : idx) mask |= 1u << i;
    out.push_back(mask);
    std::size_t k = p;
    while (k > 0 && idx[k - 1] == n - p + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

template <class F>
class KoszulComplex {
 public:
  using Element = typename F::Element;
  using SparseVec = std::vector<std::pair<std::uint32_t, Element>>;

  explicit KoszulComplex(const GroebnerBasis<F>& g) : g_(g), n_(g.ring()->nvars()) {}

  std::size_t nvars() const { return n_; }

  const std::vector<Monomial>& basis(int q) {
    ensure_basis(q);
    return bases_[static_cast<std::size_t>(q)];
  }

  std::int64_t betti(int p, int q) {
    if (p < 0 || q < 0 || static_cast<std::size_t>(p) > n_) return 0;
    const std::int64_t dim = static_cast<std::int64_t>(wedge(p).size() * basis(q).size());
    if (dim == 0) return 0;
    return dim - static_cast<std::int64_t>(rank(p, q)) - static_cast<std::int64_t>(rank(p + 1, q - 1));
  }

 private:
  void ensure_basis(int q) {
    while (bases_.size() <= static_cast<std::size_t>(q)) {
      unsigned m = static_cast<unsigned>(bases_.size());
      bases_.push_back(graded_piece_basis(g_, m));
      std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
      for (std::size_t i = 0; i < bases_.back().size(); ++i)
        index.emplace(bases_.back()[i], static_cast<std::uint32_t>(i));
      index_.push_back(std::move(index));
    }
  }

  const std::vector<std::uint32_t>& wedge(int p) {
    auto it = wedges_.find(p);
    if (it == wedges_.end()) {
      auto masks = subsets(n_, static_cast<std::size_t>(p));
      std::unordered_map<std::uint32_t, std::uint32_t> pos;
      for (std::size_t i = 0; i < masks.size(); ++i) pos.emplace(masks[i], static_cast<std::uint32_t>(i));
      wedge_index_.emplace(p, std::move(pos));
      it = wedges_.emplace(p, std::move(masks)).first;
    }
    return it->second;
  }

  // x_i * b_j reduced into B_{q+1}, for every variable i and basis element j of B_q.
  const std::vector<std::vector<SparseVec>>& multiplication(int q) {
    auto it = mult_.find(q);
    if (it != mult_.end()) return it->second;
    ensure_basis(q + 1);
    const auto& src = basis(q);
    const auto& dst_index = index_[static_cast<std::size_t>(q + 1)];
    const auto& ring = g_.ring();
    const F& k = ring->field();
    std::vector<std::vector<SparseVec>> table(n_, std::vector<SparseVec>(src.size()));
    for (std::size_t i = 0; i < n_; ++i) {
      Monomial x = Monomial::variable(i);
      for (std::size_t j = 0; j < src.size(); ++j) {
        Monomial m = src[j] * x;
        auto hit = dst_index.find(m);
        if (hit != dst_index.end()) {
          table[i][j].push_back({hit->second, k.one()});
          continue;
        }
        auto nf = g_.normal_form(Polynomial<F>::term(ring, m, k.one()));
        for (const auto& t : nf.terms()) table[i][j].push_back({dst_index.at(t.monomial), t.coeff});
      }
    }
    return mult_.emplace(q, std::move(table)).first->second;
  }

  // rank of  wedge^p (x) B_q -> wedge^{p-1} (x) B_{q+1}
  std::size_t rank(int p, int q) {
    if (p <= 0 || q < 0 || static_cast<std::size_t>(p) > n_) return 0;
    auto key = std::make_pair(p, q);
    if (auto it = ranks_.find(key); it != ranks_.end()) return it->second;
    ensure_basis(q + 1);
    const auto& src = basis(q);
    const auto& dst = basis(q + 1);
    std::size_t r = 0;
    if (!src.empty() && !dst.empty()) {
      const auto& cols = wedge(p);
      wedge(p - 1);
      const auto& row_index = wedge_index_.at(p - 1);
      const auto& mult = multiplication(q);
      const F& k = g_.ring()->field();
      SparseMatrix<F> m(k, wedge(p - 1).size() * dst.size(), cols.size() * src.size());
      for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        std::uint32_t mask = cols[ci];
        for (std::size_t b = 0; b < src.size(); ++b) {
          std::size_t col = ci * src.size() + b;
          int sign = 0;
          for (std::size_t v = 0; v < n_; ++v) {
            if (!(mask & (1u << v))) continue;
            std::size_t rbase = row_index.at(mask & ~(1u << v)) * dst.size();
            for (const auto& [idx, c] : mult[v][b]) m.add(rbase + idx, col, sign % 2 ? k.neg(c) : c);
            ++sign;
          }
        }
      }
      r = m.rank();
    }
    ranks_.emplace(key, r);
    return r;
  }

  const GroebnerBasis<F>& g_;
  std::size_t n_;
  std::vector<std::vector<Monomial>> bases_;
  std::vector<std::unordered_map<Monomial, std::uint32_t, MonomialHash>> index_;
  std::map<int, std::vector<std::uint32_t>> wedges_;
  std::map<int, std::unordered_map<std::uint32_t, std::uint32_t>> wedge_index_;
  std::map<int, std::vector<std::vector<SparseVec>>> mult_;
  std::map<std::pair<int, int>, std::size_t> ranks_;
};

}  // namespace

template <class F>
std::int64_t koszul_betti(const GroebnerBasis<F>& g, int p, int q) {
  if (g.is_unit()) return 0;
  KoszulComplex<F> k(g);
  return k.betti(p, q);
}

template <class F>
RegularReduction<F> reduce_by_regular_sequence(const GroebnerBasis<F>& g, std::uint64_t seed) {
  Rng rng(seed);
  GroebnerBasis<F> cur = g;
  std::size_t length = 0;
  if (g.is_unit()) return {cur, 0};
  auto numerator = hilbert_data(cur).numerator;
  const auto& ring0 = *g.ring();
  while (cur.ring()->nvars() > 1) {
    const std::size_t n = cur.ring()->nvars();
    // Artinian: nothing left to cut
    if (hilbert_data(cur).dimension == 0) break;
    const auto& names = cur.ring()->names();
    auto target = make_ring(ring0.field(), n - 1, MonomialOrder::grevlex(),
                            std::vector<std::string>(names.begin(), names.end() - 1));
    std::vector<typename F::Element> c(n - 1);
    for (auto& x : c) x = ring0.field().random(rng);
    auto next = buchberger(restrict_to_subspace(cur.as_ideal(), {c}, target));
    if (next.is_unit() || hilbert_data(next).numerator != numerator) break;
    cur = std::move(next);
    ++length;
  }
  return {cur, length};
}

template <class F>
BettiTable betti_table(const GroebnerBasis<F>& g, const BettiOptions& options) {
  const std::size_t n0 = g.ring()->nvars();
  if (g.is_unit()) throw EmptyScheme();
  const auto numerator = hilbert_data(g).numerator;
  GroebnerBasis<F> work = g;
  if (options.reduce) work = reduce_by_regular_sequence(g, options.seed).basis;
  const bool artinian = hilbert_data(work).dimension == 0;
  KoszulComplex<F> k(work);
  const int n = static_cast<int>(k.nvars());
  const int pmax = options.p_max ? std::min(*options.p_max, n) : n;

  std::map<std::pair<int, int>, std::int64_t> entries;
  auto partial = [&](int rows) {
    std::map<std::pair<int, int>, std::int64_t> e;
    for (const auto& [key, v] : entries)
      if (key.second < rows) e.emplace(key, v);
    return BettiTable(n0, e).alternating_sum();
  };
  for (int q = 0;; ++q) {
    if (options.q_max && q > *options.q_max) break;
    if (q > options.q_cap) throw RegularityCapExceeded(options.q_cap);
    if (artinian && k.basis(q).empty()) break;
    bool zero_row = true;
    for (int p = 0; p <= pmax; ++p) {
      auto b = k.betti(p, q);
      if (b != 0) {
        entries[{p, q}] = b;
        zero_row = false;
      }
    }
    if (!options.q_max && zero_row && q > 0 && partial(q) == numerator) break;
  }
  return BettiTable(n0, std::move(entries));
}

template std::int64_t koszul_betti(const GroebnerBasis<PrimeField>&, int, int);
template std::int64_t koszul_betti(const GroebnerBasis<RationalField>&, int, int);
template BettiTable betti_table(const GroebnerBasis<PrimeField>&, const BettiOptions&);
template BettiTable betti_table(const GroebnerBasis<RationalField>&, const BettiOptions&);
template RegularReduction<PrimeField> reduce_by_regular_sequence(const GroebnerBasis<PrimeField>&,
                                                                 std::uint64_t);
template RegularReduction<RationalField> reduce_by_regular_sequence(
    const GroebnerBasis<RationalField>&, std::uint64_t);

}  // namespace syzygy
