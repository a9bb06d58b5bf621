#include "syzygy/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "syzygy/hilbert.hpp"
#include "syzygy/matrix.hpp"

namespace syzygy {

ScrollSpec::ScrollSpec(std::vector<unsigned> b) : blocks(std::move(b)) {
  std::sort(blocks.begin(), blocks.end());
  if (blocks.empty() || blocks.back() == 0)
    throw UnsupportedParameter("scroll needs at least one positive block");
  if (ncoords() > kMaxVars) throw UnsupportedParameter("scroll has too many coordinates");
}

unsigned ScrollSpec::degree() const { return std::accumulate(blocks.begin(), blocks.end(), 0u); }

std::size_t ScrollSpec::ncoords() const { return degree() + blocks.size(); }

std::string ScrollSpec::to_string() const {
  std::ostringstream out;
  out << "S(";
  for (std::size_t i = 0; i < blocks.size(); ++i) out << (i ? "," : "") << blocks[i];
  out << ")";
  return out.str();
}

std::vector<std::vector<std::size_t>> ScrollSpec::coordinate_blocks() const {
  std::size_t first = 0;
  while (blocks[first] == 0) ++first;
  std::vector<std::size_t> layout{first};
  for (std::size_t i = 0; i < first; ++i) layout.push_back(i);
  for (std::size_t i = first + 1; i < blocks.size(); ++i) layout.push_back(i);
  std::vector<std::vector<std::size_t>> out(blocks.size());
  std::size_t next = 0;
  for (auto b : layout)
    for (unsigned j = 0; j <= blocks[b]; ++j) out[b].push_back(next++);
  return out;
}

std::vector<std::size_t> ScrollSpec::vertex_coordinates() const {
  std::vector<std::size_t> out;
  auto cb = coordinate_blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i] == 0) out.push_back(cb[i].front());
  return out;
}

std::string DivisorClass::to_string() const {
  if (kind == Kind::R) return std::to_string(m) + "R";
  std::ostringstream out;
  if (alpha != 1) out << alpha;
  out << "H" << (beta < 0 ? "" : "+") << beta << "F";
  return out.str();
}

namespace {

template <class F>
using Elem = typename F::Element;

template <class F>
Elem<F> power(const F& k, Elem<F> x, unsigned e) {
  Elem<F> r = k.one();
  for (unsigned i = 0; i < e; ++i) r = k.mul(r, x);
  return r;
}

template <class F>
Polynomial<F> monomial(const RingPtr<F>& ring, std::vector<int> exps) {
  exps.resize(ring->nvars(), 0);
  return Polynomial<F>::term(ring, Monomial(std::span<const int>(exps)), ring->field().one());
}

template <class F>
bool all_zero(const F& k, const Point<F>& p) {
  return std::all_of(p.begin(), p.end(), [&](const auto& x) { return k.is_zero(x); });
}

// Roots of a univariate polynomial (coefficients ascending) by exhaustive
// search. Only prime fields; returns nothing over Q.
template <class F>
std::vector<Elem<F>> roots(const F& k, const std::vector<Elem<F>>& c) {
  std::vector<Elem<F>> out;
  if constexpr (std::is_same_v<F, PrimeField>) {
    for (std::uint32_t x = 0; x < k.characteristic(); ++x) {
      Elem<F> acc = k.zero();
      for (std::size_t i = c.size(); i-- > 0;) acc = k.add(k.mul(acc, x), c[i]);
      if (k.is_zero(acc)) out.push_back(x);
    }
  }
  return out;
}

// Point on the image of a parameterization with at most one constraint:
// random values for the auxiliary variables, the last variable of the
// constraint solved for.
template <class F>
std::optional<Point<F>> sample_parameterization(const Parameterization<F>& param, Rng& rng) {
  const F& k = param.source->field();
  const std::size_t n = param.source->nvars();
  Point<F> aux(n);
  for (auto& x : aux) x = k.random_nonzero(rng);
  if (param.constraints.size() > 1) return std::nullopt;
  if (!param.constraints.empty()) {
    const auto& g = param.constraints.front();
    std::size_t v = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& t : g.terms())
        if (t.monomial[i] > 0) v = std::max(v, i);
    std::vector<Elem<F>> coeffs;
    for (const auto& t : g.terms()) {
      unsigned d = t.monomial[v];
      if (coeffs.size() <= d) coeffs.resize(d + 1, k.zero());
      Elem<F> c = t.coeff;
      for (std::size_t i = 0; i < n; ++i)
        if (i != v) c = k.mul(c, power(k, aux[i], t.monomial[i]));
      coeffs[d] = k.add(coeffs[d], c);
    }
    auto r = roots(k, coeffs);
    std::erase_if(r, [&](const auto& x) { return k.is_zero(x); });
    if (r.empty()) return std::nullopt;
    aux[v] = r[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(r.size()) - 1))];
  }
  Point<F> out;
  for (const auto& c : param.coordinates) out.push_back(c.evaluate(std::span<const Elem<F>>(aux)));
  if (all_zero(k, out)) return std::nullopt;
  return out;
}

template <class F>
Construction<F> from_parameterization(std::string name, Parameterization<F> param, std::size_t ncoords,
                                      bool saturate_blocks = true) {
  auto target = make_ring(param.source->field(), ncoords);
  auto ideal = buchberger(implicitize(param, target, saturate_blocks)).as_ideal();
  auto p = std::make_shared<Parameterization<F>>(std::move(param));
  Construction<F> c{std::move(name), std::move(ideal), 0, {}, {}};
  c.sampler = [p](Rng& rng) { return sample_parameterization(*p, rng); };
  return c;
}

template <class F>
HilbertData hilbert_of(const Ideal<F>& i) {
  return hilbert_data(buchberger(i));
}

template <class F>
Polynomial<F> partial(const Polynomial<F>& f, std::size_t v) {
  std::vector<typename Polynomial<F>::Term> terms;
  const F& k = f.field();
  for (const auto& t : f.terms()) {
    unsigned e = t.monomial[v];
    if (e == 0) continue;
    terms.push_back({t.monomial.with_exponent(v, e - 1), k.mul(t.coeff, k.from_int(e))});
  }
  return Polynomial<F>::from_terms(f.ring(), std::move(terms));
}

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  if (p > n) return out;
  std::vector<std::size_t> idx(p);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    out.push_back(idx);
    std::size_t k = p;
    while (k > 0 && idx[k - 1] == n - p + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

template <class F>
bool lies_on(const Ideal<F>& ideal, const Point<F>& point) {
  const F& k = ideal.ring()->field();
  for (const auto& g : ideal.generators())
    if (!k.is_zero(g.evaluate(std::span<const Elem<F>>(point)))) return false;
  return true;
}

template <class F>
std::size_t jacobian_rank(const Ideal<F>& ideal, const Point<F>& point) {
  const auto& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  const auto& gens = ideal.generators();
  if (gens.empty()) return 0;
  Matrix<F> j(ring->field(), gens.size(), n);
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t v = 0; v < n; ++v) j.at(r, v) = partial(gens[r], v).evaluate(std::span<const Elem<F>>(point));
  return rank(j);
}

template <class F>
std::optional<Point<F>> smooth_point(const Construction<F>& c, Rng& rng, int attempts) {
  if (!c.sampler) return std::nullopt;
  const auto h = hilbert_of(c.ideal);
  for (int i = 0; i < attempts; ++i) {
    auto p = c.sampler(rng);
    if (!p || !lies_on(c.ideal, *p)) continue;
    if (jacobian_rank(c.ideal, *p) == h.codimension()) return p;
  }
  return std::nullopt;
}

template <class F>
bool in_general_position(const F& field, const std::vector<Point<F>>& points) {
  if (points.empty()) return true;
  const std::size_t n = points.front().size();
  const std::size_t size = std::min(n, points.size());
  for (const auto& subset : index_subsets(points.size(), size)) {
    Matrix<F> m(field, size, n);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) = points[subset[r]][c];
    if (rank(m) != size) return false;
  }
  return true;
}

template <class F>
Ideal<F> points_ideal(const RingPtr<F>& ring, const std::vector<Point<F>>& points) {
  const F& k = ring->field();
  const std::size_t n = ring->nvars();
  std::vector<Polynomial<F>> gens;
  std::optional<unsigned> full;
  for (unsigned m = 1;; ++m) {
    if (m > points.size() + 1) throw std::invalid_argument("points are not distinct");
    auto monos = monomials_of_degree(n, m);
    Matrix<F> ev(k, points.size(), monos.size());
    for (std::size_t r = 0; r < points.size(); ++r)
      for (std::size_t c = 0; c < monos.size(); ++c) {
        Elem<F> v = k.one();
        for (std::size_t i = 0; i < n; ++i) v = k.mul(v, power(k, points[r][i], monos[c][i]));
        ev.at(r, c) = v;
      }
    auto rk = rank_and_kernel(ev);
    for (const auto& vec : rk.kernel) {
      std::vector<typename Polynomial<F>::Term> terms;
      for (std::size_t c = 0; c < monos.size(); ++c)
        if (!k.is_zero(vec[c])) terms.push_back({monos[c], vec[c]});
      gens.push_back(Polynomial<F>::from_terms(ring, std::move(terms)));
    }
    if (full) break;
    if (rk.rank == points.size()) full = m;
  }
  return buchberger(Ideal<F>(ring, std::move(gens))).as_ideal();
}

template <class F>
Construction<F> scroll(const F& field, const ScrollSpec& spec) {
  const std::size_t n = spec.ncoords();
  auto ring = make_ring(field, n);
  const auto cb = spec.coordinate_blocks();
  std::size_t first = 0;
  while (spec.blocks[first] == 0) ++first;
  std::vector<std::size_t> order{first};
  for (std::size_t i = first + 1; i < spec.blocks.size(); ++i) order.push_back(i);
  std::vector<std::pair<std::size_t, std::size_t>> columns;
  for (auto b : order)
    for (std::size_t j = 0; j + 1 < cb[b].size(); ++j) columns.push_back({cb[b][j], cb[b][j + 1]});
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < columns.size(); ++i)
    for (std::size_t j = i + 1; j < columns.size(); ++j) {
      auto a = Polynomial<F>::variable(ring, columns[i].first) * Polynomial<F>::variable(ring, columns[j].second);
      auto b = Polynomial<F>::variable(ring, columns[j].first) * Polynomial<F>::variable(ring, columns[i].second);
      auto minor = a - b;
      if (minor.is_zero()) continue;
      if (std::none_of(gens.begin(), gens.end(), [&](const auto& g) { return g == minor || g == -minor; }))
        gens.push_back(std::move(minor));
    }
  Construction<F> c{spec.to_string(), Ideal<F>(ring, std::move(gens)), 0, {{"construction", "scroll"},
                                                                            {"scroll", spec.to_string()}}, {}};
  c.sampler = [spec, cb, field](Rng& rng) -> std::optional<Point<F>> {
    Point<F> p(spec.ncoords(), field.zero());
    auto s = field.random_nonzero(rng);
    auto t = field.random_nonzero(rng);
    for (std::size_t b = 0; b < spec.blocks.size(); ++b) {
      auto u = field.random_nonzero(rng);
      const unsigned a = spec.blocks[b];
      for (unsigned j = 0; j <= a; ++j)
        p[cb[b][j]] = field.mul(u, field.mul(power(field, s, a - j), power(field, t, j)));
    }
    return p;
  };
  return c;
}

template <class F>
Construction<F> rational_normal_curve(const F& field, unsigned d) {
  if (d < 2) throw UnsupportedParameter("rational normal curve needs degree >= 2");
  auto c = scroll(field, ScrollSpec({d}));
  c.name = "rnc(" + std::to_string(d) + ")";
  c.metadata = {{"construction", "rnc"}, {"d", std::to_string(d)}};
  return c;
}

template <class F>
Construction<F> almost_minimal_curve(const F& field, unsigned e) {
  if (e < 3) throw UnsupportedParameter("e must be >= 3");
  auto src = make_ring(field, 2, MonomialOrder::grevlex(), {"s", "t"});
  const int d = static_cast<int>(e) + 2;
  Parameterization<F> p{src, {{1}, {1}}, {{0, 1}}, {}, {}};
  for (int i = 0; i <= d; ++i)
    if (i != 2) p.coordinates.push_back(monomial(src, {d - i, i}));
  auto c = from_parameterization("monomial-4.2", std::move(p), e + 2);
  c.metadata = {{"construction", "monomial-4.2"}, {"e", std::to_string(e)}};
  return c;
}

template <class F>
Construction<F> almost_minimal_surface(const F& field, unsigned e) {
  if (e < 3) throw UnsupportedParameter("e must be >= 3");
  auto src = make_ring(field, 4, MonomialOrder::grevlex(), {"s", "t", "x", "y"});
  const int ei = static_cast<int>(e);
  Parameterization<F> p{src, {{1, 0}, {1, 0}, {ei, 1}, {0, 1}}, {{0, 1}, {2, 3}}, {}, {}};
  p.coordinates.push_back(monomial(src, {1, 0, 1, 0}));
  p.coordinates.push_back(monomial(src, {0, 1, 1, 0}));
  for (int i = 0; i <= ei + 1; ++i)
    if (i != 1) p.coordinates.push_back(monomial(src, {ei + 1 - i, i, 0, 1}));
  auto c = from_parameterization("ex-4.3", std::move(p), e + 3);
  c.metadata = {{"construction", "ex-4.3"}, {"e", std::to_string(e)}};
  return c;
}

template <class F>
Construction<F> almost_minimal_threefold(const F& field, unsigned e) {
  if (e < 3) throw UnsupportedParameter("e must be >= 3");
  auto src = make_ring(field, 5, MonomialOrder::grevlex(), {"s", "t", "x", "y", "z"});
  const int ei = static_cast<int>(e);
  Parameterization<F> p{src, {{1, 0}, {1, 0}, {ei - 2, 1}, {ei - 3, 1}, {0, 1}}, {{0, 1}, {2, 3, 4}}, {}, {}};
  p.coordinates.push_back(monomial(src, {1, 0, 1, 0, 0}));
  p.coordinates.push_back(monomial(src, {0, 1, 1, 0, 0}));
  p.coordinates.push_back(monomial(src, {2, 0, 0, 1, 0}));
  p.coordinates.push_back(monomial(src, {0, 2, 0, 1, 0}));
  for (int i = 0; i <= ei - 1; ++i) p.coordinates.push_back(monomial(src, {ei - 1 - i, i, 0, 0, 1}));
  auto c = from_parameterization("ex-4.4", std::move(p), e + 4);
  c.metadata = {{"construction", "ex-4.4"}, {"e", std::to_string(e)}};
  return c;
}

template <class F>
Construction<F> almost_minimal_fourfold(const F& field, unsigned e) {
  if (e < 3) throw UnsupportedParameter("e must be >= 3");
  auto src = make_ring(field, 6, MonomialOrder::grevlex(), {"s", "t", "x", "y", "z", "w"});
  const int ei = static_cast<int>(e);
  Parameterization<F> p{src,
                        {{1, 0}, {1, 0}, {ei - 2, 1}, {ei - 2, 1}, {ei - 2, 1}, {0, 1}},
                        {{0, 1}, {2, 3, 4, 5}},
                        {},
                        {}};
  p.coordinates.push_back(monomial(src, {1, 0, 1, 0, 0, 0}));
  p.coordinates.push_back(monomial(src, {0, 1, 1, 0, 0, 0}));
  p.coordinates.push_back(monomial(src, {1, 0, 0, 1, 0, 0}) - monomial(src, {0, 1, 0, 0, 1, 0}));
  p.coordinates.push_back(monomial(src, {0, 1, 0, 1, 0, 0}));
  p.coordinates.push_back(monomial(src, {1, 0, 0, 0, 1, 0}));
  for (int i = 0; i <= ei - 1; ++i) p.coordinates.push_back(monomial(src, {ei - 1 - i, i, 0, 0, 0, 1}));
  auto c = from_parameterization("ex-4.5", std::move(p), e + 5);
  c.metadata = {{"construction", "ex-4.5"}, {"e", std::to_string(e)}};
  return c;
}

template <class F>
Construction<F> elliptic_normal_curve(const F& field, unsigned e) {
  if (e < 4 || (e + 2) % 3 != 0)
    throw UnsupportedParameter("elliptic normal curve needs e = 1 mod 3, got e = " + std::to_string(e));
  if (field.characteristic() == 3) throw UnsupportedParameter("Fermat cubic is singular in characteristic 3");
  const unsigned m = (e + 2) / 3;
  auto src = make_ring(field, 3, MonomialOrder::grevlex(), {"x", "y", "w"});
  Parameterization<F> p{src, {{1}, {1}, {1}}, {{0, 1, 2}}, {}, {}};
  p.constraints.push_back(monomial(src, {3, 0, 0}) + monomial(src, {0, 3, 0}) + monomial(src, {0, 0, 3}));
  for (const auto& mono : monomials_of_degree(3, m))
    if (mono[0] < 3) p.coordinates.push_back(Polynomial<F>::term(src, mono, field.one()));
  auto c = from_parameterization("elliptic", std::move(p), e + 2);
  c.metadata = {{"construction", "elliptic"}, {"e", std::to_string(e)}};
  return c;
}

namespace {

template <class F>
Construction<F> point_set(const F& field, unsigned e, unsigned d, std::uint64_t seed, bool on_rnc) {
  if (e < 1 || d < e + 1) throw UnsupportedParameter("need d >= e + 1 points spanning P^e");
  Rng rng(seed);
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<Point<F>> pts;
    for (unsigned i = 0; i < d; ++i) {
      Point<F> p(e + 1);
      if (on_rnc) {
        auto t = field.random(rng);
        p[0] = field.one();
        for (unsigned j = 1; j <= e; ++j) p[j] = field.mul(p[j - 1], t);
      } else {
        for (auto& x : p) x = field.random(rng);
      }
      pts.push_back(std::move(p));
    }
    if (!in_general_position(field, pts)) continue;
    auto ring = make_ring(field, e + 1);
    Ideal<F> ideal = [&]() -> Ideal<F> {
      try {
        return points_ideal(ring, pts);
      } catch (const std::invalid_argument&) {
        return Ideal<F>(ring, {Polynomial<F>::constant(ring, field.one())});
      }
    }();
    auto h = hilbert_of(ideal);
    if (h.dimension != 1 || h.degree != static_cast<std::int64_t>(d)) continue;
    std::string name = on_rnc ? "points-on-rnc" : "points";
    Construction<F> c{name, std::move(ideal), seed,
                      {{"construction", name}, {"e", std::to_string(e)}, {"d", std::to_string(d)}}, {}};
    c.sampler = [pts](Rng& r) -> std::optional<Point<F>> {
      return pts[static_cast<std::size_t>(r.uniform(0, static_cast<std::int64_t>(pts.size()) - 1))];
    };
    return c;
  }
  throw DegenerateChoice("no point configuration in general position", seed);
}

}  // namespace

template <class F>
Construction<F> general_points(const F& field, unsigned e, unsigned d, std::uint64_t seed) {
  return point_set(field, e, d, seed, false);
}

template <class F>
Construction<F> points_on_rnc(const F& field, unsigned e, unsigned d, std::uint64_t seed) {
  return point_set(field, e, d, seed, true);
}

template <class F>
Construction<F> curve_on_scroll(const F& field, unsigned a, unsigned b, unsigned alpha, int k,
                                std::uint64_t seed) {
  if (a > b) std::swap(a, b);
  if (a < 1 || alpha < 1) throw UnsupportedParameter("curve on scroll needs a >= 1 and alpha >= 1");
  const long expected = static_cast<long>(alpha) * static_cast<long>(a + b) + k;
  bool effective = false;
  for (unsigned j = 0; j <= alpha; ++j)
    effective = effective || static_cast<long>(alpha - j) * a + static_cast<long>(j) * b + k >= 0;
  if (!effective || expected < 1) throw UnsupportedParameter("divisor class is empty");
  ScrollSpec spec({a, b});
  const auto cb = spec.coordinate_blocks();
  auto src = make_ring(field, 4, MonomialOrder::grevlex(), {"s", "t", "u", "v"});
  auto st = make_ring(field, 2, MonomialOrder::grevlex(), {"s", "t"});
  const std::vector<int> st_map{0, 1};
  Rng rng(seed);
  for (int attempt = 0; attempt < 5; ++attempt) {
    Parameterization<F> p{src, {{1, 0}, {1, 0}, {static_cast<int>(b - a), 1}, {0, 1}}, {{0, 1}, {2, 3}}, {}, {}};
    std::vector<Polynomial<F>> coords(spec.ncoords(), Polynomial<F>(src));
    const int ai = static_cast<int>(a), bi = static_cast<int>(b);
    for (int i = 0; i <= ai; ++i) coords[cb[0][static_cast<std::size_t>(i)]] = monomial(src, {ai - i, i, 1, 0});
    for (int j = 0; j <= bi; ++j) coords[cb[1][static_cast<std::size_t>(j)]] = monomial(src, {bi - j, j, 0, 1});
    p.coordinates = std::move(coords);
    Polynomial<F> g(src);
    for (unsigned j = 0; j <= alpha; ++j) {
      const long deg = static_cast<long>(alpha - j) * a + static_cast<long>(j) * b + k;
      if (deg < 0) continue;
      auto coeff = random_form(st, static_cast<unsigned>(deg), rng).rename(src, st_map);
      g = g + coeff * monomial(src, {0, 0, static_cast<int>(alpha - j), static_cast<int>(j)});
    }
    if (g.is_zero()) continue;
    p.constraints.push_back(std::move(g));
    auto c = from_parameterization("curve-on-scroll", std::move(p), spec.ncoords());
    auto h = hilbert_of(c.ideal);
    if (h.dimension != 2 || h.degree != expected) continue;
    c.seed = seed;
    c.metadata = {{"construction", "curve-on-scroll"},
                  {"scroll", spec.to_string()},
                  {"class", DivisorClass::hf(static_cast<int>(alpha), k).to_string()}};
    return c;
  }
  throw DegenerateChoice("curve on " + spec.to_string() + " kept degenerating", seed);
}

template <class F>
Construction<F> quadric_complete_intersection(const F& field, std::uint64_t seed) {
  Rng rng(seed);
  auto ring = make_ring(field, 6);
  for (int attempt = 0; attempt < 5; ++attempt) {
    Point<F> q(6);
    for (auto& x : q) x = field.random_nonzero(rng);
    std::vector<Polynomial<F>> gens;
    auto sq = monomial(ring, {2});
    const auto sq_at_q = field.mul(q[0], q[0]);
    for (int i = 0; i < 3; ++i) {
      auto f = random_form(ring, 2, rng);
      auto v = f.evaluate(std::span<const Elem<F>>(q));
      gens.push_back(f - sq.scale(field.div(v, sq_at_q)));
    }
    Ideal<F> ideal(ring, std::move(gens));
    if (jacobian_rank(ideal, q) != 3) continue;
    auto h = hilbert_of(ideal);
    if (h.dimension != 3 || h.degree != 8) continue;
    Construction<F> c{"quadric-ci", std::move(ideal), seed, {{"construction", "quadric-ci"}}, {}};
    c.sampler = [q](Rng&) -> std::optional<Point<F>> { return q; };
    return c;
  }
  throw DegenerateChoice("quadrics kept degenerating", seed);
}

template <class F>
Construction<F> broken_divisor(const F& field, unsigned e, std::uint64_t seed) {
  if (e < 2) throw UnsupportedParameter("e must be >= 2");
  auto x = curve_on_scroll(field, 1, e - 1, 1, 2, seed);
  std::vector<std::size_t> line;
  for (std::size_t i = 2; i <= e + 1; ++i) line.push_back(i);
  auto d = variables_ideal(x.ideal.ring(), line);
  auto z = buchberger(ideal_intersect(x.ideal, d)).as_ideal();
  Construction<F> c{"broken-divisor", std::move(z), seed,
                    {{"construction", "broken-divisor"}, {"e", std::to_string(e)}}, x.sampler};
  return c;
}

template <class F>
Construction<F> cone(const Construction<F>& base, unsigned k) {
  const auto& ring = *base.ideal.ring();
  const std::size_t n = ring.nvars();
  if (k == 0) throw UnsupportedParameter("cone needs k >= 1");
  if (n + k > kMaxVars) throw UnsupportedParameter("cone has too many variables");
  auto target = make_ring(ring.field(), n + k);
  std::vector<int> map(n);
  std::iota(map.begin(), map.end(), 0);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : base.ideal.generators()) gens.push_back(g.rename(target, map));
  Construction<F> c{"cone(" + base.name + ")", Ideal<F>(target, std::move(gens)), base.seed, base.metadata, {}};
  c.metadata.push_back({"cone", std::to_string(k)});
  if (base.sampler) {
    auto inner = base.sampler;
    const F field = ring.field();
    c.sampler = [inner, field, k](Rng& rng) -> std::optional<Point<F>> {
      auto p = inner(rng);
      if (!p) return p;
      for (unsigned i = 0; i < k; ++i) p->push_back(field.random(rng));
      return p;
    };
  }
  return c;
}

namespace {

template <class F>
std::vector<std::vector<Elem<F>>> random_forms(const F& field, std::size_t n, unsigned k, Rng& rng) {
  std::vector<std::vector<Elem<F>>> forms(k, std::vector<Elem<F>>(n - k));
  for (auto& f : forms)
    for (auto& x : f) x = field.random(rng);
  return forms;
}

template <class F>
RingPtr<F> smaller_ring(const RingPtr<F>& ring, unsigned k) {
  return make_ring(ring->field(), ring->nvars() - k);
}

}  // namespace

template <class F>
Construction<F> geometric_linear_section(const Construction<F>& base, unsigned k, std::uint64_t seed) {
  if (k == 0) return base;
  const auto h = hilbert_of(base.ideal);
  if (k + 1 > h.dimension) throw UnsupportedParameter("section would be empty");
  const auto& ring = base.ideal.ring();
  Rng rng(seed);
  for (int attempt = 0; attempt < 5; ++attempt) {
    auto target = smaller_ring(ring, k);
    auto forms = random_forms(ring->field(), ring->nvars(), k, rng);
    auto cut = restrict_to_subspace(base.ideal, forms, target);
    auto sat = buchberger(saturate(cut, irrelevant_ideal(target)));
    if (sat.is_unit()) continue;
    auto hs = hilbert_data(sat);
    if (hs.dimension != h.dimension - k || hs.degree != h.degree) continue;
    Construction<F> c{"section(" + base.name + ")", sat.as_ideal(), seed, base.metadata, {}};
    c.metadata.push_back({"section", std::to_string(k)});
    return c;
  }
  throw DegenerateChoice("linear section kept degenerating", seed);
}

template <class F>
ArtinianQuotient<F> artinian_quotient(const Construction<F>& base, unsigned k, std::uint64_t seed) {
  const auto g = buchberger(base.ideal);
  const auto h = hilbert_data(g);
  if (k >= base.ideal.ring()->nvars())
    throw UnsupportedParameter("too many linear forms for the dimension");
  const auto& ring = base.ideal.ring();
  Rng rng(seed);
  std::optional<Construction<F>> last;
  for (int attempt = 0; attempt < 5; ++attempt) {
    auto target = smaller_ring(ring, k);
    auto forms = random_forms(ring->field(), ring->nvars(), k, rng);
    auto cut = buchberger(restrict_to_subspace(base.ideal, forms, target));
    Construction<F> c{"artinian(" + base.name + ")", cut.as_ideal(), seed, base.metadata, {}};
    c.metadata.push_back({"quotient", std::to_string(k)});
    if (!cut.is_unit() && hilbert_data(cut).numerator == h.numerator) return {std::move(c), true};
    last = std::move(c);
  }
  return {std::move(*last), false};
}

template <class F>
Construction<F> inner_projection(const Construction<F>& base, const Point<F>& point) {
  const auto& ring = base.ideal.ring();
  const F& k = ring->field();
  const std::size_t n = ring->nvars();
  if (point.size() != n || all_zero(k, point)) throw std::invalid_argument("not a projective point");
  if (!lies_on(base.ideal, point)) throw std::invalid_argument("projection center does not lie on the scheme");
  if (n < 3) throw UnsupportedParameter("nothing left to project to");
  std::size_t pivot = 0;
  while (k.is_zero(point[pivot])) ++pivot;
  // z = q * w0 + sum_{j != pivot} e_j * w_j
  auto work = make_ring(k, n, MonomialOrder::elimination(1));
  std::vector<Polynomial<F>> images;
  std::size_t next = 1;
  for (std::size_t j = 0; j < n; ++j) {
    auto img = Polynomial<F>::variable(work, 0).scale(point[j]);
    if (j != pivot) img = img + Polynomial<F>::variable(work, next++);
    images.push_back(std::move(img));
  }
  std::vector<Polynomial<F>> gens;
  for (const auto& g : base.ideal.generators()) gens.push_back(g.substitute(images, work));
  auto target = make_ring(k, n - 1);
  auto image = eliminate(Ideal<F>(work, std::move(gens)), 1, target);
  auto sat = buchberger(saturate(image, irrelevant_ideal(target))).as_ideal();
  Construction<F> c{"projection(" + base.name + ")", std::move(sat), base.seed, base.metadata, {}};
  c.metadata.push_back({"projected", "1"});
  if (base.sampler) {
    auto inner = base.sampler;
    const F field = k;
    c.sampler = [inner, field, point, pivot](Rng& rng) -> std::optional<Point<F>> {
      auto p = inner(rng);
      if (!p) return p;
      auto w0 = field.div((*p)[pivot], point[pivot]);
      Point<F> out;
      for (std::size_t j = 0; j < p->size(); ++j)
        if (j != pivot) out.push_back(field.sub((*p)[j], field.mul(w0, point[j])));
      if (all_zero(field, out)) return std::nullopt;
      return out;
    };
  }
  return c;
}

#define SYZYGY_INSTANTIATE(F)                                                                      \
  template Construction<F> rational_normal_curve(const F&, unsigned);                            \
  template Construction<F> scroll(const F&, const ScrollSpec&);                                  \
  template Construction<F> almost_minimal_curve(const F&, unsigned);                             \
  template Construction<F> almost_minimal_surface(const F&, unsigned);                           \
  template Construction<F> almost_minimal_threefold(const F&, unsigned);                         \
  template Construction<F> almost_minimal_fourfold(const F&, unsigned);                          \
  template Construction<F> elliptic_normal_curve(const F&, unsigned);                            \
  template Construction<F> general_points(const F&, unsigned, unsigned, std::uint64_t);          \
  template Construction<F> points_on_rnc(const F&, unsigned, unsigned, std::uint64_t);           \
  template Construction<F> curve_on_scroll(const F&, unsigned, unsigned, unsigned, int,          \
                                           std::uint64_t);                                       \
  template Construction<F> quadric_complete_intersection(const F&, std::uint64_t);               \
  template Construction<F> broken_divisor(const F&, unsigned, std::uint64_t);                    \
  template Construction<F> cone(const Construction<F>&, unsigned);                               \
  template Construction<F> geometric_linear_section(const Construction<F>&, unsigned,            \
                                                    std::uint64_t);                              \
  template ArtinianQuotient<F> artinian_quotient(const Construction<F>&, unsigned, std::uint64_t); \
  template Construction<F> inner_projection(const Construction<F>&, const Point<F>&);            \
  template bool lies_on(const Ideal<F>&, const Point<F>&);                                       \
  template std::size_t jacobian_rank(const Ideal<F>&, const Point<F>&);                          \
  template std::optional<Point<F>> smooth_point(const Construction<F>&, Rng&, int);              \
  template bool in_general_position(const F&, const std::vector<Point<F>>&);                     \
  template Ideal<F> points_ideal(const RingPtr<F>&, const std::vector<Point<F>>&);

SYZYGY_INSTANTIATE(PrimeField)
SYZYGY_INSTANTIATE(RationalField)

}  // namespace syzygy
