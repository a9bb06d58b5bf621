// Minimal free resolution by plain graded linear algebra over GF(p).
//
// Works degree by degree up to a fixed bound D: in each degree t the kernel of
// F_i -> F_{i-1} is computed as a vector space, and the part not reached by
// S_1 times the previous degree gives the minimal generators. Every entry with
// p + q <= D is exact. Only meant for a handful of variables.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace syzygy::oracle {

using Exps = std::vector<int>;
using Poly = std::map<Exps, std::uint64_t>;  // exponent vector -> nonzero coefficient
using Element = std::vector<Poly>;           // one polynomial per free generator

class Resolver {
 public:
  Resolver(std::size_t nvars, std::uint64_t p, int max_degree) : n_(nvars), p_(p), D_(max_degree) {}

  /// Betti numbers keyed by (p, q) of S/I for the homogeneous generators.
  std::map<std::pair<int, int>, std::int64_t> betti(const std::vector<Poly>& generators) {
    std::map<std::pair<int, int>, std::int64_t> out{{{0, 0}, 1}};
    std::vector<int> shifts{0};  // F_0 = S
    std::vector<Element> images;
    for (const auto& g : generators)
      if (!g.empty()) images.push_back({g});
    // F_1: minimal generators of I inside F_0
    auto gens = minimal_generators(shifts, [&](int t) { return span_of(images, t); });
    for (int i = 1; !gens.empty(); ++i) {
      std::vector<int> src;
      std::vector<Element> imgs;
      for (const auto& [t, v] : gens) {
        ++out[{i, t - i}];
        src.push_back(t);
        imgs.push_back(v);
      }
      gens = minimal_generators(src, [&](int t) { return kernel(src, imgs, shifts, t); });
      shifts = std::move(src);
    }
    return out;
  }

 private:
  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t r = 1, e = p_ - 2;
    while (e) {
      if (e & 1) r = r * a % p_;
      a = a * a % p_;
      e >>= 1;
    }
    return r;
  }

  std::vector<Exps> monomials(int degree) const {
    std::vector<Exps> out;
    if (degree < 0) return out;
    Exps cur(n_, 0);
    rec(out, cur, 0, degree);
    return out;
  }
  void rec(std::vector<Exps>& out, Exps& cur, std::size_t i, int left) const {
    if (i + 1 == n_) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[i] = a;
      rec(out, cur, i + 1, left - a);
    }
  }

  // coordinates of the degree-t piece of a free module with the given shifts
  struct Basis {
    std::map<std::pair<std::size_t, Exps>, std::size_t> index;
    std::vector<std::pair<std::size_t, Exps>> items;
  };
  Basis basis(const std::vector<int>& shifts, int t) const {
    Basis b;
    for (std::size_t j = 0; j < shifts.size(); ++j)
      for (auto& m : monomials(t - shifts[j])) {
        b.index[{j, m}] = b.items.size();
        b.items.push_back({j, m});
      }
    return b;
  }

  std::vector<std::uint64_t> coords(const Element& v, const Basis& b) const {
    std::vector<std::uint64_t> c(b.items.size(), 0);
    for (std::size_t j = 0; j < v.size(); ++j)
      for (const auto& [m, a] : v[j]) c.at(b.index.at({j, m})) = a;
    return c;
  }

  Element times_monomial(const Element& v, const Exps& m) const {
    Element out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
      for (const auto& [e, a] : v[j]) {
        Exps f = e;
        for (std::size_t k = 0; k < n_; ++k) f[k] += m[k];
        out[j][f] = a;
      }
    return out;
  }

  // row echelon helper: reduce v against the pivots, return true if v was new
  struct Echelon {
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<std::size_t> pivots;
  };
  bool insert(Echelon& e, std::vector<std::uint64_t> v) const {
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      std::uint64_t c = v[e.pivots[r]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = (v[k] + (p_ - c) * e.rows[r][k]) % p_;
    }
    std::size_t piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv == v.size()) return false;
    std::uint64_t s = inv(v[piv]);
    for (auto& x : v) x = x * s % p_;
    for (auto& row : e.rows) {
      std::uint64_t c = row[piv];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) row[k] = (row[k] + (p_ - c) * v[k]) % p_;
    }
    e.rows.push_back(std::move(v));
    e.pivots.push_back(piv);
    return true;
  }

  // spanning set of the degree-t part of the submodule generated by images
  std::vector<Element> span_of(const std::vector<Element>& images, int t) const {
    std::vector<Element> out;
    for (const auto& g : images) {
      int d = -1;
      for (const auto& [e, a] : g[0]) {
        d = 0;
        for (int x : e) d += x;
        break;
      }
      for (auto& m : monomials(t - d)) out.push_back(times_monomial(g, m));
    }
    return out;
  }

  // basis of the degree-t kernel of the map sending generator j of the source
  // to images[j] in the target
  std::vector<Element> kernel(const std::vector<int>& src, const std::vector<Element>& images,
                              const std::vector<int>& tgt, int t) const {
    Basis sb = basis(src, t), tb = basis(tgt, t);
    const std::size_t cols = sb.items.size(), rows = tb.items.size();
    // augmented rows [M^T | I]: reduce the image part, identity tracks combinations
    std::vector<std::vector<std::uint64_t>> a(cols, std::vector<std::uint64_t>(rows + cols, 0));
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& [j, m] = sb.items[c];
      auto img = coords(times_monomial(images[j], m), tb);
      for (std::size_t r = 0; r < rows; ++r) a[c][r] = img[r];
      a[c][rows + c] = 1;
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < rows && rank < cols; ++col) {
      std::size_t piv = rank;
      while (piv < cols && a[piv][col] == 0) ++piv;
      if (piv == cols) continue;
      std::swap(a[piv], a[rank]);
      std::uint64_t s = inv(a[rank][col]);
      for (auto& x : a[rank]) x = x * s % p_;
      for (std::size_t r = 0; r < cols; ++r) {
        if (r == rank || a[r][col] == 0) continue;
        std::uint64_t c = a[r][col];
        for (std::size_t k = 0; k < rows + cols; ++k) a[r][k] = (a[r][k] + (p_ - c) * a[rank][k]) % p_;
      }
      ++rank;
    }
    std::vector<Element> out;
    for (std::size_t r = rank; r < cols; ++r) {
      Element v(src.size());
      for (std::size_t c = 0; c < cols; ++c)
        if (a[r][rows + c] != 0) v[sb.items[c].first][sb.items[c].second] = a[r][rows + c];
      out.push_back(std::move(v));
    }
    return out;
  }

  // minimal generators (degree, element) of the submodule whose degree-t part
  // is spanned by piece(t)
  template <class Piece>
  std::vector<std::pair<int, Element>> minimal_generators(const std::vector<int>& shifts, Piece piece) const {
    std::vector<std::pair<int, Element>> gens;
    std::vector<Element> previous;
    for (int t = 0; t <= D_; ++t) {
      auto current = piece(t);
      Basis b = basis(shifts, t);
      Echelon e;
      for (const auto& v : previous)
        for (std::size_t k = 0; k < n_; ++k) {
          Exps x(n_, 0);
          x[k] = 1;
          insert(e, coords(times_monomial(v, x), b));
        }
      std::vector<Element> kept;
      for (auto& v : current) {
        if (insert(e, coords(v, b))) gens.push_back({t, v});
        kept.push_back(v);
      }
      previous = std::move(kept);
    }
    return gens;
  }

  std::size_t n_;
  std::uint64_t p_;
  int D_;
};

}  // namespace syzygy::oracle
