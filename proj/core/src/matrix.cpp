#include "syzygy/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace syzygy {

namespace {

// Reduces `rows` (GF(p), each of length ncols) to reduced row echelon form in
// place and returns the pivot columns.
std::vector<std::size_t> rref_mod_p(const PrimeField& k, std::vector<std::vector<std::uint32_t>>& rows,
                                    std::size_t ncols, bool full) {
  const std::uint64_t p = k.characteristic();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    auto& prow = rows[r];
    std::uint32_t inv = k.inv(prow[c]);
    for (std::size_t j = c; j < ncols; ++j)
      prow[j] = static_cast<std::uint32_t>(std::uint64_t(prow[j]) * inv % p);
    std::size_t start = full ? 0 : r + 1;
    for (std::size_t i = start; i < rows.size(); ++i) {
      if (i == r) continue;
      auto& row = rows[i];
      std::uint32_t f = row[c];
      if (f == 0) continue;
      std::uint64_t nf = p - f;
      for (std::size_t j = c; j < ncols; ++j) {
        if (prow[j] != 0) row[j] = static_cast<std::uint32_t>((row[j] + nf * prow[j]) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Fraction-free (Bareiss) forward elimination over Z. Returns pivot columns;
// rows[0..rank) hold an integer row echelon form.
std::vector<std::size_t> bareiss(std::vector<std::vector<mpz_class>>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  const std::size_t nrows = m.size();
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t piv = r;
    while (piv < nrows && m[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        mpz_class v = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = v;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<mpz_class>> integer_rows(const Matrix<RationalField>& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& q = m.at(r, c);
      out[r][c] = q.get_num() * (l / q.get_den());
    }
  }
  return out;
}

}  // namespace

template <class F>
Matrix<F> Matrix<F>::from_ints(F field, const std::vector<std::vector<long>>& rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr ? rows[0].size() : 0;
  Matrix m(field, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < nc; ++c) m.at(r, c) = m.field_.from_int(rows[r][c]);
  }
  return m;
}

template <class F>
std::vector<typename F::Element> Matrix<F>::apply(const std::vector<Element>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<Element> out(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out[r] = field_.add(out[r], field_.mul(at(r, c), v[c]));
  return out;
}

template <class F>
Matrix<F> Matrix<F>::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

template <>
RankKernel<PrimeField> rank_and_kernel(const Matrix<PrimeField>& m) {
  std::vector<std::vector<std::uint32_t>> rows(m.rows(), std::vector<std::uint32_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
  auto pivots = rref_mod_p(m.field(), rows, m.cols(), true);
  RankKernel<PrimeField> out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  const auto& k = m.field();
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(rows[i][f]);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

template <>
RankKernel<RationalField> rank_and_kernel(const Matrix<RationalField>& m) {
  auto rows = integer_rows(m);
  auto pivots = bareiss(rows, m.cols());
  RankKernel<RationalField> out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(m.cols(), mpq_class(0));
    v[f] = 1;
    for (std::size_t i = pivots.size(); i-- > 0;) {
      std::size_t pc = pivots[i];
      mpq_class s = 0;
      for (std::size_t j = pc + 1; j < m.cols(); ++j)
        if (rows[i][j] != 0 && sgn(v[j]) != 0) s += mpq_class(rows[i][j]) * v[j];
      v[pc] = -s / mpq_class(rows[i][pc]);
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

template <>
std::size_t rank(const Matrix<PrimeField>& m) {
  // eliminate along the shorter dimension
  const bool tr = m.cols() > m.rows();
  std::size_t nr = tr ? m.cols() : m.rows();
  std::size_t nc = tr ? m.rows() : m.cols();
  std::vector<std::vector<std::uint32_t>> rows(nr, std::vector<std::uint32_t>(nc));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) (tr ? rows[c][r] : rows[r][c]) = m.at(r, c);
  return rref_mod_p(m.field(), rows, nc, false).size();
}

template <>
std::size_t rank(const Matrix<RationalField>& m) {
  auto rows = integer_rows(m);
  return bareiss(rows, m.cols()).size();
}

template <class F>
void SparseMatrix<F>::add(std::size_t row, std::size_t col, const Element& v) {
  if (row >= rows_ || col >= columns_.size()) throw std::out_of_range("sparse entry");
  if (field_.is_zero(v)) return;
  auto& column = columns_[col];
  for (auto& e : column) {
    if (e.row == row) {
      e.value = field_.add(e.value, v);
      return;
    }
  }
  column.push_back({row, v});
}

template <class F>
Matrix<F> SparseMatrix<F>::densify() const {
  Matrix<F> m(field_, rows_, columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& e : columns_[c]) m.at(e.row, c) = e.value;
  return m;
}

template <>
std::size_t SparseMatrix<PrimeField>::rank() const {
  // Column echelon form: each column is reduced against stored pivots keyed
  // by their leading row, using a dense accumulator.
  const std::uint64_t p = field_.characteristic();
  struct Pivot {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tail;  // (row, value), rows > lead
    bool present = false;
  };
  std::vector<Pivot> pivots(rows_);
  std::vector<std::uint64_t> acc(rows_, 0);
  std::vector<std::uint32_t> touched;
  std::size_t rank = 0;
  for (const auto& column : columns_) {
    if (column.empty()) continue;
    touched.clear();
    std::size_t lo = rows_;
    for (const auto& e : column) {
      acc[e.row] = e.value;
      touched.push_back(static_cast<std::uint32_t>(e.row));
      lo = std::min(lo, e.row);
    }
    std::sort(touched.begin(), touched.end());
    // walk rows in increasing order; touched rows may grow as pivots fill in
    std::vector<std::uint32_t> heap(touched.begin(), touched.end());
    std::make_heap(heap.begin(), heap.end(), std::greater<>());
    bool placed = false;
    while (!heap.empty()) {
      std::pop_heap(heap.begin(), heap.end(), std::greater<>());
      std::uint32_t row = heap.back();
      heap.pop_back();
      while (!heap.empty() && heap.front() == row) {
        std::pop_heap(heap.begin(), heap.end(), std::greater<>());
        heap.pop_back();
      }
      std::uint64_t v = acc[row] % p;
      acc[row] = v;
      if (v == 0) continue;
      auto& piv = pivots[row];
      if (!piv.present) {
        // new pivot: normalise and store the remaining entries
        std::uint64_t inv = field_.inv(static_cast<std::uint32_t>(v));
        piv.present = true;
        acc[row] = 0;
        std::vector<std::uint32_t> rest(heap.begin(), heap.end());
        std::sort(rest.begin(), rest.end());
        rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
        for (auto r : rest) {
          std::uint64_t w = acc[r] % p;
          acc[r] = 0;
          if (w != 0) piv.tail.push_back({r, static_cast<std::uint32_t>(w * inv % p)});
        }
        ++rank;
        placed = true;
        break;
      }
      // eliminate: acc -= v * pivot (pivot is normalised with lead 1)
      acc[row] = 0;
      std::uint64_t nv = p - v;
      for (const auto& [r, w] : piv.tail) {
        if (acc[r] == 0) heap.push_back(r), std::push_heap(heap.begin(), heap.end(), std::greater<>());
        acc[r] = (acc[r] + nv * w) % p;
      }
    }
    if (!placed) {
      for (auto r : touched) acc[r] = 0;
    }
    // clear any residue left by the heap walk
    for (const auto& piv_row : heap) acc[piv_row] = 0;
  }
  return rank;
}

template <>
std::size_t SparseMatrix<RationalField>::rank() const {
  return syzygy::rank(densify());
}

template class Matrix<PrimeField>;
template class Matrix<RationalField>;
template class SparseMatrix<PrimeField>;
template class SparseMatrix<RationalField>;

}  // namespace syzygy
