#pragma once

#include <cstddef>
#include <vector>

#include "syzygy/field.hpp"

namespace syzygy {

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  /// Convenience constructor from integer entries.
  static Matrix from_ints(F field, const std::vector<std::vector<long>>& rows);

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Element> apply(const std::vector<Element>& v) const;
  Matrix transpose() const;

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<Element> data_;
};

template <class F>
struct RankKernel {
  std::size_t rank = 0;
  std::vector<std::vector<typename F::Element>> kernel;
};

/// Rank and a basis of the right kernel {v : M v = 0}. Over GF(p) this is
/// plain Gauss-Jordan; over Q the elimination is fraction-free (Bareiss) and
/// only the back substitution uses rationals.
template <class F>
RankKernel<F> rank_and_kernel(const Matrix<F>& m);

template <class F>
std::size_t rank(const Matrix<F>& m);

/// Column-oriented sparse matrix used to assemble Koszul differentials.
template <class F>
class SparseMatrix {
 public:
  using Element = typename F::Element;
  struct Entry {
    std::size_t row;
    Element value;
  };

  SparseMatrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const F& field() const { return field_; }

  void add(std::size_t row, std::size_t col, const Element& v);
  const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }

  Matrix<F> densify() const;
  /// Rank by sparse elimination (GF(p)) or densified Bareiss (Q).
  std::size_t rank() const;

 private:
  F field_;
  std::size_t rows_;
  std::vector<std::vector<Entry>> columns_;
};

template <>
std::size_t SparseMatrix<PrimeField>::rank() const;
template <>
std::size_t SparseMatrix<RationalField>::rank() const;

extern template class Matrix<PrimeField>;
extern template class Matrix<RationalField>;
extern template class SparseMatrix<PrimeField>;
extern template class SparseMatrix<RationalField>;

}  // namespace syzygy
