#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "syzygy/groebner.hpp"

namespace syzygy {

class EmptyScheme : public std::domain_error {
 public:
  EmptyScheme() : std::domain_error("empty scheme (unit ideal)") {}
};

/// Hilbert series data of S/I for a homogeneous ideal I in N variables.
struct HilbertData {
  std::size_t nvars = 0;
  /// K-polynomial: Hilbert series = numerator(z) / (1-z)^N, coefficients ascending.
  std::vector<std::int64_t> numerator;
  /// numerator / (1-z)^(N - dimension)
  std::vector<std::int64_t> reduced_numerator;
  /// Krull dimension of S/I (projective dimension + 1).
  std::size_t dimension = 0;
  std::int64_t degree = 0;
  /// Hilbert polynomial in m, coefficients ascending.
  std::vector<mpq_class> hilbert_polynomial;

  /// dim_k (S/I)_m, exact for every m >= 0.
  std::int64_t hilbert_function(std::int64_t m) const;
  mpq_class hilbert_polynomial_at(std::int64_t m) const;
  std::size_t codimension() const { return nvars - dimension; }
};

/// K-polynomial of S/(monomials) by pivot recursion; coefficients ascending.
std::vector<std::int64_t> monomial_ideal_numerator(std::vector<Monomial> gens, std::size_t nvars);

/// HilbertData from the leading-term ideal. Standard grading only.
template <class F>
HilbertData hilbert_data(const GroebnerBasis<F>& g);

/// Standard monomials of degree m (not divisible by any leading monomial),
/// in decreasing lex order of exponents.
template <class F>
std::vector<Monomial> graded_piece_basis(const GroebnerBasis<F>& g, unsigned m);

}  // namespace syzygy
