#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "syzygy/betti.hpp"
#include "syzygy/hilbert.hpp"

namespace syzygy {

class IncompleteTable : public std::invalid_argument {
 public:
  IncompleteTable() : std::invalid_argument("Betti table does not account for the Hilbert numerator") {}
};

struct DerivedInvariants {
  int pd = 0;
  int depth = 0;
  int reg_module = 0;
  /// nullopt: infinite.
  std::optional<int> gl_index;
  /// Filled in separately by sectional_genus; needs the ideal.
  std::optional<std::int64_t> sectional_genus;
  /// depth equals the Krull dimension.
  bool acm = false;
};

/// Throws IncompleteTable unless the table's alternating sum equals the numerator.
DerivedInvariants derived_invariants(const BettiTable& t, const HilbertData& h);

/// Arithmetic genus of a general curve section: 1 - P(0) for its Hilbert
/// polynomial P. Needs projective dimension >= 1. Throws DegenerateChoice
/// when 5 draws of linear forms all fail to preserve the degree.
template <class F>
std::int64_t sectional_genus(const GroebnerBasis<F>& g, std::uint64_t seed);

}  // namespace syzygy
