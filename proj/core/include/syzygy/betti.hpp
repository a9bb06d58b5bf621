#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/groebner.hpp"
#include "syzygy/hilbert.hpp"

namespace syzygy {

class RegularityCapExceeded : public std::runtime_error {
 public:
  explicit RegularityCapExceeded(int cap)
      : std::runtime_error("Betti table did not close below q = " + std::to_string(cap)) {}
};

/// Graded Betti numbers beta_{p,q} = dim Tor_p(S/I, k)_{p+q}.
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(std::size_t nvars, std::map<std::pair<int, int>, std::int64_t> entries)
      : nvars_(nvars), entries_(std::move(entries)) {
    std::erase_if(entries_, [](const auto& kv) { return kv.second == 0; });
  }

  std::size_t nvars() const { return nvars_; }
  /// Nonzero entries keyed by (p, q).
  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }
  std::int64_t at(int p, int q) const {
    auto it = entries_.find({p, q});
    return it == entries_.end() ? 0 : it->second;
  }

  /// Projective dimension: largest p with a nonzero entry.
  int pd() const;
  /// Largest q with a nonzero entry.
  int reg() const;
  /// Auslander-Buchsbaum: N - pd.
  int depth() const { return static_cast<int>(nvars_) - pd(); }
  /// Green-Lazarsfeld index: largest p with beta_{i,j} = 0 for i <= p, j >= 2;
  /// nullopt when no entry has j >= 2 (index is infinite).
  std::optional<int> gl_index() const;
  bool satisfies_n2p(int p) const {
    auto a = gl_index();
    return !a || *a >= p;
  }

  /// sum_{p,q} (-1)^p beta_{p,q} z^{p+q}, coefficients ascending.
  std::vector<std::int64_t> alternating_sum() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::size_t nvars_ = 0;
  std::map<std::pair<int, int>, std::int64_t> entries_;
};

/// Diagram with columns p and rows q, "." for zero, as in
///        0  1  2
///   0:   1  .  .
///   1:   .  3  2
std::string render_betti_diagram(const BettiTable& t);

struct BettiOptions {
  /// Quotient by a verified regular sequence of general linear forms first.
  bool reduce = true;
  std::uint64_t seed = 0x5eed;
  int q_cap = 20;
  std::optional<int> p_max;
  std::optional<int> q_max;
};

/// beta_{p,q} from the Koszul complex
///   wedge^{p+1} V (x) B_{q-1} -> wedge^p V (x) B_q -> wedge^{p-1} V (x) B_{q+1}
/// on the graded pieces B_m of S/I.
template <class F>
std::int64_t koszul_betti(const GroebnerBasis<F>& g, int p, int q);

/// Complete Betti table. Rows are computed until a zero row is reached whose
/// predecessors already reproduce the Hilbert numerator (or, for an Artinian
/// quotient, until the graded pieces vanish).
template <class F>
BettiTable betti_table(const GroebnerBasis<F>& g, const BettiOptions& options = {});

/// Length of the regular sequence found by the reduction step, with the reduced basis.
template <class F>
struct RegularReduction {
  GroebnerBasis<F> basis;
  std::size_t length;
};
template <class F>
RegularReduction<F> reduce_by_regular_sequence(const GroebnerBasis<F>& g, std::uint64_t seed);

}  // namespace syzygy
