#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "syzygy/field.hpp"
#include "syzygy/monomial.hpp"

namespace syzygy {

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("operands live in different rings") {}
};

/// Polynomial ring k[x_0, ..., x_{N-1}] with a monomial order and positive
/// (or zero, for tag variables) integer variable weights. Weights default to
/// 1, i.e. the standard grading.
template <class F>
class Ring {
 public:
  Ring(F field, std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex(),
       std::vector<std::string> names = {}, std::vector<unsigned> weights = {})
      : field_(std::move(field)),
        nvars_(nvars),
        order_(order),
        names_(std::move(names)),
        weights_(std::move(weights)) {
    if (nvars_ < 1 || nvars_ > kMaxVars)
      throw std::invalid_argument("number of variables must be in [1, 32]");
    if (names_.empty()) {
      for (std::size_t i = 0; i < nvars_; ++i) names_.push_back("z" + std::to_string(i));
    }
    if (names_.size() != nvars_) throw std::invalid_argument("variable name count mismatch");
    if (weights_.empty()) weights_.assign(nvars_, 1);
    if (weights_.size() != nvars_) throw std::invalid_argument("weight count mismatch");
    standard_ = true;
    for (unsigned w : weights_) standard_ = standard_ && w == 1;
    if (order_.kind() == MonomialOrder::Kind::BlockElimination && order_.block() >= nvars_)
      throw std::invalid_argument("elimination block must leave at least one variable");
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<unsigned>& weights() const { return weights_; }
  bool standard_grading() const { return standard_; }

  int compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b, nvars_);
  }

  unsigned weighted_degree(const Monomial& m) const {
    if (standard_) return m.degree();
    unsigned d = 0;
    for (std::size_t i = 0; i < nvars_; ++i) d += weights_[i] * m[i];
    return d;
  }

  /// Structural equality; variable names are cosmetic and ignored.
  bool same_as(const Ring& other) const {
    return this == &other || (field_ == other.field_ && nvars_ == other.nvars_ &&
                              order_ == other.order_ && weights_ == other.weights_);
  }

 private:
  F field_;
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<std::string> names_;
  std::vector<unsigned> weights_;
  bool standard_ = true;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex(),
                     std::vector<std::string> names = {}, std::vector<unsigned> weights = {}) {
  return std::make_shared<const Ring<F>>(std::move(field), nvars, order, std::move(names),
                                         std::move(weights));
}

}  // namespace syzygy
