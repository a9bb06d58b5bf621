#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/ideal_ops.hpp"
#include "syzygy/random.hpp"

namespace syzygy {

/// Raised when a randomized construction keeps producing degenerate output.
/// The message carries the seed.
class DegenerateChoice : public std::runtime_error {
 public:
  DegenerateChoice(const std::string& what, std::uint64_t seed)
      : std::runtime_error(what + " (seed " + std::to_string(seed) + ")"), seed_(seed) {}
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

class UnsupportedParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical type of a rational normal scroll S(a_0, ..., a_n), a_0 <= ... <= a_n.
struct ScrollSpec {
  std::vector<unsigned> blocks;

  explicit ScrollSpec(std::vector<unsigned> b);
  unsigned degree() const;
  std::size_t dimension() const { return blocks.size(); }
  std::size_t ncoords() const;
  std::size_t codimension() const { return degree() - 1; }
  std::string to_string() const;
  /// Column layout: the smallest positive block, then one vertex coordinate
  /// per zero block, then the remaining positive blocks. Each positive block
  /// a contributes a+1 consecutive coordinates forming a columns.
  std::vector<std::vector<std::size_t>> coordinate_blocks() const;
  /// Coordinates of the vertex (zero blocks).
  std::vector<std::size_t> vertex_coordinates() const;
};

/// Divisor class alpha*H + beta*F, or m*R on a scroll with a_{n-1} = 0.
struct DivisorClass {
  enum class Kind { HF, R };
  Kind kind = Kind::HF;
  int alpha = 0;
  int beta = 0;
  int m = 0;

  static DivisorClass hf(int a, int b) { return {Kind::HF, a, b, 0}; }
  static DivisorClass r(int m) { return {Kind::R, 0, 0, m}; }
  std::string to_string() const;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

template <class F>
using Point = std::vector<typename F::Element>;

/// A constructed projective scheme: its saturated ideal plus whatever is
/// known about how to find points on it.
template <class F>
struct Construction {
  std::string name;
  Ideal<F> ideal;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> metadata;
  /// Draws a general point of the scheme (nullopt when not available).
  std::function<std::optional<Point<F>>(Rng&)> sampler;
};

template <class F>
Construction<F> rational_normal_curve(const F& field, unsigned d);

template <class F>
Construction<F> scroll(const F& field, const ScrollSpec& spec);

/// Projection of the rational normal curve of degree e+2 from a point: the
/// monomial curve [s^{e+2} : s^{e+1}t : s^{e-1}t^3 : ... : t^{e+2}] in P^{e+1}.
template <class F>
Construction<F> almost_minimal_curve(const F& field, unsigned e);
/// Surface [sx : tx : s^{e+1}y : s^{e-1}t^2 y : ... : t^{e+1}y] in P^{e+2}.
template <class F>
Construction<F> almost_minimal_surface(const F& field, unsigned e);
/// Threefold [sx : tx : s^2 y : t^2 y : s^{e-1}z : ... : t^{e-1}z] in P^{e+3}.
template <class F>
Construction<F> almost_minimal_threefold(const F& field, unsigned e);
/// Fourfold [sx : tx : sy - tz : ty : sz : s^{e-1}w : ... : t^{e-1}w] in P^{e+4}.
template <class F>
Construction<F> almost_minimal_fourfold(const F& field, unsigned e);

/// Fermat cubic re-embedded by degree-m forms, 3m = e + 2.
template <class F>
Construction<F> elliptic_normal_curve(const F& field, unsigned e);

template <class F>
Construction<F> general_points(const F& field, unsigned e, unsigned d, std::uint64_t seed);
template <class F>
Construction<F> points_on_rnc(const F& field, unsigned e, unsigned d, std::uint64_t seed);

/// Curve cut on S(a,b) by a random section of alpha*H + k*F.
template <class F>
Construction<F> curve_on_scroll(const F& field, unsigned a, unsigned b, unsigned alpha, int k,
                                std::uint64_t seed);

/// Three random quadrics in P^5 through a random point.
template <class F>
Construction<F> quadric_complete_intersection(const F& field, std::uint64_t seed);

/// curve_on_scroll(1, e-1, 1, 2) together with the line S(1) of the scroll.
template <class F>
Construction<F> broken_divisor(const F& field, unsigned e, std::uint64_t seed);

/// Join with a linear space: k new variables that appear in no generator.
template <class F>
Construction<F> cone(const Construction<F>& base, unsigned k);

/// Saturated section by k general hyperplanes; degree and dimension are verified.
template <class F>
Construction<F> geometric_linear_section(const Construction<F>& base, unsigned k, std::uint64_t seed);

template <class F>
struct ArtinianQuotient {
  Construction<F> quotient;
  /// The forms were verified to be a regular sequence (Hilbert numerators agree).
  bool regular;
};
/// Same substitution without saturation: S_X / (l_1, ..., l_k).
template <class F>
ArtinianQuotient<F> artinian_quotient(const Construction<F>& base, unsigned k, std::uint64_t seed);

/// Image of the projection from a point of the scheme.
template <class F>
Construction<F> inner_projection(const Construction<F>& base, const Point<F>& point);

/// True iff all generators vanish at the point.
template <class F>
bool lies_on(const Ideal<F>& ideal, const Point<F>& point);

/// Rank of the Jacobian matrix of the generators at a point.
template <class F>
std::size_t jacobian_rank(const Ideal<F>& ideal, const Point<F>& point);

/// A general point where the Jacobian has full rank (= codimension).
template <class F>
std::optional<Point<F>> smooth_point(const Construction<F>& c, Rng& rng, int attempts = 20);

/// Every (e+1)-subset of the points in P^e is linearly independent.
template <class F>
bool in_general_position(const F& field, const std::vector<Point<F>>& points);

/// Saturated vanishing ideal of finitely many distinct points, degree by degree.
template <class F>
Ideal<F> points_ideal(const RingPtr<F>& ring, const std::vector<Point<F>>& points);

}  // namespace syzygy
