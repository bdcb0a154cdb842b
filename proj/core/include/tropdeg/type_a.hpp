#pragma once

// Type A root system A_{n-1}, the edges of its root polytope, and the
// tropical root surface S(A_{n-1}).
//
// Coordinates are 0-based internally: RootA{i, j} is e_{i+1} - e_{j+1} in the
// usual 1-based notation.  Text and JSON output is 1-based.

#include "tropdeg/polyhedral_fan.hpp"
#include "tropdeg/rational.hpp"

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tropdeg {

class BadN : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The root e_i - e_j.
struct RootA {
  int i = 0;
  int j = 0;

  IntVec vector(std::size_t n) const;
  std::string label() const;  // "e1-e2"

  friend auto operator<=>(const RootA&, const RootA&) = default;
};

/// Edge of the root polytope.  Head edges join e_apex - e_a and
/// e_apex - e_b (shared head); tail edges join e_a - e_apex and
/// e_b - e_apex (shared tail).  Always a < b.
struct PolytopeEdge {
  enum class Kind { Head, Tail };

  Kind kind = Kind::Head;
  int apex = 0;
  int a = 0;
  int b = 0;

  /// The two roots, in ascending order.
  std::pair<RootA, RootA> endpoints() const;
  std::string label() const;  // "A_{1,23}" or "A_{12,3}"

  friend auto operator<=>(const PolytopeEdge&, const PolytopeEdge&) = default;
};

using RootPair = std::pair<RootA, RootA>;

/// All n(n-1) roots, lexicographic in (i, j).  Throws BadN for n < 2.
std::vector<RootA> roots_a(std::size_t n);

/// Reflection closure, integrality of 2<a,b>/<a,a>, and no multiples other
/// than ±a.  Zero vectors make the check fail.
bool root_system_axioms_check(const std::vector<IntVec>& roots);

/// Edges from the head/tail characterization, sorted by endpoints.
/// n(n-1)(n-2) of them.  Throws BadN for n < 3.
std::vector<PolytopeEdge> root_polytope_edges(std::size_t n);

/// Independent edge test: {r, s} is reported iff some rational c has
/// c·r = c·s >= c·t + 1 for all other roots t (exact LP).  Pairs are sorted.
/// Throws BadN unless 3 <= n <= 6.
std::vector<RootPair> edge_oracle(std::size_t n);

inline constexpr std::size_t kEdgeOracleMaxN = 6;

/// S(A_{n-1}) together with the labels of its rays and facets:
/// fan.cones(1)[r] = cone(roots[r]) and fan.facets()[e] is the cone over
/// edges[e].
struct RootSurface {
  std::size_t n = 0;
  std::vector<RootA> roots;
  std::vector<PolytopeEdge> edges;
  WeightedFan fan;
};

/// Throws BadN for n < 3.
RootSurface tropical_root_surface(std::size_t n);

}  // namespace tropdeg
