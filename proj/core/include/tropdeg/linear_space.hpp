#pragma once

// The standard tropical linear space Σ_{n,n-d}: the fine subdivision of the
// Bergman fan of the uniform matroid U_{n,n-d}.

#include "tropdeg/polyhedral_fan.hpp"
#include "tropdeg/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropdeg {

class BadParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Facet indexed by an ordered chain of distinct 0-based indices
/// (i1, ..., i_{n-d-1}).  Rays e_{i1}, e_{i1,i2}, ...; lineality e_[n].
struct FlagFacet {
  std::vector<int> chain;

  /// Rays in chain order: e_{i1}, e_{{i1,i2}}, ...
  std::vector<IntVec> rays(std::size_t n) const;
  std::string label() const;  // "σ_{3,1}" style, 1-based

  friend auto operator<=>(const FlagFacet&, const FlagFacet&) = default;
};

/// e_S for an index set S.
IntVec indicator(std::size_t n, const std::vector<int>& subset);

/// Σ_{n,n-d} with its facet labels: fan.facets()[f] is the cone of facets[f].
struct LinearSpace {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<FlagFacet> facets;
  WeightedFan fan;
};

/// One facet per ordered tuple of n-d-1 distinct indices (n!/(d+1)! facets,
/// lexicographic), each of dimension n-d, weight 1, with every face spanned
/// by a subchain.  e_[n] is a lineality direction of every cone.
/// Throws BadParams unless 1 <= d <= n-1.
LinearSpace standard_tropical_linear_space(std::size_t n, std::size_t d);

/// True iff the minimum of x is attained at least d+1 times.
bool support_contains(const RatVec& x, std::size_t d);

}  // namespace tropdeg
