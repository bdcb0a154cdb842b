#pragma once

// Simplicial rational cones, weighted fans and the balancing condition.

#include "tropdeg/exact_linalg.hpp"
#include "tropdeg/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropdeg {

class FanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DependentGenerators : public FanError {
 public:
  using FanError::FanError;
};

class BadFacePair : public FanError {
 public:
  using FanError::FanError;
};

class InvalidFan : public FanError {
 public:
  using FanError::FanError;
};

/// A simplicial rational cone: nonnegative span of `rays` plus the linear
/// span of `lineality`.  All generators are primitive and jointly
/// independent; lineality vectors are sign-normalized (first nonzero entry
/// positive).  Faces of the cone are spanned by subsets of the rays together
/// with the whole lineality space.
struct Cone {
  std::size_t ambient_dim = 0;
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;

  std::size_t dim() const { return rays.size() + lineality.size(); }
  /// Rays followed by lineality generators.
  std::vector<IntVec> generators() const;

  friend bool operator==(const Cone&, const Cone&) = default;
};

/// Reduces every generator to primitive form, order preserved.
/// Throws DependentGenerators if a generator is zero or the generators are
/// linearly dependent.
Cone make_cone(const std::vector<IntVec>& rays, std::size_t ambient_dim);
Cone make_cone(const std::vector<IntVec>& rays, const std::vector<IntVec>& lineality, std::size_t ambient_dim);

/// True iff every ray of tau is a nonnegative combination of sigma's rays
/// plus an element of sigma's lineality space, and tau's lineality lies in
/// sigma's lineality space.
bool contains_cone(const Cone& sigma, const Cone& tau);

/// u_{sigma/tau}: the first lattice point on the image of sigma in
/// Z^n / (span(tau) ∩ Z^n).  `quotient_coords` are coordinates in the
/// quotient lattice of tau (see QuotientLattice); `representative` is their
/// lift to Z^n.
struct QuotientRay {
  IntVec representative;
  IntVec quotient_coords;
};

/// Throws BadFacePair unless tau is a codimension-one face of sigma.
QuotientRay primitive_quotient_ray(const Cone& sigma, const Cone& tau);

/// Pure weighted fan with explicit cone lists per dimension.
///
/// Construction checks dimensions, weights and that every codimension-one
/// face of every maximal cone is listed.  The full fan axioms are checked by
/// audit_fan().
class WeightedFan {
 public:
  WeightedFan(std::size_t ambient_dim, std::size_t dim, std::vector<std::vector<Cone>> cones_by_dim,
              std::vector<Int> weights);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return dim_; }

  const std::vector<Cone>& cones(std::size_t k) const { return cones_by_dim_.at(k); }
  const std::vector<std::vector<Cone>>& cones_by_dim() const { return cones_by_dim_; }
  const std::vector<Cone>& facets() const { return cones_by_dim_[dim_]; }
  /// Codimension-one cones; empty for dim 0.
  const std::vector<Cone>& ridges() const;

  const Int& weight(std::size_t facet) const { return weights_.at(facet); }
  const std::vector<Int>& weights() const { return weights_; }

  /// Same cones, new weights.
  WeightedFan with_weights(std::vector<Int> weights) const;

  /// Index of `cone` within cones(cone.dim()), if listed.
  std::optional<std::size_t> find_cone(const Cone& cone) const;

 private:
  std::size_t ambient_dim_;
  std::size_t dim_;
  std::vector<std::vector<Cone>> cones_by_dim_;
  std::vector<Int> weights_;
  std::vector<std::map<std::vector<IntVec>, std::size_t>> index_;
};

struct BalanceResult {
  bool balanced = false;
  /// Sum of w(sigma) u_{sigma/tau}, in quotient coordinates.
  IntVec residual;
  /// Sum of w(sigma) times the lifted representatives, in Z^n.  Lies in
  /// span(tau) exactly when the fan is balanced at tau.
  IntVec lifted_sum;
  /// Indices of the maximal cones containing tau.
  std::vector<std::size_t> incident_facets;
};

/// Balancing condition at a codimension-one cone tau.
BalanceResult check_balanced_at(const WeightedFan& fan, const Cone& tau);

struct TropicalFanReport {
  /// Indices into fan.ridges() where balancing fails, ascending.
  std::vector<std::size_t> failing_ridges;
  bool balanced() const { return failing_ridges.empty(); }
};

/// Runs check_balanced_at on every ridge, optionally in parallel
/// (threads = 0 uses default_thread_count()).
TropicalFanReport is_tropical_fan(const WeightedFan& fan, unsigned threads = 0);

struct FanAudit {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Full face-closure check plus pairwise intersection check of maximal
/// cones (each intersection must be their common face).  Quadratic in the
/// number of maximal cones.
FanAudit audit_fan(const WeightedFan& fan);

}  // namespace tropdeg
