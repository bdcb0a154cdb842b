#pragma once

// Transversal intersection of a shifted fan with a complementary fan, the
// index and weight of each intersection point, tropical degree, and the case
// census of v + S(A_{n-1}) against Σ_{n,n-2}.

#include "tropdeg/linear_space.hpp"
#include "tropdeg/polyhedral_fan.hpp"
#include "tropdeg/rational.hpp"
#include "tropdeg/type_a.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace tropdeg {

/// Genericity failure: a boundary hit, a singular but feasible facet pair,
/// or a point shared by two facet pairs.
class DegenerateIntersection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GenericityExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnclassifiedPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ShiftVector {
  RatVec values;

  std::size_t size() const { return values.size(); }
  friend bool operator==(const ShiftVector&, const ShiftVector&) = default;
};

/// (0, 1, 10, 100, ...).
ShiftVector super_increasing_vector(std::size_t n);

/// Entries p/q with p uniform in [-1000, 1000] and q uniform in [1, 97].
ShiftVector random_shift(std::size_t n, std::uint64_t seed);

/// base + eps, with eps entries p/1000 for p uniform in [-10, 10].
ShiftVector perturb(const ShiftVector& base, std::uint64_t seed);

struct IntersectionPoint {
  RatVec point;
  std::size_t surface_facet = 0;  ///< index into the shifted fan's facets
  std::size_t linear_facet = 0;   ///< index into the second fan's facets
  /// Coefficients of point - v on the shifted facet: rays, then lineality.
  RatVec surface_coeffs;
  /// Coefficients of point on the second facet: rays, then lineality.
  RatVec linear_coeffs;
  Int index;
  Int weight;
  Rat min_coordinate;
};

enum class PairStatus { Transversal, NoIntersection, Degenerate };

struct PairOutcome {
  PairStatus status = PairStatus::NoIntersection;
  std::optional<IntersectionPoint> hit;
};

/// Solves v + (cone over sigma1) = (cone over sigma2) as an n x n exact
/// system.  Ray coefficients must be strictly positive for a transversal hit;
/// an exactly-zero ray coefficient or a singular system with a feasible
/// solution is Degenerate.  Lineality coefficients are unconstrained.
/// Throws NotComplementary unless dim sigma1 + dim sigma2 = n.
PairOutcome intersect_facet_pair(const Cone& sigma1, const Int& w1, const ShiftVector& v, const Cone& sigma2,
                                 const Int& w2);

/// [Z^n : L_sigma1 + L_sigma2] as |det| of the saturated generator bases.
Int intersection_index(const Cone& sigma1, const Cone& sigma2);
/// Same, through the Smith normal form of the stacked bases.
Int intersection_index_snf(const Cone& sigma1, const Cone& sigma2);

/// All points of (v + F1) ∩ F2, sorted by (surface_facet, linear_facet).
/// Throws NotComplementary or DegenerateIntersection.
std::vector<IntersectionPoint> transversal_intersection(const WeightedFan& f1, const WeightedFan& f2,
                                                        const ShiftVector& v, unsigned threads = 0);

enum class CaseLabel { C1_1, C1_2, C1_3, C1_4, C1_5, C2_1, C2_2, C2_3, C2_4, C2_5, Other };

inline constexpr std::array<CaseLabel, 10> kCensusCases = {
    CaseLabel::C1_1, CaseLabel::C1_2, CaseLabel::C1_3, CaseLabel::C1_4, CaseLabel::C1_5,
    CaseLabel::C2_1, CaseLabel::C2_2, CaseLabel::C2_3, CaseLabel::C2_4, CaseLabel::C2_5};

/// "1.1" ... "2.5", "other".
std::string_view case_name(CaseLabel label);
std::optional<CaseLabel> parse_case_name(std::string_view name);

/// Case of a point of (v + S(A_{n-1})) ∩ Σ_{n,n-2}.  The family comes from
/// the facet kind (head edge: 1.x, tail edge: 2.x); the subcase compares the
/// minimum coordinate m with v1 < v2 < v3 (0, 1, 10 for the super-increasing
/// vector).  A shift whose first three entries are not strictly increasing
/// yields Other.
CaseLabel classify_point(const IntersectionPoint& p, const PolytopeEdge& edge, const ShiftVector& v);

struct DegreeOptions {
  /// Explicit first shift; defaults to the super-increasing vector.
  std::optional<ShiftVector> shift;
  /// Start from random_shift(n, seed) instead (ignored when `shift` is set).
  std::optional<std::uint64_t> random_seed;
  /// Random shifts tried after a degenerate first attempt.
  unsigned max_retries = 8;
  unsigned threads = 0;
};

struct DegreeResult {
  Int degree;
  ShiftVector shift;  ///< the shift that produced a transversal intersection
  std::vector<IntersectionPoint> points;
  unsigned attempts = 0;
};

/// deg F = (v + F) · Σ_{n,n-d} for a pure d-dimensional fan F in R^n,
/// retrying with random shifts on degeneracy.  Throws GenericityExhausted.
DegreeResult compute_degree(const WeightedFan& fan, const DegreeOptions& options = {});
Int degree(const WeightedFan& fan, const DegreeOptions& options = {});

struct CaseRow {
  CaseLabel label = CaseLabel::Other;
  std::size_t count = 0;
  /// Distinct intersection indices seen in this case, ascending.
  std::vector<Int> multiplicities;
  Int contribution;

  /// The common multiplicity, if the case has points and they all agree.
  std::optional<Int> multiplicity() const;
};

/// 0-based positions where the point attains its minimum.
std::vector<int> minimal_positions(const IntersectionPoint& p);

struct ClassifiedPoint {
  IntersectionPoint point;
  CaseLabel label = CaseLabel::Other;
  std::vector<int> minimal_positions;
};

struct DegreeReport {
  std::size_t n = 0;
  /// Rows 1.1 ... 2.5 in order, then an Other row only if it is nonempty.
  std::vector<CaseRow> rows;
  Int total;
  ShiftVector shift;
  std::vector<ClassifiedPoint> points;

  const CaseRow& row(CaseLabel label) const;
};

/// Classifies and tallies the points of v + S(A_{n-1}) against Σ_{n,n-2}.
DegreeReport build_degree_report(const RootSurface& surface, const std::vector<IntersectionPoint>& points,
                                 const ShiftVector& shift);

/// Case census with the super-increasing vector.  Throws UnclassifiedPoint if
/// any point falls outside the known cases and BadN for n < 3.
DegreeReport degree_report(std::size_t n, unsigned threads = 0);

/// Compares the (facet pair, case, index) multisets of v + S(A_{n-1}) and
/// (v + eps) + S(A_{n-1}) against Σ_{n,n-2}, eps = perturb(v, seed).
/// Degeneracy in either run counts as disagreement.
bool genericity_probe(std::size_t n, std::uint64_t epsilon_seed, unsigned threads = 0);
bool genericity_probe(const RootSurface& surface, const LinearSpace& linear, const ShiftVector& base,
                      std::uint64_t epsilon_seed, unsigned threads = 0);

}  // namespace tropdeg
