#include "tropdeg/stable_intersection.hpp"

#include "tropdeg/exact_linalg.hpp"
#include "tropdeg/exact_lp.hpp"
#include "tropdeg/parallel.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <set>
#include <tuple>

namespace tropdeg {

ShiftVector super_increasing_vector(std::size_t n) {
  ShiftVector v;
  Int power = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0) {
      v.values.emplace_back(0);
    } else {
      v.values.emplace_back(power);
      power *= 10;
    }
  }
  return v;
}

ShiftVector random_shift(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 97);
  ShiftVector v;
  for (std::size_t k = 0; k < n; ++k) {
    const long p = num(rng);
    const long q = den(rng);
    v.values.push_back(make_rat(Int(p), Int(q)));
  }
  return v;
}

ShiftVector perturb(const ShiftVector& base, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<long> num(-10, 10);
  ShiftVector v = base;
  for (auto& x : v.values) x += make_rat(Int(num(rng)), Int(1000));
  return v;
}

namespace {

// Singular system: is there a solution with nonnegative ray coefficients?
bool singular_pair_feasible(const IntMatrix& a, const RatVec& rhs, const std::vector<bool>& nonneg) {
  std::vector<LinearConstraint> cons;
  cons.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    LinearConstraint c{RatVec(a.cols()), Relation::Equal, rhs[r]};
    for (std::size_t k = 0; k < a.cols(); ++k) c.coefficients[k] = a(r, k);
    cons.push_back(std::move(c));
  }
  return find_feasible_point(a.cols(), nonneg, cons).has_value();
}

LatticeBasis generator_lattice(const Cone& c) { return LatticeBasis{c.ambient_dim, c.generators()}; }

}  // namespace

Int intersection_index(const Cone& sigma1, const Cone& sigma2) {
  if (sigma1.ambient_dim != sigma2.ambient_dim || sigma1.dim() + sigma2.dim() != sigma1.ambient_dim)
    throw NotComplementary("cones are not of complementary dimension");
  return lattice_index(generator_lattice(sigma1), generator_lattice(sigma2));
}

Int intersection_index_snf(const Cone& sigma1, const Cone& sigma2) {
  if (sigma1.ambient_dim != sigma2.ambient_dim || sigma1.dim() + sigma2.dim() != sigma1.ambient_dim)
    throw NotComplementary("cones are not of complementary dimension");
  return lattice_index_snf(generator_lattice(sigma1), generator_lattice(sigma2));
}

PairOutcome intersect_facet_pair(const Cone& sigma1, const Int& w1, const ShiftVector& v, const Cone& sigma2,
                                 const Int& w2) {
  const std::size_t n = sigma1.ambient_dim;
  if (sigma2.ambient_dim != n || v.size() != n || sigma1.dim() + sigma2.dim() != n)
    throw NotComplementary("facet pair is not of complementary dimension");

  // Unknowns: rays1, lin1, rays2, lin2.  v + G1 x1 = G2 x2  <=>  [G1 | -G2] x = -v.
  const auto g1 = sigma1.generators();
  const auto g2 = sigma2.generators();
  IntMatrix a(n, n);
  for (std::size_t c = 0; c < g1.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) a(r, c) = g1[c][r];
  for (std::size_t c = 0; c < g2.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) a(r, g1.size() + c) = -g2[c][r];
  RatVec rhs(n);
  for (std::size_t r = 0; r < n; ++r) rhs[r] = -v.values[r];

  std::vector<bool> is_ray(n, false);
  for (std::size_t i = 0; i < sigma1.rays.size(); ++i) is_ray[i] = true;
  for (std::size_t i = 0; i < sigma2.rays.size(); ++i) is_ray[g1.size() + i] = true;

  const LinearSolve solved = solve_system(a, rhs);
  PairOutcome out;
  switch (solved.status) {
    case LinearSolve::Status::Inconsistent:
      return out;
    case LinearSolve::Status::Underdetermined:
      if (singular_pair_feasible(a, rhs, is_ray)) out.status = PairStatus::Degenerate;
      return out;
    case LinearSolve::Status::Unique:
      break;
  }
  const RatVec& x = solved.x;
  bool boundary = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (!is_ray[k]) continue;
    if (x[k] < 0) return out;
    if (x[k] == 0) boundary = true;
  }
  if (boundary) {
    out.status = PairStatus::Degenerate;
    return out;
  }

  IntersectionPoint p;
  p.surface_coeffs.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(g1.size()));
  p.linear_coeffs.assign(x.begin() + static_cast<std::ptrdiff_t>(g1.size()), x.end());
  p.point.assign(n, Rat(0));
  for (std::size_t c = 0; c < g2.size(); ++c)
    for (std::size_t r = 0; r < n; ++r)
      if (g2[c][r] != 0) p.point[r] += p.linear_coeffs[c] * g2[c][r];
  p.min_coordinate = *std::min_element(p.point.begin(), p.point.end());
  p.index = intersection_index(sigma1, sigma2);
  p.weight = w1 * w2 * p.index;
  out.status = PairStatus::Transversal;
  out.hit = std::move(p);
  return out;
}

std::vector<IntersectionPoint> transversal_intersection(const WeightedFan& f1, const WeightedFan& f2,
                                                        const ShiftVector& v, unsigned threads) {
  const std::size_t n = f1.ambient_dim();
  if (f2.ambient_dim() != n || f1.dim() + f2.dim() != n)
    throw NotComplementary("fans are not of complementary dimension");
  if (v.size() != n) throw std::invalid_argument("shift vector has the wrong length");

  const auto& s1 = f1.facets();
  const auto& s2 = f2.facets();
  const std::size_t total = s1.size() * s2.size();
  std::vector<std::vector<IntersectionPoint>> found;
  std::mutex found_mutex;
  parallel_chunks(total, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<IntersectionPoint> local;
    for (std::size_t k = begin; k < end; ++k) {
      const std::size_t a = k / s2.size();
      const std::size_t b = k % s2.size();
      PairOutcome o = intersect_facet_pair(s1[a], f1.weight(a), v, s2[b], f2.weight(b));
      if (o.status == PairStatus::Degenerate)
        throw DegenerateIntersection("non-generic shift: facet pair (" + std::to_string(a) + ", " +
                                     std::to_string(b) + ") meets on a boundary or in a positive-dimensional set");
      if (o.status != PairStatus::Transversal) continue;
      o.hit->surface_facet = a;
      o.hit->linear_facet = b;
      local.push_back(std::move(*o.hit));
    }
    std::lock_guard lock(found_mutex);
    found.push_back(std::move(local));
  });

  std::vector<IntersectionPoint> points;
  for (auto& chunk : found)
    for (auto& p : chunk) points.push_back(std::move(p));

  std::sort(points.begin(), points.end(),
            [](const IntersectionPoint& x, const IntersectionPoint& y) { return x.point < y.point; });
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].point == points[i - 1].point)
      throw DegenerateIntersection("non-generic shift: two facet pairs meet in the same point");

  std::sort(points.begin(), points.end(), [](const IntersectionPoint& x, const IntersectionPoint& y) {
    return std::tie(x.surface_facet, x.linear_facet) < std::tie(y.surface_facet, y.linear_facet);
  });
  return points;
}

std::string_view case_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::C1_1: return "1.1";
    case CaseLabel::C1_2: return "1.2";
    case CaseLabel::C1_3: return "1.3";
    case CaseLabel::C1_4: return "1.4";
    case CaseLabel::C1_5: return "1.5";
    case CaseLabel::C2_1: return "2.1";
    case CaseLabel::C2_2: return "2.2";
    case CaseLabel::C2_3: return "2.3";
    case CaseLabel::C2_4: return "2.4";
    case CaseLabel::C2_5: return "2.5";
    case CaseLabel::Other: return "other";
  }
  return "other";
}

std::optional<CaseLabel> parse_case_name(std::string_view name) {
  for (CaseLabel c : kCensusCases)
    if (case_name(c) == name) return c;
  if (name == "other") return CaseLabel::Other;
  return std::nullopt;
}

CaseLabel classify_point(const IntersectionPoint& p, const PolytopeEdge& edge, const ShiftVector& v) {
  if (v.size() < 3 || p.point.size() != v.size()) return CaseLabel::Other;
  const Rat& v1 = v.values[0];
  const Rat& v2 = v.values[1];
  const Rat& v3 = v.values[2];
  if (!(v1 < v2 && v2 < v3)) return CaseLabel::Other;

  const Rat& m = p.min_coordinate;
  if (edge.kind == PolytopeEdge::Kind::Head) {
    if (m < v1) return CaseLabel::C1_1;
    if (m == v1) return CaseLabel::C1_2;
    if (m < v2) return CaseLabel::C1_3;
    if (m == v2) return CaseLabel::C1_4;
    return CaseLabel::C1_5;
  }
  if (m < v2) return CaseLabel::C2_1;
  if (m == v2) return CaseLabel::C2_2;
  if (m < v3) return CaseLabel::C2_3;
  if (m == v3) return CaseLabel::C2_4;
  return CaseLabel::C2_5;
}

std::vector<int> minimal_positions(const IntersectionPoint& p) {
  std::vector<int> out;
  for (std::size_t i = 0; i < p.point.size(); ++i)
    if (p.point[i] == p.min_coordinate) out.push_back(static_cast<int>(i));
  return out;
}

DegreeResult compute_degree(const WeightedFan& fan, const DegreeOptions& options) {
  const std::size_t n = fan.ambient_dim();
  const LinearSpace linear = standard_tropical_linear_space(n, fan.dim());

  const std::uint64_t seed_base = options.random_seed.value_or(0x5eed);
  ShiftVector shift;
  if (options.shift)
    shift = *options.shift;
  else if (options.random_seed)
    shift = random_shift(n, seed_base);
  else
    shift = super_increasing_vector(n);

  DegreeResult result;
  for (unsigned attempt = 0;; ++attempt) {
    try {
      result.points = transversal_intersection(fan, linear.fan, shift, options.threads);
      result.shift = shift;
      result.attempts = attempt + 1;
      break;
    } catch (const DegenerateIntersection&) {
      if (attempt >= options.max_retries)
        throw GenericityExhausted("no generic shift found after " + std::to_string(attempt + 1) + " attempts");
      shift = random_shift(n, seed_base + 1 + attempt);
    }
  }
  result.degree = 0;
  for (const auto& p : result.points) result.degree += p.weight;
  return result;
}

Int degree(const WeightedFan& fan, const DegreeOptions& options) { return compute_degree(fan, options).degree; }

std::optional<Int> CaseRow::multiplicity() const {
  if (multiplicities.size() != 1) return std::nullopt;
  return multiplicities.front();
}

const CaseRow& DegreeReport::row(CaseLabel label) const {
  for (const auto& r : rows)
    if (r.label == label) return r;
  static const CaseRow empty{CaseLabel::Other, 0, {}, Int(0)};
  return empty;
}

DegreeReport build_degree_report(const RootSurface& surface, const std::vector<IntersectionPoint>& points,
                                 const ShiftVector& shift) {
  DegreeReport report;
  report.n = surface.n;
  report.shift = shift;
  report.total = 0;

  std::array<CaseRow, 11> rows;
  for (std::size_t i = 0; i < kCensusCases.size(); ++i) rows[i].label = kCensusCases[i];
  rows[10].label = CaseLabel::Other;
  for (auto& r : rows) r.contribution = 0;

  for (const auto& p : points) {
    const CaseLabel label = classify_point(p, surface.edges.at(p.surface_facet), shift);
    CaseRow& row = rows[static_cast<std::size_t>(label)];
    ++row.count;
    row.contribution += p.weight;
    if (std::find(row.multiplicities.begin(), row.multiplicities.end(), p.index) == row.multiplicities.end()) {
      row.multiplicities.push_back(p.index);
      std::sort(row.multiplicities.begin(), row.multiplicities.end());
    }
    report.total += p.weight;
    report.points.push_back({p, label, minimal_positions(p)});
  }
  for (std::size_t i = 0; i < 10; ++i) report.rows.push_back(rows[i]);
  if (rows[10].count > 0) report.rows.push_back(rows[10]);
  return report;
}

DegreeReport degree_report(std::size_t n, unsigned threads) {
  const RootSurface surface = tropical_root_surface(n);
  const LinearSpace linear = standard_tropical_linear_space(n, 2);
  const ShiftVector v = super_increasing_vector(n);
  const auto points = transversal_intersection(surface.fan, linear.fan, v, threads);
  DegreeReport report = build_degree_report(surface, points, v);
  if (report.row(CaseLabel::Other).count > 0)
    throw UnclassifiedPoint(std::to_string(report.row(CaseLabel::Other).count) +
                            " intersection point(s) match no known case");
  return report;
}

namespace {

using Signature = std::multiset<std::tuple<std::size_t, std::size_t, CaseLabel, Int>>;

Signature signature(const RootSurface& surface, const LinearSpace& linear, const ShiftVector& v, unsigned threads) {
  Signature sig;
  for (const auto& p : transversal_intersection(surface.fan, linear.fan, v, threads))
    sig.emplace(p.surface_facet, p.linear_facet, classify_point(p, surface.edges.at(p.surface_facet), v), p.index);
  return sig;
}

}  // namespace

bool genericity_probe(const RootSurface& surface, const LinearSpace& linear, const ShiftVector& base,
                      std::uint64_t epsilon_seed, unsigned threads) {
  try {
    return signature(surface, linear, base, threads) ==
           signature(surface, linear, perturb(base, epsilon_seed), threads);
  } catch (const DegenerateIntersection&) {
    return false;
  }
}

bool genericity_probe(std::size_t n, std::uint64_t epsilon_seed, unsigned threads) {
  const RootSurface surface = tropical_root_surface(n);
  const LinearSpace linear = standard_tropical_linear_space(n, 2);
  return genericity_probe(surface, linear, super_increasing_vector(n), epsilon_seed, threads);
}

}  // namespace tropdeg
