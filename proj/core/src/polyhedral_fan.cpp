#include "tropdeg/polyhedral_fan.hpp"

#include "tropdeg/exact_lp.hpp"
#include "tropdeg/parallel.hpp"

#include <algorithm>

namespace tropdeg {

namespace {

IntVec sign_normalized(IntVec v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

// Lookup key: sorted rays, a separator, sorted lineality.
std::vector<IntVec> cone_key(const Cone& c) {
  std::vector<IntVec> rays = c.rays;
  std::vector<IntVec> lin = c.lineality;
  std::sort(rays.begin(), rays.end());
  std::sort(lin.begin(), lin.end());
  rays.emplace_back();  // empty vector never occurs as a generator
  rays.insert(rays.end(), lin.begin(), lin.end());
  return rays;
}

Cone drop_ray(const Cone& c, std::size_t i) {
  Cone face = c;
  face.rays.erase(face.rays.begin() + static_cast<std::ptrdiff_t>(i));
  return face;
}

std::string describe(const Cone& c) {
  std::string s = "cone(";
  auto put = [&](const IntVec& v) {
    s += "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    s += "]";
  };
  for (std::size_t i = 0; i < c.rays.size(); ++i) {
    if (i) s += ",";
    put(c.rays[i]);
  }
  if (!c.lineality.empty()) {
    s += "; lin ";
    for (const auto& l : c.lineality) put(l);
  }
  return s + ")";
}

}  // namespace

std::vector<IntVec> Cone::generators() const {
  std::vector<IntVec> out = rays;
  out.insert(out.end(), lineality.begin(), lineality.end());
  return out;
}

Cone make_cone(const std::vector<IntVec>& rays, std::size_t ambient_dim) { return make_cone(rays, {}, ambient_dim); }

Cone make_cone(const std::vector<IntVec>& rays, const std::vector<IntVec>& lineality, std::size_t ambient_dim) {
  Cone c;
  c.ambient_dim = ambient_dim;
  for (const auto& r : rays) {
    if (r.size() != ambient_dim) throw DependentGenerators("generator has wrong dimension");
    if (is_zero(r)) throw DependentGenerators("zero generator");
    c.rays.push_back(primitive(r));
  }
  for (const auto& l : lineality) {
    if (l.size() != ambient_dim) throw DependentGenerators("lineality generator has wrong dimension");
    if (is_zero(l)) throw DependentGenerators("zero lineality generator");
    c.lineality.push_back(sign_normalized(primitive(l)));
  }
  if (c.dim() > ambient_dim || (c.dim() > 0 && rank(IntMatrix::from_rows(c.generators(), ambient_dim)) < c.dim()))
    throw DependentGenerators("generators are linearly dependent");
  return c;
}

bool contains_cone(const Cone& sigma, const Cone& tau) {
  if (sigma.ambient_dim != tau.ambient_dim) throw FanError("cones live in different ambient spaces");
  const std::size_t n = sigma.ambient_dim;
  const std::size_t nrays = sigma.rays.size();
  std::optional<IntMatrix> cols;
  auto coefficients = [&](const IntVec& x) {
    if (!cols) cols = IntMatrix::from_columns(sigma.generators(), n);
    if (sigma.dim() == 0) return is_zero(x) ? std::optional<RatVec>(RatVec{}) : std::nullopt;
    return solve_any(*cols, to_rat_vec(x));
  };
  auto in_span = [&](const IntVec& x, const RatVec& coeffs) {
    RatVec recon(n);
    const auto gens = sigma.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) recon[j] += coeffs[i] * gens[i][j];
    return recon == to_rat_vec(x);
  };

  for (const auto& r : tau.rays) {
    if (std::find(sigma.rays.begin(), sigma.rays.end(), r) != sigma.rays.end()) continue;
    const auto c = coefficients(r);
    if (!c || !in_span(r, *c)) return false;
    for (std::size_t i = 0; i < nrays; ++i)
      if ((*c)[i] < 0) return false;
  }
  for (const auto& l : tau.lineality) {
    if (std::find(sigma.lineality.begin(), sigma.lineality.end(), l) != sigma.lineality.end()) continue;
    const auto c = coefficients(l);
    if (!c || !in_span(l, *c)) return false;
    for (std::size_t i = 0; i < nrays; ++i)
      if ((*c)[i] != 0) return false;
  }
  return true;
}

namespace {

std::optional<QuotientRay> quotient_ray_in(const QuotientLattice& q, const Cone& sigma, const Cone& tau) {
  if (sigma.dim() != tau.dim() + 1 || !contains_cone(sigma, tau)) return std::nullopt;
  std::optional<IntVec> outside;
  for (const auto& l : sigma.lineality)
    if (!q.contains(l)) return std::nullopt;  // image would be a line, not a ray
  for (const auto& r : sigma.rays) {
    if (q.contains(r)) continue;
    if (outside) return std::nullopt;
    outside = r;
  }
  if (!outside) return std::nullopt;
  QuotientRay out;
  out.quotient_coords = primitive(q.quotient_coordinates(*outside));
  out.representative = q.lift(out.quotient_coords);
  return out;
}

}  // namespace

QuotientRay primitive_quotient_ray(const Cone& sigma, const Cone& tau) {
  if (sigma.ambient_dim != tau.ambient_dim) throw BadFacePair("cones live in different ambient spaces");
  const QuotientLattice q(tau.generators(), tau.ambient_dim);
  auto ray = quotient_ray_in(q, sigma, tau);
  if (!ray) throw BadFacePair("not a codimension-one face pair: " + describe(sigma) + " / " + describe(tau));
  return *ray;
}

WeightedFan::WeightedFan(std::size_t ambient_dim, std::size_t dim, std::vector<std::vector<Cone>> cones_by_dim,
                         std::vector<Int> weights)
    : ambient_dim_(ambient_dim), dim_(dim), cones_by_dim_(std::move(cones_by_dim)), weights_(std::move(weights)) {
  if (dim_ > ambient_dim_) throw InvalidFan("fan dimension exceeds ambient dimension");
  if (cones_by_dim_.size() != dim_ + 1) throw InvalidFan("cone lists must cover dimensions 0.." + std::to_string(dim_));
  if (weights_.size() != cones_by_dim_[dim_].size()) throw InvalidFan("one weight per maximal cone is required");
  for (const auto& w : weights_)
    if (w < 0) throw InvalidFan("weights must be natural numbers");

  index_.resize(dim_ + 1);
  for (std::size_t k = 0; k <= dim_; ++k) {
    for (std::size_t i = 0; i < cones_by_dim_[k].size(); ++i) {
      const Cone& c = cones_by_dim_[k][i];
      if (c.ambient_dim != ambient_dim_) throw InvalidFan("cone in wrong ambient dimension");
      if (c.dim() != k) throw InvalidFan("cone listed under dimension " + std::to_string(k) + " has dimension " +
                                         std::to_string(c.dim()));
      if (!index_[k].emplace(cone_key(c), i).second) throw InvalidFan("duplicate cone " + describe(c));
    }
  }
  if (dim_ == 0) return;
  for (const Cone& f : facets())
    for (std::size_t i = 0; i < f.rays.size(); ++i)
      if (!find_cone(drop_ray(f, i))) throw InvalidFan("missing codimension-one face of " + describe(f));
}

const std::vector<Cone>& WeightedFan::ridges() const {
  static const std::vector<Cone> none;
  return dim_ == 0 ? none : cones_by_dim_[dim_ - 1];
}

WeightedFan WeightedFan::with_weights(std::vector<Int> weights) const {
  return WeightedFan(ambient_dim_, dim_, cones_by_dim_, std::move(weights));
}

std::optional<std::size_t> WeightedFan::find_cone(const Cone& cone) const {
  if (cone.dim() > dim_) return std::nullopt;
  const auto& idx = index_[cone.dim()];
  const auto it = idx.find(cone_key(cone));
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

BalanceResult check_balanced_at(const WeightedFan& fan, const Cone& tau) {
  if (fan.dim() == 0 || tau.dim() + 1 != fan.dim())
    throw BadFacePair("balancing is checked at codimension-one cones only");
  const QuotientLattice q(tau.generators(), fan.ambient_dim());
  BalanceResult out;
  out.residual.assign(q.quotient_rank(), Int(0));
  out.lifted_sum.assign(fan.ambient_dim(), Int(0));
  const auto& facets = fan.facets();
  for (std::size_t s = 0; s < facets.size(); ++s) {
    const auto ray = quotient_ray_in(q, facets[s], tau);
    if (!ray) continue;
    out.incident_facets.push_back(s);
    const Int& w = fan.weight(s);
    for (std::size_t i = 0; i < out.residual.size(); ++i) out.residual[i] += w * ray->quotient_coords[i];
    for (std::size_t i = 0; i < out.lifted_sum.size(); ++i) out.lifted_sum[i] += w * ray->representative[i];
  }
  out.balanced = is_zero(out.residual);
  return out;
}

TropicalFanReport is_tropical_fan(const WeightedFan& fan, unsigned threads) {
  const auto& ridges = fan.ridges();
  std::vector<char> failed(ridges.size(), 0);
  parallel_chunks(ridges.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) failed[i] = check_balanced_at(fan, ridges[i]).balanced ? 0 : 1;
  });
  TropicalFanReport report;
  for (std::size_t i = 0; i < failed.size(); ++i)
    if (failed[i]) report.failing_ridges.push_back(i);
  return report;
}

FanAudit audit_fan(const WeightedFan& fan) {
  FanAudit audit;
  for (std::size_t k = 1; k <= fan.dim(); ++k)
    for (const Cone& c : fan.cones(k))
      for (std::size_t i = 0; i < c.rays.size(); ++i)
        if (!fan.find_cone(drop_ray(c, i))) audit.problems.push_back("face of " + describe(c) + " is not listed");

  const auto& facets = fan.facets();
  const std::size_t n = fan.ambient_dim();
  for (std::size_t a = 0; a < facets.size(); ++a) {
    for (std::size_t b = a + 1; b < facets.size(); ++b) {
      const Cone& s1 = facets[a];
      const Cone& s2 = facets[b];
      // Look for x = sum a_i g_i = sum b_j h_j whose coefficients on the rays
      // of s1 not shared with s2 sum to at least one.  Feasible means the
      // intersection is not the common face.
      const std::size_t vars = s1.dim() + s2.dim();
      std::vector<bool> nonneg(vars, false);
      for (std::size_t i = 0; i < s1.rays.size(); ++i) nonneg[i] = true;
      for (std::size_t j = 0; j < s2.rays.size(); ++j) nonneg[s1.dim() + j] = true;
      std::vector<LinearConstraint> cons;
      const auto g1 = s1.generators();
      const auto g2 = s2.generators();
      for (std::size_t row = 0; row < n; ++row) {
        LinearConstraint c{RatVec(vars), Relation::Equal, Rat(0)};
        for (std::size_t i = 0; i < g1.size(); ++i) c.coefficients[i] = g1[i][row];
        for (std::size_t j = 0; j < g2.size(); ++j) c.coefficients[g1.size() + j] = -g2[j][row];
        cons.push_back(std::move(c));
      }
      LinearConstraint outside{RatVec(vars), Relation::GreaterEqual, Rat(1)};
      bool any_outside = false;
      for (std::size_t i = 0; i < s1.rays.size(); ++i)
        if (std::find(s2.rays.begin(), s2.rays.end(), s1.rays[i]) == s2.rays.end()) {
          outside.coefficients[i] = 1;
          any_outside = true;
        }
      if (!any_outside) continue;
      cons.push_back(std::move(outside));
      if (find_feasible_point(vars, nonneg, cons))
        audit.problems.push_back("maximal cones " + std::to_string(a) + " and " + std::to_string(b) +
                                 " meet outside their common face");
    }
  }
  return audit;
}

}  // namespace tropdeg
