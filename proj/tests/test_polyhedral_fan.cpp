#include "tropdeg/exact_linalg.hpp"
#include "tropdeg/linear_space.hpp"
#include "tropdeg/polyhedral_fan.hpp"
#include "tropdeg/type_a.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace tropdeg;

namespace {

IntVec root(std::size_t n, int i, int j) { return RootA{i - 1, j - 1}.vector(n); }

IntVec sum(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::size_t ray_index(const WeightedFan& fan, const IntVec& r) {
  const auto idx = fan.find_cone(make_cone({r}, fan.ambient_dim()));
  EXPECT_TRUE(idx);
  return idx.value_or(0);
}

}  // namespace

TEST(MakeCone, ReducesContent) {
  const auto c = make_cone({make_int_vec({2, 0, 0})}, 3);
  ASSERT_EQ(c.rays.size(), 1u);
  EXPECT_EQ(c.rays[0], make_int_vec({1, 0, 0}));
}

TEST(MakeCone, KeepsPrimitiveIndependentRays) {
  const auto c = make_cone({root(3, 1, 2), root(3, 1, 3)}, 3);
  EXPECT_EQ(c.dim(), 2u);
  const std::set<IntVec> rays(c.rays.begin(), c.rays.end());
  EXPECT_EQ(rays, (std::set<IntVec>{root(3, 1, 2), root(3, 1, 3)}));
}

TEST(MakeCone, RejectsDependentAndZero) {
  EXPECT_THROW(make_cone({make_int_vec({1, 0}), make_int_vec({2, 0})}, 2), DependentGenerators);
  EXPECT_THROW(make_cone({make_int_vec({0, 0})}, 2), DependentGenerators);
  EXPECT_THROW(make_cone({make_int_vec({1, 0, 0})}, 2), DependentGenerators);
  EXPECT_THROW(make_cone({make_int_vec({1, 1, 0})}, {make_int_vec({2, 2, 0})}, 3), DependentGenerators);
}

TEST(ContainsCone, FaceOfHeadCone) {
  const auto sigma = make_cone({root(3, 1, 2), root(3, 1, 3)}, 3);
  EXPECT_TRUE(contains_cone(sigma, make_cone({root(3, 1, 3)}, 3)));
  EXPECT_FALSE(contains_cone(sigma, make_cone({root(3, 2, 3)}, 3)));
  EXPECT_TRUE(contains_cone(sigma, make_cone({}, 3)));
}

TEST(ContainsCone, InteriorRayAndLineality) {
  const auto sigma = make_cone({root(3, 1, 2), root(3, 1, 3)}, 3);
  EXPECT_TRUE(contains_cone(sigma, make_cone({make_int_vec({2, -1, -1})}, 3)));
  const auto with_lin = make_cone({make_int_vec({1, 0, 0})}, {make_int_vec({1, 1, 1})}, 3);
  EXPECT_TRUE(contains_cone(with_lin, make_cone({make_int_vec({0, -1, -1})}, 3)));
  EXPECT_FALSE(contains_cone(with_lin, make_cone({make_int_vec({-1, 0, 0})}, 3)));
  EXPECT_FALSE(contains_cone(make_cone({make_int_vec({1, 0, 0})}, 3), with_lin));
}

TEST(PrimitiveQuotientRay, HeadCone) {
  const auto tau = make_cone({root(3, 1, 3)}, 3);
  const auto u = primitive_quotient_ray(make_cone({root(3, 1, 2), root(3, 1, 3)}, 3), tau);
  // representative ≡ e1 - e2 modulo Z(e1 - e3)
  const std::vector<IntVec> g{root(3, 1, 3)};
  const QuotientLattice q(g, 3);
  IntVec diff(3);
  for (std::size_t i = 0; i < 3; ++i) diff[i] = u.representative[i] - root(3, 1, 2)[i];
  EXPECT_TRUE(q.contains(diff));
  EXPECT_EQ(content(u.quotient_coords), 1);
}

TEST(PrimitiveQuotientRay, TailCone) {
  const auto tau = make_cone({root(3, 1, 3)}, 3);
  const auto u = primitive_quotient_ray(make_cone({root(3, 1, 3), root(3, 2, 3)}, 3), tau);
  const std::vector<IntVec> g{root(3, 1, 3)};
  const QuotientLattice q(g, 3);
  IntVec diff(3);
  for (std::size_t i = 0; i < 3; ++i) diff[i] = u.representative[i] - root(3, 2, 3)[i];
  EXPECT_TRUE(q.contains(diff));
}

TEST(PrimitiveQuotientRay, PlanarQuotient) {
  // sigma = cone((1,1), (1,0)); Z^2 / Z(1,1) ≅ Z and e1 maps to a generator
  const auto sigma = make_cone({make_int_vec({2, 2}), make_int_vec({1, 0})}, 2);
  const auto tau = make_cone({make_int_vec({1, 1})}, 2);
  const auto u = primitive_quotient_ray(sigma, tau);
  ASSERT_EQ(u.quotient_coords.size(), 1u);
  EXPECT_EQ(abs(u.quotient_coords[0]), 1);
  const std::vector<IntVec> g{make_int_vec({1, 1})};
  const QuotientLattice q(g, 2);
  EXPECT_EQ(q.quotient_coordinates(make_int_vec({1, 0})), u.quotient_coords);
}

TEST(PrimitiveQuotientRay, RejectsNonFaces) {
  const auto sigma = make_cone({root(3, 1, 2), root(3, 1, 3)}, 3);
  EXPECT_THROW(primitive_quotient_ray(sigma, make_cone({root(3, 2, 3)}, 3)), BadFacePair);
  EXPECT_THROW(primitive_quotient_ray(sigma, make_cone({}, 3)), BadFacePair);
}

TEST(CheckBalancedAt, HexagonFan) {
  const auto s = tropical_root_surface(3);
  const auto r = check_balanced_at(s.fan, make_cone({root(3, 1, 3)}, 3));
  EXPECT_TRUE(r.balanced);
  EXPECT_EQ(r.incident_facets.size(), 2u);
  // (e1 - e2) + (e2 - e3) = e1 - e3 lies on the ray itself
  const auto& rays = s.fan.facets();
  IntVec other_sum(3, Int(0));
  for (auto f : r.incident_facets)
    for (const auto& g : rays[f].rays)
      if (g != root(3, 1, 3)) other_sum = sum(other_sum, g);
  EXPECT_EQ(other_sum, root(3, 1, 3));
}

TEST(CheckBalancedAt, CuboctahedronFan) {
  const auto s = tropical_root_surface(4);
  const auto r = check_balanced_at(s.fan, make_cone({root(4, 1, 4)}, 4));
  EXPECT_TRUE(r.balanced);
  EXPECT_EQ(r.incident_facets.size(), 4u);
  IntVec other_sum(4, Int(0));
  for (auto f : r.incident_facets)
    for (const auto& g : s.fan.facets()[f].rays)
      if (g != root(4, 1, 4)) other_sum = sum(other_sum, g);
  // (n - 2)(e1 - e4)
  EXPECT_EQ(other_sum, make_int_vec({2, 0, 0, -2}));
}

TEST(CheckBalancedAt, MutatedWeightBreaksBalance) {
  const auto s = tropical_root_surface(4);
  std::vector<Int> w(s.fan.weights());
  w[0] = 2;
  const auto mutated = s.fan.with_weights(w);
  const auto& altered = mutated.facets()[0];
  for (const auto& r : altered.rays) EXPECT_FALSE(check_balanced_at(mutated, make_cone({r}, 4)).balanced);
  EXPECT_THROW(check_balanced_at(mutated, altered), BadFacePair);
}

TEST(IsTropicalFan, RootSurfaces) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto s = tropical_root_surface(n);
    EXPECT_TRUE(is_tropical_fan(s.fan).balanced()) << "n=" << n;
  }
}

TEST(IsTropicalFan, LinearSpaces) {
  for (std::size_t n : {4u, 5u}) EXPECT_TRUE(is_tropical_fan(standard_tropical_linear_space(n, 2).fan).balanced());
}

TEST(IsTropicalFan, SingleTwoCone) {
  const auto a = make_int_vec({1, 0, 0});
  const auto b = make_int_vec({0, 1, 0});
  WeightedFan fan(3, 2, {{make_cone({}, 3)}, {make_cone({a}, 3), make_cone({b}, 3)}, {make_cone({a, b}, 3)}}, {Int(1)});
  const auto report = is_tropical_fan(fan);
  EXPECT_EQ(report.failing_ridges, (std::vector<std::size_t>{0, 1}));
}

TEST(IsTropicalFan, MutationFailsAtExactlyTheAlteredRays) {
  const auto s = tropical_root_surface(4);
  for (std::size_t f : {0u, 7u, 23u}) {
    std::vector<Int> w(s.fan.weights());
    w[f] = 2;
    const auto mutated = s.fan.with_weights(w);
    const auto report = is_tropical_fan(mutated);
    std::vector<std::size_t> expected;
    for (const auto& r : s.fan.facets()[f].rays) expected.push_back(ray_index(mutated, r));
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(report.failing_ridges, expected);
  }
}

TEST(IsTropicalFan, ThreadCountDoesNotMatter) {
  const auto s = tropical_root_surface(5);
  std::vector<Int> w(s.fan.weights());
  w[11] = 3;
  const auto mutated = s.fan.with_weights(w);
  EXPECT_EQ(is_tropical_fan(mutated, 1).failing_ridges, is_tropical_fan(mutated, 4).failing_ridges);
}

TEST(WeightedFan, ValidatesConstruction) {
  const auto a = make_int_vec({1, 0});
  const auto b = make_int_vec({0, 1});
  const auto zero = make_cone({}, 2);
  EXPECT_THROW(WeightedFan(2, 2, {{zero}, {make_cone({a}, 2)}, {make_cone({a, b}, 2)}}, {Int(1)}), InvalidFan);
  EXPECT_THROW(WeightedFan(2, 1, {{zero}, {make_cone({a}, 2)}}, {Int(-1)}), InvalidFan);
  EXPECT_THROW(WeightedFan(2, 1, {{zero}, {make_cone({a}, 2)}}, {}), InvalidFan);
  EXPECT_THROW(WeightedFan(2, 1, {{zero}, {make_cone({a}, 2), make_cone({a}, 2)}}, {Int(1), Int(1)}), InvalidFan);
  EXPECT_NO_THROW(WeightedFan(2, 1, {{zero}, {make_cone({a}, 2)}}, {Int(1)}));
}

TEST(WeightedFan, FindConeIgnoresRayOrder) {
  const auto s = tropical_root_surface(4);
  const auto& f = s.fan.facets()[5];
  const auto swapped = make_cone({f.rays[1], f.rays[0]}, 4);
  EXPECT_EQ(s.fan.find_cone(swapped), std::optional<std::size_t>(5));
}

TEST(AuditFan, AcceptsRootSurfaceAndLinearSpace) {
  EXPECT_TRUE(audit_fan(tropical_root_surface(4).fan).ok());
  EXPECT_TRUE(audit_fan(standard_tropical_linear_space(4, 2).fan).ok());
}

TEST(AuditFan, DetectsOverlap) {
  const auto a = make_int_vec({1, 0});
  const auto b = make_int_vec({0, 1});
  const auto c = make_int_vec({1, 1});
  const auto d = make_int_vec({1, -1});
  WeightedFan fan(2, 2,
                  {{make_cone({}, 2)},
                   {make_cone({a}, 2), make_cone({b}, 2), make_cone({c}, 2), make_cone({d}, 2)},
                   {make_cone({a, b}, 2), make_cone({c, d}, 2)}},
                  {Int(1), Int(1)});
  EXPECT_FALSE(audit_fan(fan).ok());
}
