#include "tropdeg/type_a.hpp"

#include "tropdeg/exact_lp.hpp"

#include <algorithm>
#include <set>

namespace tropdeg {

IntVec RootA::vector(std::size_t n) const {
  IntVec v(n);
  v.at(static_cast<std::size_t>(i)) = 1;
  v.at(static_cast<std::size_t>(j)) = -1;
  return v;
}

std::string RootA::label() const { return "e" + std::to_string(i + 1) + "-e" + std::to_string(j + 1); }

std::pair<RootA, RootA> PolytopeEdge::endpoints() const {
  if (kind == Kind::Head) return {RootA{apex, a}, RootA{apex, b}};
  // (a, apex) < (b, apex) since a < b
  return {RootA{a, apex}, RootA{b, apex}};
}

std::string PolytopeEdge::label() const {
  const auto one = [](int x) { return std::to_string(x + 1); };
  if (kind == Kind::Head) return "A_{" + one(apex) + "," + one(a) + one(b) + "}";
  return "A_{" + one(a) + one(b) + "," + one(apex) + "}";
}

std::vector<RootA> roots_a(std::size_t n) {
  if (n < 2) throw BadN("A_{n-1} needs n >= 2");
  std::vector<RootA> out;
  out.reserve(n * (n - 1));
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (int j = 0; j < static_cast<int>(n); ++j)
      if (i != j) out.push_back({i, j});
  return out;
}

bool root_system_axioms_check(const std::vector<IntVec>& roots) {
  std::set<IntVec> members(roots.begin(), roots.end());
  auto dot = [](const IntVec& x, const IntVec& y) {
    Int s = 0;
    for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
    return s;
  };
  for (const auto& a : roots) {
    if (is_zero(a)) return false;
    const Int aa = dot(a, a);
    for (const auto& b : roots) {
      if (b.size() != a.size()) return false;
      const Int ab2 = 2 * dot(a, b);
      if (!mpz_divisible_p(ab2.get_mpz_t(), aa.get_mpz_t())) return false;
      const Int cartan = ab2 / aa;
      IntVec reflected(b.size());
      for (std::size_t k = 0; k < b.size(); ++k) reflected[k] = b[k] - cartan * a[k];
      if (!members.count(reflected)) return false;
      // b parallel to a must be ±a
      if (&a != &b && dot(a, b) * dot(a, b) == aa * dot(b, b)) {
        IntVec neg(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) neg[k] = -a[k];
        if (b != a && b != neg) return false;
      }
    }
  }
  return true;
}

std::vector<PolytopeEdge> root_polytope_edges(std::size_t n) {
  if (n < 3) throw BadN("root polytope edges need n >= 3");
  std::vector<PolytopeEdge> out;
  out.reserve(n * (n - 1) * (n - 2));
  const int m = static_cast<int>(n);
  for (int apex = 0; apex < m; ++apex)
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        if (a == apex || b == apex) continue;
        out.push_back({PolytopeEdge::Kind::Head, apex, a, b});
        out.push_back({PolytopeEdge::Kind::Tail, apex, a, b});
      }
  std::sort(out.begin(), out.end(),
            [](const PolytopeEdge& x, const PolytopeEdge& y) { return x.endpoints() < y.endpoints(); });
  return out;
}

std::vector<RootPair> edge_oracle(std::size_t n) {
  if (n < 3 || n > kEdgeOracleMaxN) throw BadN("edge oracle supports 3 <= n <= 6");
  const auto roots = roots_a(n);
  std::vector<IntVec> vecs;
  for (const auto& r : roots) vecs.push_back(r.vector(n));

  std::vector<RootPair> out;
  const std::vector<bool> free_vars(n, false);
  for (std::size_t r = 0; r < roots.size(); ++r)
    for (std::size_t s = r + 1; s < roots.size(); ++s) {
      std::vector<LinearConstraint> cons;
      LinearConstraint eq{RatVec(n), Relation::Equal, Rat(0)};
      for (std::size_t k = 0; k < n; ++k) eq.coefficients[k] = vecs[r][k] - vecs[s][k];
      cons.push_back(std::move(eq));
      for (std::size_t t = 0; t < roots.size(); ++t) {
        if (t == r || t == s) continue;
        LinearConstraint sep{RatVec(n), Relation::GreaterEqual, Rat(1)};
        for (std::size_t k = 0; k < n; ++k) sep.coefficients[k] = vecs[r][k] - vecs[t][k];
        cons.push_back(std::move(sep));
      }
      if (find_feasible_point(n, free_vars, cons)) out.emplace_back(roots[r], roots[s]);
    }
  return out;
}

RootSurface tropical_root_surface(std::size_t n) {
  if (n < 3) throw BadN("S(A_{n-1}) needs n >= 3");
  auto roots = roots_a(n);
  auto edges = root_polytope_edges(n);

  std::vector<std::vector<Cone>> cones(3);
  cones[0].push_back(make_cone({}, n));
  for (const auto& r : roots) cones[1].push_back(make_cone({r.vector(n)}, n));
  for (const auto& e : edges) {
    const auto [r1, r2] = e.endpoints();
    cones[2].push_back(make_cone({r1.vector(n), r2.vector(n)}, n));
  }
  std::vector<Int> weights(cones[2].size(), Int(1));
  WeightedFan fan(n, 2, std::move(cones), std::move(weights));
  return RootSurface{n, std::move(roots), std::move(edges), std::move(fan)};
}

}  // namespace tropdeg
