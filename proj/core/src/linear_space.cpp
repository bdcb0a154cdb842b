#include "tropdeg/linear_space.hpp"

#include <algorithm>
#include <map>

namespace tropdeg {

IntVec indicator(std::size_t n, const std::vector<int>& subset) {
  IntVec v(n);
  for (int i : subset) v.at(static_cast<std::size_t>(i)) = 1;
  return v;
}

std::vector<IntVec> FlagFacet::rays(std::size_t n) const {
  std::vector<IntVec> out;
  std::vector<int> prefix;
  for (int i : chain) {
    prefix.push_back(i);
    out.push_back(indicator(n, prefix));
  }
  return out;
}

std::string FlagFacet::label() const {
  std::string s = "σ_{";
  for (std::size_t k = 0; k < chain.size(); ++k) s += (k ? "," : "") + std::to_string(chain[k] + 1);
  return s + "}";
}

namespace {

void ordered_tuples(int n, std::size_t length, std::vector<int>& current, std::vector<bool>& used,
                    std::vector<FlagFacet>& out) {
  if (current.size() == length) {
    out.push_back(FlagFacet{current});
    return;
  }
  for (int i = 0; i < n; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    used[static_cast<std::size_t>(i)] = true;
    current.push_back(i);
    ordered_tuples(n, length, current, used, out);
    current.pop_back();
    used[static_cast<std::size_t>(i)] = false;
  }
}

}  // namespace

LinearSpace standard_tropical_linear_space(std::size_t n, std::size_t d) {
  if (d < 1 || d + 1 > n) throw BadParams("Σ_{n,n-d} needs 1 <= d <= n-1");
  const std::size_t chain_length = n - d - 1;
  std::vector<FlagFacet> facets;
  std::vector<int> current;
  std::vector<bool> used(n, false);
  ordered_tuples(static_cast<int>(n), chain_length, current, used, facets);

  std::vector<int> everything(n);
  for (std::size_t i = 0; i < n; ++i) everything[i] = static_cast<int>(i);
  const std::vector<IntVec> lineality{indicator(n, everything)};

  // A face keeps a subset of the flag's sets; it is identified by that set
  // of subsets, so faces shared by several chains are listed once.
  std::vector<std::map<std::vector<IntVec>, Cone>> faces(chain_length + 1);
  std::vector<Cone> maximal;
  for (const auto& f : facets) {
    const auto rays = f.rays(n);
    maximal.push_back(make_cone(rays, lineality, n));
    const std::size_t k = rays.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<IntVec> sub;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (std::size_t{1} << b)) sub.push_back(rays[b]);
      if (sub.size() == k) continue;
      std::vector<IntVec> key = sub;
      std::sort(key.begin(), key.end());
      auto& bucket = faces[sub.size()];
      if (!bucket.count(key)) bucket.emplace(std::move(key), make_cone(sub, lineality, n));
    }
  }

  // Cones of dimension k+1 carry k rays plus the lineality line; dimension 0
  // is empty because every cone contains e_[n].
  std::vector<std::vector<Cone>> by_dim(n - d + 1);
  for (std::size_t k = 0; k < chain_length; ++k)
    for (auto& [key, cone] : faces[k]) by_dim[k + 1].push_back(std::move(cone));
  by_dim[n - d] = std::move(maximal);
  std::vector<Int> weights(by_dim[n - d].size(), Int(1));
  WeightedFan fan(n, n - d, std::move(by_dim), std::move(weights));
  return LinearSpace{n, d, std::move(facets), std::move(fan)};
}

bool support_contains(const RatVec& x, std::size_t d) {
  if (x.empty()) return false;
  const Rat& m = *std::min_element(x.begin(), x.end());
  const auto hits = static_cast<std::size_t>(std::count(x.begin(), x.end(), m));
  return hits >= d + 1;
}

}  // namespace tropdeg
