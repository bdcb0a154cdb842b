#include "tropdeg/fan_io.hpp"

#include <fstream>

namespace tropdeg {

namespace {

nlohmann::json vectors_to_json(const std::vector<IntVec>& vs) {
  auto out = nlohmann::json::array();
  for (const auto& v : vs) {
    auto row = nlohmann::json::array();
    for (const auto& x : v) {
      if (!x.fits_slong_p()) throw FanParseError("generator entry too large for JSON export");
      row.push_back(x.get_si());
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<IntVec> vectors_from_json(const nlohmann::json& j, std::size_t n, const char* what) {
  if (!j.is_array()) throw FanParseError(std::string(what) + " must be an array");
  std::vector<IntVec> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n)
      throw FanParseError(std::string(what) + " entries must be integer arrays of length ambient_dim");
    IntVec v;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw FanParseError(std::string(what) + " entries must be integers");
      v.emplace_back(x.get<long>());
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t require_count(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
    throw FanParseError(std::string("missing or invalid '") + key + "'");
  return j[key].get<std::size_t>();
}

}  // namespace

nlohmann::json fan_to_json(const WeightedFan& fan) {
  nlohmann::json j;
  j["ambient_dim"] = fan.ambient_dim();
  j["dim"] = fan.dim();
  auto cones = nlohmann::json::array();
  std::size_t facet_offset = 0;
  for (std::size_t k = 0; k <= fan.dim(); ++k) {
    if (k == fan.dim()) facet_offset = cones.size();
    for (const Cone& c : fan.cones(k)) {
      nlohmann::json cj;
      cj["dim"] = k;
      cj["generators"] = vectors_to_json(c.rays);
      if (!c.lineality.empty()) cj["lineality"] = vectors_to_json(c.lineality);
      cones.push_back(std::move(cj));
    }
  }
  auto weights = nlohmann::json::array();
  for (std::size_t i = 0; i < fan.facets().size(); ++i) {
    if (!fan.weight(i).fits_slong_p()) throw FanParseError("weight too large for JSON export");
    weights.push_back({{"cone", facet_offset + i}, {"w", fan.weight(i).get_si()}});
  }
  j["cones"] = std::move(cones);
  j["weights"] = std::move(weights);
  return j;
}

WeightedFan fan_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FanParseError("fan document must be a JSON object");
  const std::size_t n = require_count(j, "ambient_dim");
  const std::size_t d = require_count(j, "dim");
  if (d > n) throw FanParseError("dim exceeds ambient_dim");
  if (!j.contains("cones") || !j["cones"].is_array()) throw FanParseError("missing 'cones' array");

  std::vector<std::vector<Cone>> by_dim(d + 1);
  // flat index -> (dimension, position)
  std::vector<std::pair<std::size_t, std::size_t>> where;
  for (const auto& cj : j["cones"]) {
    if (!cj.is_object()) throw FanParseError("cone entries must be objects");
    const std::size_t k = require_count(cj, "dim");
    if (k > d) throw FanParseError("cone dimension exceeds fan dimension");
    if (!cj.contains("generators")) throw FanParseError("cone without 'generators'");
    const auto rays = vectors_from_json(cj["generators"], n, "generators");
    std::vector<IntVec> lin;
    if (cj.contains("lineality")) lin = vectors_from_json(cj["lineality"], n, "lineality");
    Cone c = make_cone(rays, lin, n);
    if (c.dim() != k) throw FanParseError("cone 'dim' does not match its generators");
    where.emplace_back(k, by_dim[k].size());
    by_dim[k].push_back(std::move(c));
  }

  std::vector<std::optional<Int>> weights(by_dim[d].size());
  if (!j.contains("weights") || !j["weights"].is_array()) throw FanParseError("missing 'weights' array");
  for (const auto& wj : j["weights"]) {
    if (!wj.is_object()) throw FanParseError("weight entries must be objects");
    const std::size_t idx = require_count(wj, "cone");
    const std::size_t w = require_count(wj, "w");
    if (idx >= where.size() || where[idx].first != d) throw FanParseError("weight refers to a non-maximal cone");
    auto& slot = weights[where[idx].second];
    if (slot) throw FanParseError("maximal cone weighted twice");
    slot = Int(static_cast<unsigned long>(w));
  }
  std::vector<Int> ws;
  for (auto& w : weights) {
    if (!w) throw FanParseError("maximal cone without weight");
    ws.push_back(*w);
  }
  return WeightedFan(n, d, std::move(by_dim), std::move(ws));
}

WeightedFan read_fan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FanParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FanParseError(path + ": " + e.what());
  }
  return fan_from_json(j);
}

void write_fan_file(const WeightedFan& fan, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FanParseError("cannot write " + path);
  out << fan_to_json(fan).dump(2) << '\n';
}

}  // namespace tropdeg
