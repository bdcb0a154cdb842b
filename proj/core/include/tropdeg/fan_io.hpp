#pragma once

// JSON exchange format for weighted fans:
//
//   { "ambient_dim": n, "dim": d,
//     "cones":   [ { "dim": k, "generators": [[...], ...], "lineality": [[...]] }, ... ],
//     "weights": [ { "cone": index, "w": weight }, ... ] }
//
// "cones" lists every cone of every dimension in ascending dimension order;
// "lineality" is optional.  "cone" in "weights" indexes the "cones" array and
// must refer to a maximal cone; maximal cones without an entry are an error.

#include "tropdeg/polyhedral_fan.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace tropdeg {

class FanParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json fan_to_json(const WeightedFan& fan);

/// Throws FanParseError on schema violations and InvalidFan /
/// DependentGenerators on geometric ones.
WeightedFan fan_from_json(const nlohmann::json& j);

WeightedFan read_fan_file(const std::string& path);
void write_fan_file(const WeightedFan& fan, const std::string& path);

}  // namespace tropdeg
