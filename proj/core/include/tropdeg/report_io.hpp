#pragma once

// JSON documents produced by the command-line tool.
//
// Degree report:
//   { "n": 4,
//     "cases": [ { "label": "1.2", "count": 3, "multiplicity": 1, "contribution": 3 }, ... ],
//     "total": 10,
//     "shift_vector": ["0", "1", "10", "100"] }
//
// "multiplicity" is null for empty cases; a case whose points carry
// different indices also lists them under "multiplicities".  Shift entries
// are exact strings ("p" or "p/q").
//
// With points requested, "points" lists every intersection point:
//   { "point": ["81", "10", "10", "10"], "surface_facet": 17, "linear_facet": 0,
//     "case": "2.4", "index": 1, "weight": 1, "minimal_positions": [2, 3, 4] }
// Facet indices refer to S(A_{n-1}) and Σ_{n,n-2} in construction order;
// minimal positions are 1-based.
//
// Edge list:
//   { "n": 4, "count": 24,
//     "edges": [ { "label": "A_{1,23}", "kind": "head", "roots": [[1,2],[1,3]] }, ... ],
//     "adjacency": [ { "root": [1,2], "neighbors": [[1,3], ...] }, ... ] }
//
// Roots [i, j] stand for e_i - e_j with 1-based indices.

#include "tropdeg/stable_intersection.hpp"
#include "tropdeg/type_a.hpp"

#include <nlohmann/json.hpp>

#include <vector>

namespace tropdeg {

nlohmann::json degree_report_to_json(const DegreeReport& report, bool include_points = false);
/// Rebuilds rows, total and shift; a "points" array is ignored.  Throws
/// std::invalid_argument on schema violations.
DegreeReport degree_report_from_json(const nlohmann::json& j);

nlohmann::json shift_to_json(const ShiftVector& v);
ShiftVector shift_from_json(const nlohmann::json& j);

nlohmann::json edges_to_json(std::size_t n, const std::vector<PolytopeEdge>& edges);
nlohmann::json root_pairs_to_json(const std::vector<RootPair>& pairs);

}  // namespace tropdeg
