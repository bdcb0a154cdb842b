#include "tropdeg/report_io.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tropdeg {

namespace {

nlohmann::json int_json(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer too large for JSON output");
  return z.get_si();
}

Int int_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  return Int(j.get<long>());
}

nlohmann::json root_json(const RootA& r) { return nlohmann::json::array({r.i + 1, r.j + 1}); }

}  // namespace

nlohmann::json shift_to_json(const ShiftVector& v) {
  auto out = nlohmann::json::array();
  for (const auto& x : v.values) out.push_back(to_string(x));
  return out;
}

ShiftVector shift_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("shift_vector must be an array");
  ShiftVector v;
  for (const auto& x : j) {
    if (x.is_string())
      v.values.push_back(parse_rat(x.get<std::string>()));
    else
      v.values.emplace_back(int_from_json(x, "shift entry"));
  }
  return v;
}

nlohmann::json degree_report_to_json(const DegreeReport& report, bool include_points) {
  nlohmann::json j;
  j["n"] = report.n;
  auto cases = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json r;
    r["label"] = std::string(case_name(row.label));
    r["count"] = row.count;
    const auto m = row.multiplicity();
    r["multiplicity"] = m ? int_json(*m) : nlohmann::json(nullptr);
    if (row.multiplicities.size() > 1) {
      auto all = nlohmann::json::array();
      for (const auto& x : row.multiplicities) all.push_back(int_json(x));
      r["multiplicities"] = std::move(all);
    }
    r["contribution"] = int_json(row.contribution);
    cases.push_back(std::move(r));
  }
  j["cases"] = std::move(cases);
  j["total"] = int_json(report.total);
  j["shift_vector"] = shift_to_json(report.shift);
  if (include_points) {
    auto pts = nlohmann::json::array();
    for (const auto& cp : report.points) {
      nlohmann::json q;
      auto coords = nlohmann::json::array();
      for (const auto& x : cp.point.point) coords.push_back(to_string(x));
      q["point"] = std::move(coords);
      q["surface_facet"] = cp.point.surface_facet;
      q["linear_facet"] = cp.point.linear_facet;
      q["case"] = std::string(case_name(cp.label));
      q["index"] = int_json(cp.point.index);
      q["weight"] = int_json(cp.point.weight);
      auto mins = nlohmann::json::array();
      for (int k : cp.minimal_positions) mins.push_back(k + 1);
      q["minimal_positions"] = std::move(mins);
      pts.push_back(std::move(q));
    }
    j["points"] = std::move(pts);
  }
  return j;
}

DegreeReport degree_report_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("cases") || !j.contains("total") ||
      !j.contains("shift_vector"))
    throw std::invalid_argument("degree report needs n, cases, total and shift_vector");
  DegreeReport report;
  report.n = j.at("n").get<std::size_t>();
  report.total = int_from_json(j.at("total"), "total");
  report.shift = shift_from_json(j.at("shift_vector"));
  for (const auto& c : j.at("cases")) {
    CaseRow row;
    const auto label = parse_case_name(c.at("label").get<std::string>());
    if (!label) throw std::invalid_argument("unknown case label");
    row.label = *label;
    row.count = c.at("count").get<std::size_t>();
    row.contribution = int_from_json(c.at("contribution"), "contribution");
    if (c.contains("multiplicities")) {
      for (const auto& m : c.at("multiplicities")) row.multiplicities.push_back(int_from_json(m, "multiplicity"));
    } else if (!c.at("multiplicity").is_null()) {
      row.multiplicities.push_back(int_from_json(c.at("multiplicity"), "multiplicity"));
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

nlohmann::json edges_to_json(std::size_t n, const std::vector<PolytopeEdge>& edges) {
  nlohmann::json j;
  j["n"] = n;
  j["count"] = edges.size();
  auto list = nlohmann::json::array();
  std::map<RootA, std::vector<RootA>> adjacency;
  for (const auto& e : edges) {
    const auto [r, s] = e.endpoints();
    list.push_back({{"label", e.label()},
                    {"kind", e.kind == PolytopeEdge::Kind::Head ? "head" : "tail"},
                    {"roots", nlohmann::json::array({root_json(r), root_json(s)})}});
    adjacency[r].push_back(s);
    adjacency[s].push_back(r);
  }
  auto adj = nlohmann::json::array();
  for (auto& [root, nbrs] : adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    auto list_nbrs = nlohmann::json::array();
    for (const auto& x : nbrs) list_nbrs.push_back(root_json(x));
    adj.push_back({{"root", root_json(root)}, {"neighbors", std::move(list_nbrs)}});
  }
  j["edges"] = std::move(list);
  j["adjacency"] = std::move(adj);
  return j;
}

nlohmann::json root_pairs_to_json(const std::vector<RootPair>& pairs) {
  auto out = nlohmann::json::array();
  for (const auto& [r, s] : pairs) out.push_back(nlohmann::json::array({root_json(r), root_json(s)}));
  return out;
}

}  // namespace tropdeg
