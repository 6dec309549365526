#include "flagvar/report.hpp"

#include "flagvar/error.hpp"

namespace flagvar::report {

namespace {

Json node_array(const NodeSet& nodes) {
  Json a = Json::array();
  for (int v : nodes.nodes()) a.push_back(v + 1);
  return a;
}

Json variety_header(const std::string& command, const FlagVariety& x) {
  Json j;
  j["command"] = command;
  j["type"] = x.root_system().type().label();
  j["levi"] = node_array(x.levi());
  j["omitted"] = node_array(x.omitted());
  return j;
}

}  // namespace

Json threshold_json(const ThresholdResult& r) {
  Json j;
  j["value"] = r.value.str();
  j["exactness"] = to_string(r.exactness);
  j["klt"] = r.klt;
  j["lc"] = r.lc;
  j["derived_extension"] = r.derived_extension;
  return j;
}

ThresholdResult threshold_from_json(const Json& j) {
  ThresholdResult r;
  r.value = ThresholdValue::parse(j.at("value").get<std::string>());
  r.exactness = parse_exactness(j.at("exactness").get<std::string>());
  r.klt = j.at("klt").get<bool>();
  r.lc = j.at("lc").get<bool>();
  r.derived_extension = j.at("derived_extension").get<bool>();
  return r;
}

Json fiber_json(const FiberType& fiber) {
  Json j;
  j["type"] = fiber.type.label();
  j["marked_node"] = fiber.marked_node + 1;
  Json nodes = Json::array();
  for (int v : fiber.original_nodes) nodes.push_back(v + 1);
  j["nodes"] = nodes;
  j["dimension"] = fiber.dimension;
  return j;
}

Json fibration_json(const Fibration& f) {
  Json j;
  j["alpha"] = f.alpha + 1;
  j["total_levi"] = node_array(f.total.levi());
  j["total_dimension"] = dimension(f.total);
  j["base_levi"] = node_array(f.base.levi());
  j["base_dimension"] = dimension(f.base);
  j["fiber"] = fiber_json(f.fiber);
  return j;
}

Json info(const FlagVariety& x, const EnumerationPolicy& policy) {
  Json j = variety_header("info", x);
  j["dimension"] = dimension(x);
  j["picard_rank"] = x.picard_rank();
  const SchubertCellTable cells = schubert_cells(x, policy);
  j["betti"] = cells.betti;
  j["coset_count"] = cells.cells.size();
  Json anti = Json::object();
  for (const auto& [alpha, c] : anticanonical_coefficients(x)) anti[std::to_string(alpha + 1)] = c;
  j["anticanonical"] = anti;
  j["global_lct"] = threshold_json(global_lct(x));
  Json tower = Json::array();
  for (const auto& f : fibration_tower(x)) tower.push_back(fibration_json(f));
  j["fibration_tower"] = tower;
  return j;
}

Json fibrations(const FlagVariety& x, std::optional<int> alpha) {
  Json j = variety_header("fibration", x);
  Json list = Json::array();
  if (alpha) {
    list.push_back(fibration_json(fibration(x, *alpha)));
  } else {
    for (int a : x.omitted().nodes()) list.push_back(fibration_json(fibration(x, a)));
  }
  j["fibrations"] = list;
  Json tower = Json::array();
  for (const auto& f : fibration_tower(x)) tower.push_back(fibration_json(f));
  j["fibration_tower"] = tower;
  return j;
}

Json lct(const FlagVariety& x, const QDivisor& d, Exactness mode) {
  Json j = variety_header("lct", x);
  Json coeffs = Json::object();
  for (int alpha : x.omitted().nodes()) coeffs[std::to_string(alpha + 1)] = to_string(d.coefficient(alpha));
  j["divisor"] = coeffs;
  const ThresholdResult r = mode == Exactness::exact ? lct_b_stable(x, d) : lct_lower_bound_general(x, d);
  j["result"] = threshold_json(r);
  Json fibers = Json::array();
  for (int beta : x.omitted().nodes()) {
    const Fibration f = fibration(x, beta);
    const Rational restricted = restrict_divisor_to_fiber(x, d, beta);
    Json entry;
    entry["alpha"] = beta + 1;
    entry["fiber"] = fiber_json(f.fiber);
    entry["restriction"] = to_string(restricted);
    entry["fiber_threshold"] = fiber_threshold(f.fiber, restricted).str();
    fibers.push_back(entry);
  }
  j["fibers"] = fibers;
  return j;
}

}  // namespace flagvar::report
