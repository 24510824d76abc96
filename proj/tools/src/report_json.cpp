#include "enumorder_cli/report_json.hpp"

namespace enumorder::cli {

Json to_json(const WitnessPair& w) {
  return Json{{"i", w.i},           {"j", w.j},           {"h_i", w.h_i.str()},
              {"h_j", w.h_j.str()}, {"g_i", w.g_i.str()}, {"g_j", w.g_j.str()}};
}

Json to_json(const ShiftCell& cell) {
  Json j{{"m", cell.m}, {"n", cell.n}};
  j["witness"] = cell.witness ? to_json(*cell.witness) : Json(nullptr);
  return j;
}

Json to_json(const PairResult& pair) {
  Json j{{"left", pair.left}, {"right", pair.right}};
  if (!pair.role.empty()) j["role"] = pair.role;
  j["descriptor_verdict"] = pair.descriptor.refuted() ? "refuted" : "unknown";
  j["reason"] = pair.descriptor.reason;
  Json cells = Json::array();
  for (const auto& c : pair.search.cells) cells.push_back(to_json(c));
  j["cells"] = std::move(cells);
  if (!pair.growth.empty()) {
    Json growth = Json::array();
    for (const auto& s : pair.growth)
      growth.push_back(Json{{"m", s.shift.m},
                            {"n", s.shift.n},
                            {"schedule", s.schedule},
                            {"M", s.m_sizes},
                            {"L", s.l_sizes},
                            {"strictly_increasing", s.strictly_increasing()}});
    j["growth"] = std::move(growth);
  }
  return j;
}

Json to_json(const ReproReport& report) {
  Json j{{"experiment", report.experiment}};
  Json params = Json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  j["params"] = std::move(params);
  j["passed"] = report.passed;
  Json pairs = Json::array();
  for (const auto& p : report.pairs) pairs.push_back(to_json(p));
  j["pairs"] = std::move(pairs);
  if (!report.checks.empty()) {
    Json checks = Json::array();
    for (const auto& c : report.checks)
      checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = std::move(checks);
  }
  j["timing"] = Json{{"elapsed_ms", report.elapsed_ms}};
  return j;
}

Json without_timing(Json report) {
  report.erase("timing");
  return report;
}

}  // namespace enumorder::cli
