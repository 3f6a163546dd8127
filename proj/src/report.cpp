#include "hombax/report.hpp"

namespace hombax {

namespace {
using json = nlohmann::ordered_json;
}

json witness_to_json(const Witness& w, const std::vector<std::string>& basis) {
  json out = json::object();
  out["identity"] = w.identity;
  out["at"] = w.where;
  json labels = json::array();
  for (int idx : w.where) {
    if (idx >= 0 && idx < static_cast<int>(basis.size()))
      labels.push_back(basis[static_cast<std::size_t>(idx)]);
    else
      labels.push_back(std::to_string(idx));
  }
  out["basis"] = std::move(labels);
  json lhs = json::array(), rhs = json::array();
  for (const auto& v : w.lhs) lhs.push_back(v.to_string());
  for (const auto& v : w.rhs) rhs.push_back(v.to_string());
  out["lhs"] = std::move(lhs);
  out["rhs"] = std::move(rhs);
  return out;
}

json check_report_to_json(const CheckReport& r, const std::vector<std::string>& basis) {
  json out = json::object();
  out["name"] = r.name;
  out["passed"] = r.passed;
  json ws = json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_to_json(w, basis));
  out["witnesses"] = std::move(ws);
  json subs = json::array();
  for (const auto& s : r.sub) subs.push_back(check_report_to_json(s, basis));
  out["sub"] = std::move(subs);
  return out;
}

json make_report(const std::vector<std::string>& command) {
  json out = json::object();
  json tool = json::object();
  tool["name"] = kToolName;
  tool["version"] = kToolVersion;
  out["tool"] = std::move(tool);
  out["command"] = command;
  return out;
}

}  // namespace hombax
