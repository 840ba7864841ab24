#include "bruhat/report.hpp"

namespace bruhat {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
  case Status::Pass: return "PASS";
  case Status::Fail: return "FAIL";
  case Status::Finding: return "FINDING";
  case Status::Skip: return "SKIP";
  }
  return "?";
}

CheckRecord make_record(std::string check, const Interval& interval) {
  CheckRecord r;
  r.check = std::move(check);
  r.n = interval.n();
  r.u = interval.u();
  r.v = interval.v();
  return r;
}

json to_json(const CheckRecord& record) {
  json out;
  out["check"] = record.check;
  out["n"] = record.n;
  out["u"] = record.u.str();
  out["v"] = record.v.str();
  if (record.z)
    out["z"] = record.z->str();
  if (record.z2)
    out["z2"] = record.z2->str();
  out["status"] = to_string(record.status);
  if (!record.detail.empty())
    out["detail"] = record.detail;
  if (record.ms)
    out["ms"] = *record.ms;
  return out;
}

std::string to_text(const CheckRecord& record) {
  std::string out = to_string(record.status) + " " + record.check + " [" +
                    record.u.str() + "," + record.v.str() + "]";
  if (record.z)
    out += " z=" + record.z->str();
  if (record.z2)
    out += " z2=" + record.z2->str();
  if (!record.detail.empty())
    out += " " + record.detail.dump();
  return out;
}

json interval_summary(const Interval& interval) {
  return {{"n", interval.n()},
          {"u", interval.u().str()},
          {"v", interval.v().str()},
          {"size", interval.size()}};
}

json interval_dump(const Interval& interval) {
  json out = interval_summary(interval);
  json edges = json::array();
  for (const auto& e : interval.edges())
    edges.push_back({interval.at(e.source).str(), interval.at(e.target).str(), e.label.str()});
  out["edges"] = std::move(edges);
  return out;
}

} // namespace bruhat
