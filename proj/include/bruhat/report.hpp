#pragma once

#include "bruhat/interval.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace bruhat {

enum class Status { Pass, Fail, Finding, Skip };

std::string to_string(Status s);

/// One verification outcome. `detail` carries check-specific data and the
/// witness on failure.
struct CheckRecord {
  std::string check;
  int n = 0;
  Permutation u, v;
  std::optional<Permutation> z, z2;
  Status status = Status::Pass;
  nlohmann::json detail = nlohmann::json::object();
  std::optional<double> ms;

  bool failed() const { return status == Status::Fail; }
};

CheckRecord make_record(std::string check, const Interval& interval);

nlohmann::json to_json(const CheckRecord& record);
std::string to_text(const CheckRecord& record);

/// {n, u, v, size}
nlohmann::json interval_summary(const Interval& interval);
/// Summary plus every arrow as [source, target, label].
nlohmann::json interval_dump(const Interval& interval);

} // namespace bruhat
