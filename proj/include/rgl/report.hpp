#pragma once

#include <string>
#include <vector>

#include "rgl/driver.hpp"

namespace rgl {

// Machine-readable run report. The JSON layout is
//   {version, command, entries: [{name, kind, status, millis, message?}],
//    summary: {pass, fail}}
// and is stable under emit/parse round-trips.
struct Report {
  int version = 1;
  std::string command;
  std::vector<ReportItem> entries;
  int pass = 0, fail = 0;

  bool operator==(const Report&) const = default;

  void add(ReportItem item) {
    (item.pass ? pass : fail)++;
    entries.push_back(std::move(item));
  }
  bool ok() const { return fail == 0; }
};

std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);  // throws std::runtime_error
std::string report_to_human(const Report& r);

} // namespace rgl
