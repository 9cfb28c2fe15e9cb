#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "rgl/report.hpp"

namespace rgl {

std::string report_to_json(const Report& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const ReportItem& it : r.entries) {
    nlohmann::json e{
        {"name", it.name},
        {"kind", it.kind},
        {"status", it.pass ? "pass" : "fail"},
        {"millis", it.millis},
    };
    if (!it.message.empty()) e["message"] = it.message;
    entries.push_back(std::move(e));
  }
  nlohmann::json doc{
      {"version", r.version},
      {"command", r.command},
      {"entries", std::move(entries)},
      {"summary", {{"pass", r.pass}, {"fail", r.fail}}},
  };
  return doc.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
  Report r;
  try {
    r.version = doc.at("version").get<int>();
    r.command = doc.at("command").get<std::string>();
    for (const auto& e : doc.at("entries")) {
      ReportItem it;
      it.name = e.at("name").get<std::string>();
      it.kind = e.at("kind").get<std::string>();
      it.pass = e.at("status").get<std::string>() == "pass";
      it.millis = e.at("millis").get<double>();
      if (e.contains("message")) it.message = e.at("message").get<std::string>();
      r.entries.push_back(std::move(it));
    }
    r.pass = doc.at("summary").at("pass").get<int>();
    r.fail = doc.at("summary").at("fail").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string report_to_human(const Report& r) {
  std::ostringstream os;
  size_t width = 0;
  for (const ReportItem& it : r.entries) width = std::max(width, it.name.size());
  for (const ReportItem& it : r.entries) {
    os << (it.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width))
       << it.name << "  " << it.kind;
    if (!it.message.empty()) {
      if (it.kind == "norm" && it.pass)
        os << "  ~> " << it.message;
      else
        os << "  -- " << it.message;
    }
    os << "\n";
  }
  os << r.command << ": " << r.pass << " passed, " << r.fail << " failed\n";
  return os.str();
}

} // namespace rgl
