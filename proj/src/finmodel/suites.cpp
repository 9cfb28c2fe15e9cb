#include <stdexcept>

#include "rgl/finmodel.hpp"

namespace rgl::fin {

std::vector<std::string> suite_names() { return {}; }

Report run_suite(const std::string& name, const SuiteOptions&) {
  throw std::invalid_argument("unknown suite name '" + name + "'");
}

Report run_all_suites(const SuiteOptions&) {
  throw std::logic_error("suites: not implemented yet");
}

}  // namespace rgl::fin
