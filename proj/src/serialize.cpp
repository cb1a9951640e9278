#include "fdsum/serialize.hpp"

namespace fdsum {

Json rational_to_json(const Rational& x) { return to_fraction_string(x); }

Rational rational_from_json(const Json& j) {
  return fraction_from_string(j.get<std::string>());
}

Json report_to_json(const VerificationReport& report) {
  Json failures = Json::array();
  for (const auto& w : report.failures) {
    failures.push_back({{"params", w.params}, {"lhs", w.lhs}, {"rhs", w.rhs}});
  }
  return Json{{"theorem", report.theorem_id},
              {"grid", report.grid},
              {"passed", report.passed},
              {"failure_count", report.failure_count},
              {"failures", std::move(failures)}};
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport report;
  report.theorem_id = j.at("theorem").get<std::string>();
  report.grid = j.at("grid").get<std::string>();
  report.passed = j.at("passed").get<bool>();
  report.failure_count = j.at("failure_count").get<std::size_t>();
  for (const auto& w : j.at("failures")) {
    report.failures.push_back({w.at("params").get<std::string>(),
                               w.at("lhs").get<std::string>(),
                               w.at("rhs").get<std::string>()});
  }
  return report;
}

Json output_record(const std::string& kind, Json payload) {
  return Json{{"kind", kind}, {"payload", std::move(payload)}};
}

}  // namespace fdsum
