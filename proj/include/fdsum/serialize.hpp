#pragma once

// JSON encodings for CLI output records. Rationals travel as "num/den"
// strings so the encoding is lossless.

#include <string>
#include <vector>

#include "json.hpp"

#include "fdsum/exact_core.hpp"
#include "fdsum/report.hpp"

namespace fdsum {

using Json = nlohmann::json;

Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& j);

// {"kind": "value" | "vector" | "report", "payload": {...}}
Json output_record(const std::string& kind, Json payload);

}  // namespace fdsum
