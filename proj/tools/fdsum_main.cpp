// Command-line front end: exact computation of Fourier-Dedekind sums,
// theorem verification sweeps, and triangle lattice-point counting.
//
// Exit codes: 0 success / all checks passed, 1 verification failures,
// 2 invalid usage, 3 coprimality violation.

#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fdsum/analysis.hpp"
#include "fdsum/fd_core.hpp"
#include "fdsum/periodic_group.hpp"
#include "fdsum/reciprocity.hpp"
#include "fdsum/serialize.hpp"
#include "fdsum/verify.hpp"

namespace {

using fdsum::FDSpec;
using fdsum::int64;
using fdsum::Json;
using fdsum::Rational;
using fdsum::VerificationReport;

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotCoprime = 3;

std::vector<int64> parse_int_list(const std::string& text) {
  std::vector<int64> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string piece =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    out.push_back(std::stoll(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// --t accepts "7" or an inclusive range "0..12".
struct TRange {
  int64 lo = 0;
  int64 hi = 0;
};

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

TRange parse_t_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    const int64 t = std::stoll(text);
    return {t, t};
  }
  return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
}

struct MethodValues {
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> exact;  // one row per name, one col per t
  std::vector<double> complex_values;        // parallel to t when enabled
  bool has_complex = false;
  bool agree = true;
};

MethodValues evaluate_methods(const FDSpec& spec, const std::string& method,
                              const std::vector<int64>& ts) {
  MethodValues out;
  auto add_exact = [&](const char* name, auto&& eval) {
    out.names.emplace_back(name);
    std::vector<Rational> row;
    row.reserve(ts.size());
    for (int64 t : ts) row.push_back(eval(t));
    out.exact.push_back(std::move(row));
  };
  const bool all = method == "all";
  if (all || method == "reduced") {
    add_exact("reduced", [&](int64 t) { return fd_sum(spec, t); });
  }
  if (all || method == "linear") {
    add_exact("linear", [&](int64 t) { return fd_sum_linear_comb(spec, t); });
  }
  if (all || method == "pair") {
    if (spec.dimension() != 2) {
      if (!all) throw CLI::ValidationError("--method pair needs exactly two a values");
    } else {
      add_exact("pair", [&](int64 t) {
        return fdsum::fd_sum_pair(spec.a[0], spec.a[1], spec.b, t);
      });
    }
  }
  if (all || method == "cramer") {
    add_exact("cramer", [&](int64 t) { return fd_sum_cramer(spec, t); });
  }
  if (all || method == "complex") {
    out.has_complex = true;
    for (int64 t : ts) {
      out.complex_values.push_back(fd_sum_complex(spec, t).real());
    }
  }
  for (std::size_t i = 1; i < out.exact.size(); ++i) {
    if (out.exact[i] != out.exact[0]) out.agree = false;
  }
  if (out.has_complex && !out.exact.empty()) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (std::abs(out.complex_values[i] - fdsum::to_double(out.exact[0][i])) > 1e-9) {
        out.agree = false;
      }
    }
  }
  return out;
}

int emit_compute(const FDSpec& spec, const MethodValues& values,
                 const std::vector<int64>& ts, bool whole_period,
                 const std::string& format, bool approx) {
  if (format == "csv") {
    std::string header = "t";
    for (const auto& name : values.names) header += "," + name;
    if (values.has_complex) header += ",complex";
    if (approx) header += ",approx";
    header += ",agree";
    std::cout << header << "\n";
    for (std::size_t i = 0; i < ts.size(); ++i) {
      std::cout << ts[i];
      for (const auto& row : values.exact) {
        std::cout << "," << fdsum::to_fraction_string(row[i]);
      }
      if (values.has_complex) {
        std::cout << "," << format_double(values.complex_values[i]);
      }
      if (approx) {
        const double d = values.exact.empty()
                             ? values.complex_values[i]
                             : fdsum::to_double(values.exact[0][i]);
        std::cout << "," << format_double(d);
      }
      std::cout << "," << (values.agree ? "true" : "false") << "\n";
    }
    return 0;
  }
  Json methods = Json::object();
  for (std::size_t m = 0; m < values.names.size(); ++m) {
    Json row = Json::array();
    for (const auto& v : values.exact[m]) row.push_back(fdsum::rational_to_json(v));
    methods[values.names[m]] = std::move(row);
  }
  if (values.has_complex) {
    methods["complex"] = values.complex_values;
  }
  Json payload{{"a", spec.a}, {"b", spec.b}, {"t", ts},
               {"whole_period", whole_period}, {"methods", std::move(methods)},
               {"agree", values.agree}};
  if (approx && !values.exact.empty()) {
    std::vector<double> decimals;
    for (const auto& v : values.exact[0]) decimals.push_back(fdsum::to_double(v));
    payload["approx"] = std::move(decimals);
  }
  std::cout << fdsum::output_record(ts.size() == 1 ? "value" : "vector",
                                    std::move(payload))
                   .dump(2)
            << "\n";
  return 0;
}

int emit_report(const VerificationReport& report, const std::string& format) {
  if (format == "csv") {
    std::cout << "theorem,params,lhs,rhs\n";
    for (const auto& w : report.failures) {
      std::cout << report.theorem_id << ",\"" << w.params << "\",\"" << w.lhs
                << "\",\"" << w.rhs << "\"\n";
    }
  } else {
    std::cout << fdsum::output_record("report", fdsum::report_to_json(report)).dump(2)
              << "\n";
  }
  return report.passed ? 0 : kExitFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Fourier-Dedekind sums: computation, verification, lattice counts"};
  app.require_subcommand(1);

  // ---- compute ----
  auto* compute = app.add_subcommand("compute", "Evaluate S_(a_1..a_d;b)(t) exactly");
  std::string a_text;
  int64 b = 0;
  std::optional<std::string> t_text;
  std::string method = "reduced";
  std::string format = "json";
  bool approx = false;
  compute->add_option("--a", a_text, "Comma-separated a_1..a_d")->required();
  compute->add_option("--b", b, "Modulus b >= 1")->required();
  compute->add_option("--t", t_text, "Argument t or inclusive range lo..hi (default: full period)");
  compute->add_option("--method", method, "reduced|linear|pair|cramer|complex|all")
      ->check(CLI::IsMember({"reduced", "linear", "pair", "cramer", "complex", "all"}));
  compute->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  compute->add_flag("--approx", approx, "Add a decimal column (approximate)");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem verification sweep");
  verify_cmd->require_subcommand(1);
  int64 max_a = 10, max_b = 0;
  int dims = 3;
  struct SweepSpec {
    const char* name;
    const char* help;
    int64 default_max_b;
  };
  const std::vector<SweepSpec> sweeps{
      {"reciprocity", "Extended reciprocity R(n) = -poly(-n)", 0},
      {"determinant", "det M = (-1)^(b-1) b^d", 12},
      {"group", "Convolution group laws and characterization", 12},
      {"avg", "Averages halve per averaged slot", 30},
      {"bounds", "Two-dimensional bounds and attainment", 50},
      {"extrema", "Argmax/argmin containment", 60},
      {"concavity", "Second-difference sign pattern", 20},
      {"rshift", "Shift bound for reciprocal sums", 25},
      {"constancy", "Constancy criteria agree", 0},
      {"pie", "Inclusion-exclusion identities", 20},
  };
  for (const auto& sweep : sweeps) {
    auto* sub = verify_cmd->add_subcommand(sweep.name, sweep.help);
    sub->add_option("--max-a", max_a, "Largest part (reciprocity)");
    sub->add_option("--max-b", max_b, "Largest modulus");
    sub->add_option("--dims", dims, "Tuple dimension");
    sub->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
  }

  // ---- lattice ----
  auto* lattice = app.add_subcommand("lattice", "Count lattice points of ex + fy <= tr");
  int64 e = 1, f = 1, r = 1, t_max = 0;
  bool oracle = false;
  lattice->add_option("--e", e, "Coefficient e")->required();
  lattice->add_option("--f", f, "Coefficient f")->required();
  lattice->add_option("--r", r, "Scale r")->required();
  lattice->add_option("--t-max", t_max, "Largest dilation t")->required();
  lattice->add_flag("--oracle", oracle, "Also run the brute-force count");
  lattice->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (compute->parsed()) {
      if (b < 1) {
        std::cerr << "compute: --b must be >= 1\n";
        return kExitUsage;
      }
      std::vector<int64> a_list;
      try {
        a_list = parse_int_list(a_text);
      } catch (const std::exception&) {
        std::cerr << "compute: cannot parse --a '" << a_text << "'\n";
        return kExitUsage;
      }
      const FDSpec spec = FDSpec::make(a_list, b);
      bool whole_period = !t_text.has_value();
      std::vector<int64> ts;
      if (whole_period) {
        for (int64 t = 0; t < b; ++t) ts.push_back(t);
      } else {
        const TRange range = parse_t_range(*t_text);
        if (range.hi < range.lo) {
          std::cerr << "compute: empty --t range\n";
          return kExitUsage;
        }
        for (int64 t = range.lo; t <= range.hi; ++t) ts.push_back(t);
      }
      const MethodValues values = evaluate_methods(spec, method, ts);
      return emit_compute(spec, values, ts, whole_period, format, approx);
    }

    if (verify_cmd->parsed()) {
      const std::string name = verify_cmd->get_subcommands().front()->get_name();
      VerificationReport report;
      if (max_b < 0 || dims < 1 || max_a < 1) {
        std::cerr << "verify: invalid grid\n";
        return kExitUsage;
      }
      auto grid_b = [&](int64 fallback) { return max_b > 0 ? max_b : fallback; };
      if (name == "reciprocity") {
        report = fdsum::verify::rademacher_extended_grid(max_a, dims);
      } else if (name == "determinant") {
        report = fdsum::verify::determinant_law(grid_b(12), std::min(dims, 3), 200, 20);
      } else if (name == "group") {
        report = fdsum::verify::group_laws(grid_b(12));
        report.merge(fdsum::verify::convolution_characterization_random(grid_b(12), 3));
      } else if (name == "avg") {
        report = fdsum::verify::average_theorem(grid_b(30), std::min(dims, 2));
      } else if (name == "bounds") {
        report = fdsum::verify::bounds_2d_grid(grid_b(50));
        report.merge(fdsum::verify::dedekind_corollary_grid(std::min<int64>(grid_b(50), 30)));
      } else if (name == "extrema") {
        report = fdsum::verify::extrema_grid(grid_b(60));
      } else if (name == "concavity") {
        report = fdsum::verify::concavity_grid(grid_b(20));
      } else if (name == "rshift") {
        report = fdsum::verify::r_shift_grid(grid_b(25));
        report.merge(fdsum::verify::bounds_recip_cases());
      } else if (name == "constancy") {
        report = fdsum::verify::constancy_grid({3, 5, 7}, 5000);
      } else if (name == "pie") {
        report = fdsum::verify::pie_grid(grid_b(20), std::min(dims, 3));
      }
      return emit_report(report, format);
    }

    if (lattice->parsed()) {
      if (e < 1 || f < 1 || r < 1 || t_max < 0) {
        std::cerr << "lattice: e, f, r must be positive and --t-max >= 0\n";
        return kExitUsage;
      }
      if (fdsum::gcd64(e, f) != 1) {
        std::cerr << "lattice: gcd(e, f) must be 1\n";
        return kExitNotCoprime;
      }
      const fdsum::TriangleSpec tri{e, f, r};
      Json rows = Json::array();
      bool all_match = true;
      if (format == "csv") {
        std::cout << (oracle ? "t,count,oracle,match\n" : "t,count\n");
      }
      for (int64 t = 0; t <= t_max; ++t) {
        const Rational formula = fdsum::lattice_count_formula(tri, t);
        const fdsum::Int count = numerator(formula);
        if (oracle) {
          const fdsum::Int brute = fdsum::lattice_count_brute(tri, t);
          const bool match = count == brute;
          all_match = all_match && match;
          if (format == "csv") {
            std::cout << t << "," << count.str() << "," << brute.str() << ","
                      << (match ? "true" : "false") << "\n";
          } else {
            rows.push_back({{"t", t}, {"count", count.str()},
                            {"oracle", brute.str()}, {"match", match}});
          }
        } else if (format == "csv") {
          std::cout << t << "," << count.str() << "\n";
        } else {
          rows.push_back({{"t", t}, {"count", count.str()}});
        }
      }
      if (format != "csv") {
        Json payload{{"e", e}, {"f", f}, {"r", r}, {"rows", std::move(rows)}};
        if (oracle) payload["all_match"] = all_match;
        std::cout << fdsum::output_record("vector", std::move(payload)).dump(2) << "\n";
      }
      return all_match ? 0 : kExitFailures;
    }
  } catch (const fdsum::NotCoprimeError& err) {
    std::cerr << err.what() << "\n";
    return kExitNotCoprime;
  } catch (const std::exception& err) {
    std::cerr << err.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
