#include "fdsum/reciprocity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fdsum {

namespace {

std::string list_text(std::span<const int64> a_list) {
  std::string s = "{";
  for (std::size_t i = 0; i < a_list.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a_list[i]);
  }
  return s + "}";
}

}  // namespace

void require_pairwise_coprime(std::span<const int64> a_list, const char* who) {
  for (std::size_t i = 0; i < a_list.size(); ++i) {
    for (std::size_t j = i + 1; j < a_list.size(); ++j) {
      if (gcd64(a_list[i], a_list[j]) != 1) {
        throw NotPairwiseCoprimeError(std::string(who) + ": " +
                                      std::to_string(a_list[i]) + " and " +
                                      std::to_string(a_list[j]) +
                                      " share a factor");
      }
    }
  }
}

Rational PolyCoeffs::eval(const Rational& t) const {
  Rational acc(0);
  for (const auto& c : coeffs) acc = acc * t + c;
  return acc;
}

namespace {

// Accumulates prod a_i^{k_i} B_{k_i} / k_i! over all compositions
// k_1 + ... + k_d = m.
void composition_sum(std::span<const int64> a_list, const BernoulliTable& table,
                     std::size_t index, int64 remaining, const Rational& partial,
                     Rational& acc) {
  if (index + 1 == a_list.size()) {
    const std::size_t k = static_cast<std::size_t>(remaining);
    Int kfact(1);
    for (std::size_t i = 2; i <= k; ++i) kfact *= Int(i);
    acc += partial * pow_int(Int(a_list[index]), static_cast<unsigned>(k)) *
           table.at(k) / Rational(kfact);
    return;
  }
  for (int64 k = 0; k <= remaining; ++k) {
    const std::size_t kk = static_cast<std::size_t>(k);
    if (kk >= 3 && kk % 2 == 1) continue;  // odd Bernoulli numbers vanish
    Int kfact(1);
    for (std::size_t i = 2; i <= kk; ++i) kfact *= Int(i);
    const Rational factor = partial *
                            pow_int(Int(a_list[index]), static_cast<unsigned>(kk)) *
                            table.at(kk) / Rational(kfact);
    if (factor == 0) continue;
    composition_sum(a_list, table, index + 1, remaining - k, factor, acc);
  }
}

}  // namespace

PolyCoeffs poly_coeffs(std::span<const int64> a_list) {
  if (a_list.empty()) {
    throw std::domain_error("poly_coeffs: need at least one part");
  }
  for (int64 a : a_list) {
    if (a < 1) throw std::domain_error("poly_coeffs: parts must be positive");
  }
  require_pairwise_coprime(a_list, "poly_coeffs");
  const int d = static_cast<int>(a_list.size());
  BernoulliTable table(static_cast<std::size_t>(d));
  Int product(1);
  for (int64 a : a_list) product *= Int(a);

  PolyCoeffs poly;
  poly.a.assign(a_list.begin(), a_list.end());
  poly.coeffs.resize(static_cast<std::size_t>(d));
  for (int64 m = 0; m < d; ++m) {
    Rational inner(0);
    composition_sum(a_list, table, 0, m, Rational(1), inner);
    Int tail_fact(1);  // (d-1-m)!
    for (int64 i = 2; i <= d - 1 - m; ++i) tail_fact *= Int(i);
    Rational c = inner / Rational(tail_fact) / Rational(product);
    if (m % 2 == 1) c = -c;
    poly.coeffs[static_cast<std::size_t>(m)] = c;  // multiplies t^{d-1-m}
  }
  return poly;
}

Rational poly_part(std::span<const int64> a_list, const Rational& t) {
  return poly_coeffs(a_list).eval(t);
}

Int restricted_partition(std::span<const int64> a_list, int64 n) {
  for (int64 a : a_list) {
    if (a < 1) throw std::domain_error("restricted_partition: parts must be >= 1");
  }
  if (n < 0) return Int(0);
  std::vector<Int> ways(static_cast<std::size_t>(n) + 1, Int(0));
  ways[0] = 1;
  for (int64 a : a_list) {
    for (int64 v = a; v <= n; ++v) {
      ways[static_cast<std::size_t>(v)] += ways[static_cast<std::size_t>(v - a)];
    }
  }
  return ways[static_cast<std::size_t>(n)];
}

Rational reciprocal_sum_R(std::span<const int64> a_list, int64 t) {
  for (int64 a : a_list) {
    if (a < 1) throw std::domain_error("reciprocal_sum_R: parts must be >= 1");
  }
  require_pairwise_coprime(a_list, "reciprocal_sum_R");
  Rational acc(0);
  for (std::size_t m = 0; m < a_list.size(); ++m) {
    std::vector<int64> rest;
    rest.reserve(a_list.size() - 1);
    for (std::size_t i = 0; i < a_list.size(); ++i) {
      if (i != m) rest.push_back(a_list[i]);
    }
    acc += fd_sum(FDSpec::make(std::move(rest), a_list[m]), t);  // b=1 gives 0
  }
  return acc;
}

namespace {

std::vector<Rational> pie_subset_sum(const FDSpec& spec, bool negation) {
  require_coprime(spec, "pie identity");
  const int d = spec.dimension();
  if (d > 20) throw std::domain_error("pie identity: dimension too large");
  std::vector<Rational> acc(static_cast<std::size_t>(spec.b), Rational(0));
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<int64> subset;
    for (int i = 0; i < d; ++i) {
      if (mask & (1u << i)) subset.push_back(spec.a[static_cast<std::size_t>(i)]);
    }
    const int k = static_cast<int>(subset.size());
    const int sign_exp = negation ? k : d - k;
    const auto term = fd_vector(FDSpec::make(std::move(subset), spec.b));
    for (std::size_t t = 0; t < acc.size(); ++t) {
      acc[t] += sign_exp % 2 == 0 ? term[t] : -term[t];
    }
  }
  return acc;
}

}  // namespace

std::vector<Rational> pie_negation_vector(const FDSpec& spec) {
  return pie_subset_sum(spec, /*negation=*/true);
}

std::vector<Rational> pie_shift_vector(const FDSpec& spec) {
  return pie_subset_sum(spec, /*negation=*/false);
}

Rational pie_negation(const FDSpec& spec, int64 t) {
  return pie_negation_vector(spec)[static_cast<std::size_t>(mod_floor(t, spec.b))];
}

Rational pie_shift(const FDSpec& spec, int64 t) {
  return pie_shift_vector(spec)[static_cast<std::size_t>(mod_floor(t, spec.b))];
}

Rational poly_negation_pie(std::span<const int64> a_list, const Rational& t) {
  require_pairwise_coprime(a_list, "poly_negation_pie");
  const int d = static_cast<int>(a_list.size());
  if (d < 1 || d > 20) throw std::domain_error("poly_negation_pie: bad dimension");
  Rational acc(0);
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    std::vector<int64> subset;
    for (int i = 0; i < d; ++i) {
      if (mask & (1u << i)) subset.push_back(a_list[static_cast<std::size_t>(i)]);
    }
    const Rational term = poly_part(subset, t);
    acc += subset.size() % 2 == 0 ? term : -term;
  }
  return acc;
}

VerificationReport verify_rademacher_extended(std::span<const int64> a_list, int64 n) {
  if (a_list.empty()) {
    throw std::domain_error("verify_rademacher_extended: need at least one part");
  }
  require_pairwise_coprime(a_list, "verify_rademacher_extended");
  int64 min_a = *std::min_element(a_list.begin(), a_list.end());
  int64 sum_a = 0;
  for (int64 a : a_list) sum_a += a;

  const char* range = nullptr;
  if (1 - min_a <= n && n <= -1) range = "(i)";
  else if (1 <= n && n <= sum_a - 1) range = "(ii)";
  else if (sum_a + 1 <= n && n <= sum_a + min_a - 1) range = "(iii)";

  const Rational lhs = reciprocal_sum_R(a_list, n);
  const Rational rhs = -poly_part(a_list, Rational(-n));

  VerificationReport report;
  report.theorem_id = "rademacher-extended";
  const std::string params = "a=" + list_text(a_list) + " n=" + std::to_string(n);
  if (range != nullptr) {
    report.grid = params + " range " + range;
    if (lhs != rhs) {
      report.add_failure(params, to_fraction_string(lhs), to_fraction_string(rhs));
    }
  } else {
    report.grid = params + " out of range (equality incidentally " +
                  (lhs == rhs ? "holds)" : "fails)");
  }
  return report;
}

Rational lattice_count_formula(const TriangleSpec& tri, int64 t) {
  if (tri.e < 1 || tri.f < 1 || tri.r < 1) {
    throw std::domain_error("lattice_count_formula: e, f, r must be positive");
  }
  if (gcd64(tri.e, tri.f) != 1) {
    throw NotCoprimeError("lattice_count_formula: gcd(e, f) != 1");
  }
  const Rational e(tri.e), f(tri.f);
  const Rational tr(t * tri.r);
  const std::vector<int64> parts{tri.e, tri.f, 1};
  Rational value = tr * tr / (2 * e * f) +
                   tr / 2 * (1 / e + 1 / f + 1 / (e * f)) +
                   Rational(1, 4) * (1 + 1 / e + 1 / f) +
                   Rational(1, 12) * (e / f + f / e + 1 / (e * f)) +
                   reciprocal_sum_R(parts, -t * tri.r);
  if (!is_integer(value) || value < 0) {
    throw NonIntegerResultError("lattice_count_formula: got " +
                                to_fraction_string(value));
  }
  return value;
}

Int lattice_count_brute(const TriangleSpec& tri, int64 t) {
  if (t < 0) return Int(0);
  const int64 bound = t * tri.r;
  Int count(0);
  for (int64 x = 0; x * tri.e <= bound; ++x) {
    count += (bound - x * tri.e) / tri.f + 1;
  }
  return count;
}

}  // namespace fdsum
