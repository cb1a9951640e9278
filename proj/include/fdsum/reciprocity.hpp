#pragma once

// Restricted-partition polynomial part, the reciprocal sum R, the
// inclusion-exclusion identities, extended Rademacher reciprocity, and
// the right-triangle lattice-point application with its brute oracle.

#include <span>
#include <vector>

#include "fdsum/fd_core.hpp"
#include "fdsum/report.hpp"

namespace fdsum {

// poly_{a_1..a_d}(t): dense coefficients, degree d-1 down to 0, with
// leading coefficient 1/(a_1...a_d (d-1)!).
struct PolyCoeffs {
  std::vector<int64> a;
  std::vector<Rational> coeffs;  // coeffs[0] multiplies t^{d-1}

  Rational eval(const Rational& t) const;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

void require_pairwise_coprime(std::span<const int64> a_list, const char* who);

// Bernoulli-number formula for the polynomial part (B_1 = -1/2):
//   poly(t) = 1/(a_1...a_d) sum_{m=0}^{d-1} (-1)^m/(d-1-m)!
//             sum_{k_1+...+k_d=m} prod a_i^{k_i} B_{k_i}/k_i!  t^{d-1-m}.
PolyCoeffs poly_coeffs(std::span<const int64> a_list);
Rational poly_part(std::span<const int64> a_list, const Rational& t);

// Number of ways to write n as a nonnegative combination of the parts.
Int restricted_partition(std::span<const int64> a_list, int64 n);

// R_{a_1..a_d}(t) = sum over m of S_(other parts; a_m)(t); parts equal to
// 1 contribute zero.
Rational reciprocal_sum_R(std::span<const int64> a_list, int64 t);

// Alternating subset sums; each equals a translate/reflection of fd_sum:
//   pie_negation(spec, t)  = S(-t)
//   pie_shift(spec, t)     = S(t + a_1 + ... + a_d)
// The vector forms evaluate the subset sum once for all t in [0, b).
Rational pie_negation(const FDSpec& spec, int64 t);
Rational pie_shift(const FDSpec& spec, int64 t);
std::vector<Rational> pie_negation_vector(const FDSpec& spec);
std::vector<Rational> pie_shift_vector(const FDSpec& spec);

// sum_{k=1}^{d} (-1)^k sum_{i_1<...<i_k} poly_{a_{i_1}..a_{i_k}}(t);
// equals (-1)^d poly(t - sum a_i) and -poly(-t).
Rational poly_negation_pie(std::span<const int64> a_list, const Rational& t);

// Extended reciprocity ranges for pairwise coprime parts:
//   (i)   1 - min a_i <= n <= -1
//   (ii)  1 <= n <= sum a_i - 1
//   (iii) sum a_i + 1 <= n <= sum a_i + min a_i - 1
// In range, asserts R(n) = -poly(-n); out of range the report records
// whether the equality happens to hold, without judging it.
VerificationReport verify_rademacher_extended(std::span<const int64> a_list, int64 n);

struct TriangleSpec {
  int64 e = 1;
  int64 f = 1;
  int64 r = 1;
};

// Lattice points of {x,y >= 0, ex + fy <= tr} through the closed form
//   (tr)^2/(2ef) + (tr/2)(1/e + 1/f + 1/(ef)) + (1/4)(1 + 1/e + 1/f)
//   + (1/12)(e/f + f/e + 1/(ef)) + R_{e,f,1}(-tr).
// The result must come out a nonnegative integer.
Rational lattice_count_formula(const TriangleSpec& tri, int64 t);

// Direct double loop; the independent oracle for the formula.
Int lattice_count_brute(const TriangleSpec& tri, int64 t);

}  // namespace fdsum
