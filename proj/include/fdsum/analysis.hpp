#pragma once

// Averages over coprime residues, the tight two-dimensional bounds with
// their attainment classification, extrema localization, concavity, and
// the bounds on shifted reciprocal sums.

#include <span>
#include <vector>

#include "fdsum/fd_core.hpp"
#include "fdsum/report.hpp"

namespace fdsum {

// Average of fd_sum over the last parameter slot running through the
// residues coprime to b. Computes the defining phi(b)-term sum unless
// use_closed_form is set (then returns fd_sum(prefix; b)(t) / 2, which
// the defining sum provably equals for b >= 3).
Rational average_last(std::span<const int64> prefix, int64 b, int64 t,
                      bool use_closed_form = false);
std::vector<Rational> average_last_vector(std::span<const int64> prefix, int64 b);

// Average over all d slots (phi(b)^d terms); closed form is S_b(t)/2^d.
Rational average_all(int d, int64 b, int64 t, bool use_closed_form = false);
std::vector<Rational> average_all_vector(int d, int64 b);

// Right-hand side of the first-slot negation identity:
//   -S_{(a_1,...;b)}(t) + S_{(a_2,...;b)}(t),
// which equals fd_sum with a_1 replaced by -a_1.
Rational negate_first(const FDSpec& spec, int64 t);

// Classical Dedekind sum s(a, b) = sum_k ((k/b))((ka/b)).
Rational dedekind_sum(int64 a, int64 b);

struct ExtremaResult {
  int64 b = 1;
  int64 a = 1;
  std::vector<int64> argmax_set;  // t in [1, b]
  std::vector<int64> argmin_set;
  Rational max_value;
  Rational min_value;
};

// Exhaustive scan of S_{(a,1;b)}(t) over t in [1, b].
ExtremaResult extrema_2d(int64 a, int64 b);

// Whether the scan result sits inside the predicted intervals
// argmax in [(b+1)/2, (b+1)/2 + a], argmin in [1, min(a, (b+1)/2)]
// (endpoints compared as exact rationals).
bool extrema_within_intervals(const ExtremaResult& result);

struct BoundsCertificate {
  int64 b = 1;
  int64 t = 0;
  Rational lower;
  Rational upper;
  std::vector<std::pair<int64, int64>> lower_attainers;  // residue classes
  std::vector<std::pair<int64, int64>> upper_attainers;
};

struct BoundsScan {
  BoundsCertificate certificate;
  std::vector<Witness> violations;  // stated-bound mismatches, if any
};

// Exhaustive scan of S_{(a_1,a_2;b)}(t) over coprime residue pairs. The
// certificate records the observed extremes and attainers. violations
// compares against the stated bounds: for t = 0,
// -(b-1)(b-5)/12b <= S <= (b-1)(b+1)/12b with the upper attained iff
// a_1 + a_2 = 0 and the lower iff a_1 = a_2 (mod b); for t in [1, b-1]
// the mirrored interval with attainment iff a_1 = -a_2 = t resp.
// a_1 = a_2 = t. The t = 0 branch and the t != 0 lower bound check out
// exhaustively; the stated t != 0 upper is exceeded by pairs such as
// (2,2; 5) at t = 1, where S = 1/5, and the scan reports those honestly.
BoundsScan bounds_2d_scan(int64 b, int64 t);
BoundsCertificate bounds_2d(int64 b, int64 t);

// Strict inequalities from the second-difference identity
// (I - T^{a_1})(I - T^{a_2}) S = S_b: for t in [1, b-1] the outer pair
// mean is below the inner pair mean, at t = 0 above.
VerificationReport concavity_check(int64 a1, int64 a2, int64 b);

// |R_{a,1,b}(t + a + b) - R_{a,1,b}(t)| <= 1 - (1/a + 1/b)/2 over one
// full period, plus the k-step shift identity for R_{a,b} and the
// floor-counting identity that drives it.
VerificationReport r_shift_bound(int64 a, int64 b);

// R_{a,1,b}(t) equals the reciprocity quadratic -poly_{a,1,b}(-t) on
// t in [1, a+b], and the shifted values stay within the same bound.
VerificationReport bounds_recip_corollary(int64 a, int64 b);

}  // namespace fdsum
