#pragma once

// Grid verification sweeps. Each returns a VerificationReport whose
// witnesses carry both exact sides of any failed identity. Sweeps are
// deterministic; heavy ones fan out over moduli with at most FD_THREADS
// workers and merge results in modulus order.

#include <vector>

#include "fdsum/exact_core.hpp"
#include "fdsum/report.hpp"

namespace fdsum::verify {

// Number of workers used by parallel sweeps (FD_THREADS or hardware).
int sweep_threads();

// The worked 4-periodic example: all five algorithms reproduce
// (5/16, -1/16, -3/16, -1/16).
VerificationReport s134_example();

// Exact agreement of the five evaluation routes over every spec with
// dimension <= max_d, modulus <= max_b, coprime a_i, and every t.
VerificationReport five_way_agreement(int64 max_b, int max_d);

// det M = (-1)^{b-1} b^d on sampled coprime tuples (at least min_tuples),
// det M = 0 on at least min_noncoprime tuples with a shared factor.
VerificationReport determinant_law(int64 max_b, int max_d, int min_tuples,
                                   int min_noncoprime);

// R(n) = -poly(-n) over every pairwise-coprime dims-tuple with parts
// <= max_a and every n in the three admissible ranges.
VerificationReport rademacher_extended_grid(int64 max_a, int dims);

// Averages over the last slot and over all slots match the halving law,
// with the full phi(b)^d-term sums computed (no closed-form shortcut).
VerificationReport average_theorem(int64 max_b, int max_d);

// Two-dimensional bounds and their iff-attainment classes, both the
// t = 0 and the 1 <= t <= b-1 branch, for all b <= max_b.
VerificationReport bounds_2d_grid(int64 max_b);

// Classical Dedekind-sum bounds +-(b-1)(b-2)/12b with attainment at
// a = +-1, plus the relation to the two-dimensional sum at t = 0.
VerificationReport dedekind_corollary_grid(int64 max_b);

// Argmax/argmin containment for all coprime a < b <= max_b, plus the
// b = 15 reference facts (a = 1: argmax in [8,9], argmin = {1};
// a = 7: argmax in [8,15], argmin in [1,7]).
VerificationReport extrema_grid(int64 max_b);

// Shift bound and companion identities for all coprime a, b <= max_ab.
VerificationReport r_shift_grid(int64 max_ab);

// The reciprocity-quadratic bound at (2,3), (11,10), (64,75).
VerificationReport bounds_recip_cases();

// Lattice formula equals the brute count for coprime e, f <= max_ef,
// r <= e f, t <= max_t, and every value is integral.
VerificationReport lattice_grid(int64 max_ef, int64 max_t);

// Constancy of S on [1, b-1]: polynomial criterion, prime multiplicity
// criterion, and direct value scan agree for every multiset over the
// given primes with d in {p-1, 2(p-1)} (thinned to max_multisets).
VerificationReport constancy_grid(const std::vector<int64>& primes,
                                  int max_multisets);

// Identity, inverses, commutativity and associativity of convolution on
// the generators, for all moduli 2 <= b <= max_b.
VerificationReport group_laws(int64 max_b);

// Forward convolution characterization against seeded random zero-mean
// vectors, plus a deliberately wrong f that must fail.
VerificationReport convolution_characterization_random(int64 max_b, int trials);

// Negation and shift inclusion-exclusion identities for S.
VerificationReport pie_grid(int64 max_b, int max_d);

// Concavity pattern for all coprime pairs with modulus <= max_b.
VerificationReport concavity_grid(int64 max_b);

}  // namespace fdsum::verify
