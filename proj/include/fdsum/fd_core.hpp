#pragma once

// Fourier-Dedekind sums S_{(a_1,...,a_d; b)}(t) by five independent
// algorithms:
//
//   fd_sum              reduced-sum route, exact, defined for any a_i
//   fd_sum_linear_comb  integer linear-combination recursion on d
//   fd_sum_pair         O(b) residue formula, d = 2 only
//   fd_sum_complex      root-of-unity sum in double complex arithmetic
//   gen_func_coefficients  dense generating-function expansion (reduced sums)
//
// The first four return the same exact value (the complex route up to
// floating error); the last agrees with reduced_sum. Cross-checking them
// is the point, so none shares intermediate results with another.

#include <complex>
#include <vector>

#include "fdsum/exact_core.hpp"

namespace fdsum {

struct FDSpec {
  std::vector<int64> a;  // a_1..a_d, nonzero, sign and magnitude arbitrary
  int64 b = 1;           // modulus, >= 1
  bool requires_coprime = false;

  // Validates b >= 1 and a_i != 0; when require_coprime is set also
  // enforces gcd(a_i, b) = 1 (throws NotCoprimeError).
  static FDSpec make(std::vector<int64> a, int64 b, bool require_coprime = false);

  int dimension() const { return static_cast<int>(a.size()); }
  bool all_coprime() const;
};

// Throws NotCoprimeError unless gcd(a_i, b) = 1 for every i.
void require_coprime(const FDSpec& spec, const char* who);

// S_b(t) = delta_Z(t/b) - 1/b, the 0-dimensional sum.
Rational s_zero_dim(int64 b, int64 t);

// Reduced sum: sum of k_1...k_d over 1 <= k_i <= b-1 with
// sum a_i k_i = -t (mod b). d = 0 gives delta_Z(t/b) as an integer.
// Computed by the recursion S~_d(t) = sum_k k S~_{d-1}(t + k a_d).
std::vector<Int> reduced_vector(const FDSpec& spec);  // index t in [0, b)
Int reduced_sum(const FDSpec& spec, int64 t);

// Canonical exact value via the reduced sum:
//   S(t) = (-1)^d / b^d * (S~(t) - C(b,2)^d / b).
std::vector<Rational> fd_vector(const FDSpec& spec);
Rational fd_sum(const FDSpec& spec, int64 t);

// b S_d(t) = - sum_{k=1}^{b-1} k S_{d-1}(t + k a_d), bottoming out at S_b.
// Requires coprime a_i.
std::vector<Rational> fd_linear_vector(const FDSpec& spec);
Rational fd_sum_linear_comb(const FDSpec& spec, int64 t);

// d = 2 in O(b): S~(t) = sum_k k [a_2^{-1}(-t - k a_1)] with [.] in [0, b).
Rational fd_sum_pair(int64 a1, int64 a2, int64 b, int64 t);

// Root-of-unity definition, double precision; cross-check oracle only.
std::complex<double> fd_sum_complex(const FDSpec& spec, int64 t);

// Expands prod_i (z^{a_i} + 2 z^{2 a_i} + ... + (b-1) z^{(b-1) a_i}) with
// true exponents and sums coefficients by exponent class mod b.
std::vector<Int> gen_func_vector(const FDSpec& spec);  // index: class of -t
Int gen_func_coefficients(const FDSpec& spec, int64 t);

}  // namespace fdsum
