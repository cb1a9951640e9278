#pragma once

// The convolution algebra of b-periodic rational functions:
//   (f*g)(t) = sum_{m=0}^{b-1} f(t-m) g(m)
//   (T^a f)(t) = f(t+a)
// Zero-mean vectors form the group carrying the Fourier-Dedekind sums,
// with identity S_b and inverse (I - T^{a_1})...(I - T^{a_d}) delta.
// Also: the circulant-plus-ones system matrix, its exact determinant,
// the Cramer-rule evaluation, and the constancy criterion.

#include <span>
#include <vector>

#include "fdsum/fd_core.hpp"

namespace fdsum {

struct PeriodicVector {
  int64 b = 1;
  std::vector<Rational> samples;  // length b, indexed by t in [0, b)

  const Rational& at(int64 t) const {
    return samples[static_cast<std::size_t>(mod_floor(t, b))];
  }
  Rational mean_sum() const;  // sum of one period
  bool zero_mean() const { return mean_sum() == 0; }

  friend bool operator==(const PeriodicVector&, const PeriodicVector&) = default;
};

PeriodicVector delta_vector(int64 b);  // delta_Z(t/b)
PeriodicVector s_b_vector(int64 b);    // S_b = delta - 1/b
PeriodicVector fd_periodic(const FDSpec& spec);

PeriodicVector convolve(const PeriodicVector& f, const PeriodicVector& g);
PeriodicVector shift(const PeriodicVector& f, int64 a);  // T^a

// prod_i (I - T^{a_i}) applied in sequence; empty list is the identity.
PeriodicVector difference_op(const PeriodicVector& f, std::span<const int64> a_list);

struct FDInverse {
  PeriodicVector underlying;
};

// Group inverse of fd_periodic(spec): convolving the two gives S_b.
FDInverse fd_inverse(const FDSpec& spec);

// Whether (I - T^{a_1})...(I - T^{a_d})(f * g) = g exactly.
// Both f and g must be zero-mean with equal period.
bool check_convolution_characterization(std::span<const int64> a_list,
                                        const PeriodicVector& f,
                                        const PeriodicVector& g);

struct SquareMatrix {
  int64 n = 0;
  std::vector<Rational> entries;  // row-major

  explicit SquareMatrix(int64 size)
      : n(size), entries(static_cast<std::size_t>(size * size)) {}
  Rational& at(int64 r, int64 c) {
    return entries[static_cast<std::size_t>(r * n + c)];
  }
  const Rational& at(int64 r, int64 c) const {
    return entries[static_cast<std::size_t>(r * n + c)];
  }
};

// Exact determinant; Bareiss fraction-free elimination after clearing
// row denominators.
Rational determinant(const SquareMatrix& m);

// Rows r in [0, b-2] hold sinv(r - c + 1) (row r is the equation t = r+1),
// last row all ones. sinv must have period b >= 2.
SquareMatrix circulant_system_matrix(const PeriodicVector& sinv);

// The matrix above with sinv = (I-T^{a_1})...(I-T^{a_d}) delta; its
// determinant is (-1)^{b-1} b^d when the a_i are coprime to b.
SquareMatrix fd_system_matrix(const FDSpec& spec);

// Cramer evaluation: replace the 0-based column t with
// (-1/b, ..., -1/b, 0)^T and scale the determinant by (-1)^{b-1} / b^d.
Rational fd_sum_cramer(const FDSpec& spec, int64 t);

// Whether prod_i (1 - X^{a_i}) reduces to a constant
// mod 1 + X + ... + X^{b-1}; equivalent to S(1) = ... = S(b-1).
bool constancy_check(const FDSpec& spec);

// Prime-modulus criterion on the multiplicity vector (e_1..e_{p-1}) of the
// multiset {a_i}: (i) e = d/(p-1) integral, (ii) e_k + e_{p-k} = 2e,
// (iii) p | sum_{k<=(p-1)/2} k (e - e_{p-k}).
bool prime_constancy_criterion(std::span<const int64> multiplicities, int64 p);

}  // namespace fdsum
