#pragma once

// Exact scalar substrate: arbitrary-precision integers and rationals,
// residue reduction in both half-open conventions, modular inverses,
// Bernoulli numbers and the two sawtooth functions.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fdsum/errors.hpp"

namespace fdsum {

namespace mp = boost::multiprecision;

using Int = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational =
    mp::number<mp::backends::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

using int64 = std::int64_t;

// Rationals are kept reduced with a positive denominator, so operator==
// is structural equality. Construction normalizes the sign.
Rational make_rational(Int num, Int den);

Int pow_int(const Int& base, unsigned exp);
Int binomial(int64 n, int64 k);

// Floor division and floor remainder (divisor > 0).
Int floor_div(const Int& a, const Int& b);
int64 mod_floor(int64 x, int64 m);

int64 gcd64(int64 a, int64 b);
int64 euler_phi(int64 n);

bool is_integer(const Rational& x);
Int floor_rational(const Rational& x);
double to_double(const Rational& x);

// "num/den" round-trip serialization (always carries the denominator).
std::string to_fraction_string(const Rational& x);
Rational fraction_from_string(std::string_view text);

enum class ResidueConvention {
  HalfOpenLow,   // value in [0, modulus)
  HalfOpenHigh,  // value in (0, modulus]
};

struct Residue {
  int64 value = 0;
  int64 modulus = 1;
  ResidueConvention convention = ResidueConvention::HalfOpenLow;
};

int64 residue_low(int64 x, int64 m);   // representative in [0, m)
int64 residue_high(int64 x, int64 m);  // representative in (0, m]

Residue make_residue(int64 x, int64 m, ResidueConvention convention);

// Inverse of a modulo b as a HalfOpenLow residue; b = 1 yields 0.
// Throws NotCoprimeError when gcd(a, b) != 1.
Residue mod_inverse(int64 a, int64 b);

// Indicator of b | x, as an exact scalar.
Rational delta_z(int64 x, int64 b);

// ((x)): x - floor(x) - 1/2 away from the integers, 0 on them.
Rational sawtooth(const Rational& x);

// \x/b/: reduce x to (0, b] and return x/b - 1/2. Equals
// ((x/b)) + delta_z(x, b)/2.
Rational sawtooth_slash(int64 x, int64 b);

// B_0..B_n under the B_1 = -1/2 convention, from the recurrence
// sum_{k=0}^{n} C(n+1, k) B_k = 0.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::size_t n_max);

  const Rational& at(std::size_t n) const;
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<Rational> values_;
};

Rational bernoulli(std::size_t n);

}  // namespace fdsum
