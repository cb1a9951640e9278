#include "fdsum/exact_core.hpp"

#include <numeric>
#include <stdexcept>

namespace fdsum {

Rational make_rational(Int num, Int den) {
  if (den == 0) {
    throw std::domain_error("make_rational: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

Int pow_int(const Int& base, unsigned exp) {
  Int result(1);
  Int cur = base;
  while (exp != 0) {
    if (exp & 1u) result *= cur;
    exp >>= 1u;
    if (exp != 0) cur *= cur;
  }
  return result;
}

Int binomial(int64 n, int64 k) {
  if (k < 0 || k > n) return Int(0);
  if (k > n - k) k = n - k;
  Int result(1);
  for (int64 i = 0; i < k; ++i) {
    result *= Int(n - i);
    result /= Int(i + 1);  // exact: product of i+1 consecutive integers
  }
  return result;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

int64 mod_floor(int64 x, int64 m) {
  int64 r = x % m;
  return r < 0 ? r + m : r;
}

int64 gcd64(int64 a, int64 b) { return std::gcd(a, b); }

int64 euler_phi(int64 n) {
  int64 result = n;
  for (int64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_integer(const Rational& x) { return denominator(x) == 1; }

Int floor_rational(const Rational& x) {
  return floor_div(numerator(x), denominator(x));
}

double to_double(const Rational& x) { return static_cast<double>(x); }

std::string to_fraction_string(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational fraction_from_string(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Int(std::string(text)));
    }
    Int num{std::string(text.substr(0, slash))};
    Int den{std::string(text.substr(slash + 1))};
    return make_rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("fraction_from_string: cannot parse '" +
                                std::string(text) + "'");
  }
}

int64 residue_low(int64 x, int64 m) { return mod_floor(x, m); }

int64 residue_high(int64 x, int64 m) {
  const int64 r = mod_floor(x, m);
  return r == 0 ? m : r;
}

Residue make_residue(int64 x, int64 m, ResidueConvention convention) {
  if (m < 1) throw std::domain_error("make_residue: modulus must be positive");
  const int64 v = convention == ResidueConvention::HalfOpenLow
                      ? residue_low(x, m)
                      : residue_high(x, m);
  return Residue{v, m, convention};
}

Residue mod_inverse(int64 a, int64 b) {
  if (b < 1) throw std::domain_error("mod_inverse: modulus must be positive");
  if (b == 1) return Residue{0, 1, ResidueConvention::HalfOpenLow};
  // Extended Euclid on (a mod b, b).
  int64 r0 = mod_floor(a, b), r1 = b;
  int64 s0 = 1, s1 = 0;
  while (r1 != 0) {
    const int64 q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) {
    throw NotCoprimeError("mod_inverse: gcd(" + std::to_string(a) + ", " +
                          std::to_string(b) + ") != 1");
  }
  return Residue{mod_floor(s0, b), b, ResidueConvention::HalfOpenLow};
}

Rational delta_z(int64 x, int64 b) {
  if (b < 1) throw std::domain_error("delta_z: modulus must be positive");
  return Rational(mod_floor(x, b) == 0 ? 1 : 0);
}

Rational sawtooth(const Rational& x) {
  if (is_integer(x)) return Rational(0);
  return x - Rational(floor_rational(x)) - Rational(1, 2);
}

Rational sawtooth_slash(int64 x, int64 b) {
  if (b < 1) throw std::domain_error("sawtooth_slash: modulus must be positive");
  const int64 r = residue_high(x, b);
  return make_rational(Int(2 * r - b), Int(2 * b));
}

BernoulliTable::BernoulliTable(std::size_t n_max) {
  values_.reserve(n_max + 1);
  values_.push_back(Rational(1));
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational acc(0);
    for (std::size_t k = 0; k < n; ++k) {
      acc += Rational(binomial(int64(n) + 1, int64(k))) * values_[k];
    }
    values_.push_back(-acc / Rational(Int(n) + 1));
  }
}

const Rational& BernoulliTable::at(std::size_t n) const {
  if (n >= values_.size()) {
    throw std::out_of_range("BernoulliTable: index beyond table");
  }
  return values_[n];
}

Rational bernoulli(std::size_t n) { return BernoulliTable(n).at(n); }

}  // namespace fdsum
