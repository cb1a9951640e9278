#include "fdsum/periodic_group.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace fdsum {

Rational PeriodicVector::mean_sum() const {
  Rational acc(0);
  for (const auto& s : samples) acc += s;
  return acc;
}

PeriodicVector delta_vector(int64 b) {
  if (b < 1) throw std::domain_error("delta_vector: b must be >= 1");
  PeriodicVector v{b, std::vector<Rational>(static_cast<std::size_t>(b))};
  v.samples[0] = Rational(1);
  return v;
}

PeriodicVector s_b_vector(int64 b) {
  if (b < 1) throw std::domain_error("s_b_vector: b must be >= 1");
  PeriodicVector v{b, std::vector<Rational>(static_cast<std::size_t>(b))};
  for (int64 t = 0; t < b; ++t) v.samples[static_cast<std::size_t>(t)] = s_zero_dim(b, t);
  return v;
}

PeriodicVector fd_periodic(const FDSpec& spec) {
  return PeriodicVector{spec.b, fd_vector(spec)};
}

PeriodicVector convolve(const PeriodicVector& f, const PeriodicVector& g) {
  if (f.b != g.b) {
    throw PeriodMismatchError("convolve: periods " + std::to_string(f.b) +
                              " and " + std::to_string(g.b) + " differ");
  }
  const int64 b = f.b;
  PeriodicVector out{b, std::vector<Rational>(static_cast<std::size_t>(b))};
  for (int64 t = 0; t < b; ++t) {
    Rational acc(0);
    for (int64 m = 0; m < b; ++m) acc += f.at(t - m) * g.at(m);
    out.samples[static_cast<std::size_t>(t)] = acc;
  }
  return out;
}

PeriodicVector shift(const PeriodicVector& f, int64 a) {
  const int64 b = f.b;
  PeriodicVector out{b, std::vector<Rational>(static_cast<std::size_t>(b))};
  for (int64 t = 0; t < b; ++t) {
    out.samples[static_cast<std::size_t>(t)] = f.at(t + a);
  }
  return out;
}

PeriodicVector difference_op(const PeriodicVector& f, std::span<const int64> a_list) {
  PeriodicVector cur = f;
  for (int64 a : a_list) {
    const PeriodicVector shifted = shift(cur, a);
    for (int64 t = 0; t < cur.b; ++t) {
      cur.samples[static_cast<std::size_t>(t)] -=
          shifted.samples[static_cast<std::size_t>(t)];
    }
  }
  return cur;
}

FDInverse fd_inverse(const FDSpec& spec) {
  require_coprime(spec, "fd_inverse");
  return FDInverse{difference_op(delta_vector(spec.b), spec.a)};
}

bool check_convolution_characterization(std::span<const int64> a_list,
                                        const PeriodicVector& f,
                                        const PeriodicVector& g) {
  if (f.b != g.b) {
    throw PeriodMismatchError("check_convolution_characterization: periods differ");
  }
  if (!f.zero_mean() || !g.zero_mean()) {
    throw NotZeroMeanError("check_convolution_characterization: f and g must be zero-mean");
  }
  return difference_op(convolve(f, g), a_list) == g;
}

Rational determinant(const SquareMatrix& m) {
  const int64 n = m.n;
  if (n <= 0) throw std::domain_error("determinant: empty matrix");
  // Scale each row to integers, tracking the product of scale factors.
  std::vector<Int> a(static_cast<std::size_t>(n * n));
  Int scale(1);
  for (int64 r = 0; r < n; ++r) {
    Int l(1);
    for (int64 c = 0; c < n; ++c) l = lcm(l, denominator(m.at(r, c)));
    for (int64 c = 0; c < n; ++c) {
      const Rational& x = m.at(r, c);
      a[static_cast<std::size_t>(r * n + c)] =
          numerator(x) * (l / denominator(x));
    }
    scale *= l;
  }
  auto at = [&](int64 r, int64 c) -> Int& {
    return a[static_cast<std::size_t>(r * n + c)];
  };
  int sign = 1;
  Int prev(1);
  for (int64 k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      int64 pivot_row = -1;
      for (int64 i = k + 1; i < n; ++i) {
        if (at(i, k) != 0) {
          pivot_row = i;
          break;
        }
      }
      if (pivot_row < 0) return Rational(0);
      for (int64 c = k; c < n; ++c) std::swap(at(k, c), at(pivot_row, c));
      sign = -sign;
    }
    for (int64 i = k + 1; i < n; ++i) {
      for (int64 j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Int det = at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return make_rational(det, scale);
}

SquareMatrix circulant_system_matrix(const PeriodicVector& sinv) {
  const int64 b = sinv.b;
  if (b < 2) throw std::domain_error("circulant_system_matrix: b must be >= 2");
  SquareMatrix m(b);
  for (int64 r = 0; r + 1 < b; ++r) {
    for (int64 c = 0; c < b; ++c) m.at(r, c) = sinv.at(r - c + 1);
  }
  for (int64 c = 0; c < b; ++c) m.at(b - 1, c) = Rational(1);
  return m;
}

SquareMatrix fd_system_matrix(const FDSpec& spec) {
  require_coprime(spec, "fd_system_matrix");
  if (spec.dimension() < 1) {
    throw std::domain_error("fd_system_matrix: d must be >= 1");
  }
  return circulant_system_matrix(difference_op(delta_vector(spec.b), spec.a));
}

Rational fd_sum_cramer(const FDSpec& spec, int64 t) {
  const int64 b = spec.b;
  SquareMatrix m = fd_system_matrix(spec);
  const int64 col = mod_floor(t, b);
  for (int64 r = 0; r + 1 < b; ++r) m.at(r, col) = Rational(-1, b);
  m.at(b - 1, col) = Rational(0);
  Rational det = determinant(m);
  if (b % 2 == 0) det = -det;  // (-1)^{b-1}
  return det / Rational(pow_int(Int(b), static_cast<unsigned>(spec.dimension())));
}

bool constancy_check(const FDSpec& spec) {
  require_coprime(spec, "constancy_check");
  const int64 b = spec.b;
  if (b == 1) return true;
  // Product of (1 - X^{a_i}) in Z[X]/(X^b - 1); X^b = 1 holds modulo
  // 1 + X + ... + X^{b-1}, and the remainder there is constant exactly
  // when the cyclic coefficients c_1..c_{b-1} are all equal.
  std::vector<Int> c(static_cast<std::size_t>(b), Int(0));
  c[0] = 1;
  std::vector<Int> next(static_cast<std::size_t>(b));
  for (int64 ai : spec.a) {
    const int64 r = mod_floor(ai, b);
    for (int64 j = 0; j < b; ++j) {
      next[static_cast<std::size_t>(j)] =
          c[static_cast<std::size_t>(j)] -
          c[static_cast<std::size_t>(mod_floor(j - r, b))];
    }
    c.swap(next);
  }
  for (int64 j = 2; j < b; ++j) {
    if (c[static_cast<std::size_t>(j)] != c[1]) return false;
  }
  return true;
}

namespace {

bool is_odd_prime(int64 p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int64 q = 3; q * q <= p; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

}  // namespace

bool prime_constancy_criterion(std::span<const int64> multiplicities, int64 p) {
  if (!is_odd_prime(p)) {
    throw NotPrimeError("prime_constancy_criterion: p = " + std::to_string(p) +
                        " is not an odd prime");
  }
  if (static_cast<int64>(multiplicities.size()) != p - 1) {
    throw std::invalid_argument(
        "prime_constancy_criterion: need exactly p-1 multiplicities");
  }
  for (int64 e : multiplicities) {
    if (e < 0) throw std::invalid_argument("prime_constancy_criterion: e_i >= 0");
  }
  auto mult = [&](int64 k) { return multiplicities[static_cast<std::size_t>(k - 1)]; };
  int64 total = 0;
  for (int64 k = 1; k <= p - 1; ++k) total += mult(k);
  if (total % (p - 1) != 0) return false;  // (i)
  const int64 e = total / (p - 1);
  for (int64 k = 1; k <= p - 1; ++k) {      // (ii)
    if (mult(k) + mult(p - k) != 2 * e) return false;
  }
  int64 lhs = 0, rhs = 0;                   // (iii), both stated forms
  for (int64 k = 1; k <= (p - 1) / 2; ++k) {
    lhs += k * (e - mult(p - k));
    rhs -= k * (mult(k) - e);
  }
  // Under (ii) the two forms are negatives of each other, so they must
  // agree on divisibility by p.
  if ((mod_floor(lhs, p) == 0) != (mod_floor(rhs, p) == 0)) {
    throw std::logic_error("prime_constancy_criterion: condition (iii) forms disagree");
  }
  return mod_floor(lhs, p) == 0;
}

}  // namespace fdsum
