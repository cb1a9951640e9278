#include "doctest.h"

#include <complex>
#include <numbers>
#include <random>

#include "fdsum/fd_core.hpp"
#include "oracles.hpp"

using namespace fdsum;

namespace {

const std::vector<Rational> kS134{Rational(5, 16), Rational(-1, 16),
                                  Rational(-3, 16), Rational(-1, 16)};

std::vector<int64> coprimes(int64 b) {
  std::vector<int64> out;
  for (int64 m = 1; m < b; ++m) {
    if (gcd64(m, b) == 1) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("FDSpec validation") {
  CHECK_THROWS_AS(FDSpec::make({1}, 0), std::domain_error);
  CHECK_THROWS_AS(FDSpec::make({0}, 4), std::domain_error);
  CHECK_THROWS_AS(FDSpec::make({2}, 4, true), NotCoprimeError);
  CHECK(FDSpec::make({3}, 4, true).requires_coprime);
  CHECK(FDSpec::make({-1}, 4).all_coprime());
  CHECK_FALSE(FDSpec::make({2}, 4).all_coprime());
  CHECK(FDSpec::make({7}, 1).all_coprime());
}

TEST_CASE("zero-dimensional sum") {
  CHECK(s_zero_dim(4, 0) == Rational(3, 4));
  CHECK(s_zero_dim(4, 1) == Rational(-1, 4));
  CHECK(s_zero_dim(1, 7) == Rational(0));
  CHECK(s_zero_dim(5, -5) == Rational(4, 5));
}

TEST_CASE("reduced sums match the brute enumeration") {
  CHECK(reduced_sum(FDSpec::make({1, 2}, 3), 0) == 5);
  CHECK(reduced_sum(FDSpec::make({1, 1}, 5), 0) == 20);
  CHECK(reduced_sum(FDSpec::make({}, 4), 4) == 1);
  CHECK(reduced_sum(FDSpec::make({}, 4), 1) == 0);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int64 b = 1 + static_cast<int64>(rng() % 9);
    const int d = static_cast<int>(rng() % 4);
    std::vector<int64> a;
    for (int i = 0; i < d; ++i) {
      int64 ai = static_cast<int64>(rng() % 21) - 10;  // negatives included
      if (ai == 0) ai = 1;
      a.push_back(ai);
    }
    const FDSpec spec = FDSpec::make(a, b);
    const auto vec = reduced_vector(spec);
    for (int64 t = 0; t < b; ++t) {
      CHECK(vec[static_cast<std::size_t>(t)] == test::brute_reduced(a, b, t));
    }
  }
}

TEST_CASE("reduced values stay within the counting bound") {
  for (int64 b : {2, 5, 9}) {
    for (int d = 0; d <= 3; ++d) {
      std::vector<int64> a(static_cast<std::size_t>(d), 1);
      const Int bound = pow_int(binomial(b, 2), static_cast<unsigned>(d));
      for (const Int& value : reduced_vector(FDSpec::make(a, b))) {
        CHECK(value >= 0);
        CHECK(value <= bound);
      }
    }
  }
}

TEST_CASE("fd_sum reproduces the worked 4-periodic example") {
  const FDSpec spec = FDSpec::make({1, 3}, 4);
  for (int64 t = 0; t < 4; ++t) {
    CHECK(fd_sum(spec, t) == kS134[static_cast<std::size_t>(t)]);
  }
  CHECK(fd_sum(FDSpec::make({1, 2}, 3), 0) == Rational(2, 9));
}

TEST_CASE("prime closed form") {
  for (int64 p : {3, 5, 7}) {
    std::vector<int64> a;
    for (int64 i = 1; i < p; ++i) a.push_back(i);
    const FDSpec spec = FDSpec::make(a, p);
    for (int64 t = 0; t < p; ++t) {
      const Rational want =
          (Rational(p) * delta_z(t, p) - 1) / Rational(p * p);
      CHECK(fd_sum(spec, t) == want);
    }
  }
}

TEST_CASE("one-dimensional closed form via sawtooth") {
  for (int64 b = 1; b <= 20; ++b) {
    for (int64 a : coprimes(std::max<int64>(b, 2))) {
      if (b == 1) break;
      const int64 inv = mod_inverse(a, b).value;
      const FDSpec spec = FDSpec::make({a}, b);
      for (int64 t = 0; t < b; ++t) {
        const Rational want = sawtooth(Rational(inv * t, b)) +
                              delta_z(t, b) / 2 - Rational(1, 2 * b);
        CHECK(fd_sum(spec, t) == want);
      }
    }
  }
}

TEST_CASE("linear-combination recursion equals the reduced route") {
  CHECK(fd_sum_linear_comb(FDSpec::make({1, 3}, 4), 1) == Rational(-1, 16));
  CHECK(fd_sum_linear_comb(FDSpec::make({1}, 2), 0) == Rational(1, 4));
  CHECK(fd_sum_linear_comb(FDSpec::make({1}, 2), 1) == Rational(-1, 4));
  CHECK_THROWS_AS(fd_sum_linear_comb(FDSpec::make({2}, 4), 0), NotCoprimeError);

  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int64 b = 2 + static_cast<int64>(rng() % 12);
    const auto pool = coprimes(b);
    const int d = 1 + static_cast<int>(rng() % 3);
    std::vector<int64> a;
    for (int i = 0; i < d; ++i) a.push_back(pool[rng() % pool.size()]);
    const FDSpec spec = FDSpec::make(a, b);
    CHECK(fd_linear_vector(spec) == fd_vector(spec));
  }
}

TEST_CASE("pair formula") {
  CHECK(fd_sum_pair(1, 3, 4, 0) == Rational(5, 16));
  CHECK(fd_sum_pair(1, 1, 5, 0) == Rational(0));
  CHECK(fd_sum_pair(1, 4, 5, 0) == Rational(2, 5));
  CHECK_THROWS_AS(fd_sum_pair(2, 1, 4, 0), NotCoprimeError);
  for (int64 b = 2; b <= 15; ++b) {
    for (int64 a1 : coprimes(b)) {
      for (int64 a2 : coprimes(b)) {
        const FDSpec spec = FDSpec::make({a1, a2}, b);
        for (int64 t = 0; t < b; ++t) {
          CHECK(fd_sum_pair(a1, a2, b, t) == fd_sum(spec, t));
        }
      }
    }
  }
}

TEST_CASE("complex route stays within tolerance") {
  const std::complex<double> s134 = fd_sum_complex(FDSpec::make({1, 3}, 4), 0);
  CHECK(std::abs(s134.real() - 0.3125) < 1e-12);
  CHECK(std::abs(s134.imag()) < 1e-12);
  CHECK(std::abs(fd_sum_complex(FDSpec::make({1}, 2), 0).real() - 0.25) < 1e-12);
  CHECK(std::abs(fd_sum_complex(FDSpec::make({2}, 5), 0).real() - 0.4) < 1e-9);
  CHECK_THROWS_AS(fd_sum_complex(FDSpec::make({2}, 4), 0), NotCoprimeError);
}

TEST_CASE("generating-function expansion equals reduced sums") {
  CHECK(gen_func_coefficients(FDSpec::make({1, 2}, 3), 0) == 5);
  CHECK(gen_func_coefficients(FDSpec::make({1}, 4), -2) == 2);
  CHECK(gen_func_coefficients(FDSpec::make({}, 6), 0) == 1);
  CHECK(gen_func_coefficients(FDSpec::make({}, 6), 6) == 1);
  CHECK(gen_func_coefficients(FDSpec::make({}, 6), 2) == 0);

  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int64 b = 1 + static_cast<int64>(rng() % 10);
    const int d = static_cast<int>(rng() % 4);
    std::vector<int64> a;
    for (int i = 0; i < d; ++i) a.push_back(1 + static_cast<int64>(rng() % 12));
    const FDSpec spec = FDSpec::make(a, b);
    const auto reduced = reduced_vector(spec);
    for (int64 t = 0; t < b; ++t) {
      CHECK(gen_func_coefficients(spec, t) ==
            reduced[static_cast<std::size_t>(t)]);
    }
  }
}

TEST_CASE("zero mean and periodicity") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const int64 b = 2 + static_cast<int64>(rng() % 14);
    const int d = static_cast<int>(rng() % 4);
    std::vector<int64> a;
    for (int i = 0; i < d; ++i) {
      int64 ai = static_cast<int64>(rng() % 17) - 8;
      if (ai == 0) ai = 3;
      a.push_back(ai);
    }
    const FDSpec spec = FDSpec::make(a, b);
    const auto vec = fd_vector(spec);
    Rational mean(0);
    for (const auto& v : vec) mean += v;
    CHECK(mean == Rational(0));
    CHECK(fd_sum(spec, 3) == fd_sum(spec, 3 + b));
    CHECK(fd_sum(spec, -1) == fd_sum(spec, b - 1));
  }
}

TEST_CASE("a_i matter only modulo b on the reduced route") {
  CHECK(fd_vector(FDSpec::make({-1}, 4)) == fd_vector(FDSpec::make({3}, 4)));
  CHECK(fd_vector(FDSpec::make({7, -2}, 5)) == fd_vector(FDSpec::make({2, 3}, 5)));
}

TEST_CASE("series kernel limits at roots of unity") {
  for (int64 b = 2; b <= 12; ++b) {
    for (int64 a : coprimes(b)) {
      for (int64 j = 0; j < b; ++j) {
        std::complex<double> direct(0.0, 0.0);
        const double step = 2.0 * std::numbers::pi / static_cast<double>(b);
        for (int64 k = 1; k <= b - 1; ++k) {
          direct += static_cast<double>(k) *
                    std::polar(1.0, step * static_cast<double>(mod_floor(j * k * a, b)));
        }
        std::complex<double> limit;
        if (j == 0) {
          limit = static_cast<double>((b * (b - 1)) / 2);
        } else {
          limit = -static_cast<double>(b) /
                  (1.0 - std::polar(1.0, step * static_cast<double>(mod_floor(j * a, b))));
        }
        CHECK(std::abs(direct - limit) < 1e-9);
      }
    }
  }
}
