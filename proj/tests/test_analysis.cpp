#include "doctest.h"

#include "fdsum/analysis.hpp"
#include "fdsum/reciprocity.hpp"
#include "oracles.hpp"

using namespace fdsum;

TEST_CASE("last-slot averages") {
  const std::vector<int64> empty{};
  CHECK(average_last(empty, 3, 0) == Rational(1, 3));
  CHECK(average_last(empty, 4, 1) == Rational(-1, 8));

  const std::vector<int64> one{1};
  CHECK(average_last(one, 5, 2) == fd_sum(FDSpec::make({1}, 5), 2) / 2);
  CHECK(average_last(one, 5, 2) == average_last(one, 5, 2, /*use_closed_form=*/true));

  CHECK_THROWS_AS(average_last(empty, 2, 0), BTooSmallError);
  CHECK_THROWS_AS(average_last(std::vector<int64>{2}, 4, 0), NotCoprimeError);
}

TEST_CASE("all-slot averages") {
  CHECK(average_all(1, 3, 0) == Rational(1, 3));
  CHECK(average_all(2, 5, 0) == Rational(1, 5));
  CHECK(average_all(2, 5, 1) == Rational(-1, 20));
  CHECK(average_all(2, 5, 1, /*use_closed_form=*/true) == Rational(-1, 20));
  CHECK_THROWS_AS(average_all(1, 2, 0), BTooSmallError);

  // The d = 2, b = 5 average really is the 16-term sum.
  Rational total(0);
  for (int64 m1 = 1; m1 <= 4; ++m1) {
    for (int64 m2 = 1; m2 <= 4; ++m2) {
      total += fd_sum(FDSpec::make({m1, m2}, 5), 0);
    }
  }
  CHECK(average_all(2, 5, 0) == total / 16);
}

TEST_CASE("negating the first parameter") {
  const FDSpec one_four = FDSpec::make({1}, 4);
  CHECK(negate_first(one_four, 0) == fd_sum(FDSpec::make({3}, 4), 0));
  CHECK(negate_first(one_four, 0) == fd_sum(FDSpec::make({-1}, 4), 0));

  const FDSpec spec134 = FDSpec::make({1, 3}, 4);
  CHECK(negate_first(spec134, 1) == fd_sum(FDSpec::make({3, 3}, 4), 1));

  const FDSpec two_five = FDSpec::make({2}, 5);
  CHECK(negate_first(two_five, 0) == fd_sum(FDSpec::make({3}, 5), 0));

  for (int64 b = 2; b <= 12; ++b) {
    for (int64 a1 = 1; a1 < b; ++a1) {
      if (gcd64(a1, b) != 1) continue;
      const FDSpec spec = FDSpec::make({a1, 1}, b);
      for (int64 t = 0; t < b; ++t) {
        CHECK(negate_first(spec, t) == fd_sum(FDSpec::make({-a1, 1}, b), t));
      }
    }
  }
}

TEST_CASE("classical Dedekind sums") {
  CHECK(dedekind_sum(1, 3) == Rational(1, 18));
  CHECK(dedekind_sum(1, 1) == Rational(0));
  for (int64 b = 2; b <= 15; ++b) {
    CHECK(dedekind_sum(b - 1, b) == -dedekind_sum(1, b));
    CHECK(dedekind_sum(1, b) ==
          make_rational(Int(b - 1) * Int(b - 2), Int(12) * Int(b)));
  }
  CHECK_THROWS_AS(dedekind_sum(2, 4), NotCoprimeError);

  // Relation to the two-dimensional sum at t = 0.
  for (int64 b = 2; b <= 12; ++b) {
    for (int64 a1 = 1; a1 < b; ++a1) {
      if (gcd64(a1, b) != 1) continue;
      for (int64 a2 = 1; a2 < b; ++a2) {
        if (gcd64(a2, b) != 1) continue;
        const int64 ratio = mod_floor(a1 * mod_inverse(a2, b).value, b);
        CHECK(fd_sum(FDSpec::make({a1, a2}, b), 0) ==
              -dedekind_sum(ratio, b) + Rational(b - 1, 4 * b));
      }
    }
  }
}

TEST_CASE("extrema scans") {
  const ExtremaResult one = extrema_2d(1, 15);
  CHECK(one.argmin_set == std::vector<int64>{1});
  for (int64 t : one.argmax_set) {
    CHECK(t >= 8);
    CHECK(t <= 9);
  }
  CHECK(extrema_within_intervals(one));

  const ExtremaResult seven = extrema_2d(7, 15);
  for (int64 t : seven.argmax_set) {
    CHECK(t >= 8);
    CHECK(t <= 15);
  }
  for (int64 t : seven.argmin_set) {
    CHECK(t >= 1);
    CHECK(t <= 7);
  }
  CHECK(extrema_within_intervals(seven));

  const ExtremaResult tiny = extrema_2d(1, 2);
  CHECK(tiny.argmax_set == std::vector<int64>{2});
  CHECK(tiny.argmin_set == std::vector<int64>{1});
  CHECK(tiny.max_value == Rational(1, 8));
  CHECK(tiny.min_value == Rational(-1, 8));

  CHECK_THROWS_AS(extrema_2d(2, 4), NotCoprimeError);
}

TEST_CASE("two-dimensional bounds certificates") {
  const BoundsScan scan0 = bounds_2d_scan(5, 0);
  CHECK(scan0.violations.empty());  // the t = 0 branch is exact
  const BoundsCertificate at0 = scan0.certificate;
  CHECK(at0.upper == Rational(2, 5));
  CHECK(at0.lower == Rational(0));
  const std::vector<std::pair<int64, int64>> upper_expected{
      {1, 4}, {2, 3}, {3, 2}, {4, 1}};
  CHECK(at0.upper_attainers == upper_expected);
  const std::vector<std::pair<int64, int64>> lower_expected{
      {1, 1}, {2, 2}, {3, 3}, {4, 4}};
  CHECK(at0.lower_attainers == lower_expected);

  const BoundsScan at1 = bounds_2d_scan(5, 1);
  CHECK(at1.certificate.lower == Rational(-2, 5));
  const std::vector<std::pair<int64, int64>> only11{{1, 1}};
  CHECK(at1.certificate.lower_attainers == only11);
  // The observed maximum genuinely exceeds the stated t != 0 upper of 0:
  // S_{(2,2;5)}(1) = 1/5, cross-checked by every evaluation route. The
  // scan reports the mismatch instead of hiding it.
  CHECK(at1.certificate.upper == Rational(1, 5));
  CHECK(fd_sum(FDSpec::make({2, 2}, 5), 1) == Rational(1, 5));
  CHECK(fd_sum_pair(2, 2, 5, 1) == Rational(1, 5));
  CHECK_FALSE(at1.violations.empty());

  const BoundsCertificate degenerate = bounds_2d(2, 0);
  CHECK(degenerate.upper == Rational(1, 8));
  CHECK(degenerate.lower == Rational(1, 8));  // -(b-1)(b-5)/12b at b=2
  CHECK(fd_sum(FDSpec::make({1, 1}, 2), 0) == Rational(1, 8));
  CHECK(bounds_2d_scan(2, 1).violations.empty());
}

TEST_CASE("concavity pattern") {
  CHECK(concavity_check(3, 5, 11).passed);
  CHECK(concavity_check(1, 3, 4).passed);
  CHECK(concavity_check(1, 1, 5).passed);
  CHECK_THROWS_AS(concavity_check(2, 1, 4), NotCoprimeError);

  // The b = 11 instance quoted for t = 1: inner pair beats outer pair.
  const auto values = fd_vector(FDSpec::make({3, 5}, 11));
  const Rational outer = values[1] + values[9];
  const Rational inner = values[4] + values[6];
  CHECK(outer / 2 < inner / 2);
}

TEST_CASE("shift bound for reciprocal sums") {
  CHECK(r_shift_bound(11, 10).passed);
  CHECK(r_shift_bound(1, 1).passed);

  const VerificationReport small = r_shift_bound(2, 3);
  CHECK(small.passed);
  // Bound value 1 - (1/2)(1/2 + 1/3) = 7/12, met with equality at t = 1.
  const std::vector<int64> parts{2, 1, 3};
  const Rational diff =
      reciprocal_sum_R(parts, 6) - reciprocal_sum_R(parts, 1);
  CHECK(diff == Rational(7, 12));

  CHECK_THROWS_AS(r_shift_bound(2, 4), NotCoprimeError);
}

TEST_CASE("reciprocity quadratic bound") {
  CHECK(bounds_recip_corollary(64, 75).passed);
  CHECK(bounds_recip_corollary(2, 3).passed);
  CHECK(bounds_recip_corollary(1, 2).passed);
  CHECK(bounds_recip_corollary(1, 1).passed);
}
