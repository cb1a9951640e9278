#include "fdsum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <complex>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "fdsum/analysis.hpp"
#include "fdsum/fd_core.hpp"
#include "fdsum/periodic_group.hpp"
#include "fdsum/reciprocity.hpp"

namespace fdsum::verify {

namespace {

constexpr double kComplexTolerance = 1e-9;

std::vector<int64> coprime_residues(int64 b) {
  std::vector<int64> out;
  for (int64 m = 1; m <= b - 1; ++m) {
    if (gcd64(m, b) == 1) out.push_back(m);
  }
  return out;
}

std::string tuple_text(const std::vector<int64>& a, int64 b) {
  std::string s = "a=(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ") b=" + std::to_string(b);
}

// Runs fn(b, arg) for each b in [lo, hi] on up to sweep_threads() workers
// and merges the reports in modulus order.
VerificationReport sweep_range(int64 lo, int64 hi,
                               VerificationReport (*fn)(int64, int), int arg,
                               std::string theorem_id, std::string grid) {
  const int64 count = hi - lo + 1;
  VerificationReport report;
  report.theorem_id = std::move(theorem_id);
  report.grid = std::move(grid);
  if (count <= 0) return report;

  std::vector<VerificationReport> results(static_cast<std::size_t>(count));
  const int workers =
      static_cast<int>(std::min<int64>(sweep_threads(), count));
  std::atomic<int64> cursor{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run = [&] {
    for (int64 i = cursor.fetch_add(1); i < count; i = cursor.fetch_add(1)) {
      try {
        results[static_cast<std::size_t>(i)] = fn(lo + i, arg);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& worker : pool) worker.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  for (const auto& partial : results) report.merge(partial);
  return report;
}

}  // namespace

int sweep_threads() {
  if (const char* env = std::getenv("FD_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

VerificationReport s134_example() {
  VerificationReport report;
  report.theorem_id = "s134-example";
  report.grid = "a=(1,3) b=4, all t, five algorithms";
  const std::vector<Rational> expected{
      Rational(5, 16), Rational(-1, 16), Rational(-3, 16), Rational(-1, 16)};
  FDSpec spec = FDSpec::make({1, 3}, 4, /*require_coprime=*/true);
  for (int64 t = 0; t < 4; ++t) {
    const Rational want = expected[static_cast<std::size_t>(t)];
    const auto check = [&](const char* method, const Rational& got) {
      if (got != want) {
        report.add_failure("t=" + std::to_string(t) + " " + method,
                           to_fraction_string(got), to_fraction_string(want));
      }
    };
    check("reduced", fd_sum(spec, t));
    check("linear", fd_sum_linear_comb(spec, t));
    check("pair", fd_sum_pair(1, 3, 4, t));
    check("cramer", fd_sum_cramer(spec, t));
    const std::complex<double> z = fd_sum_complex(spec, t);
    if (std::abs(z.real() - to_double(want)) > 1e-12 || std::abs(z.imag()) > 1e-12) {
      report.add_failure("t=" + std::to_string(t) + " complex",
                         std::to_string(z.real()), to_fraction_string(want));
    }
  }
  return report;
}

namespace {

VerificationReport five_way_for_modulus(int64 b, int max_d) {
  VerificationReport report;
  const auto residues = coprime_residues(b);

  std::vector<int64> tuple;
  auto check_spec = [&](const FDSpec& spec) {
    const auto reduced = reduced_vector(spec);
    const auto via_delta = fd_vector(spec);
    const auto genfunc = gen_func_vector(spec);
    const auto linear = fd_linear_vector(spec);
    const std::string where = tuple_text(spec.a, b);
    for (int64 t = 0; t < b; ++t) {
      const std::size_t ti = static_cast<std::size_t>(t);
      const Rational& exact = via_delta[ti];
      if (linear[ti] != exact) {
        report.add_failure(where + " t=" + std::to_string(t) + " linear",
                           to_fraction_string(linear[ti]), to_fraction_string(exact));
      }
      if (genfunc[static_cast<std::size_t>(mod_floor(-t, b))] != reduced[ti]) {
        report.add_failure(where + " t=" + std::to_string(t) + " genfunc",
                           genfunc[static_cast<std::size_t>(mod_floor(-t, b))].str(),
                           reduced[ti].str());
      }
      if (spec.dimension() == 2) {
        const Rational pair = fd_sum_pair(spec.a[0], spec.a[1], b, t);
        if (pair != exact) {
          report.add_failure(where + " t=" + std::to_string(t) + " pair",
                             to_fraction_string(pair), to_fraction_string(exact));
        }
      }
      const std::complex<double> z = fd_sum_complex(spec, t);
      if (std::abs(z.real() - to_double(exact)) > kComplexTolerance ||
          std::abs(z.imag()) > kComplexTolerance) {
        report.add_failure(where + " t=" + std::to_string(t) + " complex",
                           std::to_string(z.real()), to_fraction_string(exact));
      }
    }
  };

  auto recurse = [&](auto&& self, int depth) -> void {
    check_spec(FDSpec::make(tuple, b));
    if (depth == max_d) return;
    for (int64 a : residues) {
      tuple.push_back(a);
      self(self, depth + 1);
      tuple.pop_back();
    }
  };
  recurse(recurse, 0);
  return report;
}

}  // namespace

VerificationReport five_way_agreement(int64 max_b, int max_d) {
  return sweep_range(2, max_b, five_way_for_modulus, max_d, "five-way-agreement",
                     "b in [2," + std::to_string(max_b) + "], d <= " +
                         std::to_string(max_d) + ", coprime a_i, all t");
}

namespace {

// Deterministic thinning: keep ceil(limit) evenly spaced items.
bool keep_index(std::size_t index, std::size_t total, std::size_t limit) {
  if (total <= limit) return true;
  return (index * limit) / total != ((index + 1) * limit) / total;
}

}  // namespace

VerificationReport determinant_law(int64 max_b, int max_d, int min_tuples,
                                   int min_noncoprime) {
  VerificationReport report;
  report.theorem_id = "determinant-law";
  report.grid = "b <= " + std::to_string(max_b) + ", d <= " + std::to_string(max_d);

  std::set<std::string> seen;
  for (int d = 1; d <= max_d; ++d) {
    for (int64 b = 2; b <= max_b; ++b) {
      const auto residues = coprime_residues(b);
      // All d=1 tuples; higher dimensions evenly thinned per modulus.
      std::vector<std::vector<int64>> all_tuples{{}};
      for (int level = 0; level < d; ++level) {
        std::vector<std::vector<int64>> extended;
        for (const auto& prefix : all_tuples) {
          for (int64 a : residues) {
            auto next = prefix;
            next.push_back(a);
            extended.push_back(std::move(next));
          }
        }
        all_tuples.swap(extended);
      }
      const std::size_t limit = d == 1 ? all_tuples.size() : (d == 2 ? 12 : 10);
      std::vector<std::vector<int64>> tuples;
      for (std::size_t i = 0; i < all_tuples.size(); ++i) {
        if (keep_index(i, all_tuples.size(), limit)) {
          tuples.push_back(std::move(all_tuples[i]));
        }
      }
      Rational want = Rational(pow_int(Int(b), static_cast<unsigned>(d)));
      if (b % 2 == 0) want = -want;
      for (auto& tuple : tuples) {
        const FDSpec spec = FDSpec::make(tuple, b, /*require_coprime=*/true);
        const Rational det = determinant(fd_system_matrix(spec));
        seen.insert(tuple_text(tuple, b));
        if (det != want) {
          report.add_failure(tuple_text(tuple, b), to_fraction_string(det),
                             to_fraction_string(want));
        }
      }
    }
  }
  if (static_cast<int>(seen.size()) < min_tuples) {
    report.add_failure("tuple count", std::to_string(seen.size()),
                       ">= " + std::to_string(min_tuples));
  }

  // Any shared factor collapses the determinant to zero.
  int noncoprime_count = 0;
  for (int64 b = 4; b <= max_b && noncoprime_count < min_noncoprime; ++b) {
    for (int64 p = 2; p < b && noncoprime_count < min_noncoprime; ++p) {
      if (b % p != 0) continue;
      for (int d = 1; d <= max_d && noncoprime_count < min_noncoprime; ++d) {
        std::vector<int64> tuple(static_cast<std::size_t>(d), 1);
        tuple[0] = p;
        const auto sinv = difference_op(delta_vector(b), tuple);
        const Rational det = determinant(circulant_system_matrix(sinv));
        ++noncoprime_count;
        if (det != 0) {
          report.add_failure(tuple_text(tuple, b) + " noncoprime",
                             to_fraction_string(det), "0/1");
        }
      }
    }
  }
  if (noncoprime_count < min_noncoprime) {
    report.add_failure("noncoprime tuple count", std::to_string(noncoprime_count),
                       ">= " + std::to_string(min_noncoprime));
  }
  return report;
}

namespace {

void pairwise_coprime_multisets(int64 max_a, int dims, std::vector<int64>& cur,
                                const std::function<void(const std::vector<int64>&)>& emit) {
  if (static_cast<int>(cur.size()) == dims) {
    emit(cur);
    return;
  }
  const int64 start = cur.empty() ? 1 : cur.back();
  for (int64 a = start; a <= max_a; ++a) {
    bool ok = true;
    for (int64 prev : cur) {
      if (gcd64(prev, a) != 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    cur.push_back(a);
    pairwise_coprime_multisets(max_a, dims, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

VerificationReport rademacher_extended_grid(int64 max_a, int dims) {
  VerificationReport report;
  report.theorem_id = "rademacher-extended";
  report.grid = "pairwise-coprime " + std::to_string(dims) + "-tuples, parts <= " +
                std::to_string(max_a) + ", all admissible n";
  std::vector<int64> cur;
  pairwise_coprime_multisets(max_a, dims, cur, [&](const std::vector<int64>& a) {
    const int64 min_a = *std::min_element(a.begin(), a.end());
    int64 sum_a = 0;
    for (int64 x : a) sum_a += x;
    auto check_range = [&](int64 lo, int64 hi) {
      for (int64 n = lo; n <= hi; ++n) {
        report.merge(verify_rademacher_extended(a, n));
      }
    };
    check_range(1 - min_a, -1);
    check_range(1, sum_a - 1);
    check_range(sum_a + 1, sum_a + min_a - 1);
  });
  return report;
}

namespace {

VerificationReport average_for_modulus(int64 b, int max_d) {
  VerificationReport report;
  const auto residues = coprime_residues(b);
  const auto s_b = fd_vector(FDSpec::make({}, b));

  // Last-slot averages with every prefix of length < max_d.
  std::vector<std::vector<int64>> prefixes{{}};
  if (max_d >= 2) {
    for (int64 a : residues) prefixes.push_back({a});
  }
  for (const auto& prefix : prefixes) {
    const auto averaged = average_last_vector(prefix, b);
    const auto base = fd_vector(FDSpec::make(prefix, b));
    for (int64 t = 0; t < b; ++t) {
      const Rational want = base[static_cast<std::size_t>(t)] / 2;
      if (averaged[static_cast<std::size_t>(t)] != want) {
        report.add_failure(tuple_text(prefix, b) + " last-slot t=" + std::to_string(t),
                           to_fraction_string(averaged[static_cast<std::size_t>(t)]),
                           to_fraction_string(want));
      }
    }
  }

  // Full averages over all slots.
  for (int d = 1; d <= max_d; ++d) {
    const auto averaged = average_all_vector(d, b);
    const Rational divisor(pow_int(Int(2), static_cast<unsigned>(d)));
    for (int64 t = 0; t < b; ++t) {
      const Rational want = s_b[static_cast<std::size_t>(t)] / divisor;
      if (averaged[static_cast<std::size_t>(t)] != want) {
        report.add_failure("b=" + std::to_string(b) + " d=" + std::to_string(d) +
                               " all-slots t=" + std::to_string(t),
                           to_fraction_string(averaged[static_cast<std::size_t>(t)]),
                           to_fraction_string(want));
      }
    }
  }
  return report;
}

}  // namespace

VerificationReport average_theorem(int64 max_b, int max_d) {
  return sweep_range(3, max_b, average_for_modulus, max_d, "average",
                     "b in [3," + std::to_string(max_b) + "], d <= " +
                         std::to_string(max_d) + ", all t, full sums");
}

namespace {

VerificationReport bounds_for_modulus(int64 b, int) {
  VerificationReport report;
  for (int64 t = 0; t < b; ++t) {
    const BoundsScan scan = bounds_2d_scan(b, t);
    for (const auto& witness : scan.violations) {
      report.passed = false;
      ++report.failure_count;
      if (report.failures.size() < VerificationReport::kMaxWitnesses) {
        report.failures.push_back(witness);
      }
    }
  }
  return report;
}

}  // namespace

VerificationReport bounds_2d_grid(int64 max_b) {
  return sweep_range(2, max_b, bounds_for_modulus, 0, "bounds-2d",
                     "b in [2," + std::to_string(max_b) +
                         "], all coprime pairs, all t, iff-attainment");
}

VerificationReport dedekind_corollary_grid(int64 max_b) {
  VerificationReport report;
  report.theorem_id = "dedekind-corollary";
  report.grid = "b in [1," + std::to_string(max_b) + "], all coprime a";
  for (int64 b = 1; b <= max_b; ++b) {
    const Rational bound = make_rational(Int(b - 1) * Int(b - 2), Int(12) * Int(b));
    for (int64 a = 1; a <= std::max<int64>(b - 1, 1); ++a) {
      if (gcd64(a, b) != 1) continue;
      const std::string params = "(a,b)=(" + std::to_string(a) + "," +
                                 std::to_string(b) + ")";
      const Rational s = dedekind_sum(a, b);
      if (s > bound || s < -bound) {
        report.add_failure(params + " bound", to_fraction_string(s),
                           "|s| <= " + to_fraction_string(bound));
      }
      const bool upper_class = mod_floor(a - 1, b) == 0;
      const bool lower_class = mod_floor(a + 1, b) == 0;
      if ((s == bound && b > 2) != (upper_class && b > 2)) {
        report.add_failure(params + " upper-attainment", to_fraction_string(s),
                           to_fraction_string(bound));
      }
      if ((s == -bound && b > 2) != (lower_class && b > 2)) {
        report.add_failure(params + " lower-attainment", to_fraction_string(s),
                           to_fraction_string(-bound));
      }
      // Link to the two-dimensional sum at t = 0, over every pair with
      // a1 a2^{-1} = a.
      if (b > 1) {
        const Rational rhs = -s + Rational(b - 1, 4 * b);
        for (int64 a2 : coprime_residues(b)) {
          const int64 a1 = mod_floor(a * a2, b);
          const Rational lhs = fd_sum(FDSpec::make({a1, a2}, b), 0);
          if (lhs != rhs) {
            report.add_failure(params + " relation a2=" + std::to_string(a2),
                               to_fraction_string(lhs), to_fraction_string(rhs));
          }
        }
      }
    }
  }
  return report;
}

VerificationReport extrema_grid(int64 max_b) {
  VerificationReport report;
  report.theorem_id = "extrema-2d";
  report.grid = "coprime a < b <= " + std::to_string(max_b) + ", plus b=15 facts";
  for (int64 b = 2; b <= max_b; ++b) {
    for (int64 a = 1; a < b; ++a) {
      if (gcd64(a, b) != 1) continue;
      const ExtremaResult result = extrema_2d(a, b);
      if (!extrema_within_intervals(result)) {
        report.add_failure("(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")",
                           "argmax/argmin outside", "predicted intervals");
      }
    }
  }

  // Reference facts for b = 15.
  const ExtremaResult one = extrema_2d(1, 15);
  for (int64 t : one.argmax_set) {
    if (t < 8 || t > 9) {
      report.add_failure("a=1 b=15 argmax", std::to_string(t), "[8,9]");
    }
  }
  if (one.argmin_set != std::vector<int64>{1}) {
    report.add_failure("a=1 b=15 argmin", "set size " + std::to_string(one.argmin_set.size()),
                       "{1}");
  }
  const ExtremaResult seven = extrema_2d(7, 15);
  for (int64 t : seven.argmax_set) {
    if (t < 8 || t > 15) {
      report.add_failure("a=7 b=15 argmax", std::to_string(t), "[8,15]");
    }
  }
  for (int64 t : seven.argmin_set) {
    if (t < 1 || t > 7) {
      report.add_failure("a=7 b=15 argmin", std::to_string(t), "[1,7]");
    }
  }
  return report;
}

VerificationReport r_shift_grid(int64 max_ab) {
  VerificationReport report;
  report.theorem_id = "r-shift-bound";
  report.grid = "coprime a, b <= " + std::to_string(max_ab) + ", full period";
  for (int64 a = 1; a <= max_ab; ++a) {
    for (int64 b = 1; b <= max_ab; ++b) {
      if (gcd64(a, b) != 1) continue;
      report.merge(r_shift_bound(a, b));
    }
  }
  return report;
}

VerificationReport bounds_recip_cases() {
  VerificationReport report;
  report.theorem_id = "bounds-recip";
  report.grid = "(a,b) in {(2,3),(11,10),(64,75)}";
  for (const auto& [a, b] : std::vector<std::pair<int64, int64>>{{2, 3}, {11, 10}, {64, 75}}) {
    report.merge(bounds_recip_corollary(a, b));
  }
  return report;
}

VerificationReport lattice_grid(int64 max_ef, int64 max_t) {
  VerificationReport report;
  report.theorem_id = "lattice-count";
  report.grid = "coprime e, f <= " + std::to_string(max_ef) + ", r <= ef, t <= " +
                std::to_string(max_t);
  for (int64 e = 1; e <= max_ef; ++e) {
    for (int64 f = 1; f <= max_ef; ++f) {
      if (gcd64(e, f) != 1) continue;
      for (int64 r = 1; r <= e * f; ++r) {
        const TriangleSpec tri{e, f, r};
        for (int64 t = 0; t <= max_t; ++t) {
          const std::string params = "e=" + std::to_string(e) + " f=" + std::to_string(f) +
                                     " r=" + std::to_string(r) + " t=" + std::to_string(t);
          Rational formula;
          try {
            formula = lattice_count_formula(tri, t);
          } catch (const NonIntegerResultError& err) {
            report.add_failure(params, err.what(), "integer");
            continue;
          }
          const Int brute = lattice_count_brute(tri, t);
          if (formula != Rational(brute)) {
            report.add_failure(params, to_fraction_string(formula), brute.str());
          }
        }
      }
    }
  }
  return report;
}

namespace {

void multisets_of_size(int64 max_value, int size, std::vector<int64>& cur,
                       const std::function<void(const std::vector<int64>&)>& emit) {
  if (static_cast<int>(cur.size()) == size) {
    emit(cur);
    return;
  }
  const int64 start = cur.empty() ? 1 : cur.back();
  for (int64 a = start; a <= max_value; ++a) {
    cur.push_back(a);
    multisets_of_size(max_value, size, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

VerificationReport constancy_grid(const std::vector<int64>& primes, int max_multisets) {
  VerificationReport report;
  report.theorem_id = "constancy";
  report.grid = "multisets over {1..p-1}, d in {p-1, 2(p-1)}, <= " +
                std::to_string(max_multisets) + " per (p, d)";
  for (int64 p : primes) {
    for (int scale = 1; scale <= 2; ++scale) {
      const int d = scale * static_cast<int>(p - 1);
      std::vector<std::vector<int64>> multisets;
      std::vector<int64> cur;
      multisets_of_size(p - 1, d, cur,
                        [&](const std::vector<int64>& m) { multisets.push_back(m); });
      const std::size_t total = multisets.size();
      const std::size_t limit = static_cast<std::size_t>(max_multisets);
      for (std::size_t i = 0; i < total; ++i) {
        if (!keep_index(i, total, limit)) continue;
        const auto& a = multisets[i];
        const FDSpec spec = FDSpec::make(a, p, /*require_coprime=*/true);
        const bool by_polynomial = constancy_check(spec);
        std::vector<int64> mult(static_cast<std::size_t>(p - 1), 0);
        for (int64 x : a) ++mult[static_cast<std::size_t>(x - 1)];
        const bool by_criterion = prime_constancy_criterion(mult, p);
        const auto values = fd_vector(spec);
        bool by_values = true;
        for (int64 t = 2; t <= p - 1; ++t) {
          if (values[static_cast<std::size_t>(t)] != values[1]) {
            by_values = false;
            break;
          }
        }
        if (by_polynomial != by_values || by_criterion != by_values) {
          report.add_failure(tuple_text(a, p),
                             "poly=" + std::to_string(by_polynomial) +
                                 " criterion=" + std::to_string(by_criterion),
                             "values=" + std::to_string(by_values));
        }
      }
    }
  }
  return report;
}

VerificationReport group_laws(int64 max_b) {
  VerificationReport report;
  report.theorem_id = "group-laws";
  report.grid = "b in [2," + std::to_string(max_b) + "], generators and inverses";
  for (int64 b = 2; b <= max_b; ++b) {
    const auto residues = coprime_residues(b);
    const PeriodicVector identity = s_b_vector(b);
    const std::string where = "b=" + std::to_string(b);

    if (convolve(identity, identity) != identity) {
      report.add_failure(where + " S_b*S_b", "!=", "S_b");
    }
    std::vector<PeriodicVector> gens;
    for (int64 a : residues) gens.push_back(fd_periodic(FDSpec::make({a}, b)));

    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int64 a = residues[i];
      if (convolve(identity, gens[i]) != gens[i]) {
        report.add_failure(where + " identity a=" + std::to_string(a), "!=", "S_(a;b)");
      }
      const FDInverse inv = fd_inverse(FDSpec::make({a}, b));
      if (convolve(gens[i], inv.underlying) != identity) {
        report.add_failure(where + " inverse a=" + std::to_string(a), "!=", "S_b");
      }
      for (std::size_t j = i; j < gens.size(); ++j) {
        if (convolve(gens[i], gens[j]) != convolve(gens[j], gens[i])) {
          report.add_failure(where + " commutativity", std::to_string(a),
                             std::to_string(residues[j]));
        }
      }
    }

    // Two-dimensional inverses and associativity on generator triples.
    for (int64 a1 : residues) {
      for (int64 a2 : residues) {
        const FDSpec spec = FDSpec::make({a1, a2}, b);
        if (convolve(fd_periodic(spec), fd_inverse(spec).underlying) != identity) {
          report.add_failure(where + " inverse d=2 " + tuple_text(spec.a, b), "!=", "S_b");
        }
      }
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
          if (convolve(convolve(gens[i], gens[j]), gens[k]) !=
              convolve(gens[i], convolve(gens[j], gens[k]))) {
            report.add_failure(where + " associativity",
                               std::to_string(residues[i]) + "," +
                                   std::to_string(residues[j]),
                               std::to_string(residues[k]));
          }
        }
      }
    }
  }
  return report;
}

VerificationReport convolution_characterization_random(int64 max_b, int trials) {
  VerificationReport report;
  report.theorem_id = "convolution-characterization";
  report.grid = "b in [2," + std::to_string(max_b) + "], seeded zero-mean vectors";
  std::mt19937 rng(424243);
  for (int64 b = 2; b <= max_b; ++b) {
    const auto residues = coprime_residues(b);
    std::vector<std::vector<int64>> specs;
    for (int64 a : residues) specs.push_back({a});
    specs.push_back({residues.front(), residues.back()});
    for (const auto& a_list : specs) {
      const FDSpec spec = FDSpec::make(a_list, b);
      const PeriodicVector f = fd_periodic(spec);
      for (int trial = 0; trial < trials; ++trial) {
        // Integer samples scaled by b, recentered to zero mean.
        std::vector<int64> raw(static_cast<std::size_t>(b));
        int64 total = 0;
        for (auto& x : raw) {
          x = static_cast<int64>(rng() % 19) - 9;
          total += x;
        }
        PeriodicVector g{b, std::vector<Rational>(static_cast<std::size_t>(b))};
        bool all_zero = true;
        for (int64 t = 0; t < b; ++t) {
          const int64 v = raw[static_cast<std::size_t>(t)] * b - total;
          g.samples[static_cast<std::size_t>(t)] = Rational(v);
          all_zero = all_zero && v == 0;
        }
        if (all_zero) g.samples[0] = Rational(b), g.samples[1] = Rational(-b);
        if (!check_convolution_characterization(a_list, f, g)) {
          report.add_failure(tuple_text(a_list, b) + " trial=" + std::to_string(trial),
                             "equation fails", "must hold for zero-mean g");
        }
      }
    }
    // A wrong f must fail against a fully supported g.
    const PeriodicVector wrong = fd_periodic(FDSpec::make({residues.back()}, b));
    const std::vector<int64> a_list{residues.front()};
    if (residues.size() > 1) {
      PeriodicVector g = fd_periodic(FDSpec::make({residues.front()}, b));
      if (check_convolution_characterization(a_list, wrong, g)) {
        report.add_failure("b=" + std::to_string(b) + " wrong-f",
                           "equation holds", "must fail");
      }
    }
  }
  return report;
}

namespace {

VerificationReport pie_for_modulus(int64 b, int max_d) {
  VerificationReport report;
  const auto residues = coprime_residues(b);
  std::vector<int64> tuple;
  auto recurse = [&](auto&& self, int depth) -> void {
    if (depth > 0) {
      const FDSpec spec = FDSpec::make(tuple, b);
      int64 shift_by = 0;
      for (int64 a : tuple) shift_by += a;
      const auto direct = fd_vector(spec);
      const auto negation = pie_negation_vector(spec);
      const auto shifted = pie_shift_vector(spec);
      auto direct_at = [&](int64 t) -> const Rational& {
        return direct[static_cast<std::size_t>(mod_floor(t, b))];
      };
      for (int64 t = 0; t < b; ++t) {
        if (negation[static_cast<std::size_t>(t)] != direct_at(-t)) {
          report.add_failure(tuple_text(tuple, b) + " negation t=" + std::to_string(t),
                             to_fraction_string(negation[static_cast<std::size_t>(t)]),
                             to_fraction_string(direct_at(-t)));
        }
        if (shifted[static_cast<std::size_t>(t)] != direct_at(t + shift_by)) {
          report.add_failure(tuple_text(tuple, b) + " shift t=" + std::to_string(t),
                             to_fraction_string(shifted[static_cast<std::size_t>(t)]),
                             to_fraction_string(direct_at(t + shift_by)));
        }
      }
    }
    if (depth == max_d) return;
    for (int64 a : residues) {
      tuple.push_back(a);
      self(self, depth + 1);
      tuple.pop_back();
    }
  };
  recurse(recurse, 0);
  return report;
}

}  // namespace

VerificationReport pie_grid(int64 max_b, int max_d) {
  return sweep_range(2, max_b, pie_for_modulus, max_d, "pie",
                     "b in [2," + std::to_string(max_b) + "], d <= " +
                         std::to_string(max_d) + ", all t");
}

VerificationReport concavity_grid(int64 max_b) {
  VerificationReport report;
  report.theorem_id = "concavity";
  report.grid = "b in [2," + std::to_string(max_b) + "], all coprime pairs";
  for (int64 b = 2; b <= max_b; ++b) {
    for (int64 a1 : coprime_residues(b)) {
      for (int64 a2 : coprime_residues(b)) {
        report.merge(concavity_check(a1, a2, b));
      }
    }
  }
  return report;
}

}  // namespace fdsum::verify
