#include "fdsum/fd_core.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace fdsum {

namespace {

std::string spec_text(const FDSpec& spec) {
  std::string s = "(";
  for (std::size_t i = 0; i < spec.a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(spec.a[i]);
  }
  s += ";" + std::to_string(spec.b) + ")";
  return s;
}

}  // namespace

FDSpec FDSpec::make(std::vector<int64> a, int64 b, bool require) {
  if (b < 1) throw std::domain_error("FDSpec: b must be >= 1");
  for (int64 ai : a) {
    if (ai == 0) throw std::domain_error("FDSpec: a_i must be nonzero");
  }
  FDSpec spec{std::move(a), b, require};
  if (require) require_coprime(spec, "FDSpec");
  return spec;
}

bool FDSpec::all_coprime() const {
  if (b == 1) return true;
  for (int64 ai : a) {
    if (gcd64(mod_floor(ai, b), b) != 1) return false;
  }
  return true;
}

void require_coprime(const FDSpec& spec, const char* who) {
  if (!spec.all_coprime()) {
    throw NotCoprimeError(std::string(who) + ": a_i not coprime to b in " +
                          spec_text(spec));
  }
}

Rational s_zero_dim(int64 b, int64 t) {
  if (b < 1) throw std::domain_error("s_zero_dim: b must be >= 1");
  return delta_z(t, b) - Rational(1, b);
}

std::vector<Int> reduced_vector(const FDSpec& spec) {
  const int64 b = spec.b;
  std::vector<Int> cur(static_cast<std::size_t>(b), Int(0));
  cur[0] = 1;  // d = 0: delta_Z(t/b)
  std::vector<Int> next(static_cast<std::size_t>(b));
  for (int64 ai : spec.a) {
    const int64 r = mod_floor(ai, b);  // congruence depends on a_i mod b only
    for (int64 t = 0; t < b; ++t) {
      Int acc(0);
      int64 idx = mod_floor(t + r, b);
      for (int64 k = 1; k <= b - 1; ++k) {
        acc += Int(k) * cur[static_cast<std::size_t>(idx)];
        idx += r;
        if (idx >= b) idx -= b;
      }
      next[static_cast<std::size_t>(t)] = acc;
    }
    cur.swap(next);
  }
  return cur;
}

Int reduced_sum(const FDSpec& spec, int64 t) {
  return reduced_vector(spec)[static_cast<std::size_t>(mod_floor(t, spec.b))];
}

std::vector<Rational> fd_vector(const FDSpec& spec) {
  const int64 b = spec.b;
  const int d = spec.dimension();
  const auto reduced = reduced_vector(spec);
  const Int scale = pow_int(Int(b), static_cast<unsigned>(d) + 1);
  const Int cterm = pow_int(binomial(b, 2), static_cast<unsigned>(d));
  std::vector<Rational> out(static_cast<std::size_t>(b));
  for (int64 t = 0; t < b; ++t) {
    Int num = Int(b) * reduced[static_cast<std::size_t>(t)] - cterm;
    if (d % 2 == 1) num = -num;
    out[static_cast<std::size_t>(t)] = make_rational(num, scale);
  }
  return out;
}

Rational fd_sum(const FDSpec& spec, int64 t) {
  return fd_vector(spec)[static_cast<std::size_t>(mod_floor(t, spec.b))];
}

std::vector<Rational> fd_linear_vector(const FDSpec& spec) {
  require_coprime(spec, "fd_sum_linear_comb");
  const int64 b = spec.b;
  // Integer form: L_j = b^{j+1} S_j satisfies
  // L_j(t) = -sum_k k L_{j-1}(t + k a_j), with L_0 = b delta - 1.
  std::vector<Int> cur(static_cast<std::size_t>(b), Int(-1));
  cur[0] = b - 1;
  std::vector<Int> next(static_cast<std::size_t>(b));
  for (int64 ai : spec.a) {
    const int64 r = mod_floor(ai, b);
    for (int64 t = 0; t < b; ++t) {
      Int acc(0);
      int64 idx = mod_floor(t + r, b);
      for (int64 k = 1; k <= b - 1; ++k) {
        acc += Int(k) * cur[static_cast<std::size_t>(idx)];
        idx += r;
        if (idx >= b) idx -= b;
      }
      next[static_cast<std::size_t>(t)] = -acc;
    }
    cur.swap(next);
  }
  const Int scale = pow_int(Int(b), static_cast<unsigned>(spec.dimension()) + 1);
  std::vector<Rational> out(static_cast<std::size_t>(b));
  for (int64 t = 0; t < b; ++t) {
    out[static_cast<std::size_t>(t)] =
        make_rational(cur[static_cast<std::size_t>(t)], scale);
  }
  return out;
}

Rational fd_sum_linear_comb(const FDSpec& spec, int64 t) {
  return fd_linear_vector(spec)[static_cast<std::size_t>(mod_floor(t, spec.b))];
}

Rational fd_sum_pair(int64 a1, int64 a2, int64 b, int64 t) {
  if (b < 1) throw std::domain_error("fd_sum_pair: b must be >= 1");
  if (b > 1 && (gcd64(mod_floor(a1, b), b) != 1 || gcd64(mod_floor(a2, b), b) != 1)) {
    throw NotCoprimeError("fd_sum_pair: a1, a2 must be coprime to b");
  }
  const int64 inv2 = mod_inverse(a2, b).value;
  Int tilde(0);
  for (int64 k = 1; k <= b - 1; ++k) {
    const int64 cls = mod_floor(inv2 * mod_floor(-t - k * a1, b), b);
    tilde += Int(k) * Int(cls);
  }
  const Int c = binomial(b, 2);
  return make_rational(Int(b) * tilde - c * c, pow_int(Int(b), 3));
}

std::complex<double> fd_sum_complex(const FDSpec& spec, int64 t) {
  require_coprime(spec, "fd_sum_complex");
  const int64 b = spec.b;
  if (b == 1) return {0.0, 0.0};
  const double step = 2.0 * std::numbers::pi / static_cast<double>(b);
  auto root = [&](int64 e) {
    return std::polar(1.0, step * static_cast<double>(mod_floor(e, b)));
  };
  std::complex<double> acc(0.0, 0.0);
  for (int64 j = 1; j <= b - 1; ++j) {
    std::complex<double> term = root(j * t);
    for (int64 ai : spec.a) {
      term /= 1.0 - root(j * ai);
    }
    acc += term;
  }
  return acc / static_cast<double>(b);
}

namespace {

// Dense product with true exponents; Coeff is int64 when the coefficient
// bound C(b,2)^d fits, Int otherwise.
template <typename Coeff>
std::vector<Int> gen_func_classes(const FDSpec& spec) {
  const int64 b = spec.b;
  std::vector<Coeff> poly{Coeff(1)};
  for (int64 ai : spec.a) {
    const int64 r = mod_floor(ai, b);
    std::vector<Coeff> next(poly.size() + static_cast<std::size_t>((b - 1) * r),
                            Coeff(0));
    for (std::size_t e = 0; e < poly.size(); ++e) {
      if (poly[e] == 0) continue;
      for (int64 k = 1; k <= b - 1; ++k) {
        next[e + static_cast<std::size_t>(k * r)] += poly[e] * Coeff(k);
      }
    }
    poly.swap(next);
  }
  std::vector<Int> classes(static_cast<std::size_t>(b), Int(0));
  for (std::size_t e = 0; e < poly.size(); ++e) {
    classes[e % static_cast<std::size_t>(b)] += Int(poly[e]);
  }
  return classes;
}

}  // namespace

std::vector<Int> gen_func_vector(const FDSpec& spec) {
  const Int bound =
      pow_int(binomial(spec.b, 2), static_cast<unsigned>(spec.dimension()));
  if (bound < (Int(1) << 62)) {
    return gen_func_classes<int64>(spec);
  }
  return gen_func_classes<Int>(spec);
}

Int gen_func_coefficients(const FDSpec& spec, int64 t) {
  const auto classes = gen_func_vector(spec);
  return classes[static_cast<std::size_t>(mod_floor(-t, spec.b))];
}

}  // namespace fdsum
