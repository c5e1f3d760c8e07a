#include "rdsys/ff.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rdsys {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Remainder of a modulo the monic polynomial m over F_p. Low degree first.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a, std::span<const std::uint32_t> m,
                                    std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    std::uint32_t lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) {
        a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q) {
  auto ps = prime_factors(q);
  if (q < 2 || ps.size() != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  std::uint32_t r = 0;
  while (q > 1) {
    q /= ps[0];
    ++r;
  }
  return {static_cast<std::uint32_t>(ps[0]), r};
}

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
  const std::size_t deg = monic.size() - 1;
  if (deg == 0) return false;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint32_t> divisor(d + 1, 0);
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      divisor[d] = 1;
      auto rem = poly_rem(std::vector<std::uint32_t>(monic.begin(), monic.end()), divisor, p);
      if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus)
    : p_(p), r_(r), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < r; ++i) q_ *= p;

  auto slow_pow = [this](Value a, std::uint64_t e) {
    Value acc = 1;
    while (e) {
      if (e & 1) acc = poly_mul(acc, a);
      a = poly_mul(a, a);
      e >>= 1;
    }
    return acc;
  };

  const std::uint32_t n = q_ - 1;
  const auto factors = prime_factors(n);
  Value g = 1;
  for (Value cand = 1; cand < q_; ++cand) {
    bool primitive = true;
    for (auto f : factors) {
      if (slow_pow(cand, n / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  exp_.resize(n);
  log_.assign(q_, 0);
  Value x = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = poly_mul(x, g);
  }
  if (x != 1) throw std::logic_error("field generator search failed");
}

Field::Value Field::poly_mul(Value a, Value b) const {
  auto ca = coefficients(a);
  auto cb = coefficients(b);
  std::vector<std::uint32_t> prod(2 * r_ - 1, 0);
  for (std::uint32_t i = 0; i < r_; ++i) {
    if (!ca[i]) continue;
    for (std::uint32_t j = 0; j < r_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(ca[i]) * cb[j]) % p_);
    }
  }
  auto rem = poly_rem(std::move(prod), modulus_, p_);
  rem.resize(r_, 0);
  return from_coefficients(rem);
}

std::vector<std::uint32_t> Field::coefficients(Value a) const {
  std::vector<std::uint32_t> c(r_);
  for (std::uint32_t i = 0; i < r_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Field::Value Field::from_coefficients(std::span<const std::uint32_t> c) const {
  Value v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + (c[i] % p_);
  return v;
}

Field::Value Field::from_int(std::int64_t n) const {
  std::int64_t m = n % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<Value>(m);
}

Field::Value Field::add(Value a, Value b) const {
  if (r_ == 1) return (a + b) % p_;
  Value out = 0, scale = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Field::Value Field::neg(Value a) const {
  if (r_ == 1) return (p_ - a) % p_;
  Value out = 0, scale = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Field::Value Field::sub(Value a, Value b) const { return add(a, neg(b)); }

Field::Value Field::mul(Value a, Value b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(std::uint64_t(log_[a]) + log_[b]) % (q_ - 1)];
}

Field::Value Field::inv(Value a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Field::Value Field::pow(Value a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

bool Field::is_square(Value a) const {
  if (a == 0 || p_ == 2) return true;
  return log_[a] % 2 == 0;
}

std::uint32_t Field::multiplicative_order(Value a) const {
  if (a == 0) throw std::domain_error("order of zero");
  return (q_ - 1) / std::gcd(log_[a], q_ - 1);
}

std::string Field::name() const { return "F_" + std::to_string(q_); }

FieldPtr field_make(std::uint32_t p, std::uint32_t r) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic is not prime: " + std::to_string(p));
  if (r == 0) throw std::invalid_argument("field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw std::invalid_argument("field order exceeds limit");
  }
  // Lexicographic order with the constant term most significant.
  std::vector<std::uint32_t> modulus(r + 1, 0);
  modulus[r] = 1;
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    std::uint64_t t = idx;
    for (std::uint32_t k = r; k-- > 0;) {
      modulus[k] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    if (is_irreducible(modulus, p)) return FieldPtr(new Field(p, r, modulus));
  }
  throw std::logic_error("no irreducible polynomial found");
}

Field::Value least_nonsquare(const Field& f) {
  if (f.characteristic() == 2) throw std::domain_error("even order field has no nonsquares");
  for (Field::Value a = 1; a < f.order(); ++a) {
    if (!f.is_square(a)) return a;
  }
  throw std::logic_error("no nonsquare found");
}

std::vector<std::pair<Field::Value, Field::Value>> pell_solutions(const Field& f, Field::Value eps,
                                                                  Field::Value c) {
  if (f.is_square(eps)) throw std::invalid_argument("pell_solutions: coefficient is a square");
  std::vector<std::pair<Field::Value, Field::Value>> out;
  for (Field::Value u = 0; u < f.order(); ++u) {
    for (Field::Value v = 0; v < f.order(); ++v) {
      if (f.sub(f.mul(u, u), f.mul(eps, f.mul(v, v))) == c) out.emplace_back(u, v);
    }
  }
  return out;
}

FieldMatrix identity_matrix(std::uint32_t n) {
  FieldMatrix m(n, n);
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FieldMatrix mat_mul(const Field& f, const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  FieldMatrix c(a.rows, b.cols);
  for (std::uint32_t i = 0; i < a.rows; ++i)
    for (std::uint32_t j = 0; j < b.cols; ++j) {
      Field::Value acc = 0;
      for (std::uint32_t k = 0; k < a.cols; ++k) acc = f.add(acc, f.mul(a.at(i, k), b.at(k, j)));
      c.at(i, j) = acc;
    }
  return c;
}

FieldMatrix mat_add(const Field& f, const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("mat_add: shape mismatch");
  FieldMatrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) c.data[i] = f.add(a.data[i], b.data[i]);
  return c;
}

FieldMatrix mat_neg(const Field& f, const FieldMatrix& a) {
  FieldMatrix c = a;
  for (auto& v : c.data) v = f.neg(v);
  return c;
}

std::vector<Field::Value> mat_apply(const Field& f, const FieldMatrix& a,
                                    std::span<const Field::Value> v) {
  if (v.size() != a.cols) throw std::invalid_argument("mat_apply: shape mismatch");
  std::vector<Field::Value> out(a.rows, 0);
  for (std::uint32_t i = 0; i < a.rows; ++i)
    for (std::uint32_t k = 0; k < a.cols; ++k) out[i] = f.add(out[i], f.mul(a.at(i, k), v[k]));
  return out;
}

Field::Value determinant(const Field& f, FieldMatrix a) {
  if (a.rows != a.cols) throw std::invalid_argument("determinant: matrix not square");
  const std::uint32_t n = a.rows;
  Field::Value det = 1;
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::uint32_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      det = f.neg(det);
    }
    const Field::Value pv = a.at(col, col);
    det = f.mul(det, pv);
    const Field::Value pinv = f.inv(pv);
    for (std::uint32_t i = col + 1; i < n; ++i) {
      const Field::Value factor = f.mul(a.at(i, col), pinv);
      if (!factor) continue;
      for (std::uint32_t j = col; j < n; ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(col, j)));
    }
  }
  return det;
}

}  // namespace rdsys
