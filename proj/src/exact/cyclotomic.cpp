#include "eigcontain/exact/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "eigcontain/errors.hpp"
#include "eigcontain/simd/kernels.hpp"

namespace eigc {

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

namespace {

using Poly = std::vector<std::int64_t>;

// Exact quotient of a by the monic polynomial b.
Poly divide_monic(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {0};
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t k = 0; k <= db; ++k) a[i - db + k] -= c * b[k];
  }
  return q;
}

// Phi_N from x^N - 1 divided by Phi_d for every proper divisor d.
Poly cyclotomic_polynomial(std::uint32_t n) {
  std::map<std::uint32_t, Poly> phis;
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Poly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (auto& [e, pe] : phis) {
      if (d % e == 0) p = divide_monic(std::move(p), pe);
    }
    phis.emplace(d, std::move(p));
  }
  return phis.at(n);
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::uint32_t, std::unique_ptr<const CyclotomicField>>& cache() {
  static std::map<std::uint32_t, std::unique_ptr<const CyclotomicField>> c;
  return c;
}

std::int64_t mod_exp(std::int64_t e, std::uint32_t n) {
  const std::int64_t r = e % static_cast<std::int64_t>(n);
  return r < 0 ? r + n : r;
}

// Polynomials over Q for the inverse computation.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

bool is_zero_poly(const QPoly& p) { return p.size() == 1 && p[0].is_zero(); }

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  const std::size_t db = b.size() - 1;
  if (r.size() - 1 < db) {
    q = {Rational(0)};
    return;
  }
  q.assign(r.size() - db, Rational(0));
  const Rational lead_inv = b.back().inverse();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i].is_zero()) continue;
    const Rational c = r[i] * lead_inv;
    q[i - db] = c;
    for (std::size_t k = 0; k <= db; ++k) r[i - db + k] -= c * b[k];
  }
  r.resize(std::max<std::size_t>(db, 1));
  trim(r);
}

QPoly mul_poly(const QPoly& a, const QPoly& b) {
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly sub_poly(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

CyclotomicField::CyclotomicField(std::uint32_t n, std::vector<std::int64_t> poly)
    : n_(n), phi_(poly.size() - 1), poly_(std::move(poly)) {
  for (std::uint32_t k = 0; k < phi_; ++k) {
    if (poly_[k] != 0) tail_.emplace_back(k, poly_[k]);
  }
  roots_.resize(n_);
  for (std::uint32_t k = 0; k < n_; ++k) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_);
    roots_[k] = {std::cos(a), std::sin(a)};
  }
}

const CyclotomicField& CyclotomicField::get(std::uint32_t conductor) {
  if (conductor == 0) throw DomainError("conductor must be positive");
  if (conductor > kMaxConductor) {
    throw ResourceLimit("conductor " + std::to_string(conductor) + " exceeds the limit " +
                        std::to_string(kMaxConductor));
  }
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache().find(conductor);
    if (it != cache().end()) return *it->second;
  }
  auto field = std::unique_ptr<const CyclotomicField>(
      new CyclotomicField(conductor, cyclotomic_polynomial(conductor)));
  std::lock_guard lock(cache_mutex());
  auto [it, inserted] = cache().emplace(conductor, std::move(field));
  return *it->second;
}

std::complex<double> CyclotomicField::root_power(std::int64_t k) const noexcept {
  return roots_[static_cast<std::size_t>(mod_exp(k, n_))];
}

void CyclotomicField::reduce(std::vector<Rational>& v) const {
  for (std::size_t i = v.size(); i-- > phi_;) {
    if (v[i].is_zero()) continue;
    const Rational c = v[i];
    v[i] = Rational(0);
    const std::size_t base = i - phi_;
    for (const auto& [k, f] : tail_) v[base + k] -= c * Rational(f);
  }
  v.resize(phi_);
}

bool CyclotomicField::reduce_checked(std::vector<std::int64_t>& v) const {
  for (std::size_t i = v.size(); i-- > phi_;) {
    const std::int64_t c = v[i];
    if (c == 0) continue;
    v[i] = 0;
    const std::size_t base = i - phi_;
    for (const auto& [k, f] : tail_) {
      std::int64_t prod;
      if (__builtin_mul_overflow(c, f, &prod)) return false;
      if (__builtin_sub_overflow(v[base + k], prod, &v[base + k])) return false;
    }
  }
  v.resize(phi_);
  return true;
}

CycNum::CycNum() : field_(&CyclotomicField::get(1)), c_(1, Rational(0)) {}

CycNum::CycNum(const Rational& r) : field_(&CyclotomicField::get(1)), c_(1, r) {}

CycNum::CycNum(std::int64_t n) : CycNum(Rational(n)) {}

CycNum CycNum::zeta(std::uint32_t conductor, std::int64_t exponent) {
  const CyclotomicField& f = CyclotomicField::get(conductor);
  std::vector<Rational> v(static_cast<std::size_t>(mod_exp(exponent, conductor)) + 1, Rational(0));
  v.back() = Rational(1);
  if (v.size() < f.degree()) v.resize(f.degree(), Rational(0));
  f.reduce(v);
  return CycNum(&f, std::move(v));
}

CycNum CycNum::from_power_coeffs(std::uint32_t conductor, std::vector<Rational> coeffs) {
  const CyclotomicField& f = CyclotomicField::get(conductor);
  if (coeffs.size() < f.degree()) coeffs.resize(f.degree(), Rational(0));
  f.reduce(coeffs);
  return CycNum(&f, std::move(coeffs));
}

CycNum CycNum::from_root_counts(std::uint32_t conductor, std::span<const std::int64_t> counts) {
  const CyclotomicField& f = CyclotomicField::get(conductor);
  if (counts.size() != conductor) throw DomainError("root count vector must have length N");
  std::vector<std::int64_t> v(counts.begin(), counts.end());
  if (v.size() < f.degree()) v.resize(f.degree(), 0);
  if (f.reduce_checked(v)) {
    std::vector<Rational> c(v.begin(), v.end());
    return CycNum(&f, std::move(c));
  }
  std::vector<Rational> c(counts.begin(), counts.end());
  return from_power_coeffs(conductor, std::move(c));
}

CycNum CycNum::promote(std::uint32_t m) const {
  const std::uint32_t n = conductor();
  if (m == 0 || m % n != 0) {
    throw DomainError("cannot promote conductor " + std::to_string(n) + " to " +
                      std::to_string(m));
  }
  if (m == n) return *this;
  const CyclotomicField& f = CyclotomicField::get(m);
  const std::uint32_t step = m / n;
  std::vector<Rational> v(std::max<std::size_t>((c_.size() - 1) * step + 1, f.degree()),
                          Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * step] = c_[i];
  f.reduce(v);
  return CycNum(&f, std::move(v));
}

bool CycNum::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

std::optional<Rational> CycNum::to_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return std::nullopt;
  }
  return c_[0];
}

bool CycNum::small_integer_coeffs(std::vector<std::int32_t>& out, std::int64_t bound) const {
  out.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& r = c_[i];
    if (!r.is_small() || r.small_den() != 1) return false;
    const std::int64_t v = r.small_num();
    if (v >= bound || v <= -bound) return false;
    out[i] = static_cast<std::int32_t>(v);
  }
  return true;
}

CycNum CycNum::conj() const { return galois(-1); }

CycNum CycNum::galois(std::int64_t k) const {
  const std::uint32_t n = conductor();
  if (std::gcd(static_cast<std::uint64_t>(mod_exp(k, n)), static_cast<std::uint64_t>(n)) != 1 &&
      n > 1) {
    throw DomainError("Galois exponent must be coprime to the conductor");
  }
  std::vector<Rational> v(std::max<std::size_t>(n, field_->degree()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    v[static_cast<std::size_t>(mod_exp(static_cast<std::int64_t>(i) * mod_exp(k, n), n))] += c_[i];
  }
  field_->reduce(v);
  return CycNum(field_, std::move(v));
}

std::complex<double> CycNum::to_complex() const {
  std::complex<double> z = 0.0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) z += c_[i].to_double() * field_->root_power(static_cast<std::int64_t>(i));
  }
  return z;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (auto r = to_rational()) return CycNum(r->inverse()).promote(conductor());
  // extended Euclid: s * x + t * Phi = 1 in Q[x]
  QPoly phi(field_->polynomial().begin(), field_->polynomial().end());
  QPoly x(c_.begin(), c_.end());
  trim(x);
  QPoly r0 = phi, r1 = x;
  QPoly s0 = {Rational(0)}, s1 = {Rational(1)};
  while (!is_zero_poly(r1)) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = sub_poly(s0, mul_poly(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant because Phi_N is irreducible
  if (r0.size() != 1) throw InternalError("cyclotomic inverse: gcd is not constant");
  const Rational scale = r0[0].inverse();
  for (auto& c : s0) c *= scale;
  return from_power_coeffs(conductor(), std::move(s0));
}

CycNum CycNum::operator-() const {
  std::vector<Rational> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return CycNum(field_, std::move(v));
}

namespace {

std::uint32_t common_conductor(const CycNum& a, const CycNum& b) {
  return static_cast<std::uint32_t>(lcm_u64(a.conductor(), b.conductor()));
}

}  // namespace

CycNum& CycNum::operator+=(const CycNum& o) {
  if (field_ != o.field_) {
    const std::uint32_t m = common_conductor(*this, o);
    if (conductor() != m) *this = promote(m);
    if (o.conductor() != m) return *this += o.promote(m);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.field_ != b.field_) {
    const std::uint32_t m = common_conductor(a, b);
    return a.promote(m) * b.promote(m);
  }
  const CyclotomicField& f = *a.field_;
  const std::size_t n = a.c_.size();
  if (n == 1) return CycNum(a.field_, {a.c_[0] * b.c_[0]});
  thread_local std::vector<std::int32_t> ai, bi;
  if (n <= simd::kMaxConvolveLength && a.small_integer_coeffs(ai, simd::kConvolveCoeffBound) &&
      b.small_integer_coeffs(bi, simd::kConvolveCoeffBound)) {
    std::vector<std::int64_t> acc(2 * n - 1, 0);
    simd::convolve_accumulate(ai, bi, acc);
    if (f.reduce_checked(acc)) {
      std::vector<Rational> c(acc.begin(), acc.end());
      return CycNum(a.field_, std::move(c));
    }
  }
  std::vector<Rational> acc(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!b.c_[j].is_zero()) acc[i + j] += a.c_[i] * b.c_[j];
    }
  }
  f.reduce(acc);
  return CycNum(a.field_, std::move(acc));
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum& CycNum::operator/=(const CycNum& o) { return *this = *this * o.inverse(); }

CycNum& CycNum::operator*=(const Rational& r) {
  for (auto& c : c_) c *= r;
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.field_ == b.field_) return a.c_ == b.c_;
  const std::uint32_t m = common_conductor(a, b);
  return a.promote(m).c_ == b.promote(m).c_;
}

int CycNum::compare(const CycNum& a, const CycNum& b) {
  if (a.field_ != b.field_) {
    const std::uint32_t m = common_conductor(a, b);
    return compare(a.promote(m), b.promote(m));
  }
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const auto c = a.c_[i] <=> b.c_[i];
    if (c < 0) return -1;
    if (c > 0) return 1;
  }
  return 0;
}

std::string CycNum::str() const {
  std::ostringstream os;
  bool first = true;
  const std::string z = "z" + std::to_string(conductor());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.str();
      continue;
    }
    if (!(mag == Rational(1))) os << mag.str() << "*";
    os << z;
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace eigc
