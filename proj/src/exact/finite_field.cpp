#include "eigcontain/exact/finite_field.hpp"

#include <map>
#include <mutex>

#include "eigcontain/errors.hpp"

namespace eigc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k != 0) continue;
    out.push_back(k);
    while (n % k == 0) n /= k;
  }
  if (n > 1) out.push_back(n);
  return out;
}

PrimePower prime_power(std::uint64_t q) {
  const auto f = prime_factors(q);
  if (f.size() != 1) return {};
  std::uint32_t d = 0;
  while (q > 1) {
    q /= f[0];
    ++d;
  }
  return {static_cast<std::uint32_t>(f[0]), d};
}

namespace {

using Poly = std::vector<std::uint32_t>;  // lowest degree first

// Remainder of a modulo the monic polynomial b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    const std::uint64_t c = a[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= db; ++k) {
      a[i - db + k] = static_cast<std::uint32_t>((a[i - db + k] + (p - c) * b[k]) % p);
    }
  }
  a.resize(db);
  return a;
}

Poly monic_from_index(std::uint64_t idx, std::uint32_t deg, std::uint32_t p) {
  Poly f(deg + 1, 0);
  f[deg] = 1;
  for (std::uint32_t i = 0; i < deg; ++i) {
    f[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t d = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t e = 1; 2 * e <= d; ++e) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      const Poly g = monic_from_index(idx, e, p);
      const Poly r = poly_mod(f, g, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t d) : p_(p), d_(d), q_(1) {
  for (std::uint32_t i = 0; i < d; ++i) {
    pow_p_.push_back(q_);
    q_ *= p;
  }
  // Index order puts c_0 in the lowest digit, so counting up is
  // lexicographic in (c_{d-1}, ..., c_0).
  for (std::uint64_t idx = 0;; ++idx) {
    Poly f = monic_from_index(idx, d, p);
    if (d == 1 || is_irreducible(f, p)) {
      modulus_ = std::move(f);
      break;
    }
  }

  auto slow_mul = [&](Elem a, Elem b) {
    Poly pa(d, 0), pb(d, 0), prod(2 * d - 1, 0);
    for (std::uint32_t i = 0; i < d; ++i) {
      pa[i] = a % p;
      a /= p;
      pb[i] = b % p;
      b /= p;
    }
    for (std::uint32_t i = 0; i < d; ++i) {
      for (std::uint32_t j = 0; j < d; ++j) {
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p);
      }
    }
    const Poly r = d == 1 ? prod : poly_mod(prod, modulus_, p);
    Elem out = 0;
    for (std::uint32_t i = d; i-- > 0;) out = out * p + r[i];
    return out;
  };

  const auto factors = prime_factors(q_ - 1);
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  Elem g = 1;
  if (q_ > 2) {
    for (g = 2; g < q_; ++g) {
      bool ok = true;
      for (auto r : factors) ok = ok && slow_pow(g, (q_ - 1) / r) != 1;
      if (ok) break;
    }
  }
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Elem cur = 1;
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    exp_[k] = cur;
    log_[cur] = k;
    cur = slow_mul(cur, g);
  }
  if (cur != 1) throw InternalError("finite field: generator search failed");
}

std::shared_ptr<const FiniteField> FiniteField::get(std::uint32_t q, std::uint32_t max_order) {
  const PrimePower pp = prime_power(q);
  if (pp.p == 0) throw DomainError(std::to_string(q) + " is not a prime power");
  if (q > max_order) {
    throw ResourceLimit("field order " + std::to_string(q) + " exceeds the limit " +
                        std::to_string(max_order));
  }
  static std::map<std::uint32_t, std::shared_ptr<const FiniteField>> cache;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
  }
  std::shared_ptr<const FiniteField> f(new FiniteField(pp.p, pp.d));
  std::lock_guard lock(cache_mutex());
  return cache.emplace(q, std::move(f)).first->second;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const noexcept {
  if (d_ == 1) {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem out = 0;
  for (std::uint32_t i = 0; i < d_; ++i) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const noexcept {
  if (d_ == 1) return a == 0 ? 0 : p_ - a;
  Elem out = 0;
  for (std::uint32_t i = 0; i < d_; ++i) {
    const std::uint32_t c = a % p_;
    out += (c == 0 ? 0 : p_ - c) * pow_p_[i];
    a /= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const noexcept {
  if (a == 0 || b == 0) return 0;
  std::uint32_t k = log_[a] + log_[b];
  if (k >= q_ - 1) k -= q_ - 1;
  return exp_[k];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
  return exp_[log_[a] == 0 ? 0 : q_ - 1 - log_[a]];
}

FiniteField::Elem FiniteField::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw DivisionByZero("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t n = q_ - 1;
  std::int64_t k = (static_cast<std::int64_t>(log_[a]) * (e % n)) % n;
  if (k < 0) k += n;
  return exp_[static_cast<std::size_t>(k)];
}

FiniteField::Elem FiniteField::from_int(std::int64_t n) const noexcept {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  return static_cast<Elem>(r < 0 ? r + p_ : r);
}

std::uint32_t FiniteField::log(Elem a) const {
  if (a == 0) throw DomainError("logarithm of zero");
  return log_[a];
}

FiniteField::Elem FiniteField::exp(std::int64_t k) const noexcept {
  const std::int64_t n = q_ - 1;
  std::int64_t r = k % n;
  if (r < 0) r += n;
  return exp_[static_cast<std::size_t>(r)];
}

namespace {

std::string poly_str(const std::vector<std::uint32_t>& c) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string FiniteField::elem_str(Elem a) const {
  if (d_ == 1) return std::to_string(a);
  std::vector<std::uint32_t> c(d_);
  for (std::uint32_t i = 0; i < d_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return poly_str(c);
}

std::string FiniteField::modulus_str() const { return poly_str(modulus_); }

const FiniteField& Fq::checked(const Fq& o) const {
  if (f_ != o.f_) throw DomainError("finite field elements from different fields");
  return *f_;
}

}  // namespace eigc
