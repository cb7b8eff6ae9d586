#include "eigcontain/exact/rational.hpp"

#include <limits>

#include "eigcontain/errors.hpp"

namespace eigc {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// int64 magnitudes strictly inside the representable range keep negation safe.
bool fits(i128 v) { return v > kMin && v <= kMax; }

void set_mpz_i128(mpz_class& z, i128 v) {
  const bool neg = v < 0;
  u128 m = uabs(v);
  const auto hi = static_cast<std::uint64_t>(m >> 64);
  const auto lo = static_cast<std::uint64_t>(m);
  z = static_cast<unsigned long>(hi);
  z <<= 64;
  z += static_cast<unsigned long>(lo);
  if (neg) z = -z;
}

mpq_class mpq_from_i128(i128 num, i128 den) {
  mpq_class q;
  set_mpz_i128(q.get_num(), num);
  set_mpz_i128(q.get_den(), den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(std::int64_t n) noexcept : num_(n) {
  if (n == kMin) {
    big_ = std::make_unique<mpq_class>();
    mpz_set_si(big_->get_num_mpz_t(), n);
    num_ = 0;
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero();
  i128 n = num;
  i128 d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const u128 g = gcd128(uabs(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits(n) && fits(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  } else {
    assign(mpq_from_i128(n, d));
  }
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  assign(std::move(c));
}

Rational::Rational(const mpz_class& z) { assign(mpq_class(z)); }

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Rational::assign(mpq_class&& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != kMin && d.get_si() != kMin) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

bool Rational::is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
  if (big_) return big_->get_num();
  return mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  if (big_) return big_->get_den();
  return mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q;
  mpz_set_si(q.get_num_mpz_t(), num_);
  mpz_set_si(q.get_den_mpz_t(), den_);
  return q;
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (big_) {
    mpq_class q;
    mpq_inv(q.get_mpq_t(), big_->get_mpq_t());
    return Rational(q);
  }
  return Rational(den_, num_);
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign(mpq_class(-*big_));
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(num_, o.num_, &s) && s != kMin) {
        num_ = s;
        return *this;
      }
    }
    const i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
    const i128 d = static_cast<i128>(den_) * o.den_;
    const u128 g = gcd128(uabs(n), static_cast<u128>(d));
    const i128 rn = g > 1 ? n / static_cast<i128>(g) : n;
    const i128 rd = g > 1 ? d / static_cast<i128>(g) : d;
    if (fits(rn) && fits(rd)) {
      num_ = static_cast<std::int64_t>(rn);
      den_ = static_cast<std::int64_t>(rd);
    } else {
      assign(mpq_from_i128(rn, rd));
    }
    return *this;
  }
  assign(mpq_class(to_mpq() + o.to_mpq()));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t p;
      if (!__builtin_mul_overflow(num_, o.num_, &p) && p != kMin) {
        num_ = p;
        return *this;
      }
    }
    // cross-cancel before multiplying keeps the result reduced
    const u128 g1 = gcd128(uabs(num_), static_cast<u128>(o.den_));
    const u128 g2 = gcd128(uabs(o.num_), static_cast<u128>(den_));
    const i128 a = static_cast<i128>(num_) / static_cast<i128>(g1 ? g1 : 1);
    const i128 d2 = static_cast<i128>(o.den_) / static_cast<i128>(g1 ? g1 : 1);
    const i128 c = static_cast<i128>(o.num_) / static_cast<i128>(g2 ? g2 : 1);
    const i128 b = static_cast<i128>(den_) / static_cast<i128>(g2 ? g2 : 1);
    const i128 n = a * c;
    const i128 d = b * d2;
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      assign(mpq_from_i128(n, d));
    }
    return *this;
  }
  assign(mpq_class(to_mpq() * o.to_mpq()));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

bool operator==(const Rational& a, const Rational& b) noexcept {
  // canonical forms: small and big never represent the same value
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace eigc
