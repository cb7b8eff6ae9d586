#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace eigc {

inline constexpr std::uint32_t kDefaultMaxFieldOrder = 1u << 20;

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t d = 0;
};

/// p and d with q = p^d, or {0, 0} when q is not a prime power.
PrimePower prime_power(std::uint64_t q);
bool is_prime(std::uint64_t n);
/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// F_q = F_p[x]/(f) with f the first irreducible monic of degree d when the
/// coefficient tuple (c_{d-1}, ..., c_0) is read lexicographically.
///
/// Elements are encoded as integers 0..q-1 whose base-p digits are the
/// coefficients of 1, x, ..., x^(d-1). In particular 0 and 1 are the field's
/// zero and one, and 0..p-1 is the prime subfield.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  static std::shared_ptr<const FiniteField> get(std::uint32_t q,
                                                std::uint32_t max_order = kDefaultMaxFieldOrder);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return d_; }
  /// Coefficients of the modulus, lowest degree first, monic (size d+1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  /// Smallest element (in encoding order) generating the multiplicative group.
  Elem primitive() const noexcept { return q_ == 2 ? 1 : exp_[1]; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;  // throws DivisionByZero
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t n) const noexcept;

  /// Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(Elem a) const;
  /// primitive()^k.
  Elem exp(std::int64_t k) const noexcept;

  /// Polynomial text such as "x^2+2" (or the integer when d = 1).
  std::string elem_str(Elem a) const;
  std::string modulus_str() const;

 private:
  FiniteField(std::uint32_t p, std::uint32_t d);

  std::uint32_t p_;
  std::uint32_t d_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i
  std::vector<Elem> exp_;             // size q-1
  std::vector<std::uint32_t> log_;    // size q, log_[0] unused
};

/// Element value bound to its field.
class Fq {
 public:
  Fq(std::shared_ptr<const FiniteField> f, FiniteField::Elem v) : f_(std::move(f)), v_(v) {}

  const FiniteField& field() const noexcept { return *f_; }
  const std::shared_ptr<const FiniteField>& field_ptr() const noexcept { return f_; }
  FiniteField::Elem value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }

  Fq inverse() const { return {f_, f_->inv(v_)}; }
  Fq pow(std::int64_t e) const { return {f_, f_->pow(v_, e)}; }
  Fq operator-() const { return {f_, f_->neg(v_)}; }

  friend Fq operator+(const Fq& a, const Fq& b) { return {a.f_, a.checked(b).add(a.v_, b.v_)}; }
  friend Fq operator-(const Fq& a, const Fq& b) { return {a.f_, a.checked(b).sub(a.v_, b.v_)}; }
  friend Fq operator*(const Fq& a, const Fq& b) { return {a.f_, a.checked(b).mul(a.v_, b.v_)}; }
  friend Fq operator/(const Fq& a, const Fq& b) { return {a.f_, a.checked(b).div(a.v_, b.v_)}; }
  friend bool operator==(const Fq& a, const Fq& b) noexcept {
    return a.f_ == b.f_ && a.v_ == b.v_;
  }

  std::string str() const { return f_->elem_str(v_); }

 private:
  const FiniteField& checked(const Fq& o) const;

  std::shared_ptr<const FiniteField> f_;
  FiniteField::Elem v_;
};

}  // namespace eigc
