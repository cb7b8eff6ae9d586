#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>

namespace eigc {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in int64 are stored inline and
/// handled with checked machine arithmetic; anything larger is promoted to a
/// GMP rational and demoted again as soon as it fits.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t n) noexcept;  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& q);
  explicit Rational(const mpz_class& z);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_integer() const noexcept;
  /// Numerator and denominator both held inline.
  bool is_small() const noexcept { return !big_; }
  int sign() const noexcept;

  /// Only valid when is_small().
  std::int64_t small_num() const noexcept { return num_; }
  std::int64_t small_den() const noexcept { return den_; }

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;
  double to_double() const;
  std::string str() const;

  Rational inverse() const;
  Rational operator-() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void assign(mpq_class&& q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace eigc
