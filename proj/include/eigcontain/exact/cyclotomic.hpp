#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eigcontain/exact/rational.hpp"

namespace eigc {

/// Largest conductor CycNum will build a field for.
inline constexpr std::uint32_t kMaxConductor = 1u << 16;

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Immutable per-conductor data for Q(zeta_N): the cyclotomic polynomial and
/// a table of complex roots. Instances are created once and live for the
/// program's lifetime.
class CyclotomicField {
 public:
  /// Cached lookup; concurrent first use is safe (the fill is idempotent).
  static const CyclotomicField& get(std::uint32_t conductor);

  std::uint32_t conductor() const noexcept { return n_; }
  /// Euler phi(N): the dimension over Q and the length of a canonical vector.
  std::size_t degree() const noexcept { return phi_; }

  /// Dense coefficients of Phi_N, lowest degree first; monic of length degree()+1.
  std::span<const std::int64_t> polynomial() const noexcept { return poly_; }

  /// Nonzero (k, c_k) with k < degree(); x^phi == -sum c_k x^k modulo Phi_N.
  std::span<const std::pair<std::uint32_t, std::int64_t>> tail() const noexcept { return tail_; }

  std::complex<double> root_power(std::int64_t k) const noexcept;

  /// Reduce v modulo Phi_N in place and truncate it to degree() entries.
  void reduce(std::vector<Rational>& v) const;
  /// Same over int64; returns false (leaving v unspecified) on overflow.
  bool reduce_checked(std::vector<std::int64_t>& v) const;

 private:
  CyclotomicField(std::uint32_t n, std::vector<std::int64_t> poly);

  std::uint32_t n_;
  std::size_t phi_;
  std::vector<std::int64_t> poly_;
  std::vector<std::pair<std::uint32_t, std::int64_t>> tail_;
  std::vector<std::complex<double>> roots_;
};

/// Exact element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1).
///
/// The representation is canonical for a fixed conductor. Operands with
/// different conductors are promoted to the lcm before arithmetic; equality
/// compares across conductors.
class CycNum {
 public:
  CycNum();
  CycNum(const Rational& r);  // NOLINT(google-explicit-constructor)
  CycNum(std::int64_t n);     // NOLINT(google-explicit-constructor)

  /// zeta_N^exponent, exponent taken mod N.
  static CycNum zeta(std::uint32_t conductor, std::int64_t exponent);
  /// sum_i coeffs[i] * zeta_N^i for a vector of any length.
  static CycNum from_power_coeffs(std::uint32_t conductor, std::vector<Rational> coeffs);
  /// sum_k counts[k] * zeta_N^k; counts.size() must equal N.
  static CycNum from_root_counts(std::uint32_t conductor, std::span<const std::int64_t> counts);

  std::uint32_t conductor() const noexcept { return field_->conductor(); }
  const CyclotomicField& field() const noexcept { return *field_; }
  std::span<const Rational> coeffs() const noexcept { return c_; }

  /// The same number in Q(zeta_M); M must be a multiple of the conductor.
  CycNum promote(std::uint32_t m) const;

  bool is_zero() const noexcept;
  std::optional<Rational> to_rational() const;
  /// Coefficients as int64 when all are integers of magnitude < bound.
  bool small_integer_coeffs(std::vector<std::int32_t>& out, std::int64_t bound) const;

  /// Complex conjugate, i.e. the Galois action zeta -> zeta^-1.
  CycNum conj() const;
  /// Galois automorphism zeta -> zeta^k, gcd(k, N) = 1.
  CycNum galois(std::int64_t k) const;

  std::complex<double> to_complex() const;
  CycNum inverse() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);
  CycNum& operator*=(const Rational& r);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  friend bool operator==(const CycNum& a, const CycNum& b);

  /// Lexicographic order of coefficient vectors at the common conductor.
  /// Total for values sharing a conductor (the case for one character table).
  static int compare(const CycNum& a, const CycNum& b);

  /// Human-readable form such as "2 - z12^3".
  std::string str() const;

 private:
  CycNum(const CyclotomicField* f, std::vector<Rational> c) : field_(f), c_(std::move(c)) {}

  const CyclotomicField* field_;
  std::vector<Rational> c_;
};

}  // namespace eigc
