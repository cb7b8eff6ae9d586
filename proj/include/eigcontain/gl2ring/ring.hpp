#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>

namespace eigc {

/// Abelian twist symbols other than the two determinants.
enum class Twist : std::uint8_t { x1 = 0, x2 = 1, chi = 2 };
inline constexpr std::size_t kTwistCount = 3;

/// Basis symbol t * det^b Sym^a(pi) (x) det'^b2 Sym^a2(pi') with t a monomial in the twists.
/// The central character w of pi is det, and w2 is det'.
struct RingKey {
  std::int32_t a = 0;
  std::int32_t b = 0;
  std::int32_t a2 = 0;
  std::int32_t b2 = 0;
  std::array<std::int32_t, kTwistCount> twist{};

  auto operator<=>(const RingKey&) const = default;
};

inline constexpr std::size_t kDefaultExpansionBound = 1'000'000;

/// Formal character of GL2 x GL2 x (twist torus) in the Sym basis.
class GL2RingElem {
 public:
  GL2RingElem() = default;
  GL2RingElem(std::int64_t n);  // NOLINT(google-explicit-constructor)

  static GL2RingElem basis(const RingKey& k, std::int64_t coeff = 1);
  static GL2RingElem pi() { return basis({1, 0, 0, 0, {}}); }
  static GL2RingElem pi2() { return basis({0, 0, 1, 0, {}}); }
  static GL2RingElem omega() { return basis({0, 1, 0, 0, {}}); }
  static GL2RingElem omega2() { return basis({0, 0, 0, 1, {}}); }
  static GL2RingElem twist(Twist t);

  const std::map<RingKey, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t dimension() const;
  /// Every coefficient positive.
  bool is_genuine() const;
  /// Single term of dimension one with coefficient 1 (has an inverse).
  bool is_invertible() const;
  GL2RingElem inverse() const;

  GL2RingElem operator-() const;
  GL2RingElem& operator+=(const GL2RingElem& o);
  GL2RingElem& operator-=(const GL2RingElem& o);
  friend GL2RingElem operator+(GL2RingElem a, const GL2RingElem& b) { return a += b; }
  friend GL2RingElem operator-(GL2RingElem a, const GL2RingElem& b) { return a -= b; }
  /// Clebsch-Gordan in each GL2 factor.
  friend GL2RingElem operator*(const GL2RingElem& a, const GL2RingElem& b);
  GL2RingElem pow(std::int64_t n) const;

  friend bool operator==(const GL2RingElem&, const GL2RingElem&) = default;

  /// Canonical text, parseable by the expression language.
  std::string str() const;
  /// Same, with [n] for Sym^(n-1)(pi) (meant for SU(2) specializations).
  std::string bracket_str() const;

  /// Numerical value at a point: pi has eigenvalues (p1, p2), pi' has (q1, q2).
  std::complex<double> evaluate(std::complex<double> p1, std::complex<double> p2,
                                std::complex<double> q1, std::complex<double> q2,
                                const std::array<std::complex<double>, kTwistCount>& twists) const;

 private:
  void add_term(const RingKey& k, std::int64_t c);
  std::map<RingKey, std::int64_t> terms_;
};

/// Symmetric and exterior powers via weight expansion; the input must be genuine.
/// Throws ResourceLimit when the weight expansion would exceed the bound.
GL2RingElem ring_sym(const GL2RingElem& x, std::uint32_t k,
                     std::size_t bound = kDefaultExpansionBound);
GL2RingElem ring_ext(const GL2RingElem& x, std::uint32_t k,
                     std::size_t bound = kDefaultExpansionBound);

/// Trivial determinants and twists: the SU(2) x SU(2) restriction.
GL2RingElem su2_specialize(const GL2RingElem& x);

}  // namespace eigc
