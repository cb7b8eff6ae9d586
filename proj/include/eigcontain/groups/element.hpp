#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "eigcontain/exact/finite_field.hpp"

namespace eigc {

enum class Carrier { permutation, matrix };

/// Shape shared by every element of one group: permutations of {0..n-1} or
/// invertible d x d matrices over a finite field. Elements are flat arrays of
/// width() words (images, or row-major encoded entries).
struct CarrierSpec {
  Carrier kind = Carrier::permutation;
  std::uint32_t degree = 0;
  std::shared_ptr<const FiniteField> field;

  std::size_t width() const noexcept {
    return kind == Carrier::permutation ? degree : std::size_t{degree} * degree;
  }
  /// out = a * b, meaning (a * b)(x) = a(b(x)); out must not alias a or b.
  void multiply(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                std::span<std::uint32_t> out) const;
  void identity(std::span<std::uint32_t> out) const;
  void inverse(std::span<const std::uint32_t> a, std::span<std::uint32_t> out) const;
  bool same_as(const CarrierSpec& o) const noexcept {
    return kind == o.kind && degree == o.degree && field == o.field;
  }
};

/// Determinant of a d x d matrix over f (row-major encoded entries).
FiniteField::Elem matrix_det(const FiniteField& f, std::uint32_t d,
                             std::span<const std::uint32_t> m);

class GroupElement {
 public:
  /// images[i] is the image of i; must be a bijection.
  static GroupElement permutation(std::vector<std::uint32_t> images);
  /// Row-major entries; the determinant must be nonzero.
  static GroupElement matrix(std::shared_ptr<const FiniteField> f, std::uint32_t dim,
                             std::vector<std::uint32_t> entries);

  const CarrierSpec& carrier() const noexcept { return spec_; }
  std::span<const std::uint32_t> data() const noexcept { return data_; }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  bool is_identity() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.spec_.same_as(b.spec_) && a.data_ == b.data_;
  }

  /// Cycle notation for permutations, nested lists for matrices.
  std::string str() const;

 private:
  GroupElement(CarrierSpec spec, std::vector<std::uint32_t> data)
      : spec_(std::move(spec)), data_(std::move(data)) {}

  CarrierSpec spec_;
  std::vector<std::uint32_t> data_;
};

/// Parse one line of cycle notation such as "(0 1)(2 3 4)" on points 0..degree-1.
/// Points are 0-based; "()" or an empty line is the identity.
GroupElement parse_permutation(const std::string& text, std::uint32_t degree);

}  // namespace eigc
