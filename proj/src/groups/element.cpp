#include "eigcontain/groups/element.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "eigcontain/errors.hpp"

namespace eigc {

void CarrierSpec::multiply(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                           std::span<std::uint32_t> out) const {
  if (kind == Carrier::permutation) {
    for (std::uint32_t i = 0; i < degree; ++i) out[i] = a[b[i]];
    return;
  }
  const FiniteField& f = *field;
  const std::uint32_t d = degree;
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      FiniteField::Elem s = 0;
      for (std::uint32_t k = 0; k < d; ++k) s = f.add(s, f.mul(a[i * d + k], b[k * d + j]));
      out[i * d + j] = s;
    }
  }
}

void CarrierSpec::identity(std::span<std::uint32_t> out) const {
  if (kind == Carrier::permutation) {
    std::iota(out.begin(), out.end(), 0u);
    return;
  }
  std::fill(out.begin(), out.end(), 0u);
  for (std::uint32_t i = 0; i < degree; ++i) out[i * degree + i] = 1;
}

void CarrierSpec::inverse(std::span<const std::uint32_t> a, std::span<std::uint32_t> out) const {
  if (kind == Carrier::permutation) {
    for (std::uint32_t i = 0; i < degree; ++i) out[a[i]] = i;
    return;
  }
  // Gauss-Jordan on [A | I].
  const FiniteField& f = *field;
  const std::uint32_t d = degree;
  std::vector<std::uint32_t> m(a.begin(), a.end());
  identity(out);
  for (std::uint32_t col = 0; col < d; ++col) {
    std::uint32_t piv = col;
    while (piv < d && m[piv * d + col] == 0) ++piv;
    if (piv == d) throw DomainError("singular matrix");
    if (piv != col) {
      for (std::uint32_t j = 0; j < d; ++j) {
        std::swap(m[piv * d + j], m[col * d + j]);
        std::swap(out[piv * d + j], out[col * d + j]);
      }
    }
    const auto s = f.inv(m[col * d + col]);
    for (std::uint32_t j = 0; j < d; ++j) {
      m[col * d + j] = f.mul(m[col * d + j], s);
      out[col * d + j] = f.mul(out[col * d + j], s);
    }
    for (std::uint32_t r = 0; r < d; ++r) {
      if (r == col || m[r * d + col] == 0) continue;
      const auto c = m[r * d + col];
      for (std::uint32_t j = 0; j < d; ++j) {
        m[r * d + j] = f.sub(m[r * d + j], f.mul(c, m[col * d + j]));
        out[r * d + j] = f.sub(out[r * d + j], f.mul(c, out[col * d + j]));
      }
    }
  }
}

FiniteField::Elem matrix_det(const FiniteField& f, std::uint32_t d,
                             std::span<const std::uint32_t> a) {
  std::vector<std::uint32_t> m(a.begin(), a.end());
  FiniteField::Elem det = 1;
  for (std::uint32_t col = 0; col < d; ++col) {
    std::uint32_t piv = col;
    while (piv < d && m[piv * d + col] == 0) ++piv;
    if (piv == d) return 0;
    if (piv != col) {
      for (std::uint32_t j = 0; j < d; ++j) std::swap(m[piv * d + j], m[col * d + j]);
      det = f.neg(det);
    }
    det = f.mul(det, m[col * d + col]);
    const auto s = f.inv(m[col * d + col]);
    for (std::uint32_t r = col + 1; r < d; ++r) {
      if (m[r * d + col] == 0) continue;
      const auto c = f.mul(m[r * d + col], s);
      for (std::uint32_t j = col; j < d; ++j) {
        m[r * d + j] = f.sub(m[r * d + j], f.mul(c, m[col * d + j]));
      }
    }
  }
  return det;
}

GroupElement GroupElement::permutation(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v]) throw DomainError("permutation images are not a bijection");
    seen[v] = true;
  }
  CarrierSpec spec{Carrier::permutation, static_cast<std::uint32_t>(images.size()), nullptr};
  return GroupElement(std::move(spec), std::move(images));
}

GroupElement GroupElement::matrix(std::shared_ptr<const FiniteField> f, std::uint32_t dim,
                                  std::vector<std::uint32_t> entries) {
  if (!f) throw DomainError("matrix element needs a field");
  if (entries.size() != std::size_t{dim} * dim) throw DomainError("matrix entry count mismatch");
  for (auto e : entries) {
    if (e >= f->order()) throw DomainError("matrix entry outside the field");
  }
  if (matrix_det(*f, dim, entries) == 0) throw DomainError("matrix is singular");
  CarrierSpec spec{Carrier::matrix, dim, std::move(f)};
  return GroupElement(std::move(spec), std::move(entries));
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (!spec_.same_as(o.spec_)) throw DomainError("elements have different carriers");
  std::vector<std::uint32_t> out(data_.size());
  spec_.multiply(data_, o.data_, out);
  return GroupElement(spec_, std::move(out));
}

GroupElement GroupElement::inverse() const {
  std::vector<std::uint32_t> out(data_.size());
  spec_.inverse(data_, out);
  return GroupElement(spec_, std::move(out));
}

bool GroupElement::is_identity() const {
  std::vector<std::uint32_t> id(data_.size());
  spec_.identity(id);
  return id == data_;
}

std::string GroupElement::str() const {
  std::ostringstream os;
  if (spec_.kind == Carrier::permutation) {
    std::vector<bool> seen(data_.size(), false);
    for (std::uint32_t i = 0; i < data_.size(); ++i) {
      if (seen[i] || data_[i] == i) continue;
      os << "(";
      for (std::uint32_t j = i; !seen[j]; j = data_[j]) {
        if (j != i) os << " ";
        os << j;
        seen[j] = true;
      }
      os << ")";
    }
    const std::string s = os.str();
    return s.empty() ? "()" : s;
  }
  const std::uint32_t d = spec_.degree;
  os << "[";
  for (std::uint32_t i = 0; i < d; ++i) {
    os << (i ? ",[" : "[");
    for (std::uint32_t j = 0; j < d; ++j) {
      if (j) os << ",";
      os << spec_.field->elem_str(data_[i * d + j]);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

GroupElement parse_permutation(const std::string& text, std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> moved(degree, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',' ||
                               text[i] == '\r')) {
      ++i;
    }
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') throw ParseError("expected a point number");
      std::uint64_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v >= degree) throw ParseError("point " + std::to_string(v) + " out of range");
        ++i;
      }
      cycle.push_back(static_cast<std::uint32_t>(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const auto a = cycle[k];
      if (moved[a]) throw ParseError("point " + std::to_string(a) + " repeated");
      moved[a] = true;
      images[a] = cycle[(k + 1) % cycle.size()];
    }
    skip_space();
  }
  return GroupElement::permutation(std::move(images));
}

}  // namespace eigc
