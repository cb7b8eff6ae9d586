#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eigcontain/exact/cyclotomic.hpp"
#include "eigcontain/groups/group.hpp"

namespace eigc {

/// Complex-valued function on the conjugacy classes of a group, values in
/// Q(zeta_e) with e the group exponent.
class ClassFunction {
 public:
  ClassFunction(GroupPtr g, std::vector<CycNum> values);

  static ClassFunction constant(GroupPtr g, const CycNum& v);
  static ClassFunction zero(GroupPtr g) { return constant(std::move(g), CycNum(0)); }

  const GroupModel& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t size() const noexcept { return values_.size(); }
  const CycNum& operator[](std::size_t c) const noexcept { return values_[c]; }
  const std::vector<CycNum>& values() const noexcept { return values_; }

  /// Value at the identity when it is an integer.
  std::optional<std::int64_t> degree() const;
  /// Pointwise complex conjugate.
  ClassFunction conj() const;

  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  GroupPtr group_;
  std::vector<CycNum> values_;
};

/// Throws GroupMismatch unless a and b live on the same group object.
void require_same_group(const ClassFunction& a, const ClassFunction& b);

/// (1/|G|) sum_c |c| a(c) conj(b(c)).
CycNum char_inner(const ClassFunction& a, const ClassFunction& b);

/// Lexicographic order on value vectors (CycNum::compare per class).
int compare_values(const ClassFunction& a, const ClassFunction& b);

}  // namespace eigc
