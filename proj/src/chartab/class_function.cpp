#include "eigcontain/chartab/class_function.hpp"

#include "eigcontain/errors.hpp"

namespace eigc {

ClassFunction::ClassFunction(GroupPtr g, std::vector<CycNum> values)
    : group_(std::move(g)), values_(std::move(values)) {
  if (!group_) throw DomainError("class function without a group");
  if (values_.size() != group_->class_count()) {
    throw DomainError("class function length " + std::to_string(values_.size()) +
                      " does not match the class count " +
                      std::to_string(group_->class_count()));
  }
  const std::uint32_t e = group_->exponent();
  for (auto& v : values_) {
    if (v.conductor() != e) v = v.promote(e);
  }
}

ClassFunction ClassFunction::constant(GroupPtr g, const CycNum& v) {
  const std::size_t n = g->class_count();
  return ClassFunction(std::move(g), std::vector<CycNum>(n, v));
}

std::optional<std::int64_t> ClassFunction::degree() const {
  auto r = values_[0].to_rational();
  if (!r || !r->is_integer() || !r->is_small()) return std::nullopt;
  return r->small_num();
}

ClassFunction ClassFunction::conj() const {
  std::vector<CycNum> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x.conj());
  return ClassFunction(group_, std::move(v));
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.group_ == b.group_ && a.values_ == b.values_;
}

void require_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group_ptr() != b.group_ptr()) throw GroupMismatch();
}

CycNum char_inner(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  const GroupModel& g = a.group();
  CycNum sum = CycNum(0).promote(g.exponent());
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c].is_zero() || b[c].is_zero()) continue;
    CycNum t = a[c] * b[c].conj();
    t *= Rational(g.cls(c).size);
    sum += t;
  }
  sum *= Rational(1, static_cast<std::int64_t>(g.order()));
  return sum;
}

int compare_values(const ClassFunction& a, const ClassFunction& b) {
  for (std::size_t c = 0; c < a.size() && c < b.size(); ++c) {
    if (int r = CycNum::compare(a[c], b[c]); r != 0) return r;
  }
  return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

}  // namespace eigc
