#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "eigcontain/groups/element.hpp"

namespace eigc {

inline constexpr std::size_t kDefaultMaxGroupOrder = 1'000'000;

/// Where a group came from; closed-form character tables key off this.
enum class GroupKind { generic, symmetric, alternating, cyclic, dihedral, quaternion, gl2, sl2, pgl2 };

struct GroupOrigin {
  GroupKind kind = GroupKind::generic;
  std::uint32_t param = 0;  // N for sym/alt/cyclic/dih, q for the 2x2 families
  std::string descriptor;
};

struct ConjugacyClass {
  std::uint32_t rep = 0;        // smallest member in element order
  std::uint32_t size = 0;
  std::uint32_t rep_order = 0;  // order of any member
  std::vector<std::uint32_t> members;  // sorted element indices
  std::vector<std::uint32_t> powers;   // powers[k] = class of rep^k, 0 <= k < rep_order
};

/// Finite group with all elements enumerated.
///
/// Element 0 is the identity and the remaining elements are sorted
/// lexicographically by their flat data; that is the fixed element order.
/// Classes are ordered by (size, smallest member), so class 0 is {identity}.
class GroupModel {
 public:
  /// Closure of the generators. An empty list gives the trivial group on the
  /// supplied carrier (default: permutations of zero points).
  static std::shared_ptr<const GroupModel> closure(const std::vector<GroupElement>& generators,
                                                   GroupOrigin origin = {},
                                                   std::size_t max_order = kDefaultMaxGroupOrder,
                                                   CarrierSpec empty_carrier = {});

  std::size_t order() const noexcept { return count_; }
  const CarrierSpec& carrier() const noexcept { return spec_; }
  const GroupOrigin& origin() const noexcept { return origin_; }
  const std::string& descriptor() const noexcept { return origin_.descriptor; }

  std::span<const std::uint32_t> data(std::size_t i) const noexcept {
    return {data_.data() + i * width_, width_};
  }
  GroupElement element(std::size_t i) const;
  /// Element index or npos.
  std::size_t index_of(std::span<const std::uint32_t> d) const noexcept;
  std::size_t index_of(const GroupElement& g) const noexcept;
  const std::vector<std::uint32_t>& generators() const noexcept { return generators_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const noexcept { return inverse_[a]; }
  std::uint32_t pow(std::uint32_t a, std::int64_t k) const;
  std::uint32_t element_order(std::uint32_t a) const;

  std::size_t class_count() const noexcept { return classes_.size(); }
  const ConjugacyClass& cls(std::size_t c) const noexcept { return classes_[c]; }
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::uint32_t class_of(std::uint32_t element) const noexcept { return class_of_[element]; }
  /// Class of rep^k for any integer k.
  std::uint32_t power_map(std::size_t c, std::int64_t k) const noexcept;
  std::uint32_t inverse_class(std::size_t c) const noexcept { return power_map(c, -1); }
  /// lcm of element orders.
  std::uint32_t exponent() const noexcept { return exponent_; }

 private:
  GroupModel() = default;
  void build_index();
  void build_classes();
  std::size_t probe(std::span<const std::uint32_t> d) const noexcept;

  CarrierSpec spec_;
  GroupOrigin origin_;
  std::size_t width_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint32_t> data_;
  std::vector<std::uint32_t> slots_;  // open addressing, value = index + 1
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> mul_table_;  // filled for small groups
  std::vector<std::uint32_t> generators_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::uint32_t> class_of_;
  std::uint32_t exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const GroupModel>;

}  // namespace eigc
