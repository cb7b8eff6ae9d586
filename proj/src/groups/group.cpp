#include "eigcontain/groups/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "eigcontain/errors.hpp"
#include "eigcontain/simd/kernels.hpp"

namespace eigc {
namespace {

constexpr std::size_t kMulTableMaxOrder = 2048;

std::uint64_t hash_words(std::span<const std::uint32_t> d) noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : d) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
  }
  return h ^ (h >> 31);
}

std::uint64_t lcm64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

}  // namespace

GroupElement GroupModel::element(std::size_t i) const {
  auto d = data(i);
  std::vector<std::uint32_t> v(d.begin(), d.end());
  if (spec_.kind == Carrier::permutation) return GroupElement::permutation(std::move(v));
  return GroupElement::matrix(spec_.field, spec_.degree, std::move(v));
}

std::size_t GroupModel::probe(std::span<const std::uint32_t> d) const noexcept {
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash_words(d) & mask;
  for (;; s = (s + 1) & mask) {
    const std::uint32_t v = slots_[s];
    if (v == 0) return s;
    if (std::equal(d.begin(), d.end(), data_.begin() + (v - 1) * width_)) return s;
  }
}

std::size_t GroupModel::index_of(std::span<const std::uint32_t> d) const noexcept {
  if (d.size() != width_) return simd::npos;
  const std::uint32_t v = slots_[probe(d)];
  return v == 0 ? simd::npos : v - 1;
}

std::size_t GroupModel::index_of(const GroupElement& g) const noexcept {
  if (!g.carrier().same_as(spec_)) return simd::npos;
  return index_of(g.data());
}

void GroupModel::build_index() {
  std::size_t cap = 16;
  while (cap < 2 * count_) cap <<= 1;
  slots_.assign(cap, 0);
  for (std::size_t i = 0; i < count_; ++i) slots_[probe(data(i))] = static_cast<std::uint32_t>(i + 1);
}

std::uint32_t GroupModel::mul(std::uint32_t a, std::uint32_t b) const {
  if (!mul_table_.empty()) return mul_table_[std::size_t{a} * count_ + b];
  thread_local std::vector<std::uint32_t> buf;
  buf.resize(width_);
  spec_.multiply(data(a), data(b), buf);
  const std::size_t r = index_of(buf);
  if (r == simd::npos) throw InternalError("group is not closed under multiplication");
  return static_cast<std::uint32_t>(r);
}

std::uint32_t GroupModel::pow(std::uint32_t a, std::int64_t k) const {
  if (k < 0) {
    a = inverse_[a];
    k = -k;
  }
  std::uint32_t r = 0;
  while (k) {
    if (k & 1) r = mul(r, a);
    k >>= 1;
    if (k) a = mul(a, a);
  }
  return r;
}

std::uint32_t GroupModel::element_order(std::uint32_t a) const {
  std::uint32_t m = 1;
  for (std::uint32_t x = a; x != 0; x = mul(x, a)) ++m;
  return m;
}

std::uint32_t GroupModel::power_map(std::size_t c, std::int64_t k) const noexcept {
  const ConjugacyClass& cl = classes_[c];
  const std::int64_t m = cl.rep_order;
  std::int64_t r = k % m;
  if (r < 0) r += m;
  return cl.powers[static_cast<std::size_t>(r)];
}

std::shared_ptr<const GroupModel> GroupModel::closure(const std::vector<GroupElement>& generators,
                                                      GroupOrigin origin, std::size_t max_order,
                                                      CarrierSpec empty_carrier) {
  std::shared_ptr<GroupModel> g(new GroupModel());
  g->origin_ = std::move(origin);
  g->spec_ = generators.empty() ? std::move(empty_carrier) : generators.front().carrier();
  for (const auto& x : generators) {
    if (!x.carrier().same_as(g->spec_)) throw DomainError("generators have mixed carriers");
  }
  const std::size_t w = g->spec_.width();
  g->width_ = w;

  // Breadth-first enumeration by left multiplication with the generators.
  std::vector<std::uint32_t> flat(w);
  g->spec_.identity(flat);
  auto hash = [&](std::uint32_t i) {
    return static_cast<std::size_t>(hash_words({flat.data() + std::size_t{i} * w, w}));
  };
  auto eq = [&](std::uint32_t a, std::uint32_t b) {
    return std::equal(flat.begin() + std::size_t{a} * w, flat.begin() + std::size_t{a + 1} * w,
                      flat.begin() + std::size_t{b} * w);
  };
  std::unordered_set<std::uint32_t, decltype(hash), decltype(eq)> seen(64, hash, eq);
  seen.insert(0);
  std::size_t n = 1;
  std::vector<std::uint32_t> tmp(w);
  for (std::size_t pos = 0; pos < n; ++pos) {
    for (const auto& gen : generators) {
      g->spec_.multiply(gen.data(), {flat.data() + pos * w, w}, tmp);
      flat.insert(flat.end(), tmp.begin(), tmp.end());
      if (seen.insert(static_cast<std::uint32_t>(n)).second) {
        if (++n > max_order) {
          throw ResourceLimit("group order exceeds the bound " + std::to_string(max_order));
        }
      } else {
        flat.resize(n * w);
      }
    }
  }
  seen.clear();

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin() + 1, order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(flat.begin() + std::size_t{a} * w,
                                        flat.begin() + std::size_t{a + 1} * w,
                                        flat.begin() + std::size_t{b} * w,
                                        flat.begin() + std::size_t{b + 1} * w);
  });
  g->count_ = n;
  g->data_.resize(n * w);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy_n(flat.begin() + std::size_t{order[i]} * w, w, g->data_.begin() + i * w);
  }
  flat.clear();
  flat.shrink_to_fit();
  g->build_index();

  g->inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g->spec_.inverse(g->data(i), tmp);
    g->inverse_[i] = static_cast<std::uint32_t>(g->index_of(tmp));
  }
  if (n <= kMulTableMaxOrder) {
    std::vector<std::uint32_t> table(n * n);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) table[std::size_t{a} * n + b] = g->mul(a, b);
    }
    g->mul_table_ = std::move(table);
  }
  for (const auto& gen : generators) {
    g->generators_.push_back(static_cast<std::uint32_t>(g->index_of(gen)));
  }
  g->build_classes();
  return g;
}

void GroupModel::build_classes() {
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> label(count_, kUnset);
  std::vector<std::vector<std::uint32_t>> orbits;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t i = 0; i < count_; ++i) {
    if (label[i] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(orbits.size());
    std::vector<std::uint32_t> members{i};
    label[i] = id;
    stack.assign(1, i);
    while (!stack.empty()) {
      const std::uint32_t y = stack.back();
      stack.pop_back();
      for (auto s : generators_) {
        const std::uint32_t z = mul(mul(s, y), inverse_[s]);
        if (label[z] == kUnset) {
          label[z] = id;
          members.push_back(z);
          stack.push_back(z);
        }
      }
    }
    std::sort(members.begin(), members.end());
    orbits.push_back(std::move(members));
  }
  std::vector<std::uint32_t> perm(orbits.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (orbits[a].size() != orbits[b].size()) return orbits[a].size() < orbits[b].size();
    return orbits[a].front() < orbits[b].front();
  });
  class_of_.resize(count_);
  classes_.resize(orbits.size());
  for (std::uint32_t c = 0; c < perm.size(); ++c) {
    auto& cl = classes_[c];
    cl.members = std::move(orbits[perm[c]]);
    cl.rep = cl.members.front();
    cl.size = static_cast<std::uint32_t>(cl.members.size());
    for (auto m : cl.members) class_of_[m] = c;
  }
  std::uint64_t e = 1;
  for (auto& cl : classes_) {
    cl.rep_order = element_order(cl.rep);
    cl.powers.resize(cl.rep_order);
    std::uint32_t x = 0;
    for (std::uint32_t k = 0; k < cl.rep_order; ++k) {
      cl.powers[k] = class_of_[x];
      x = mul(x, cl.rep);
    }
    e = lcm64(e, cl.rep_order);
  }
  if (e > UINT32_MAX) throw ResourceLimit("group exponent too large");
  exponent_ = static_cast<std::uint32_t>(e);
}

}  // namespace eigc
