#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <random>

#include "eigcontain/errors.hpp"
#include "eigcontain/groups/catalog.hpp"

using namespace eigc;

namespace {

std::vector<std::uint32_t> class_sizes(const GroupModel& g) {
  std::vector<std::uint32_t> s;
  for (const auto& c : g.classes()) s.push_back(c.size);
  std::sort(s.begin(), s.end());
  return s;
}

void check_class_equation(const GroupModel& g) {
  std::size_t total = 0;
  for (const auto& c : g.classes()) {
    total += c.size;
    EXPECT_EQ(g.order() % c.size, 0u);
  }
  EXPECT_EQ(total, g.order());
  EXPECT_EQ(g.cls(0).size, 1u);
  EXPECT_EQ(g.cls(0).rep, 0u);
}

}  // namespace

TEST(Groups, ClosureExamples) {
  const auto s3 = GroupModel::closure({parse_permutation("(0 1)", 3), parse_permutation("(0 1 2)", 3)});
  EXPECT_EQ(s3->order(), 6u);
  auto f5 = FiniteField::get(5);
  const auto sl = GroupModel::closure({GroupElement::matrix(f5, 2, {1, 1, 0, 1}),
                                       GroupElement::matrix(f5, 2, {0, 4, 1, 0})});
  EXPECT_EQ(sl->order(), 120u);
  const auto triv = GroupModel::closure({});
  EXPECT_EQ(triv->order(), 1u);
  EXPECT_EQ(triv->class_count(), 1u);
}

TEST(Groups, ClosureErrors) {
  auto f5 = FiniteField::get(5);
  EXPECT_THROW(GroupModel::closure({parse_permutation("(0 1)", 3), GroupElement::matrix(f5, 2, {1, 1, 0, 1})}),
               DomainError);
  EXPECT_THROW(make_symmetric(6, 100), ResourceLimit);
  EXPECT_THROW(GroupElement::matrix(f5, 2, {1, 2, 2, 4}), DomainError);
  EXPECT_THROW(make_gl2(6), DomainError);
}

TEST(Groups, ConjugacyClassExamples) {
  const auto s3 = make_symmetric(3);
  EXPECT_EQ(class_sizes(*s3), (std::vector<std::uint32_t>{1, 2, 3}));
  EXPECT_EQ(make_gl2(5)->class_count(), 24u);
  for (const auto& g : {s3, make_symmetric(5), make_gl2(3), make_quaternion(), make_dihedral(4)}) {
    check_class_equation(*g);
  }
}

TEST(Groups, PowerMapExamples) {
  const auto s3 = make_symmetric(3);
  for (std::size_t c = 0; c < s3->class_count(); ++c) {
    EXPECT_EQ(s3->power_map(c, 0), 0u);
    EXPECT_EQ(s3->power_map(c, 1), c);
  }
  const std::size_t three = s3->class_of(static_cast<std::uint32_t>(s3->index_of(parse_permutation("(0 1 2)", 3))));
  EXPECT_EQ(s3->power_map(three, 2), three);
  const auto sl = make_sl2(5);
  const std::size_t minus_one = sl->class_of(static_cast<std::uint32_t>(gl2_index(*sl, 4, 0, 0, 4)));
  EXPECT_EQ(sl->cls(minus_one).size, 1u);
  EXPECT_EQ(sl->power_map(minus_one, 2), 0u);
}

TEST(Groups, PowerMapConsistencyRandomized) {
  std::mt19937_64 rng(3);
  for (const auto& g : {make_gl2(5), make_symmetric(5), make_sl2(7)}) {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(g->order() - 1));
    std::uniform_int_distribution<int> kk(-50, 50);
    for (int t = 0; t < 1000; ++t) {
      const std::uint32_t x = pick(rng);
      const int k = kk(rng);
      ASSERT_EQ(g->class_of(g->pow(x, k)), g->power_map(g->class_of(x), k));
    }
  }
}

TEST(Groups, MatrixFamilyOrders) {
  EXPECT_EQ(make_gl2(5)->order(), 480u);
  EXPECT_EQ(make_sl2(3)->order(), 24u);
  EXPECT_EQ(make_gl2(4)->order(), 180u);
  EXPECT_EQ(make_sl2(9)->order(), 720u);
  const auto p5 = make_pgl2(5);
  EXPECT_EQ(p5->order(), 120u);
  EXPECT_EQ(p5->carrier().degree, 6u);
  bool odd = false;
  for (std::uint32_t i = 0; i < p5->order() && !odd; ++i) {
    auto d = p5->data(i);
    std::vector<bool> seen(6);
    std::size_t cycles = 0;
    for (std::uint32_t s = 0; s < 6; ++s) {
      if (seen[s]) continue;
      ++cycles;
      for (std::uint32_t t = s; !seen[t]; t = d[t]) seen[t] = true;
    }
    odd = (6 - cycles) % 2 == 1;
  }
  EXPECT_TRUE(odd);
  EXPECT_EQ(class_sizes(*p5), class_sizes(*make_symmetric(5)));
}

TEST(Groups, PglMatchesGlModScalars) {
  for (std::uint32_t q : {3u, 5u}) {
    const auto gl = make_gl2(q);
    const auto pgl = make_pgl2(q);
    const auto sub = gl2_subgroups(*gl);
    // Classes of GL2 / Z: merge GL2 classes related by scalar multiplication.
    std::vector<std::uint32_t> root(gl->class_count());
    for (std::uint32_t c = 0; c < root.size(); ++c) root[c] = c;
    std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t c) {
      return root[c] == c ? c : root[c] = find(root[c]);
    };
    for (std::uint32_t c = 0; c < gl->class_count(); ++c) {
      for (auto z : sub.center) root[find(gl->class_of(gl->mul(z, gl->cls(c).rep)))] = find(c);
    }
    std::map<std::uint32_t, std::uint32_t> merged;
    for (std::uint32_t c = 0; c < gl->class_count(); ++c) merged[find(c)] += gl->cls(c).size;
    std::vector<std::uint32_t> sizes;
    for (auto& [r, s] : merged) sizes.push_back(s / (q - 1));
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, class_sizes(*pgl)) << "q=" << q;
  }
}

TEST(Groups, Gl2Subgroups) {
  const auto g = make_gl2(5);
  const auto s = gl2_subgroups(*g);
  EXPECT_EQ(s.split_torus.size(), 16u);
  EXPECT_EQ(s.nonsplit_torus.size(), 24u);
  EXPECT_EQ(s.unipotent.size(), 5u);
  EXPECT_EQ(s.center.size(), 4u);
  EXPECT_EQ(g->element_order(s.nonsplit_generator), 24u);
  std::vector<std::uint32_t> both;
  std::set_intersection(s.split_torus.begin(), s.split_torus.end(), s.nonsplit_torus.begin(),
                        s.nonsplit_torus.end(), std::back_inserter(both));
  EXPECT_EQ(both, s.center);
  EXPECT_THROW(gl2_subgroups(*make_sl2(5)), DomainError);
}

TEST(Groups, SmallCatalogOrders) {
  EXPECT_EQ(make_alternating(5)->order(), 60u);
  EXPECT_EQ(make_alternating(5)->class_count(), 5u);
  EXPECT_EQ(make_quaternion()->order(), 8u);
  EXPECT_EQ(make_quaternion()->class_count(), 5u);
  EXPECT_EQ(make_dihedral(4)->order(), 8u);
  EXPECT_EQ(make_cyclic(12)->class_count(), 12u);
  EXPECT_EQ(make_cyclic(12)->exponent(), 12u);
  EXPECT_EQ(make_symmetric(4)->exponent(), 12u);
  EXPECT_THROW(make_group("foo:3"), DomainError);
  EXPECT_THROW(make_group("sym:x"), DomainError);
}

TEST(Groups, PermutationFile) {
  const std::string path = ::testing::TempDir() + "/s4_gens.txt";
  {
    std::ofstream out(path);
    out << "# S4\n(0 1)\n(0 1 2 3)\n";
  }
  const auto g = make_group("perm:" + path);
  EXPECT_EQ(g->order(), 24u);
  {
    std::ofstream out(path);
    out << "(0 1)\n(0 1 x)\n";
  }
  try {
    make_group("perm:" + path);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}
