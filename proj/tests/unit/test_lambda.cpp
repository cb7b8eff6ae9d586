#include <gtest/gtest.h>

#include <random>

#include "eigcontain/chartab/character_table.hpp"
#include "eigcontain/errors.hpp"
#include "eigcontain/groups/catalog.hpp"
#include "eigcontain/lambda/lambda.hpp"
#include "oracles.hpp"

using namespace eigc;

namespace {

ClassFunction values(const GroupPtr& g, std::vector<std::int64_t> v) {
  std::vector<CycNum> c(v.begin(), v.end());
  return ClassFunction(g, c);
}

struct S3 {
  GroupPtr g = make_symmetric(3);
  ClassFunction triv = trivial_character(g);
  ClassFunction sign = values(g, {1, 1, -1});
  ClassFunction std2 = values(g, {2, -1, 0});
};

std::size_t dim2_index(const CharacterTable& t, std::size_t which) {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.dim(i) == 2 && seen++ == which) return i;
  }
  return t.size();
}

}  // namespace

TEST(Lambda, StandardOfS3IsPermutationMinusTrivial) {
  S3 s;
  EXPECT_EQ(cf_sub(oracle::permutation_character(s.g), s.triv), s.std2);
}

TEST(Lambda, TensorExamples) {
  S3 s;
  EXPECT_EQ(cf_tensor(s.triv, s.std2), s.std2);
  EXPECT_EQ(cf_tensor(s.std2, s.std2), values(s.g, {4, 1, 0}));
  EXPECT_EQ(cf_sub(s.std2, s.std2), ClassFunction::zero(s.g));
  EXPECT_THROW(cf_add(s.std2, trivial_character(make_symmetric(3))), GroupMismatch);
}

TEST(Lambda, AdamsExamples) {
  S3 s;
  EXPECT_EQ(adams(s.std2, 2)[2], CycNum(2));
  EXPECT_EQ(adams(s.std2, 1), s.std2);
  EXPECT_EQ(adams(s.std2, 0), values(s.g, {2, 2, 2}));
  const auto c5 = character_table_generic(make_cyclic(5));
  for (const auto& chi : c5.irreducibles) {
    EXPECT_EQ(adams(chi, -1), chi.conj());
    EXPECT_EQ(adams(chi, 2), cf_tensor(chi, chi));
  }
}

TEST(Lambda, ExteriorExamples) {
  S3 s;
  EXPECT_EQ(exterior_power(s.std2, 2), s.sign);
  EXPECT_EQ(exterior_power(s.std2, 3), ClassFunction::zero(s.g));
  const auto s4 = make_symmetric(4);
  const auto perm = oracle::permutation_character(s4);
  EXPECT_EQ(exterior_power(perm, 4)[0], CycNum(1));
  EXPECT_EQ(exterior_power(perm, 0), trivial_character(s4));
}

TEST(Lambda, SymmetricExamples) {
  S3 s;
  const auto sym2 = symmetric_power(s.std2, 2);
  EXPECT_EQ(sym2, values(s.g, {3, 0, 1}));
  EXPECT_EQ(sym2, cf_add(s.std2, s.triv));
  EXPECT_EQ(symmetric_power(s.std2, 1), s.std2);
  const auto t = character_table_generic(make_sl2(5));
  const auto& sigma = t.irreducibles[dim2_index(t, 0)];
  const auto sym3 = symmetric_power(sigma, 3);
  EXPECT_EQ(char_inner(sym3, sym3), CycNum(1));
  EXPECT_EQ(*sym3.degree(), 4);
}

TEST(Lambda, EigenMultisetExamples) {
  S3 s;
  const auto e = eigen_multiset(s.triv, 1);
  EXPECT_EQ(e.total(), 1);
  EXPECT_EQ(e.multiplicity(1, 0), 1);
  const auto st = eigen_multiset(s.std2, 1);
  EXPECT_EQ(st.order, 3u);
  EXPECT_EQ(st.mults, (std::vector<std::int64_t>{0, 1, 1}));
  const auto c2 = make_cyclic(2);
  const auto reg = eigen_multiset(regular_character(c2), 1);
  EXPECT_EQ(reg.mults, (std::vector<std::int64_t>{1, 1}));
  EXPECT_THROW(eigen_multiset(cf_sub(s.triv, s.sign), 2), NotGenuine);
  EXPECT_THROW(eigen_multiset(cf_scale(s.triv, Rational(1, 2)), 0), NotGenuine);
}

TEST(Lambda, EigenMultisetMatchesPermutationMatrices) {
  for (const auto& g : {make_symmetric(5), make_pgl2(5), make_dihedral(6), make_alternating(6)}) {
    const auto perm = oracle::permutation_character(g);
    for (std::size_t c = 0; c < g->class_count(); ++c) {
      const auto em = eigen_multiset(perm, c);
      const auto exps = oracle::permutation_eigen_exponents(*g, g->cls(c).rep);
      std::vector<std::int64_t> mults(em.order, 0);
      for (auto x : exps) ++mults[static_cast<std::size_t>(x)];
      EXPECT_EQ(em.mults, mults) << g->descriptor() << " class " << c;
      EXPECT_EQ(em.product(), determinant(perm)[c]);
    }
  }
}

TEST(Lambda, DecomposeExamples) {
  const auto g = make_sl2(5);
  const auto t = character_table_generic(g);
  for (const auto& [i, m] : decompose(regular_character(g), t)) EXPECT_EQ(m, t.dim(i));
  EXPECT_EQ(decompose(regular_character(g), t).size(), t.size());
  for (std::size_t which = 0; which < 2; ++which) {
    const auto& chi = t.irreducibles[dim2_index(t, which)];
    const auto lhs = symmetric_power(symmetric_power(chi, 2), 2);
    const auto det = determinant(chi);
    const auto diff = cf_sub(cf_sub(lhs, symmetric_power(chi, 4)), cf_tensor(det, det));
    EXPECT_TRUE(decompose(diff, t).empty());
    const auto sym5 = decompose(symmetric_power(chi, 5), t);
    ASSERT_EQ(sym5.size(), 1u);
    EXPECT_EQ(t.dim(sym5[0].first), 6);
    EXPECT_EQ(sym5[0].second, 1);
  }
  EXPECT_THROW(decompose(cf_scale(trivial_character(g), Rational(1, 2)), t), DomainError);
}

TEST(Lambda, NewtonAgreesWithBruteForce) {
  for (const auto& g : {make_symmetric(4), make_sl2(3), make_quaternion(), make_alternating(5)}) {
    const auto t = character_table_generic(g);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto& chi = t.irreducibles[i];
      for (std::uint32_t k = 0; k <= 4; ++k) {
        const auto sym = symmetric_power(chi, k), ext = exterior_power(chi, k);
        for (std::size_t c = 0; c < g->class_count(); ++c) {
          const auto em = eigen_multiset(chi, c);
          std::vector<std::int64_t> exps;
          for (auto [j, mult] : em.entries()) exps.insert(exps.end(), mult, j);
          ASSERT_EQ(sym[c], oracle::brute_power(exps, em.order, k, true));
          ASSERT_EQ(ext[c], oracle::brute_power(exps, em.order, k, false));
        }
      }
    }
  }
}

TEST(Lambda, SumRulesAsPolynomials) {
  // sum_k (-1)^k L^k(chi)(c) t^k = prod (1 - eps t) over the eigenvalues.
  const auto g = make_symmetric(5);
  const auto t = character_table_generic(g);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& chi = t.irreducibles[i];
    const std::int64_t d = t.dim(i);
    for (std::size_t c = 0; c < g->class_count(); ++c) {
      const auto em = eigen_multiset(chi, c);
      std::vector<CycNum> poly{CycNum(1)};
      for (auto [j, mult] : em.entries()) {
        for (std::int64_t r = 0; r < mult; ++r) {
          std::vector<CycNum> next(poly.size() + 1, CycNum(0));
          for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + 1] -= poly[k] * CycNum::zeta(em.order, j);
          }
          poly = next;
        }
      }
      for (std::int64_t k = 0; k <= d; ++k) {
        const CycNum lk = exterior_power(chi, static_cast<std::uint32_t>(k))[c];
        EXPECT_EQ(k % 2 ? -lk : lk, poly[static_cast<std::size_t>(k)]);
      }
    }
  }
}
