// One PASS/FAIL line per acceptance criterion. Exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eigcontain/chartab/character_table.hpp"
#include "eigcontain/chartab/gl2_restriction.hpp"
#include "eigcontain/exact/finite_field.hpp"
#include "eigcontain/gl2ring/expr.hpp"
#include "eigcontain/gl2ring/sym6.hpp"
#include "eigcontain/groups/catalog.hpp"
#include "eigcontain/lambda/lambda.hpp"
#include "eigcontain/preceq/preceq.hpp"
#include "eigcontain/satake/satake.hpp"
#include "oracles.hpp"

using namespace eigc;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr double kSatakeTol = 1e-9;

const std::vector<std::string> kCatalog = {"sym:3", "sym:4", "sym:5", "alt:5",  "sl2:3", "sl2:5",
                                           "gl2:3", "gl2:5", "pgl2:5", "q8", "dih:4", "cyclic:12"};

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Check {
  std::ostringstream detail;
  bool pass = true;
  void require(bool cond, const std::string& what) {
    if (!cond && pass) detail << "failed: " << what << "; ";
    pass = pass && cond;
  }
};

const CharacterTable& table(const std::string& desc) {
  static std::map<std::string, CharacterTable> cache;
  auto it = cache.find(desc);
  if (it == cache.end()) it = cache.emplace(desc, character_table(make_group(desc))).first;
  return it->second;
}

/// Containment decided from floating-point eigenvalue recovery, independent of preceq_check.
bool oracle_preceq(const ClassFunction& a, const ClassFunction& b) {
  for (std::size_t c = 0; c < a.size(); ++c) {
    auto ea = oracle::float_eigen_exponents(a, c), eb = oracle::float_eigen_exponents(b, c);
    std::multiset<std::int64_t> big(eb.begin(), eb.end());
    for (auto e : ea) {
      auto it = big.find(e);
      if (it == big.end()) return false;
      big.erase(it);
    }
  }
  return true;
}

void genuine_of_dim(const CharacterTable& t, std::int64_t d,
                    const std::function<void(const ClassFunction&)>& visit) {
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t start, std::int64_t left) {
    if (left == 0) {
      ClassFunction v = ClassFunction::zero(t.group);
      for (auto i : chosen) v = cf_add(v, t.irreducibles[i]);
      visit(v);
      return;
    }
    for (std::size_t i = start; i < t.size(); ++i) {
      if (t.dim(i) > left) continue;
      chosen.push_back(i);
      rec(i, left - t.dim(i));
      chosen.pop_back();
    }
  };
  rec(0, d);
}

Verdict gl2_containment() {
  Check ck;
  std::size_t pairs = 0, facts = 0;
  for (std::uint32_t q : {3u, 5u, 7u}) {
    const auto t = character_table_gl2_closed_form(q);
    const auto& g = *t.group;
    const FiniteField& f = *g.carrier().field;
    const auto xi = g.class_of(static_cast<std::uint32_t>(gl2_index(g, f.exp(1), 0, 0, f.exp(1))));
    // Central character read from values, not from labels.
    auto omega = [&](std::size_t r) { return t.irreducibles[r][xi] * CycNum(Rational(1, t.dim(r))); };
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t.labels[i].family != "C") continue;
      ck.require(t.dim(i) == q - 1, "cuspidal dimension");
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (t.labels[j].family != "P" || !(omega(i) == omega(j))) continue;
        ck.require(t.dim(j) == q + 1, "principal series dimension");
        ck.require(preceq_check(t.irreducibles[i], t.irreducibles[j]).holds,
                   t.label(i) + " <= " + t.label(j) + " for q=" + std::to_string(q));
        ck.require(!is_subrepresentation(t.irreducibles[i], t.irreducibles[j], t), "not a summand");
        ++pairs;
      }
    }
    for (const auto& r : gl2_restriction_facts(t)) {
      ck.require(r.ok(), "restriction facts for " + r.label + ": " + r.detail);
      ++facts;
    }
  }
  ck.require(pairs == 2 + 16 + 54, "pair count");
  ck.detail << "q=3,5,7: " << pairs << " equal-central (C,P) pairs contained; restriction facts on T, S, ZU hold for "
            << facts << " rows";
  return {ck.pass, ck.detail.str()};
}

Verdict gap_one() {
  Check ck;
  std::size_t candidates = 0;
  for (const auto& d : kCatalog) {
    const auto& t = table(d);
    ck.require(preceq_search(t, {1, 1}).empty(), "gap-1 search empty on " + d);
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (t.dim(j) != t.dim(i) + 1) continue;
        ++candidates;
        ck.require(!oracle_preceq(t.irreducibles[i], t.irreducibles[j]), "oracle on " + d);
      }
    }
  }
  ck.detail << kCatalog.size() << " groups, " << candidates << " gap-1 pairs, none contained";
  return {ck.pass, ck.detail.str()};
}

Verdict sl2f5() {
  Check ck;
  const auto& t = table("sl2:5");
  std::vector<std::size_t> two, six;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.dim(i) == 2) two.push_back(i);
    if (t.dim(i) == 6) six.push_back(i);
  }
  ck.require(two.size() == 2, "exactly two 2-dim irreducibles");
  ck.require(six.size() == 1, "a unique 6-dim irreducible");
  if (two.size() == 2 && six.size() == 1) {
    const auto &s = t.irreducibles[two[0]], &st = t.irreducibles[two[1]];
    const auto sym3 = symmetric_power(s, 3), sym5 = symmetric_power(s, 5);
    ck.require(sym3 == symmetric_power(st, 3), "Sym3 s = Sym3 s'");
    ck.require(char_inner(sym3, sym3) == CycNum(1) && *sym3.degree() == 4, "Sym3 irreducible of dim 4");
    ck.require(sym5 == cf_tensor(symmetric_power(s, 2), st), "Sym5 s = Sym2 s (x) s'");
    ck.require(sym5 == t.irreducibles[six[0]], "Sym5 s is the 6-dim irreducible");
    ck.require(preceq_check(sym3, sym5).holds, "Sym3 <= Sym5");
    ck.require(oracle_preceq(sym3, sym5), "oracle Sym3 <= Sym5");
  }
  ck.detail << "2 two-dim irreducibles; Sym3 irreducible (dim 4); Sym5 = Sym2 (x) conjugate (dim 6); Sym3 <= Sym5";
  return {ck.pass, ck.detail.str()};
}

Verdict pgl2f5() {
  Check ck;
  const auto& t = table("pgl2:5");
  std::size_t found = 0;
  for (auto [i, j] : preceq_search(t, {2, 1})) {
    if (t.dim(i) == 4 && t.dim(j) == 6) {
      ++found;
      ck.require(oracle_preceq(t.irreducibles[i], t.irreducibles[j]), "oracle confirms pair");
    }
  }
  ck.require(found > 0, "a (4,6) pair");
  ck.detail << found << " (4-dim, 6-dim) irreducible pairs with 4 <= 6 on PGL2(F_5)";
  return {ck.pass, ck.detail.str()};
}

Verdict sym6() {
  Check ck;
  const auto tet = sym6_isobaric_types(Sym6Case::tetrahedral);
  const auto oct = sym6_isobaric_types(Sym6Case::octahedral);
  const auto ico = sym6_isobaric_types(Sym6Case::icosahedral);
  ck.require(tet.types == std::set<IsobaricType>{{3, 3, 1}}, "tetrahedral {(3,3,1)}");
  ck.require(oct.types == std::set<IsobaricType>{{4, 2, 1}}, "octahedral {(4,2,1)}");
  std::set<IsobaricType> expect;
  for (auto p : partitions(4)) {
    p.push_back(3);
    std::sort(p.rbegin(), p.rend());
    expect.insert(p);
  }
  ck.require(ico.types == expect, "icosahedral = 3 + partition(4)");
  ck.require(ico.types.count({4, 3}) && !ico.types.count({5, 2}) && !ico.types.count({5, 1, 1}),
             "icosahedral contains (4,3), excludes (5,2), (5,1,1)");
  std::size_t identities = 0;
  for (const auto* r : {&tet, &oct, &ico}) {
    ck.require(r->certified(), "certificate of " + to_string(r->which));
    for (const auto& id : r->identities) {
      if (id.name == "hypothesis-dimension") continue;
      ck.require(verify_identity(id.lhs, id.rhs).equal, id.name);
      ++identities;
    }
  }
  // The eight displayed identities, independently of the certificates.
  const std::vector<std::pair<std::string, std::string>> displayed = {
      {"Sym[2](Sym[3](pi))", "Sym[6](pi) + w^2*Sym[2](pi)"},
      {"Sym[2](x1*pi + x2*pi)", "x1^2*Sym[2](pi) + x2^2*Sym[2](pi) + x1*x2*pi*pi"},
      {"Ext[2](Sym[4](pi))", "w*Sym[6](pi) + w^3*Sym[2](pi)"},
      {"Ext[2](x1*pi + x2*Sym[2](pi))",
       "x1^2*Ext[2](pi) + x2^2*Ext[2](Sym[2](pi)) + x1*x2*pi*Sym[2](pi)"},
      {"pi*Sym[2](pi)", "Sym[3](pi) + w*pi"},
      {"pi*Sym[5](pi)", "Sym[6](pi) + w*Sym[4](pi)"},
      {"pi*(chi*pi*Sym[2](pi2))", "chi*pi*pi*Sym[2](pi2)"},
      {"chi*pi*pi*Sym[2](pi2)", "chi*(w + Sym[2](pi))*Sym[2](pi2)"}};
  for (const auto& [l, r] : displayed) ck.require(verify_identity(l, r).equal, l + " = " + r);
  ck.detail << "tetrahedral {(3,3,1)}, octahedral {(4,2,1)}, icosahedral " << ico.types.size()
            << " types = 3 + partition(4); " << displayed.size() << " displayed identities and "
            << identities << " certificate identities verified (exterior-square identity with w^3)";
  return {ck.pass, ck.detail.str()};
}

Verdict lambda_identities() {
  Check ck;
  std::size_t chars = 0, points = 0, lemma = 0;
  std::mt19937_64 rng(kSeed);
  for (const auto& d : kCatalog) {
    const auto& t = table(d);
    genuine_of_dim(t, 4, [&](const ClassFunction& v) {
      ++chars;
      ClassFunction alt = ClassFunction::zero(t.group);
      for (std::uint32_t k = 0; k <= 4; ++k) {
        alt = k % 2 ? cf_sub(alt, exterior_power(v, k)) : cf_add(alt, exterior_power(v, k));
      }
      for (std::size_t c = 0; c < v.size(); ++c) {
        ++points;
        const auto ex = oracle::float_eigen_exponents(v, c);
        const bool has_one = std::count(ex.begin(), ex.end(), 0) > 0;
        ck.require(has_one == alt[c].is_zero(), "alternating sum on " + d);
      }
    });
  }
  // 100 random (W, A) pairs over the catalog, dim A = 2.
  std::uniform_int_distribution<std::size_t> pick_group(0, kCatalog.size() - 1);
  std::uniform_int_distribution<int> count(1, 3);
  while (lemma < 100) {
    const auto& t = table(kCatalog[pick_group(rng)]);
    std::vector<ClassFunction> dim2;
    genuine_of_dim(t, 2, [&](const ClassFunction& a) { dim2.push_back(a); });
    std::uniform_int_distribution<std::size_t> pick_a(0, dim2.size() - 1), pick_row(0, t.size() - 1);
    const auto& a = dim2[pick_a(rng)];
    ClassFunction w = ClassFunction::zero(t.group);
    for (int k = count(rng); k > 0; --k) w = cf_add(w, t.irreducibles[pick_row(rng)]);
    const auto v = cf_add(w, a);
    ck.require(cf_add(cf_tensor(v, w), exterior_power(a, 2)) ==
                   cf_add(exterior_power(v, 2), symmetric_power(w, 2)),
               "lemma identity");
    ++lemma;
  }
  ck.detail << chars << " genuine 4-dim characters at " << points
            << " class points agree; lemma identity on " << lemma << " random (W, A) pairs";
  return {ck.pass, ck.detail.str()};
}

Verdict newton() {
  Check ck;
  std::size_t points = 0, groups = 0;
  for (const auto& d : kCatalog) {
    const auto& t = table(d);
    const auto& g = *t.group;
    if (g.order() > 500) continue;
    ++groups;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t.dim(i) > 8) continue;
      const auto& chi = t.irreducibles[i];
      for (std::uint32_t k = 1; k <= 4; ++k) {
        const auto sym = symmetric_power(chi, k), ext = exterior_power(chi, k);
        for (std::size_t c = 0; c < g.class_count(); ++c) {
          const auto exps = oracle::float_eigen_exponents(chi, c);
          const auto m = g.element_order(g.cls(c).rep);
          const auto e = g.exponent();
          ++points;
          ck.require(static_cast<std::int64_t>(exps.size()) == t.dim(i), "eigenvalue recovery");
          ck.require(oracle::brute_power(exps, m, k, true).promote(e) == sym[c].promote(e),
                     "Sym on " + d);
          ck.require(oracle::brute_power(exps, m, k, false).promote(e) == ext[c].promote(e),
                     "Ext on " + d);
        }
      }
    }
  }
  ck.detail << groups << " groups, " << points << " (irreducible, k, class) points, k <= 4";
  return {ck.pass, ck.detail.str()};
}

Verdict su2_ladder() {
  Check ck;
  for (int n = 1; n <= 20; ++n) {
    const std::string a = "[" + std::to_string(n + 2) + "]*[" + std::to_string(n) + "] + [1]";
    const std::string b =
        "Ext[2]([" + std::to_string(n + 2) + "]) + Sym[2]([" + std::to_string(n) + "])";
    std::string c;
    for (int k = 0; k <= n; ++k) c += (k ? " + [" : "[") + std::to_string(2 * k + 1) + "]";
    ck.require(verify_identity(a, b).equal, "first equality n=" + std::to_string(n));
    ck.require(verify_identity(b, c).equal, "second equality n=" + std::to_string(n));
    ck.require(evaluate(c).dimension() == (n + 1) * (n + 1), "dimension");
  }
  ck.detail << "n = 1..20, both equalities, dimension (n+1)^2";
  return {ck.pass, ck.detail.str()};
}

Verdict tables() {
  Check ck;
  std::size_t count = 0;
  auto validate = [&](const CharacterTable& t, const std::string& name) {
    ++count;
    ck.require(validate_table(t).ok, "validate " + name);
    std::int64_t sq = 0;
    for (std::size_t i = 0; i < t.size(); ++i) sq += t.dim(i) * t.dim(i);
    ck.require(sq == static_cast<std::int64_t>(t.group->order()), "sum of squares " + name);
    ck.require(t.size() == t.group->class_count(), "row count " + name);
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i; j < t.size(); ++j) {
        ck.require(char_inner(t.irreducibles[i], t.irreducibles[j]) == CycNum(i == j ? 1 : 0),
                   "row orthogonality " + name);
      }
    }
  };
  for (const auto& d : kCatalog) {
    validate(table(d), d);
    if (table(d).method == "closed-form") validate(character_table(table(d).group, "generic"), d + " generic");
  }
  for (std::uint32_t q : {3u, 5u}) {
    const auto g = make_gl2(q);
    ck.require(tables_agree(character_table(g, "generic"), character_table(g, "closed-form")),
               "generic = closed form, q=" + std::to_string(q));
  }
  ck.detail << count << " tables valid; generic = closed form for GL2(F_3), GL2(F_5)";
  return {ck.pass, ck.detail.str()};
}

Verdict satake() {
  Check ck;
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> ang(0, M_PI);
  std::vector<SatakeRecord> data, ones;
  for (std::uint64_t p = 2; data.size() < 1000; ++p) {
    if (!is_prime(p)) continue;
    const std::complex<double> a = std::polar(1.0, ang(rng));
    data.push_back({p, {a, 1.0 / a}});
    ones.push_back({p, {1.0}});
  }
  const auto triv = check_containment(ones, sym_power_records(data, 2), kSatakeTol);
  ck.require(triv.verdict && triv.primes.size() == 1000, "trivial in Sym2");
  for (std::uint32_t n = 1; n <= 5; ++n) {
    ck.require(check_containment(sym_power_records(data, n - 1), sym_power_records(data, n + 1),
                                 kSatakeTol)
                   .verdict,
               "Sym^(n-1) in Sym^(n+1), n=" + std::to_string(n));
  }
  std::uniform_int_distribution<int> size(1, 6), pick(0, 3);
  std::normal_distribution<double> jitter(0, 0.15);
  std::uniform_real_distribution<double> tol(0.05, 0.6);
  const std::complex<double> grid[] = {1.0, {0, 1}, -1.0, {0.5, 0.5}};
  std::size_t positive = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    SatakeTuple s(size(rng)), b(size(rng));
    for (auto& z : s) z = grid[pick(rng)] + std::complex<double>(jitter(rng), jitter(rng));
    for (auto& z : b) z = grid[pick(rng)] + std::complex<double>(jitter(rng), jitter(rng));
    const double t = tol(rng);
    // Exhaustive search over injections.
    bool brute = false;
    if (s.size() <= b.size()) {
      std::vector<std::size_t> perm(b.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i) ok = std::abs(s[i] - b[perm[i]]) <= t;
        brute = brute || ok;
      } while (!brute && std::next_permutation(perm.begin(), perm.end()));
    }
    positive += brute;
    ck.require(check_containment({{2, s}}, {{2, b}}, t).verdict == brute, "matching vs brute force");
  }
  ck.detail << "1000 unitary records: trivial in Sym2 and ladders n<=5 contained (tol 1e-9, max residual "
            << triv.max_residual << "); matching = brute force on 1000 instances (" << positive
            << " contained)";
  return {ck.pass, ck.detail.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
      {1, "gl2-cuspidal-inside-principal-series", 120, gl2_containment},
      {2, "gap-one-rigidity", 120, gap_one},
      {3, "sl2f5-symmetric-powers", 30, sl2f5},
      {4, "pgl2f5-counterexample-pair", 30, pgl2f5},
      {5, "sym6-isobaric-types", 10, sym6},
      {6, "lambda-identities-pointwise", 180, lambda_identities},
      {7, "newton-vs-brute-force", 180, newton},
      {8, "su2-ladder", 5, su2_ladder},
      {9, "character-table-validity", 120, tables},
      {10, "satake-containment", 30, satake},
  };
  int passed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool ok = v.pass && in_time;
    passed += ok;
    std::printf("%s [%2d] %-38s %7.2fs (limit %.0fs)  %s%s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                secs, c.limit_s, v.detail.c_str(), in_time ? "" : " [over time limit]");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", passed, std::size(criteria));
  return passed == static_cast<int>(std::size(criteria)) ? 0 : 1;
}
