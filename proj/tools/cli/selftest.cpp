#include <functional>
#include <random>

#include "commands.hpp"
#include "eigcontain/groups/catalog.hpp"
#include "eigcontain/simd/kernels.hpp"

namespace eigc::cli {

namespace {

bool simd_agrees(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int32_t> small(-1000, 1000);
  std::uniform_int_distribution<std::uint32_t> residue(0, 65520);
  std::normal_distribution<double> gauss;
  std::vector<std::int32_t> a(37), b(53);
  for (auto& x : a) x = small(rng);
  for (auto& x : b) x = small(rng);
  std::vector<std::int64_t> acc1(a.size() + b.size() - 1), acc2(acc1.size());
  simd::scalar::convolve_accumulate(a, b, acc1);
  simd::convolve_accumulate(a, b, acc2);
  if (acc1 != acc2) return false;
  std::vector<std::uint32_t> x(101), y1(101), y2;
  for (auto& v : x) v = residue(rng);
  for (auto& v : y1) v = residue(rng);
  y2 = y1;
  simd::scalar::mod_axpy(y1, x, 12345, 65521);
  simd::mod_axpy(y2, x, 12345, 65521);
  if (y1 != y2) return false;
  std::vector<std::int32_t> s(29), g(29);
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i] = small(rng);
    g[i] = s[i] + 1;
  }
  g[23] = s[23] - 1;
  if (simd::scalar::first_exceeding(s, g) != simd::first_exceeding(s, g)) return false;
  std::vector<std::complex<double>> xs(7), ys(11);
  for (auto& z : xs) z = {gauss(rng), gauss(rng)};
  for (auto& z : ys) z = {gauss(rng), gauss(rng)};
  std::vector<double> d1(xs.size() * ys.size()), d2(d1.size());
  simd::scalar::pairwise_sqdist(xs, ys, d1);
  simd::pairwise_sqdist(xs, ys, d2);
  return d1 == d2;
}

}  // namespace

Outcome cmd_selftest(const GlobalOptions& opt) {
  io::Json checks = io::Json::array();
  bool all = true;
  auto record = [&](const std::string& name, const std::function<bool()>& f) {
    bool ok = false;
    std::string error;
    try {
      ok = f();
    } catch (const std::exception& e) {
      error = e.what();
    }
    all = all && ok;
    io::Json c{{"check", name}, {"pass", ok}};
    if (!error.empty()) c["error"] = error;
    checks.push_back(c);
  };
  record("simd-kernels-match-scalar", [&] { return simd_agrees(opt.seed); });
  record("cyclotomic-arithmetic", [] {
    const CycNum z = CycNum::zeta(5, 1);
    CycNum s(0);
    for (int k = 0; k < 5; ++k) s += CycNum::zeta(5, k);
    return s.is_zero() && z * z.inverse() == CycNum(1);
  });
  record("table-s4", [&] {
    const auto t = load_table(opt, make_group("sym:4"));
    return t.size() == 5 && validate_table(t).ok;
  });
  record("table-gl2-3-both-methods", [&] {
    const auto g = make_group("gl2:3");
    return tables_agree(load_table(opt, g, "generic"), load_table(opt, g, "closed-form"));
  });
  record("preceq-gl2-5-cuspidal", [&] {
    const auto t = load_table(opt, make_group("gl2:5"), "closed-form");
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (t.labels[i].family == "C" && t.labels[j].family == "P" &&
            t.central_character[i] == t.central_character[j]) {
          return preceq_check(t.irreducibles[i], t.irreducibles[j]).holds &&
                 !preceq_check(t.irreducibles[j], t.irreducibles[i]).holds;
        }
      }
    }
    return false;
  });
  record("ring-identity", [] {
    return verify_identity("Sym[2](Sym[3](pi))", "Sym[6](pi) + w^2*Sym[2](pi)").equal;
  });
  record("sym6-tetrahedral", [] {
    return sym6_isobaric_types(Sym6Case::tetrahedral).types == std::set<IsobaricType>{{3, 3, 1}};
  });
  record("satake-sym2-contains-trivial", [] {
    const std::complex<double> a = std::polar(1.0, 0.4);
    return check_containment({{2, {1.0}}}, {{2, sym_power_tuple({a, 1.0 / a}, 2)}}).verdict;
  });
  io::Json r{{"command", "selftest"},
             {"seed", opt.seed},
             {"simd", std::string(simd::isa_name(simd::active_isa()))},
             {"checks", checks},
             {"all_pass", all}};
  return {r, all ? 0 : 1};
}

}  // namespace eigc::cli
