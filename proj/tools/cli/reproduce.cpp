#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "commands.hpp"
#include "eigcontain/chartab/gl2_restriction.hpp"
#include "eigcontain/exact/finite_field.hpp"
#include "eigcontain/groups/catalog.hpp"
#include "usage.hpp"

namespace eigc::cli {

extern const std::string_view kEmbeddedClaims;

namespace {

using io::Json;

const Json& registry() {
  static const Json r = Json::parse(kEmbeddedClaims);
  return r;
}

std::vector<std::string> group_list(const Json& params) {
  const Json& g = params.at("groups");
  if (g.is_string() && g.get<std::string>() == "catalog") {
    return registry().at("catalog").get<std::vector<std::string>>();
  }
  return g.get<std::vector<std::string>>();
}

Json run_gl2_containment(const GlobalOptions& opt, const Json& params) {
  const auto q = params.at("q").get<std::uint32_t>();
  const auto t = load_table(opt, make_group("gl2:" + std::to_string(q)), "closed-form");
  EigenTable eig(t.irreducibles, opt.threads);
  std::size_t checked = 0, held = 0, other = 0, other_failed = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.labels[i].family != "C") continue;
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (t.labels[j].family != "P") continue;
      const bool holds = preceq_check(t.irreducibles[i], t.irreducibles[j]).holds;
      if (t.central_character[i] == t.central_character[j]) {
        ++checked;
        held += holds;
      } else {
        ++other;
        other_failed += !holds;
      }
    }
  }
  bool facts = true;
  Json bad = Json::array();
  for (const auto& f : gl2_restriction_facts(t)) {
    if (!f.ok()) {
      facts = false;
      bad.push_back({{"label", f.label}, {"detail", f.detail}});
    }
  }
  return Json{{"pairs_checked", checked},
              {"all_hold", checked > 0 && held == checked},
              {"mismatched_central_pairs", other},
              {"mismatched_central_fail", other_failed == other},
              {"restriction_facts_hold", facts},
              {"restriction_failures", bad}};
}

Json run_preceq_search(const GlobalOptions& opt, const Json& params) {
  SearchOptions so;
  so.gap = params.at("gap").get<std::int64_t>();
  so.threads = opt.threads;
  std::size_t total = 0;
  bool has46 = false;
  Json per = Json::array();
  for (const auto& desc : group_list(params)) {
    const auto t = load_table(opt, load_group(opt, desc));
    const auto pairs = preceq_search(t, so);
    Json dims = Json::array();
    for (auto [i, j] : pairs) {
      dims.push_back({t.label(i), t.label(j), t.dim(i), t.dim(j)});
      has46 = has46 || (t.dim(i) == 4 && t.dim(j) == 6);
    }
    total += pairs.size();
    per.push_back({{"group", desc}, {"pairs", dims}});
  }
  return Json{{"total_pairs", total}, {"has_pair_4_6", has46}, {"groups", per}};
}

Json run_sl2f5(const GlobalOptions& opt, const Json&) {
  const auto t = load_table(opt, make_group("sl2:5"));
  std::vector<std::size_t> two;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.dim(i) == 2) two.push_back(i);
  }
  Json r{{"two_dim_irreducibles", two.size()}};
  if (two.size() != 2) return r;
  const auto& s = t.irreducibles[two[0]];
  const auto& s2 = t.irreducibles[two[1]];
  const auto sym3 = symmetric_power(s, 3), sym3b = symmetric_power(s2, 3);
  const auto sym5 = symmetric_power(s, 5);
  auto irreducible_dim = [&](const ClassFunction& chi) -> Json {
    const auto d = decompose(chi, t);
    if (d.size() == 1 && d[0].second == 1) return t.dim(d[0].first);
    return nullptr;
  };
  r["sym3_agree"] = sym3 == sym3b;
  r["sym3_irreducible_dim"] = irreducible_dim(sym3);
  r["sym5_equals_sym2_tensor_other"] = sym5 == cf_tensor(symmetric_power(s, 2), s2);
  r["sym5_irreducible_dim"] = irreducible_dim(sym5);
  r["sym3_preceq_sym5"] = preceq_check(sym3, sym5).holds;
  return r;
}

Json run_sym6(const GlobalOptions&, const Json& params) {
  const auto res = sym6_isobaric_types(parse_sym6_case(params.at("case").get<std::string>()));
  Json types = Json::array();
  for (const auto& t : res.types) types.push_back(t);
  return Json{{"types", types}, {"certified", res.certified()}, {"certificate", io::to_json(res)["certificate"]}};
}

Json run_ring_identity(const GlobalOptions&, const Json& params) {
  const auto rep =
      verify_identity(params.at("lhs").get<std::string>(), params.at("rhs").get<std::string>());
  return io::to_json(rep);
}

Json run_su2_ladder(const GlobalOptions&, const Json& params) {
  const int n_max = params.at("n_max").get<int>();
  bool all = true;
  Json failures = Json::array();
  for (int n = 1; n <= n_max; ++n) {
    const std::string a = "[" + std::to_string(n + 2) + "]*[" + std::to_string(n) + "] + [1]";
    const std::string b =
        "Ext[2]([" + std::to_string(n + 2) + "]) + Sym[2]([" + std::to_string(n) + "])";
    std::string c;
    for (int k = 0; k <= n; ++k) c += (k ? " + [" : "[") + std::to_string(2 * k + 1) + "]";
    const bool ok = verify_identity(a, b).equal && verify_identity(b, c).equal;
    if (!ok) failures.push_back(n);
    all = all && ok;
  }
  return Json{{"all_equal", all}, {"failures", failures}};
}

/// Every multiset of rows whose dimensions sum to d, as multiplicity vectors.
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

Json run_prop2(const GlobalOptions& opt, const Json& params) {
  std::size_t chars = 0, points = 0, disagreements = 0;
  for (const auto& desc : group_list(params)) {
    const auto t = load_table(opt, load_group(opt, desc));
    genuine_of_dim(t, 4, [&](const ClassFunction& v) {
      ++chars;
      ClassFunction alt = ClassFunction::zero(t.group);
      for (std::uint32_t k = 0; k <= 4; ++k) {
        alt = k % 2 ? cf_sub(alt, exterior_power(v, k)) : cf_add(alt, exterior_power(v, k));
      }
      for (std::size_t c = 0; c < t.group->class_count(); ++c) {
        ++points;
        const bool has_one = eigen_multiset(v, c).multiplicity(1, 0) > 0;
        if (has_one != alt[c].is_zero()) ++disagreements;
      }
    });
  }
  return Json{{"characters", chars}, {"points", points}, {"all_agree", disagreements == 0}};
}

Json run_lemma1(const GlobalOptions& opt, const Json& params) {
  std::mt19937_64 rng(opt.seed);
  const auto groups = group_list(params);
  const int pairs = params.at("pairs").get<int>();
  std::size_t checked = 0, failed = 0;
  for (const auto& desc : groups) {
    const auto t = load_table(opt, load_group(opt, desc));
    std::vector<ClassFunction> dim2;
    genuine_of_dim(t, 2, [&](const ClassFunction& a) { dim2.push_back(a); });
    std::uniform_int_distribution<std::size_t> pick_a(0, dim2.size() - 1), pick_row(0, t.size() - 1);
    std::uniform_int_distribution<int> count(1, 3);
    for (int i = 0; i < pairs; ++i) {
      const ClassFunction& a = dim2[pick_a(rng)];
      ClassFunction w = ClassFunction::zero(t.group);
      for (int k = count(rng); k > 0; --k) w = cf_add(w, t.irreducibles[pick_row(rng)]);
      const auto v = cf_add(w, a);
      const auto lhs = cf_add(cf_tensor(v, w), exterior_power(a, 2));
      const auto rhs = cf_add(exterior_power(v, 2), symmetric_power(w, 2));
      ++checked;
      failed += !(lhs == rhs);
    }
  }
  return Json{{"pairs_checked", checked}, {"all_hold", failed == 0}};
}

CycNum brute_power(const EigenMultiset& m, std::uint32_t k, bool symmetric) {
  std::vector<std::int64_t> exps;
  for (const auto& [e, mult] : m.entries()) {
    for (std::int64_t i = 0; i < mult; ++i) exps.push_back(e);
  }
  std::vector<std::int64_t> counts(m.order, 0);
  std::vector<std::size_t> idx;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t start, std::int64_t acc) {
    if (idx.size() == k) {
      ++counts[static_cast<std::size_t>(acc % m.order)];
      return;
    }
    for (std::size_t i = start; i < exps.size(); ++i) {
      idx.push_back(i);
      rec(symmetric ? i : i + 1, acc + exps[i]);
      idx.pop_back();
    }
  };
  rec(0, 0);
  return CycNum::from_root_counts(m.order, counts);
}

Json run_newton(const GlobalOptions& opt, const Json& params) {
  const auto max_dim = params.at("max_dim").get<std::int64_t>();
  const auto max_k = params.at("max_k").get<std::uint32_t>();
  const auto max_order = params.at("max_order").get<std::size_t>();
  std::size_t checked = 0, failed = 0;
  for (const auto& desc : group_list(params)) {
    const auto g = load_group(opt, desc);
    if (g->order() > max_order) continue;
    const auto t = load_table(opt, g);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t.dim(i) > max_dim) continue;
      const auto& chi = t.irreducibles[i];
      for (std::uint32_t k = 1; k <= max_k; ++k) {
        const auto sym = symmetric_power(chi, k), ext = exterior_power(chi, k);
        for (std::size_t c = 0; c < g->class_count(); ++c) {
          const auto em = eigen_multiset(chi, c);
          const std::uint32_t e = g->exponent();
          ++checked;
          failed += !(brute_power(em, k, true).promote(e) == sym[c].promote(e) &&
                      brute_power(em, k, false).promote(e) == ext[c].promote(e));
        }
      }
    }
  }
  return Json{{"points_checked", checked}, {"all_agree", failed == 0}};
}

Json run_table_validity(const GlobalOptions& opt, const Json& params) {
  bool all = true;
  Json per = Json::array();
  for (const auto& desc : group_list(params)) {
    const auto g = load_group(opt, desc);
    const auto t = load_table(opt, g);
    const auto check = validate_table(t);
    all = all && check.ok;
    per.push_back({{"group", desc}, {"order", g->order()}, {"classes", g->class_count()},
                   {"method", t.method}, {"valid", check.ok}});
    if (g->origin().kind == GroupKind::gl2) {
      const auto gen = load_table(opt, g, "generic");
      const bool ok = validate_table(gen).ok;
      all = all && ok;
      per.push_back({{"group", desc}, {"order", g->order()}, {"classes", g->class_count()},
                     {"method", gen.method}, {"valid", ok}});
    }
  }
  return Json{{"all_valid", all}, {"tables", per}};
}

Json run_gl2_agreement(const GlobalOptions& opt, const Json& params) {
  bool all = true;
  Json per = Json::array();
  for (auto q : params.at("q").get<std::vector<std::uint32_t>>()) {
    const auto g = load_group(opt, "gl2:" + std::to_string(q));
    const bool ok = tables_agree(load_table(opt, g, "generic"), load_table(opt, g, "closed-form"));
    all = all && ok;
    per.push_back({{"q", q}, {"agree", ok}});
  }
  return Json{{"all_agree", all}, {"fields", per}};
}

std::vector<SatakeRecord> random_unitary(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(0, M_PI);
  std::vector<SatakeRecord> out;
  for (std::uint64_t p = 2; out.size() < count; ++p) {
    if (!is_prime(p)) continue;
    const std::complex<double> a = std::polar(1.0, ang(rng));
    out.push_back({p, {a, 1.0 / a}});
  }
  return out;
}

Json run_satake_trivial(const GlobalOptions& opt, const Json& params) {
  const auto data = random_unitary(opt.seed, params.at("records").get<std::size_t>());
  std::vector<SatakeRecord> ones;
  for (const auto& r : data) ones.push_back({r.p, {1.0}});
  const auto res = check_containment(ones, sym_power_records(data, 2), params.at("tol").get<double>());
  return Json{{"verdict", res.verdict}, {"primes_checked", res.primes.size()},
              {"max_residual", res.max_residual}};
}

Json run_satake_ladder(const GlobalOptions& opt, const Json& params) {
  const auto data = random_unitary(opt.seed, params.at("records").get<std::size_t>());
  const double tol = params.at("tol").get<double>();
  bool all = true;
  Json per = Json::array();
  for (std::uint32_t n = 1; n <= params.at("n_max").get<std::uint32_t>(); ++n) {
    const auto res =
        check_containment(sym_power_records(data, n - 1), sym_power_records(data, n + 1), tol);
    all = all && res.verdict;
    per.push_back({{"n", n}, {"verdict", res.verdict}, {"max_residual", res.max_residual}});
  }
  return Json{{"all_contained", all}, {"ladders", per}};
}

using Runner = Json (*)(const GlobalOptions&, const Json&);

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> m = {
      {"gl2-cuspidal-in-principal", run_gl2_containment},
      {"preceq-search", run_preceq_search},
      {"sl2f5-example", run_sl2f5},
      {"sym6", run_sym6},
      {"ring-identity", run_ring_identity},
      {"su2-ladder", run_su2_ladder},
      {"prop2-pointwise", run_prop2},
      {"lemma1-random", run_lemma1},
      {"newton-vs-brute", run_newton},
      {"table-validity", run_table_validity},
      {"gl2-table-agreement", run_gl2_agreement},
      {"satake-trivial-in-sym2", run_satake_trivial},
      {"satake-ladder", run_satake_ladder},
  };
  return m;
}

Json run_claim(const GlobalOptions& opt, const Json& claim) {
  const auto& kind = claim.at("kind").get_ref<const std::string&>();
  auto it = runners().find(kind);
  if (it == runners().end()) throw InternalError("claim kind '" + kind + "' has no runner");
  const Json observed = it->second(opt, claim.at("params"));
  Json diff = Json::array();
  for (const auto& [key, want] : claim.at("expected").items()) {
    const Json got = observed.contains(key) ? observed.at(key) : Json();
    if (got != want) diff.push_back({{"key", key}, {"expected", want}, {"observed", got}});
  }
  return Json{{"id", claim.at("id")},
              {"statement", claim.at("statement")},
              {"kind", kind},
              {"params", claim.at("params")},
              {"expected", claim.at("expected")},
              {"observed", observed},
              {"match", diff.empty()},
              {"diff", diff}};
}

}  // namespace

Outcome cmd_list_claims(const GlobalOptions& opt) {
  Json list = Json::array();
  for (const auto& c : registry().at("claims")) {
    list.push_back({{"id", c.at("id")}, {"statement", c.at("statement")}});
  }
  Json r{{"command", "reproduce --list"}, {"seed", opt.seed}, {"claims", list}};
  return {r, 0};
}

Outcome cmd_reproduce(const GlobalOptions& opt, const std::string& id) {
  Json r{{"command", "reproduce"}, {"seed", opt.seed}};
  Json results = Json::array();
  bool all = true, found = false;
  for (const auto& c : registry().at("claims")) {
    if (id != "all" && c.at("id").get<std::string>() != id) continue;
    found = true;
    Json res = run_claim(opt, c);
    all = all && res.at("match").get<bool>();
    results.push_back(std::move(res));
  }
  if (!found) throw UsageError("unknown claim id '" + id + "' (see reproduce --list)");
  if (id == "all") {
    r["claims"] = results;
    r["all_match"] = all;
  } else {
    r["claim"] = results[0];
  }
  return {r, all ? 0 : 1};
}

}  // namespace eigc::cli
