#include "commands.hpp"

#include <algorithm>

#include "char_expr.hpp"
#include "eigcontain/groups/catalog.hpp"
#include "usage.hpp"

namespace eigc::cli {

namespace {

io::Json header(const GlobalOptions& g, const std::string& command) {
  return io::Json{{"command", command}, {"seed", g.seed}};
}

TableOptions table_options(const GlobalOptions& g) {
  TableOptions o;
  if (g.max_classes) o.max_classes = g.max_classes;
  return o;
}

io::Json row_ref(const CharacterTable& t, std::size_t i) {
  return io::Json{{"index", i}, {"label", t.label(i)}, {"dim", t.dim(i)}};
}

}  // namespace

GroupPtr load_group(const GlobalOptions& g, const std::string& descriptor) {
  if (descriptor.empty()) throw UsageError("--group is required");
  return make_group(descriptor, g.max_group_order ? g.max_group_order : kDefaultMaxGroupOrder);
}

CharacterTable load_table(const GlobalOptions& g, const GroupPtr& group,
                          const std::string& method) {
  if (method != "auto" && method != "generic" && method != "closed-form") {
    throw UsageError("--method must be auto, generic or closed-form");
  }
  return character_table(group, method, table_options(g));
}

Outcome cmd_chartable(const GlobalOptions& g, const TableArgs& a) {
  const auto group = load_group(g, a.group);
  const auto t = load_table(g, group, a.method);
  const auto check = validate_table(t);
  io::Json r = header(g, "chartable");
  r["table"] = io::to_json(t);
  r["valid"] = check.ok;
  if (!check.ok) r["validation_error"] = check.message;
  return {r, check.ok ? 0 : 1};
}

Outcome cmd_lambda(const GlobalOptions& g, const LambdaArgs& a) {
  const auto group = load_group(g, a.group);
  const auto t = load_table(g, group);
  const auto chi = parse_char_expr(a.chr, t);
  ClassFunction result = chi;
  const std::string& op = a.op;
  auto degree = [&](std::size_t prefix) {
    const std::string digits = op.substr(prefix);
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); })) {
      throw UsageError("bad degree in --op " + op);
    }
    return static_cast<std::uint32_t>(std::stoul(digits));
  };
  if (op.rfind("sym:", 0) == 0) {
    result = symmetric_power(chi, degree(4));
  } else if (op.rfind("ext:", 0) == 0) {
    result = exterior_power(chi, degree(4));
  } else if (op.rfind("adams:", 0) == 0) {
    result = adams(chi, degree(6));
  } else if (op == "det") {
    result = determinant(chi);
  } else if (!op.empty() && op != "id") {
    throw UsageError("--op must be sym:K, ext:K, adams:K, det or id");
  }
  io::Json r = header(g, "lambda");
  r["group"] = group->descriptor();
  r["char"] = a.chr;
  r["op"] = op.empty() ? "id" : op;
  r["input"] = io::to_json(chi);
  r["result"] = io::to_json(result);
  io::Json dec = io::Json::array();
  try {
    for (const auto& [i, m] : decompose(result, t)) {
      io::Json row = row_ref(t, i);
      row["multiplicity"] = m;
      dec.push_back(row);
    }
    r["decomposition"] = dec;
  } catch (const DomainError& e) {
    r["decomposition"] = nullptr;
    r["decomposition_error"] = e.what();
  }
  if (a.eigen) {
    io::Json eig = io::Json::array();
    for (std::size_t c = 0; c < group->class_count(); ++c) {
      eig.push_back(io::to_json(eigen_multiset(result, c)));
    }
    r["eigenvalues"] = eig;
  }
  return {r, 0};
}

Outcome cmd_preceq(const GlobalOptions& g, const PreceqArgs& a) {
  const auto group = load_group(g, a.group);
  const auto t = load_table(g, group);
  const auto c1 = parse_char_expr(a.rep1, t);
  const auto c2 = parse_char_expr(a.rep2, t);
  const auto rep = preceq_check(c1, c2);
  io::Json r = header(g, "preceq");
  r["group"] = group->descriptor();
  r["rep1"] = {{"expr", a.rep1}, {"dim", c1.degree() ? io::Json(*c1.degree()) : io::Json()}};
  r["rep2"] = {{"expr", a.rep2}, {"dim", c2.degree() ? io::Json(*c2.degree()) : io::Json()}};
  r["result"] = io::to_json(rep, *group);
  r["summand"] = is_subrepresentation(c1, c2, t);
  return {r, rep.holds ? 0 : 1};
}

Outcome cmd_preceq_search(const GlobalOptions& g, const SearchArgs& a) {
  const auto group = load_group(g, a.group);
  const auto t = load_table(g, group);
  SearchOptions opts;
  opts.threads = g.threads;
  if (a.gap != "any") {
    try {
      std::size_t used = 0;
      opts.gap = std::stoll(a.gap, &used);
      if (used != a.gap.size()) throw std::invalid_argument(a.gap);
    } catch (const std::logic_error&) {
      throw UsageError("--gap must be an integer or 'any'");
    }
  }
  const auto pairs = preceq_search(t, opts);
  io::Json list = io::Json::array();
  for (auto [i, j] : pairs) list.push_back({{"small", row_ref(t, i)}, {"big", row_ref(t, j)}});
  io::Json r = header(g, "preceq-search");
  r["group"] = group->descriptor();
  r["gap"] = a.gap;
  r["irreducibles"] = t.size();
  r["pairs"] = list;
  return {r, 0};
}

Outcome cmd_gl2_verify(const GlobalOptions& g, const std::string& lhs, const std::string& rhs) {
  const auto rep = verify_identity(lhs, rhs);
  io::Json r = header(g, "gl2 verify");
  r["input"] = {{"lhs", lhs}, {"rhs", rhs}};
  r["result"] = io::to_json(rep);
  return {r, rep.equal ? 0 : 1};
}

Outcome cmd_gl2_sym6(const GlobalOptions& g, const std::string& which) {
  Sym6Case c;
  try {
    c = parse_sym6_case(which);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const auto res = sym6_isobaric_types(c);
  io::Json r = header(g, "gl2 sym6-type");
  r["result"] = io::to_json(res);
  return {r, res.certified() ? 0 : 1};
}

Outcome cmd_satake_check(const GlobalOptions& g, const SatakeArgs& a) {
  if (a.small.empty() || a.big.empty()) throw UsageError("--small and --big are required");
  if (!(a.tol > 0)) throw UsageError("--tol must be positive");
  const auto small = sym_power_records(load_satake(a.small), a.sym_small);
  const auto big = sym_power_records(load_satake(a.big), a.sym_big);
  const auto res = check_containment(small, big, a.tol);
  io::Json r = header(g, "satake check");
  r["tol"] = a.tol;
  r["sym_small"] = a.sym_small;
  r["sym_big"] = a.sym_big;
  r["min_overlap"] = a.min_overlap;
  r["result"] = io::to_json(res);
  if (res.primes.size() < a.min_overlap) {
    r["error"] = "only " + std::to_string(res.primes.size()) +
                 " common primes, fewer than --min-overlap " + std::to_string(a.min_overlap);
    return {r, 1};
  }
  return {r, res.verdict ? 0 : 1};
}

}  // namespace eigc::cli
