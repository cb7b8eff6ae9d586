#include "eigcontain/gl2ring/sym6.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "eigcontain/errors.hpp"
#include "eigcontain/gl2ring/expr.hpp"

namespace eigc {

Sym6Case parse_sym6_case(std::string_view name) {
  if (name == "tetrahedral") return Sym6Case::tetrahedral;
  if (name == "octahedral") return Sym6Case::octahedral;
  if (name == "icosahedral") return Sym6Case::icosahedral;
  throw DomainError("unknown case '" + std::string(name) +
                    "' (expected tetrahedral, octahedral or icosahedral)");
}

std::string to_string(Sym6Case c) {
  switch (c) {
    case Sym6Case::tetrahedral: return "tetrahedral";
    case Sym6Case::octahedral: return "octahedral";
    case Sym6Case::icosahedral: return "icosahedral";
  }
  return "?";
}

bool Sym6Result::certified() const {
  return !identities.empty() &&
         std::all_of(identities.begin(), identities.end(), [](const auto& i) { return i.holds; });
}

std::vector<IsobaricType> partitions(int n) {
  std::vector<IsobaricType> out;
  IsobaricType cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

namespace {

struct CaseData {
  std::string hypothesis;
  std::string target;
  std::string known;
  std::string decomposition;
  std::function<bool(const RingKey&)> cuspidal;
  std::vector<std::string> cuspidal_symbols;
  std::vector<CertifiedIdentity> identities;
};

CaseData case_data(Sym6Case c) {
  switch (c) {
    case Sym6Case::tetrahedral:
      return {"Sym[3](pi) = x1*pi + x2*pi",
              "Sym[6](pi)",
              "w^2*Sym[2](pi)",
              "x1^2*Sym[2](pi) + x2^2*Sym[2](pi) + x1*x2*pi*pi",
              [](const RingKey& k) { return k.a2 == 0 && k.a <= 2; },
              {"pi", "Sym[2](pi)"},
              {{"sym2-of-sym3", "Sym[2](Sym[3](pi))", "Sym[6](pi) + w^2*Sym[2](pi)"},
               {"sym2-of-split-sym3", "Sym[2](x1*pi + x2*pi)",
                "x1^2*Sym[2](pi) + x2^2*Sym[2](pi) + x1*x2*pi*pi"},
               {"pi-squared", "pi*pi", "Sym[2](pi) + w"}}};
    case Sym6Case::octahedral:
      return {"Sym[4](pi) = x1*pi + x2*Sym[2](pi)",
              "w*Sym[6](pi)",
              "w^3*Sym[2](pi)",
              "x1^2*Ext[2](pi) + x2^2*Ext[2](Sym[2](pi)) + x1*x2*pi*Sym[2](pi)",
              [](const RingKey& k) { return k.a2 == 0 && k.a <= 3; },
              {"pi", "Sym[2](pi)", "Sym[3](pi)"},
              {{"ext2-of-sym4", "Ext[2](Sym[4](pi))", "w*Sym[6](pi) + w^3*Sym[2](pi)"},
               {"ext2-of-split-sym4", "Ext[2](x1*pi + x2*Sym[2](pi))",
                "x1^2*Ext[2](pi) + x2^2*Ext[2](Sym[2](pi)) + x1*x2*pi*Sym[2](pi)"},
               {"pi-times-sym2", "pi*Sym[2](pi)", "Sym[3](pi) + w*pi"}}};
    case Sym6Case::icosahedral:
      return {"Sym[5](pi) = chi*pi*Sym[2](pi2)",
              "Sym[6](pi)",
              "w*Sym[4](pi)",
              "chi*(w + Sym[2](pi))*Sym[2](pi2)",
              [](const RingKey& k) {
                return (k.a2 == 0 && k.a <= 5) || (k.a == 0 && k.a2 <= 2);
              },
              {"pi", "Sym[2](pi)", "Sym[3](pi)", "Sym[4](pi)", "Sym[5](pi)", "pi2", "Sym[2](pi2)"},
              {{"pi-times-sym5", "pi*Sym[5](pi)", "Sym[6](pi) + w*Sym[4](pi)"},
               {"pi-times-split-sym5", "pi*(chi*pi*Sym[2](pi2))", "chi*pi*pi*Sym[2](pi2)"},
               {"expand-pi-squared", "chi*pi*pi*Sym[2](pi2)",
                "chi*(w + Sym[2](pi))*Sym[2](pi2)"}}};
  }
  throw DomainError("unknown case");
}

std::int64_t key_dim(const RingKey& k) { return std::int64_t{k.a + 1} * (k.a2 + 1); }

}  // namespace

Sym6Result sym6_isobaric_types(Sym6Case c) {
  CaseData d = case_data(c);
  Sym6Result res;
  res.which = c;
  res.hypothesis = d.hypothesis;
  res.target = d.target;
  res.decomposition = d.decomposition;
  res.cuspidal_symbols = d.cuspidal_symbols;
  res.rules = {
      "a twist of a cuspidal symbol is a cuspidal block of the same dimension",
      "isobaric decompositions are unique, so blocks known on one side cancel against "
      "the other side",
      "a product not known to be cuspidal contributes an arbitrary partition of its dimension",
      "the target plus the known blocks equals the decomposition after substituting the "
      "hypothesis"};

  for (auto& id : d.identities) {
    id.holds = verify_identity(id.lhs, id.rhs).equal;
    res.identities.push_back(id);
  }
  // The hypothesis is not a ring identity; its two sides must at least agree in dimension.
  const auto eq = d.hypothesis.find('=');
  const auto hyp_l = evaluate(d.hypothesis.substr(0, eq));
  const auto hyp_r = evaluate(d.hypothesis.substr(eq + 1));
  res.identities.push_back({"hypothesis-dimension", "dim(" + d.hypothesis.substr(0, eq - 1) + ")",
                            "dim(" + d.hypothesis.substr(eq + 2) + ")",
                            hyp_l.dimension() == hyp_r.dimension()});
  if (!res.certified()) {
    for (const auto& id : res.identities) {
      if (!id.holds) throw InternalError("certificate identity '" + id.name + "' failed");
    }
  }

  const GL2RingElem target = evaluate(d.target);
  const GL2RingElem known = evaluate(d.known);
  const GL2RingElem decomposition = evaluate(d.decomposition);
  if (target.dimension() + known.dimension() != decomposition.dimension()) {
    throw InternalError("dimension mismatch in the " + to_string(c) + " decomposition");
  }

  std::multiset<int> known_blocks;
  for (const auto& [k, coeff] : known.terms()) {
    if (!d.cuspidal(k) || coeff < 0) throw InternalError("known block is not cuspidal");
    for (std::int64_t i = 0; i < coeff; ++i) known_blocks.insert(static_cast<int>(key_dim(k)));
  }
  res.known_blocks.push_back({known_blocks.rbegin(), known_blocks.rend()});

  std::vector<int> fixed;
  std::vector<int> free_dims;
  for (const auto& [k, coeff] : decomposition.terms()) {
    if (coeff < 0) throw InternalError("decomposition is virtual");
    for (std::int64_t i = 0; i < coeff; ++i) {
      (d.cuspidal(k) ? fixed : free_dims).push_back(static_cast<int>(key_dim(k)));
    }
  }

  std::vector<std::vector<IsobaricType>> choices;
  for (int dim : free_dims) choices.push_back(partitions(dim));
  std::vector<std::size_t> idx(choices.size(), 0);
  for (;;) {
    std::multiset<int> blocks(fixed.begin(), fixed.end());
    for (std::size_t i = 0; i < choices.size(); ++i) {
      blocks.insert(choices[i][idx[i]].begin(), choices[i][idx[i]].end());
    }
    bool ok = true;
    for (int kb : known_blocks) {
      auto it = blocks.find(kb);
      if (it == blocks.end()) {
        ok = false;
        break;
      }
      blocks.erase(it);
    }
    if (ok) res.types.insert(IsobaricType(blocks.rbegin(), blocks.rend()));
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return res;
}

}  // namespace eigc
