#include "eigcontain/chartab/character_table.hpp"

#include <algorithm>
#include <numeric>

#include "eigcontain/errors.hpp"
#include "eigcontain/groups/catalog.hpp"
#include "eigcontain/simd/kernels.hpp"

namespace eigc {

std::string IrrLabel::str(std::size_t index) const {
  if (family.empty()) return "#" + std::to_string(index);
  std::string s = family + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(params[i]);
  }
  return s + ")";
}

std::size_t CharacterTable::find(const std::string& name) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (label(i) == name) return i;
  }
  return simd::npos;
}

ClassFunction trivial_character(const GroupPtr& g) { return ClassFunction::constant(g, CycNum(1)); }

ClassFunction regular_character(const GroupPtr& g) {
  std::vector<CycNum> v(g->class_count(), CycNum(0));
  v[0] = CycNum(static_cast<std::int64_t>(g->order()));
  return ClassFunction(g, std::move(v));
}

CharacterTable character_table(const GroupPtr& g, const std::string& method,
                               const TableOptions& opts) {
  if (method == "closed-form") return character_table_gl2(g);
  if (method == "generic") return character_table_generic(g, opts);
  if (method != "auto") throw DomainError("unknown table method '" + method + "'");
  if (g->origin().kind == GroupKind::gl2) return character_table_gl2(g);
  return character_table_generic(g, opts);
}

TableCheck validate_table(const CharacterTable& t) {
  const GroupModel& g = *t.group;
  const std::size_t r = g.class_count();
  if (t.irreducibles.size() != r) {
    return {false, "row count " + std::to_string(t.irreducibles.size()) + " != class count " +
                       std::to_string(r)};
  }
  std::int64_t sum_sq = 0;
  for (std::size_t i = 0; i < r; ++i) {
    auto d = t.irreducibles[i].degree();
    if (!d || *d <= 0) return {false, "row " + std::to_string(i) + " has no positive degree"};
    sum_sq += *d * *d;
  }
  if (sum_sq != static_cast<std::int64_t>(g.order())) {
    return {false, "sum of squared degrees " + std::to_string(sum_sq) + " != |G|"};
  }
  std::vector<ClassFunction> conj;
  for (const auto& x : t.irreducibles) conj.push_back(x.conj());
  const std::uint32_t e = g.exponent();
  const CycNum zero = CycNum(0).promote(e);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      CycNum s = zero;
      for (std::size_t c = 0; c < r; ++c) {
        const auto& x = t.irreducibles[i][c];
        const auto& y = conj[j][c];
        if (x.is_zero() || y.is_zero()) continue;
        CycNum v = x * y;
        v *= Rational(g.cls(c).size);
        s += v;
      }
      const CycNum want = i == j ? CycNum(static_cast<std::int64_t>(g.order())) : CycNum(0);
      if (!(s == want)) {
        return {false, "rows " + std::to_string(i) + " and " + std::to_string(j) +
                           " are not orthonormal"};
      }
    }
  }
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t c2 = c; c2 < r; ++c2) {
      CycNum s = zero;
      for (std::size_t i = 0; i < r; ++i) {
        const auto& x = t.irreducibles[i][c];
        const auto& y = conj[i][c2];
        if (!x.is_zero() && !y.is_zero()) s += x * y;
      }
      const CycNum want =
          c == c2 ? CycNum(Rational(static_cast<std::int64_t>(g.order()), g.cls(c).size))
                  : CycNum(0);
      if (!(s == want)) {
        return {false, "columns " + std::to_string(c) + " and " + std::to_string(c2) +
                           " fail the second orthogonality relation"};
      }
    }
  }
  return {};
}

bool tables_agree(const CharacterTable& a, const CharacterTable& b) {
  if (a.group != b.group || a.size() != b.size()) return false;
  auto sorted = [](const CharacterTable& t) {
    std::vector<const ClassFunction*> v;
    for (const auto& x : t.irreducibles) v.push_back(&x);
    std::sort(v.begin(), v.end(), [](const ClassFunction* x, const ClassFunction* y) {
      return compare_values(*x, *y) < 0;
    });
    return v;
  };
  const auto sa = sorted(a), sb = sorted(b);
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (!(*sa[i] == *sb[i])) return false;
  }
  return true;
}

namespace {

enum class Gl2ClassType { central, unipotent, split, elliptic };

struct Gl2ClassInfo {
  Gl2ClassType type;
  std::int64_t x = 0;  // log of the eigenvalue(s) in F_q^x
  std::int64_t y = 0;
  std::int64_t s = 0;  // log base the torus generator for elliptic classes
};

}  // namespace

CharacterTable character_table_gl2(const GroupPtr& gp) {
  const GroupModel& g = *gp;
  if (g.origin().kind != GroupKind::gl2) {
    throw DomainError("closed-form tables exist only for GL2 models");
  }
  const FiniteField& f = *g.carrier().field;
  const std::int64_t q = f.order();
  const std::int64_t qm1 = q - 1, q2m1 = q * q - 1;
  const Gl2Subgroups sub = gl2_subgroups(g);
  const std::uint32_t gamma = sub.nonsplit_generator;

  // Logs of the torus generator's powers by (trace, det).
  std::vector<std::int64_t> torus_log(static_cast<std::size_t>(q * q), -1);
  std::int64_t m_xi = -1;
  {
    std::uint32_t x = 0;
    for (std::int64_t k = 0; k < q2m1; ++k) {
      auto d = g.data(x);
      const auto tr = f.add(d[0], d[3]);
      const auto det = f.sub(f.mul(d[0], d[3]), f.mul(d[1], d[2]));
      auto& slot = torus_log[static_cast<std::size_t>(tr * q + det)];
      if (slot < 0) slot = k;
      if (d[1] == 0 && d[2] == 0 && d[0] == d[3] && d[0] == f.primitive()) m_xi = k;
      x = g.mul(x, gamma);
    }
  }
  if (m_xi < 0 || m_xi % (q + 1) != 0) throw InternalError("torus does not contain the scalars");

  const std::size_t r = g.class_count();
  std::vector<Gl2ClassInfo> info(r);
  for (std::size_t c = 0; c < r; ++c) {
    auto d = g.data(g.cls(c).rep);
    const auto tr = f.add(d[0], d[3]);
    const auto det = f.sub(f.mul(d[0], d[3]), f.mul(d[1], d[2]));
    std::vector<FiniteField::Elem> rts;
    for (FiniteField::Elem z = 1; z < static_cast<FiniteField::Elem>(q); ++z) {
      if (f.add(f.sub(f.mul(z, z), f.mul(tr, z)), det) == 0) rts.push_back(z);
    }
    Gl2ClassInfo ci{};
    if (rts.size() == 2) {
      ci.type = Gl2ClassType::split;
      ci.x = f.log(rts[0]);
      ci.y = f.log(rts[1]);
    } else if (rts.size() == 1) {
      const bool scalar = d[1] == 0 && d[2] == 0;
      ci.type = scalar ? Gl2ClassType::central : Gl2ClassType::unipotent;
      ci.x = f.log(rts[0]);
    } else {
      ci.type = Gl2ClassType::elliptic;
      ci.s = torus_log[static_cast<std::size_t>(tr * q + det)];
      ci.x = f.log(det);
      if (ci.s < 0) throw InternalError("elliptic class missing from the torus");
    }
    info[c] = ci;
  }

  const std::uint32_t e = g.exponent();
  const auto zq = [&](std::int64_t k) { return CycNum::zeta(static_cast<std::uint32_t>(qm1), k).promote(e); };
  const auto zs = [&](std::int64_t k) { return CycNum::zeta(static_cast<std::uint32_t>(q2m1), k).promote(e); };
  auto mod = [](std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; };

  std::vector<ClassFunction> rows;
  std::vector<IrrLabel> labels;
  std::vector<std::int64_t> central;
  auto push = [&](IrrLabel l, std::int64_t omega, auto value) {
    std::vector<CycNum> v(r);
    for (std::size_t c = 0; c < r; ++c) v[c] = value(info[c]);
    rows.emplace_back(gp, std::move(v));
    labels.push_back(std::move(l));
    central.push_back(mod(omega, qm1));
  };

  for (std::int64_t a = 0; a < qm1; ++a) {
    push({"U", {a}}, 2 * a, [&](const Gl2ClassInfo& ci) -> CycNum {
      switch (ci.type) {
        case Gl2ClassType::split: return zq(a * (ci.x + ci.y));
        case Gl2ClassType::elliptic: return zq(a * ci.x);
        default: return zq(2 * a * ci.x);
      }
    });
    push({"St", {a}}, 2 * a, [&](const Gl2ClassInfo& ci) -> CycNum {
      switch (ci.type) {
        case Gl2ClassType::central: return CycNum(q) * zq(2 * a * ci.x);
        case Gl2ClassType::unipotent: return CycNum(0);
        case Gl2ClassType::split: return zq(a * (ci.x + ci.y));
        case Gl2ClassType::elliptic: return -zq(a * ci.x);
      }
      return CycNum(0);
    });
  }
  for (std::int64_t a = 0; a < qm1; ++a) {
    for (std::int64_t b = a + 1; b < qm1; ++b) {
      push({"P", {a, b}}, a + b, [&](const Gl2ClassInfo& ci) -> CycNum {
        switch (ci.type) {
          case Gl2ClassType::central: return CycNum(q + 1) * zq((a + b) * ci.x);
          case Gl2ClassType::unipotent: return zq((a + b) * ci.x);
          case Gl2ClassType::split: return zq(a * ci.x + b * ci.y) + zq(a * ci.y + b * ci.x);
          case Gl2ClassType::elliptic: return CycNum(0);
        }
        return CycNum(0);
      });
    }
  }
  for (std::int64_t j = 0; j < q2m1; ++j) {
    if (j % (q + 1) == 0 || mod(q * j, q2m1) < j) continue;
    push({"C", {j}}, j * (m_xi / (q + 1)), [&](const Gl2ClassInfo& ci) -> CycNum {
      switch (ci.type) {
        case Gl2ClassType::central: return CycNum(q - 1) * zs(j * m_xi * ci.x);
        case Gl2ClassType::unipotent: return -zs(j * m_xi * ci.x);
        case Gl2ClassType::split: return CycNum(0);
        case Gl2ClassType::elliptic: return -(zs(j * ci.s) + zs(j * q * ci.s));
      }
      return CycNum(0);
    });
  }

  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (*rows[x].degree() != *rows[y].degree()) return *rows[x].degree() < *rows[y].degree();
    return compare_values(rows[x], rows[y]) < 0;
  });
  CharacterTable t;
  t.group = gp;
  t.method = "closed-form";
  for (auto i : order) {
    t.irreducibles.push_back(rows[i]);
    t.labels.push_back(labels[i]);
    t.central_character.push_back(central[i]);
  }
  return t;
}

CharacterTable character_table_gl2_closed_form(std::uint32_t q) {
  return character_table_gl2(make_gl2(q));
}

}  // namespace eigc
