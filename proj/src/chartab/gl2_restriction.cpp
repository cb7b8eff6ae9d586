#include "eigcontain/chartab/gl2_restriction.hpp"

#include "eigcontain/errors.hpp"
#include "eigcontain/groups/catalog.hpp"

namespace eigc {

namespace {

struct AbelianSubgroup {
  std::vector<std::uint32_t> elements;
  std::vector<std::vector<std::int64_t>> coords;  // per element, exponents against `orders`
  std::vector<std::int64_t> orders;               // cyclic factor orders
};

std::int64_t mod(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

/// Multiplicity of the character h -> prod zeta_{orders[i]}^{chi[i] * coords[i]} in row.
CycNum multiplicity(const ClassFunction& row, const GroupModel& g, const AbelianSubgroup& h,
                    const std::vector<std::int64_t>& chi) {
  std::uint32_t n = 1;
  for (auto o : h.orders) n = static_cast<std::uint32_t>(lcm_u64(n, static_cast<std::uint64_t>(o)));
  // Group the sum by the value of the character: sum_k zeta_n^-k * (sum of row values).
  std::vector<CycNum> bucket(n, CycNum(0));
  for (std::size_t e = 0; e < h.elements.size(); ++e) {
    std::int64_t k = 0;
    for (std::size_t i = 0; i < h.orders.size(); ++i) {
      k += chi[i] * h.coords[e][i] * (n / h.orders[i]);
    }
    bucket[static_cast<std::size_t>(mod(k, n))] += row[g.class_of(h.elements[e])];
  }
  CycNum total(0);
  for (std::uint32_t k = 0; k < n; ++k) {
    if (!bucket[k].is_zero()) total += bucket[k] * CycNum::zeta(n, -static_cast<std::int64_t>(k));
  }
  total *= Rational(1, static_cast<std::int64_t>(h.elements.size()));
  return total;
}

}  // namespace

std::vector<RestrictionCheck> gl2_restriction_facts(const CharacterTable& t) {
  const GroupModel& g = *t.group;
  if (g.origin().kind != GroupKind::gl2 || t.method != "closed-form") {
    throw DomainError("restriction facts need a closed-form GL2 table");
  }
  const FiniteField& f = *g.carrier().field;
  const std::int64_t q = f.order(), p = f.characteristic(), qm1 = q - 1, q2m1 = q * q - 1;
  const std::uint32_t deg = f.degree();
  const Gl2Subgroups sub = gl2_subgroups(g);

  AbelianSubgroup T{{}, {}, {qm1, qm1}};
  for (std::int64_t i = 0; i < qm1; ++i) {
    for (std::int64_t j = 0; j < qm1; ++j) {
      T.elements.push_back(static_cast<std::uint32_t>(gl2_index(g, f.exp(i), 0, 0, f.exp(j))));
      T.coords.push_back({i, j});
    }
  }
  AbelianSubgroup S{{}, {}, {q2m1}};
  std::int64_t m_xi = -1;
  {
    const auto xi = static_cast<std::uint32_t>(gl2_index(g, f.exp(1), 0, 0, f.exp(1)));
    std::uint32_t x = 0;
    for (std::int64_t k = 0; k < q2m1; ++k) {
      S.elements.push_back(x);
      S.coords.push_back({k});
      if (x == xi) m_xi = k;
      x = g.mul(x, sub.nonsplit_generator);
    }
  }
  if (m_xi < 0) throw InternalError("nonsplit torus misses the scalars");
  // ZU ~ Z x F_q^+ ~ C_{q-1} x C_p^deg via the base-p digits of the unipotent entry.
  AbelianSubgroup ZU{{}, {}, {qm1}};
  for (std::uint32_t i = 0; i < deg; ++i) ZU.orders.push_back(p);
  for (std::int64_t i = 0; i < qm1; ++i) {
    for (std::int64_t x = 0; x < q; ++x) {
      const auto z = f.exp(i);
      ZU.elements.push_back(static_cast<std::uint32_t>(
          gl2_index(g, z, f.mul(z, static_cast<FiniteField::Elem>(x)), 0, z)));
      std::vector<std::int64_t> c{i};
      for (std::int64_t v = x, d = 0; d < deg; ++d, v /= p) c.push_back(v % p);
      ZU.coords.push_back(c);
    }
  }

  const auto xi_class = g.class_of(static_cast<std::uint32_t>(gl2_index(g, f.exp(1), 0, 0, f.exp(1))));
  std::vector<RestrictionCheck> out;
  for (std::size_t r = 0; r < t.size(); ++r) {
    const auto& lab = t.labels[r];
    if (lab.family != "C" && lab.family != "P") continue;
    const bool cusp = lab.family == "C";
    const ClassFunction& row = t.irreducibles[r];
    // w(xi) = zeta_{q-1}^w.
    const CycNum w_val = row[xi_class] * CycNum(Rational(1, t.dim(r)));
    std::int64_t w = -1;
    for (std::int64_t a = 0; a < qm1; ++a) {
      if (CycNum::zeta(static_cast<std::uint32_t>(qm1), a) == w_val) w = a;
    }
    if (w < 0) throw InternalError("central character not found for " + t.label(r));

    RestrictionCheck rc;
    rc.row = r;
    rc.label = t.label(r);
    auto fail = [&](const std::string& what, const std::vector<std::int64_t>& chi, const CycNum& got,
                    std::int64_t want) {
      if (!rc.detail.empty()) return;
      std::string c;
      for (auto v : chi) c += (c.empty() ? "" : ",") + std::to_string(v);
      rc.detail = what + " character (" + c + "): multiplicity " + got.str() + ", expected " +
                  std::to_string(want);
    };

    rc.split_torus = true;
    for (std::int64_t c = 0; c < qm1; ++c) {
      for (std::int64_t d = 0; d < qm1; ++d) {
        std::int64_t want = mod(c + d, qm1) == w ? 1 : 0;
        if (!cusp && want && ((c == lab.params[0] && d == lab.params[1]) ||
                              (c == lab.params[1] && d == lab.params[0]))) {
          want = 2;
        }
        const CycNum got = multiplicity(row, g, T, {c, d});
        if (got != CycNum(want)) {
          rc.split_torus = false;
          fail("T", {c, d}, got, want);
        }
      }
    }
    rc.nonsplit_torus = true;
    for (std::int64_t k = 0; k < q2m1; ++k) {
      // theta_k(xi) = zeta_{q^2-1}^{k m_xi} = zeta_{q-1}^{k m_xi / (q+1)}.
      std::int64_t want = mod(k * (m_xi / (q + 1)), qm1) == w ? 1 : 0;
      if (cusp && want && (k == lab.params[0] || k == mod(q * lab.params[0], q2m1))) want = 0;
      const CycNum got = multiplicity(row, g, S, {k});
      if (got != CycNum(want)) {
        rc.nonsplit_torus = false;
        fail("S", {k}, got, want);
      }
    }
    rc.center_unipotent = true;
    std::vector<std::int64_t> chi(1 + deg, 0);
    for (std::int64_t c = 0; c < qm1; ++c) {
      for (std::int64_t v = 0; v < q; ++v) {
        chi[0] = c;
        for (std::int64_t x = v, d = 0; d < deg; ++d, x /= p) chi[1 + d] = x % p;
        std::int64_t want = 0;
        if (c == w) want = v == 0 ? (cusp ? 0 : 2) : 1;
        const CycNum got = multiplicity(row, g, ZU, chi);
        if (got != CycNum(want)) {
          rc.center_unipotent = false;
          fail("ZU", chi, got, want);
        }
      }
    }
    out.push_back(rc);
  }
  return out;
}

}  // namespace eigc
