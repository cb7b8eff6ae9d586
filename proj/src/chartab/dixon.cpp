#include <algorithm>
#include <numeric>

#include "eigcontain/chartab/character_table.hpp"
#include "eigcontain/errors.hpp"
#include "eigcontain/exact/finite_field.hpp"
#include "eigcontain/simd/kernels.hpp"

namespace eigc {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using Row = std::vector<u32>;

struct ModP {
  u32 p;
  u32 mul(u32 a, u32 b) const { return static_cast<u32>(u64{a} * b % p); }
  u32 add(u32 a, u32 b) const { return a + b >= p ? a + b - p : a + b; }
  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p - b; }
  u32 neg(u32 a) const { return a == 0 ? 0 : p - a; }
  u32 pow(u32 a, u64 e) const {
    u32 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u32 inv(u32 a) const { return pow(a, p - 2); }
  u32 of(u64 v) const { return static_cast<u32>(v % p); }
};

/// Row-reduced basis of the span of rows, pivots increasing.
struct Space {
  std::vector<Row> rows;
  std::vector<std::size_t> pivots;
};

Space rref(std::vector<Row> rows, const ModP& f) {
  Space s;
  if (rows.empty()) return s;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const u32 inv = f.inv(rows[r][col]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      simd::mod_axpy(rows[i], rows[r], f.neg(rows[i][col]), f.p);
    }
    s.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  s.rows = std::move(rows);
  return s;
}

std::vector<u32> char_poly(std::vector<Row> h, const ModP& f) {
  const std::size_t n = h.size();
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    const u32 tinv = f.inv(h[m][m - 1]);
    for (i = m + 1; i < n; ++i) {
      const u32 u = f.mul(h[i][m - 1], tinv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(u, h[m][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][i]));
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}, 1-based.
  std::vector<std::vector<u32>> ps(n + 1);
  ps[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u32> pm(m + 1, 0);
    const auto& prev = ps[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      pm[k + 1] = f.add(pm[k + 1], prev[k]);
      pm[k] = f.sub(pm[k], f.mul(h[m - 1][m - 1], prev[k]));
    }
    u32 t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = f.mul(t, h[i][i - 1]);
      const u32 c = f.mul(t, h[i - 1][m - 1]);
      if (c != 0) {
        for (std::size_t k = 0; k < ps[i - 1].size(); ++k) {
          pm[k] = f.sub(pm[k], f.mul(c, ps[i - 1][k]));
        }
      }
    }
    ps[m] = std::move(pm);
  }
  return ps[n];
}

/// Distinct roots of a polynomial that splits over F_p.
std::vector<u32> roots(std::vector<u32> poly, const ModP& f) {
  std::vector<u32> out;
  std::size_t deg = poly.size() - 1;
  for (u32 x = 0; x < f.p && deg > 0; ++x) {
    bool first = true;
    for (;;) {
      // Synthetic division by (t - x).
      std::vector<u32> q(deg, 0);
      u32 carry = 0;
      for (std::size_t k = deg + 1; k-- > 0;) {
        const u32 v = f.add(poly[k], f.mul(carry, x));
        if (k > 0) q[k - 1] = v;
        carry = v;
      }
      if (carry != 0) break;
      if (first) out.push_back(x);
      first = false;
      poly = std::move(q);
      --deg;
      if (deg == 0) break;
    }
  }
  if (deg != 0) throw InternalError("class matrix characteristic polynomial does not split mod p");
  return out;
}

u32 find_prime(u64 exponent, u64 order, u32 max_prime) {
  for (u64 p = exponent + 1;; p += exponent) {
    if (p > max_prime) {
      throw ResourceLimit("no prime below " + std::to_string(max_prime) +
                          " fits the group exponent " + std::to_string(exponent));
    }
    if (p * p > 4 * order && is_prime(p)) return static_cast<u32>(p);
  }
}

u32 primitive_root_mod(u32 p) {
  const auto factors = prime_factors(p - 1);
  const ModP f{p};
  for (u32 g = 2;; ++g) {
    bool ok = true;
    for (auto r : factors) ok = ok && f.pow(g, (p - 1) / r) != 1;
    if (ok) return g;
  }
}

}  // namespace

CharacterTable character_table_generic(const GroupPtr& gp, const TableOptions& opts) {
  const GroupModel& g = *gp;
  const std::size_t r = g.class_count();
  if (r > opts.max_classes) {
    throw ResourceLimit("class count " + std::to_string(r) + " exceeds the bound " +
                        std::to_string(opts.max_classes));
  }
  const u32 e = g.exponent();
  const u32 p = find_prime(e, g.order(), opts.max_prime);
  const ModP f{p};
  const u32 rho = p == 2 ? 1 : primitive_root_mod(p);

  // a[(j * r + l) * r + k] = #{x in C_j : x^-1 z_k in C_l}
  std::vector<u32> a(r * r * r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    const u32 z = g.cls(k).rep;
    for (std::size_t j = 0; j < r; ++j) {
      for (u32 x : g.cls(j).members) {
        const u32 l = g.class_of(g.mul(g.inverse(x), z));
        ++a[(j * r + l) * r + k];
      }
    }
  }

  std::vector<Space> spaces;
  {
    std::vector<Row> id(r, Row(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(rref(std::move(id), f));
  }
  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.rows.size() == 1; })) {
      break;
    }
    std::vector<Space> next;
    for (auto& sp : spaces) {
      const std::size_t d = sp.rows.size();
      if (d == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      // Restricted action in coordinates read off at the pivots.
      std::vector<Row> m(d, Row(d, 0));
      for (std::size_t i = 0; i < d; ++i) {
        const Row& b = sp.rows[i];
        for (std::size_t t = 0; t < d; ++t) {
          const std::size_t l = sp.pivots[t];
          u64 acc = 0;
          for (std::size_t k = 0; k < r; ++k) {
            acc += u64{a[(j * r + l) * r + k]} * b[k] % p;
          }
          m[t][i] = f.of(acc);
        }
      }
      const auto lambdas = roots(char_poly(m, f), f);
      if (lambdas.size() == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      for (u32 lam : lambdas) {
        auto shifted = m;
        for (std::size_t t = 0; t < d; ++t) shifted[t][t] = f.sub(shifted[t][t], lam);
        const Space red = rref(shifted, f);
        std::vector<bool> is_pivot(d, false);
        for (auto c : red.pivots) is_pivot[c] = true;
        std::vector<Row> basis;
        for (std::size_t free = 0; free < d; ++free) {
          if (is_pivot[free]) continue;
          Row coord(d, 0);
          coord[free] = 1;
          for (std::size_t i = 0; i < red.rows.size(); ++i) {
            coord[red.pivots[i]] = f.neg(red.rows[i][free]);
          }
          Row v(r, 0);
          for (std::size_t i = 0; i < d; ++i) {
            if (coord[i] != 0) simd::mod_axpy(v, sp.rows[i], coord[i], p);
          }
          basis.push_back(std::move(v));
        }
        next.push_back(rref(std::move(basis), f));
      }
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) {
    std::string dims;
    for (const auto& s : spaces) dims += " " + std::to_string(s.rows.size());
    throw InternalError("eigenspace separation failed for " + g.descriptor() + " mod " +
                        std::to_string(p) + "; subspace dimensions:" + dims);
  }

  const u64 n = g.order();
  std::vector<ClassFunction> rows;
  for (const auto& sp : spaces) {
    const Row& w = sp.rows[0];
    if (w[0] != 1) throw InternalError("eigenvector has no identity component");
    u32 s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      const u32 kk = g.inverse_class(k);
      s = f.add(s, f.mul(f.mul(w[k], w[kk]), f.inv(f.of(g.cls(k).size))));
    }
    const u32 d2 = f.mul(f.of(n), f.inv(s));
    u32 d = 0;
    for (u32 c = 1; u64{c} * c <= n; ++c) {
      if (f.mul(c, c) == d2) {
        d = c;
        break;
      }
    }
    if (d == 0) throw InternalError("no degree solves d^2 = |G|/S mod " + std::to_string(p));
    Row chi(r);
    for (std::size_t k = 0; k < r; ++k) chi[k] = f.mul(f.mul(d, w[k]), f.inv(f.of(g.cls(k).size)));

    std::vector<CycNum> values(r);
    std::vector<std::int64_t> counts(e);
    for (std::size_t c = 0; c < r; ++c) {
      const u32 mo = g.cls(c).rep_order;
      const u32 z = f.pow(rho, (p - 1) / mo);
      const u32 zinv = f.inv(z);
      const u32 minv = f.inv(f.of(mo));
      std::fill(counts.begin(), counts.end(), 0);
      for (u32 sidx = 0; sidx < mo; ++sidx) {
        const u32 step = f.pow(zinv, sidx);
        u32 acc = 0, zz = 1;
        for (u32 t = 0; t < mo; ++t) {
          acc = f.add(acc, f.mul(chi[g.power_map(c, t)], zz));
          zz = f.mul(zz, step);
        }
        const u32 mu = f.mul(acc, minv);
        if (mu > d) {
          throw InternalError("eigenvalue multiplicity out of range while lifting mod " +
                              std::to_string(p));
        }
        counts[std::size_t{sidx} * (e / mo)] += mu;
      }
      values[c] = CycNum::from_root_counts(e, counts);
    }
    rows.emplace_back(gp, std::move(values));
  }
  std::sort(rows.begin(), rows.end(), [](const ClassFunction& x, const ClassFunction& y) {
    if (*x.degree() != *y.degree()) return *x.degree() < *y.degree();
    return compare_values(x, y) < 0;
  });

  CharacterTable t;
  t.group = gp;
  t.irreducibles = std::move(rows);
  t.labels.assign(r, IrrLabel{});
  t.method = "generic";
  t.dixon_prime = p;
  t.primitive_root = rho;
  const TableCheck check = validate_table(t);
  if (!check.ok) throw InternalError("generic character table failed validation: " + check.message);
  return t;
}

}  // namespace eigc
