#include "eigcontain/lambda/lambda.hpp"

#include <algorithm>
#include <numeric>

#include "eigcontain/errors.hpp"

namespace eigc {
namespace {

template <class Op>
ClassFunction pointwise(const ClassFunction& a, const ClassFunction& b, Op op) {
  require_same_group(a, b);
  std::vector<CycNum> v(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) v[c] = op(a[c], b[c]);
  return ClassFunction(a.group_ptr(), std::move(v));
}

std::int64_t mod(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

}  // namespace

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b) {
  return pointwise(a, b, [](const CycNum& x, const CycNum& y) { return x + y; });
}

ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b) {
  return pointwise(a, b, [](const CycNum& x, const CycNum& y) { return x - y; });
}

ClassFunction cf_tensor(const ClassFunction& a, const ClassFunction& b) {
  return pointwise(a, b, [](const CycNum& x, const CycNum& y) { return x * y; });
}

ClassFunction cf_scale(const ClassFunction& a, const Rational& s) {
  std::vector<CycNum> v(a.values());
  for (auto& x : v) x *= s;
  return ClassFunction(a.group_ptr(), std::move(v));
}

ClassFunction adams(const ClassFunction& chi, std::int64_t k) {
  const GroupModel& g = chi.group();
  std::vector<CycNum> v(chi.size());
  for (std::size_t c = 0; c < chi.size(); ++c) v[c] = chi[g.power_map(c, k)];
  return ClassFunction(chi.group_ptr(), std::move(v));
}

namespace {

ClassFunction newton(const ClassFunction& chi, std::uint32_t k, bool alternating) {
  std::vector<ClassFunction> psi;
  std::vector<ClassFunction> pw{ClassFunction::constant(chi.group_ptr(), CycNum(1))};
  for (std::uint32_t i = 1; i <= k; ++i) psi.push_back(adams(chi, i));
  for (std::uint32_t n = 1; n <= k; ++n) {
    ClassFunction acc = ClassFunction::zero(chi.group_ptr());
    for (std::uint32_t i = 1; i <= n; ++i) {
      const ClassFunction term = cf_tensor(pw[n - i], psi[i - 1]);
      acc = (alternating && i % 2 == 0) ? cf_sub(acc, term) : cf_add(acc, term);
    }
    pw.push_back(cf_scale(acc, Rational(1, n)));
  }
  return pw[k];
}

}  // namespace

ClassFunction exterior_power(const ClassFunction& chi, std::uint32_t k) {
  return newton(chi, k, true);
}

ClassFunction symmetric_power(const ClassFunction& chi, std::uint32_t k) {
  return newton(chi, k, false);
}

ClassFunction determinant(const ClassFunction& chi) {
  const auto d = chi.degree();
  if (!d || *d < 0) throw NotGenuine("determinant needs a nonnegative integer degree");
  return exterior_power(chi, static_cast<std::uint32_t>(*d));
}

std::int64_t EigenMultiset::total() const {
  return std::accumulate(mults.begin(), mults.end(), std::int64_t{0});
}

CycNum EigenMultiset::sum() const {
  std::vector<std::int64_t> counts(mults.begin(), mults.end());
  return CycNum::from_root_counts(order, counts);
}

CycNum EigenMultiset::product() const {
  std::int64_t k = 0;
  for (std::uint32_t j = 0; j < order; ++j) k = mod(k + mults[j] % order * j, order);
  return CycNum::zeta(order, k);
}

std::int64_t EigenMultiset::multiplicity(std::uint32_t n, std::int64_t k) const {
  // zeta_n^k = zeta_m^j iff k m / n is an integer congruent to j.
  const std::int64_t num = mod(k, n) * order;
  if (num % n != 0) return 0;
  return mults[static_cast<std::size_t>(num / n)];
}

std::vector<std::pair<std::uint32_t, std::int64_t>> EigenMultiset::entries() const {
  std::vector<std::pair<std::uint32_t, std::int64_t>> out;
  for (std::uint32_t j = 0; j < order; ++j) {
    if (mults[j] != 0) out.emplace_back(j, mults[j]);
  }
  return out;
}

EigenMultiset eigen_multiset(const ClassFunction& chi, std::size_t c, bool verify) {
  const GroupModel& g = chi.group();
  const std::uint32_t m = g.cls(c).rep_order;
  const std::uint32_t e = g.exponent();
  const std::uint32_t step = e / m;
  const CyclotomicField& field = CyclotomicField::get(e);
  const std::size_t phi = field.degree();

  // Values along the cyclic group <g>, as integer coefficient vectors when possible.
  std::vector<std::vector<std::int32_t>> ints(m);
  bool integral = true;
  for (std::uint32_t t = 0; t < m && integral; ++t) {
    integral = chi[g.power_map(c, t)].small_integer_coeffs(ints[t], std::int64_t{1} << 30);
  }

  EigenMultiset out;
  out.order = m;
  out.mults.assign(m, 0);
  for (std::uint32_t s = 0; s < m; ++s) {
    // sum_t chi(g^t) zeta_e^{-s t step}, accumulated in Q[x]/(x^e - 1).
    std::optional<Rational> value;
    if (integral) {
      std::vector<std::int64_t> buf(e, 0);
      bool ok = true;
      for (std::uint32_t t = 0; t < m && ok; ++t) {
        const std::int64_t shift = mod(-static_cast<std::int64_t>(s) * t * step, e);
        for (std::size_t i = 0; i < phi; ++i) {
          if (ints[t][i] != 0) buf[static_cast<std::size_t>((i + shift) % e)] += ints[t][i];
        }
      }
      ok = field.reduce_checked(buf);
      if (ok) {
        bool constant = true;
        for (std::size_t i = 1; i < buf.size(); ++i) constant = constant && buf[i] == 0;
        if (!constant) throw NotGenuine("class function is not a character of <g>");
        value = Rational(buf[0]);
      }
    }
    if (!value) {
      std::vector<Rational> buf(e, Rational(0));
      for (std::uint32_t t = 0; t < m; ++t) {
        const std::int64_t shift = mod(-static_cast<std::int64_t>(s) * t * step, e);
        const auto coeffs = chi[g.power_map(c, t)].coeffs();
        for (std::size_t i = 0; i < phi; ++i) {
          if (!coeffs[i].is_zero()) buf[static_cast<std::size_t>((i + shift) % e)] += coeffs[i];
        }
      }
      field.reduce(buf);
      for (std::size_t i = 1; i < buf.size(); ++i) {
        if (!buf[i].is_zero()) throw NotGenuine("class function is not a character of <g>");
      }
      value = buf[0];
    }
    const Rational mu = *value / Rational(m);
    if (!mu.is_integer() || mu.sign() < 0 || !mu.is_small()) {
      throw NotGenuine("eigenvalue multiplicity " + mu.str() + " at class " + std::to_string(c) +
                       " is not a nonnegative integer");
    }
    out.mults[s] = mu.small_num();
  }
  if (verify) {
    const auto d = chi.degree();
    if (!d || out.total() != *d) throw NotGenuine("eigenvalue count differs from the degree");
    if (!(out.sum() == chi[c])) throw InternalError("eigenvalues do not sum to the character value");
  }
  return out;
}

std::vector<std::pair<std::size_t, std::int64_t>> decompose(const ClassFunction& chi,
                                                            const CharacterTable& table) {
  if (chi.group_ptr() != table.group) throw GroupMismatch();
  std::vector<std::pair<std::size_t, std::int64_t>> out;
  ClassFunction rebuilt = ClassFunction::zero(chi.group_ptr());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const CycNum ip = char_inner(chi, table.irreducibles[i]);
    const auto r = ip.to_rational();
    if (!r || !r->is_integer() || !r->is_small()) {
      throw DomainError("multiplicity of " + table.label(i) + " is not an integer: " + ip.str());
    }
    if (r->is_zero()) continue;
    out.emplace_back(i, r->small_num());
    rebuilt = cf_add(rebuilt, cf_scale(table.irreducibles[i], *r));
  }
  if (!(rebuilt == chi)) throw InternalError("decomposition does not reproduce the class function");
  return out;
}

bool is_subrepresentation(const ClassFunction& a, const ClassFunction& b,
                          const CharacterTable& table) {
  const auto da = decompose(a, table), db = decompose(b, table);
  for (const auto& [i, m] : da) {
    auto it = std::find_if(db.begin(), db.end(), [&](const auto& p) { return p.first == i; });
    if (it == db.end() || it->second < m) return false;
  }
  return true;
}

}  // namespace eigc
