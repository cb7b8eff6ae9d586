#include "eigcontain/gl2ring/ring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "eigcontain/errors.hpp"

namespace eigc {

GL2RingElem::GL2RingElem(std::int64_t n) {
  if (n != 0) terms_[RingKey{}] = n;
}

GL2RingElem GL2RingElem::basis(const RingKey& k, std::int64_t coeff) {
  if (k.a < 0 || k.a2 < 0) throw DomainError("symmetric power index must be nonnegative");
  GL2RingElem e;
  e.add_term(k, coeff);
  return e;
}

GL2RingElem GL2RingElem::twist(Twist t) {
  RingKey k;
  k.twist[static_cast<std::size_t>(t)] = 1;
  return basis(k);
}

void GL2RingElem::add_term(const RingKey& k, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  if (__builtin_add_overflow(it->second, c, &it->second)) {
    throw ResourceLimit("ring coefficient overflow");
  }
  if (it->second == 0) terms_.erase(it);
}

std::int64_t GL2RingElem::dimension() const {
  std::int64_t d = 0;
  for (const auto& [k, c] : terms_) d += c * (k.a + 1) * (k.a2 + 1);
  return d;
}

bool GL2RingElem::is_genuine() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

bool GL2RingElem::is_invertible() const {
  if (terms_.size() != 1) return false;
  const auto& [k, c] = *terms_.begin();
  return c == 1 && k.a == 0 && k.a2 == 0;
}

GL2RingElem GL2RingElem::inverse() const {
  if (!is_invertible()) throw DomainError("only one-dimensional characters are invertible");
  RingKey k = terms_.begin()->first;
  k.b = -k.b;
  k.b2 = -k.b2;
  for (auto& t : k.twist) t = -t;
  return basis(k);
}

GL2RingElem GL2RingElem::operator-() const {
  GL2RingElem out;
  for (const auto& [k, c] : terms_) out.terms_[k] = -c;
  return out;
}

GL2RingElem& GL2RingElem::operator+=(const GL2RingElem& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

GL2RingElem& GL2RingElem::operator-=(const GL2RingElem& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

GL2RingElem operator*(const GL2RingElem& x, const GL2RingElem& y) {
  GL2RingElem out;
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      std::int64_t c;
      if (__builtin_mul_overflow(cx, cy, &c)) throw ResourceLimit("ring coefficient overflow");
      RingKey k;
      for (std::size_t t = 0; t < kTwistCount; ++t) k.twist[t] = kx.twist[t] + ky.twist[t];
      for (std::int32_t i = 0; i <= std::min(kx.a, ky.a); ++i) {
        k.a = kx.a + ky.a - 2 * i;
        k.b = kx.b + ky.b + i;
        for (std::int32_t j = 0; j <= std::min(kx.a2, ky.a2); ++j) {
          k.a2 = kx.a2 + ky.a2 - 2 * j;
          k.b2 = kx.b2 + ky.b2 + j;
          out.add_term(k, c);
        }
      }
    }
  }
  return out;
}

GL2RingElem GL2RingElem::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  GL2RingElem r(1), base = *this;
  while (n) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

namespace {

void append_factor(std::string& s, const std::string& f) {
  if (!s.empty()) s += "*";
  s += f;
}

std::string power(const std::string& sym, std::int32_t e) {
  return e == 1 ? sym : sym + "^" + std::to_string(e);
}

std::string render(const std::map<RingKey, std::int64_t>& terms, bool brackets) {
  if (terms.empty()) return "0";
  static const char* kNames[kTwistCount] = {"x1", "x2", "chi"};
  std::string out;
  bool first = true;
  // Print in a stable order: by degree in pi, then pi', then the rest of the key.
  for (const auto& [k, c] : terms) {
    std::string body;
    for (std::size_t t = 0; t < kTwistCount; ++t) {
      if (k.twist[t] != 0) append_factor(body, power(kNames[t], k.twist[t]));
    }
    if (k.b != 0) append_factor(body, power("w", k.b));
    if (brackets) {
      if (k.a != 0) append_factor(body, "[" + std::to_string(k.a + 1) + "]");
    } else if (k.a == 1) {
      append_factor(body, "pi");
    } else if (k.a > 1) {
      append_factor(body, "Sym[" + std::to_string(k.a) + "](pi)");
    }
    if (k.b2 != 0) append_factor(body, power("w2", k.b2));
    if (k.a2 == 1) {
      append_factor(body, "pi2");
    } else if (k.a2 > 1) {
      append_factor(body, "Sym[" + std::to_string(k.a2) + "](pi2)");
    }
    const std::int64_t mag = c < 0 ? -c : c;
    std::string term;
    if (body.empty()) {
      term = brackets ? (mag == 1 ? "[1]" : std::to_string(mag) + "*[1]") : std::to_string(mag);
    } else {
      term = mag == 1 ? body : std::to_string(mag) + "*" + body;
    }
    if (first) {
      out += c < 0 ? "-" + term : term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string GL2RingElem::str() const { return render(terms_, false); }

std::string GL2RingElem::bracket_str() const { return render(terms_, true); }

std::complex<double> GL2RingElem::evaluate(
    std::complex<double> p1, std::complex<double> p2, std::complex<double> q1,
    std::complex<double> q2, const std::array<std::complex<double>, kTwistCount>& twists) const {
  auto sym = [](std::complex<double> u, std::complex<double> v, std::int32_t a) {
    std::complex<double> s = 0;
    for (std::int32_t j = 0; j <= a; ++j) s += std::pow(u, a - j) * std::pow(v, j);
    return s;
  };
  std::complex<double> total = 0;
  for (const auto& [k, c] : terms_) {
    std::complex<double> v = static_cast<double>(c);
    for (std::size_t t = 0; t < kTwistCount; ++t) v *= std::pow(twists[t], k.twist[t]);
    v *= std::pow(p1 * p2, k.b) * sym(p1, p2, k.a);
    v *= std::pow(q1 * q2, k.b2) * sym(q1, q2, k.a2);
    total += v;
  }
  return total;
}

GL2RingElem su2_specialize(const GL2RingElem& x) {
  GL2RingElem out;
  for (const auto& [k, c] : x.terms()) out += GL2RingElem::basis({k.a, 0, k.a2, 0, {}}, c);
  return out;
}

namespace {

/// Exponents of x1, x2, y1, y2 and the twists.
using Weight = std::array<std::int32_t, 4 + kTwistCount>;

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : w) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

using WeightPoly = std::unordered_map<Weight, std::int64_t, WeightHash>;

Weight add(const Weight& a, const Weight& b) {
  Weight w;
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = a[i] + b[i];
  return w;
}

std::vector<std::pair<Weight, std::int64_t>> weights_of(const GL2RingElem& x) {
  std::map<Weight, std::int64_t> acc;
  for (const auto& [k, c] : x.terms()) {
    for (std::int32_t j = 0; j <= k.a; ++j) {
      for (std::int32_t j2 = 0; j2 <= k.a2; ++j2) {
        Weight w{k.a - j + k.b, j + k.b, k.a2 - j2 + k.b2, j2 + k.b2};
        for (std::size_t t = 0; t < kTwistCount; ++t) w[4 + t] = k.twist[t];
        acc[w] += c;
      }
    }
  }
  return {acc.begin(), acc.end()};
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    if (__builtin_mul_overflow(r, n - k + i, &r)) throw ResourceLimit("binomial overflow");
    r /= i;
  }
  return r;
}

GL2RingElem from_weights(const WeightPoly& poly) {
  // Highest-weight multiplicity by finite differences in each GL2 factor.
  GL2RingElem out;
  auto get = [&](const Weight& w) {
    auto it = poly.find(w);
    return it == poly.end() ? std::int64_t{0} : it->second;
  };
  for (const auto& [w, c] : poly) {
    if (w[0] < w[1] || w[2] < w[3]) continue;
    Weight e = w, f = w, ef = w;
    e[0] += 1;
    e[1] -= 1;
    f[2] += 1;
    f[3] -= 1;
    ef[0] += 1;
    ef[1] -= 1;
    ef[2] += 1;
    ef[3] -= 1;
    const std::int64_t m = c - get(e) - get(f) + get(ef);
    if (m == 0) continue;
    RingKey k{w[0] - w[1], w[1], w[2] - w[3], w[3], {}};
    for (std::size_t t = 0; t < kTwistCount; ++t) k.twist[t] = w[4 + t];
    out += GL2RingElem::basis(k, m);
  }
  return out;
}

GL2RingElem power_op(const GL2RingElem& x, std::uint32_t k, std::size_t bound, bool symmetric) {
  if (!x.is_genuine()) throw NotGenuine("symmetric/exterior powers need a genuine element");
  if (static_cast<std::uint64_t>(x.dimension()) * k > bound) {
    throw ResourceLimit("expansion of degree " + std::to_string(k) + " exceeds the bound");
  }
  // Coefficient of t^k in prod_w (1 - w t)^(-n_w) or prod_w (1 + w t)^(n_w).
  std::vector<WeightPoly> layer(k + 1);
  layer[0][Weight{}] = 1;
  for (const auto& [w, n] : weights_of(x)) {
    std::vector<WeightPoly> next(k + 1);
    for (std::uint32_t have = 0; have <= k; ++have) {
      for (const auto& [mono, c] : layer[have]) {
        Weight cur = mono;
        for (std::uint32_t i = 0; have + i <= k; ++i) {
          const std::int64_t factor = symmetric ? binom(n + i - 1, i) : binom(n, i);
          if (factor == 0) break;
          std::int64_t v;
          if (__builtin_mul_overflow(c, factor, &v)) throw ResourceLimit("coefficient overflow");
          auto& slot = next[have + i][cur];
          if (__builtin_add_overflow(slot, v, &slot)) throw ResourceLimit("coefficient overflow");
          cur = add(cur, w);
        }
      }
    }
    layer = std::move(next);
    std::size_t total = 0;
    for (const auto& l : layer) total += l.size();
    if (total > bound) throw ResourceLimit("weight expansion exceeds the bound");
  }
  return from_weights(layer[k]);
}

}  // namespace

GL2RingElem ring_sym(const GL2RingElem& x, std::uint32_t k, std::size_t bound) {
  return power_op(x, k, bound, true);
}

GL2RingElem ring_ext(const GL2RingElem& x, std::uint32_t k, std::size_t bound) {
  return power_op(x, k, bound, false);
}

}  // namespace eigc
