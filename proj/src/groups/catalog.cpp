#include "eigcontain/groups/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include "eigcontain/errors.hpp"
#include "eigcontain/simd/kernels.hpp"

namespace eigc {
namespace {

GroupElement cycle_on(std::uint32_t n, const std::vector<std::uint32_t>& cycle) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  return GroupElement::permutation(std::move(images));
}

CarrierSpec points(std::uint32_t n) { return {Carrier::permutation, n, nullptr}; }

std::shared_ptr<const FiniteField> field_for(std::uint32_t q) {
  if (q < 2 || prime_power(q).p == 0) {
    throw DomainError(std::to_string(q) + " is not a prime power");
  }
  return FiniteField::get(q);
}

GroupElement mat(const std::shared_ptr<const FiniteField>& f, FiniteField::Elem a,
                 FiniteField::Elem b, FiniteField::Elem c, FiniteField::Elem d) {
  return GroupElement::matrix(f, 2, {a, b, c, d});
}

std::vector<GroupElement> elementary_generators(const std::shared_ptr<const FiniteField>& f) {
  std::vector<GroupElement> gens;
  for (std::uint32_t i = 0; i < f->degree(); ++i) {
    const auto t = f->exp(i);
    gens.push_back(mat(f, 1, t, 0, 1));
    gens.push_back(mat(f, 1, 0, t, 1));
  }
  return gens;
}

std::uint32_t parse_count(const std::string& s, const std::string& descriptor) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      s.size() > 9) {
    throw DomainError("bad number in group descriptor '" + descriptor + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(s));
}

}  // namespace

GroupPtr make_symmetric(std::uint32_t n, std::size_t max_order) {
  std::vector<GroupElement> gens;
  if (n >= 2) {
    gens.push_back(cycle_on(n, {0, 1}));
    std::vector<std::uint32_t> all(n);
    std::iota(all.begin(), all.end(), 0u);
    if (n >= 3) gens.push_back(cycle_on(n, all));
  }
  return GroupModel::closure(gens, {GroupKind::symmetric, n, "sym:" + std::to_string(n)},
                             max_order, points(n));
}

GroupPtr make_alternating(std::uint32_t n, std::size_t max_order) {
  std::vector<GroupElement> gens;
  for (std::uint32_t k = 2; k < n; ++k) gens.push_back(cycle_on(n, {0, 1, k}));
  return GroupModel::closure(gens, {GroupKind::alternating, n, "alt:" + std::to_string(n)},
                             max_order, points(n));
}

GroupPtr make_cyclic(std::uint32_t n, std::size_t max_order) {
  if (n == 0) throw DomainError("cyclic group needs n >= 1");
  std::vector<GroupElement> gens;
  if (n >= 2) {
    std::vector<std::uint32_t> all(n);
    std::iota(all.begin(), all.end(), 0u);
    gens.push_back(cycle_on(n, all));
  }
  return GroupModel::closure(gens, {GroupKind::cyclic, n, "cyclic:" + std::to_string(n)},
                             max_order, points(n));
}

GroupPtr make_dihedral(std::uint32_t n, std::size_t max_order) {
  if (n < 3) throw DomainError("dihedral group needs n >= 3");
  std::vector<std::uint32_t> rot(n), refl(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  std::vector<GroupElement> gens{GroupElement::permutation(rot), GroupElement::permutation(refl)};
  return GroupModel::closure(gens, {GroupKind::dihedral, n, "dih:" + std::to_string(n)},
                             max_order, points(n));
}

GroupPtr make_quaternion() {
  // Units +-1, +-i, +-j, +-k encoded as 2*u + s with u in {1,i,j,k}, s the sign bit.
  static const int kUnitMul[4][4][2] = {
      // {unit, sign} for u * v
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  auto left = [&](std::uint32_t a) {
    std::vector<std::uint32_t> images(8);
    for (std::uint32_t b = 0; b < 8; ++b) {
      const auto& r = kUnitMul[a / 2][b / 2];
      images[b] = 2 * static_cast<std::uint32_t>(r[0]) +
                  ((a % 2) ^ (b % 2) ^ static_cast<std::uint32_t>(r[1]));
    }
    return GroupElement::permutation(std::move(images));
  };
  std::vector<GroupElement> gens{left(2), left(4)};
  return GroupModel::closure(gens, {GroupKind::quaternion, 8, "q8"}, kDefaultMaxGroupOrder);
}

GroupPtr make_gl2(std::uint32_t q, std::size_t max_order) {
  auto f = field_for(q);
  auto gens = elementary_generators(f);
  if (q > 2) gens.push_back(mat(f, f->primitive(), 0, 0, 1));
  return GroupModel::closure(gens, {GroupKind::gl2, q, "gl2:" + std::to_string(q)}, max_order,
                             {Carrier::matrix, 2, f});
}

GroupPtr make_sl2(std::uint32_t q, std::size_t max_order) {
  auto f = field_for(q);
  return GroupModel::closure(elementary_generators(f),
                             {GroupKind::sl2, q, "sl2:" + std::to_string(q)}, max_order,
                             {Carrier::matrix, 2, f});
}

GroupPtr make_pgl2(std::uint32_t q, std::size_t max_order) {
  auto f = field_for(q);
  const std::uint32_t inf = q;
  auto act = [&](FiniteField::Elem a, FiniteField::Elem b, FiniteField::Elem c,
                 FiniteField::Elem d) {
    std::vector<std::uint32_t> images(q + 1);
    for (std::uint32_t z = 0; z <= q; ++z) {
      FiniteField::Elem num, den;
      if (z == inf) {
        num = a;
        den = c;
      } else {
        num = f->add(f->mul(a, z), b);
        den = f->add(f->mul(c, z), d);
      }
      images[z] = den == 0 ? inf : f->div(num, den);
    }
    return GroupElement::permutation(std::move(images));
  };
  std::vector<GroupElement> gens;
  for (std::uint32_t i = 0; i < f->degree(); ++i) {
    const auto t = f->exp(i);
    gens.push_back(act(1, t, 0, 1));
    gens.push_back(act(1, 0, t, 1));
  }
  if (q > 2) gens.push_back(act(f->primitive(), 0, 0, 1));
  return GroupModel::closure(gens, {GroupKind::pgl2, q, "pgl2:" + std::to_string(q)}, max_order,
                             points(q + 1));
}

GroupPtr load_permutation_group(const std::string& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open permutation file '" + path + "'");
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::uint32_t degree = 0;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::uint64_t cur = 0;
    bool in_num = false;
    for (char c : line) {
      if (c >= '0' && c <= '9') {
        cur = cur * 10 + static_cast<std::uint64_t>(c - '0');
        if (cur > 1'000'000) throw ParseError("point number too large", no);
        in_num = true;
      } else {
        if (in_num) degree = std::max<std::uint32_t>(degree, static_cast<std::uint32_t>(cur + 1));
        cur = 0;
        in_num = false;
      }
    }
    if (in_num) degree = std::max<std::uint32_t>(degree, static_cast<std::uint32_t>(cur + 1));
    lines.emplace_back(no, line);
  }
  std::vector<GroupElement> gens;
  for (const auto& [no, text] : lines) {
    try {
      gens.push_back(parse_permutation(text, degree));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), no);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), no);
    }
  }
  return GroupModel::closure(gens, {GroupKind::generic, 0, "perm:" + path}, max_order,
                             points(degree));
}

GroupPtr make_group(const std::string& descriptor, std::size_t max_order) {
  const auto colon = descriptor.find(':');
  const std::string head = descriptor.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : descriptor.substr(colon + 1);
  if (colon == std::string::npos) {
    if (head == "q8") return make_quaternion();
    throw DomainError("unknown group descriptor '" + descriptor + "'");
  }
  if (head == "perm") return load_permutation_group(arg, max_order);
  const std::uint32_t n = parse_count(arg, descriptor);
  if (head == "sym") return make_symmetric(n, max_order);
  if (head == "alt") return make_alternating(n, max_order);
  if (head == "cyclic") return make_cyclic(n, max_order);
  if (head == "dih") return make_dihedral(n, max_order);
  if (head == "gl2") return make_gl2(n, max_order);
  if (head == "sl2") return make_sl2(n, max_order);
  if (head == "pgl2") return make_pgl2(n, max_order);
  throw DomainError("unknown group descriptor '" + descriptor + "'");
}

std::size_t gl2_index(const GroupModel& g, FiniteField::Elem a, FiniteField::Elem b,
                      FiniteField::Elem c, FiniteField::Elem d) {
  const std::uint32_t m[4] = {a, b, c, d};
  return g.index_of(std::span<const std::uint32_t>(m, 4));
}

Gl2Subgroups gl2_subgroups(const GroupModel& g) {
  if (g.origin().kind != GroupKind::gl2) throw DomainError("subgroups need a GL2 model");
  const FiniteField& f = *g.carrier().field;
  const std::uint32_t q = f.order();
  Gl2Subgroups out;
  auto add = [&](std::vector<std::uint32_t>& v, FiniteField::Elem a, FiniteField::Elem b,
                 FiniteField::Elem c, FiniteField::Elem d) {
    const std::size_t i = gl2_index(g, a, b, c, d);
    if (i == simd::npos) throw InternalError("GL2 model is missing a matrix");
    v.push_back(static_cast<std::uint32_t>(i));
  };
  for (FiniteField::Elem x = 1; x < q; ++x) {
    add(out.center, x, 0, 0, x);
    for (FiniteField::Elem y = 1; y < q; ++y) add(out.split_torus, x, 0, 0, y);
  }
  for (FiniteField::Elem t = 0; t < q; ++t) add(out.unipotent, 1, t, 0, 1);

  // x^2 + a x + b irreducible iff it has no root in F_q.
  bool found = false;
  for (FiniteField::Elem a = 0; a < q && !found; ++a) {
    for (FiniteField::Elem b = 0; b < q && !found; ++b) {
      bool root = false;
      for (FiniteField::Elem z = 0; z < q && !root; ++z) {
        root = f.add(f.add(f.mul(z, z), f.mul(a, z)), b) == 0;
      }
      if (!root) {
        out.quad_a = a;
        out.quad_b = b;
        found = true;
      }
    }
  }
  // Companion matrix M = [[0, -b], [1, -a]]; S = {u I + v M : (u, v) != 0}.
  const auto nb = f.neg(out.quad_b), na = f.neg(out.quad_a);
  for (FiniteField::Elem u = 0; u < q; ++u) {
    for (FiniteField::Elem v = 0; v < q; ++v) {
      if (u == 0 && v == 0) continue;
      add(out.nonsplit_torus, u, f.mul(v, nb), v, f.add(u, f.mul(v, na)));
    }
  }
  for (auto* v : {&out.center, &out.split_torus, &out.unipotent, &out.nonsplit_torus}) {
    std::sort(v->begin(), v->end());
  }
  const std::uint32_t target = q * q - 1;
  for (auto s : out.nonsplit_torus) {
    if (g.element_order(s) == target) {
      out.nonsplit_generator = s;
      break;
    }
  }
  return out;
}

}  // namespace eigc
