#include "eigcontain/gl2ring/expr.hpp"

#include <cctype>

#include "eigcontain/errors.hpp"

namespace eigc {

bool RingExpr::uses_brackets() const {
  if (op == Op::bracket) return true;
  for (const auto& a : args) {
    if (a->uses_brackets()) return true;
  }
  return false;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RingExprPtr parse() {
    auto e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static RingExprPtr node(RingExpr::Op op, std::int64_t v, std::vector<RingExprPtr> args = {}) {
    auto e = std::make_shared<RingExpr>();
    e->op = op;
    e->value = v;
    e->args = std::move(args);
    return e;
  }

  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 12) fail("integer literal too large");
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }

  RingExprPtr sum() {
    auto e = product();
    for (;;) {
      if (accept('+')) {
        e = node(RingExpr::Op::add, 0, {e, product()});
      } else if (accept('-')) {
        e = node(RingExpr::Op::sub, 0, {e, product()});
      } else {
        return e;
      }
    }
  }

  RingExprPtr product() {
    auto e = unary();
    while (accept('*')) e = node(RingExpr::Op::mul, 0, {e, unary()});
    return e;
  }

  RingExprPtr unary() {
    if (accept('-')) return node(RingExpr::Op::neg, 0, {unary()});
    auto e = atom();
    if (accept('^')) {
      const bool negative = accept('-');
      const std::int64_t n = integer();
      e = node(RingExpr::Op::pow, negative ? -n : n, {e});
    }
    return e;
  }

  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  RingExprPtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return node(RingExpr::Op::integer, integer());
    if (accept('(')) {
      auto e = sum();
      expect(')');
      return e;
    }
    if (accept('[')) {
      const std::int64_t n = integer();
      if (n < 1) fail("bracket size must be positive");
      expect(']');
      return node(RingExpr::Op::bracket, n);
    }
    const std::size_t start = pos_;
    const std::string w = word();
    if (w == "pi") return node(RingExpr::Op::pi, 0);
    if (w == "pi2") return node(RingExpr::Op::pi2, 0);
    if (w == "w") return node(RingExpr::Op::w, 0);
    if (w == "w2") return node(RingExpr::Op::w2, 0);
    if (w == "x1") return node(RingExpr::Op::x1, 0);
    if (w == "x2") return node(RingExpr::Op::x2, 0);
    if (w == "chi") return node(RingExpr::Op::chi, 0);
    if (w == "Sym" || w == "Ext") {
      expect('[');
      const std::int64_t k = integer();
      expect(']');
      expect('(');
      auto inner = sum();
      expect(')');
      return node(w == "Sym" ? RingExpr::Op::sym : RingExpr::Op::ext, k, {inner});
    }
    pos_ = start;
    fail(w.empty() ? "unexpected '" + std::string(1, c) + "'" : "unknown symbol '" + w + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RingExprPtr parse_ring_expr(std::string_view text) { return Parser(text).parse(); }

GL2RingElem evaluate(const RingExpr& e, std::size_t bound) {
  using Op = RingExpr::Op;
  switch (e.op) {
    case Op::integer: return GL2RingElem(e.value);
    case Op::pi: return GL2RingElem::pi();
    case Op::pi2: return GL2RingElem::pi2();
    case Op::bracket:
      return GL2RingElem::basis({static_cast<std::int32_t>(e.value - 1), 0, 0, 0, {}});
    case Op::w: return GL2RingElem::omega();
    case Op::w2: return GL2RingElem::omega2();
    case Op::x1: return GL2RingElem::twist(Twist::x1);
    case Op::x2: return GL2RingElem::twist(Twist::x2);
    case Op::chi: return GL2RingElem::twist(Twist::chi);
    case Op::add: return evaluate(*e.args[0], bound) + evaluate(*e.args[1], bound);
    case Op::sub: return evaluate(*e.args[0], bound) - evaluate(*e.args[1], bound);
    case Op::neg: return -evaluate(*e.args[0], bound);
    case Op::mul: return evaluate(*e.args[0], bound) * evaluate(*e.args[1], bound);
    case Op::pow: return evaluate(*e.args[0], bound).pow(e.value);
    case Op::sym:
      return ring_sym(evaluate(*e.args[0], bound), static_cast<std::uint32_t>(e.value), bound);
    case Op::ext:
      return ring_ext(evaluate(*e.args[0], bound), static_cast<std::uint32_t>(e.value), bound);
  }
  throw InternalError("unknown expression node");
}

GL2RingElem evaluate(std::string_view text, std::size_t bound) {
  return evaluate(*parse_ring_expr(text), bound);
}

IdentityReport verify_identity(std::string_view lhs, std::string_view rhs) {
  const auto l = parse_ring_expr(lhs);
  const auto r = parse_ring_expr(rhs);
  IdentityReport rep;
  rep.su2 = l->uses_brackets() || r->uses_brackets();
  rep.lhs = evaluate(*l);
  rep.rhs = evaluate(*r);
  if (rep.su2) {
    rep.lhs = su2_specialize(rep.lhs);
    rep.rhs = su2_specialize(rep.rhs);
  }
  rep.difference = rep.lhs - rep.rhs;
  rep.equal = rep.difference.is_zero();
  return rep;
}

}  // namespace eigc
