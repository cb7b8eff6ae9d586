#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "eigcontain/gl2ring/ring.hpp"

namespace eigc {

/// Syntax tree of a ring expression.
struct RingExpr {
  enum class Op { integer, pi, pi2, bracket, w, w2, x1, x2, chi, add, sub, neg, mul, pow, sym, ext };
  Op op = Op::integer;
  std::int64_t value = 0;  // integer literal, bracket size, exponent or Sym/Ext degree
  std::vector<std::shared_ptr<const RingExpr>> args;

  bool uses_brackets() const;
};

using RingExprPtr = std::shared_ptr<const RingExpr>;

/// Grammar: sums and differences of products of powers of atoms; atoms are integers,
/// pi, pi2, [n], w, w2, x1, x2, chi, Sym[k](e), Ext[k](e) and parenthesized expressions.
/// Throws ParseError with the column of the offending token.
RingExprPtr parse_ring_expr(std::string_view text);

/// [n] evaluates to Sym^(n-1)(pi).
GL2RingElem evaluate(const RingExpr& e, std::size_t bound = kDefaultExpansionBound);
GL2RingElem evaluate(std::string_view text, std::size_t bound = kDefaultExpansionBound);

struct IdentityReport {
  bool equal = false;
  bool su2 = false;  // compared after SU(2) specialization
  GL2RingElem lhs;
  GL2RingElem rhs;
  GL2RingElem difference;  // lhs - rhs

  std::string lhs_str() const { return su2 ? lhs.bracket_str() : lhs.str(); }
  std::string rhs_str() const { return su2 ? rhs.bracket_str() : rhs.str(); }
  std::string difference_str() const { return su2 ? difference.bracket_str() : difference.str(); }
};

/// Compares canonical forms; expressions containing [n] are compared in SU(2).
IdentityReport verify_identity(std::string_view lhs, std::string_view rhs);

}  // namespace eigc
