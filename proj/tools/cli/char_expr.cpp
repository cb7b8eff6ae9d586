#include "char_expr.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "eigcontain/lambda/lambda.hpp"
#include "usage.hpp"

namespace eigc::cli {

namespace {

class CharParser {
 public:
  CharParser(std::string_view s, const CharacterTable& t) : s_(s), t_(t) {}

  ClassFunction parse() {
    auto v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing text");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw UsageError("character expression '" + std::string(s_) + "': " + msg + " at column " +
                     std::to_string(pos_ + 1));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string token() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '#' ||
            s_[pos_] == ':' || s_[pos_] == '_' || s_[pos_] == '-')) {
      ++pos_;
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  static bool starts_with(const std::string& s, const char* prefix) {
    return s.rfind(prefix, 0) == 0;
  }

  std::uint32_t degree_suffix(const std::string& tok, std::size_t skip_chars) {
    const std::string digits = tok.substr(skip_chars);
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); })) {
      fail("bad degree in '" + tok + "'");
    }
    return static_cast<std::uint32_t>(std::stoul(digits));
  }

  ClassFunction by_dimension(const std::string& tok) {
    std::vector<std::string> parts;
    std::size_t a = 0;
    for (std::size_t b; (b = tok.find(':', a)) != std::string::npos; a = b + 1) {
      parts.push_back(tok.substr(a, b - a));
    }
    parts.push_back(tok.substr(a));
    if (parts.size() < 2 || parts.size() > 3) fail("expected dim:D or dim:D:i");
    for (std::size_t i = 1; i < parts.size(); ++i) {
      if (parts[i].empty() || !std::all_of(parts[i].begin(), parts[i].end(),
                                           [](char c) { return std::isdigit(c); })) {
        fail("bad number in '" + tok + "'");
      }
    }
    const std::int64_t d = std::stoll(parts[1]);
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (t_.dim(i) == d) rows.push_back(i);
    }
    if (rows.empty()) fail("no irreducible of dimension " + parts[1]);
    if (parts.size() == 2) {
      if (rows.size() > 1) {
        std::string names;
        for (auto r : rows) names += " " + t_.label(r);
        fail("dimension " + parts[1] + " is ambiguous (rows" + names + "); use dim:D:i");
      }
      return t_.irreducibles[rows[0]];
    }
    const std::size_t which = std::stoul(parts[2]);
    if (which >= rows.size()) fail("only " + std::to_string(rows.size()) + " rows of dimension " + parts[1]);
    return t_.irreducibles[rows[which]];
  }

  ClassFunction expr() {
    const std::size_t start = pos_;
    const std::string tok = token();
    if (tok.empty()) fail("expected a label or function");
    skip();
    const bool call = pos_ < s_.size() && s_[pos_] == '(';
    if (call) {
      auto unary = [&](auto&& f) {
        expect('(');
        auto v = expr();
        expect(')');
        return f(v);
      };
      auto binary = [&](auto&& f) {
        expect('(');
        auto a = expr();
        expect(',');
        auto b = expr();
        expect(')');
        return f(a, b);
      };
      if (starts_with(tok, "sym:")) {
        const auto k = degree_suffix(tok, 4);
        return unary([&](const ClassFunction& v) { return symmetric_power(v, k); });
      }
      if (starts_with(tok, "ext:")) {
        const auto k = degree_suffix(tok, 4);
        return unary([&](const ClassFunction& v) { return exterior_power(v, k); });
      }
      if (starts_with(tok, "adams:")) {
        const auto k = degree_suffix(tok, 6);
        return unary([&](const ClassFunction& v) { return adams(v, k); });
      }
      if (tok == "det") return unary([](const ClassFunction& v) { return determinant(v); });
      if (tok == "tensor") return binary(cf_tensor);
      if (tok == "sum") return binary(cf_add);
      if (tok == "diff") return binary(cf_sub);
      // A parameterized row label such as P(0,1).
      const std::size_t close = s_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced parenthesis");
      std::string label(s_.substr(start, close + 1 - start));
      label.erase(std::remove_if(label.begin(), label.end(),
                                 [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                  label.end());
      const std::size_t row = t_.find(label);
      if (row == static_cast<std::size_t>(-1)) fail("unknown label '" + label + "'");
      pos_ = close + 1;
      return t_.irreducibles[row];
    }
    if (tok == "triv") return trivial_character(t_.group);
    if (tok == "reg") return regular_character(t_.group);
    if (starts_with(tok, "dim:")) return by_dimension(tok);
    const std::size_t row = t_.find(tok);
    if (row == static_cast<std::size_t>(-1)) fail("unknown label '" + tok + "'");
    return t_.irreducibles[row];
  }

  std::string_view s_;
  const CharacterTable& t_;
  std::size_t pos_ = 0;
};

}  // namespace

ClassFunction parse_char_expr(std::string_view text, const CharacterTable& table) {
  return CharParser(text, table).parse();
}

}  // namespace eigc::cli
