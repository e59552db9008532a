#include "gspec/formula_parser.hpp"

#include "gspec/errors.hpp"

#include <cctype>
#include <limits>

namespace gspec {

namespace {

class Parser {
 public:
  Parser(std::string_view text, FormulaBuilder& b) : s_(text), b_(b) {}

  NodeId parse() {
    const NodeId f = implication();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_space();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) {
      fail(pos_ < s_.size() ? "expected '" + std::string(tok) + "'" : "expected '" + std::string(tok) + "' before end of input");
    }
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  // Peeks an identifier at the cursor without consuming it.
  std::string_view peek_ident() {
    skip_space();
    std::size_t end = pos_;
    if (end < s_.size() && std::islower(static_cast<unsigned char>(s_[end]))) {
      while (end < s_.size() && ident_char(s_[end])) ++end;
    }
    return s_.substr(pos_, end - pos_);
  }

  VarId variable() {
    const auto id = peek_ident();
    if (id.empty() || id == "exists" || id == "forall" || id == "true" || id == "false") {
      fail("expected a variable");
    }
    pos_ += id.size();
    return b_.variable(std::string(id));
  }

  std::uint32_t count() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > std::numeric_limits<std::uint32_t>::max()) fail("count too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a count");
    return static_cast<std::uint32_t>(v);
  }

  NodeId implication() {
    const NodeId lhs = disjunction();
    if (accept("->")) return b_.implies(lhs, implication());
    return lhs;
  }

  NodeId disjunction() {
    std::vector<NodeId> parts{conjunction()};
    while (accept("|")) parts.push_back(conjunction());
    return parts.size() == 1 ? parts[0] : b_.disjunction(std::move(parts));
  }

  NodeId conjunction() {
    std::vector<NodeId> parts{unary()};
    while (accept("&")) parts.push_back(unary());
    return parts.size() == 1 ? parts[0] : b_.conjunction(std::move(parts));
  }

  NodeId unary() {
    if (accept("!")) return b_.negate(unary());
    const auto word = peek_ident();
    if (word == "forall") {
      pos_ += word.size();
      const VarId v = variable();
      expect(".");
      return b_.forall(v, implication());
    }
    if (word == "exists") {
      pos_ += word.size();
      if (accept(">=")) {
        const auto r = count();
        const VarId v = variable();
        expect(".");
        return b_.count_at_least(r, v, implication());
      }
      if (accept("=")) {
        const auto r = count();
        const VarId v = variable();
        expect(".");
        return b_.count_exact(r, v, implication());
      }
      const VarId v = variable();
      expect(".");
      return b_.exists(v, implication());
    }
    return primary();
  }

  NodeId primary() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept("(")) {
      const NodeId f = implication();
      expect(")");
      return f;
    }
    const auto word = peek_ident();
    if (word == "true") {
      pos_ += word.size();
      return b_.top();
    }
    if (word == "false") {
      pos_ += word.size();
      return b_.bottom();
    }
    if (s_[pos_] == 'E' && (pos_ + 1 >= s_.size() || !ident_char(s_[pos_ + 1]) || s_[pos_ + 1] == '(')) {
      ++pos_;
      expect("(");
      const VarId a = variable();
      expect(",");
      const VarId c = variable();
      expect(")");
      return b_.edge(a, c);
    }
    if (word.empty()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    const VarId a = variable();
    expect("=");
    return b_.eq(a, variable());
  }

  std::string_view s_;
  FormulaBuilder& b_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, std::size_t node_budget) {
  FormulaBuilder builder(node_budget);
  Parser p(text, builder);
  return builder.formula(p.parse());
}

}  // namespace gspec
