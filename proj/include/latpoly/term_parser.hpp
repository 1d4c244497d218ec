#ifndef LATPOLY_TERM_PARSER_HPP
#define LATPOLY_TERM_PARSER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "latpoly/error.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/term.hpp"

namespace latpoly {

namespace detail {

// Recursive descent over
//   term := or ;  or := and ("|" and)* ;  and := atom ("&" atom)* ;
//   atom := VAR | CONST | "med(" term "," term "," term ")" | "(" term ")" ;
class TermParser {
 public:
  TermParser(std::string_view text, const FiniteLattice& L, std::size_t arity)
      : text_(text), L_(L), arity_(arity) {}

  TermNode parse() {
    auto t = parse_or();
    skip_ws();
    if (pos_ < text_.size()) fail({"'|'", "'&'", "end of input"});
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r'))
      ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail({std::string("'") + ch + "'"});
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw SyntaxError(pos_ + 1, std::move(expected), found);
  }

  TermNode parse_or() {
    std::vector<TermNode> parts;
    parts.push_back(parse_and());
    while (accept('|')) parts.push_back(parse_and());
    return join(std::move(parts));
  }

  TermNode parse_and() {
    std::vector<TermNode> parts;
    parts.push_back(parse_atom());
    while (accept('&')) parts.push_back(parse_atom());
    return meet(std::move(parts));
  }

  TermNode parse_atom() {
    static const std::vector<std::string> kAtom{"variable", "constant", "'med('", "'('"};
    skip_ws();
    if (pos_ >= text_.size()) fail(kAtom);
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      auto t = parse_or();
      expect(')');
      return t;
    }
    if (ch == '\'') return parse_constant();
    if (text_.substr(pos_, 3) == "med") {
      pos_ += 3;
      expect('(');
      auto a = parse_or();
      expect(',');
      auto b = parse_or();
      expect(',');
      auto c = parse_or();
      expect(')');
      return med(std::move(a), std::move(b), std::move(c));
    }
    if (ch == 'x') return parse_var();
    fail(kAtom);
  }

  TermNode parse_var() {
    const std::size_t start = pos_++;
    if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') fail({"variable index"});
    if (text_[pos_] == '0') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] >= '0' && text_[pos_ + 1] <= '9') fail({"variable index"});
      throw VarOutOfRange("variable x0 at column " + std::to_string(start + 1) + " is outside [1, " +
                          std::to_string(arity_) + "]");
    }
    std::size_t k = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      if (k > 100'000'000) fail({"shorter variable index"});
      k = k * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
    }
    if (k > arity_)
      throw VarOutOfRange("variable x" + std::to_string(k) + " at column " + std::to_string(start + 1) +
                          " is outside [1, " + std::to_string(arity_) + "]");
    return var(k);
  }

  TermNode parse_constant() {
    const std::size_t start = pos_++;
    const auto close = text_.find('\'', pos_);
    if (close == std::string_view::npos) {
      pos_ = text_.size();
      fail({"closing quote"});
    }
    const auto name = text_.substr(pos_, close - pos_);
    pos_ = close + 1;
    auto e = L_.find(name);
    if (!e)
      throw UnknownElement("unknown element '" + std::string(name) + "' at column " + std::to_string(start + 1) +
                           " (lattice " + L_.name() + ")");
    return constant(*e);
  }

  std::string_view text_;
  const FiniteLattice& L_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a lattice polynomial expression over `arity` variables.
inline Term parse_term(std::string_view text, const FiniteLattice& L, std::size_t arity) {
  return Term(detail::TermParser(text, L, arity).parse(), arity);
}

}  // namespace latpoly

#endif  // LATPOLY_TERM_PARSER_HPP
