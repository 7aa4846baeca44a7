// Tokenizer shared by the domain and query parsers.

#ifndef PEC_SRC_LEXER_HPP_
#define PEC_SRC_LEXER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "pec/syntax.hpp"

namespace pec::detail {

enum class Tok {
  kIdent,
  kNumber,   // digits, optionally with one '.'
  kKeyword,  // fluent, action, maxinst, takes-values, ...
  kLBrace,
  kRBrace,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kComma,
  kEquals,
  kBang,
  kAmp,
  kPipe,
  kArrow,
  kSlash,
  kAt,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  SourceLocation where;
};

std::string_view describe(Tok kind);

/// Throws ParseError on characters outside the grammar.
std::vector<Token> tokenize(std::string_view text);

}  // namespace pec::detail

#endif  // PEC_SRC_LEXER_HPP_
