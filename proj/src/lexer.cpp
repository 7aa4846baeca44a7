#include "lexer.hpp"

#include <array>
#include <cctype>

namespace pec::detail {

namespace {

constexpr std::array<std::string_view, 8> kKeywords = {
    "fluent",        "action",           "maxinst",      "takes-values",
    "causes-one-of", "initially-one-of", "performed-at", "with-prob",
};

bool is_keyword(std::string_view word) {
  for (auto k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

std::string_view describe(Tok kind) {
  switch (kind) {
    case Tok::kIdent: return "identifier";
    case Tok::kNumber: return "number";
    case Tok::kKeyword: return "keyword";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kComma: return "','";
    case Tok::kEquals: return "'='";
    case Tok::kBang: return "'!'";
    case Tok::kAmp: return "'&'";
    case Tok::kPipe: return "'|'";
    case Tok::kArrow: return "'->'";
    case Tok::kSlash: return "'/'";
    case Tok::kAt: return "'@'";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };

  while (i < text.size()) {
    char c = text[i];
    SourceLocation here{line, column};
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (is_alpha(c)) {
      std::size_t j = i + 1;
      while (j < text.size()) {
        char d = text[j];
        if (is_alpha(d) || is_digit(d) || d == '_') {
          ++j;
        } else if (d == '-' && j + 1 < text.size() && is_alpha(text[j + 1])) {
          ++j;
        } else {
          break;
        }
      }
      std::string word(text.substr(i, j - i));
      Tok kind = Tok::kIdent;
      if (is_keyword(word)) {
        kind = Tok::kKeyword;
      } else if (word.find('-') != std::string::npos) {
        throw ParseError(here, "unknown keyword '" + word + "'");
      }
      out.push_back({kind, std::move(word), here});
      advance(j - i);
      continue;
    }
    if (is_digit(c)) {
      std::size_t j = i;
      while (j < text.size() && is_digit(text[j])) ++j;
      if (j + 1 < text.size() && text[j] == '.' && is_digit(text[j + 1])) {
        ++j;
        while (j < text.size() && is_digit(text[j])) ++j;
      }
      out.push_back({Tok::kNumber, std::string(text.substr(i, j - i)), here});
      advance(j - i);
      continue;
    }
    Tok kind;
    std::size_t width = 1;
    switch (c) {
      case '{': kind = Tok::kLBrace; break;
      case '}': kind = Tok::kRBrace; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case '[': kind = Tok::kLBracket; break;
      case ']': kind = Tok::kRBracket; break;
      case ',': kind = Tok::kComma; break;
      case '=': kind = Tok::kEquals; break;
      case '!': kind = Tok::kBang; break;
      case '&': kind = Tok::kAmp; break;
      case '|': kind = Tok::kPipe; break;
      case '/': kind = Tok::kSlash; break;
      case '@': kind = Tok::kAt; break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          kind = Tok::kArrow;
          width = 2;
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(here, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(text.substr(i, width)), here});
    advance(width);
  }
  out.push_back({Tok::kEnd, "", SourceLocation{line, column}});
  return out;
}

}  // namespace pec::detail
