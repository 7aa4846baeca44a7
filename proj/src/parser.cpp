// Recursive-descent parser for domain descriptions and queries.

#include <sstream>

#include "lexer.hpp"
#include "pec/syntax.hpp"
#include "syntax_internal.hpp"

namespace pec {

namespace {

std::string format_where(SourceLocation where, const std::string& message) {
  std::ostringstream os;
  os << where.line << ":" << where.column << ": " << message;
  return os.str();
}

}  // namespace

ParseError::ParseError(SourceLocation where, const std::string& message)
    : std::runtime_error(format_where(where, message)),
      where_(where),
      detail_(message) {}

namespace detail {
namespace {

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  RawDomain domain() {
    RawDomain out;
    while (!at(Tok::kEnd)) statement(out);
    return out;
  }

  /// iform := atom | "!" iform | iform op iform | "(" iform ")"
  /// where atom := "[" formula "]" "@" NAT
  BasicFormula<std::pair<RawFormula, Instant>> query() {
    auto f = implication<std::pair<RawFormula, Instant>>(
        [this] { return stamped_atom(); });
    expect(Tok::kEnd);
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_keyword(std::string_view word) const {
    return peek().kind == Tok::kKeyword && peek().text == word;
  }
  Token take() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::kEnd
                            ? std::string(describe(Tok::kEnd))
                            : "'" + t.text + "'";
    throw ParseError(t.where, "expected " + expected + ", found " + found);
  }
  Token expect(Tok kind) {
    if (!at(kind)) fail(std::string(describe(kind)));
    return take();
  }
  void expect_keyword(std::string_view word) {
    if (!at_keyword(word)) fail("'" + std::string(word) + "'");
    take();
  }
  Instant natural() {
    Token t = expect(Tok::kNumber);
    if (t.text.find('.') != std::string::npos) {
      throw ParseError(t.where, "expected a natural number, found '" + t.text + "'");
    }
    try {
      unsigned long v = std::stoul(t.text);
      if (v > 1'000'000) throw std::out_of_range("instant");
      return static_cast<Instant>(v);
    } catch (const std::exception&) {
      throw ParseError(t.where, "number '" + t.text + "' is too large");
    }
  }
  Probability probability() {
    Token first = expect(Tok::kNumber);
    std::string text = first.text;
    if (at(Tok::kSlash)) {
      take();
      Token den = expect(Tok::kNumber);
      text += "/" + den.text;
    }
    auto p = parse_probability(text);
    if (!p) throw ParseError(first.where, "malformed probability '" + text + "'");
    return *p;
  }

  void statement(RawDomain& out) {
    SourceLocation where = peek().where;
    if (at_keyword("fluent")) {
      take();
      RawValueDecl decl{expect(Tok::kIdent).text, {}, where};
      expect_keyword("takes-values");
      expect(Tok::kLBrace);
      decl.values.push_back(expect(Tok::kIdent).text);
      while (at(Tok::kComma)) {
        take();
        decl.values.push_back(expect(Tok::kIdent).text);
      }
      expect(Tok::kRBrace);
      out.fluents.push_back(std::move(decl));
    } else if (at_keyword("action")) {
      take();
      out.actions.push_back({expect(Tok::kIdent).text, where});
    } else if (at_keyword("maxinst")) {
      take();
      out.maxinst.push_back({natural(), where});
    } else if (at_keyword("initially-one-of")) {
      take();
      out.initial.push_back({outcomes(), where});
    } else if (at(Tok::kIdent) && peek(1).kind == Tok::kKeyword &&
               peek(1).text == "performed-at") {
      RawOccurrence occ;
      occ.where = where;
      occ.action = take().text;
      take();
      occ.instant = natural();
      if (at_keyword("with-prob")) {
        take();
        occ.prob = probability();
      }
      out.occurrences.push_back(std::move(occ));
    } else if (at(Tok::kIdent) || at(Tok::kBang) || at(Tok::kLParen)) {
      RawFormula body = formula();
      expect_keyword("causes-one-of");
      out.causal.push_back({std::move(body), outcomes(), where});
    } else {
      fail("a statement");
    }
  }

  std::vector<RawOutcome> outcomes() {
    std::vector<RawOutcome> out;
    expect(Tok::kLBrace);
    out.push_back(outcome());
    while (at(Tok::kComma)) {
      take();
      out.push_back(outcome());
    }
    expect(Tok::kRBrace);
    return out;
  }

  RawOutcome outcome() {
    RawOutcome out;
    out.where = expect(Tok::kLParen).where;
    expect(Tok::kLBrace);
    if (!at(Tok::kRBrace)) {
      out.effect.push_back(literal());
      while (at(Tok::kComma)) {
        take();
        out.effect.push_back(literal());
      }
    }
    expect(Tok::kRBrace);
    expect(Tok::kComma);
    out.weight = probability();
    expect(Tok::kRParen);
    return out;
  }

  /// lit := ID "=" ID | ID | "!" ID
  RawLiteral literal() {
    RawLiteral lit;
    lit.where = peek().where;
    if (at(Tok::kBang)) {
      take();
      lit.subject = expect(Tok::kIdent).text;
      lit.negated = true;
      return lit;
    }
    lit.subject = expect(Tok::kIdent).text;
    if (at(Tok::kEquals)) {
      take();
      lit.value = expect(Tok::kIdent).text;
    }
    return lit;
  }

  RawFormula formula() {
    return implication<RawLiteral>([this] { return formula_atom(); });
  }

  RawFormula formula_atom() {
    if (at(Tok::kLParen)) {
      take();
      RawFormula inner = formula();
      expect(Tok::kRParen);
      return inner;
    }
    if (at(Tok::kBang)) {
      // `!F` is the shorthand literal F=false; `!F=V` and `!(...)` negate.
      if (peek(1).kind == Tok::kIdent && peek(2).kind != Tok::kEquals) {
        return RawFormula::atom(literal());
      }
      take();
      return RawFormula::negation(formula_atom());
    }
    if (at(Tok::kIdent)) return RawFormula::atom(literal());
    fail("a literal or '('");
  }

  using Stamped = std::pair<RawFormula, Instant>;

  BasicFormula<Stamped> stamped_atom() {
    if (at(Tok::kLParen)) {
      take();
      auto inner = implication<Stamped>([this] { return stamped_atom(); });
      expect(Tok::kRParen);
      return inner;
    }
    if (at(Tok::kBang)) {
      take();
      return BasicFormula<Stamped>::negation(stamped_atom());
    }
    if (at(Tok::kLBracket)) {
      take();
      RawFormula theta = formula();
      expect(Tok::kRBracket);
      expect(Tok::kAt);
      Instant instant = natural();
      return BasicFormula<Stamped>::atom({std::move(theta), instant});
    }
    fail("'[' or '(' or '!'");
  }

  // Precedence climbing: '->' (right assoc) < '|' < '&' < unary.
  template <typename Atom, typename Primary>
  BasicFormula<Atom> implication(Primary primary) {
    auto lhs = disjunction<Atom>(primary);
    if (at(Tok::kArrow)) {
      take();
      return BasicFormula<Atom>::implication(std::move(lhs),
                                             implication<Atom>(primary));
    }
    return lhs;
  }
  template <typename Atom, typename Primary>
  BasicFormula<Atom> disjunction(Primary primary) {
    auto lhs = conjunction<Atom>(primary);
    while (at(Tok::kPipe)) {
      take();
      lhs = BasicFormula<Atom>::disjunction(std::move(lhs),
                                            conjunction<Atom>(primary));
    }
    return lhs;
  }
  template <typename Atom, typename Primary>
  BasicFormula<Atom> conjunction(Primary primary) {
    auto lhs = primary();
    while (at(Tok::kAmp)) {
      take();
      lhs = BasicFormula<Atom>::conjunction(std::move(lhs), primary());
    }
    return lhs;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace
}  // namespace detail

RawDomain parse_raw(std::string_view text) {
  detail::Parser parser(detail::tokenize(text));
  return parser.domain();
}

DomainDescription parse_domain(std::string_view text) {
  return build(parse_raw(text));
}

IFormula parse_query(std::string_view text, const Signature& sig) {
  detail::Parser parser(detail::tokenize(text));
  auto stamped = parser.query();

  // Expand [theta]@I by distributing I over theta's literals.
  auto expand = [&](const std::pair<RawFormula, Instant>& atom) -> IFormula {
    const auto& [theta, instant] = atom;
    if (instant > sig.maxinst()) {
      throw RangeError("instant " + std::to_string(instant) +
                       " exceeds maxinst " + std::to_string(sig.maxinst()));
    }
    Formula resolved = theta.transform([&](const RawLiteral& raw) {
      Diagnostic error;
      auto lit = detail::resolve_literal(sig, raw, &error);
      if (!lit) throw ParseError(error.where, error.message);
      return *lit;
    });
    return at_instant(resolved, instant);
  };

  // Substitute each stamped atom by its expansion.
  struct Rebuild {
    decltype(expand)& expand_fn;
    IFormula operator()(const BasicFormula<std::pair<RawFormula, Instant>>& f) {
      switch (f.op()) {
        case Connective::kAtom:
          return expand_fn(f.atom());
        case Connective::kNot:
          return IFormula::negation((*this)(f.lhs()));
        default:
          return IFormula::binary(f.op(), (*this)(f.lhs()), (*this)(f.rhs()));
      }
    }
  };
  return Rebuild{expand}(stamped);
}

}  // namespace pec
