// Textual `.pec` domain descriptions: parsing, validation and rendering.

#ifndef PEC_SYNTAX_HPP_
#define PEC_SYNTAX_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pec/core.hpp"

namespace pec {

struct SourceLocation {
  int line = 1;
  int column = 1;
  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

/// Lexical or grammatical error; parsing stops at the first one.
class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLocation where, const std::string& message);
  SourceLocation where() const { return where_; }
  const std::string& detail() const { return detail_; }

 private:
  SourceLocation where_;
  std::string detail_;
};

/// Which well-formedness rule a diagnostic violates.
enum class Violation {
  kMultipleCausalEntailment,  // condition (i)
  kMissingInitial,            // condition (ii)
  kMultipleInitial,           // condition (ii)
  kDuplicateValueDecl,        // condition (iii)
  kMissingValueDecl,          // condition (iii)
  kDuplicateOccurrence,       // condition (iv)
  kMaxinst,
  kUnknownSymbol,
  kUnknownValue,
  kDuplicateValue,
  kSymbolClash,
  kWeightRange,
  kWeightSum,
  kNonTotalInitial,
  kDuplicateEffect,
  kBodyWithoutAction,
  kOccurrenceInstant,
  kNotAnAction,
};

/// Short tag such as "condition (ii)" or "weight-sum".
std::string_view violation_tag(Violation v);

struct Diagnostic {
  Violation kind;
  SourceLocation where;
  std::string message;
};

/// Collected validation failures; thrown by parse_domain.
class InvalidDomain : public std::runtime_error {
 public:
  explicit InvalidDomain(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// ---------------------------------------------------------------------------
// Raw parse tree: names as written, with source locations.

struct RawLiteral {
  std::string subject;
  std::optional<std::string> value;  // nullopt for `F` / `!F` shorthand
  bool negated = false;              // `!F` shorthand
  SourceLocation where;
  friend bool operator==(const RawLiteral&, const RawLiteral&) = default;
};

using RawFormula = BasicFormula<RawLiteral>;

struct RawOutcome {
  std::vector<RawLiteral> effect;
  Probability weight;
  SourceLocation where;
};

struct RawValueDecl {
  std::string fluent;
  std::vector<std::string> values;
  SourceLocation where;
};

struct RawActionDecl {
  std::string action;
  SourceLocation where;
};

struct RawCausal {
  RawFormula body;
  std::vector<RawOutcome> head;
  SourceLocation where;
};

struct RawInitial {
  std::vector<RawOutcome> head;
  SourceLocation where;
};

struct RawOccurrence {
  std::string action;
  Instant instant = 0;
  Probability prob = 1;
  SourceLocation where;
};

struct RawMaxinst {
  Instant value = 0;
  SourceLocation where;
};

struct RawDomain {
  std::vector<RawValueDecl> fluents;
  std::vector<RawActionDecl> actions;
  std::vector<RawMaxinst> maxinst;
  std::vector<RawInitial> initial;
  std::vector<RawCausal> causal;
  std::vector<RawOccurrence> occurrences;
};

// ---------------------------------------------------------------------------
// Validated domain descriptions.

struct ValueProposition {
  SymbolId fluent = 0;
  std::vector<ValueId> values;
  friend bool operator==(const ValueProposition&,
                         const ValueProposition&) = default;
};

struct CausalProposition {
  Formula body;
  std::vector<Outcome> head;
  friend bool operator==(const CausalProposition&,
                         const CausalProposition&) = default;
};

struct InitialProposition {
  std::vector<Outcome> head;
  friend bool operator==(const InitialProposition&,
                         const InitialProposition&) = default;
};

struct OccurrenceProposition {
  SymbolId action = 0;
  Instant instant = 0;
  Probability prob = 1;
  friend bool operator==(const OccurrenceProposition&,
                         const OccurrenceProposition&) = default;
};

struct HoldsProposition {
  IFormula query;
  Probability prob;
};

struct DomainDescription {
  SignaturePtr signature;
  std::vector<ValueProposition> vprops;
  std::vector<CausalProposition> cprops;
  InitialProposition iprop;
  std::vector<OccurrenceProposition> pprops;

  const Signature& sig() const { return *signature; }
};

bool operator==(const DomainDescription& a, const DomainDescription& b);

/// Lex and parse only. Throws ParseError.
RawDomain parse_raw(std::string_view text);

/// Every violated well-formedness condition of `raw`, in source order of
/// discovery; empty iff `raw` describes a valid domain.
std::vector<Diagnostic> validate(const RawDomain& raw);

/// Builds the domain description for a raw tree that validate() accepts.
/// Throws InvalidDomain otherwise.
DomainDescription build(const RawDomain& raw);

/// parse_raw + validate + build. Throws ParseError or InvalidDomain.
DomainDescription parse_domain(std::string_view text);

/// Parses an i-formula against `sig`. Throws ParseError for syntax, unknown
/// symbols and values; RangeError for instants beyond maxinst.
IFormula parse_query(std::string_view text, const Signature& sig);

/// Canonical `.pec` text; parse_domain(render(dd)) == dd.
std::string render(const DomainDescription& dd);

std::string render_formula(const Signature& sig, const Formula& phi);
std::string render_query(const Signature& sig, const IFormula& phi);

}  // namespace pec

#endif  // PEC_SYNTAX_HPP_
