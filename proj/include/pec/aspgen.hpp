// Translation of a domain description into an answer-set program.

#ifndef PEC_ASPGEN_HPP_
#define PEC_ASPGEN_HPP_

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pec/syntax.hpp"

namespace pec {

struct SignedLiteral {
  Literal literal;
  bool positive = true;
  friend auto operator<=>(const SignedLiteral&, const SignedLiteral&) = default;
};

using Conjunction = std::vector<SignedLiteral>;

/// Disjunctive normal form. Negations are pushed to the literals, products are
/// expanded left to right, repeated literals inside a disjunct are merged and
/// disjuncts containing both L and !L are dropped.
std::vector<Conjunction> to_dnf(const Formula& phi);

/// Two symbols (or two values of one fluent) map to the same ASP constant.
class NameCollision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The ASP constant for a PEC name: first letter lowercased, '-' as '_'.
std::string asp_identifier(std::string_view name);

/// Domain-dependent clauses, one per line, in emission order.
std::vector<std::string> translate(const DomainDescription& dd);

/// The fixed domain-independent axiom bank.
const std::vector<std::string>& domain_independent();

/// Header comment, translate(dd) and optionally the axioms. Throws
/// NameCollision.
void emit(std::ostream& out, const DomainDescription& dd, bool with_axioms);
std::string emit(const DomainDescription& dd, bool with_axioms);

}  // namespace pec

#endif  // PEC_ASPGEN_HPP_
