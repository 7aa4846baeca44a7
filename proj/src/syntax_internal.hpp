#ifndef PEC_SRC_SYNTAX_INTERNAL_HPP_
#define PEC_SRC_SYNTAX_INTERNAL_HPP_

#include <optional>
#include <string>

#include "pec/syntax.hpp"

namespace pec::detail {

/// Resolves a raw literal against `sig`; on failure fills `error`.
std::optional<Literal> resolve_literal(const Signature& sig,
                                       const RawLiteral& raw,
                                       Diagnostic* error);

}  // namespace pec::detail

#endif  // PEC_SRC_SYNTAX_INTERNAL_HPP_
