// Semantic invariants shared by the property tests and the acceptance suite.
// Each check returns an empty string on success and a description of the
// first counterexample otherwise.

#ifndef PEC_TESTS_PROPERTIES_HPP_
#define PEC_TESTS_PROPERTIES_HPP_

#include <random>
#include <string>

#include "pec/engine.hpp"

namespace pec::testing {

/// The enumerated weights sum to exactly 1.
std::string check_normalization(const Model& model);

/// marginal(phi | psi) = marginal(phi) + marginal(psi) on `pairs` random
/// mutually exclusive pairs. Exclusivity is confirmed on every world.
std::string check_additivity(const Model& model, std::mt19937_64& rng, int pairs);

/// The transition row of every state that activates at most one
/// c-proposition sums to exactly 1.
std::string check_transition_rows(const DomainDescription& dd);

/// At each instant the narrative factors over all assignments of the
/// uncertain actions sum to exactly 1.
std::string check_narrative_sums(const DomainDescription& dd);

/// Each world's weight factors through the last occurrence: the matching world
/// of the domain restricted before it, the narrative ratio and one transition.
std::string check_decomposition(const DomainDescription& dd);

/// enumerate() equals the brute-force model over every world of the window.
std::string check_oracle(const DomainDescription& dd);

/// Worlds without any activation keep their fluent state.
std::string check_persistence(const Model& model);

}  // namespace pec::testing

#endif  // PEC_TESTS_PROPERTIES_HPP_
