// Shared fixtures: shipped domains, a random domain generator and a
// brute-force model that enumerates every world in the window.

#ifndef PEC_TESTS_TESTING_HPP_
#define PEC_TESTS_TESTING_HPP_

#include <map>
#include <random>
#include <string>

#include "pec/engine.hpp"

namespace pec::testing {

std::string read_text(const std::string& path);
std::string domain_path(const std::string& name);  // "coin" -> .../coin.pec
DomainDescription load_domain(const std::string& name);

struct DomainLimits {
  std::size_t max_fluents = 3;
  std::size_t max_values = 3;
  std::size_t max_actions = 2;
  Instant max_maxinst = 4;
};

/// Source text of a random domain. It may be invalid; see random_domain.
std::string random_domain_text(std::mt19937_64& rng, const DomainLimits& limits);

/// A random valid domain in which no state activates two c-propositions.
/// Drawn by rejection from random_domain_text.
DomainDescription random_domain(std::mt19937_64& rng, const DomainLimits& limits);

/// A random i-formula over the domain's literals and window.
IFormula random_iformula(std::mt19937_64& rng, const Signature& sig, int depth);

/// A random formula over literals of `sig` (instant-free).
Formula random_formula(std::mt19937_64& rng, const Signature& sig, int depth);

/// Every world of the window, each weighted by world_weight(); zero-weight
/// worlds are left out.
std::map<FiniteWorld, Probability> brute_force_model(const DomainDescription& dd);

}  // namespace pec::testing

#endif  // PEC_TESTS_TESTING_HPP_
