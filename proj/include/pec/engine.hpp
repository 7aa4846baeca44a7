// Exact possible-worlds semantics over the finite instant window.

#ifndef PEC_ENGINE_HPP_
#define PEC_ENGINE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "pec/core.hpp"
#include "pec/syntax.hpp"

namespace pec {

/// Two c-proposition bodies hold in the same state.
class ConcurrentActivation : public std::runtime_error {
 public:
  ConcurrentActivation(State state, std::optional<Instant> instant,
                       std::size_t first, std::size_t second,
                       const std::string& message);
  const State& state() const { return state_; }
  std::optional<Instant> instant() const { return instant_; }
  /// Indices (into DomainDescription::cprops) of two activated c-props.
  std::pair<std::size_t, std::size_t> cprops() const { return {first_, second_}; }

 private:
  State state_;
  std::optional<Instant> instant_;
  std::size_t first_;
  std::size_t second_;
};

/// Conditioning on an i-formula of probability zero.
class ConditionZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An initial choice plus one effect choice per cause occurrence.
struct Trace {
  Outcome initial;
  std::map<Instant, Outcome> effects;
  friend bool operator==(const Trace&, const Trace&) = default;
};

struct WeightedWorld {
  FiniteWorld world;
  Probability weight;
  std::vector<Trace> traces;
};

/// Index of the c-proposition whose body `state` satisfies, if any.
/// Throws ConcurrentActivation when two bodies hold.
std::optional<std::size_t> activated_cprop(
    const DomainDescription& dd, const State& state,
    std::optional<Instant> instant = std::nullopt);

/// epsilon_D(W): product over p-propositions of P or 1-P.
Probability narrative_eval(const DomainDescription& dd, const FiniteWorld& world);

/// epsilon(N_I, W) for the p-propositions at a single instant.
Probability narrative_eval_at(const DomainDescription& dd,
                              const FiniteWorld& world, Instant instant);

/// epsilon(tr): product of the chosen outcome weights.
Probability trace_eval(const Trace& tr);

/// Every well-behaved world with nonzero weight, ordered by world. Weights sum
/// to exactly 1.
std::vector<WeightedWorld> enumerate(const DomainDescription& dd);

struct WorldCheck {
  bool cwa = false;
  bool initial = false;
  bool justified = false;
  /// Empty unless all three conditions hold.
  std::vector<Trace> traces;

  bool well_behaved() const { return cwa && initial && justified; }
};

/// Direct check of the three well-behavedness conditions, with justified
/// change tested for every instant pair I < I'. Independent of enumerate().
WorldCheck check_world(const DomainDescription& dd, const FiniteWorld& world);

/// M_D(W) computed from check_world: epsilon_D(W) times the summed trace
/// evaluations, or 0 for a world that is not well-behaved.
Probability world_weight(const DomainDescription& dd, const FiniteWorld& world);

/// Caches the enumeration of one domain for repeated queries.
class Model {
 public:
  explicit Model(const DomainDescription& dd);

  const DomainDescription& domain() const { return dd_; }
  const std::vector<WeightedWorld>& worlds() const { return worlds_; }

  /// M*_D(phi). Throws RangeError for instants beyond maxinst.
  Probability marginal(const IFormula& phi) const;
  /// M*(phi & psi) / M*(psi). Throws ConditionZero when M*(psi) = 0.
  Probability conditional(const IFormula& phi, const IFormula& psi) const;
  bool entails(const HoldsProposition& h) const;

 private:
  DomainDescription dd_;
  std::vector<WeightedWorld> worlds_;
};

Probability marginal(const DomainDescription& dd, const IFormula& phi);
Probability conditional(const DomainDescription& dd, const IFormula& phi,
                        const IFormula& psi);
bool entails(const DomainDescription& dd, const HoldsProposition& h);

// ---------------------------------------------------------------------------
// Transition function.

/// Outcomes leading from `state` to `target` in one step.
std::vector<Outcome> tset(const DomainDescription& dd, const State& state,
                          const FluentState& target);
Probability transition(const DomainDescription& dd, const State& state,
                       const FluentState& target);

struct TransitionEdge {
  FluentState source;
  std::vector<ValueId> actions;  // action assignment of the source state
  FluentState target;
  Probability prob;
};

struct TransitionGraph {
  std::vector<FluentState> nodes;
  std::vector<TransitionEdge> edges;
};

/// Materializes t_D. Nodes are the fluent states touched by some activated
/// c-proposition (as source or target); if no c-proposition can activate,
/// every fluent state is a node. Edges are the nonzero transitions out of
/// nodes under a non-empty action set.
TransitionGraph transition_graph(const DomainDescription& dd);

// ---------------------------------------------------------------------------
// Narrative restriction and world comparison.

enum class Restriction {
  kUpTo,    // keep p-propositions at instants <= I
  kBefore,  // keep p-propositions at instants < I
  kEmpty,   // drop every p-proposition
};

DomainDescription restrict(const DomainDescription& dd, Restriction mode,
                           Instant instant = 0);

/// Fluent states agree at every I' <= i and action values at every I' < i.
bool indistinguishable_up_to(const Signature& sig, const FiniteWorld& w,
                             const FiniteWorld& w2, Instant i);
bool fluent_indistinguishable_up_to(const Signature& sig, const FiniteWorld& w,
                                    const FiniteWorld& w2, Instant i);

/// Instants at which some c-proposition is activated in `world`.
std::vector<Instant> occurrences(const DomainDescription& dd,
                                 const FiniteWorld& world);

// ---------------------------------------------------------------------------
// Monte Carlo sampling.

/// Draws well-behaved worlds by forward simulation. Deterministic per seed.
/// Probabilities are converted to doubles once, at construction.
class WorldSampler {
 public:
  WorldSampler(const DomainDescription& dd, std::uint64_t seed);
  FiniteWorld next();

 private:
  std::size_t pick(const std::vector<double>& cumulative);
  double uniform();

  DomainDescription dd_;
  std::mt19937_64 rng_;
  std::vector<double> initial_cumulative_;
  std::vector<std::vector<double>> head_cumulative_;
  // Per instant: (action index, occurrence probability).
  std::vector<std::vector<std::pair<std::size_t, double>>> occurrences_;
};

FiniteWorld sample_world(const DomainDescription& dd, std::uint64_t seed);

}  // namespace pec

#endif  // PEC_ENGINE_HPP_
