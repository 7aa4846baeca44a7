#include "support/properties.hpp"

#include <sstream>

#include "pec/syntax.hpp"
#include "support/testing.hpp"

namespace pec::testing {

namespace {

std::string world_text(const Signature& sig, const FiniteWorld& w) {
  std::string out;
  for (std::size_t i = 0; i < w.states.size(); ++i) {
    out += (i ? " " : "") + to_string(sig, w.states[i]);
  }
  return out;
}

/// An all-false world of the window in which the state at every instant has
/// fluent part `fluents`.
FiniteWorld idle_world(const Signature& sig, const FluentState& fluents) {
  FiniteWorld w;
  std::vector<ValueId> none(sig.action_count(), kFalse);
  for (Instant i = 0; i <= sig.maxinst(); ++i) w.states.push_back(make_state(fluents, none));
  return w;
}

}  // namespace

std::string check_normalization(const Model& model) {
  Probability total = 0;
  for (const auto& w : model.worlds()) total += w.weight;
  if (total == 1) return {};
  return "weights sum to " + format_fraction(total);
}

std::string check_additivity(const Model& model, std::mt19937_64& rng, int pairs) {
  const Signature& sig = model.domain().sig();
  for (int k = 0; k < pairs; ++k) {
    IFormula phi = random_iformula(rng, sig, 3);
    IFormula psi = IFormula::conjunction(random_iformula(rng, sig, 3),
                                         IFormula::negation(phi));
    for (const auto& w : model.worlds()) {
      if (satisfies(w.world, phi) && satisfies(w.world, psi)) {
        return "pair not exclusive: " + render_query(sig, phi);
      }
    }
    Probability lhs = model.marginal(IFormula::disjunction(phi, psi));
    Probability rhs = model.marginal(phi) + model.marginal(psi);
    if (lhs != rhs) {
      return "additivity fails for " + render_query(sig, phi) + " and " +
             render_query(sig, psi) + ": " + format_fraction(lhs) +
             " != " + format_fraction(rhs);
    }
  }
  return {};
}

std::string check_transition_rows(const DomainDescription& dd) {
  const Signature& sig = dd.sig();
  const auto targets = all_fluent_states(sig);
  for (const auto& s : targets) {
    for (const auto& a : all_action_assignments(sig)) {
      State state = make_state(s, a);
      Probability row = 0;
      try {
        for (const auto& t : targets) row += transition(dd, state, t);
      } catch (const ConcurrentActivation&) {
        continue;  // t_D is undefined where two c-propositions activate
      }
      if (row != 1) {
        return "row of " + to_string(sig, state) + " sums to " + format_fraction(row);
      }
    }
  }
  return {};
}

std::string check_narrative_sums(const DomainDescription& dd) {
  const Signature& sig = dd.sig();
  const FluentState fluents = all_fluent_states(sig).front();
  for (Instant i = 0; i <= sig.maxinst(); ++i) {
    std::vector<SymbolId> forced, uncertain;
    for (const auto& p : dd.pprops) {
      if (p.instant != i) continue;
      (p.prob == 1 ? forced : uncertain).push_back(p.action);
    }
    Probability sum = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << uncertain.size()); ++mask) {
      FiniteWorld w = idle_world(sig, fluents);
      for (SymbolId a : forced) w.states[i].values[a] = kTrue;
      for (std::size_t k = 0; k < uncertain.size(); ++k) {
        if (mask >> k & 1) w.states[i].values[uncertain[k]] = kTrue;
      }
      sum += narrative_eval_at(dd, w, i);
    }
    if (sum != 1) {
      return "narrative factors at instant " + std::to_string(i) + " sum to " +
             format_fraction(sum);
    }
  }
  return {};
}

std::string check_decomposition(const DomainDescription& dd) {
  const Signature& sig = dd.sig();
  for (const auto& w : enumerate(dd)) {
    // Only occurrences before maxinst change the window.
    std::optional<Instant> last;
    for (Instant i : occurrences(dd, w.world)) {
      if (i < sig.maxinst()) last = i;
    }
    const DomainDescription before =
        last ? restrict(dd, Restriction::kBefore, *last) : restrict(dd, Restriction::kEmpty);
    const Instant horizon = last ? *last : sig.maxinst();

    const auto restricted = enumerate(before);
    const WeightedWorld* match = nullptr;
    for (const auto& candidate : restricted) {
      bool same = last ? indistinguishable_up_to(sig, w.world, candidate.world, horizon)
                       : fluent_indistinguishable_up_to(sig, w.world, candidate.world, horizon);
      if (!same) continue;
      if (match) return "two restricted worlds match " + world_text(sig, w.world);
      match = &candidate;
    }
    if (!match) return "no restricted world matches " + world_text(sig, w.world);

    Probability expected = narrative_eval(dd, w.world) /
                           narrative_eval(before, match->world) * match->weight;
    if (last) {
      expected *= transition(dd, w.world.at(*last),
                             fluent_part(sig, w.world.at(*last + 1)));
    }
    if (expected != w.weight) {
      return "decomposition gives " + format_fraction(expected) + " but world " +
             world_text(sig, w.world) + " weighs " + format_fraction(w.weight);
    }
  }
  return {};
}

std::string check_oracle(const DomainDescription& dd) {
  const Signature& sig = dd.sig();
  auto brute = brute_force_model(dd);
  auto worlds = enumerate(dd);
  if (brute.size() != worlds.size()) {
    return "brute force finds " + std::to_string(brute.size()) +
           " worlds, enumeration " + std::to_string(worlds.size());
  }
  for (const auto& w : worlds) {
    auto it = brute.find(w.world);
    if (it == brute.end()) return "enumeration-only world " + world_text(sig, w.world);
    if (it->second != w.weight) {
      return "world " + world_text(sig, w.world) + " weighs " +
             format_fraction(w.weight) + " but brute force gives " +
             format_fraction(it->second);
    }
    if (check_world(dd, w.world).traces.size() != w.traces.size()) {
      return "trace count differs on " + world_text(sig, w.world);
    }
  }
  return {};
}

std::string check_persistence(const Model& model) {
  const DomainDescription& dd = model.domain();
  for (const auto& w : model.worlds()) {
    if (!occurrences(dd, w.world).empty()) continue;
    const FluentState first = fluent_part(dd.sig(), w.world.states.front());
    for (const auto& s : w.world.states) {
      if (fluent_part(dd.sig(), s) != first) {
        return "fluents change without activation in " + world_text(dd.sig(), w.world);
      }
    }
  }
  return {};
}

}  // namespace pec::testing
