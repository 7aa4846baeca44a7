// Transition function, its graph, narrative restriction and indistinguishability.

#include <set>

#include "pec/engine.hpp"

namespace pec {

std::vector<Outcome> tset(const DomainDescription& dd, const State& state,
                          const FluentState& target) {
  const FluentState here = fluent_part(dd.sig(), state);
  auto c = activated_cprop(dd, state);
  if (!c) {
    if (here == target) return {Outcome{PartialFluentState{}, 1}};
    return {};
  }
  std::vector<Outcome> out;
  for (const auto& o : dd.cprops[*c].head) {
    if (update(here, o.effect) == target) out.push_back(o);
  }
  return out;
}

Probability transition(const DomainDescription& dd, const State& state,
                       const FluentState& target) {
  return total_weight(tset(dd, state, target));
}

TransitionGraph transition_graph(const DomainDescription& dd) {
  const Signature& sig = dd.sig();
  const auto fluent_states = all_fluent_states(sig);
  std::vector<std::vector<ValueId>> action_sets;
  for (auto& a : all_action_assignments(sig)) {
    bool any = false;
    for (ValueId v : a) any = any || v == kTrue;
    if (any) action_sets.push_back(std::move(a));
  }

  // Nodes: every endpoint of a transition driven by some c-proposition.
  std::set<FluentState> nodes;
  for (const auto& s : fluent_states) {
    for (const auto& a : action_sets) {
      State state = make_state(s, a);
      auto c = activated_cprop(dd, state);
      if (!c) continue;
      nodes.insert(s);
      for (const auto& o : dd.cprops[*c].head) {
        if (o.weight != 0) nodes.insert(update(s, o.effect));
      }
    }
  }

  TransitionGraph out;
  if (nodes.empty()) {
    out.nodes = fluent_states;
    return out;
  }
  out.nodes.assign(nodes.begin(), nodes.end());
  for (const auto& s : out.nodes) {
    for (const auto& a : action_sets) {
      State state = make_state(s, a);
      for (const auto& target : fluent_states) {
        Probability p = transition(dd, state, target);
        if (p != 0) out.edges.push_back({s, a, target, p});
      }
    }
  }
  return out;
}

DomainDescription restrict(const DomainDescription& dd, Restriction mode,
                           Instant instant) {
  DomainDescription out = dd;
  out.pprops.clear();
  for (const auto& p : dd.pprops) {
    bool keep = mode == Restriction::kUpTo     ? p.instant <= instant
                : mode == Restriction::kBefore ? p.instant < instant
                                               : false;
    if (keep) out.pprops.push_back(p);
  }
  return out;
}

bool fluent_indistinguishable_up_to(const Signature& sig, const FiniteWorld& w,
                                    const FiniteWorld& w2, Instant i) {
  for (Instant k = 0; k <= i; ++k) {
    if (fluent_part(sig, w.at(k)) != fluent_part(sig, w2.at(k))) return false;
  }
  return true;
}

bool indistinguishable_up_to(const Signature& sig, const FiniteWorld& w,
                             const FiniteWorld& w2, Instant i) {
  if (!fluent_indistinguishable_up_to(sig, w, w2, i)) return false;
  for (Instant k = 0; k < i; ++k) {
    if (action_part(sig, w.at(k)) != action_part(sig, w2.at(k))) return false;
  }
  return true;
}

}  // namespace pec
