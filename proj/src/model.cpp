// Enumeration of well-behaved worlds and the query operations built on it.

#include <algorithm>
#include <map>
#include <sstream>

#include "pec/engine.hpp"

namespace pec {

namespace {

std::string concurrency_message(const DomainDescription& dd, const State& state,
                                std::optional<Instant> instant) {
  std::ostringstream os;
  os << "two c-propositions are activated in state "
     << to_string(dd.sig(), state);
  if (instant) os << " at instant " << *instant;
  return os.str();
}

/// The p-propositions of one instant, split by whether they are certain.
struct InstantNarrative {
  std::vector<std::size_t> forced;     // action indices with P = 1
  std::vector<std::size_t> uncertain;  // pprop indices with P < 1
};

std::vector<InstantNarrative> split_narrative(const DomainDescription& dd) {
  const Signature& sig = dd.sig();
  std::vector<InstantNarrative> out(sig.maxinst() + 1);
  for (std::size_t k = 0; k < dd.pprops.size(); ++k) {
    const auto& p = dd.pprops[k];
    auto& slot = out.at(p.instant);
    if (p.prob == 1) {
      slot.forced.push_back(p.action - sig.fluent_count());
    } else {
      slot.uncertain.push_back(k);
    }
  }
  return out;
}

class Enumerator {
 public:
  explicit Enumerator(const DomainDescription& dd)
      : dd_(dd), sig_(dd.sig()), narrative_(split_narrative(dd)) {}

  std::vector<WeightedWorld> run() {
    for (const auto& ic : dd_.iprop.head) {
      if (ic.weight == 0) continue;
      Trace trace{ic, {}};
      FluentState s0 = ic.effect.to_fluent_state(sig_.fluent_count());
      std::vector<State> prefix;
      prefix.reserve(sig_.maxinst() + 1);
      step(0, s0, prefix, ic.weight, trace);
    }
    std::vector<WeightedWorld> out;
    out.reserve(leaves_.size());
    for (auto& [world, entry] : leaves_) {
      out.push_back({world, std::move(entry.weight), std::move(entry.traces)});
    }
    return out;
  }

 private:
  struct Entry {
    Probability weight = 0;
    std::vector<Trace> traces;
  };

  // Chooses the action assignment at `instant`, then the effect.
  void step(Instant instant, const FluentState& fluents,
            std::vector<State>& prefix, const Probability& weight,
            Trace& trace) {
    const InstantNarrative& narr = narrative_[instant];
    std::vector<ValueId> actions(sig_.action_count(), kFalse);
    for (std::size_t a : narr.forced) actions[a] = kTrue;
    branch_actions(instant, fluents, actions, 0, prefix, weight, trace);
  }

  void branch_actions(Instant instant, const FluentState& fluents,
                      std::vector<ValueId>& actions, std::size_t k,
                      std::vector<State>& prefix, const Probability& weight,
                      Trace& trace) {
    const InstantNarrative& narr = narrative_[instant];
    if (k == narr.uncertain.size()) {
      effect(instant, make_state(fluents, actions), prefix, weight, trace);
      return;
    }
    const auto& p = dd_.pprops[narr.uncertain[k]];
    const std::size_t a = p.action - sig_.fluent_count();
    actions[a] = kTrue;
    branch_actions(instant, fluents, actions, k + 1, prefix, weight * p.prob,
                   trace);
    actions[a] = kFalse;
    branch_actions(instant, fluents, actions, k + 1, prefix,
                   weight * (1 - p.prob), trace);
  }

  void effect(Instant instant, State state, std::vector<State>& prefix,
              const Probability& weight, Trace& trace) {
    const FluentState fluents = fluent_part(sig_, state);
    prefix.push_back(std::move(state));
    if (instant == sig_.maxinst()) {
      Entry& entry = leaves_[FiniteWorld{prefix}];
      entry.weight += weight;
      entry.traces.push_back(trace);
      prefix.pop_back();
      return;
    }
    auto c = activated_cprop(dd_, prefix.back(), instant);
    if (!c) {
      step(instant + 1, fluents, prefix, weight, trace);
    } else {
      for (const auto& outcome : dd_.cprops[*c].head) {
        if (outcome.weight == 0) continue;
        trace.effects[instant] = outcome;
        step(instant + 1, update(fluents, outcome.effect), prefix,
             weight * outcome.weight, trace);
      }
      trace.effects.erase(instant);
    }
    prefix.pop_back();
  }

  const DomainDescription& dd_;
  const Signature& sig_;
  std::vector<InstantNarrative> narrative_;
  std::map<FiniteWorld, Entry> leaves_;
};

void check_window(const Signature& sig, const IFormula& phi) {
  phi.for_each_atom([&](const TimedLiteral& t) {
    if (t.instant > sig.maxinst()) {
      throw RangeError("instant " + std::to_string(t.instant) +
                       " exceeds maxinst " + std::to_string(sig.maxinst()));
    }
  });
  check_formula(sig, phi);
}

}  // namespace

ConcurrentActivation::ConcurrentActivation(State state,
                                           std::optional<Instant> instant,
                                           std::size_t first,
                                           std::size_t second,
                                           const std::string& message)
    : std::runtime_error(message),
      state_(std::move(state)),
      instant_(instant),
      first_(first),
      second_(second) {}

std::optional<std::size_t> activated_cprop(const DomainDescription& dd,
                                           const State& state,
                                           std::optional<Instant> instant) {
  std::optional<std::size_t> found;
  for (std::size_t k = 0; k < dd.cprops.size(); ++k) {
    if (!eval_formula(state, dd.cprops[k].body)) continue;
    if (found) {
      throw ConcurrentActivation(state, instant, *found, k,
                                 concurrency_message(dd, state, instant));
    }
    found = k;
  }
  return found;
}

Probability narrative_eval(const DomainDescription& dd,
                           const FiniteWorld& world) {
  Probability out = 1;
  for (const auto& p : dd.pprops) {
    bool performed = world.at(p.instant)[p.action] == kTrue;
    out *= performed ? p.prob : 1 - p.prob;
  }
  return out;
}

Probability narrative_eval_at(const DomainDescription& dd,
                              const FiniteWorld& world, Instant instant) {
  Probability out = 1;
  for (const auto& p : dd.pprops) {
    if (p.instant != instant) continue;
    bool performed = world.at(p.instant)[p.action] == kTrue;
    out *= performed ? p.prob : 1 - p.prob;
  }
  return out;
}

Probability trace_eval(const Trace& tr) {
  Probability out = tr.initial.weight;
  for (const auto& [instant, outcome] : tr.effects) out *= outcome.weight;
  return out;
}

std::vector<WeightedWorld> enumerate(const DomainDescription& dd) {
  return Enumerator(dd).run();
}

Model::Model(const DomainDescription& dd) : dd_(dd), worlds_(enumerate(dd)) {}

Probability Model::marginal(const IFormula& phi) const {
  check_window(dd_.sig(), phi);
  Probability out = 0;
  for (const auto& w : worlds_) {
    if (satisfies(w.world, phi)) out += w.weight;
  }
  return out;
}

Probability Model::conditional(const IFormula& phi, const IFormula& psi) const {
  Probability given = marginal(psi);
  if (given == 0) {
    throw ConditionZero("the conditioning formula has probability 0");
  }
  return marginal(IFormula::conjunction(phi, psi)) / given;
}

bool Model::entails(const HoldsProposition& h) const {
  return marginal(h.query) == h.prob;
}

Probability marginal(const DomainDescription& dd, const IFormula& phi) {
  check_window(dd.sig(), phi);
  return Model(dd).marginal(phi);
}

Probability conditional(const DomainDescription& dd, const IFormula& phi,
                        const IFormula& psi) {
  check_window(dd.sig(), phi);
  check_window(dd.sig(), psi);
  return Model(dd).conditional(phi, psi);
}

bool entails(const DomainDescription& dd, const HoldsProposition& h) {
  return Model(dd).entails(h);
}

}  // namespace pec
