// Brute-force well-behavedness check, written straight from the definitions so
// that it can serve as an oracle for the enumerator.

#include "pec/engine.hpp"

namespace pec {

namespace {

bool check_cwa(const DomainDescription& dd, const FiniteWorld& world) {
  const Signature& sig = dd.sig();
  for (Instant i = 0; i < world.states.size(); ++i) {
    for (std::size_t k = 0; k < sig.action_count(); ++k) {
      SymbolId a = sig.action_symbol(k);
      const OccurrenceProposition* p = nullptr;
      for (const auto& q : dd.pprops) {
        if (q.action == a && q.instant == i) p = &q;
      }
      bool performed = world.at(i)[a] == kTrue;
      if (performed && (p == nullptr || p->prob <= 0)) return false;
      if (!performed && p != nullptr && p->prob == 1) return false;
    }
  }
  return true;
}

std::vector<Outcome> initial_choices(const DomainDescription& dd,
                                     const FiniteWorld& world) {
  const Signature& sig = dd.sig();
  FluentState s0 = fluent_part(sig, world.at(0));
  std::vector<Outcome> out;
  for (const auto& o : dd.iprop.head) {
    if (o.effect.is_total(sig.fluent_count()) &&
        o.effect.to_fluent_state(sig.fluent_count()) == s0) {
      out.push_back(o);
    }
  }
  return out;
}

/// Equation for justified change, over every pair I < I'.
bool consistent(const Signature& sig, const FiniteWorld& world,
                const std::map<Instant, Outcome>& ec) {
  const Instant last = static_cast<Instant>(world.states.size() - 1);
  for (Instant i = 0; i < last; ++i) {
    for (Instant j = i + 1; j <= last; ++j) {
      FluentState s = fluent_part(sig, world.at(i));
      for (auto it = ec.lower_bound(i); it != ec.end() && it->first < j; ++it) {
        s = update(s, it->second.effect);
      }
      if (s != fluent_part(sig, world.at(j))) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Instant> occurrences(const DomainDescription& dd,
                                 const FiniteWorld& world) {
  std::vector<Instant> out;
  for (Instant i = 0; i < world.states.size(); ++i) {
    if (activated_cprop(dd, world.at(i), i)) out.push_back(i);
  }
  return out;
}

WorldCheck check_world(const DomainDescription& dd, const FiniteWorld& world) {
  const Signature& sig = dd.sig();
  WorldCheck out;
  out.cwa = check_cwa(dd, world);
  std::vector<Outcome> ics = initial_choices(dd, world);
  out.initial = !ics.empty();

  // Effects at the last instant of the window cannot be observed, so the
  // effect choice ranges over occurrences strictly before it.
  std::vector<std::pair<Instant, std::size_t>> occ;
  for (Instant i = 0; i + 1 < world.states.size(); ++i) {
    if (auto c = activated_cprop(dd, world.at(i), i)) occ.emplace_back(i, *c);
  }

  // Odometer over every effect choice.
  std::vector<std::map<Instant, Outcome>> ecs;
  std::vector<std::size_t> digit(occ.size(), 0);
  while (true) {
    std::map<Instant, Outcome> ec;
    for (std::size_t k = 0; k < occ.size(); ++k) {
      ec.emplace(occ[k].first, dd.cprops[occ[k].second].head[digit[k]]);
    }
    if (consistent(sig, world, ec)) ecs.push_back(std::move(ec));
    std::size_t k = 0;
    while (k < occ.size() &&
           ++digit[k] == dd.cprops[occ[k].second].head.size()) {
      digit[k++] = 0;
    }
    if (k == occ.size()) break;
  }
  out.justified = !ecs.empty();

  if (out.well_behaved()) {
    for (const auto& ic : ics) {
      for (const auto& ec : ecs) out.traces.push_back({ic, ec});
    }
  }
  return out;
}

Probability world_weight(const DomainDescription& dd, const FiniteWorld& world) {
  WorldCheck check = check_world(dd, world);
  if (!check.well_behaved()) return 0;
  Probability sum = 0;
  for (const auto& tr : check.traces) sum += trace_eval(tr);
  return narrative_eval(dd, world) * sum;
}

}  // namespace pec
