#include "pec/engine.hpp"

namespace pec {

namespace {

std::vector<double> cumulative(const std::vector<Outcome>& outcomes) {
  std::vector<double> out;
  double acc = 0;
  for (const auto& o : outcomes) {
    acc += to_double(o.weight);
    out.push_back(acc);
  }
  return out;
}

}  // namespace

WorldSampler::WorldSampler(const DomainDescription& dd, std::uint64_t seed)
    : dd_(dd), rng_(seed) {
  const Signature& sig = dd_.sig();
  initial_cumulative_ = cumulative(dd_.iprop.head);
  for (const auto& c : dd_.cprops) head_cumulative_.push_back(cumulative(c.head));
  occurrences_.resize(sig.maxinst() + 1);
  for (const auto& p : dd_.pprops) {
    occurrences_.at(p.instant).emplace_back(p.action - sig.fluent_count(),
                                            to_double(p.prob));
  }
}

double WorldSampler::uniform() {
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

std::size_t WorldSampler::pick(const std::vector<double>& cumulative) {
  double u = uniform() * cumulative.back();
  for (std::size_t k = 0; k < cumulative.size(); ++k) {
    if (u < cumulative[k]) return k;
  }
  return cumulative.size() - 1;
}

FiniteWorld WorldSampler::next() {
  const Signature& sig = dd_.sig();
  const auto& ic = dd_.iprop.head[pick(initial_cumulative_)];
  FluentState fluents = ic.effect.to_fluent_state(sig.fluent_count());
  FiniteWorld world;
  for (Instant i = 0; i <= sig.maxinst(); ++i) {
    std::vector<ValueId> actions(sig.action_count(), kFalse);
    for (const auto& [a, p] : occurrences_[i]) {
      if (p >= 1 || uniform() < p) actions[a] = kTrue;
    }
    world.states.push_back(make_state(fluents, actions));
    if (i == sig.maxinst()) break;
    if (auto c = activated_cprop(dd_, world.states.back(), i)) {
      const auto& o = dd_.cprops[*c].head[pick(head_cumulative_[*c])];
      fluents = update(fluents, o.effect);
    }
  }
  return world;
}

FiniteWorld sample_world(const DomainDescription& dd, std::uint64_t seed) {
  return WorldSampler(dd, seed).next();
}

}  // namespace pec
