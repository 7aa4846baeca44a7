#include "pec/core.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pec {

SymbolId Signature::add_fluent(std::string name,
                               std::vector<std::string> values) {
  if (action_count() != 0) {
    throw SignatureError("fluents must be added before actions");
  }
  if (values.empty()) {
    throw SignatureError("fluent '" + name + "' has no values");
  }
  if (find(name)) throw SignatureError("duplicate symbol '" + name + "'");
  names_.push_back(std::move(name));
  values_.push_back(std::move(values));
  ++fluent_count_;
  return static_cast<SymbolId>(names_.size() - 1);
}

SymbolId Signature::add_action(std::string name) {
  if (find(name)) throw SignatureError("duplicate symbol '" + name + "'");
  names_.push_back(std::move(name));
  values_.push_back({std::string(kTrueName), std::string(kFalseName)});
  return static_cast<SymbolId>(names_.size() - 1);
}

bool Signature::is_boolean(SymbolId s) const {
  const auto& v = values_.at(s);
  return v.size() == 2 &&
         std::find(v.begin(), v.end(), kTrueName) != v.end() &&
         std::find(v.begin(), v.end(), kFalseName) != v.end();
}

std::optional<SymbolId> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<SymbolId>(i);
  }
  return std::nullopt;
}

std::optional<ValueId> Signature::find_value(SymbolId s,
                                             std::string_view value) const {
  const auto& vals = values_.at(s);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] == value) return static_cast<ValueId>(i);
  }
  return std::nullopt;
}

IFormula at_instant(const Formula& theta, Instant instant) {
  return theta.transform(
      [instant](const Literal& l) { return TimedLiteral{l, instant}; });
}

PartialFluentState::PartialFluentState(std::vector<Literal> literals)
    : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  for (std::size_t i = 1; i < literals_.size(); ++i) {
    if (literals_[i].symbol == literals_[i - 1].symbol) {
      throw SignatureError("partial fluent state assigns a fluent twice");
    }
  }
}

std::optional<ValueId> PartialFluentState::value_of(SymbolId fluent) const {
  auto it = std::lower_bound(
      literals_.begin(), literals_.end(), fluent,
      [](const Literal& l, SymbolId s) { return l.symbol < s; });
  if (it != literals_.end() && it->symbol == fluent) return it->value;
  return std::nullopt;
}

FluentState PartialFluentState::to_fluent_state(std::size_t fluent_count) const {
  if (!is_total(fluent_count)) {
    throw SignatureError("partial fluent state is not total");
  }
  FluentState out;
  out.values.reserve(fluent_count);
  for (const auto& l : literals_) out.values.push_back(l.value);
  return out;
}

Probability total_weight(const std::vector<Outcome>& outcomes) {
  Probability sum = 0;
  for (const auto& o : outcomes) sum += o.weight;
  return sum;
}

State make_state(const FluentState& fluents,
                 const std::vector<ValueId>& actions) {
  State s;
  s.values.reserve(fluents.values.size() + actions.size());
  s.values.insert(s.values.end(), fluents.values.begin(), fluents.values.end());
  s.values.insert(s.values.end(), actions.begin(), actions.end());
  return s;
}

FluentState fluent_part(const Signature& sig, const State& s) {
  auto n = static_cast<std::ptrdiff_t>(sig.fluent_count());
  return FluentState{{s.values.begin(), s.values.begin() + n}};
}

std::vector<ValueId> action_part(const Signature& sig, const State& s) {
  auto n = static_cast<std::ptrdiff_t>(sig.fluent_count());
  return {s.values.begin() + n, s.values.end()};
}

FluentState update(const FluentState& base, const PartialFluentState& delta) {
  FluentState out = base;
  for (const auto& l : delta.literals()) {
    if (l.symbol >= out.values.size()) {
      throw SignatureError("update delta mentions an unknown fluent");
    }
    out.values[l.symbol] = l.value;
  }
  return out;
}

bool eval_formula(const State& state, const Formula& phi) {
  return phi.evaluate([&](const Literal& l) {
    if (l.symbol >= state.values.size()) {
      throw SignatureError("formula mentions a symbol outside the state");
    }
    return state.holds(l);
  });
}

bool satisfies(const FiniteWorld& world, const IFormula& phi) {
  return phi.evaluate([&](const TimedLiteral& t) {
    if (t.instant >= world.states.size()) {
      throw RangeError("instant " + std::to_string(t.instant) +
                       " is outside the world window");
    }
    const State& s = world.states[t.instant];
    if (t.literal.symbol >= s.values.size()) {
      throw SignatureError("formula mentions a symbol outside the state");
    }
    return s.holds(t.literal);
  });
}

bool herbrand_entails(const Formula& theta, const Formula& theta_prime) {
  std::map<Literal, std::size_t> atoms;
  auto collect = [&](const Literal& l) { atoms.try_emplace(l, atoms.size()); };
  theta.for_each_atom(collect);
  theta_prime.for_each_atom(collect);
  if (atoms.size() > 24) {
    throw std::length_error("too many distinct literals for entailment check");
  }
  const std::uint64_t rows = std::uint64_t{1} << atoms.size();
  for (std::uint64_t bits = 0; bits < rows; ++bits) {
    auto leaf = [&](const Literal& l) { return ((bits >> atoms[l]) & 1) != 0; };
    if (theta.evaluate(leaf) && !theta_prime.evaluate(leaf)) return false;
  }
  return true;
}

namespace {

void check_literal(const Signature& sig, const Literal& l) {
  if (l.symbol >= sig.symbol_count() ||
      l.value >= sig.values(l.symbol).size()) {
    throw SignatureError("literal outside the signature");
  }
}

}  // namespace

void check_formula(const Signature& sig, const Formula& phi) {
  phi.for_each_atom([&](const Literal& l) { check_literal(sig, l); });
}

void check_formula(const Signature& sig, const IFormula& phi) {
  phi.for_each_atom([&](const TimedLiteral& t) {
    check_literal(sig, t.literal);
    if (t.instant > sig.maxinst()) {
      throw RangeError("instant " + std::to_string(t.instant) +
                       " exceeds maxinst " + std::to_string(sig.maxinst()));
    }
  });
}

std::vector<FluentState> all_fluent_states(const Signature& sig) {
  std::vector<FluentState> out;
  FluentState current{std::vector<ValueId>(sig.fluent_count(), 0)};
  while (true) {
    out.push_back(current);
    std::size_t i = sig.fluent_count();
    while (i > 0) {
      --i;
      if (++current.values[i] < sig.values(static_cast<SymbolId>(i)).size()) {
        break;
      }
      current.values[i] = 0;
      if (i == 0) return out;
    }
    if (sig.fluent_count() == 0) return out;
  }
}

std::vector<std::vector<ValueId>> all_action_assignments(const Signature& sig) {
  const std::size_t n = sig.action_count();
  std::vector<std::vector<ValueId>> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::vector<ValueId> assignment(n);
    for (std::size_t k = 0; k < n; ++k) {
      assignment[k] = ((bits >> (n - 1 - k)) & 1) ? kFalse : kTrue;
    }
    out.push_back(std::move(assignment));
  }
  return out;
}

std::string to_string(const Signature& sig, Literal l) {
  return sig.name(l.symbol) + "=" + sig.value_name(l.symbol, l.value);
}

std::string to_string(const Signature& sig, const FluentState& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (i) os << ", ";
    os << to_string(sig, Literal{static_cast<SymbolId>(i), s.values[i]});
  }
  os << "}";
  return os.str();
}

std::string to_string(const Signature& sig, const State& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (i) os << ", ";
    os << to_string(sig, Literal{static_cast<SymbolId>(i), s.values[i]});
  }
  os << "}";
  return os.str();
}

std::string to_string(const Signature& sig, const PartialFluentState& x) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& l : x.literals()) {
    if (!first) os << ", ";
    first = false;
    os << to_string(sig, l);
  }
  os << "}";
  return os.str();
}

}  // namespace pec
