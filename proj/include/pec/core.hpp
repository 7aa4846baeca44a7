// Domain vocabulary, states, formulas and the fluent-state update algebra.

#ifndef PEC_CORE_HPP_
#define PEC_CORE_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pec/formula.hpp"
#include "pec/probability.hpp"

namespace pec {

using SymbolId = std::uint32_t;
using ValueId = std::uint32_t;
using Instant = std::uint32_t;

/// Value indices of every action symbol.
inline constexpr ValueId kTrue = 0;
inline constexpr ValueId kFalse = 1;
inline constexpr std::string_view kTrueName = "true";
inline constexpr std::string_view kFalseName = "false";

class SignatureError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Fluents, actions, their value sets and the instant window {0..maxinst}.
///
/// Fluents occupy symbol ids [0, fluent_count()) in declaration order and
/// actions follow them. Every action implicitly takes the values
/// {true, false}.
class Signature {
 public:
  Signature() = default;

  SymbolId add_fluent(std::string name, std::vector<std::string> values);
  SymbolId add_action(std::string name);
  void set_maxinst(Instant maxinst) { maxinst_ = maxinst; }

  std::size_t fluent_count() const { return fluent_count_; }
  std::size_t action_count() const { return names_.size() - fluent_count_; }
  std::size_t symbol_count() const { return names_.size(); }
  Instant maxinst() const { return maxinst_; }

  bool is_action(SymbolId s) const { return s >= fluent_count_; }
  SymbolId action_symbol(std::size_t index) const {
    return static_cast<SymbolId>(fluent_count_ + index);
  }
  const std::string& name(SymbolId s) const { return names_.at(s); }
  const std::vector<std::string>& values(SymbolId s) const {
    return values_.at(s);
  }
  const std::string& value_name(SymbolId s, ValueId v) const {
    return values_.at(s).at(v);
  }
  /// True when vals(s) = {true, false}, so `s` / `!s` shorthand applies.
  bool is_boolean(SymbolId s) const;

  std::optional<SymbolId> find(std::string_view name) const;
  std::optional<ValueId> find_value(SymbolId s, std::string_view value) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::string>> values_;
  std::size_t fluent_count_ = 0;
  Instant maxinst_ = 0;
};

using SignaturePtr = std::shared_ptr<const Signature>;

struct Literal {
  SymbolId symbol = 0;
  ValueId value = 0;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct TimedLiteral {
  Literal literal;
  Instant instant = 0;
  friend auto operator<=>(const TimedLiteral&, const TimedLiteral&) = default;
};

using Formula = BasicFormula<Literal>;
using IFormula = BasicFormula<TimedLiteral>;

/// `[theta]@instant`: stamps every literal of `theta` with `instant`.
IFormula at_instant(const Formula& theta, Instant instant);

/// A total assignment over fluents and actions, indexed by SymbolId.
struct State {
  std::vector<ValueId> values;

  ValueId operator[](SymbolId s) const { return values[s]; }
  bool holds(Literal l) const { return values[l.symbol] == l.value; }
  friend auto operator<=>(const State&, const State&) = default;
};

/// A total assignment over fluents only (S restricted to F).
struct FluentState {
  std::vector<ValueId> values;

  ValueId operator[](SymbolId s) const { return values[s]; }
  friend auto operator<=>(const FluentState&, const FluentState&) = default;
};

/// At most one value per fluent, stored sorted by fluent id.
class PartialFluentState {
 public:
  PartialFluentState() = default;
  /// Throws SignatureError if two literals mention the same fluent.
  explicit PartialFluentState(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  bool empty() const { return literals_.empty(); }
  std::size_t size() const { return literals_.size(); }
  std::optional<ValueId> value_of(SymbolId fluent) const;
  /// True when the partial state mentions every one of `fluent_count` fluents.
  bool is_total(std::size_t fluent_count) const {
    return literals_.size() == fluent_count;
  }
  FluentState to_fluent_state(std::size_t fluent_count) const;

  friend auto operator<=>(const PartialFluentState&,
                          const PartialFluentState&) = default;

 private:
  std::vector<Literal> literals_;
};

struct Outcome {
  PartialFluentState effect;
  Probability weight;
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// pi(B): the summed weight of a set of outcomes.
Probability total_weight(const std::vector<Outcome>& outcomes);

/// A world restricted to the instant window: one total state per instant.
struct FiniteWorld {
  std::vector<State> states;

  const State& at(Instant i) const { return states.at(i); }
  friend auto operator<=>(const FiniteWorld&, const FiniteWorld&) = default;
};

/// Builds a state from a fluent state and an action assignment
/// (`actions[k]` is the value of the k-th action).
State make_state(const FluentState& fluents, const std::vector<ValueId>& actions);
FluentState fluent_part(const Signature& sig, const State& s);
std::vector<ValueId> action_part(const Signature& sig, const State& s);

/// base (+) delta: delta's values override base on the fluents it mentions.
FluentState update(const FluentState& base, const PartialFluentState& delta);

/// Propositional truth of `phi` under the total valuation induced by `state`.
bool eval_formula(const State& state, const Formula& phi);

/// W |= phi. Throws RangeError if phi mentions an instant outside the world.
bool satisfies(const FiniteWorld& world, const IFormula& phi);

/// Propositional entailment with literals read as independent atoms.
bool herbrand_entails(const Formula& theta, const Formula& theta_prime);

/// Checks that every literal in `phi` is in the vocabulary of `sig`.
void check_formula(const Signature& sig, const Formula& phi);
void check_formula(const Signature& sig, const IFormula& phi);

/// All total fluent states of `sig`, lexicographic by value index.
std::vector<FluentState> all_fluent_states(const Signature& sig);
/// All action assignments, lexicographic by value index (all-true first).
std::vector<std::vector<ValueId>> all_action_assignments(const Signature& sig);

std::string to_string(const Signature& sig, Literal l);
std::string to_string(const Signature& sig, const FluentState& s);
std::string to_string(const Signature& sig, const State& s);
std::string to_string(const Signature& sig, const PartialFluentState& x);

}  // namespace pec

#endif  // PEC_CORE_HPP_
