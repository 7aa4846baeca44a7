#include <gtest/gtest.h>

#include <random>

#include "pec/core.hpp"
#include "support/testing.hpp"

namespace pec {
namespace {

Signature coin_signature() {
  Signature sig;
  sig.add_fluent("Coin", {"Heads", "Tails"});
  sig.add_action("Toss");
  sig.set_maxinst(3);
  return sig;
}

TEST(Signature, FluentsPrecedeActions) {
  Signature sig = coin_signature();
  EXPECT_EQ(sig.fluent_count(), 1u);
  EXPECT_EQ(sig.action_count(), 1u);
  EXPECT_FALSE(sig.is_action(0));
  EXPECT_TRUE(sig.is_action(1));
  EXPECT_EQ(sig.action_symbol(0), 1u);
  EXPECT_EQ(sig.value_name(1, kTrue), "true");
  EXPECT_EQ(sig.value_name(1, kFalse), "false");
  EXPECT_TRUE(sig.is_boolean(1));
  EXPECT_FALSE(sig.is_boolean(0));
  EXPECT_THROW(sig.add_fluent("Late", {"a", "b"}), SignatureError);
}

TEST(Signature, Lookup) {
  Signature sig = coin_signature();
  EXPECT_EQ(sig.find("Coin"), SymbolId{0});
  EXPECT_EQ(sig.find("Toss"), SymbolId{1});
  EXPECT_FALSE(sig.find("Dice"));
  EXPECT_EQ(sig.find_value(0, "Tails"), ValueId{1});
  EXPECT_FALSE(sig.find_value(0, "Edge"));
}

TEST(PartialFluentState, SortedAndFunctional) {
  PartialFluentState x({{2, 0}, {0, 1}});
  ASSERT_EQ(x.size(), 2u);
  EXPECT_EQ(x.literals()[0].symbol, 0u);
  EXPECT_EQ(x.value_of(2), ValueId{0});
  EXPECT_FALSE(x.value_of(1));
  EXPECT_THROW(PartialFluentState({{0, 0}, {0, 1}}), SignatureError);
}

TEST(Update, OverridesMentionedFluents) {
  FluentState base{{0, 1, 2}};
  PartialFluentState delta({{1, 0}});
  EXPECT_EQ(update(base, delta), (FluentState{{0, 0, 2}}));
  EXPECT_EQ(update(base, PartialFluentState{}), base);
}

TEST(Update, IsIdempotentAndRightmostWins) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> v(0, 2), pick(0, 1);
  for (int round = 0; round < 500; ++round) {
    FluentState base{{ValueId(v(rng)), ValueId(v(rng)), ValueId(v(rng))}};
    std::vector<Literal> a, b;
    for (SymbolId f = 0; f < 3; ++f) {
      if (pick(rng)) a.push_back({f, ValueId(v(rng))});
      if (pick(rng)) b.push_back({f, ValueId(v(rng))});
    }
    PartialFluentState da(a), db(b);
    EXPECT_EQ(update(update(base, da), da), update(base, da));
    FluentState twice = update(update(base, da), db);
    for (SymbolId f = 0; f < 3; ++f) {
      ValueId expected = db.value_of(f)   ? *db.value_of(f)
                         : da.value_of(f) ? *da.value_of(f)
                                          : base[f];
      EXPECT_EQ(twice[f], expected);
    }
  }
}

TEST(EvalFormula, TreatsOrAndImpliesAsSugar) {
  State s{{0, kTrue}};  // Coin=Heads, Toss
  Formula heads = Formula::atom({0, 0});
  Formula tails = Formula::atom({0, 1});
  Formula toss = Formula::atom({1, kTrue});
  EXPECT_TRUE(eval_formula(s, heads));
  EXPECT_FALSE(eval_formula(s, tails));
  EXPECT_TRUE(eval_formula(s, Formula::disjunction(tails, toss)));
  EXPECT_FALSE(eval_formula(s, Formula::implication(toss, tails)));
  EXPECT_TRUE(eval_formula(s, Formula::implication(tails, heads)));
  EXPECT_TRUE(eval_formula(s, Formula::negation(tails)));
}

TEST(Satisfies, RejectsInstantsOutsideTheWorld) {
  FiniteWorld w{{State{{0, kFalse}}, State{{0, kTrue}}}};
  EXPECT_TRUE(satisfies(w, IFormula::atom({{1, kTrue}, 1})));
  EXPECT_FALSE(satisfies(w, IFormula::atom({{1, kTrue}, 0})));
  EXPECT_THROW(satisfies(w, IFormula::atom({{0, 0}, 2})), RangeError);
}

TEST(AtInstant, StampsEveryLiteral) {
  Formula theta = Formula::conjunction(Formula::atom({0, 1}), Formula::atom({1, 0}));
  IFormula phi = at_instant(theta, 4);
  phi.for_each_atom([](const TimedLiteral& t) { EXPECT_EQ(t.instant, 4u); });
}

TEST(HerbrandEntails, TreatsLiteralsAsIndependentAtoms) {
  Formula a = Formula::atom({1, kTrue});
  Formula heads = Formula::atom({0, 0});
  Formula tails = Formula::atom({0, 1});
  EXPECT_TRUE(herbrand_entails(Formula::conjunction(a, heads), a));
  EXPECT_FALSE(herbrand_entails(a, Formula::conjunction(a, heads)));
  // Coin=Heads does not rule out Coin=Tails when literals are atoms.
  EXPECT_FALSE(herbrand_entails(heads, Formula::negation(tails)));
  EXPECT_TRUE(herbrand_entails(heads, Formula::disjunction(heads, tails)));
}

TEST(HerbrandEntails, IsAPreorder) {
  Signature sig = coin_signature();
  std::mt19937_64 rng(3);
  for (int round = 0; round < 300; ++round) {
    Formula a = testing::random_formula(rng, sig, 3);
    Formula b = testing::random_formula(rng, sig, 3);
    Formula c = testing::random_formula(rng, sig, 3);
    EXPECT_TRUE(herbrand_entails(a, a));
    if (herbrand_entails(a, b) && herbrand_entails(b, c)) {
      EXPECT_TRUE(herbrand_entails(a, c));
    }
  }
}

TEST(Enumerators, LexicographicOrder) {
  Signature sig;
  sig.add_fluent("F", {"a", "b"});
  sig.add_fluent("G", {"x", "y", "z"});
  sig.add_action("A");
  sig.add_action("B");
  auto states = all_fluent_states(sig);
  ASSERT_EQ(states.size(), 6u);
  EXPECT_EQ(states.front(), (FluentState{{0, 0}}));
  EXPECT_EQ(states[1], (FluentState{{0, 1}}));
  EXPECT_EQ(states.back(), (FluentState{{1, 2}}));
  auto actions = all_action_assignments(sig);
  ASSERT_EQ(actions.size(), 4u);
  EXPECT_EQ(actions.front(), (std::vector<ValueId>{kTrue, kTrue}));
  EXPECT_EQ(actions.back(), (std::vector<ValueId>{kFalse, kFalse}));
}

TEST(States, SplitAndJoin) {
  Signature sig = coin_signature();
  State s = make_state(FluentState{{1}}, {kTrue});
  EXPECT_EQ(fluent_part(sig, s), FluentState{{1}});
  EXPECT_EQ(action_part(sig, s), std::vector<ValueId>{kTrue});
  EXPECT_EQ(to_string(sig, s), "{Coin=Tails, Toss=true}");
}

}  // namespace
}  // namespace pec
