// Well-formedness checks for raw domain descriptions and construction of the
// validated form.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pec/syntax.hpp"
#include "syntax_internal.hpp"

namespace pec {

std::string_view violation_tag(Violation v) {
  switch (v) {
    case Violation::kMultipleCausalEntailment: return "condition (i)";
    case Violation::kMissingInitial: return "condition (ii)";
    case Violation::kMultipleInitial: return "condition (ii)";
    case Violation::kDuplicateValueDecl: return "condition (iii)";
    case Violation::kMissingValueDecl: return "condition (iii)";
    case Violation::kDuplicateOccurrence: return "condition (iv)";
    case Violation::kMaxinst: return "maxinst";
    case Violation::kUnknownSymbol: return "unknown-symbol";
    case Violation::kUnknownValue: return "unknown-value";
    case Violation::kDuplicateValue: return "duplicate-value";
    case Violation::kSymbolClash: return "symbol-clash";
    case Violation::kWeightRange: return "weight-range";
    case Violation::kWeightSum: return "weight-sum";
    case Violation::kNonTotalInitial: return "non-total-initial";
    case Violation::kDuplicateEffect: return "duplicate-effect";
    case Violation::kBodyWithoutAction: return "body-without-action";
    case Violation::kOccurrenceInstant: return "occurrence-instant";
    case Violation::kNotAnAction: return "not-an-action";
  }
  return "violation";
}

namespace {

std::string summarize(const std::vector<Diagnostic>& diagnostics) {
  std::ostringstream os;
  os << "invalid domain description (" << diagnostics.size() << " problem"
     << (diagnostics.size() == 1 ? "" : "s") << ")";
  for (const auto& d : diagnostics) {
    os << "\n" << d.where.line << ":" << d.where.column << ": "
       << violation_tag(d.kind) << ": " << d.message;
  }
  return os.str();
}

}  // namespace

InvalidDomain::InvalidDomain(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

bool operator==(const DomainDescription& a, const DomainDescription& b) {
  return *a.signature == *b.signature && a.vprops == b.vprops &&
         a.cprops == b.cprops && a.iprop == b.iprop && a.pprops == b.pprops;
}

namespace detail {

std::optional<Literal> resolve_literal(const Signature& sig,
                                       const RawLiteral& raw,
                                       Diagnostic* error) {
  auto symbol = sig.find(raw.subject);
  if (!symbol) {
    *error = {Violation::kUnknownSymbol, raw.where,
              "unknown symbol '" + raw.subject + "'"};
    return std::nullopt;
  }
  std::string_view value_name =
      raw.value ? std::string_view(*raw.value)
                : (raw.negated ? kFalseName : kTrueName);
  if (!raw.value && !sig.is_boolean(*symbol)) {
    *error = {Violation::kUnknownValue, raw.where,
              "'" + raw.subject + "' is not boolean; write " + raw.subject +
                  "=<value>"};
    return std::nullopt;
  }
  auto value = sig.find_value(*symbol, value_name);
  if (!value) {
    *error = {Violation::kUnknownValue, raw.where,
              "'" + std::string(value_name) + "' is not a value of '" +
                  raw.subject + "'"};
    return std::nullopt;
  }
  return Literal{*symbol, *value};
}

}  // namespace detail

namespace {

class Analyzer {
 public:
  explicit Analyzer(const RawDomain& raw) : raw_(raw) {}

  std::vector<Diagnostic> run() {
    check_maxinst();
    declare_symbols();
    check_initial();
    check_causal();
    check_occurrences();
    return std::move(diagnostics_);
  }

  DomainDescription result() {
    dd_.signature = std::make_shared<const Signature>(sig_);
    return std::move(dd_);
  }

 private:
  void report(Violation kind, SourceLocation where, std::string message) {
    diagnostics_.push_back({kind, where, std::move(message)});
  }

  void check_maxinst() {
    if (raw_.maxinst.empty()) {
      report(Violation::kMaxinst, {1, 1}, "missing 'maxinst' statement");
      return;
    }
    for (std::size_t i = 1; i < raw_.maxinst.size(); ++i) {
      report(Violation::kMaxinst, raw_.maxinst[i].where,
             "more than one 'maxinst' statement");
    }
    const auto& m = raw_.maxinst.front();
    if (m.value < 1) {
      report(Violation::kMaxinst, m.where, "maxinst must be at least 1");
      return;
    }
    maxinst_ = m.value;
    sig_.set_maxinst(m.value);
  }

  void declare_symbols() {
    std::set<std::string> action_names;
    for (const auto& a : raw_.actions) action_names.insert(a.action);

    if (raw_.fluents.empty()) {
      report(Violation::kMissingValueDecl, {1, 1},
             "no v-proposition: at least one fluent must be declared");
    }
    for (const auto& decl : raw_.fluents) {
      if (sig_.find(decl.fluent)) {
        report(Violation::kDuplicateValueDecl, decl.where,
               "second v-proposition for fluent '" + decl.fluent + "'");
        continue;
      }
      if (action_names.count(decl.fluent)) {
        report(Violation::kSymbolClash, decl.where,
               "'" + decl.fluent + "' is declared both as fluent and action");
        continue;
      }
      std::set<std::string> seen;
      bool ok = true;
      for (const auto& v : decl.values) {
        if (!seen.insert(v).second) {
          report(Violation::kDuplicateValue, decl.where,
                 "value '" + v + "' listed twice for '" + decl.fluent + "'");
          ok = false;
        }
      }
      if (!ok) continue;
      SymbolId id = sig_.add_fluent(decl.fluent, decl.values);
      ValueProposition vp{id, {}};
      for (std::size_t k = 0; k < decl.values.size(); ++k) {
        vp.values.push_back(static_cast<ValueId>(k));
      }
      dd_.vprops.push_back(std::move(vp));
    }
    for (const auto& a : raw_.actions) {
      if (auto existing = sig_.find(a.action)) {
        if (sig_.is_action(*existing)) {
          report(Violation::kSymbolClash, a.where,
                 "action '" + a.action + "' declared twice");
        }
        continue;
      }
      sig_.add_action(a.action);
    }
  }

  std::optional<Literal> resolve(const RawLiteral& raw) {
    Diagnostic error;
    auto lit = detail::resolve_literal(sig_, raw, &error);
    if (!lit) diagnostics_.push_back(std::move(error));
    return lit;
  }

  std::optional<Formula> resolve(const RawFormula& raw) {
    bool ok = true;
    Formula f = raw.transform([&](const RawLiteral& l) {
      auto lit = resolve(l);
      if (!lit) ok = false;
      return lit.value_or(Literal{});
    });
    if (!ok) return std::nullopt;
    return f;
  }

  /// Resolves and checks one head. Returns nullopt if any outcome is broken.
  std::optional<std::vector<Outcome>> resolve_head(
      const std::vector<RawOutcome>& head) {
    std::vector<Outcome> out;
    bool ok = true;
    for (const auto& raw : head) {
      std::vector<Literal> literals;
      std::set<SymbolId> mentioned;
      for (const auto& rl : raw.effect) {
        auto lit = resolve(rl);
        if (!lit) {
          ok = false;
          continue;
        }
        if (sig_.is_action(lit->symbol)) {
          report(Violation::kUnknownSymbol, rl.where,
                 "effects may only mention fluents; '" + rl.subject +
                     "' is an action");
          ok = false;
          continue;
        }
        if (!mentioned.insert(lit->symbol).second) {
          report(Violation::kDuplicateValue, rl.where,
                 "fluent '" + rl.subject + "' assigned twice in one outcome");
          ok = false;
          continue;
        }
        literals.push_back(*lit);
      }
      if (raw.weight <= 0 || raw.weight > 1) {
        report(Violation::kWeightRange, raw.where,
               "outcome weight " + format_fraction(raw.weight) +
                   " is outside (0,1]");
        ok = false;
      }
      out.push_back({PartialFluentState(std::move(literals)), raw.weight});
    }
    if (!ok) return std::nullopt;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        if (out[i].effect == out[j].effect) {
          report(Violation::kDuplicateEffect, head[j].where,
                 "outcome repeats the effect of an earlier outcome");
          return std::nullopt;
        }
      }
    }
    return out;
  }

  void check_initial() {
    if (raw_.initial.empty()) {
      report(Violation::kMissingInitial, {1, 1}, "no i-proposition");
      return;
    }
    for (std::size_t i = 1; i < raw_.initial.size(); ++i) {
      report(Violation::kMultipleInitial, raw_.initial[i].where,
             "more than one i-proposition");
    }
    const auto& init = raw_.initial.front();
    auto head = resolve_head(init.head);
    if (!head) return;
    bool ok = true;
    for (std::size_t k = 0; k < head->size(); ++k) {
      if (!(*head)[k].effect.is_total(sig_.fluent_count())) {
        report(Violation::kNonTotalInitial, init.head[k].where,
               "initial outcome must assign every fluent");
        ok = false;
      }
    }
    Probability sum = total_weight(*head);
    if (sum != 1) {
      report(Violation::kWeightSum, init.where,
             "i-proposition weights sum to " + format_fraction(sum) +
                 ", not 1");
      ok = false;
    }
    if (ok) dd_.iprop.head = std::move(*head);
  }

  bool mentions_action(const Formula& body) const {
    for (std::size_t k = 0; k < sig_.action_count(); ++k) {
      Formula a = Formula::atom(Literal{sig_.action_symbol(k), kTrue});
      if (herbrand_entails(body, a)) return true;
    }
    return false;
  }

  void check_causal() {
    std::vector<std::pair<Formula, SourceLocation>> bodies;
    for (const auto& c : raw_.causal) {
      auto body = resolve(c.body);
      auto head = resolve_head(c.head);
      if (!body) continue;
      if (!mentions_action(*body)) {
        report(Violation::kBodyWithoutAction, c.where,
               "c-proposition body does not entail any action");
      }
      for (const auto& [other, where] : bodies) {
        if (herbrand_entails(other, *body) || herbrand_entails(*body, other)) {
          std::ostringstream os;
          os << "body entails (or is entailed by) the body of the "
                "c-proposition at line "
             << where.line;
          report(Violation::kMultipleCausalEntailment, c.where, os.str());
        }
      }
      bodies.emplace_back(*body, c.where);
      if (!head) continue;

      Probability sum = total_weight(*head);
      bool has_empty = std::any_of(head->begin(), head->end(),
                                   [](const Outcome& o) { return o.effect.empty(); });
      if (sum != 1) {
        if (sum < 1 && !has_empty) {
          head->push_back({PartialFluentState{}, Probability(1) - sum});
        } else {
          report(Violation::kWeightSum, c.where,
                 "c-proposition weights sum to " + format_fraction(sum) +
                     (has_empty ? " with an explicit empty outcome" : "") +
                     ", not 1");
          continue;
        }
      }
      dd_.cprops.push_back({*body, std::move(*head)});
    }
  }

  void check_occurrences() {
    std::set<std::pair<SymbolId, Instant>> seen;
    for (const auto& p : raw_.occurrences) {
      auto symbol = sig_.find(p.action);
      if (!symbol) {
        report(Violation::kUnknownSymbol, p.where,
               "unknown action '" + p.action + "'");
        continue;
      }
      if (!sig_.is_action(*symbol)) {
        report(Violation::kNotAnAction, p.where,
               "'" + p.action + "' is a fluent, not an action");
        continue;
      }
      bool ok = true;
      if (maxinst_ && p.instant >= *maxinst_) {
        report(Violation::kOccurrenceInstant, p.where,
               "p-proposition at instant " + std::to_string(p.instant) +
                   " needs a later instant (maxinst is " +
                   std::to_string(*maxinst_) + ")");
        ok = false;
      }
      if (p.prob <= 0 || p.prob > 1) {
        report(Violation::kWeightRange, p.where,
               "occurrence probability " + format_fraction(p.prob) +
                   " is outside (0,1]");
        ok = false;
      }
      if (!seen.insert({*symbol, p.instant}).second) {
        report(Violation::kDuplicateOccurrence, p.where,
               "second p-proposition for '" + p.action + "' at instant " +
                   std::to_string(p.instant));
        ok = false;
      }
      if (ok) dd_.pprops.push_back({*symbol, p.instant, p.prob});
    }
  }

  const RawDomain& raw_;
  Signature sig_;
  std::optional<Instant> maxinst_;
  std::vector<Diagnostic> diagnostics_;
  DomainDescription dd_;
};

}  // namespace

std::vector<Diagnostic> validate(const RawDomain& raw) {
  return Analyzer(raw).run();
}

DomainDescription build(const RawDomain& raw) {
  Analyzer analyzer(raw);
  auto diagnostics = analyzer.run();
  if (!diagnostics.empty()) throw InvalidDomain(std::move(diagnostics));
  return analyzer.result();
}

}  // namespace pec
