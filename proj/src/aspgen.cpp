#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "pec/aspgen.hpp"

namespace pec {

namespace {

std::vector<Conjunction> dnf(const Formula& f, bool positive) {
  switch (f.op()) {
    case Connective::kAtom:
      return {{SignedLiteral{f.atom(), positive}}};
    case Connective::kNot:
      return dnf(f.lhs(), !positive);
    default:
      break;
  }
  // a -> b is !a | b. Under negation AND and OR swap (De Morgan).
  const bool implies = f.op() == Connective::kImplies;
  const bool lhs_sign = implies ? !positive : positive;
  const bool is_and = (f.op() == Connective::kAnd) == positive;
  auto left = dnf(f.lhs(), lhs_sign);
  auto right = dnf(f.rhs(), positive);
  if (!is_and) {
    left.insert(left.end(), right.begin(), right.end());
    return left;
  }
  std::vector<Conjunction> out;
  for (const auto& l : left) {
    for (const auto& r : right) {
      Conjunction c = l;
      for (const auto& lit : r) {
        if (std::find(c.begin(), c.end(), lit) == c.end()) c.push_back(lit);
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

bool contradictory(const Conjunction& c) {
  for (const auto& a : c) {
    for (const auto& b : c) {
      if (a.literal == b.literal && a.positive != b.positive) return true;
    }
  }
  return false;
}

/// Symbol and value constants, checked once for collisions.
class Names {
 public:
  explicit Names(const Signature& sig) {
    std::map<std::string, SymbolId> seen;
    for (SymbolId s = 0; s < sig.symbol_count(); ++s) {
      auto id = asp_identifier(sig.name(s));
      auto [it, fresh] = seen.emplace(id, s);
      if (!fresh) {
        throw NameCollision("symbols '" + sig.name(it->second) + "' and '" +
                            sig.name(s) + "' both translate to '" + id + "'");
      }
      symbols_.push_back(id);
      std::map<std::string, ValueId> values_seen;
      std::vector<std::string> values;
      for (ValueId v = 0; v < sig.values(s).size(); ++v) {
        auto vid = asp_identifier(sig.value_name(s, v));
        auto [vit, vfresh] = values_seen.emplace(vid, v);
        if (!vfresh) {
          throw NameCollision("values '" + sig.value_name(s, vit->second) +
                              "' and '" + sig.value_name(s, v) + "' of '" +
                              sig.name(s) + "' both translate to '" + vid +
                              "'");
        }
        values.push_back(vid);
      }
      values_.push_back(std::move(values));
    }
  }

  const std::string& symbol(SymbolId s) const { return symbols_[s]; }
  std::string pair(const Literal& l) const {
    return "(" + symbols_[l.symbol] + "," + values_[l.symbol][l.value] + ")";
  }
  const std::string& value(SymbolId s, ValueId v) const { return values_[s][v]; }

 private:
  std::vector<std::string> symbols_;
  std::vector<std::vector<std::string>> values_;
};

std::string outcome_id(std::size_t prop, std::size_t outcome) {
  return "id_" + std::to_string(prop) + "_" + std::to_string(outcome);
}

void belongs_to(std::vector<std::string>& out, const Names& names,
                const Outcome& o, const std::string& id) {
  for (const auto& l : o.effect.literals()) {
    out.push_back("belongsTo(" + names.pair(l) + ", " + id + ").");
  }
}

std::string body_text(const Names& names, const Conjunction& c) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ", ";
    if (!c[k].positive) out += "not ";
    out += "holds((" + names.pair(c[k].literal) + ", I))";
  }
  return out;
}

}  // namespace

std::vector<Conjunction> to_dnf(const Formula& phi) {
  auto all = dnf(phi, true);
  std::vector<Conjunction> out;
  for (auto& c : all) {
    if (!contradictory(c)) out.push_back(std::move(c));
  }
  return out;
}

std::string asp_identifier(std::string_view name) {
  std::string out(name);
  if (!out.empty()) {
    out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
  }
  std::replace(out.begin(), out.end(), '-', '_');
  return out;
}

std::vector<std::string> translate(const DomainDescription& dd) {
  const Signature& sig = dd.sig();
  const Names names(sig);
  std::vector<std::string> out;

  out.push_back("#const maxinst=" + std::to_string(sig.maxinst()) + ".");
  for (SymbolId s = 0; s < sig.fluent_count(); ++s) {
    out.push_back("fluent(" + names.symbol(s) + ").");
  }
  for (std::size_t k = 0; k < sig.action_count(); ++k) {
    out.push_back("action(" + names.symbol(sig.action_symbol(k)) + ").");
  }
  out.push_back("instant(0..maxinst).");

  for (const auto& vp : dd.vprops) {
    for (ValueId v : vp.values) {
      out.push_back("possVal(" + names.symbol(vp.fluent) + "," +
                    names.value(vp.fluent, v) + ").");
    }
  }

  for (std::size_t j = 0; j < dd.iprop.head.size(); ++j) {
    const Outcome& o = dd.iprop.head[j];
    const std::string id = outcome_id(0, j + 1);
    belongs_to(out, names, o, id);
    out.push_back("initialCondition((" + id + ", " + format_fraction(o.weight) +
                  ")).");
  }

  for (std::size_t n = 0; n < dd.cprops.size(); ++n) {
    const auto& c = dd.cprops[n];
    const auto disjuncts = to_dnf(c.body);
    for (std::size_t j = 0; j < c.head.size(); ++j) {
      const Outcome& o = c.head[j];
      const std::string id = outcome_id(n + 1, j + 1);
      belongs_to(out, names, o, id);
      for (const auto& d : disjuncts) {
        out.push_back("causesOutcome((" + id + ", " +
                      format_fraction(o.weight) + "), I) :- " +
                      body_text(names, d) + ".");
      }
    }
  }

  for (const auto& p : dd.pprops) {
    out.push_back("performed(" + names.symbol(p.action) + "," +
                  std::to_string(p.instant) + "," + format_fraction(p.prob) +
                  ").");
  }
  return out;
}

const std::vector<std::string>& domain_independent() {
  static const std::vector<std::string> axioms = {
      "possVal(A,true) :- action(A).",
      "possVal(A,false) :- action(A).",
      "fluentOrAction(X) :- fluent(X).",
      "fluentOrAction(X) :- action(X).",
      "literal((X,V)) :- possVal(X,V).",
      "iLiteral((L,I)) :- literal(L), instant(I).",
      "definitelyPerformed(A,I) :- performed(A,I,1).",
      "possiblyPerformed(A,I) :- performed(A,I,P).",
      "1{ holds(((X,V),I)) : iLiteral(((X,V),I)) }1 :- instant(I), "
      "fluentOrAction(X).",
      "inOcc(I) :- instant(I), causesOutcome(O,I).",
      "1{ effectChoice(O,I) : causesOutcome(O,I) }1 :- inOcc(I).",
      "1{ initialChoice(O) : initialCondition(O) }1.",
      ":- action(A), instant(I), holds(((A,true),I)), "
      "not possiblyPerformed(A,I).",
      ":- action(A), instant(I), holds(((A,false),I)), "
      "definitelyPerformed(A,I).",
      ":- initialChoice((S,P)), literal(L), belongsTo(L,S), not holds((L,0)).",
      ":- instant(I), effectChoice((X,P),I), fluent(F), belongsTo((F,V),X), "
      "not holds(((F,V),I+1)), I<maxinst.",
      ":- instant(I), fluent(F), not holds(((F,V),I)), effectChoice((X,P),I), "
      "not belongsTo((F,V),X), holds(((F,V),I+1)), I<maxinst.",
      ":- fluent(F), instant(I), holds(((F,V),I)), not inOcc(I), "
      "not holds(((F,V),I+1)), I<maxinst.",
      "eval(A,I,P) :- action(A), instant(I), performed(A,I,P), "
      "holds(((A,true),I)).",
      "eval(A,I,1-P) :- action(A), instant(I), performed(A,I,P), "
      "holds(((A,false),I)).",
  };
  return axioms;
}

void emit(std::ostream& out, const DomainDescription& dd, bool with_axioms) {
  // Translate first so a name collision leaves `out` untouched.
  const auto clauses = translate(dd);
  out << "% Probabilistic Event Calculus domain, translated to ASP.\n";
  for (const auto& c : clauses) out << c << "\n";
  if (with_axioms) {
    out << "\n% Domain-independent axioms.\n";
    for (const auto& a : domain_independent()) out << a << "\n";
  }
}

std::string emit(const DomainDescription& dd, bool with_axioms) {
  std::ostringstream os;
  emit(os, dd, with_axioms);
  return os.str();
}

}  // namespace pec
