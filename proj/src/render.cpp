#include <sstream>

#include "pec/syntax.hpp"

namespace pec {

namespace {

std::string render_literal(const Signature& sig, const Literal& l) {
  if (sig.is_boolean(l.symbol)) {
    const std::string& value = sig.value_name(l.symbol, l.value);
    if (value == kTrueName) return sig.name(l.symbol);
    if (value == kFalseName) return "!" + sig.name(l.symbol);
  }
  return to_string(sig, l);
}

template <typename Atom, typename AtomText>
std::string render_tree(const BasicFormula<Atom>& f, const AtomText& atom_text,
                        bool top) {
  switch (f.op()) {
    case Connective::kAtom:
      return atom_text(f.atom());
    case Connective::kNot: {
      BasicFormula<Atom> inner = f.lhs();
      std::string body = render_tree(inner, atom_text, false);
      // A bare `!` before a literal would read as the boolean shorthand.
      if (inner.is_atom() || inner.op() == Connective::kNot) {
        return "!(" + body + ")";
      }
      return "!" + body;
    }
    default: {
      const char* op = f.op() == Connective::kAnd  ? " & "
                       : f.op() == Connective::kOr ? " | "
                                                   : " -> ";
      std::string text = render_tree(f.lhs(), atom_text, false) + op +
                         render_tree(f.rhs(), atom_text, false);
      return top ? text : "(" + text + ")";
    }
  }
}

std::string render_outcomes(const Signature& sig,
                            const std::vector<Outcome>& outcomes) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (i) os << ",\n   ";
    os << "({";
    const auto& lits = outcomes[i].effect.literals();
    for (std::size_t k = 0; k < lits.size(); ++k) {
      if (k) os << ", ";
      os << render_literal(sig, lits[k]);
    }
    os << "}, " << format_fraction(outcomes[i].weight) << ")";
  }
  os << "}";
  return os.str();
}

}  // namespace

std::string render_formula(const Signature& sig, const Formula& phi) {
  return render_tree(
      phi, [&](const Literal& l) { return render_literal(sig, l); }, true);
}

std::string render_query(const Signature& sig, const IFormula& phi) {
  return render_tree(
      phi,
      [&](const TimedLiteral& t) {
        return "[" + render_literal(sig, t.literal) + "]@" +
               std::to_string(t.instant);
      },
      true);
}

std::string render(const DomainDescription& dd) {
  const Signature& sig = dd.sig();
  std::ostringstream os;
  os << "maxinst " << sig.maxinst() << "\n\n";
  for (const auto& vp : dd.vprops) {
    os << "fluent " << sig.name(vp.fluent) << " takes-values {";
    for (std::size_t k = 0; k < vp.values.size(); ++k) {
      if (k) os << ", ";
      os << sig.value_name(vp.fluent, vp.values[k]);
    }
    os << "}\n";
  }
  for (std::size_t k = 0; k < sig.action_count(); ++k) {
    os << "action " << sig.name(sig.action_symbol(k)) << "\n";
  }
  os << "\ninitially-one-of " << render_outcomes(sig, dd.iprop.head) << "\n";
  for (const auto& c : dd.cprops) {
    os << "\n" << render_formula(sig, c.body) << " causes-one-of\n  "
       << render_outcomes(sig, c.head) << "\n";
  }
  if (!dd.pprops.empty()) os << "\n";
  for (const auto& p : dd.pprops) {
    os << sig.name(p.action) << " performed-at " << p.instant;
    if (p.prob != 1) os << " with-prob " << format_fraction(p.prob);
    os << "\n";
  }
  return os.str();
}

}  // namespace pec
