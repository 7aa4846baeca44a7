// Immutable propositional formula trees over an arbitrary atom type.

#ifndef PEC_FORMULA_HPP_
#define PEC_FORMULA_HPP_

#include <cassert>
#include <memory>
#include <optional>
#include <type_traits>
#include <utility>

namespace pec {

enum class Connective { kAtom, kNot, kAnd, kOr, kImplies };

/// A formula is a shared, immutable tree; copies are cheap and never alias
/// mutable state. OR and IMPLIES are kept as written so that rendering
/// reproduces the source, but every evaluator treats them as the usual
/// abbreviations over AND and NOT.
template <typename Atom>
class BasicFormula {
 public:
  static BasicFormula atom(Atom a) {
    return BasicFormula(std::make_shared<const Node>(
        Node{Connective::kAtom, std::move(a), {}, {}}));
  }
  static BasicFormula negation(BasicFormula f) {
    return BasicFormula(std::make_shared<const Node>(
        Node{Connective::kNot, std::nullopt, std::move(f.node_), {}}));
  }
  static BasicFormula conjunction(BasicFormula a, BasicFormula b) {
    return binary(Connective::kAnd, std::move(a), std::move(b));
  }
  static BasicFormula disjunction(BasicFormula a, BasicFormula b) {
    return binary(Connective::kOr, std::move(a), std::move(b));
  }
  static BasicFormula implication(BasicFormula a, BasicFormula b) {
    return binary(Connective::kImplies, std::move(a), std::move(b));
  }
  static BasicFormula binary(Connective op, BasicFormula a, BasicFormula b) {
    assert(op == Connective::kAnd || op == Connective::kOr ||
           op == Connective::kImplies);
    return BasicFormula(std::make_shared<const Node>(
        Node{op, std::nullopt, std::move(a.node_), std::move(b.node_)}));
  }

  Connective op() const { return node_->op; }
  bool is_atom() const { return node_->op == Connective::kAtom; }
  const Atom& atom() const { return *node_->atom; }
  /// Operand of NOT, or left operand of a binary connective.
  BasicFormula lhs() const { return BasicFormula(node_->lhs); }
  BasicFormula rhs() const { return BasicFormula(node_->rhs); }

  /// Evaluates under the valuation `leaf(atom) -> bool`.
  template <typename Leaf>
  bool evaluate(Leaf&& leaf) const {
    switch (node_->op) {
      case Connective::kAtom:
        return leaf(*node_->atom);
      case Connective::kNot:
        return !lhs().evaluate(leaf);
      case Connective::kAnd:
        return lhs().evaluate(leaf) && rhs().evaluate(leaf);
      case Connective::kOr:
        return lhs().evaluate(leaf) || rhs().evaluate(leaf);
      case Connective::kImplies:
        return !lhs().evaluate(leaf) || rhs().evaluate(leaf);
    }
    return false;
  }

  template <typename Visit>
  void for_each_atom(Visit&& visit) const {
    if (node_->op == Connective::kAtom) {
      visit(*node_->atom);
      return;
    }
    lhs().for_each_atom(visit);
    if (node_->rhs) rhs().for_each_atom(visit);
  }

  /// Rebuilds the tree with every atom replaced by `map(atom)`.
  template <typename Map>
  auto transform(Map&& map) const
      -> BasicFormula<std::invoke_result_t<Map&, const Atom&>> {
    using Out = BasicFormula<std::invoke_result_t<Map&, const Atom&>>;
    switch (node_->op) {
      case Connective::kAtom:
        return Out::atom(map(*node_->atom));
      case Connective::kNot:
        return Out::negation(lhs().transform(map));
      default:
        return Out::binary(node_->op, lhs().transform(map),
                           rhs().transform(map));
    }
  }

  friend bool operator==(const BasicFormula& a, const BasicFormula& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->op != b.node_->op) return false;
    if (a.is_atom()) return a.atom() == b.atom();
    if (!(a.lhs() == b.lhs())) return false;
    return a.op() == Connective::kNot || a.rhs() == b.rhs();
  }

 private:
  template <typename>
  friend class BasicFormula;

  struct Node {
    Connective op;
    std::optional<Atom> atom;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit BasicFormula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace pec

#endif  // PEC_FORMULA_HPP_
