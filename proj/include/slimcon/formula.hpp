#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "slimcon/structures.hpp"

namespace slimcon {

// First-order term: a variable or a function application.
struct Term {
  enum class Kind { Var, App };
  Kind kind = Kind::Var;
  std::string name;
  std::vector<Term> args;

  static Term var(std::string n) { return {Kind::Var, std::move(n), {}}; }
  static Term app(std::string f, std::vector<Term> as) {
    return {Kind::App, std::move(f), std::move(as)};
  }

  bool operator==(const Term&) const = default;
};

// Immutable first-order formula with equality. Conjunction and disjunction are
// n-ary and kept flattened, so printing and re-parsing reproduce the tree.
class Formula {
 public:
  enum class Kind { Rel, Eq, Not, And, Or, Implies, Forall, Exists };

  struct Node {
    Kind kind;
    std::string name;              // relation (Rel) or bound variable (Forall/Exists)
    std::vector<Term> terms;       // Rel arguments; Eq stores [lhs, rhs]
    std::vector<Formula> children;
  };

  Kind kind() const { return node_->kind; }
  const Node& node() const { return *node_; }
  const Node* nodePtr() const { return node_.get(); }

  static Formula rel(std::string name, std::vector<Term> args);
  static Formula eq(Term a, Term b);
  static Formula lnot(Formula f);
  static Formula land(std::vector<Formula> fs);   // flattens; singleton collapses
  static Formula lor(std::vector<Formula> fs);    // flattens; singleton collapses
  static Formula implies(Formula a, Formula b);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  std::vector<std::string> freeVariables() const;

  // Structural equality.
  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  friend Formula makeFormulaNode(std::shared_ptr<const Node> n);
  std::shared_ptr<const Node> node_;
};

// Concrete syntax, accepted back by parse(). "<=" relations print infix,
// everything else prefix.
std::string prettyPrint(const Formula& f);

std::string toString(const Term& t);

// Checks that every relation/function symbol used by f exists in sig with the
// right arity; throws InvalidStructure otherwise.
void checkSymbols(const Formula& f, const Signature& sig);

using Valuation = std::map<std::string, int>;

}  // namespace slimcon
