#include "slimcon/formula.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace slimcon {

namespace {

std::shared_ptr<const Formula::Node> make(Formula::Kind k, std::string name,
                                          std::vector<Term> terms,
                                          std::vector<Formula> children) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = k;
  n->name = std::move(name);
  n->terms = std::move(terms);
  n->children = std::move(children);
  return n;
}

}  // namespace

Formula makeFormulaNode(std::shared_ptr<const Formula::Node> n) {
  return Formula(std::move(n));
}

namespace {

Formula wrap(Formula::Kind k, std::string name, std::vector<Term> terms,
             std::vector<Formula> children) {
  return makeFormulaNode(make(k, std::move(name), std::move(terms), std::move(children)));
}

}  // namespace

Formula Formula::rel(std::string name, std::vector<Term> args) {
  return wrap(Kind::Rel, std::move(name), std::move(args), {});
}

Formula Formula::eq(Term a, Term b) {
  return wrap(Kind::Eq, "", {std::move(a), std::move(b)}, {});
}

Formula Formula::lnot(Formula f) { return wrap(Kind::Not, "", {}, {std::move(f)}); }

Formula Formula::land(std::vector<Formula> fs) {
  if (fs.empty()) throw InvalidParameter("empty conjunction");
  std::vector<Formula> flat;
  for (auto& f : fs) {
    if (f.kind() == Kind::And)
      for (const auto& c : f.node().children) flat.push_back(c);
    else
      flat.push_back(std::move(f));
  }
  if (flat.size() == 1) return flat[0];
  return wrap(Kind::And, "", {}, std::move(flat));
}

Formula Formula::lor(std::vector<Formula> fs) {
  if (fs.empty()) throw InvalidParameter("empty disjunction");
  std::vector<Formula> flat;
  for (auto& f : fs) {
    if (f.kind() == Kind::Or)
      for (const auto& c : f.node().children) flat.push_back(c);
    else
      flat.push_back(std::move(f));
  }
  if (flat.size() == 1) return flat[0];
  return wrap(Kind::Or, "", {}, std::move(flat));
}

Formula Formula::implies(Formula a, Formula b) {
  return wrap(Kind::Implies, "", {}, {std::move(a), std::move(b)});
}

Formula Formula::forall(std::string var, Formula body) {
  return wrap(Kind::Forall, std::move(var), {}, {std::move(body)});
}

Formula Formula::exists(std::string var, Formula body) {
  return wrap(Kind::Exists, std::move(var), {}, {std::move(body)});
}

namespace {

void termVars(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Var)
    out.insert(t.name);
  else
    for (const auto& a : t.args) termVars(a, out);
}

void collectFree(const Formula& f, std::set<std::string> bound, std::set<std::string>& out) {
  const auto& n = f.node();
  switch (f.kind()) {
    case Formula::Kind::Rel:
    case Formula::Kind::Eq: {
      std::set<std::string> vars;
      for (const auto& t : n.terms) termVars(t, vars);
      for (const auto& v : vars)
        if (!bound.count(v)) out.insert(v);
      break;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      auto b2 = bound;
      b2.insert(n.name);
      collectFree(n.children[0], std::move(b2), out);
      break;
    }
    default:
      for (const auto& c : n.children) collectFree(c, bound, out);
  }
}

}  // namespace

std::vector<std::string> Formula::freeVariables() const {
  std::set<std::string> out;
  collectFree(*this, {}, out);
  return {out.begin(), out.end()};
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  const auto& a = *node_;
  const auto& b = *o.node_;
  if (a.kind != b.kind || a.name != b.name || a.terms != b.terms) return false;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!(a.children[i] == b.children[i])) return false;
  return true;
}

std::string toString(const Term& t) {
  if (t.kind == Term::Kind::Var) return t.name;
  std::string s = t.name + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) s += ",";
    s += toString(t.args[i]);
  }
  return s + ")";
}

namespace {

// Precedence levels mirroring the grammar: formula/quant/impl (0), disjunction
// (1), conjunction (2), negation (3), atom (4).
void print(const Formula& f, int level, std::string& out) {
  const auto& n = f.node();
  auto paren = [&](int myLevel, auto&& body) {
    if (myLevel < level) {
      out += "(";
      body();
      out += ")";
    } else {
      body();
    }
  };
  switch (f.kind()) {
    case Formula::Kind::Rel:
      if (n.name == "<=" && n.terms.size() == 2) {
        // Comparisons are atoms; the negation case wraps them itself.
        out += toString(n.terms[0]) + " <= " + toString(n.terms[1]);
      } else {
        out += n.name + "(";
        for (std::size_t i = 0; i < n.terms.size(); ++i) {
          if (i) out += ",";
          out += toString(n.terms[i]);
        }
        out += ")";
      }
      break;
    case Formula::Kind::Eq:
      out += toString(n.terms[0]) + " = " + toString(n.terms[1]);
      break;
    case Formula::Kind::Not: {
      out += "~";
      const auto& c = n.children[0];
      bool bare = c.kind() == Formula::Kind::Not ||
                  (c.kind() == Formula::Kind::Rel && !(c.node().name == "<="));
      if (bare) {
        print(c, 3, out);
      } else {
        out += "(";
        print(c, 0, out);
        out += ")";
      }
      break;
    }
    case Formula::Kind::And:
      paren(2, [&] {
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          if (i) out += " & ";
          print(n.children[i], 3, out);
        }
      });
      break;
    case Formula::Kind::Or:
      paren(1, [&] {
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          if (i) out += " | ";
          print(n.children[i], 2, out);
        }
      });
      break;
    case Formula::Kind::Implies:
      paren(0, [&] {
        print(n.children[0], 1, out);
        out += " -> ";
        print(n.children[1], 0, out);
      });
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      paren(0, [&] {
        out += (f.kind() == Formula::Kind::Forall ? "ALL " : "EX ");
        out += n.name + ". ";
        print(n.children[0], 0, out);
      });
      break;
  }
}

}  // namespace

std::string prettyPrint(const Formula& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

namespace {

void checkTerm(const Term& t, const Signature& sig) {
  if (t.kind == Term::Kind::Var) return;
  const auto* fn = sig.findFunction(t.name);
  if (!fn) throw InvalidStructure("signature mismatch: unknown function symbol " + t.name);
  if (fn->arity != static_cast<int>(t.args.size()))
    throw InvalidStructure("signature mismatch: arity of " + t.name);
  for (const auto& a : t.args) checkTerm(a, sig);
}

}  // namespace

void checkSymbols(const Formula& f, const Signature& sig) {
  const auto& n = f.node();
  if (f.kind() == Formula::Kind::Rel) {
    const auto* r = sig.findRelation(n.name);
    if (!r) throw InvalidStructure("signature mismatch: unknown relation symbol " + n.name);
    if (r->arity != static_cast<int>(n.terms.size()))
      throw InvalidStructure("signature mismatch: arity of " + n.name);
  }
  for (const auto& t : n.terms) checkTerm(t, sig);
  for (const auto& c : n.children) checkSymbols(c, sig);
}

}  // namespace slimcon
