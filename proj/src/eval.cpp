#include "slimcon/eval.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace slimcon {

int evaluatorDomainCap() {
  const char* env = std::getenv("SLIMCON_MAX_DOMAIN");
  if (!env) return 512;
  int v = std::atoi(env);
  return v > 0 ? v : 512;
}

Evaluator::Evaluator(Formula f, const FiniteStructure& s) : formula_(std::move(f)), s_(s), n_(s.size()) {
  if (n_ > evaluatorDomainCap())
    throw InvalidParameter("structure exceeds SLIMCON_MAX_DOMAIN (" +
                           std::to_string(evaluatorDomainCap()) + " elements)");
  valueBits_ = 1;
  while ((1 << valueBits_) < n_) ++valueBits_;
  checkSymbols(formula_, s_.signature());
  std::vector<std::string> boundStack;
  analyze(formula_, boundStack);
  env_.assign(varIds_.size(), -1);
}

int Evaluator::internVar(const std::string& name) {
  auto it = varIds_.find(name);
  if (it != varIds_.end()) return it->second;
  int id = static_cast<int>(varIds_.size());
  varIds_.emplace(name, id);
  return id;
}

void Evaluator::analyzeTerm(const Term& t) {
  if (t.kind == Term::Kind::Var) {
    termInfo_[&t] = {true, internVar(t.name), nullptr};
  } else {
    int idx = s_.functionIndex(t.name);
    termInfo_[&t] = {false, idx, &s_.functionTable(t.name)};
    if (termInfo_[&t].table->empty())
      throw InvalidStructure("function table missing: " + t.name);
    for (const auto& a : t.args) analyzeTerm(a);
  }
}

void Evaluator::analyze(const Formula& f, std::vector<std::string>& boundStack) {
  const auto& n = f.node();
  NodeInfo info;
  info.id = nextNodeId_++;
  for (const auto& t : n.terms) analyzeTerm(t);
  switch (f.kind()) {
    case Formula::Kind::Rel:
      info.relIndex = s_.relationIndex(n.name);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      internVar(n.name);
      boundStack.push_back(n.name);
      analyze(n.children[0], boundStack);
      boundStack.pop_back();
      break;
    default:
      for (const auto& c : n.children) analyze(c, boundStack);
      break;
  }
  // Free variables of this node, as interned ids.
  std::set<int> fv;
  for (const auto& name : f.freeVariables()) fv.insert(internVar(name));
  info.freeVars.assign(fv.begin(), fv.end());
  bool atomic = f.kind() == Formula::Kind::Rel || f.kind() == Formula::Kind::Eq;
  info.memo = !atomic && static_cast<int>(info.freeVars.size()) * valueBits_ <= 45;
  info_[f.nodePtr()] = std::move(info);
}

int Evaluator::evalTerm(const Term& t) const {
  const TermInfo& ti = termInfo_.at(&t);
  if (ti.isVar) {
    int v = env_[ti.index];
    if (v < 0) throw InvalidParameter("uncovered free variable: " + t.name);
    return v;
  }
  std::size_t idx = 0;
  for (const auto& a : t.args)
    idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(evalTerm(a));
  return (*ti.table)[idx];
}

bool Evaluator::evalNode(const Formula& f) {
  const auto& n = f.node();
  const NodeInfo& info = info_.at(f.nodePtr());

  // Key layout: node id in the top 19 bits, free-variable values below.
  std::uint64_t key = 0;
  if (info.memo) {
    std::uint64_t values = 0;
    for (int v : info.freeVars)
      values = (values << valueBits_) | static_cast<std::uint64_t>(env_[v]);
    key = (static_cast<std::uint64_t>(info.id) << 45) | values;
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }

  bool result = false;
  switch (f.kind()) {
    case Formula::Kind::Rel: {
      std::size_t idx = 0;
      for (const auto& t : n.terms)
        idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(evalTerm(t));
      result = s_.relationBitmap(info.relIndex)[idx];
      break;
    }
    case Formula::Kind::Eq:
      result = evalTerm(n.terms[0]) == evalTerm(n.terms[1]);
      break;
    case Formula::Kind::Not:
      result = !evalNode(n.children[0]);
      break;
    case Formula::Kind::And:
      result = true;
      for (const auto& c : n.children)
        if (!evalNode(c)) {
          result = false;
          break;
        }
      break;
    case Formula::Kind::Or:
      result = false;
      for (const auto& c : n.children)
        if (evalNode(c)) {
          result = true;
          break;
        }
      break;
    case Formula::Kind::Implies:
      result = !evalNode(n.children[0]) || evalNode(n.children[1]);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool universal = f.kind() == Formula::Kind::Forall;
      int var = varIds_.at(n.name);
      int saved = env_[var];
      result = universal;
      for (int d = 0; d < n_; ++d) {
        env_[var] = d;
        bool sub = evalNode(n.children[0]);
        if (sub != universal) {
          result = sub;
          break;
        }
      }
      env_[var] = saved;
      break;
    }
  }

  if (info.memo) cache_.emplace(key, result);
  return result;
}

bool Evaluator::eval(const Valuation& v) {
  std::fill(env_.begin(), env_.end(), -1);
  auto free = formula_.freeVariables();
  for (const auto& name : free) {
    auto it = v.find(name);
    if (it == v.end()) throw InvalidParameter("uncovered free variable: " + name);
    if (it->second < 0 || it->second >= n_)
      throw InvalidParameter("valuation value out of domain for " + name);
    env_[varIds_.at(name)] = it->second;
  }
  return evalNode(formula_);
}

bool evalFormula(const Formula& f, const FiniteStructure& s, const Valuation& v) {
  return Evaluator(f, s).eval(v);
}

}  // namespace slimcon
