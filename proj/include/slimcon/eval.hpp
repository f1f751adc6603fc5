#pragma once

#include <unordered_map>

#include "slimcon/formula.hpp"

namespace slimcon {

// Domain-size cap for the evaluator, from SLIMCON_MAX_DOMAIN (default 512).
int evaluatorDomainCap();

// Tarskian evaluation over a fixed finite structure: quantifiers range over
// the whole domain with short-circuiting. Identical sub-evaluations are
// cached per (subformula, free-variable assignment), which keeps the shared
// join-irreducibility subformulas of the lattice library affordable.
//
// An Evaluator is bound to one structure; the cache persists across calls, so
// sweeping one formula over many valuations reuses everything already
// computed. Not thread-safe; use one Evaluator per worker.
class Evaluator {
 public:
  Evaluator(Formula f, const FiniteStructure& s);

  bool eval(const Valuation& v = {});

  const Formula& formula() const { return formula_; }

 private:
  struct NodeInfo {
    int id = 0;
    std::vector<int> freeVars;  // interned, sorted
    bool memo = false;
    int relIndex = -1;  // Rel nodes
  };
  struct TermInfo {
    bool isVar;
    int index;  // variable id or function index
    const std::vector<int>* table;  // function table for App terms
  };

  void analyze(const Formula& f, std::vector<std::string>& boundStack);
  void analyzeTerm(const Term& t);
  int internVar(const std::string& name);

  bool evalNode(const Formula& f);
  int evalTerm(const Term& t) const;

  Formula formula_;
  const FiniteStructure& s_;
  int n_;
  int valueBits_ = 9;

  std::unordered_map<std::string, int> varIds_;
  std::vector<int> env_;  // per interned variable; -1 = unbound
  std::unordered_map<const Formula::Node*, NodeInfo> info_;
  std::unordered_map<const Term*, TermInfo> termInfo_;
  std::unordered_map<std::uint64_t, bool> cache_;
  int nextNodeId_ = 0;
};

// One-shot evaluation.
bool evalFormula(const Formula& f, const FiniteStructure& s, const Valuation& v = {});

}  // namespace slimcon
