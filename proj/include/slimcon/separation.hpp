#pragma once

#include <functional>
#include <optional>

#include "slimcon/formula.hpp"

namespace slimcon {

// An indexed family of structures, e.g. the even circles or the odd crowns.
struct StructureFamily {
  std::string name;
  int firstIndex = 0;
  int step = 1;
  std::function<FiniteStructure(int)> make;
};

struct SeparationRow {
  int index;
  std::optional<bool> holdsInA, holdsInB;
};

struct SeparationReport {
  std::vector<SeparationRow> rows;
  bool trueOnAllA = true, falseOnAllA = true;
  bool trueOnAllB = true, falseOnAllB = true;

  // The sentence distinguishes the sampled families in one polarity.
  bool separates() const { return (trueOnAllA && falseOnAllB) || (falseOnAllA && trueOnAllB); }
};

// Evaluates f on both families for all indices up to maxIndex and tabulates
// the outcomes. Signature mismatches at any index propagate as exceptions.
SeparationReport separationReport(const Formula& f, const StructureFamily& a,
                                  const StructureFamily& b, int maxIndex);

}  // namespace slimcon
