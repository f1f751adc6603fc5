#include "slimcon/separation.hpp"

#include <map>

#include "slimcon/eval.hpp"

namespace slimcon {

SeparationReport separationReport(const Formula& f, const StructureFamily& a,
                                  const StructureFamily& b, int maxIndex) {
  SeparationReport rep;
  std::map<int, SeparationRow> rows;
  for (int i = a.firstIndex; i <= maxIndex; i += a.step) {
    bool v = evalFormula(f, a.make(i));
    rows[i].index = i;
    rows[i].holdsInA = v;
    rep.trueOnAllA = rep.trueOnAllA && v;
    rep.falseOnAllA = rep.falseOnAllA && !v;
  }
  for (int i = b.firstIndex; i <= maxIndex; i += b.step) {
    bool v = evalFormula(f, b.make(i));
    rows[i].index = i;
    rows[i].holdsInB = v;
    rep.trueOnAllB = rep.trueOnAllB && v;
    rep.falseOnAllB = rep.falseOnAllB && !v;
  }
  for (auto& [i, row] : rows) rep.rows.push_back(row);
  return rep;
}

}  // namespace slimcon
