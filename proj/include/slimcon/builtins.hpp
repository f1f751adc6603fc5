#pragma once

#include <optional>

#include "slimcon/formula.hpp"

namespace slimcon {

struct BuiltinInfo {
  std::string name;
  bool takesParam;
  Signature signature;
  std::vector<std::string> freeVars;
  std::string summary;
};

const std::vector<BuiltinInfo>& builtinCatalog();

// Closed-form library formulas. Parameterized ones: lambda(k >= 1, or -1 for
// the identically false sentence), eta(k >= 1), tau(k >= 1), xi(2 <= m <= 12).
//
// Lattice-signature formulas use the free variable x for the distinguished
// element (y1, y2, ... for the remaining slots):
//   jir(y, x)                y join-irreducible and y <= x
//   mjir(y, x)               y maximal join-irreducible and y <= x
//   rho_edge(y1, y2, x)      y1, y2 are an edge of the graph on maxJir below x
//   vset(y0, y1, x)          {y0, y1} is a V-set of x
//   wset(y0, y1, y2, y3, x)  (y0, y1, y2, y3) is a W-set path of x
//   rho_exists2 / rho_atmost2 / rho_eq2 (x)   degree conditions on that graph
//   rho_mcyclic(x)           x is a multicyclic element
//   vw(x)                    x is a VW-element
//   psi_dcep                 sentence: the Decomposable Cyclic Elements Property
Formula builtinFormula(const std::string& name, std::optional<int> param = std::nullopt);

}  // namespace slimcon
