#pragma once

#include <string>

#include <json.hpp>

#include "slimcon/congruence.hpp"
#include "slimcon/diagram.hpp"
#include "slimcon/poset.hpp"
#include "slimcon/structures.hpp"

namespace slimcon {

using Json = nlohmann::ordered_json;

// {"signature": {"relations": [{"name","arity"}...], "functions": [...]},
//  "size": n, "relations": {name: [[..]..]}, "functions": {name: {"table": [..]}}}
// Function tables are row-major with the first argument most significant.
Json structureToJson(const FiniteStructure& s);
FiniteStructure structureFromJson(const Json& j);

// {"size": n, "covers": [[x,y]...]}; the order is the reflexive-transitive
// closure of the cover pairs.
Json posetToJson(const Poset& p);
Poset posetFromJson(const Json& j);

Json latticeToJson(const Lattice& l);
Lattice latticeFromJson(const Json& j);

// Poset JSON plus "coverOrder" / "lowerCoverOrder" (per-element left-to-right
// cover id lists) and "labels" {name: [lo, hi]}.
Json diagramToJson(const PlanarSlimLattice& l);
PlanarSlimLattice diagramFromJson(const Json& j);

// Lattice JSON of the refinement order plus "blocks": per congruence, its
// blocks as element lists.
Json conLatticeToJson(const ConLattice& c);

Json partitionToJson(const Partition& p);  // the representative array

std::string graphToDot(const GraphView& g);       // undirected edges emitted once
std::string posetToDot(const Poset& p);           // Hasse diagram, bottom-up
std::string diagramToDot(const PlanarSlimLattice& l);

// Any supported input: a structure ("signature"), a diagram ("coverOrder"),
// or a poset/lattice ("covers").
struct LoadedInput {
  enum class Kind { Structure, Poset, Diagram };
  Kind kind;
  std::optional<FiniteStructure> structure;
  std::optional<Poset> poset;
  std::optional<PlanarSlimLattice> diagram;
};
LoadedInput loadInput(const Json& j);

// A structure suitable for formula evaluation: structures pass through,
// diagrams and lattice-shaped posets become {<=, join, meet} structures,
// other posets become {<=} structures.
FiniteStructure evalStructure(const LoadedInput& in);

// The input as a lattice; throws when it is not one.
Lattice latticeOf(const LoadedInput& in);

Json readJsonFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& text);

}  // namespace slimcon
