#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "slimcon/lattice.hpp"
#include "slimcon/structures.hpp"

namespace slimcon {

// Undirected loop-free graph on the maximal join-irreducibles, small enough
// for subset enumeration. Vertices are positions 0..m-1; callers keep the map
// back to lattice elements.
struct EGraph {
  int m = 0;
  std::vector<std::vector<bool>> adj;

  static EGraph empty(int m) { return {m, std::vector<std::vector<bool>>(m, std::vector<bool>(m, false))}; }
};

// ---- pure graph layer ------------------------------------------------------

// subset induces a single circle of length >= 3 (chord-free by the degree
// count); returns the cyclic vertex order, or nullopt.
std::optional<std::vector<int>> inducedCircleOrder(const EGraph& g, const std::vector<int>& subset);

// Every vertex of the induced subgraph has degree exactly 2 (and subset is
// nonempty): the subset is a disjoint union of chord-free circles.
bool inducedDegreesExactlyTwo(const EGraph& g, const std::vector<int>& subset);

// All subsets that induce a single circle, each in cyclic order. Guarded to
// m <= 20 vertices.
std::vector<std::vector<int>> spannedCircleSubsets(const EGraph& g);

// V-sets and W-sets of a vertex subset Y (edges taken from g restricted to Y).
std::vector<std::array<int, 2>> vSetsOf(const EGraph& g, const std::vector<int>& Y);
std::vector<std::array<int, 4>> wSetsOf(const EGraph& g, const std::vector<int>& Y);  // path order

// Y plays the role of maxJir below its join. Each member must lie in exactly
// one W-set, or in no W-set and exactly one V-set. (See has_dcep for why
// W-set membership takes precedence.)
struct VwSubsetCheck {
  bool ok;
  int offender = -1;       // vertex failing the condition
  std::string reason;
};
VwSubsetCheck checkVwSubset(const EGraph& g, const std::vector<int>& Y);

struct GraphDecomposition {
  std::vector<int> circle;  // cyclic order
  std::vector<int> Y, Z;    // disjoint, union = circle, both VW subsets
  bool fromAlternatingPartition = false;
};

struct GraphDcepResult {
  bool ok = true;
  std::vector<GraphDecomposition> decompositions;  // one per circle subset when ok
  std::vector<int> refuterCircle;                  // circle with no decomposition
  // Times the exhaustive subset search succeeded where the alternating
  // partition of the even circle did not; expected to stay 0.
  int fallbackUses = 0;
};

// Decomposable-cyclic-elements check at graph level: for every subset that
// induces a single circle, find a partition into two VW subsets. Tries the
// alternating pair partition (with one 4-block when the length is 2 mod 4)
// first, then exhausts subsets up to circle length 16.
GraphDcepResult graphDcep(const EGraph& g);

// ---- lattice layer ---------------------------------------------------------

// Analysis of a finite distributive lattice: its join-irreducibles, the
// maximal ones, and the graph linking two maximal join-irreducibles that have
// a common lower cover inside J(D). That cover reading is the load-bearing
// one: under the Two-cover Property a witness z has exactly the two endpoints
// as covers, both maximal, so a circle of the graph is a crown inside J(D).
// The common-lower-bound variant admits degenerate triangles whose witness is
// shared by three maximal elements (through longer chains), which breaks the
// 18-element threshold and the decomposition theorem; it is kept as a
// diagnostic.
struct DistributiveCore {
  const Lattice* lattice = nullptr;
  JoinIrreducibles jir;
  std::vector<int> maxJir;      // lattice element ids
  std::vector<int> maxJirPos;   // positions within jir.elements
  EGraph graph;                 // common lower cover in J(D)
  EGraph boundGraph;            // common join-irreducible lower bound

  std::vector<int> maxJirBelow(int x) const;  // graph vertex ids
  bool joinOfMaxJirBelowIs(int x) const;
};

// Throws InvalidStructure when d is not distributive.
DistributiveCore analyzeDistributive(const Lattice& d);

struct MaxJirGraph {
  GraphView graph;
  std::vector<int> vertexElements;  // graph vertex -> lattice element
};
MaxJirGraph maxJirGraph(const Lattice& d);

struct TwoCoverReport {
  bool ok;
  int offender = -1;            // join-irreducible with too many covers
  std::vector<int> covers;      // its covers inside J(D)
};
TwoCoverReport hasTwoCover(const Lattice& d);

struct BmepReport {
  bool ok;                          // bipartiteness of the common-cover graph
  std::array<std::vector<int>, 2> parts;  // lattice element ids per class
  std::vector<int> oddCircle;       // chord-free odd circle (element ids)
  bool boundReadingOk;              // common-lower-bound diagnostic reading
  bool readingsAgree;
};
BmepReport hasBmep(const Lattice& d);

std::vector<std::array<int, 2>> vSets(const Lattice& d, int x);
std::vector<std::array<int, 4>> wSets(const Lattice& d, int x);

struct VwElementReport {
  bool ok;
  std::string reason;
};
VwElementReport isVwElement(const Lattice& d, int x);

struct CyclicElementsReport {
  std::vector<int> elements;                // cyclic elements of d
  std::vector<std::vector<int>> circles;    // matching circles (element ids)
};
// Requires the Two-cover Property; throws InvalidStructure otherwise.
CyclicElementsReport cyclicElements(const Lattice& d);

bool isMulticyclic(const Lattice& d, int x);

struct DcepDecomposition {
  int x, y, z;
  std::vector<int> maxBelowY, maxBelowZ;  // lattice element ids
  bool fromAlternatingPartition;
};
struct DcepReport {
  bool ok;
  std::vector<DcepDecomposition> decompositions;
  int refuter = -1;                 // cyclic element with no decomposition
  std::vector<int> refuterCircle;   // its circle (element ids)
  int fallbackUses = 0;
};
// Requires distributivity and the Two-cover Property.
DcepReport hasDcep(const Lattice& d);

// Witness pair for one cyclic element, if any.
std::optional<std::pair<int, int>> dcepWitness(const Lattice& d, int x);

}  // namespace slimcon
