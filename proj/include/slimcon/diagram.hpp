#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slimcon/lattice.hpp"

namespace slimcon {

struct FourCell {
  int bottom, left, right, top;
  bool operator==(const FourCell&) const = default;
};

// A slim semimodular lattice carried with its planar diagram: every element
// lists its upper covers and its lower covers left to right. Fork insertion
// and the staircase searches all work on these lists.
class PlanarSlimLattice {
 public:
  PlanarSlimLattice(std::vector<std::vector<int>> upperCovers,
                    std::vector<std::vector<int>> lowerCovers,
                    std::map<std::string, std::pair<int, int>> edgeLabels = {});

  const Lattice& lattice() const { return lattice_; }
  int size() const { return lattice_.size(); }

  const std::vector<int>& upper(int x) const { return upper_[x]; }
  const std::vector<int>& lower(int x) const { return lower_[x]; }
  const std::vector<std::vector<int>>& upperLists() const { return upper_; }
  const std::vector<std::vector<int>>& lowerLists() const { return lower_; }

  const std::map<std::string, std::pair<int, int>>& labels() const { return labels_; }
  std::pair<int, int> labelEdge(const std::string& name) const;

 private:
  std::vector<std::vector<int>> upper_, lower_;
  std::map<std::string, std::pair<int, int>> labels_;
  Lattice lattice_;
};

// All 4-cells: adjacent upper-cover pairs of some bottom whose join covers
// both, with the pair adjacent again below the join.
std::vector<FourCell> cells(const PlanarSlimLattice& l);

// Insert a fork into cell c: a new middle element under the cell's top, and
// two chains of subdividing elements running down-left and down-right through
// the staircases of cells below the cell's lower edges. Throws when c is not
// a 4-cell of l, or when a subdivision would hit a labeled edge.
PlanarSlimLattice insertFork(const PlanarSlimLattice& l, const FourCell& c);

// Trajectories: classes of the edge relation generated by "opposite sides of
// a 4-cell". edgeOf maps each cover pair to its index in `edges`.
struct Trajectories {
  std::vector<std::pair<int, int>> edges;     // all cover pairs, sorted
  std::vector<int> trajectoryOf;              // per edge index
  int count = 0;
  int indexOfEdge(std::pair<int, int> e) const;
};
Trajectories trajectories(const PlanarSlimLattice& l);

// The k x k grid as a diagram, with boundary edge labels a_0, a_2, ... down
// the upper-left side and a_1, a_3, ... down the upper-right side.
PlanarSlimLattice gridDiagram(int k);

// The lattice L_n (n even, >= 4): the n/2-grid with n forks inserted, one per
// crown edge label pair, each targeted at the unique cell whose upper edges
// lie on the trajectories of the two labels. Labels b_0..b_{n-1} mark the new
// middle edges.
PlanarSlimLattice buildLn(int n);

// grid(gridK) followed by `forks` fork insertions into uniformly chosen cells
// of the evolving lattice; deterministic in seed.
PlanarSlimLattice randomSlim(std::uint64_t seed, int gridK, int forks);

}  // namespace slimcon
