#pragma once

#include <optional>
#include <vector>

#include "slimcon/common.hpp"

namespace slimcon {

// Finite partially ordered set on {0..n-1}. The full order relation is stored
// as bitset rows in both directions; covers are derived once at construction.
class Poset {
 public:
  // The empty poset; only join-irreducible subposets of trivial lattices use
  // it, every public builder produces a nonempty carrier.
  Poset() = default;

  // leq[x] must be the row set {y : x <= y}. Validates reflexivity,
  // antisymmetry and transitivity; throws InvalidStructure otherwise.
  explicit Poset(std::vector<Bitset> upRows);

  // Convenience: build from the list of covering pairs (x, y) meaning x < y
  // with nothing between. The order is the reflexive-transitive closure.
  static Poset fromCovers(int n, const std::vector<std::pair<int, int>>& covers);

  int size() const { return n_; }

  bool leq(int x, int y) const { return up_[x].test(y); }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  bool covers(int x, int y) const { return coverUp_[x].test(y); }  // x "is covered by" y

  const Bitset& upSet(int x) const { return up_[x]; }      // {y : x <= y}
  const Bitset& downSet(int x) const { return down_[x]; }  // {y : y <= x}

  const std::vector<int>& upperCovers(int x) const { return upperCovers_[x]; }
  const std::vector<int>& lowerCovers(int x) const { return lowerCovers_[x]; }

  std::vector<std::pair<int, int>> coverPairs() const;

  std::vector<int> maximalElements() const;
  std::vector<int> minimalElements() const;

  // Longest chain below / above, both counting edges.
  const std::vector<int>& heights() const { return height_; }
  const std::vector<int>& depths() const { return depth_; }

  // Induced subposet on the given elements (in the given element order).
  Poset restrictedTo(const std::vector<int>& elems) const;

  bool isDownSet(const Bitset& s) const;

  // All down-sets, each as a bitset over the elements. Includes the empty set
  // and the whole poset; enumeration order is deterministic (sorted masks).
  std::vector<Bitset> allDownSets() const;
  std::size_t countDownSets() const;

 private:
  void deriveCovers();

  int n_ = 0;
  std::vector<Bitset> up_, down_;
  std::vector<Bitset> coverUp_;
  std::vector<std::vector<int>> upperCovers_, lowerCovers_;
  std::vector<int> height_, depth_;
};

// The 2n-element crown: maximal elements a_0..a_{n-1} (indices 0..n-1) and
// minimal elements b_0..b_{n-1} (indices n..2n-1); b_i <= a_j iff i = j or
// i+1 = j (mod n). Requires n >= 2.
Poset crown(int n);

// Height-1 zigzag with 2m elements: minimal b_j (indices m..2m-1) below
// maximal a_s (indices 0..m-1) iff s in {j, j+1}. Requires m >= 1.
Poset fenceSegment(int m);

Poset antichain(int n);

// Cardinal sum: disjoint union of the carriers, no cross comparabilities.
// Rejects an empty list (posets are nonempty).
Poset disjointSum(const std::vector<Poset>& parts);

// Order isomorphism a -> b if one exists. Backtracking over classes refined
// by (up-degree, down-degree, height, depth) and the order profile.
std::optional<std::vector<int>> isomorphism(const Poset& a, const Poset& b);

inline bool isomorphic(const Poset& a, const Poset& b) {
  return isomorphism(a, b).has_value();
}

}  // namespace slimcon
