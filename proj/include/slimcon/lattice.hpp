#pragma once

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "slimcon/poset.hpp"

namespace slimcon {

// Finite lattice: a bounded poset in which every pair has a least upper and a
// greatest lower bound (verified on construction). Join/meet are served from
// full tables up to kJoinTableCap elements, from ground-set masks for down-set
// lattices, and by order-matrix scans beyond that.
class Lattice {
 public:
  static constexpr int kJoinTableCap = 3000;

  explicit Lattice(Poset p);

  // Down-set lattice mode: element i is the down-set masks[i] of a ground
  // poset with at most 64 elements; join/meet become mask union/intersection.
  Lattice(Poset p, std::vector<Bitset> groundMasks);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  bool leq(int x, int y) const { return poset_.leq(x, y); }

  int bottom() const { return bottom_; }
  int top() const { return top_; }

  int join(int x, int y) const;
  int meet(int x, int y) const;

  int joinOf(const std::vector<int>& xs) const;  // bottom for the empty list
  int meetOf(const std::vector<int>& xs) const;  // top for the empty list

  // Down-set-lattice element masks; empty unless constructed in mask mode.
  const std::vector<Bitset>& groundMasks() const { return masks_; }

 private:
  void checkElement(int x) const;
  int scanJoin(int x, int y) const;
  int scanMeet(int x, int y) const;

  Poset poset_;
  int bottom_ = -1, top_ = -1;
  std::vector<std::uint16_t> joinTable_, meetTable_;  // n*n when tables in use
  bool hasTables_ = false;

  std::vector<Bitset> masks_;
  std::unordered_map<std::uint64_t, int> maskIndex_;
  bool maskMode_ = false;
};

Lattice chain(int m);  // the m-element total order, m >= 1
Lattice grid(int k);   // chain(k+1) x chain(k+1) componentwise, k >= 1

struct DownSetLattice {
  Lattice lattice;
  std::vector<Bitset> sets;              // element -> down-set of the base poset
  std::optional<int> indexOf(const Bitset& s) const;
};

// The distributive lattice Id(P) of all down-sets of p, ordered by inclusion.
// Requires p.size() <= 64.
DownSetLattice downsetLattice(const Poset& p);

struct JoinIrreducibles {
  std::vector<int> elements;  // lattice element ids, in ascending order
  Poset order;                // induced order on `elements`
};

// Elements with exactly one lower cover, with the induced order.
JoinIrreducibles joinIrreducibles(const Lattice& l);

// Maximal elements of the join-irreducible subposet, as lattice element ids.
std::vector<int> maxJoinIrreducibles(const Lattice& l);

std::vector<int> principalIdeal(const Lattice& l, int y);  // {x : x <= y}

struct DistributivityCheck {
  bool ok;
  // x, y, z with x /\ (y \/ z) != (x /\ y) \/ (x /\ z)
  std::optional<std::array<int, 3>> witness;
};
DistributivityCheck checkDistributive(const Lattice& l);
inline bool isDistributive(const Lattice& l) { return checkDistributive(l).ok; }

struct SemimodularityCheck {
  bool ok;
  // x ~< y but x \/ z is neither covered by nor equal to y \/ z
  std::optional<std::array<int, 3>> witness;
};
SemimodularityCheck checkSemimodular(const Lattice& l);
inline bool isSemimodular(const Lattice& l) { return checkSemimodular(l).ok; }

struct SlimnessCheck {
  bool ok;
  std::optional<std::array<int, 3>> witness;  // 3-antichain inside J(L)
};
SlimnessCheck checkSlim(const Lattice& l);
inline bool isSlim(const Lattice& l) { return checkSlim(l).ok; }

}  // namespace slimcon
