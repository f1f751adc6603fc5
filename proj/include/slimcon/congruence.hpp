#pragma once

#include <optional>
#include <vector>

#include "slimcon/lattice.hpp"
#include "slimcon/props.hpp"

namespace slimcon {

// Partition of {0..n-1} in canonical form: each element maps to the least
// element of its block.
class Partition {
 public:
  explicit Partition(int n);

  int size() const { return static_cast<int>(rep_.size()); }
  int rep(int i) const { return rep_[i]; }
  bool same(int a, int b) const { return rep_[a] == rep_[b]; }
  const std::vector<int>& reps() const { return rep_; }

  int blockCount() const;
  std::vector<std::vector<int>> blocks() const;

  // Refinement order: every block of *this is contained in a block of o.
  bool refines(const Partition& o) const;

  bool operator==(const Partition& o) const { return rep_ == o.rep_; }
  bool operator<(const Partition& o) const { return rep_ < o.rep_; }

  static Partition fromReps(std::vector<int> reps);  // canonicalizes

 private:
  std::vector<int> rep_;
};

// Transitive closure of the union; for congruences this is their join.
Partition joinPartitions(const Partition& a, const Partition& b);
// Common refinement (block intersection); for congruences this is their meet.
Partition meetPartitions(const Partition& a, const Partition& b);

// x == y forces x v z == y v z and x ^ z == y ^ z for all z.
bool isCongruence(const Lattice& l, const Partition& p);

// Smallest congruence collapsing a and b, by the compatibility fixpoint.
Partition principalCongruence(const Lattice& l, int a, int b);

// The distinct principal congruences of covering pairs. Every one of them is
// join-irreducible (a join collapsing a prime quotient already collapses it in
// one joinand), and they generate Con(L) under joins.
std::vector<Partition> coveringPairCongruences(const Lattice& l);

struct ConLattice {
  Lattice lattice;                     // congruences under refinement
  std::vector<Partition> congruences;  // element i of the lattice
  std::vector<int> generators;         // element ids of the covering-pair congruences
};

// All congruences of l: identity plus the join closure of the covering-pair
// congruences. Guarded against runaway sizes (this materializes order
// matrices; use conCore for property checks on large inputs).
ConLattice congruenceLattice(const Lattice& l, std::size_t sizeGuard = 5000);

struct JirCongruences {
  std::vector<Partition> congruences;  // pairwise distinct, join-irreducible
  Poset order;                         // refinement order
};

// The poset J(Con(L)) computed from covering-pair congruences directly,
// without materializing Con(L).
JirCongruences jirCongruencePoset(const Lattice& l);

// Birkhoff-level view of Con(L) for property checks that never need the full
// congruence lattice: the generator poset J(Con L), its maximal elements and
// their common-lower-bound graph, plus the element counts that decide
// distributivity (|Con L| vs |Id(J(Con L))|).
struct ConCore {
  JirCongruences jir;
  std::vector<int> maxJir;  // positions into jir.congruences
  EGraph graph;
  std::size_t conSize = 0;
  std::size_t downSetCount = 0;

  bool distributive() const { return conSize == downSetCount; }
  TwoCoverReport twoCover() const;
  bool bmep() const;
  GraphDcepResult dcep() const;
};

ConCore conCore(const Lattice& l, std::size_t sizeGuard = 1u << 20);

}  // namespace slimcon
