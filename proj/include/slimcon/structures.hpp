#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slimcon/common.hpp"
#include "slimcon/lattice.hpp"
#include "slimcon/poset.hpp"

namespace slimcon {

struct SymbolDecl {
  std::string name;
  int arity = 0;
  bool operator==(const SymbolDecl&) const = default;
};

// Finite signature: named relation and function symbols with arities.
struct Signature {
  std::vector<SymbolDecl> relations;
  std::vector<SymbolDecl> functions;

  Signature() = default;
  Signature(std::vector<SymbolDecl> rels, std::vector<SymbolDecl> funs);

  const SymbolDecl* findRelation(const std::string& name) const;
  const SymbolDecl* findFunction(const std::string& name) const;

  bool operator==(const Signature&) const = default;
};

Signature graphSignature();  // one binary relation E
Signature groupSignature();  // one binary function +
Signature orderSignature();  // one binary relation <=
Signature latticeSignature();  // <= plus binary join and meet

// Structure over a finite signature with domain {0..size-1}. Relations are
// stored as sorted tuple lists, functions as total row-major tables.
class FiniteStructure {
 public:
  FiniteStructure(Signature sig, int size);

  const Signature& signature() const { return sig_; }
  int size() const { return n_; }

  void addTuple(const std::string& relation, const std::vector<int>& tuple);
  bool holds(const std::string& relation, const std::vector<int>& tuple) const;
  bool holds(int relationIndex, const std::vector<int>& tuple) const;
  const std::vector<std::vector<int>>& tuples(const std::string& relation) const;

  // Table is indexed row-major: first argument most significant.
  void setFunctionTable(const std::string& function, std::vector<int> table);
  int apply(const std::string& function, const std::vector<int>& args) const;
  int apply(int functionIndex, const std::vector<int>& args) const;
  const std::vector<int>& functionTable(const std::string& function) const;

  int relationIndex(const std::string& name) const;
  int functionIndex(const std::string& name) const;

  // Flat row-major membership bitmap; index with flatIndex().
  const std::vector<bool>& relationBitmap(int relIndex) const { return relLookup_[relIndex]; }
  static std::size_t flatIndex(int n, const std::vector<int>& tuple);

  // Every function table total, every value in range.
  void validate() const;

  void sortTuples();

 private:
  Signature sig_;
  int n_;
  std::vector<std::vector<std::vector<int>>> relTuples_;
  std::vector<std::vector<bool>> relLookup_;  // flat row-major membership
  std::vector<std::vector<int>> funTables_;
};

// A FiniteStructure over the graph signature, with adjacency helpers.
class GraphView {
 public:
  explicit GraphView(FiniteStructure s);

  const FiniteStructure& structure() const { return s_; }
  int size() const { return s_.size(); }
  bool edge(int x, int y) const { return adj_[x].test(y); }
  const Bitset& neighbors(int x) const { return adj_[x]; }
  int degree(int x) const { return static_cast<int>(adj_[x].count()); }

  bool isUndirected() const;
  bool hasLoop() const;

  // Throws InvalidStructure unless undirected and loop-free.
  void requireSimpleUndirected() const;

  static GraphView fromEdges(int n, const std::vector<std::pair<int, int>>& undirectedEdges);

 private:
  FiniteStructure s_;
  std::vector<Bitset> adj_;
};

// Circle C_n: x E y iff |x - y| in {1, n-1}. Requires n >= 2. (C_2 is the
// single undirected edge, per the |x-y| rule.)
GraphView circleGraph(int n);

// Path on m vertices: x E y iff |x - y| = 1. Requires m >= 2.
GraphView pathGraph(int m);

// Cyclic group Z_n as a structure with one binary operation +. Requires n >= 1.
FiniteStructure cyclicGroup(int n);

// True iff n is prime: C_n is simple exactly for prime n. Requires n >= 2.
bool cyclicGroupIsSimple(int n);

enum class BipartiteMode {
  // Plain 2-colorability; edgeless graphs (any size) count as bipartite.
  Standard,
  // Both color classes must be nonempty, so 1-vertex edgeless graphs fail.
  Strict,
};

struct BipartiteResult {
  bool bipartite;
  std::vector<int> coloring;      // per-vertex 0/1 when bipartite
  std::vector<int> oddClosedWalk;  // closed odd walk v0..vk=v0 otherwise
};

BipartiteResult checkBipartite(const GraphView& g,
                               BipartiteMode mode = BipartiteMode::Standard);

inline bool isBipartite(const GraphView& g, BipartiteMode mode = BipartiteMode::Standard) {
  return checkBipartite(g, mode).bipartite;
}

// Bridges into the logic layer: a poset as a {<=} structure, a lattice as a
// {<=, join, meet} structure.
FiniteStructure posetStructure(const Poset& p);
FiniteStructure latticeStructure(const Lattice& l);

}  // namespace slimcon
