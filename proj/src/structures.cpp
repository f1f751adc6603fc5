#include "slimcon/structures.hpp"

#include <algorithm>
#include <set>

namespace slimcon {

Signature::Signature(std::vector<SymbolDecl> rels, std::vector<SymbolDecl> funs)
    : relations(std::move(rels)), functions(std::move(funs)) {
  std::set<std::string> names;
  for (const auto& s : relations) {
    if (s.arity < 0) throw InvalidParameter("negative arity");
    if (!names.insert(s.name).second) throw InvalidParameter("duplicate symbol name: " + s.name);
  }
  for (const auto& s : functions) {
    if (s.arity < 0) throw InvalidParameter("negative arity");
    if (!names.insert(s.name).second) throw InvalidParameter("duplicate symbol name: " + s.name);
  }
}

const SymbolDecl* Signature::findRelation(const std::string& name) const {
  for (const auto& s : relations)
    if (s.name == name) return &s;
  return nullptr;
}

const SymbolDecl* Signature::findFunction(const std::string& name) const {
  for (const auto& s : functions)
    if (s.name == name) return &s;
  return nullptr;
}

Signature graphSignature() { return Signature({{"E", 2}}, {}); }
Signature groupSignature() { return Signature({}, {{"+", 2}}); }
Signature orderSignature() { return Signature({{"<=", 2}}, {}); }
Signature latticeSignature() { return Signature({{"<=", 2}}, {{"join", 2}, {"meet", 2}}); }

namespace {

std::size_t powN(int n, int arity) {
  std::size_t p = 1;
  for (int i = 0; i < arity; ++i) p *= static_cast<std::size_t>(n);
  return p;
}

}  // namespace

std::size_t FiniteStructure::flatIndex(int n, const std::vector<int>& tuple) {
  std::size_t idx = 0;
  for (int t : tuple) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(t);
  return idx;
}

FiniteStructure::FiniteStructure(Signature sig, int size) : sig_(std::move(sig)), n_(size) {
  if (n_ < 1) throw InvalidParameter("structure domain must be nonempty");
  relTuples_.resize(sig_.relations.size());
  relLookup_.resize(sig_.relations.size());
  for (std::size_t i = 0; i < sig_.relations.size(); ++i)
    relLookup_[i].assign(powN(n_, sig_.relations[i].arity), false);
  funTables_.resize(sig_.functions.size());
}

int FiniteStructure::relationIndex(const std::string& name) const {
  for (std::size_t i = 0; i < sig_.relations.size(); ++i)
    if (sig_.relations[i].name == name) return static_cast<int>(i);
  throw InvalidParameter("unknown relation symbol: " + name);
}

int FiniteStructure::functionIndex(const std::string& name) const {
  for (std::size_t i = 0; i < sig_.functions.size(); ++i)
    if (sig_.functions[i].name == name) return static_cast<int>(i);
  throw InvalidParameter("unknown function symbol: " + name);
}

void FiniteStructure::addTuple(const std::string& relation, const std::vector<int>& tuple) {
  int r = relationIndex(relation);
  if (static_cast<int>(tuple.size()) != sig_.relations[r].arity)
    throw InvalidParameter("tuple arity mismatch for " + relation);
  for (int t : tuple)
    if (t < 0 || t >= n_) throw InvalidStructure("tuple entry outside the domain");
  auto idx = flatIndex(n_, tuple);
  if (relLookup_[r][idx]) return;
  relLookup_[r][idx] = true;
  relTuples_[r].push_back(tuple);
}

bool FiniteStructure::holds(const std::string& relation, const std::vector<int>& tuple) const {
  return holds(relationIndex(relation), tuple);
}

bool FiniteStructure::holds(int r, const std::vector<int>& tuple) const {
  return relLookup_[r][flatIndex(n_, tuple)];
}

const std::vector<std::vector<int>>& FiniteStructure::tuples(const std::string& relation) const {
  return relTuples_[relationIndex(relation)];
}

void FiniteStructure::setFunctionTable(const std::string& function, std::vector<int> table) {
  int f = functionIndex(function);
  if (table.size() != powN(n_, sig_.functions[f].arity))
    throw InvalidStructure("function table is not total");
  for (int v : table)
    if (v < 0 || v >= n_) throw InvalidStructure("function value outside the domain");
  funTables_[f] = std::move(table);
}

int FiniteStructure::apply(const std::string& function, const std::vector<int>& args) const {
  return apply(functionIndex(function), args);
}

int FiniteStructure::apply(int f, const std::vector<int>& args) const {
  const auto& table = funTables_[f];
  if (table.empty()) throw InvalidStructure("function table missing");
  return table[flatIndex(n_, args)];
}

const std::vector<int>& FiniteStructure::functionTable(const std::string& function) const {
  return funTables_[functionIndex(function)];
}

void FiniteStructure::validate() const {
  for (std::size_t f = 0; f < sig_.functions.size(); ++f)
    if (funTables_[f].size() != powN(n_, sig_.functions[f].arity))
      throw InvalidStructure("function table is not total: " + sig_.functions[f].name);
}

void FiniteStructure::sortTuples() {
  for (auto& ts : relTuples_) std::sort(ts.begin(), ts.end());
}

GraphView::GraphView(FiniteStructure s) : s_(std::move(s)) {
  if (s_.signature().relations.size() != 1 || s_.signature().relations[0] != SymbolDecl{"E", 2} ||
      !s_.signature().functions.empty())
    throw InvalidStructure("graph signature must be a single binary relation E");
  adj_.assign(s_.size(), Bitset(s_.size()));
  for (const auto& t : s_.tuples("E")) adj_[t[0]].set(t[1]);
}

bool GraphView::isUndirected() const {
  for (int x = 0; x < size(); ++x) {
    bool ok = true;
    adj_[x].forEach([&](int y) {
      if (!adj_[y].test(x)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool GraphView::hasLoop() const {
  for (int x = 0; x < size(); ++x)
    if (adj_[x].test(x)) return true;
  return false;
}

void GraphView::requireSimpleUndirected() const {
  if (!isUndirected()) throw InvalidStructure("graph must be undirected");
  if (hasLoop()) throw InvalidStructure("graph must be loop-free");
}

GraphView GraphView::fromEdges(int n, const std::vector<std::pair<int, int>>& undirectedEdges) {
  FiniteStructure s(graphSignature(), n);
  for (auto [x, y] : undirectedEdges) {
    s.addTuple("E", {x, y});
    s.addTuple("E", {y, x});
  }
  s.sortTuples();
  return GraphView(std::move(s));
}

GraphView circleGraph(int n) {
  if (n < 2) throw InvalidParameter("circle graph requires n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int d = y - x;
      if (d == 1 || d == n - 1) edges.emplace_back(x, y);
    }
  return GraphView::fromEdges(n, edges);
}

GraphView pathGraph(int m) {
  if (m < 2) throw InvalidParameter("path graph requires m >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x + 1 < m; ++x) edges.emplace_back(x, x + 1);
  return GraphView::fromEdges(m, edges);
}

FiniteStructure cyclicGroup(int n) {
  if (n < 1) throw InvalidParameter("cyclic group requires n >= 1");
  FiniteStructure s(groupSignature(), n);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
  s.setFunctionTable("+", std::move(table));
  return s;
}

bool cyclicGroupIsSimple(int n) {
  if (n < 2) throw InvalidParameter("simplicity question requires n >= 2");
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BipartiteResult checkBipartite(const GraphView& g, BipartiteMode mode) {
  g.requireSimpleUndirected();
  int n = g.size();
  std::vector<int> color(n, -1), parent(n, -1);
  BipartiteResult res;
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      bool conflict = false;
      int conflictY = -1;
      g.neighbors(x).forEach([&](int y) {
        if (conflict) return;
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          parent[y] = x;
          queue.push_back(y);
        } else if (color[y] == color[x]) {
          conflict = true;
          conflictY = y;
        }
      });
      if (conflict) {
        // Join the two BFS-tree paths at their meeting point; the edge (x, y)
        // closes an odd walk.
        auto pathUp = [&](int v) {
          std::vector<int> p{v};
          while (parent[p.back()] != -1) p.push_back(parent[p.back()]);
          return p;
        };
        auto px = pathUp(x), py = pathUp(conflictY);
        while (px.size() > 1 && py.size() > 1 && px[px.size() - 2] == py[py.size() - 2]) {
          px.pop_back();
          py.pop_back();
        }
        // Cyclic vertex list; the closing edge back to the first entry is
        // implicit.
        std::vector<int> walk(px.begin(), px.end());
        for (auto it = py.rbegin() + 1; it != py.rend(); ++it) walk.push_back(*it);
        res.bipartite = false;
        res.oddClosedWalk = std::move(walk);
        return res;
      }
    }
  }
  res.bipartite = true;
  res.coloring = std::move(color);
  if (mode == BipartiteMode::Strict) {
    bool has0 = false, has1 = false;
    for (int c : res.coloring) (c == 0 ? has0 : has1) = true;
    if (!(has0 && has1)) {
      // No nonempty bipartition exists (only possible on tiny edgeless graphs
      // where every vertex got color 0).
      if (n >= 2) {
        res.coloring[0] = 1;  // edgeless with >= 2 vertices still splits
      } else {
        res.bipartite = false;
        res.coloring.clear();
      }
    }
  }
  return res;
}

FiniteStructure posetStructure(const Poset& p) {
  FiniteStructure s(orderSignature(), p.size());
  for (int x = 0; x < p.size(); ++x)
    p.upSet(x).forEach([&](int y) { s.addTuple("<=", {x, y}); });
  s.sortTuples();
  return s;
}

FiniteStructure latticeStructure(const Lattice& l) {
  FiniteStructure s(latticeSignature(), l.size());
  int n = l.size();
  for (int x = 0; x < n; ++x)
    l.poset().upSet(x).forEach([&](int y) { s.addTuple("<=", {x, y}); });
  std::vector<int> joinTable(static_cast<std::size_t>(n) * n), meetTable(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      joinTable[static_cast<std::size_t>(x) * n + y] = l.join(x, y);
      meetTable[static_cast<std::size_t>(x) * n + y] = l.meet(x, y);
    }
  s.setFunctionTable("join", std::move(joinTable));
  s.setFunctionTable("meet", std::move(meetTable));
  s.sortTuples();
  return s;
}

}  // namespace slimcon
