#include "slimcon/congruence.hpp"

#include <algorithm>
#include <unordered_map>

namespace slimcon {

namespace {

// Union-find scratch structure; canonicalized into Partition afterwards.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep least element as root
    parent[b] = a;
    return true;
  }
  Partition toPartition() {
    std::vector<int> reps(parent.size());
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) reps[i] = find(i);
    return Partition::fromReps(std::move(reps));
  }
};

}  // namespace

Partition::Partition(int n) : rep_(n) {
  if (n < 1) throw InvalidParameter("partition of an empty set");
  for (int i = 0; i < n; ++i) rep_[i] = i;
}

Partition Partition::fromReps(std::vector<int> reps) {
  Partition p(static_cast<int>(reps.size()));
  // Normalize: representative of each block is its least element.
  std::vector<int> least(reps.size(), -1);
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
    int r = reps[i];
    if (r < 0 || r >= static_cast<int>(reps.size()))
      throw InvalidParameter("representative out of range");
    if (least[r] == -1) least[r] = i;
  }
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) p.rep_[i] = least[reps[i]];
  return p;
}

int Partition::blockCount() const {
  int c = 0;
  for (int i = 0; i < size(); ++i)
    if (rep_[i] == i) ++c;
  return c;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out;
  std::vector<int> index(size(), -1);
  for (int i = 0; i < size(); ++i) {
    int r = rep_[i];
    if (index[r] == -1) {
      index[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[index[r]].push_back(i);
  }
  return out;
}

bool Partition::refines(const Partition& o) const {
  for (int i = 0; i < size(); ++i)
    if (o.rep_[i] != o.rep_[rep_[i]]) return false;
  return true;
}

Partition joinPartitions(const Partition& a, const Partition& b) {
  UnionFind uf(a.size());
  for (int i = 0; i < a.size(); ++i) {
    uf.unite(i, a.rep(i));
    uf.unite(i, b.rep(i));
  }
  return uf.toPartition();
}

Partition meetPartitions(const Partition& a, const Partition& b) {
  // Blocks are intersections; canonical reps via first occurrence of the
  // (rep_a, rep_b) pair.
  int n = a.size();
  std::vector<int> reps(n);
  std::unordered_map<std::uint64_t, int> first;
  first.reserve(n * 2);
  for (int i = 0; i < n; ++i) {
    std::uint64_t key = (static_cast<std::uint64_t>(a.rep(i)) << 32) | static_cast<std::uint32_t>(b.rep(i));
    auto [it, inserted] = first.emplace(key, i);
    reps[i] = it->second;
  }
  return Partition::fromReps(std::move(reps));
}

bool isCongruence(const Lattice& l, const Partition& p) {
  int n = l.size();
  for (int x = 0; x < n; ++x) {
    int y = p.rep(x);
    if (y == x) continue;
    for (int z = 0; z < n; ++z) {
      if (!p.same(l.join(x, z), l.join(y, z))) return false;
      if (!p.same(l.meet(x, z), l.meet(y, z))) return false;
    }
  }
  return true;
}

Partition principalCongruence(const Lattice& l, int a, int b) {
  int n = l.size();
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw InvalidParameter("lattice element out of range");
  UnionFind uf(n);
  std::vector<std::pair<int, int>> work;
  auto merge = [&](int x, int y) {
    if (uf.unite(x, y)) work.emplace_back(x, y);
  };
  merge(a, b);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (int z = 0; z < n; ++z) {
      merge(l.join(x, z), l.join(y, z));
      merge(l.meet(x, z), l.meet(y, z));
    }
  }
  return uf.toPartition();
}

std::vector<Partition> coveringPairCongruences(const Lattice& l) {
  std::vector<Partition> out;
  for (auto [x, y] : l.poset().coverPairs()) {
    Partition c = principalCongruence(l, x, y);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Join closure of the covering-pair congruences, starting from the identity.
std::vector<Partition> allCongruences(const Lattice& l, std::size_t sizeGuard) {
  std::vector<Partition> gens = coveringPairCongruences(l);
  std::vector<Partition> all{Partition(l.size())};
  std::unordered_map<std::uint64_t, std::vector<int>> index;
  auto lookup = [&](const Partition& p) {
    auto& bucket = index[hashInts(p.reps())];
    for (int i : bucket)
      if (all[i] == p) return true;
    return false;
  };
  auto insert = [&](const Partition& p) {
    index[hashInts(p.reps())].push_back(static_cast<int>(all.size()) - 1);
  };
  index[hashInts(all[0].reps())].push_back(0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& g : gens) {
      Partition j = joinPartitions(all[i], g);
      if (lookup(j)) continue;
      all.push_back(std::move(j));
      insert(all.back());
      if (all.size() > sizeGuard)
        throw InvalidParameter("congruence lattice exceeds the size guard");
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

ConLattice congruenceLattice(const Lattice& l, std::size_t sizeGuard) {
  std::vector<Partition> all = allCongruences(l, sizeGuard);
  int n = static_cast<int>(all.size());
  std::vector<Bitset> up(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (all[i].refines(all[j])) up[i].set(j);
  ConLattice con{Lattice(Poset(std::move(up))), std::move(all), {}};
  for (const auto& g : coveringPairCongruences(l)) {
    auto it = std::lower_bound(con.congruences.begin(), con.congruences.end(), g);
    con.generators.push_back(static_cast<int>(it - con.congruences.begin()));
  }
  return con;
}

JirCongruences jirCongruencePoset(const Lattice& l) {
  JirCongruences out;
  out.congruences = coveringPairCongruences(l);
  int m = static_cast<int>(out.congruences.size());
  std::vector<Bitset> up(m, Bitset(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (out.congruences[i].refines(out.congruences[j])) up[i].set(j);
  out.order = Poset(std::move(up));
  return out;
}

TwoCoverReport ConCore::twoCover() const {
  for (int i = 0; i < jir.order.size(); ++i) {
    const auto& ups = jir.order.upperCovers(i);
    if (ups.size() > 2) return {false, i, ups};
  }
  return {true, -1, {}};
}

bool ConCore::bmep() const {
  std::vector<int> color(graph.m, -1);
  for (int root = 0; root < graph.m; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int w = 0; w < graph.m; ++w) {
        if (!graph.adj[v][w]) continue;
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

GraphDcepResult ConCore::dcep() const { return graphDcep(graph); }

ConCore conCore(const Lattice& l, std::size_t sizeGuard) {
  ConCore core;
  core.jir = jirCongruencePoset(l);
  int m = core.jir.order.size();
  for (int i = 0; i < m; ++i)
    if (core.jir.order.upperCovers(i).empty()) core.maxJir.push_back(i);
  int mm = static_cast<int>(core.maxJir.size());
  core.graph = EGraph::empty(mm);
  for (int i = 0; i < mm; ++i)
    for (int j = i + 1; j < mm; ++j) {
      // Edge: a common lower cover inside J(Con L).
      bool cover = false;
      for (int t = 0; t < m && !cover; ++t)
        if (core.jir.order.covers(t, core.maxJir[i]) && core.jir.order.covers(t, core.maxJir[j]))
          cover = true;
      core.graph.adj[i][j] = core.graph.adj[j][i] = cover;
    }
  // |Con L| by join closure (counting only), |Id(J(Con L))| by down-set count.
  {
    std::vector<Partition> all{Partition(l.size())};
    std::unordered_map<std::uint64_t, std::vector<int>> index;
    index[hashInts(all[0].reps())].push_back(0);
    auto contains = [&](const Partition& p) {
      auto it = index.find(hashInts(p.reps()));
      if (it == index.end()) return false;
      for (int i : it->second)
        if (all[i] == p) return true;
      return false;
    };
    for (std::size_t i = 0; i < all.size(); ++i)
      for (const auto& g : core.jir.congruences) {
        Partition j = joinPartitions(all[i], g);
        if (contains(j)) continue;
        index[hashInts(j.reps())].push_back(static_cast<int>(all.size()));
        all.push_back(std::move(j));
        if (all.size() > sizeGuard)
          throw InvalidParameter("congruence lattice exceeds the size guard");
      }
    core.conSize = all.size();
  }
  core.downSetCount = core.jir.order.countDownSets();
  return core;
}

}  // namespace slimcon
