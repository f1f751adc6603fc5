#include "slimcon/diagram.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

namespace slimcon {

namespace {

Lattice latticeFromCovers(const std::vector<std::vector<int>>& upper) {
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < static_cast<int>(upper.size()); ++x)
    for (int y : upper[x]) covers.emplace_back(x, y);
  return Lattice(Poset::fromCovers(static_cast<int>(upper.size()), covers));
}

int indexIn(const std::vector<int>& v, int x) {
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] == x) return i;
  return -1;
}

void replaceIn(std::vector<int>& v, int oldV, int newV) {
  int i = indexIn(v, oldV);
  if (i < 0) throw InternalError("cover list entry missing");
  v[i] = newV;
}

}  // namespace

PlanarSlimLattice::PlanarSlimLattice(std::vector<std::vector<int>> upperCovers,
                                     std::vector<std::vector<int>> lowerCovers,
                                     std::map<std::string, std::pair<int, int>> edgeLabels)
    : upper_(std::move(upperCovers)),
      lower_(std::move(lowerCovers)),
      labels_(std::move(edgeLabels)),
      lattice_(latticeFromCovers(upper_)) {
  int n = size();
  if (static_cast<int>(lower_.size()) != n)
    throw InvalidStructure("upper and lower cover lists disagree in size");
  // Cover lists must mirror the derived cover relation.
  for (int x = 0; x < n; ++x) {
    auto ups = upper_[x];
    auto expected = lattice_.poset().upperCovers(x);
    std::sort(ups.begin(), ups.end());
    auto sortedExpected = expected;
    std::sort(sortedExpected.begin(), sortedExpected.end());
    if (ups != sortedExpected) throw InvalidStructure("upper cover list mismatch");
    auto lows = lower_[x];
    auto expectedLow = lattice_.poset().lowerCovers(x);
    std::sort(lows.begin(), lows.end());
    std::sort(expectedLow.begin(), expectedLow.end());
    if (lows != expectedLow) throw InvalidStructure("lower cover list mismatch");
  }
  // Left-to-right consistency: whenever two elements appear together in an
  // upper list and in a lower list, the relative order matches.
  std::map<std::pair<int, int>, int> seenOrder;
  auto record = [&](const std::vector<int>& list) {
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        int a = list[i], b = list[j];
        int dir = a < b ? 1 : -1;  // +1: smaller id is left
        auto [it, inserted] =
            seenOrder.emplace(std::pair<int, int>(std::min(a, b), std::max(a, b)), dir);
        if (!inserted && it->second != dir)
          throw InvalidStructure("left-to-right cover orders are inconsistent");
      }
  };
  for (int x = 0; x < n; ++x) {
    record(upper_[x]);
    record(lower_[x]);
  }
  for (const auto& [name, e] : labels_) {
    if (!lattice_.poset().covers(e.first, e.second))
      throw InvalidStructure("label " + name + " is not on a cover edge");
  }
  auto sm = checkSemimodular(lattice_);
  if (!sm.ok) throw InvalidStructure("diagram lattice is not semimodular");
  auto slim = checkSlim(lattice_);
  if (!slim.ok) throw InvalidStructure("diagram lattice is not slim");
}

std::pair<int, int> PlanarSlimLattice::labelEdge(const std::string& name) const {
  auto it = labels_.find(name);
  if (it == labels_.end()) throw InvalidParameter("unknown edge label: " + name);
  return it->second;
}

std::vector<FourCell> cells(const PlanarSlimLattice& l) {
  std::vector<FourCell> out;
  for (int o = 0; o < l.size(); ++o) {
    const auto& ups = l.upper(o);
    for (std::size_t i = 0; i + 1 < ups.size(); ++i) {
      int a = ups[i], b = ups[i + 1];
      int t = l.lattice().join(a, b);
      if (!l.lattice().poset().covers(a, t) || !l.lattice().poset().covers(b, t)) continue;
      const auto& lows = l.lower(t);
      int ia = indexIn(lows, a), ib = indexIn(lows, b);
      if (ia >= 0 && ib == ia + 1) out.push_back({o, a, b, t});
    }
  }
  return out;
}

namespace {

// The cell below-and-left of edge (w, z): its upper-right edge is (w, z).
// Returns {bottom, leftCover} or nullopt.
std::optional<std::pair<int, int>> cellLeftOfEdge(const PlanarSlimLattice& l, int w, int z) {
  const auto& lows = l.lower(z);
  int iw = indexIn(lows, w);
  if (iw <= 0) return std::nullopt;
  int q = lows[iw - 1];
  int p = l.lattice().meet(q, w);
  if (!l.lattice().poset().covers(p, q) || !l.lattice().poset().covers(p, w)) return std::nullopt;
  const auto& ups = l.upper(p);
  int iq = indexIn(ups, q);
  if (iq < 0 || iq + 1 >= static_cast<int>(ups.size()) || ups[iq + 1] != w) return std::nullopt;
  return std::make_pair(p, q);
}

// Mirror image: the cell below-and-right of edge (w, z).
std::optional<std::pair<int, int>> cellRightOfEdge(const PlanarSlimLattice& l, int w, int z) {
  const auto& lows = l.lower(z);
  int iw = indexIn(lows, w);
  if (iw < 0 || iw + 1 >= static_cast<int>(lows.size())) return std::nullopt;
  int q = lows[iw + 1];
  int p = l.lattice().meet(w, q);
  if (!l.lattice().poset().covers(p, q) || !l.lattice().poset().covers(p, w)) return std::nullopt;
  const auto& ups = l.upper(p);
  int iw2 = indexIn(ups, w);
  if (iw2 < 0 || iw2 + 1 >= static_cast<int>(ups.size()) || ups[iw2 + 1] != q) return std::nullopt;
  return std::make_pair(p, q);
}

}  // namespace

PlanarSlimLattice insertFork(const PlanarSlimLattice& l, const FourCell& c) {
  auto cs = cells(l);
  if (std::find(cs.begin(), cs.end(), c) == cs.end())
    throw InvalidParameter("fork target is not a 4-cell of the lattice");

  // Staircase edges, computed on the unmodified diagram. The left staircase
  // starts at the cell's left-lower edge and follows upper-right edges of the
  // cells down-left; the right staircase mirrors it.
  std::vector<std::pair<int, int>> leftEdges{{c.bottom, c.left}};
  while (auto nxt = cellLeftOfEdge(l, leftEdges.back().first, leftEdges.back().second))
    leftEdges.push_back(*nxt);
  std::vector<std::pair<int, int>> rightEdges{{c.bottom, c.right}};
  while (auto nxt = cellRightOfEdge(l, rightEdges.back().first, rightEdges.back().second))
    rightEdges.push_back(*nxt);

  for (const auto& [name, e] : l.labels()) {
    for (const auto& edge : leftEdges)
      if (edge == e) throw InternalError("fork would subdivide labeled edge " + name);
    for (const auto& edge : rightEdges)
      if (edge == e) throw InternalError("fork would subdivide labeled edge " + name);
  }

  int n = l.size();
  auto upper = l.upperLists();
  auto lower = l.lowerLists();
  auto addNode = [&]() {
    upper.emplace_back();
    lower.emplace_back();
    return n++;
  };

  int m = addNode();
  // m sits under the cell's top, between the old covers.
  {
    auto& lows = lower[c.top];
    int ia = indexIn(lows, c.left);
    lows.insert(lows.begin() + ia + 1, m);
    upper[m] = {c.top};
  }

  // Left chain: u(i) subdivides leftEdges[i], u(i) covered by the previous
  // chain node (m first), with the new node up-right in its upper list.
  int prev = m;
  for (const auto& [w, z] : leftEdges) {
    int u = addNode();
    replaceIn(upper[w], z, u);
    replaceIn(lower[z], w, u);
    upper[u] = {z, prev};
    lower[u] = {w};
    lower[prev].insert(lower[prev].begin(), u);
    prev = u;
  }
  int rprev = m;
  for (const auto& [w, z] : rightEdges) {
    int vnode = addNode();
    replaceIn(upper[w], z, vnode);
    replaceIn(lower[z], w, vnode);
    upper[vnode] = {rprev, z};
    lower[vnode] = {w};
    lower[rprev].push_back(vnode);
    rprev = vnode;
  }

  return PlanarSlimLattice(std::move(upper), std::move(lower), l.labels());
}

int Trajectories::indexOfEdge(std::pair<int, int> e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) throw InvalidParameter("not a cover edge");
  return static_cast<int>(it - edges.begin());
}

Trajectories trajectories(const PlanarSlimLattice& l) {
  Trajectories t;
  t.edges = l.lattice().poset().coverPairs();
  std::sort(t.edges.begin(), t.edges.end());
  std::vector<int> parent(t.edges.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (const auto& cell : cells(l)) {
    // Opposite sides: left-lower with right-upper, right-lower with left-upper.
    unite(t.indexOfEdge({cell.bottom, cell.left}), t.indexOfEdge({cell.right, cell.top}));
    unite(t.indexOfEdge({cell.bottom, cell.right}), t.indexOfEdge({cell.left, cell.top}));
  }
  t.trajectoryOf.assign(t.edges.size(), -1);
  std::map<int, int> rename;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    int root = find(static_cast<int>(i));
    auto [it, inserted] = rename.emplace(root, t.count);
    if (inserted) ++t.count;
    t.trajectoryOf[i] = it->second;
  }
  return t;
}

PlanarSlimLattice gridDiagram(int k) {
  if (k < 1) throw InvalidParameter("grid requires k >= 1");
  int side = k + 1;
  auto id = [side](int i, int j) { return i * side + j; };
  std::vector<std::vector<int>> upper(side * side), lower(side * side);
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      // Up-left neighbor first, then up-right; mirrored below.
      if (i + 1 < side) upper[id(i, j)].push_back(id(i + 1, j));
      if (j + 1 < side) upper[id(i, j)].push_back(id(i, j + 1));
      if (j - 1 >= 0) lower[id(i, j)].push_back(id(i, j - 1));
      if (i - 1 >= 0) lower[id(i, j)].push_back(id(i - 1, j));
    }
  std::map<std::string, std::pair<int, int>> labels;
  for (int t = 0; t < k; ++t) {
    labels["a" + std::to_string(2 * t)] = {id(k, k - 1 - t), id(k, k - t)};
    labels["a" + std::to_string(2 * t + 1)] = {id(k - 1 - t, k), id(k - t, k)};
  }
  return PlanarSlimLattice(std::move(upper), std::move(lower), std::move(labels));
}

PlanarSlimLattice buildLn(int n) {
  if (n < 4 || n % 2 != 0) throw InvalidParameter("the L_n construction needs even n >= 4");
  int k = n / 2;
  PlanarSlimLattice l = gridDiagram(k);

  // Fork schedule: label pairs in the order of the construction, giving the
  // new middle edges b_0, b_{n-1}, b_1, b_2, ..., b_{n-2}.
  std::vector<std::pair<int, int>> pairs{{0, 1}, {0, n - 1}};
  for (int i = 1; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  std::vector<int> bIndex{0, n - 1};
  for (int i = 1; i + 1 < n; ++i) bIndex.push_back(i);

  for (std::size_t step = 0; step < pairs.size(); ++step) {
    auto [p, q] = pairs[step];
    auto traj = trajectories(l);
    int tp = traj.trajectoryOf[traj.indexOfEdge(l.labelEdge("a" + std::to_string(p)))];
    int tq = traj.trajectoryOf[traj.indexOfEdge(l.labelEdge("a" + std::to_string(q)))];
    std::vector<FourCell> targets;
    for (const auto& cell : cells(l)) {
      int tl = traj.trajectoryOf[traj.indexOfEdge({cell.left, cell.top})];
      int tr = traj.trajectoryOf[traj.indexOfEdge({cell.right, cell.top})];
      if ((tl == tp && tr == tq) || (tl == tq && tr == tp)) targets.push_back(cell);
    }
    if (targets.size() != 1)
      throw InternalError("fork target cell is not unique for label pair a" + std::to_string(p) +
                          ", a" + std::to_string(q) + " (" + std::to_string(targets.size()) +
                          " candidates)");
    int before = l.size();
    auto labels = l.labels();
    l = insertFork(l, targets[0]);
    // The middle element is the first one added; its edge to the cell top is
    // the new labeled edge.
    labels["b" + std::to_string(bIndex[step])] = {before, targets[0].top};
    l = PlanarSlimLattice(l.upperLists(), l.lowerLists(), std::move(labels));
  }
  return l;
}

PlanarSlimLattice randomSlim(std::uint64_t seed, int gridK, int forks) {
  if (gridK < 1) throw InvalidParameter("gridK must be >= 1");
  if (forks < 0) throw InvalidParameter("forks must be >= 0");
  std::mt19937_64 rng(seed);
  PlanarSlimLattice l = gridDiagram(gridK);
  // Strip the boundary labels; they only matter for the L_n schedule.
  l = PlanarSlimLattice(l.upperLists(), l.lowerLists(), {});
  for (int i = 0; i < forks; ++i) {
    auto cs = cells(l);
    std::size_t pick = static_cast<std::size_t>(rng() % cs.size());
    l = insertFork(l, cs[pick]);
  }
  return l;
}

}  // namespace slimcon
