#include "slimcon/props.hpp"

#include <algorithm>

namespace slimcon {

std::optional<std::vector<int>> inducedCircleOrder(const EGraph& g, const std::vector<int>& subset) {
  int k = static_cast<int>(subset.size());
  if (k < 3) return std::nullopt;
  std::vector<std::vector<int>> nbr(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && g.adj[subset[i]][subset[j]]) nbr[i].push_back(j);
  for (int i = 0; i < k; ++i)
    if (nbr[i].size() != 2) return std::nullopt;
  // Walk from vertex 0; a single circle visits everything.
  std::vector<int> order{0};
  int prev = -1, cur = 0;
  for (int step = 1; step < k; ++step) {
    int next = (nbr[cur][0] == prev) ? nbr[cur][1] : nbr[cur][0];
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  int closing = (nbr[cur][0] == prev) ? nbr[cur][1] : nbr[cur][0];
  if (closing != 0) return std::nullopt;
  std::vector<int> seen(k, 0);
  for (int i : order) seen[i] = 1;
  if (std::count(seen.begin(), seen.end(), 1) != k) return std::nullopt;
  std::vector<int> out;
  out.reserve(k);
  for (int i : order) out.push_back(subset[i]);
  return out;
}

bool inducedDegreesExactlyTwo(const EGraph& g, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  for (int a : subset) {
    int deg = 0;
    for (int b : subset)
      if (a != b && g.adj[a][b]) ++deg;
    if (deg != 2) return false;
  }
  return true;
}

std::vector<std::vector<int>> spannedCircleSubsets(const EGraph& g) {
  if (g.m > 20) throw InvalidParameter("maxJir graph too large for circle enumeration");
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << g.m); ++mask) {
    if (__builtin_popcount(mask) < 3) continue;
    std::vector<int> subset;
    for (int i = 0; i < g.m; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    if (auto order = inducedCircleOrder(g, subset)) out.push_back(std::move(*order));
  }
  return out;
}

std::vector<std::array<int, 2>> vSetsOf(const EGraph& g, const std::vector<int>& Y) {
  std::vector<std::array<int, 2>> out;
  for (std::size_t i = 0; i < Y.size(); ++i)
    for (std::size_t j = i + 1; j < Y.size(); ++j)
      if (g.adj[Y[i]][Y[j]]) out.push_back({Y[i], Y[j]});
  return out;
}

std::vector<std::array<int, 4>> wSetsOf(const EGraph& g, const std::vector<int>& Y) {
  std::vector<std::array<int, 4>> out;
  int k = static_cast<int>(Y.size());
  // Enumerate 4-subsets, keep those inducing a path a0-a1-a2-a3.
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c)
        for (int d = c + 1; d < k; ++d) {
          int q[4] = {Y[a], Y[b], Y[c], Y[d]};
          int deg[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adj[q[i]][q[j]]) {
                ++deg[i];
                ++deg[j];
                ++edges;
              }
          if (edges != 3) continue;
          int ends[2], mids[2], ei = 0, mi = 0;
          bool shape = true;
          for (int i = 0; i < 4; ++i) {
            if (deg[i] == 1) {
              if (ei < 2) ends[ei] = i;
              ++ei;
            } else if (deg[i] == 2) {
              if (mi < 2) mids[mi] = i;
              ++mi;
            } else {
              shape = false;
            }
          }
          if (!shape || ei != 2 || mi != 2) continue;
          // Path order: end, its middle neighbor, the other middle, the other end.
          int m0 = g.adj[q[ends[0]]][q[mids[0]]] ? mids[0] : mids[1];
          int m1 = (m0 == mids[0]) ? mids[1] : mids[0];
          out.push_back({q[ends[0]], q[m0], q[m1], q[ends[1]]});
        }
  return out;
}

VwSubsetCheck checkVwSubset(const EGraph& g, const std::vector<int>& Y) {
  if (Y.empty()) return {false, -1, "empty subset joins to the bottom element"};
  auto vs = vSetsOf(g, Y);
  auto ws = wSetsOf(g, Y);
  for (int p : Y) {
    int cv = 0, cw = 0;
    for (const auto& s : vs)
      if (s[0] == p || s[1] == p) ++cv;
    for (const auto& s : ws)
      if (s[0] == p || s[1] == p || s[2] == p || s[3] == p) ++cw;
    bool pass = (cw == 1) || (cw == 0 && cv == 1);
    if (!pass)
      return {false, p,
              "vertex lies in " + std::to_string(cv) + " V-sets and " + std::to_string(cw) +
                  " W-sets"};
  }
  return {true, -1, ""};
}

namespace {

// Alternating partition of an even circle (the decomposition used in the
// structure theorem): consecutive pairs alternate between the two sides; when
// the length is 2 mod 4 one side starts with a block of four.
std::pair<std::vector<int>, std::vector<int>> alternatingPartition(const std::vector<int>& circle) {
  int n = static_cast<int>(circle.size());
  std::vector<int> U, V;
  if (n % 4 == 0) {
    for (int i = 0; i < n; i += 4) {
      U.push_back(circle[i]);
      U.push_back(circle[i + 1]);
      V.push_back(circle[i + 2]);
      V.push_back(circle[i + 3]);
    }
  } else {
    for (int i = 0; i < 4; ++i) U.push_back(circle[i]);
    for (int i = 4; i < n; i += 4) {
      V.push_back(circle[i]);
      V.push_back(circle[i + 1]);
      if (i + 2 < n) {
        U.push_back(circle[i + 2]);
        U.push_back(circle[i + 3]);
      }
    }
  }
  return {U, V};
}

}  // namespace

GraphDcepResult graphDcep(const EGraph& g) {
  GraphDcepResult res;
  for (const auto& circle : spannedCircleSubsets(g)) {
    int n = static_cast<int>(circle.size());
    bool found = false;
    GraphDecomposition dec;
    dec.circle = circle;
    if (n % 2 == 0) {
      auto [U, V] = alternatingPartition(circle);
      if (checkVwSubset(g, U).ok && checkVwSubset(g, V).ok) {
        dec.Y = U;
        dec.Z = V;
        dec.fromAlternatingPartition = true;
        found = true;
      }
    }
    if (!found) {
      if (n <= 16) {
        for (std::uint32_t sub = 1; sub + 1 < (1u << n) && !found; ++sub) {
          std::vector<int> Y, Z;
          for (int i = 0; i < n; ++i)
            ((sub >> i) & 1 ? Y : Z).push_back(circle[i]);
          if (checkVwSubset(g, Y).ok && checkVwSubset(g, Z).ok) {
            dec.Y = Y;
            dec.Z = Z;
            dec.fromAlternatingPartition = false;
            found = true;
            ++res.fallbackUses;
          }
        }
      }
    }
    if (!found) {
      res.ok = false;
      res.refuterCircle = circle;
      res.decompositions.clear();
      return res;
    }
    res.decompositions.push_back(std::move(dec));
  }
  return res;
}

std::vector<int> DistributiveCore::maxJirBelow(int x) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(maxJir.size()); ++i)
    if (lattice->leq(maxJir[i], x)) out.push_back(i);
  return out;
}

bool DistributiveCore::joinOfMaxJirBelowIs(int x) const {
  std::vector<int> elems;
  for (int i : maxJirBelow(x)) elems.push_back(maxJir[i]);
  return lattice->joinOf(elems) == x;
}

DistributiveCore analyzeDistributive(const Lattice& d) {
  if (!isDistributive(d)) throw InvalidStructure("operation requires a distributive lattice");
  DistributiveCore core;
  core.lattice = &d;
  core.jir = joinIrreducibles(d);
  int jn = static_cast<int>(core.jir.elements.size());
  for (int i = 0; i < jn; ++i)
    if (core.jir.order.upperCovers(i).empty()) {
      core.maxJirPos.push_back(i);
      core.maxJir.push_back(core.jir.elements[i]);
    }
  int m = static_cast<int>(core.maxJir.size());
  core.graph = EGraph::empty(m);
  core.boundGraph = EGraph::empty(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool bound = false, cover = false;
      for (int t = 0; t < jn && !(bound && cover); ++t) {
        if (core.jir.order.leq(t, core.maxJirPos[i]) && core.jir.order.leq(t, core.maxJirPos[j])) bound = true;
        if (core.jir.order.covers(t, core.maxJirPos[i]) && core.jir.order.covers(t, core.maxJirPos[j]))
          cover = true;
      }
      core.graph.adj[i][j] = core.graph.adj[j][i] = cover;
      core.boundGraph.adj[i][j] = core.boundGraph.adj[j][i] = bound;
    }
  return core;
}

MaxJirGraph maxJirGraph(const Lattice& d) {
  auto core = analyzeDistributive(d);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < core.graph.m; ++i)
    for (int j = i + 1; j < core.graph.m; ++j)
      if (core.graph.adj[i][j]) edges.emplace_back(i, j);
  return {GraphView::fromEdges(std::max(core.graph.m, 1), edges), core.maxJir};
}

TwoCoverReport hasTwoCover(const Lattice& d) {
  auto core = analyzeDistributive(d);
  int jn = static_cast<int>(core.jir.elements.size());
  for (int i = 0; i < jn; ++i) {
    const auto& ups = core.jir.order.upperCovers(i);
    if (ups.size() > 2) {
      TwoCoverReport r{false, core.jir.elements[i], {}};
      for (int u : ups) r.covers.push_back(core.jir.elements[u]);
      return r;
    }
  }
  return {true, -1, {}};
}

namespace {

// Shortest odd circle of g; chord-free because any chord would yield a
// shorter odd circle. Empty when g is bipartite.
std::vector<int> shortestOddCircle(const EGraph& g) {
  int best = -1;
  std::vector<int> bestCycle;
  for (int s = 0; s < g.m; ++s) {
    // BFS over (vertex, parity) layers.
    std::vector<std::array<int, 2>> dist(g.m, {-1, -1}), from(g.m, {-1, -1});
    dist[s][0] = 0;
    std::vector<std::pair<int, int>> queue{{s, 0}};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      auto [v, p] = queue[qi];
      for (int w = 0; w < g.m; ++w) {
        if (!g.adj[v][w]) continue;
        if (dist[w][1 - p] == -1) {
          dist[w][1 - p] = dist[v][p] + 1;
          from[w][1 - p] = v;
          queue.emplace_back(w, 1 - p);
        }
      }
    }
    if (dist[s][1] == -1) continue;
    if (best == -1 || dist[s][1] < best) {
      best = dist[s][1];
      // Reconstruct the closed odd walk; the shortest one is a simple circle.
      std::vector<int> walk;
      int v = s, p = 1;
      while (!(v == s && p == 0)) {
        walk.push_back(v);
        int pv = from[v][p];
        v = pv;
        p = 1 - p;
      }
      std::reverse(walk.begin(), walk.end());
      bestCycle = std::move(walk);
    }
  }
  return bestCycle;
}

}  // namespace

BmepReport hasBmep(const Lattice& d) {
  auto core = analyzeDistributive(d);
  BmepReport rep;
  auto color2 = [](const EGraph& g, std::array<std::vector<int>, 2>* parts) {
    std::vector<int> color(g.m, -1);
    for (int root = 0; root < g.m; ++root) {
      if (color[root] != -1) continue;
      color[root] = 0;
      std::vector<int> queue{root};
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int w = 0; w < g.m; ++w) {
          if (!g.adj[v][w]) continue;
          if (color[w] == -1) {
            color[w] = 1 - color[v];
            queue.push_back(w);
          } else if (color[w] == color[v]) {
            return false;
          }
        }
      }
    }
    if (parts)
      for (int v = 0; v < g.m; ++v) (*parts)[color[v]].push_back(v);
    return true;
  };
  std::array<std::vector<int>, 2> parts;
  rep.ok = color2(core.graph, &parts);
  rep.boundReadingOk = color2(core.boundGraph, nullptr);
  rep.readingsAgree = rep.ok == rep.boundReadingOk;
  if (rep.ok) {
    for (int side = 0; side < 2; ++side)
      for (int v : parts[side]) rep.parts[side].push_back(core.maxJir[v]);
  } else {
    for (int v : shortestOddCircle(core.graph)) rep.oddCircle.push_back(core.maxJir[v]);
  }
  return rep;
}

std::vector<std::array<int, 2>> vSets(const Lattice& d, int x) {
  auto core = analyzeDistributive(d);
  auto below = core.maxJirBelow(x);
  auto vs = vSetsOf(core.graph, below);
  for (auto& s : vs)
    for (auto& e : s) e = core.maxJir[e];
  return vs;
}

std::vector<std::array<int, 4>> wSets(const Lattice& d, int x) {
  auto core = analyzeDistributive(d);
  auto below = core.maxJirBelow(x);
  auto ws = wSetsOf(core.graph, below);
  for (auto& s : ws)
    for (auto& e : s) e = core.maxJir[e];
  return ws;
}

namespace {

VwElementReport vwElementWithCore(const DistributiveCore& core, int x) {
  const Lattice& d = *core.lattice;
  if (x == d.bottom()) return {false, "the bottom element is excluded"};
  auto below = core.maxJirBelow(x);
  std::vector<int> elems;
  for (int i : below) elems.push_back(core.maxJir[i]);
  if (d.joinOf(elems) != x)
    return {false, "x is not the join of the maximal join-irreducibles below it"};
  auto check = checkVwSubset(core.graph, below);
  if (!check.ok)
    return {false, check.offender >= 0
                       ? "element " + std::to_string(core.maxJir[check.offender]) + ": " + check.reason
                       : check.reason};
  return {true, ""};
}

}  // namespace

VwElementReport isVwElement(const Lattice& d, int x) {
  auto core = analyzeDistributive(d);
  return vwElementWithCore(core, x);
}

CyclicElementsReport cyclicElements(const Lattice& d) {
  auto core = analyzeDistributive(d);
  auto twoCover = hasTwoCover(d);
  if (!twoCover.ok)
    throw InvalidStructure("cyclic elements are defined only under the Two-cover Property");
  CyclicElementsReport rep;
  for (const auto& circle : spannedCircleSubsets(core.graph)) {
    std::vector<int> elems;
    for (int v : circle) elems.push_back(core.maxJir[v]);
    int x = d.joinOf(elems);
    // The join recovers exactly this vertex set, so distinct circles give
    // distinct cyclic elements.
    rep.elements.push_back(x);
    rep.circles.push_back(elems);
  }
  return rep;
}

bool isMulticyclic(const Lattice& d, int x) {
  auto core = analyzeDistributive(d);
  auto below = core.maxJirBelow(x);
  if (!inducedDegreesExactlyTwo(core.graph, below)) return false;
  return core.joinOfMaxJirBelowIs(x);
}

DcepReport hasDcep(const Lattice& d) {
  auto core = analyzeDistributive(d);
  if (!hasTwoCover(d).ok)
    throw InvalidStructure("the DCEP check requires the Two-cover Property");
  auto graphRes = graphDcep(core.graph);
  DcepReport rep;
  rep.ok = graphRes.ok;
  rep.fallbackUses = graphRes.fallbackUses;
  if (!graphRes.ok) {
    std::vector<int> elems;
    for (int v : graphRes.refuterCircle) elems.push_back(core.maxJir[v]);
    rep.refuter = d.joinOf(elems);
    rep.refuterCircle = elems;
    return rep;
  }
  for (const auto& dec : graphRes.decompositions) {
    DcepDecomposition out;
    std::vector<int> circleElems, yElems, zElems;
    for (int v : dec.circle) circleElems.push_back(core.maxJir[v]);
    for (int v : dec.Y) yElems.push_back(core.maxJir[v]);
    for (int v : dec.Z) zElems.push_back(core.maxJir[v]);
    out.x = d.joinOf(circleElems);
    out.y = d.joinOf(yElems);
    out.z = d.joinOf(zElems);
    out.maxBelowY = yElems;
    out.maxBelowZ = zElems;
    out.fromAlternatingPartition = dec.fromAlternatingPartition;
    rep.decompositions.push_back(std::move(out));
  }
  return rep;
}

std::optional<std::pair<int, int>> dcepWitness(const Lattice& d, int x) {
  auto core = analyzeDistributive(d);
  if (!hasTwoCover(d).ok)
    throw InvalidStructure("the DCEP witness search requires the Two-cover Property");
  auto below = core.maxJirBelow(x);
  auto circle = inducedCircleOrder(core.graph, below);
  if (!circle || !core.joinOfMaxJirBelowIs(x))
    throw InvalidParameter("element is not cyclic");
  int n = static_cast<int>(circle->size());
  auto tryPartition = [&](const std::vector<int>& Y, const std::vector<int>& Z)
      -> std::optional<std::pair<int, int>> {
    if (!checkVwSubset(core.graph, Y).ok || !checkVwSubset(core.graph, Z).ok) return std::nullopt;
    std::vector<int> ye, ze;
    for (int v : Y) ye.push_back(core.maxJir[v]);
    for (int v : Z) ze.push_back(core.maxJir[v]);
    return std::make_pair(d.joinOf(ye), d.joinOf(ze));
  };
  if (n % 2 == 0) {
    auto [U, V] = alternatingPartition(*circle);
    if (auto w = tryPartition(U, V)) return w;
  }
  if (n <= 16) {
    for (std::uint32_t sub = 1; sub + 1 < (1u << n); ++sub) {
      std::vector<int> Y, Z;
      for (int i = 0; i < n; ++i)
        ((sub >> i) & 1 ? Y : Z).push_back((*circle)[i]);
      if (auto w = tryPartition(Y, Z)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace slimcon
