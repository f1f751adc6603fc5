#include <doctest.h>

#include <algorithm>

#include "slimcon/congruence.hpp"
#include "slimcon/diagram.hpp"
#include "slimcon/enumposets.hpp"
#include "slimcon/props.hpp"

using namespace slimcon;

TEST_CASE("maxJir graph shapes") {
  // Down-set lattices of crowns: the n-cycle on the maximal elements.
  for (int n = 3; n <= 6; ++n) {
    auto d = downsetLattice(crown(n)).lattice;
    auto g = maxJirGraph(d);
    CHECK(g.vertexElements.size() == static_cast<std::size_t>(n));
    for (int v = 0; v < g.graph.size(); ++v) CHECK(g.graph.degree(v) == 2);
    CHECK(isBipartite(g.graph) == (n % 2 == 0));
  }
  // A chain has a single maximal join-irreducible and no edges.
  auto g = maxJirGraph(chain(4));
  CHECK(g.vertexElements.size() == 1);
  CHECK(g.graph.degree(0) == 0);
  // The Boolean cube's atoms share no join-irreducible strictly below them.
  auto cube = downsetLattice(antichain(3)).lattice;
  auto gc = maxJirGraph(cube);
  CHECK(gc.vertexElements.size() == 3);
  for (int v = 0; v < 3; ++v) CHECK(gc.graph.degree(v) == 0);

  CHECK_THROWS_AS(maxJirGraph(Lattice(Poset::fromCovers(
                      5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}))),
                  InvalidStructure);  // not distributive
}

TEST_CASE("two-cover property") {
  for (int n = 3; n <= 6; ++n) CHECK(hasTwoCover(downsetLattice(crown(n)).lattice).ok);
  CHECK(hasTwoCover(chain(5)).ok);

  // One bottom under three tops: the bottom has three covers inside J.
  Poset p = Poset::fromCovers(4, {{0, 1}, {0, 2}, {0, 3}});
  auto r = hasTwoCover(downsetLattice(p).lattice);
  CHECK_FALSE(r.ok);
  CHECK(r.covers.size() == 3);
}

TEST_CASE("bipartite maximal elements property") {
  CHECK(hasBmep(downsetLattice(crown(8)).lattice).ok);
  auto neg = hasBmep(downsetLattice(crown(3)).lattice);
  CHECK_FALSE(neg.ok);
  REQUIRE(neg.oddCircle.size() >= 3);
  CHECK(neg.oddCircle.size() % 2 == 1);

  auto con = congruenceLattice(buildLn(8).lattice());
  CHECK(hasBmep(con.lattice).ok);
}

TEST_CASE("negative BMEP witnesses are spanned odd circles") {
  for (int n : {3, 5, 7}) {
    auto d = downsetLattice(crown(n)).lattice;
    auto rep = hasBmep(d);
    REQUIRE_FALSE(rep.ok);
    auto core = analyzeDistributive(d);
    std::vector<int> pos;
    for (int elem : rep.oddCircle) {
      auto it = std::find(core.maxJir.begin(), core.maxJir.end(), elem);
      REQUIRE(it != core.maxJir.end());
      pos.push_back(static_cast<int>(it - core.maxJir.begin()));
    }
    int k = static_cast<int>(pos.size());
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        bool expect = (j == i + 1) || (i == 0 && j == k - 1);
        CHECK(core.graph.adj[pos[i]][pos[j]] == expect);
      }
  }
}

TEST_CASE("the two E-graph readings diverge exactly on hidden shared witnesses") {
  // J = {z < w < a, w < c, z < b}: all three pairs of maximal elements share
  // a lower bound, but only (a, c) share a lower cover.
  Poset j = Poset::fromCovers(5, {{0, 1}, {1, 2}, {1, 4}, {0, 3}});
  auto d = downsetLattice(j).lattice;
  CHECK(d.size() < 18);
  CHECK(hasTwoCover(d).ok);
  auto rep = hasBmep(d);
  CHECK(rep.ok);                    // cover reading: a single edge
  CHECK_FALSE(rep.boundReadingOk);  // bound reading: a triangle
  CHECK_FALSE(rep.readingsAgree);
  // Under the cover reading the triangle is no circle, so nothing is cyclic
  // and the decomposition property holds vacuously.
  CHECK(cyclicElements(d).elements.empty());
  CHECK(hasDcep(d).ok);
}

TEST_CASE("V-sets and W-sets") {
  auto dl4 = downsetLattice(crown(4));
  const auto& d4 = dl4.lattice;
  auto core = analyzeDistributive(d4);
  // x = join of two adjacent crown tops.
  int a0 = core.maxJir[0], a1 = -1;
  for (int i = 1; i < static_cast<int>(core.maxJir.size()); ++i)
    if (core.graph.adj[0][i]) a1 = core.maxJir[i];
  REQUIRE(a1 != -1);
  int x = d4.join(a0, a1);
  auto vs = vSets(d4, x);
  REQUIRE(vs.size() == 1);
  CHECK(((vs[0][0] == a0 && vs[0][1] == a1) || (vs[0][0] == a1 && vs[0][1] == a0)));
  CHECK(wSets(d4, x).empty());

  CHECK(vSets(d4, d4.bottom()).empty());
  CHECK(wSets(d4, d4.bottom()).empty());

  // Four consecutive tops of the 8-crown form a W-set.
  auto d8 = downsetLattice(crown(8)).lattice;
  auto core8 = analyzeDistributive(d8);
  auto circle = inducedCircleOrder(core8.graph, {0, 1, 2, 3, 4, 5, 6, 7});
  REQUIRE(circle.has_value());
  std::vector<int> arc;
  for (int i = 0; i < 4; ++i) arc.push_back(core8.maxJir[(*circle)[i]]);
  int x8 = d8.joinOf(arc);
  auto ws = wSets(d8, x8);
  REQUIRE(ws.size() == 1);
  std::vector<int> got(ws[0].begin(), ws[0].end());
  std::sort(got.begin(), got.end());
  std::sort(arc.begin(), arc.end());
  CHECK(got == arc);
}

TEST_CASE("VW-elements") {
  auto dl4 = downsetLattice(crown(4));
  const auto& d4 = dl4.lattice;
  auto core = analyzeDistributive(d4);
  int a0 = core.maxJir[0], a1 = -1;
  for (int i = 1; i < static_cast<int>(core.maxJir.size()); ++i)
    if (core.graph.adj[0][i]) a1 = core.maxJir[i];
  CHECK(isVwElement(d4, d4.join(a0, a1)).ok);
  CHECK_FALSE(isVwElement(d4, d4.bottom()).ok);
  CHECK_FALSE(isVwElement(d4, d4.top()).ok);  // every top lies in two V-sets

  auto d8 = downsetLattice(crown(8)).lattice;
  auto core8 = analyzeDistributive(d8);
  auto circle = inducedCircleOrder(core8.graph, {0, 1, 2, 3, 4, 5, 6, 7});
  std::vector<int> arc;
  for (int i = 0; i < 4; ++i) arc.push_back(core8.maxJir[(*circle)[i]]);
  CHECK(isVwElement(d8, d8.joinOf(arc)).ok);  // one W-set covers the arc
}

TEST_CASE("cyclic and multicyclic elements") {
  for (int n = 3; n <= 8; ++n) {
    auto d = downsetLattice(crown(n)).lattice;
    auto rep = cyclicElements(d);
    REQUIRE(rep.elements.size() == 1);
    CHECK(rep.elements[0] == d.top());
    CHECK(rep.circles[0].size() == static_cast<std::size_t>(n));
    CHECK(isMulticyclic(d, d.top()));
    CHECK_FALSE(isMulticyclic(d, d.bottom()));
  }

  // Every cyclic element is multicyclic.
  auto d5 = downsetLattice(crown(5)).lattice;
  for (int x : cyclicElements(d5).elements) CHECK(isMulticyclic(d5, x));

  // Two disjoint triangles: the top is multicyclic but not cyclic.
  auto dd = downsetLattice(disjointSum({crown(3), crown(3)})).lattice;
  CHECK(isMulticyclic(dd, dd.top()));
  auto cyc = cyclicElements(dd);
  CHECK(std::find(cyc.elements.begin(), cyc.elements.end(), dd.top()) == cyc.elements.end());
  CHECK(cyc.elements.size() == 2);  // the two triangle joins

  // The precondition is enforced.
  Poset p = Poset::fromCovers(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_THROWS_AS(cyclicElements(downsetLattice(p).lattice), InvalidStructure);
}

TEST_CASE("decomposable cyclic elements property on crowns") {
  for (int n = 3; n <= 8; ++n) {
    auto d = downsetLattice(crown(n)).lattice;
    auto rep = hasDcep(d);
    CHECK(rep.ok == (n % 2 == 0));
    if (rep.ok) {
      REQUIRE(rep.decompositions.size() == 1);
      const auto& dec = rep.decompositions[0];
      CHECK(dec.fromAlternatingPartition);
      CHECK(d.join(dec.y, dec.z) == d.top());
      CHECK(isVwElement(d, dec.y).ok);
      CHECK(isVwElement(d, dec.z).ok);
      for (int m : maxJoinIrreducibles(d)) CHECK_FALSE(d.leq(m, dec.y) && d.leq(m, dec.z));
      if (n % 4 == 0) CHECK(dec.maxBelowY.size() == dec.maxBelowZ.size());
      if (n % 4 == 2) CHECK(dec.maxBelowY.size() == 4);
    } else {
      CHECK(rep.refuter == d.top());
    }
    CHECK(rep.fallbackUses == 0);
  }
}

TEST_CASE("dcep witness search on a cyclic element") {
  auto d = downsetLattice(crown(6)).lattice;
  auto w = dcepWitness(d, d.top());
  REQUIRE(w.has_value());
  auto [y, z] = *w;
  CHECK(d.join(y, z) == d.top());
  CHECK(isVwElement(d, y).ok);
  CHECK(isVwElement(d, z).ok);

  auto d5 = downsetLattice(crown(5)).lattice;
  CHECK_FALSE(dcepWitness(d5, d5.top()).has_value());
  CHECK_THROWS_AS(dcepWitness(d5, d5.bottom()), InvalidParameter);  // not cyclic
}

TEST_CASE("theorem instances at small scale") {
  // DCEP coincides with BMEP on the Two-cover members of the size-<=5 catalog.
  auto cat = enumeratePosets(5);
  int divergences = 0;
  for (const auto& sizeClass : cat.bySize)
    for (const auto& p : sizeClass) {
      auto d = downsetLattice(p).lattice;
      if (!hasTwoCover(d).ok) continue;
      auto bmep = hasBmep(d);
      auto dcep = hasDcep(d);
      CHECK(bmep.ok == dcep.ok);
      CHECK(dcep.fallbackUses == 0);
      if (!bmep.readingsAgree) ++divergences;
      if (d.size() < 18) CHECK(cyclicElements(d).elements.empty());
    }
  // The finding: the readings genuinely diverge within this catalog.
  CHECK(divergences > 0);
}

TEST_CASE("congruence core checks agree with the lattice route") {
  for (std::uint64_t seed : {11ull, 12ull}) {
    auto l = randomSlim(seed, 2, 3);
    auto core = conCore(l.lattice());
    auto con = congruenceLattice(l.lattice());
    CHECK(core.distributive() == isDistributive(con.lattice));
    CHECK(core.twoCover().ok == hasTwoCover(con.lattice).ok);
    CHECK(core.bmep() == hasBmep(con.lattice).ok);
    CHECK(core.dcep().ok == hasDcep(con.lattice).ok);
  }
}
