#include <doctest.h>

#include <numeric>

#include "slimcon/structures.hpp"

using namespace slimcon;

TEST_CASE("circle graphs") {
  CHECK_THROWS_AS(circleGraph(1), InvalidParameter);

  auto c3 = circleGraph(3);
  CHECK(c3.size() == 3);
  int tuples = static_cast<int>(c3.structure().tuples("E").size());
  CHECK(tuples == 6);  // 3 undirected edges

  auto c8 = circleGraph(8);
  for (int x = 0; x < 8; ++x) CHECK(c8.degree(x) == 2);

  auto c4 = circleGraph(4);
  std::vector<std::pair<int, int>> expected{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  for (auto [x, y] : expected) {
    CHECK(c4.edge(x, y));
    CHECK(c4.edge(y, x));
  }
  CHECK_FALSE(c4.edge(0, 2));
  CHECK_FALSE(c4.edge(1, 3));
}

TEST_CASE("path graphs") {
  CHECK_THROWS_AS(pathGraph(1), InvalidParameter);
  auto p2 = pathGraph(2);
  CHECK(p2.structure().tuples("E").size() == 2);

  auto p5 = pathGraph(5);
  CHECK(p5.degree(0) == 1);
  CHECK(p5.degree(4) == 1);
  for (int x = 1; x < 4; ++x) CHECK(p5.degree(x) == 2);

  auto p3 = pathGraph(3);
  CHECK(p3.edge(0, 1));
  CHECK(p3.edge(1, 2));
  CHECK_FALSE(p3.edge(0, 2));
}

TEST_CASE("cyclic groups") {
  CHECK_THROWS_AS(cyclicGroup(0), InvalidParameter);
  auto z1 = cyclicGroup(1);
  CHECK(z1.apply("+", {0, 0}) == 0);

  auto z5 = cyclicGroup(5);
  CHECK(z5.apply("+", {3, 4}) == 2);

  auto z6 = cyclicGroup(6);
  for (int x = 0; x < 6; ++x) CHECK(z6.apply("+", {x, 0}) == x);
}

TEST_CASE("group laws hold exhaustively up to order 12") {
  for (int n = 1; n <= 12; ++n) {
    auto z = cyclicGroup(n);
    for (int x = 0; x < n; ++x) {
      CHECK(z.apply("+", {0, x}) == x);
      bool hasInverse = false;
      for (int y = 0; y < n; ++y)
        if (z.apply("+", {x, y}) == 0) hasInverse = true;
      CHECK(hasInverse);
      for (int y = 0; y < n; ++y)
        for (int w = 0; w < n; ++w)
          CHECK(z.apply("+", {z.apply("+", {x, y}), w}) ==
                z.apply("+", {x, z.apply("+", {y, w})}));
    }
  }
}

TEST_CASE("simplicity of cyclic groups is primality") {
  CHECK(cyclicGroupIsSimple(5));
  CHECK_FALSE(cyclicGroupIsSimple(6));
  CHECK(cyclicGroupIsSimple(2));
  CHECK(cyclicGroupIsSimple(11));
  CHECK_FALSE(cyclicGroupIsSimple(9));
  CHECK_THROWS_AS(cyclicGroupIsSimple(1), InvalidParameter);
}

TEST_CASE("bipartiteness with witnesses") {
  CHECK(isBipartite(circleGraph(8)));
  CHECK(isBipartite(pathGraph(5)));

  auto r = checkBipartite(circleGraph(7));
  CHECK_FALSE(r.bipartite);
  REQUIRE(r.oddClosedWalk.size() >= 3);
  CHECK(r.oddClosedWalk.size() % 2 == 1);
  auto g = circleGraph(7);
  for (std::size_t i = 0; i < r.oddClosedWalk.size(); ++i) {
    int a = r.oddClosedWalk[i];
    int b = r.oddClosedWalk[(i + 1) % r.oddClosedWalk.size()];
    CHECK(g.edge(a, b));
  }

  auto pos = checkBipartite(circleGraph(8));
  REQUIRE(pos.coloring.size() == 8);
  for (int x = 0; x < 8; ++x)
    circleGraph(8).neighbors(x).forEach(
        [&](int y) { CHECK(pos.coloring[x] != pos.coloring[y]); });
}

TEST_CASE("circle graphs are bipartite exactly for even length") {
  for (int n = 2; n <= 32; ++n) CHECK(isBipartite(circleGraph(n)) == (n % 2 == 0));
}

TEST_CASE("strict bipartite mode differs only on tiny edgeless graphs") {
  auto single = GraphView::fromEdges(1, {});
  CHECK(isBipartite(single, BipartiteMode::Standard));
  CHECK_FALSE(isBipartite(single, BipartiteMode::Strict));

  auto two = GraphView::fromEdges(2, {});
  CHECK(isBipartite(two, BipartiteMode::Standard));
  auto strict = checkBipartite(two, BipartiteMode::Strict);
  CHECK(strict.bipartite);
  CHECK(strict.coloring[0] != strict.coloring[1]);

  for (int n = 2; n <= 12; ++n)
    CHECK(isBipartite(circleGraph(n), BipartiteMode::Strict) ==
          isBipartite(circleGraph(n), BipartiteMode::Standard));
}

TEST_CASE("directed or loopy input is rejected") {
  FiniteStructure s(graphSignature(), 3);
  s.addTuple("E", {0, 1});  // one direction only
  CHECK_THROWS_AS(checkBipartite(GraphView(std::move(s))), InvalidStructure);

  FiniteStructure loop(graphSignature(), 2);
  loop.addTuple("E", {0, 0});
  CHECK_THROWS_AS(checkBipartite(GraphView(std::move(loop))), InvalidStructure);
}

TEST_CASE("signatures validate names and arities") {
  CHECK_THROWS_AS(Signature({{"R", 2}, {"R", 1}}, {}), InvalidParameter);
  CHECK_THROWS_AS(Signature({{"R", -1}}, {}), InvalidParameter);
  Signature sig({{"R", 2}}, {{"f", 1}});
  CHECK(sig.findRelation("R") != nullptr);
  CHECK(sig.findFunction("f") != nullptr);
  CHECK(sig.findRelation("f") == nullptr);
}

TEST_CASE("structure tables stay inside the domain") {
  FiniteStructure s(graphSignature(), 3);
  CHECK_THROWS_AS(s.addTuple("E", {0, 3}), InvalidStructure);
  FiniteStructure g(groupSignature(), 2);
  CHECK_THROWS_AS(g.setFunctionTable("+", {0, 1, 2, 0}), InvalidStructure);
  CHECK_THROWS_AS(g.setFunctionTable("+", {0, 1, 1}), InvalidStructure);
}
