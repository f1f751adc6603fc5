#include <doctest.h>

#include "slimcon/diagram.hpp"
#include "slimcon/io.hpp"
#include "slimcon/verify.hpp"

using namespace slimcon;

TEST_CASE("structure JSON round trip") {
  auto c8 = circleGraph(8).structure();
  auto j = structureToJson(c8);
  auto back = structureFromJson(j);
  CHECK(back.size() == 8);
  CHECK(back.signature() == c8.signature());
  CHECK(structureToJson(back) == j);

  auto z6 = cyclicGroup(6);
  auto jz = structureToJson(z6);
  auto zback = structureFromJson(jz);
  CHECK(zback.functionTable("+") == z6.functionTable("+"));
}

TEST_CASE("poset JSON round trip") {
  auto k4 = crown(4);
  auto j = posetToJson(k4);
  CHECK(j.at("size") == 8);
  auto back = posetFromJson(j);
  REQUIRE(back.size() == k4.size());
  for (int x = 0; x < k4.size(); ++x)
    for (int y = 0; y < k4.size(); ++y) CHECK(back.leq(x, y) == k4.leq(x, y));
}

TEST_CASE("diagram JSON round trip keeps orders and labels") {
  auto l4 = buildLn(4);
  auto j = diagramToJson(l4);
  auto back = diagramFromJson(j);
  CHECK(back.upperLists() == l4.upperLists());
  CHECK(back.lowerLists() == l4.lowerLists());
  CHECK(back.labels() == l4.labels());

  // Lower orders are reconstructible when absent.
  j.erase("lowerCoverOrder");
  auto rebuilt = diagramFromJson(j);
  CHECK(rebuilt.upperLists() == l4.upperLists());
  CHECK(rebuilt.lattice().poset().coverPairs() == l4.lattice().poset().coverPairs());
}

TEST_CASE("congruence lattice serialization carries blocks") {
  auto con = congruenceLattice(chain(3));
  auto j = conLatticeToJson(con);
  CHECK(j.at("size").get<int>() == 4);
  CHECK(j.at("blocks").size() == 4);
  CHECK(partitionToJson(con.congruences[0]).is_array());
}

TEST_CASE("DOT exports") {
  auto dot = graphToDot(circleGraph(4));
  CHECK(dot.find("0 -- 1") != std::string::npos);
  CHECK(dot.find("0 -- 3") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
  // Undirected edges emitted once.
  CHECK(dot.find("1 -- 0") == std::string::npos);

  auto hasse = posetToDot(crown(2));
  CHECK(hasse.find("rankdir=BT") != std::string::npos);
  CHECK(hasse.find("2 -> 0") != std::string::npos);

  auto ddot = diagramToDot(buildLn(4));
  CHECK(ddot.find("label=\"a0\"") != std::string::npos);
}

TEST_CASE("input sniffing and evaluation structures") {
  auto in1 = loadInput(structureToJson(circleGraph(5).structure()));
  CHECK(in1.kind == LoadedInput::Kind::Structure);

  auto in2 = loadInput(posetToJson(crown(3)));
  CHECK(in2.kind == LoadedInput::Kind::Poset);
  // A crown is no lattice, so evaluation sees the bare order signature.
  CHECK(evalStructure(in2).signature() == orderSignature());
  CHECK_THROWS_AS(latticeOf(in2), InvalidStructure);

  auto in3 = loadInput(posetToJson(chain(4).poset()));
  CHECK(evalStructure(in3).signature() == latticeSignature());

  auto in4 = loadInput(diagramToJson(gridDiagram(2)));
  CHECK(in4.kind == LoadedInput::Kind::Diagram);
  CHECK(latticeOf(in4).size() == 9);

  CHECK_THROWS_AS(loadInput(Json{{"foo", 1}}), InvalidParameter);
}

TEST_CASE("verification run serialization") {
  auto run = verifyBirkhoff(3);
  auto j = run.toJson();
  CHECK(j.at("verdict") == "pass");
  CHECK(j.at("checked").get<int>() == 8);
  CHECK(run.summaryText().find("birkhoff: PASS") == 0);
}
