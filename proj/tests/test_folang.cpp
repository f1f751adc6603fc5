#include <doctest.h>

#include <numeric>
#include <optional>

#include "slimcon/builtins.hpp"
#include "slimcon/eval.hpp"
#include "slimcon/lattice.hpp"
#include "slimcon/parser.hpp"
#include "slimcon/props.hpp"
#include "slimcon/separation.hpp"

using namespace slimcon;

TEST_CASE("parsing the documented examples") {
  auto f = parse("ALL x. EX y. E(x,y)", graphSignature());
  CHECK(f.kind() == Formula::Kind::Forall);
  CHECK(f.freeVariables().empty());

  // The identically false sentence comes out structurally equal to the
  // library version.
  auto lf = parse("EX x. (x = x & ~(x = x))", graphSignature());
  CHECK(lf == builtinFormula("lambda_false"));

  auto div2 = parse("ALL x. EX y. +(y,y) = x", groupSignature());
  CHECK(div2 == builtinFormula("eta", 2));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse("ALL x EX y. E(x,y)", graphSignature()), ParseError);
  CHECK_THROWS_AS(parse("EX x. F(x)", graphSignature()), ParseError);   // unknown symbol
  CHECK_THROWS_AS(parse("EX x. E(x)", graphSignature()), ParseError);   // arity
  CHECK_THROWS_AS(parse("EX x. x <= x", graphSignature()), ParseError); // no order relation
  try {
    parse("ALL x.\n EX y. E(x,@)", graphSignature());
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("strict comparison is sugar") {
  auto f = parse("EX x. EX y. x < y", orderSignature());
  auto g = parse("EX x. EX y. (x <= y & ~(x = y))", orderSignature());
  CHECK(f == g);
}

TEST_CASE("pretty print round trip for the library") {
  for (const auto& info : builtinCatalog()) {
    std::vector<std::optional<int>> params;
    if (!info.takesParam)
      params.push_back(std::nullopt);
    else if (info.name == "lambda")
      params = {{-1}, {1}, {2}, {5}};
    else if (info.name == "xi")
      params = {{2}, {3}, {5}};
    else
      params = {{1}, {2}, {4}};
    for (auto p : params) {
      Formula f = builtinFormula(info.name, p);
      Formula again = parse(prettyPrint(f), info.signature);
      CHECK_MESSAGE(f == again, info.name, " does not round trip");
    }
  }
}

TEST_CASE("lambda sentences count elements") {
  auto c8 = circleGraph(8).structure();
  CHECK(evalFormula(builtinFormula("lambda", 3), c8));
  CHECK_FALSE(evalFormula(builtinFormula("lambda", 9), c8));
  CHECK_FALSE(evalFormula(builtinFormula("lambda_false"), c8));
  CHECK_FALSE(evalFormula(builtinFormula("lambda_false"), cyclicGroup(6)));
}

TEST_CASE("eta and tau match the gcd rule") {
  for (int k = 1; k <= 6; ++k)
    for (int n = 1; n <= 8; ++n) {
      bool coprime = std::gcd(k, n) == 1;
      auto zn = cyclicGroup(n);
      CHECK(evalFormula(builtinFormula("eta", k), zn) == coprime);
      CHECK(evalFormula(builtinFormula("tau", k), zn) == coprime);
    }
}

TEST_CASE("crown sentences") {
  for (int n = 2; n <= 6; ++n) {
    auto kn = posetStructure(crown(n));
    CHECK(evalFormula(builtinFormula("delta1"), kn));
    CHECK(evalFormula(builtinFormula("delta2"), kn));
    CHECK(evalFormula(builtinFormula("delta3"), kn));
  }
  // xi_m: no induced copy of the m-crown.
  CHECK(evalFormula(builtinFormula("xi", 5), posetStructure(crown(7))));
  CHECK_FALSE(evalFormula(builtinFormula("xi", 5), posetStructure(crown(5))));
  // delta1 fails when an element is both maximal and minimal.
  CHECK_FALSE(evalFormula(builtinFormula("delta1"), posetStructure(antichain(2))));
}

TEST_CASE("psi_dcep on the 18-element boundary lattice") {
  auto fd3 = downsetLattice(crown(3)).lattice;
  CHECK_FALSE(evalFormula(builtinFormula("psi_dcep"), latticeStructure(fd3)));
  auto idk4 = downsetLattice(crown(4)).lattice;
  CHECK(evalFormula(builtinFormula("psi_dcep"), latticeStructure(idk4)));
}

TEST_CASE("evaluation requires covered free variables and known symbols") {
  auto f = builtinFormula("alpha");
  auto kn = posetStructure(crown(3));
  CHECK_THROWS_AS(evalFormula(f, kn), InvalidParameter);
  CHECK(evalFormula(f, kn, {{"x", 0}}));        // a maximal element
  CHECK_FALSE(evalFormula(f, kn, {{"x", 3}}));  // a minimal element
  CHECK_THROWS_AS(evalFormula(f, circleGraph(4).structure()), InvalidStructure);
}

TEST_CASE("evaluation is pure") {
  auto f = builtinFormula("rho_mcyclic");
  auto s = latticeStructure(downsetLattice(crown(3)).lattice);
  Evaluator e(f, s);
  for (int round = 0; round < 3; ++round) {
    CHECK(e.eval({{"x", 17}}));
    CHECK_FALSE(e.eval({{"x", 0}}));
  }
}

TEST_CASE("rho_eq2 matches degree counting on the maxJir graph") {
  std::vector<Lattice> family;
  family.push_back(downsetLattice(crown(3)).lattice);
  family.push_back(downsetLattice(crown(4)).lattice);
  family.push_back(chain(5));
  family.push_back(grid(2));
  family.push_back(downsetLattice(fenceSegment(3)).lattice);
  Formula eq2 = builtinFormula("rho_eq2");
  for (const auto& d : family) {
    auto core = analyzeDistributive(d);
    auto s = latticeStructure(d);
    Evaluator e(eq2, s);
    for (int x = 0; x < d.size(); ++x) {
      auto below = core.maxJirBelow(x);
      bool combinatorial = inducedDegreesExactlyTwo(core.graph, below) ||
                           below.empty();  // vacuous truth over no vertices
      CHECK_MESSAGE(e.eval({{"x", x}}) == combinatorial, "element ", x);
    }
  }
}

TEST_CASE("rho_mcyclic agrees with the combinatorial multicyclic check") {
  std::vector<Lattice> family;
  family.push_back(downsetLattice(crown(3)).lattice);
  family.push_back(downsetLattice(crown(4)).lattice);
  family.push_back(grid(2));
  family.push_back(downsetLattice(disjointSum({crown(3), crown(3)})).lattice);
  Formula mcy = builtinFormula("rho_mcyclic");
  for (const auto& d : family) {
    auto s = latticeStructure(d);
    Evaluator e(mcy, s);
    for (int x = 0; x < d.size(); ++x)
      CHECK(e.eval({{"x", x}}) == isMulticyclic(d, x));
  }
}

namespace {

// No induced circle of length k, built with interleaved constraints like the
// crown sentence.
Formula noSpannedCircle(int k) {
  using F = Formula;
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back("x" + std::to_string(i + 1));
  auto edge = [&](int i, int j) {
    int d = (j - i + k) % k;
    return d == 1 || d == k - 1;
  };
  std::optional<F> body;
  for (int t = k - 1; t >= 0; --t) {
    std::vector<F> cs;
    for (int s = 0; s < t; ++s) {
      F e = F::rel("E", {Term::var(names[s]), Term::var(names[t])});
      cs.push_back(F::lnot(F::eq(Term::var(names[s]), Term::var(names[t]))));
      cs.push_back(edge(s, t) ? e : F::lnot(e));
    }
    if (body) cs.push_back(std::move(*body));
    F inner = cs.empty() ? F::eq(Term::var(names[t]), Term::var(names[t]))
                         : F::land(std::move(cs));
    body = F::exists(names[t], std::move(inner));
  }
  return F::lnot(std::move(*body));
}

}  // namespace

TEST_CASE("separation harness: no single sentence separates even from odd circles") {
  Formula f = Formula::land(
      {noSpannedCircle(3), noSpannedCircle(5), noSpannedCircle(7), noSpannedCircle(9)});
  StructureFamily evens{"C_even", 4, 2, [](int n) { return circleGraph(n).structure(); }};
  StructureFamily odds{"C_odd", 3, 2, [](int n) { return circleGraph(n).structure(); }};
  auto rep = separationReport(f, evens, odds, 12);
  CHECK(rep.trueOnAllA);
  CHECK_FALSE(rep.falseOnAllB);  // fails at 11
  for (const auto& row : rep.rows) {
    if (row.holdsInB) CHECK(*row.holdsInB == (row.index == 11));
    if (row.holdsInA) CHECK(*row.holdsInA);
  }
  CHECK_FALSE(rep.separates());
}

TEST_CASE("separation harness: delta1 never separates crown parities") {
  Formula f = builtinFormula("delta1");
  StructureFamily evens{"K_even", 2, 2, [](int n) { return posetStructure(crown(n)); }};
  StructureFamily odds{"K_odd", 3, 2, [](int n) { return posetStructure(crown(n)); }};
  auto rep = separationReport(f, evens, odds, 9);
  CHECK(rep.trueOnAllA);
  CHECK(rep.trueOnAllB);
  CHECK_FALSE(rep.separates());
}

TEST_CASE("separation harness: lambda_6 fails on the 2-crown only") {
  Formula f = builtinFormula("lambda", 6);
  StructureFamily evens{"K_even", 2, 2, [](int n) { return posetStructure(crown(n)); }};
  StructureFamily odds{"K_odd", 3, 2, [](int n) { return posetStructure(crown(n)); }};
  auto rep = separationReport(f, evens, odds, 4);
  for (const auto& row : rep.rows) {
    if (row.holdsInA) CHECK(*row.holdsInA == (row.index != 2));
    if (row.holdsInB) CHECK(*row.holdsInB);
  }
}
