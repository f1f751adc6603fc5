#include <doctest.h>

#include <functional>

#include "slimcon/congruence.hpp"
#include "slimcon/diagram.hpp"
#include "slimcon/enumposets.hpp"

using namespace slimcon;

namespace {

// Independent oracle: every partition, filtered by compatibility.
std::vector<Partition> allCongruencesBrute(const Lattice& l) {
  int n = l.size();
  std::vector<Partition> out;
  std::vector<int> block(n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      std::vector<int> first(n, -1), reps(n);
      for (int k = 0; k < n; ++k) {
        if (first[block[k]] == -1) first[block[k]] = k;
        reps[k] = first[block[k]];
      }
      Partition p = Partition::fromReps(std::move(reps));
      if (isCongruence(l, p)) out.push_back(std::move(p));
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("principal congruences, small cases by hand") {
  auto c3 = chain(3);
  CHECK(principalCongruence(c3, 1, 1) == Partition(3));

  auto top = principalCongruence(c3, 1, 2);
  CHECK(top.same(1, 2));
  CHECK_FALSE(top.same(0, 1));

  auto g1 = grid(1);  // 0 < 1, 2 < 3 with 1, 2 incomparable
  auto theta = principalCongruence(g1, 0, 1);
  CHECK(theta.same(0, 1));
  CHECK(theta.same(2, 3));
  CHECK_FALSE(theta.same(0, 2));

  CHECK_THROWS_AS(principalCongruence(c3, 0, 5), InvalidParameter);
}

TEST_CASE("congruence lattices of chains are Boolean") {
  for (int m = 1; m <= 4; ++m) {
    auto con = congruenceLattice(chain(m + 1));
    CHECK(con.congruences.size() == (1u << m));
    CHECK(isDistributive(con.lattice));
    auto jir = jirCongruencePoset(chain(m + 1));
    CHECK(static_cast<int>(jir.congruences.size()) == m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j) CHECK_FALSE(jir.order.leq(i, j));
  }
}

TEST_CASE("congruence lattices of grids") {
  for (int k = 1; k <= 2; ++k) {
    auto con = congruenceLattice(grid(k));
    CHECK(con.congruences.size() == (1u << (2 * k)));
    auto jir = jirCongruencePoset(grid(k));
    CHECK(static_cast<int>(jir.congruences.size()) == 2 * k);
    CHECK(jir.order.coverPairs().empty());  // antichain
  }
  auto trivial = congruenceLattice(chain(1));
  CHECK(trivial.congruences.size() == 1);
}

TEST_CASE("closure generation equals the all-partitions oracle") {
  std::vector<Lattice> corpus;
  for (int m = 2; m <= 8; ++m) corpus.push_back(chain(m));
  corpus.push_back(grid(1));
  corpus.push_back(Lattice(Poset::fromCovers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}})));
  corpus.push_back(Lattice(Poset::fromCovers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}})));
  {
    PlanarSlimLattice s7 = insertFork(gridDiagram(1), cells(gridDiagram(1))[0]);
    corpus.push_back(s7.lattice());
  }
  for (const auto& p : enumeratePosets(3).bySize[2]) {
    auto d = downsetLattice(p).lattice;
    if (d.size() <= 8) corpus.push_back(d);
  }
  for (const auto& l : corpus) {
    auto brute = allCongruencesBrute(l);
    auto con = congruenceLattice(l);
    CHECK(brute == con.congruences);
  }
}

TEST_CASE("every returned congruence verifies compatibility") {
  PlanarSlimLattice l = randomSlim(99, 2, 2);
  auto con = congruenceLattice(l.lattice());
  for (const auto& c : con.congruences) CHECK(isCongruence(l.lattice(), c));
  CHECK(isDistributive(con.lattice));
}

TEST_CASE("fast join-irreducible path matches the full lattice") {
  std::vector<Lattice> corpus;
  corpus.push_back(chain(5));
  corpus.push_back(grid(2));
  corpus.push_back(randomSlim(5, 2, 2).lattice());
  corpus.push_back(randomSlim(17, 3, 3).lattice());
  for (const auto& l : corpus) {
    auto fast = jirCongruencePoset(l);
    auto con = congruenceLattice(l);
    auto slow = joinIrreducibles(con.lattice);
    REQUIRE(fast.congruences.size() == slow.elements.size());
    CHECK(isomorphic(fast.order, slow.order));
    // Identical congruences, not merely isomorphic orders.
    std::vector<Partition> slowParts;
    for (int e : slow.elements) slowParts.push_back(con.congruences[e]);
    std::sort(slowParts.begin(), slowParts.end());
    CHECK(fast.congruences == slowParts);
  }
}

TEST_CASE("partition join and meet") {
  Partition a = Partition::fromReps({0, 0, 2, 2, 4});
  Partition b = Partition::fromReps({0, 1, 1, 3, 3});
  auto j = joinPartitions(a, b);
  CHECK(j.same(0, 1));
  CHECK(j.same(1, 2));
  CHECK(j.same(2, 3));
  CHECK(j.same(3, 4));
  auto m = meetPartitions(a, b);
  CHECK(m == Partition(5));
  CHECK(a.refines(j));
  CHECK(b.refines(j));
  CHECK(m.refines(a));
  CHECK(m.refines(b));
}

TEST_CASE("congruence lattices of slim semimodular lattices are distributive") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    auto l = randomSlim(seed, 2, 3);
    auto core = conCore(l.lattice());
    CHECK(core.distributive());
    auto con = congruenceLattice(l.lattice());
    CHECK(isDistributive(con.lattice));
    CHECK(con.congruences.size() == core.conSize);
  }
}
