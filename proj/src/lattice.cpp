#include "slimcon/lattice.hpp"

#include <algorithm>

namespace slimcon {

namespace {

std::uint64_t packMask(const Bitset& b) {
  std::uint64_t w = 0;
  b.forEach([&](int i) { w |= std::uint64_t{1} << i; });
  return w;
}

}  // namespace

Lattice::Lattice(Poset p) : poset_(std::move(p)) {
  auto mins = poset_.minimalElements();
  auto maxs = poset_.maximalElements();
  if (mins.size() != 1 || maxs.size() != 1)
    throw InvalidStructure("lattice must have a unique bottom and top");
  bottom_ = mins[0];
  top_ = maxs[0];
  int n = size();
  if (n <= kJoinTableCap) {
    joinTable_.assign(static_cast<std::size_t>(n) * n, 0);
    meetTable_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
      for (int y = x; y < n; ++y) {
        int j = scanJoin(x, y);
        int m = scanMeet(x, y);
        joinTable_[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint16_t>(j);
        joinTable_[static_cast<std::size_t>(y) * n + x] = static_cast<std::uint16_t>(j);
        meetTable_[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint16_t>(m);
        meetTable_[static_cast<std::size_t>(y) * n + x] = static_cast<std::uint16_t>(m);
      }
    hasTables_ = true;
  } else {
    // Spot-check lattice-ness lazily; scanJoin/scanMeet throw on failure.
    for (int x = 0; x < n; ++x) {
      scanJoin(x, (x * 7919 + 1) % n);
      scanMeet(x, (x * 104729 + 3) % n);
    }
  }
}

Lattice::Lattice(Poset p, std::vector<Bitset> groundMasks) : poset_(std::move(p)), masks_(std::move(groundMasks)) {
  if (static_cast<int>(masks_.size()) != size())
    throw InvalidStructure("one ground mask per element required");
  auto mins = poset_.minimalElements();
  auto maxs = poset_.maximalElements();
  if (mins.size() != 1 || maxs.size() != 1)
    throw InvalidStructure("lattice must have a unique bottom and top");
  bottom_ = mins[0];
  top_ = maxs[0];
  maskIndex_.reserve(masks_.size() * 2);
  for (int i = 0; i < size(); ++i) {
    if (masks_[i].size() > 64) throw InvalidStructure("ground set too large for mask mode");
    if (!maskIndex_.emplace(packMask(masks_[i]), i).second)
      throw InvalidStructure("duplicate ground masks");
  }
  maskMode_ = true;
}

void Lattice::checkElement(int x) const {
  if (x < 0 || x >= size()) throw InvalidParameter("lattice element out of range");
}

int Lattice::scanJoin(int x, int y) const {
  Bitset ub = poset_.upSet(x) & poset_.upSet(y);
  int m = ub.first();
  // Descend to a minimal upper bound, then require it to be the least one.
  for (;;) {
    Bitset lower = ub & poset_.downSet(m);
    lower.reset(m);
    int z = lower.first();
    if (z < 0) break;
    m = z;
  }
  if (!ub.subsetOf(poset_.upSet(m)))
    throw InvalidStructure("pair has no least upper bound; not a lattice");
  return m;
}

int Lattice::scanMeet(int x, int y) const {
  Bitset lb = poset_.downSet(x) & poset_.downSet(y);
  int m = lb.first();
  for (;;) {
    Bitset upper = lb & poset_.upSet(m);
    upper.reset(m);
    int z = upper.first();
    if (z < 0) break;
    m = z;
  }
  if (!lb.subsetOf(poset_.downSet(m)))
    throw InvalidStructure("pair has no greatest lower bound; not a lattice");
  return m;
}

int Lattice::join(int x, int y) const {
  checkElement(x);
  checkElement(y);
  if (hasTables_) return joinTable_[static_cast<std::size_t>(x) * size() + y];
  if (maskMode_) {
    auto it = maskIndex_.find(packMask(masks_[x]) | packMask(masks_[y]));
    if (it == maskIndex_.end()) throw InternalError("mask join outside lattice");
    return it->second;
  }
  return scanJoin(x, y);
}

int Lattice::meet(int x, int y) const {
  checkElement(x);
  checkElement(y);
  if (hasTables_) return meetTable_[static_cast<std::size_t>(x) * size() + y];
  if (maskMode_) {
    auto it = maskIndex_.find(packMask(masks_[x]) & packMask(masks_[y]));
    if (it == maskIndex_.end()) throw InternalError("mask meet outside lattice");
    return it->second;
  }
  return scanMeet(x, y);
}

int Lattice::joinOf(const std::vector<int>& xs) const {
  int acc = bottom_;
  for (int x : xs) acc = join(acc, x);
  return acc;
}

int Lattice::meetOf(const std::vector<int>& xs) const {
  int acc = top_;
  for (int x : xs) acc = meet(acc, x);
  return acc;
}

Lattice chain(int m) {
  if (m < 1) throw InvalidParameter("chain requires m >= 1");
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < m; ++i) covers.emplace_back(i, i + 1);
  return Lattice(Poset::fromCovers(m, covers));
}

Lattice grid(int k) {
  if (k < 1) throw InvalidParameter("grid requires k >= 1");
  int side = k + 1;
  auto id = [side](int i, int j) { return i * side + j; };
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      if (i + 1 < side) covers.emplace_back(id(i, j), id(i + 1, j));
      if (j + 1 < side) covers.emplace_back(id(i, j), id(i, j + 1));
    }
  return Lattice(Poset::fromCovers(side * side, covers));
}

DownSetLattice downsetLattice(const Poset& p) {
  if (p.size() > 64) throw InvalidParameter("down-set lattice limited to 64-element posets");
  auto sets = p.allDownSets();
  int n = static_cast<int>(sets.size());
  std::vector<Bitset> up(n, Bitset(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (sets[x].subsetOf(sets[y])) up[x].set(y);
  Lattice lat(Poset(std::move(up)), sets);
  return DownSetLattice{std::move(lat), std::move(sets)};
}

std::optional<int> DownSetLattice::indexOf(const Bitset& s) const {
  for (int i = 0; i < static_cast<int>(sets.size()); ++i)
    if (sets[i] == s) return i;
  return std::nullopt;
}

JoinIrreducibles joinIrreducibles(const Lattice& l) {
  JoinIrreducibles out;
  for (int x = 0; x < l.size(); ++x)
    if (l.poset().lowerCovers(x).size() == 1) out.elements.push_back(x);
  out.order = l.poset().restrictedTo(out.elements);
  return out;
}

std::vector<int> maxJoinIrreducibles(const Lattice& l) {
  auto j = joinIrreducibles(l);
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(j.elements.size()); ++i)
    if (j.order.upperCovers(i).empty()) out.push_back(j.elements[i]);
  return out;
}

std::vector<int> principalIdeal(const Lattice& l, int y) {
  if (y < 0 || y >= l.size()) throw InvalidParameter("lattice element out of range");
  return l.poset().downSet(y).toVector();
}

DistributivityCheck checkDistributive(const Lattice& l) {
  int n = l.size();
  if (n <= 300) {
    // Median law, directly.
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
            return {false, std::array<int, 3>{x, y, z}};
    return {true, std::nullopt};
  }
  // Join-prime criterion: distributive iff every join-irreducible j satisfies
  // j <= y \/ z  =>  j <= y or j <= z. A failing j yields a median-law triple
  // (j, y, z), since j join-irreducible forces (j/\y) \/ (j/\z) < j.
  auto jir = joinIrreducibles(l);
  for (int j : jir.elements)
    for (int y = 0; y < n; ++y) {
      if (l.leq(j, y)) continue;
      for (int z = 0; z < n; ++z)
        if (!l.leq(j, z) && l.leq(j, l.join(y, z)))
          return {false, std::array<int, 3>{j, y, z}};
    }
  return {true, std::nullopt};
}

SemimodularityCheck checkSemimodular(const Lattice& l) {
  for (auto [x, y] : l.poset().coverPairs())
    for (int z = 0; z < l.size(); ++z) {
      int a = l.join(x, z), b = l.join(y, z);
      if (a != b && !l.poset().covers(a, b))
        return {false, std::array<int, 3>{x, y, z}};
    }
  return {true, std::nullopt};
}

SlimnessCheck checkSlim(const Lattice& l) {
  auto jir = joinIrreducibles(l);
  int m = static_cast<int>(jir.elements.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (jir.order.leq(a, b) || jir.order.leq(b, a)) continue;
      for (int c = b + 1; c < m; ++c) {
        if (jir.order.leq(a, c) || jir.order.leq(c, a)) continue;
        if (jir.order.leq(b, c) || jir.order.leq(c, b)) continue;
        return {false, std::array<int, 3>{jir.elements[a], jir.elements[b], jir.elements[c]}};
      }
    }
  return {true, std::nullopt};
}

}  // namespace slimcon
