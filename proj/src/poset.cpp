#include "slimcon/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace slimcon {

// A zero-element Poset is representable so that J(L) of the one-element
// lattice has an order; the public builders and the JSON loader all reject
// empty carriers.
Poset::Poset(std::vector<Bitset> upRows) : n_(static_cast<int>(upRows.size())), up_(std::move(upRows)) {
  for (int x = 0; x < n_; ++x) {
    if (static_cast<int>(up_[x].size()) != n_)
      throw InvalidStructure("order matrix is not square");
    if (!up_[x].test(x)) throw InvalidStructure("order is not reflexive");
  }
  down_.assign(n_, Bitset(n_));
  for (int x = 0; x < n_; ++x)
    up_[x].forEach([&](int y) { down_[y].set(x); });
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (up_[x].test(y) && up_[y].test(x))
        throw InvalidStructure("order is not antisymmetric");
  for (int x = 0; x < n_; ++x) {
    // x <= y forces up(y) subseteq up(x)
    up_[x].forEach([&](int y) {
      if (!up_[y].subsetOf(up_[x])) throw InvalidStructure("order is not transitive");
    });
  }
  deriveCovers();
}

Poset Poset::fromCovers(int n, const std::vector<std::pair<int, int>>& covers) {
  if (n <= 0) throw InvalidStructure("poset must be nonempty");
  std::vector<Bitset> up(n, Bitset(n));
  for (int x = 0; x < n; ++x) up[x].set(x);
  std::vector<std::vector<int>> succ(n);
  for (auto [x, y] : covers) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw InvalidStructure("cover pair out of range");
    succ[x].push_back(y);
  }
  // Transitive closure, processing elements in reverse topological order.
  std::vector<int> indeg(n, 0), order;
  for (int x = 0; x < n; ++x)
    for (int y : succ[x]) ++indeg[y];
  for (int x = 0; x < n; ++x)
    if (indeg[x] == 0) order.push_back(x);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int y : succ[order[i]])
      if (--indeg[y] == 0) order.push_back(y);
  if (static_cast<int>(order.size()) != n)
    throw InvalidStructure("cover relation has a cycle");
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (int y : succ[*it]) up[*it] |= up[y];
  return Poset(std::move(up));
}

void Poset::deriveCovers() {
  coverUp_.assign(n_, Bitset(n_));
  upperCovers_.assign(n_, {});
  lowerCovers_.assign(n_, {});
  for (int x = 0; x < n_; ++x) {
    Bitset strictUp = up_[x];
    strictUp.reset(x);
    strictUp.forEach([&](int y) {
      // y covers x iff nothing lies strictly between.
      Bitset between = strictUp & down_[y];
      between.reset(y);
      if (!between.any()) {
        coverUp_[x].set(y);
        upperCovers_[x].push_back(y);
        lowerCovers_[y].push_back(x);
      }
    });
  }
  height_.assign(n_, 0);
  depth_.assign(n_, 0);
  std::vector<int> byDown(n_);
  std::iota(byDown.begin(), byDown.end(), 0);
  std::sort(byDown.begin(), byDown.end(),
            [&](int a, int b) { return down_[a].count() < down_[b].count(); });
  for (int x : byDown)
    for (int y : lowerCovers_[x]) height_[x] = std::max(height_[x], height_[y] + 1);
  for (auto it = byDown.rbegin(); it != byDown.rend(); ++it)
    for (int y : upperCovers_[*it]) depth_[*it] = std::max(depth_[*it], depth_[y] + 1);
}

std::vector<std::pair<int, int>> Poset::coverPairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x)
    for (int y : upperCovers_[x]) out.emplace_back(x, y);
  return out;
}

std::vector<int> Poset::maximalElements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (upperCovers_[x].empty()) out.push_back(x);
  return out;
}

std::vector<int> Poset::minimalElements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (lowerCovers_[x].empty()) out.push_back(x);
  return out;
}

Poset Poset::restrictedTo(const std::vector<int>& elems) const {
  int m = static_cast<int>(elems.size());
  std::vector<Bitset> up(m, Bitset(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (leq(elems[i], elems[j])) up[i].set(j);
  return Poset(std::move(up));
}

bool Poset::isDownSet(const Bitset& s) const {
  bool ok = true;
  s.forEach([&](int u) {
    if (ok && !down_[u].subsetOf(s)) ok = false;
  });
  return ok;
}

std::vector<Bitset> Poset::allDownSets() const {
  // Grow down-sets one element at a time; each candidate is added only when
  // everything below the new element is already present.
  std::vector<Bitset> out;
  std::vector<Bitset> frontier{Bitset(static_cast<std::size_t>(n_))};
  std::map<std::vector<int>, bool> seen;
  auto key = [&](const Bitset& b) {
    return b.toVector();
  };
  seen[key(frontier[0])] = true;
  out.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Bitset> next;
    for (const auto& x : frontier) {
      for (int p = 0; p < n_; ++p) {
        if (x.test(p)) continue;
        Bitset strictDown = down_[p];
        strictDown.reset(p);
        if (!strictDown.subsetOf(x)) continue;
        Bitset y = x;
        y.set(p);
        auto k = key(y);
        if (!seen.emplace(std::move(k), true).second) continue;
        out.push_back(y);
        next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [&](const Bitset& a, const Bitset& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.toVector() < b.toVector();
  });
  return out;
}

std::size_t Poset::countDownSets() const { return allDownSets().size(); }

Poset crown(int n) {
  if (n < 2) throw InvalidParameter("crown requires n >= 2");
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    covers.emplace_back(n + i, i);            // b_i < a_i
    covers.emplace_back(n + i, (i + 1) % n);  // b_i < a_{i+1 mod n}
  }
  return Poset::fromCovers(2 * n, covers);
}

Poset fenceSegment(int m) {
  if (m < 1) throw InvalidParameter("fence segment requires m >= 1");
  std::vector<std::pair<int, int>> covers;
  for (int j = 0; j < m; ++j) {
    covers.emplace_back(m + j, j);  // b_j < a_j
    if (j + 1 < m) covers.emplace_back(m + j, j + 1);
  }
  return Poset::fromCovers(2 * m, covers);
}

Poset antichain(int n) {
  if (n < 1) throw InvalidParameter("antichain requires n >= 1");
  return Poset::fromCovers(n, {});
}

Poset disjointSum(const std::vector<Poset>& parts) {
  if (parts.empty()) throw InvalidParameter("cardinal sum of an empty list");
  int n = 0;
  for (const auto& p : parts) n += p.size();
  std::vector<Bitset> up(n, Bitset(n));
  int base = 0;
  for (const auto& p : parts) {
    for (int x = 0; x < p.size(); ++x)
      p.upSet(x).forEach([&](int y) { up[base + x].set(base + y); });
    base += p.size();
  }
  return Poset(std::move(up));
}

namespace {

// Invariant vector used to pre-partition elements before backtracking.
std::vector<std::vector<int>> invariants(const Poset& p) {
  std::vector<std::vector<int>> inv(p.size());
  for (int x = 0; x < p.size(); ++x) {
    inv[x] = {static_cast<int>(p.upperCovers(x).size()),
              static_cast<int>(p.lowerCovers(x).size()),
              p.heights()[x],
              p.depths()[x],
              static_cast<int>(p.upSet(x).count()),
              static_cast<int>(p.downSet(x).count())};
  }
  return inv;
}

bool extend(const Poset& a, const Poset& b, std::vector<int>& img,
            std::vector<bool>& used, const std::vector<std::vector<int>>& invA,
            const std::vector<std::vector<int>>& invB, int x) {
  if (x == a.size()) return true;
  for (int y = 0; y < b.size(); ++y) {
    if (used[y] || invA[x] != invB[y]) continue;
    bool ok = true;
    for (int z = 0; z < x && ok; ++z) {
      if (a.leq(x, z) != b.leq(y, img[z])) ok = false;
      if (ok && a.leq(z, x) != b.leq(img[z], y)) ok = false;
    }
    if (!ok) continue;
    img[x] = y;
    used[y] = true;
    if (extend(a, b, img, used, invA, invB, x + 1)) return true;
    used[y] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto invA = invariants(a), invB = invariants(b);
  {
    auto sa = invA, sb = invB;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> img(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  if (extend(a, b, img, used, invA, invB, 0)) return img;
  return std::nullopt;
}

}  // namespace slimcon
