#include "slimcon/enumposets.hpp"

#include <algorithm>
#include <map>

namespace slimcon {

std::size_t PosetCatalog::classCount() const {
  std::size_t c = 0;
  for (const auto& v : bySize) c += v.size();
  return c;
}

namespace {

// Cheap isomorphism invariant: sorted per-element profiles.
std::vector<std::vector<int>> invariantKey(const Poset& p) {
  std::vector<std::vector<int>> key;
  for (int x = 0; x < p.size(); ++x)
    key.push_back({static_cast<int>(p.upSet(x).count()), static_cast<int>(p.downSet(x).count()),
                   static_cast<int>(p.upperCovers(x).size()),
                   static_cast<int>(p.lowerCovers(x).size()), p.heights()[x], p.depths()[x]});
  std::sort(key.begin(), key.end());
  return key;
}

Poset extend(const Poset& q, const Bitset& downSet) {
  int n = q.size();
  std::vector<Bitset> up(n + 1, Bitset(n + 1));
  for (int x = 0; x < n; ++x)
    q.upSet(x).forEach([&](int y) { up[x].set(y); });
  up[n].set(n);
  downSet.forEach([&](int d) { up[d].set(n); });
  return Poset(std::move(up));
}

}  // namespace

PosetCatalog enumeratePosets(int maxSize) {
  if (maxSize < 1 || maxSize > 7)
    throw InvalidParameter("poset enumeration supports sizes 1..7");
  PosetCatalog cat;
  cat.maxSize = maxSize;
  cat.bySize.resize(maxSize);
  cat.bySize[0].push_back(antichain(1));
  for (int k = 1; k < maxSize; ++k) {
    std::map<std::vector<std::vector<int>>, std::vector<int>> buckets;
    for (const auto& q : cat.bySize[k - 1]) {
      for (const auto& d : q.allDownSets()) {
        Poset candidate = extend(q, d);
        auto key = invariantKey(candidate);
        auto& bucket = buckets[key];
        bool known = false;
        for (int idx : bucket)
          if (isomorphic(candidate, cat.bySize[k][idx])) {
            known = true;
            break;
          }
        if (!known) {
          bucket.push_back(static_cast<int>(cat.bySize[k].size()));
          cat.bySize[k].push_back(std::move(candidate));
        }
      }
    }
  }
  return cat;
}

}  // namespace slimcon
