#pragma once

#include <vector>

#include "slimcon/poset.hpp"

namespace slimcon {

struct PosetCatalog {
  int maxSize = 0;
  // bySize[k-1]: all k-element posets up to isomorphism, in generation order.
  std::vector<std::vector<Poset>> bySize;

  std::size_t classCount() const;
};

// Extension search: every (k+1)-element poset arises from a k-element poset
// by adding a maximal element over one of its down-sets. Isomorphic
// duplicates are rejected with invariant bucketing plus the backtracking
// isomorphism test. Sizes 1..7 (class counts 1, 2, 5, 16, 63, 318, 2045).
PosetCatalog enumeratePosets(int maxSize);

}  // namespace slimcon
