#pragma once

#include "tmdd/mdd.hpp"

#include <memory>

namespace tmdd {

/// Maps a (c+1)-DD family of colored subsets to the 2-DD family of their
/// color-ignoring unions. Writes into `out` when given, else a fresh store.
Mdd decolorize(const Mdd& d, std::shared_ptr<MddStore> out = nullptr);

/// Family union of two 2-DDs over the same ground set.
Mdd family_union(const Mdd& a, const Mdd& b, std::shared_ptr<MddStore> out = nullptr);

/// All subsets A of the ground set such that no member of z is a subset
/// of A. The output family is downward closed.
Mdd nonsupset(const Mdd& z, std::shared_ptr<MddStore> out = nullptr);

}  // namespace tmdd
