#pragma once

#include <optional>
#include <vector>

#include "fiatcells/multicat.hpp"

namespace fiatcells {

struct Isomorphism {
  std::vector<ObjectId> objects;  // indexed by object of the first table
  std::vector<MorphId> morphs;    // indexed by morph of the first table
};

/// Searches for a bijection of objects and of 1-morphisms that preserves
/// sources, targets, identities, star and every composition multiset.
std::optional<Isomorphism> find_isomorphism(const MultiCat& a, const MultiCat& b);

}  // namespace fiatcells
