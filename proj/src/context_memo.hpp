#pragma once

#include "spherical/characters.hpp"
#include "spherical/context.hpp"
#include "spherical/graded.hpp"
#include "spherical/laurent.hpp"
#include "spherical/memo.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace spherical {

struct ContextMemo {
  // key: simple-root coordinates followed by the first usable root index
  ConcurrentMemo<std::vector<std::int64_t>, QPoly> partition;
  ConcurrentMemo<std::pair<Weight, Weight>, QPoly> kostka;
  ConcurrentMemo<Weight, std::shared_ptr<const CharacterExpansion>> characters;
  ConcurrentMemo<std::pair<Weight, Weight>, std::shared_ptr<const IrrDecomp>> tensor;
  ConcurrentMemo<Weight, std::shared_ptr<const SatakeImage::Component>> satake_basis;
  ConcurrentMemo<Weight, std::shared_ptr<const std::vector<Weight>>> below;
};

// dominant_below with memoization.
const std::vector<Weight>& cached_dominant_below(const GroupContext& ctx, const Weight& lambda);

}  // namespace spherical
