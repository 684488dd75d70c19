#include "spherical/context.hpp"

#include "context_memo.hpp"

namespace spherical {

GroupContext::GroupContext(RootDatum rd, std::size_t weyl_cap)
    : rd_(std::move(rd)), weyl_(rd_, weyl_cap), memo_(std::make_unique<ContextMemo>()) {}

GroupContext::~GroupContext() = default;

const std::vector<Weight>& cached_dominant_below(const GroupContext& ctx, const Weight& lambda) {
  auto& memo = ctx.memo().below;
  if (auto hit = memo.find(lambda)) return **hit;
  auto fresh = std::make_shared<const std::vector<Weight>>(dominant_below(ctx.datum(), lambda));
  return *memo.put(lambda, fresh);
}

}  // namespace spherical
