#pragma once

// Per-datum state: the root datum, its Weyl group and the memo tables that
// the character, Kostka and Satake routines share. Safe to use from several
// threads at once.

#include "spherical/root_datum.hpp"

#include <memory>

namespace spherical {

class KostkaDiskCache;
struct ContextMemo;

class GroupContext {
 public:
  explicit GroupContext(RootDatum rd, std::size_t weyl_cap = kDefaultWeylCap);
  ~GroupContext();
  GroupContext(const GroupContext&) = delete;
  GroupContext& operator=(const GroupContext&) = delete;

  const RootDatum& datum() const { return rd_; }
  const WeylGroup& weyl() const { return weyl_; }

  void attach_cache(std::shared_ptr<KostkaDiskCache> cache) { disk_ = std::move(cache); }
  KostkaDiskCache* disk_cache() const { return disk_.get(); }

  ContextMemo& memo() const { return *memo_; }

 private:
  RootDatum rd_;
  WeylGroup weyl_;
  std::shared_ptr<KostkaDiskCache> disk_;
  std::unique_ptr<ContextMemo> memo_;
};

}  // namespace spherical
