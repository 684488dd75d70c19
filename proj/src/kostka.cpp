#include "spherical/kostka.hpp"

#include "context_memo.hpp"
#include "spherical/cache.hpp"

#include <algorithm>

namespace spherical {

namespace {

// P(c, i): partitions of c using positive roots i, i+1, ... only.
QPoly partition(const GroupContext& ctx, std::vector<std::int64_t>& c, std::size_t i) {
  const auto& roots = ctx.datum().positive_roots_simple();
  if (std::all_of(c.begin(), c.end(), [](auto x) { return x == 0; })) return QPoly(1);
  if (i == roots.size()) return QPoly();

  auto& memo = ctx.memo().partition;
  std::vector<std::int64_t> key = c;
  key.push_back(static_cast<std::int64_t>(i));
  if (auto hit = memo.find(key)) return *hit;

  QPoly result = partition(ctx, c, i + 1);
  const auto& r = roots[i];
  bool fits = true;
  for (std::size_t t = 0; t < c.size(); ++t)
    if (c[t] < r[t]) fits = false;
  if (fits) {
    for (std::size_t t = 0; t < c.size(); ++t) c[t] -= r[t];
    result += partition(ctx, c, i).shifted(1);
    for (std::size_t t = 0; t < c.size(); ++t) c[t] += r[t];
  }
  return memo.put(key, std::move(result));
}

}  // namespace

QPoly kostant_q(const GroupContext& ctx, const Weight& beta) {
  auto c = ctx.datum().simple_coordinates(beta);
  if (!c) return QPoly();
  if (std::any_of(c->begin(), c->end(), [](auto x) { return x < 0; })) return QPoly();
  return partition(ctx, *c, 0);
}

QPoly lusztig_q_analogue(const GroupContext& ctx, const Weight& lambda, const Weight& mu) {
  const RootDatum& rd = ctx.datum();
  if (!rd.is_dominant(lambda)) throw InvalidInput("weight " + lambda.str() + " is not dominant");
  if (!rd.is_dominant(mu)) throw InvalidInput("weight " + mu.str() + " is not dominant");
  if (!dominance_leq(rd, mu, lambda)) return QPoly();

  auto& memo = ctx.memo().kostka;
  auto key = std::make_pair(lambda, mu);
  if (auto hit = memo.find(key)) return *hit;

  KostkaDiskCache* disk = ctx.disk_cache();
  std::string disk_key;
  if (disk) {
    disk_key = kostka_cache_key(rd.fingerprint(), lambda.str(), mu.str());
    if (auto hit = disk->find(disk_key)) return memo.put(key, *hit);
  }

  // Work with doubled weights so that the shift by rho stays integral.
  const Weight top = lambda * 2 + rd.two_rho_hat();
  const Weight bottom = mu * 2 + rd.two_rho_hat();
  QPoly sum;
  for (const WeylElement& w : ctx.weyl().elements()) {
    Weight beta2 = w.action.apply(top) - bottom;
    Weight beta(beta2.size());
    bool even = true;
    for (std::size_t t = 0; t < beta2.size(); ++t) {
      if (beta2[t] % 2 != 0) even = false;
      beta[t] = beta2[t] / 2;
    }
    if (!even) continue;
    QPoly p = kostant_q(ctx, beta);
    if (w.length % 2)
      sum -= p;
    else
      sum += p;
  }
  if (disk) disk->store(disk_key, sum);
  return memo.put(key, std::move(sum));
}

std::vector<std::vector<LaurentCoeff>> kl_matrix(const GroupContext& ctx, int k,
                                                 const std::vector<Weight>& lambdas) {
  const RootDatum& rd = ctx.datum();
  for (auto& w : lambdas)
    if (rd.sigma_grade(w) != k)
      throw InvalidInput("weight " + w.str() + " does not have sigma-grade " + std::to_string(k));
  const std::size_t n = lambdas.size();
  std::vector<std::vector<LaurentCoeff>> m(n, std::vector<LaurentCoeff>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QPoly kq = lusztig_q_analogue(ctx, lambdas[i], lambdas[j]);
      m[i][j] = LaurentCoeff::from_q(kq.invert())
                    .shifted(-static_cast<int>(rd.twice_pair_rho_b(lambdas[j])), 0);
    }
  return m;
}

}  // namespace spherical
