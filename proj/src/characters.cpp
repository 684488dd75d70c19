#include "spherical/characters.hpp"

#include "context_memo.hpp"
#include "spherical/kostka.hpp"

#include <deque>
#include <set>

namespace spherical {

namespace {

void accumulate(CharacterExpansion& ch, const Weight& w, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = ch.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) ch.erase(it);
  }
}

std::vector<Weight> orbit(const RootDatum& rd, const Weight& w) {
  std::set<Weight> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i) {
      Weight y = rd.reflect(i, x);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

// Adams operation psi^j: weights scaled by j.
CharacterExpansion adams(const RepSpec& rho, std::int64_t j) {
  CharacterExpansion out;
  for (auto& [w, k] : rho.weights) accumulate(out, w * j, BigInt(k));
  return out;
}

// Newton recursion: k h_k = sum_{j=1..k} sign^{j-1} p_j h_{k-j}.
std::vector<CharacterExpansion> newton(const RepSpec& rho, int n, int sign) {
  if (n < 0) throw InvalidInput("power must be nonnegative");
  std::vector<CharacterExpansion> h(n + 1), p(n + 1);
  h[0][Weight(rho.highest_weight.size())] = 1;
  for (int j = 1; j <= n; ++j) p[j] = adams(rho, j);
  for (int k = 1; k <= n; ++k) {
    CharacterExpansion acc;
    for (int j = 1; j <= k; ++j) {
      BigInt s = (sign < 0 && (j - 1) % 2) ? -1 : 1;
      for (auto& [a, ca] : p[j])
        for (auto& [b, cb] : h[k - j]) accumulate(acc, a + b, s * ca * cb);
    }
    for (auto& [w, c] : acc) {
      if (c % k != 0) throw std::logic_error("Newton recursion produced a non-integral term");
      c /= k;
    }
    h[k] = std::move(acc);
  }
  return h;
}

}  // namespace

Weight dominant_conjugate(const RootDatum& rd, const Weight& w) {
  Weight x = w;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < rd.semisimple_rank(); ++i)
      if (rd.simple_coroots()[i].dot(x) < 0) {
        x = rd.reflect(i, x);
        moved = true;
      }
  }
  return x;
}

const CharacterExpansion& weight_multiplicities(const GroupContext& ctx, const Weight& lambda) {
  auto& memo = ctx.memo().characters;
  if (auto hit = memo.find(lambda)) return **hit;
  const RootDatum& rd = ctx.datum();
  auto ch = std::make_shared<CharacterExpansion>();
  for (const Weight& mu : cached_dominant_below(ctx, lambda)) {
    BigInt m = lusztig_q_analogue(ctx, lambda, mu).at_one();
    if (m == 0) continue;
    for (const Weight& w : orbit(rd, mu)) (*ch)[w] = m;
  }
  return *memo.put(lambda, std::move(ch));
}

CharacterExpansion character_product(const CharacterExpansion& a, const CharacterExpansion& b) {
  CharacterExpansion out;
  for (auto& [x, cx] : a)
    for (auto& [y, cy] : b) accumulate(out, x + y, cx * cy);
  return out;
}

std::vector<CharacterExpansion> sym_powers(const RepSpec& rho, int n) { return newton(rho, n, +1); }
std::vector<CharacterExpansion> ext_powers(const RepSpec& rho, int n) { return newton(rho, n, -1); }

IrrDecomp sym_power_decomp(const GroupContext& ctx, const RepSpec& rho, int k) {
  return decompose(ctx, sym_powers(rho, k).back());
}

IrrDecomp ext_power_decomp(const GroupContext& ctx, const RepSpec& rho, int i) {
  return decompose(ctx, ext_powers(rho, i).back());
}

IrrDecomp decompose(const GroupContext& ctx, const CharacterExpansion& ch) {
  const RootDatum& rd = ctx.datum();
  for (auto& [w, c] : ch) {
    rd.check_length(w, "weight");
    auto it = ch.find(dominant_conjugate(rd, w));
    if (it == ch.end() || it->second != c)
      throw InvalidInput("character is not Weyl-invariant at weight " + w.str());
  }
  CharacterExpansion rest = ch;
  IrrDecomp out;
  while (!rest.empty()) {
    // A dominant weight of maximal height is maximal for dominance.
    const Weight* top = nullptr;
    std::int64_t best = 0;
    for (auto& [w, c] : rest) {
      if (!rd.is_dominant(w)) continue;
      auto h = rd.twice_pair_rho_b(w);
      if (!top || h > best) {
        top = &w;
        best = h;
      }
    }
    if (!top) throw InvalidInput("character has no dominant weight");
    Weight lambda = *top;
    BigInt m = rest.at(lambda);
    if (m < 0) throw InvalidInput("not a genuine character: negative multiplicity at " + lambda.str());
    for (auto& [w, c] : weight_multiplicities(ctx, lambda)) accumulate(rest, w, -m * c);
    out.push_back({lambda, m});
  }
  std::sort(out.begin(), out.end(),
            [](const IrrComponent& a, const IrrComponent& b) { return a.lambda > b.lambda; });
  return out;
}

const IrrDecomp& tensor_decomp(const GroupContext& ctx, const Weight& lambda, const Weight& mu) {
  auto key = lambda < mu ? std::make_pair(lambda, mu) : std::make_pair(mu, lambda);
  auto& memo = ctx.memo().tensor;
  if (auto hit = memo.find(key)) return **hit;
  auto d = std::make_shared<const IrrDecomp>(decompose(
      ctx, character_product(weight_multiplicities(ctx, lambda), weight_multiplicities(ctx, mu))));
  return *memo.put(key, std::move(d));
}

Weight dual_weight(const RootDatum& rd, const Weight& lambda) {
  rd.check_length(lambda, "weight");
  return -rd.longest_element().apply(lambda);
}

RepSpec make_rep(const GroupContext& ctx, const Weight& highest_weight) {
  const RootDatum& rd = ctx.datum();
  rd.check_length(highest_weight, "highest weight");
  if (!rd.is_dominant(highest_weight))
    throw InvalidInput("highest weight " + highest_weight.str() + " is not dominant");
  RepSpec rho;
  rho.highest_weight = highest_weight;
  for (auto& [w, c] : weight_multiplicities(ctx, highest_weight))
    rho.weights[w] = c.convert_to<std::int64_t>();
  return rho;
}

RepSpec standard_rep(const GroupContext& ctx) {
  const RootDatum& rd = ctx.datum();
  if (rd.label().rfind("GL", 0) != 0)
    throw InvalidInput("the standard representation is defined for GL(n) presets only");
  Weight e(rd.coweight_rank());
  e[0] = 1;
  return make_rep(ctx, e);
}

RepSpec parse_rep(const GroupContext& ctx, const std::string& text) {
  if (text == "std") return standard_rep(ctx);
  return make_rep(ctx, parse_weight(text));
}

RepSpec dual_rep(const GroupContext& ctx, const RepSpec& rho) {
  return make_rep(ctx, dual_weight(ctx.datum(), rho.highest_weight));
}

std::complex<double> eval_monomial(const Weight& w, const std::vector<std::complex<double>>& c) {
  if (c.size() != w.size()) throw InvalidInput("torus element has the wrong length");
  std::complex<double> x = 1;
  for (std::size_t t = 0; t < w.size(); ++t)
    if (w[t]) x *= std::pow(c[t], static_cast<int>(w[t]));
  return x;
}

std::complex<double> eval_character(const GroupContext& ctx, const Weight& lambda,
                                    const std::vector<std::complex<double>>& c) {
  std::complex<double> s = 0;
  for (auto& [w, m] : weight_multiplicities(ctx, lambda)) s += to_double(m) * eval_monomial(w, c);
  return s;
}

}  // namespace spherical
