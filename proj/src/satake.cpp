#include "spherical/satake.hpp"

#include "context_memo.hpp"
#include "spherical/kostka.hpp"

#include <cmath>

namespace spherical {

namespace {

LaurentCoeff kl_entry(const GroupContext& ctx, const Weight& lambda, const Weight& mu) {
  QPoly k = lusztig_q_analogue(ctx, lambda, mu);
  return LaurentCoeff::from_q(k.invert())
      .shifted(-static_cast<int>(ctx.datum().twice_pair_rho_b(mu)), 0);
}

void require_dominant(const GroupContext& ctx, const Weight& w) {
  if (!ctx.datum().is_dominant(w)) throw InvalidInput("weight " + w.str() + " is not dominant");
}

template <class B>
void validate_graded(const GroupContext& ctx, const Graded<B>& f) {
  for (auto& [k, comp] : f.grades())
    for (auto& [w, c] : comp) {
      require_dominant(ctx, w);
      if (ctx.datum().sigma_grade(w) != k)
        throw InvalidInput("weight " + w.str() + " stored in grade " + std::to_string(k));
    }
}

}  // namespace

const SatakeImage::Component& satake_basis(const GroupContext& ctx, const Weight& mu) {
  auto& memo = ctx.memo().satake_basis;
  if (auto hit = memo.find(mu)) return **hit;
  require_dominant(ctx, mu);
  // chi_mu = v^{-2<rho_B,mu>} S(1_mu) + sum_{nu < mu} M[mu][nu] S(1_nu)
  SatakeImage::Component out;
  auto add = [&](const Weight& w, const LaurentCoeff& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = out.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  add(mu, LaurentCoeff(1));
  for (const Weight& nu : cached_dominant_below(ctx, mu)) {
    if (nu == mu) continue;
    LaurentCoeff m = kl_entry(ctx, mu, nu);
    if (m.is_zero()) continue;
    for (auto& [lam, c] : satake_basis(ctx, nu)) add(lam, -(m * c));
  }
  const int shift = static_cast<int>(ctx.datum().twice_pair_rho_b(mu));
  for (auto& [lam, c] : out) c = c.shifted(shift, 0);
  auto stored = std::make_shared<const SatakeImage::Component>(std::move(out));
  return *memo.put(mu, std::move(stored));
}

HeckeElement basis_element(const GroupContext& ctx, const Weight& mu, const LaurentCoeff& coeff) {
  require_dominant(ctx, mu);
  HeckeElement f;
  f.add(static_cast<int>(ctx.datum().sigma_grade(mu)), mu, coeff);
  return f;
}

SatakeImage character_element(const GroupContext& ctx, const Weight& lambda,
                              const LaurentCoeff& coeff) {
  require_dominant(ctx, lambda);
  SatakeImage f;
  f.add(static_cast<int>(ctx.datum().sigma_grade(lambda)), lambda, coeff);
  return f;
}

void validate(const GroupContext& ctx, const HeckeElement& f) { validate_graded(ctx, f); }
void validate(const GroupContext& ctx, const SatakeImage& f) { validate_graded(ctx, f); }

SatakeImage satake(const GroupContext& ctx, const HeckeElement& f) {
  validate(ctx, f);
  SatakeImage out(f.window());
  for (auto& [k, comp] : f.grades())
    for (auto& [mu, c] : comp)
      for (auto& [lam, b] : satake_basis(ctx, mu)) out.add(k, lam, c * b);
  return out;
}

HeckeElement inverse_satake(const GroupContext& ctx, const SatakeImage& f) {
  validate(ctx, f);
  HeckeElement out(f.window());
  for (auto& [k, comp] : f.grades())
    for (auto& [lam, c] : comp)
      for (const Weight& mu : cached_dominant_below(ctx, lam)) {
        LaurentCoeff m = kl_entry(ctx, lam, mu);
        if (!m.is_zero()) out.add(k, mu, c * m);
      }
  return out;
}

SatakeImage satake_product(const GroupContext& ctx, const SatakeImage& a, const SatakeImage& b,
                           std::optional<GradeWindow> window) {
  return graded_product(a, b, window,
                        [&](const Weight& x, const Weight& y, const LaurentCoeff& c, int g,
                            SatakeImage& out) {
                          for (auto& [nu, n] : tensor_decomp(ctx, x, y)) {
                            LaurentCoeff term = c;
                            term *= n;
                            out.add(g, nu, term);
                          }
                        });
}

HeckeElement convolve(const GroupContext& ctx, const HeckeElement& a, const HeckeElement& b,
                      std::optional<GradeWindow> window) {
  return inverse_satake(ctx, satake_product(ctx, satake(ctx, a), satake(ctx, b), window));
}

namespace {

template <class B>
Graded<B> dual_graded(const GroupContext& ctx, const Graded<B>& f) {
  GradeWindow w;
  if (f.window().hi) w.lo = -*f.window().hi;
  if (f.window().lo) w.hi = -*f.window().lo;
  Graded<B> out(w);
  for (auto& [k, comp] : f.grades())
    for (auto& [x, c] : comp) out.add(-k, dual_weight(ctx.datum(), x), c);
  return out;
}

}  // namespace

HeckeElement dual(const GroupContext& ctx, const HeckeElement& f) { return dual_graded(ctx, f); }
SatakeImage dual(const GroupContext& ctx, const SatakeImage& f) { return dual_graded(ctx, f); }

SatakeImage identity_satake(const GroupContext& ctx) {
  return character_element(ctx, Weight(ctx.datum().coweight_rank()));
}

HeckeElement identity_hecke(const GroupContext& ctx) {
  return basis_element(ctx, Weight(ctx.datum().coweight_rank()));
}

NumericEval eval_numeric(const GroupContext& ctx, const SatakeImage& f,
                         const std::vector<std::complex<double>>& c, double q,
                         std::complex<double> s, int n) {
  if (q <= 1) throw InvalidInput("q must exceed 1");
  if (f.window().hi && *f.window().hi < n)
    throw WindowError("element known only up to grade " + std::to_string(*f.window().hi));
  const double v = std::sqrt(q);
  const std::complex<double> x = std::exp(-s * std::log(q));
  NumericEval out;
  double prev = 0, last = 0;
  for (auto& [k, comp] : f.grades()) {
    if (k > n) break;
    std::complex<double> term = 0;
    for (auto& [lam, coeff] : comp) term += coeff.eval(v, x) * eval_character(ctx, lam, c);
    out.value += term;
    if (k == n - 1) prev = std::abs(term);
    if (k == n) last = std::abs(term);
  }
  out.last_term = last;
  if (last == 0) {
    out.ratio = 0;
    out.converged = true;
  } else if (prev > 0) {
    out.ratio = last / prev;
    out.converged = out.ratio < 1;
    out.tail_bound = out.converged ? last * out.ratio / (1 - out.ratio) : INFINITY;
  } else {
    out.ratio = INFINITY;
    out.tail_bound = INFINITY;
  }
  return out;
}

}  // namespace spherical
