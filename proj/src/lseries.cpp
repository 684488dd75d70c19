#include "spherical/lseries.hpp"

#include "context_memo.hpp"
#include "spherical/kostka.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace spherical {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Grades lo..hi ordered outward from 0, so the reported mismatch is the one
// closest to the identity grade.
std::vector<int> outward(int lo, int hi) {
  std::vector<int> g;
  for (int k = lo; k <= hi; ++k) g.push_back(k);
  std::stable_sort(g.begin(), g.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
  return g;
}

template <class B>
void compare_stage(VerifyReport& rep, const std::string& stage, const Graded<B>& expected,
                   const Graded<B>& got, int lo, int hi) {
  StageResult sr{stage, lo, hi, 0, true};
  for (int k : outward(lo, hi)) {
    std::set<Weight, std::greater<>> keys;
    for (auto& [w, c] : expected.component(k)) keys.insert(w);
    for (auto& [w, c] : got.component(k)) keys.insert(w);
    for (const Weight& w : keys) {
      ++sr.terms_checked;
      LaurentCoeff e = expected.coeff(k, w), g = got.coeff(k, w);
      if (e == g) continue;
      if (sr.pass && !rep.first_mismatch) rep.first_mismatch = Mismatch{stage, k, w, e.str(), g.str()};
      sr.pass = false;
    }
  }
  rep.pass = rep.pass && sr.pass;
  rep.stages.push_back(sr);
}

QPoly coeff_from_decomp(const GroupContext& ctx, const IrrDecomp& d, const Weight& mu) {
  QPoly c;
  for (auto& [lambda, m] : d) {
    if (!dominance_leq(ctx.datum(), mu, lambda)) continue;
    c += lusztig_q_analogue(ctx, lambda, mu).invert() * QPoly::monomial(m, 0);
  }
  return c;
}

HeckeElement basic_or_override(const GroupContext& ctx, const RepSpec& rho, int n,
                               const VerifyOptions& opts) {
  if (!opts.basic_override) return basic_function(ctx, rho, n, opts.jobs);
  validate(ctx, *opts.basic_override);
  return *opts.basic_override;
}

}  // namespace

RhoData check_rho(const GroupContext& ctx, const RepSpec& rho) {
  ValidationReport v = validate_rho(ctx.datum(), rho);
  if (!v.pass) {
    std::string why = "representation rejected:";
    for (auto& f : v.failures) why += " " + f + ";";
    throw InvalidInput(why);
  }
  return {l_constant(ctx.datum(), rho), static_cast<int>(rho.dimension())};
}

SatakeImage l_series(const GroupContext& ctx, const RepSpec& rho, int n) {
  check_rho(ctx, rho);
  if (n < 0) throw InvalidInput("N must be nonnegative");
  auto sym = sym_powers(rho, n);
  SatakeImage out(GradeWindow::up_to(n));
  for (int k = 0; k <= n; ++k)
    for (auto& [lambda, m] : decompose(ctx, sym[k])) out.add(k, lambda, LaurentCoeff::monomial(m, 0));
  return out;
}

QPoly basic_coeff(const GroupContext& ctx, const RepSpec& rho, const Weight& mu) {
  check_rho(ctx, rho);
  const RootDatum& rd = ctx.datum();
  if (!rd.is_dominant(mu)) throw InvalidInput("weight " + mu.str() + " is not dominant");
  auto k = rd.sigma_grade(mu);
  if (k < 0) return QPoly();
  return coeff_from_decomp(ctx, sym_power_decomp(ctx, rho, static_cast<int>(k)), mu);
}

HeckeElement basic_function(const GroupContext& ctx, const RepSpec& rho, int n, int jobs) {
  check_rho(ctx, rho);
  if (n < 0) throw InvalidInput("N must be nonnegative");
  const RootDatum& rd = ctx.datum();
  auto sym = sym_powers(rho, n);
  HeckeElement out(GradeWindow::up_to(n));
  for (int k = 0; k <= n; ++k) {
    IrrDecomp d = decompose(ctx, sym[k]);
    std::set<Weight, std::greater<>> cells;
    for (auto& comp : d)
      for (auto& mu : cached_dominant_below(ctx, comp.lambda)) cells.insert(mu);
    std::vector<Weight> list(cells.begin(), cells.end());
    std::vector<LaurentCoeff> values(list.size());
    parallel_for(list.size(), jobs, [&](std::size_t i) {
      QPoly c = coeff_from_decomp(ctx, d, list[i]);
      values[i] = LaurentCoeff::from_q(c).shifted(-static_cast<int>(rd.twice_pair_rho_b(list[i])), 0);
    });
    for (std::size_t i = 0; i < list.size(); ++i) out.add(k, list[i], values[i]);
  }
  return out;
}

HeckeElement inverse_l_element(const GroupContext& ctx, const RepSpec& rho, bool dualize, int a,
                               int b) {
  auto [l, dim] = check_rho(ctx, rho);
  (void)l;
  RepSpec r = dualize ? dual_rep(ctx, rho) : rho;
  const int step = static_cast<int>(ctx.datum().sigma_grade(r.highest_weight));
  auto ext = ext_powers(r, dim);
  SatakeImage s;
  for (int i = 0; i <= dim; ++i)
    for (auto& [lambda, m] : decompose(ctx, ext[i]))
      s.add(step * i, lambda, LaurentCoeff::monomial(i % 2 ? BigInt(-m) : m, 0));
  return inverse_satake(ctx, s).twisted(a, b);
}

HeckeElement gamma_kernel(const GroupContext& ctx, const RepSpec& rho, int n, int jobs) {
  auto [l, dim] = check_rho(ctx, rho);
  if (n < 0) throw InvalidInput("N must be nonnegative");
  HeckeElement plus = basic_function(ctx, rho, n + dim, jobs).twisted(1, -static_cast<int>(l + 2));
  HeckeElement inv = inverse_l_element(ctx, rho, true, 1, -static_cast<int>(l));
  return convolve(ctx, plus, inv, GradeWindow::up_to(n));
}

HeckeElement materialize(const GroupContext& ctx, const RepSpec& rho, const SchwartzElement& f,
                         int n) {
  auto [l, dim] = check_rho(ctx, rho);
  (void)dim;
  validate(ctx, f.h);
  if (!f.h.is_finite()) throw InvalidInput("h must be compactly supported");
  if (f.h.is_zero()) return HeckeElement(GradeWindow::up_to(n));
  const int lo = *f.h.min_support();
  HeckeElement b =
      basic_function(ctx, rho, std::max(0, n - lo)).twisted(0, static_cast<int>(l));
  return convolve(ctx, b, f.h, GradeWindow::up_to(n));
}

HeckeElement fourier(const GroupContext& ctx, const RepSpec& rho, const HeckeElement& f, int n) {
  auto [l, dim] = check_rho(ctx, rho);
  (void)dim;
  validate(ctx, f);
  if (!f.is_finite()) throw InvalidInput("fourier of a series needs the Schwartz form");
  if (f.is_zero()) return HeckeElement(GradeWindow::up_to(n));
  const int top = *f.max_support();
  HeckeElement phi = gamma_kernel(ctx, rho, std::max(0, n + top)).specialized(0);
  return convolve(ctx, phi, dual(ctx, f), GradeWindow::up_to(n))
      .twisted(0, 2 * static_cast<int>(l + 1));
}

SchwartzElement fourier(const GroupContext& ctx, const RepSpec& rho, const SchwartzElement& f,
                        int n) {
  auto [l, dim] = check_rho(ctx, rho);
  (void)dim;
  validate(ctx, f.h);
  if (!f.h.is_finite()) throw InvalidInput("h must be compactly supported");
  // Phi_0 * B^vee = 1_{rho,1+l/2} * (L^{-1} * B^vee); the bracket must be
  // the identity.
  HeckeElement inv = inverse_l_element(ctx, rho, true, 1, -static_cast<int>(l)).specialized(0);
  HeckeElement b = basic_function(ctx, rho, n).twisted(0, static_cast<int>(l));
  HeckeElement p = convolve(ctx, inv, dual(ctx, b), GradeWindow::between(-n, 0));
  if (p != identity_hecke(ctx).restricted(GradeWindow::between(-n, 0)))
    throw std::logic_error("inverse L element does not invert the dual basic function");
  return {dual(ctx, f.h).twisted(0, 2 * static_cast<int>(l + 1))};
}

VerifyReport verify_fixed_point(const GroupContext& ctx, const RepSpec& rho, int n,
                                const VerifyOptions& opts) {
  auto t0 = Clock::now();
  auto [l, dim] = check_rho(ctx, rho);
  (void)dim;
  const int li = static_cast<int>(l);
  VerifyReport rep;
  rep.check = "fixed-point";
  rep.n = n;

  HeckeElement basic = basic_or_override(ctx, rho, n, opts);
  // S(1_{rho,1+l/2}) from the Hecke side against the L-series.
  SatakeImage lhs = satake(ctx, basic.twisted(0, -(li + 2)));
  SatakeImage rhs = l_series(ctx, rho, n).twisted(0, -(li + 2));
  compare_stage(rep, "basic-vs-l-series", rhs, lhs, 0, n);

  // L^{-1}(-l/2, rho^vee) * (1_{rho,-l/2})^vee is the identity, so
  // F(1_{rho,-l/2}) = |sigma|^{-l-1} 1_{rho,1+l/2} = 1_{rho,-l/2}.
  HeckeElement inv = inverse_l_element(ctx, rho, true, 1, -li).specialized(0);
  HeckeElement b = basic.twisted(0, li);
  GradeWindow neg = GradeWindow::between(-n, 0);
  HeckeElement p = convolve(ctx, inv, dual(ctx, b), neg);
  compare_stage(rep, "inverse-l-times-dual", identity_hecke(ctx).restricted(neg), p, -n, 0);

  rep.seconds = seconds_since(t0);
  return rep;
}

VerifyReport verify_unitarity(const GroupContext& ctx, const RepSpec& rho, int n,
                              const VerifyOptions& opts) {
  auto t0 = Clock::now();
  auto [l, dim] = check_rho(ctx, rho);
  const int li = static_cast<int>(l);
  VerifyReport rep;
  rep.check = "unitarity";
  rep.n = n;

  HeckeElement basic = basic_or_override(ctx, rho, n, opts);
  SatakeImage plus = satake(ctx, basic.twisted(0, -(li + 2)));
  SatakeImage inv = satake(ctx, inverse_l_element(ctx, rho, true, 1, -li).specialized(0));
  SatakeImage one = identity_satake(ctx);

  // S(Phi) = S(1_{rho,1+l/2}) S(L^{-1}); the product with the dual side is
  // regrouped into two one-sided products, each of which must be 1.
  SatakeImage a = satake_product(ctx, plus, dual(ctx, inv).twisted(0, -2 * (li + 1)),
                                 GradeWindow::up_to(n));
  compare_stage(rep, "positive-factor", one.restricted(GradeWindow::up_to(n)), a, 0, n);
  SatakeImage b = satake_product(ctx, inv, dual(ctx, plus).twisted(0, -2 * (li + 1)),
                                 GradeWindow::from(-n));
  compare_stage(rep, "negative-factor", one.restricted(GradeWindow::from(-n)), b, -n, 0);

  // The kernel's own Satake image matches the factored form.
  const int kn = n - dim;
  HeckeElement phi = convolve(ctx, basic.twisted(0, -(li + 2)), inverse_satake(ctx, inv),
                              GradeWindow::up_to(kn));
  SatakeImage factored = satake_product(ctx, plus, inv, GradeWindow::up_to(kn));
  compare_stage(rep, "kernel-factorization", factored, satake(ctx, phi), -dim, kn);

  rep.seconds = seconds_since(t0);
  return rep;
}

VerifyReport verify_gj_standard(const GroupContext& ctx, const RepSpec& rho, int n,
                                const VerifyOptions& opts) {
  auto t0 = Clock::now();
  const RootDatum& rd = ctx.datum();
  const std::size_t m = rd.coweight_rank();
  Weight e(m);
  e[0] = 1;
  if (rd.label().rfind("GL", 0) != 0 || rho.highest_weight != e)
    throw InvalidInput("the indicator identity applies to GL(n) with the standard representation");
  auto [l, dim] = check_rho(ctx, rho);
  (void)dim;
  VerifyReport rep;
  rep.check = "gj-standard";
  rep.n = n;

  HeckeElement b = basic_or_override(ctx, rho, n, opts).twisted(0, static_cast<int>(l));
  HeckeElement expected(GradeWindow::up_to(n));
  // Nonincreasing sequences of nonnegative integers with sum k.
  std::vector<std::int64_t> cur;
  auto rec = [&](auto& self, std::size_t pos, std::int64_t left, std::int64_t cap, int k) -> void {
    if (pos == m) {
      if (left == 0) expected.add(k, Weight(cur), LaurentCoeff(1));
      return;
    }
    for (std::int64_t x = std::min(left, cap); x >= 0; --x) {
      cur.push_back(x);
      self(self, pos + 1, left - x, x, k);
      cur.pop_back();
    }
  };
  for (int k = 0; k <= n; ++k) rec(rec, 0, k, k, k);
  compare_stage(rep, "indicator", expected, b, 0, n);
  rep.seconds = seconds_since(t0);
  return rep;
}

ZetaValue zeta_closed_form(const GroupContext& ctx, const RepSpec& rho, const HeckeElement& h,
                           const std::vector<std::complex<double>>& c, double q,
                           std::complex<double> s) {
  auto [l, dim] = check_rho(ctx, rho);
  (void)dim;
  validate(ctx, h);
  if (!h.is_finite()) throw InvalidInput("h must be compactly supported");
  ZetaValue out;
  const std::complex<double> x = std::exp(-s * std::log(q));
  std::complex<double> lval = 1;
  for (auto& [w, k] : rho.weights) {
    std::complex<double> t = eval_monomial(w, c) * x;
    if (std::abs(t) >= 1) out.divergent = true;
    lval /= std::pow(1.0 - t, static_cast<int>(k));
  }
  SatakeImage sh = satake(ctx, h).twisted(1, -static_cast<int>(l));
  std::complex<double> hv = 0;
  for (auto& [k, comp] : sh.grades())
    for (auto& [lambda, coeff] : comp) hv += coeff.eval(std::sqrt(q), x) * eval_character(ctx, lambda, c);
  out.value = lval * hv;
  return out;
}

SatakeImage zeta_over_l(const GroupContext& ctx, const RepSpec& rho, const HeckeElement& h,
                        int margin) {
  auto [l, dim] = check_rho(ctx, rho);
  (void)dim;
  validate(ctx, h);
  if (!h.is_finite()) throw InvalidInput("h must be compactly supported");
  SatakeImage out;
  if (h.is_zero()) return out;
  const int top = *h.max_support() + margin;
  HeckeElement f = materialize(ctx, rho, {h}, top);
  SatakeImage zf = satake(ctx, f.twisted(1, -static_cast<int>(l)));
  SatakeImage inv = satake(ctx, inverse_l_element(ctx, rho, false, 1, 0));
  SatakeImage r = satake_product(ctx, zf, inv, GradeWindow::up_to(top));
  for (auto& [k, comp] : r.grades()) {
    if (k > *h.max_support())
      throw std::logic_error("zeta integral over L does not truncate at grade " + std::to_string(k));
    for (auto& [lambda, c] : comp) out.add(k, lambda, c);
  }
  return out;
}

HeckeElement membership_witness(const GroupContext& ctx, const RepSpec& rho,
                                const HeckeElement& target, int margin) {
  auto [l, dim] = check_rho(ctx, rho);
  (void)dim;
  validate(ctx, target);
  if (!target.is_finite()) throw InvalidInput("target must be compactly supported");
  HeckeElement h =
      convolve(ctx, target, inverse_l_element(ctx, rho, false, 0, static_cast<int>(l)));
  if (target.is_zero()) return h;
  const int top = *target.max_support() + margin;
  HeckeElement back = materialize(ctx, rho, {h}, top);
  if (back != target.restricted(GradeWindow::up_to(top)))
    throw std::logic_error("membership witness does not reproduce the target");
  return h;
}

}  // namespace spherical
