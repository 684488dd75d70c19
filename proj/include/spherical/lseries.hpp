#pragma once

// Unramified L-series, the basic function 1_rho, the inverse L element,
// the kernel of the Fourier transform and its verifications.
//
// Conventions. Grade k is the sigma-grade; on K mu K with sigma(mu) = k the
// function |sigma| equals q^{-k}. X stands for q^{-s}. Twisting by (a, b)
// multiplies grade k by X^{a k} v^{b k}, i.e. by |sigma|^{a s - b/2}.
// With l = 2<rho_B, lambda_rho>:
//   1_{rho,s}         = twist(1_rho, 1, 0)
//   1_{rho,-l/2}      = twist(1_rho, 0, l)
//   1_{rho,1+s+l/2}   = twist(1_rho, 1, -(l+2))

#include "spherical/characters.hpp"
#include "spherical/report.hpp"
#include "spherical/satake.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace spherical {

// sum_{k<=N} tr Sym^k rho as a character series; window (-inf, N].
SatakeImage l_series(const GroupContext& ctx, const RepSpec& rho, int n);

// c_mu(q) = sum_{lambda >= mu} K_{lambda mu}(q^{-1}) mult(Sym^k rho : V(lambda)),
// k = sigma(mu); zero when k < 0.
QPoly basic_coeff(const GroupContext& ctx, const RepSpec& rho, const Weight& mu);

// 1_rho at s = 0 on grades 0..N; coefficient of 1_{K mu K} is
// c_mu(q) q^{-<rho_B, mu>}. Window (-inf, N].
HeckeElement basic_function(const GroupContext& ctx, const RepSpec& rho, int n, int jobs = 1);

// twist(S^{-1}(sum_i (-1)^i wedge^i rho'), a, b), rho' the dual of rho when
// dualize is set. With dualize and (a, b) = (1, -l) this is the element
// whose Satake transform is 1/L(-s-l/2, rho^vee).
HeckeElement inverse_l_element(const GroupContext& ctx, const RepSpec& rho, bool dualize, int a,
                               int b);

// Phi_s = 1_{rho,1+s+l/2} * inverse_l_element(dual, 1, -l), s symbolic in X.
// Exact on grades up to N; supported in grades >= -dim rho.
HeckeElement gamma_kernel(const GroupContext& ctx, const RepSpec& rho, int n, int jobs = 1);

// An element 1_{rho,-l/2} * h of the Schwartz space, h compactly supported.
struct SchwartzElement {
  HeckeElement h;
};

// The element B * h on grades up to N.
HeckeElement materialize(const GroupContext& ctx, const RepSpec& rho, const SchwartzElement& f,
                         int n);

// F(f) = |sigma|^{-l-1} (Phi_0 * f^vee) on grades up to N, f finite.
HeckeElement fourier(const GroupContext& ctx, const RepSpec& rho, const HeckeElement& f, int n);
// Exact form: F(B * h) = B * |sigma|^{-l-1} h^vee. Checks the identity
// Phi_0 * B^vee = 1_{rho,1+l/2} on grades [-n, n] first.
SchwartzElement fourier(const GroupContext& ctx, const RepSpec& rho, const SchwartzElement& f,
                        int n);

struct VerifyOptions {
  int jobs = 1;
  // Replaces the computed basic function (s = 0, grades 0..N).
  std::optional<HeckeElement> basic_override;
};

// F(1_{rho,-l/2}) = 1_{rho,-l/2} on grades 0..N.
VerifyReport verify_fixed_point(const GroupContext& ctx, const RepSpec& rho, int n,
                                const VerifyOptions& opts = {});
// S(Phi)(c) S(Phi^vee)(c q^{-(l+1)}) = 1 through grade N.
VerifyReport verify_unitarity(const GroupContext& ctx, const RepSpec& rho, int n,
                              const VerifyOptions& opts = {});
// For GL(n) and the standard representation: 1_{rho, -(n-1)/2} is the
// indicator of integral matrices.
VerifyReport verify_gj_standard(const GroupContext& ctx, const RepSpec& rho, int n,
                                const VerifyOptions& opts = {});

struct ZetaValue {
  std::complex<double> value;
  bool divergent = false;  // some |c^w q^{-s}| >= 1
};

// Z(s, pi_c, B * h) = L(s, pi_c, rho) S(h)(c q^{-s-l/2}).
ZetaValue zeta_closed_form(const GroupContext& ctx, const RepSpec& rho, const HeckeElement& h,
                           const std::vector<std::complex<double>>& c, double q,
                           std::complex<double> s);

// The zeta integral of B * h divided by L(s, pi, rho), as a character
// polynomial in X. Computed from the series of B * h, which is checked to
// truncate: the result must vanish on `margin` grades past the support of h.
SatakeImage zeta_over_l(const GroupContext& ctx, const RepSpec& rho, const HeckeElement& h,
                        int margin = 2);

// h with B * h = target, when one exists among finite elements. The
// identity is checked through `margin` grades past the support of target.
HeckeElement membership_witness(const GroupContext& ctx, const RepSpec& rho,
                                const HeckeElement& target, int margin = 2);

// l and dim rho, after validating rho.
struct RhoData {
  std::int64_t l;
  int dim;
};
RhoData check_rho(const GroupContext& ctx, const RepSpec& rho);

}  // namespace spherical
