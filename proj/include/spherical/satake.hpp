#pragma once

// Satake transform between the spherical Hecke algebra (basis 1_{K mu K})
// and characters of the dual group, through the Kato-Lusztig formula
//   chi_lambda = sum_{mu <= lambda} q^{-<rho_B, mu>} K_{lambda mu}(q^{-1}) S(1_{K mu K}).

#include "spherical/characters.hpp"
#include "spherical/context.hpp"
#include "spherical/graded.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace spherical {

// S(1_{K mu K}) as a combination of chi_lambda, lambda <= mu.
const SatakeImage::Component& satake_basis(const GroupContext& ctx, const Weight& mu);

HeckeElement basis_element(const GroupContext& ctx, const Weight& mu,
                           const LaurentCoeff& coeff = LaurentCoeff(1));
SatakeImage character_element(const GroupContext& ctx, const Weight& lambda,
                              const LaurentCoeff& coeff = LaurentCoeff(1));

// Both checks that every weight is dominant and sits in its own grade.
void validate(const GroupContext& ctx, const HeckeElement& f);
void validate(const GroupContext& ctx, const SatakeImage& f);

SatakeImage satake(const GroupContext& ctx, const HeckeElement& f);
HeckeElement inverse_satake(const GroupContext& ctx, const SatakeImage& f);

SatakeImage satake_product(const GroupContext& ctx, const SatakeImage& a, const SatakeImage& b,
                           std::optional<GradeWindow> window = std::nullopt);
HeckeElement convolve(const GroupContext& ctx, const HeckeElement& a, const HeckeElement& b,
                      std::optional<GradeWindow> window = std::nullopt);

// f^vee(g) = f(g^{-1}): 1_{K mu K} -> 1_{K (-w0 mu) K}, grades negate.
HeckeElement dual(const GroupContext& ctx, const HeckeElement& f);
SatakeImage dual(const GroupContext& ctx, const SatakeImage& f);

SatakeImage identity_satake(const GroupContext& ctx);
HeckeElement identity_hecke(const GroupContext& ctx);

struct NumericEval {
  std::complex<double> value;
  double last_term = 0;    // |grade N term|
  double ratio = 0;        // |grade N| / |grade N-1|
  double tail_bound = 0;   // geometric tail estimate
  bool converged = false;  // false when the ratio is >= 1
};

// Sum over grades <= N of f at v = sqrt(q), X = q^{-s}, chi_lambda at c.
NumericEval eval_numeric(const GroupContext& ctx, const SatakeImage& f,
                         const std::vector<std::complex<double>>& c, double q,
                         std::complex<double> s, int n);

}  // namespace spherical
