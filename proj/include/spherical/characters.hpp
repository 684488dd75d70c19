#pragma once

// Characters of the dual group: weight multiplicities, symmetric and
// exterior powers, tensor products and decomposition into irreducibles.

#include "spherical/context.hpp"
#include "spherical/numbers.hpp"

#include <complex>
#include <map>
#include <vector>

namespace spherical {

// Formal character: weight -> multiplicity, weights in reverse lex order.
using CharacterExpansion = std::map<Weight, BigInt, std::greater<>>;

struct IrrComponent {
  Weight lambda;
  BigInt mult;
  friend bool operator==(const IrrComponent&, const IrrComponent&) = default;
};
// Irreducible constituents, highest weights in reverse lex order.
using IrrDecomp = std::vector<IrrComponent>;

// ch V(lambda); lambda must be dominant.
const CharacterExpansion& weight_multiplicities(const GroupContext& ctx, const Weight& lambda);

CharacterExpansion character_product(const CharacterExpansion& a, const CharacterExpansion& b);

// Characters of Sym^k and wedge^k of rho, k = 0..n.
std::vector<CharacterExpansion> sym_powers(const RepSpec& rho, int n);
std::vector<CharacterExpansion> ext_powers(const RepSpec& rho, int n);

IrrDecomp sym_power_decomp(const GroupContext& ctx, const RepSpec& rho, int k);
IrrDecomp ext_power_decomp(const GroupContext& ctx, const RepSpec& rho, int i);

// Throws InvalidInput when ch is not W-invariant or not a genuine character.
IrrDecomp decompose(const GroupContext& ctx, const CharacterExpansion& ch);

// V(lambda) (x) V(mu), memoized.
const IrrDecomp& tensor_decomp(const GroupContext& ctx, const Weight& lambda, const Weight& mu);

// -w0(lambda): highest weight of the contragredient.
Weight dual_weight(const RootDatum& rd, const Weight& lambda);

// The dominant W-conjugate of w.
Weight dominant_conjugate(const RootDatum& rd, const Weight& w);

RepSpec make_rep(const GroupContext& ctx, const Weight& highest_weight);
// Standard representation of GL(n); throws for other data.
RepSpec standard_rep(const GroupContext& ctx);
// "std" or a comma separated highest weight.
RepSpec parse_rep(const GroupContext& ctx, const std::string& text);
RepSpec dual_rep(const GroupContext& ctx, const RepSpec& rho);

// chi_lambda evaluated at the torus element whose coordinate characters
// take the values c.
std::complex<double> eval_character(const GroupContext& ctx, const Weight& lambda,
                                    const std::vector<std::complex<double>>& c);
std::complex<double> eval_monomial(const Weight& w, const std::vector<std::complex<double>>& c);

}  // namespace spherical
