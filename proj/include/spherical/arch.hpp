#pragma once

// Archimedean side: complex Gamma, spherical L- and gamma-factors for
// representations given by their weights, Stirling and derivative checks,
// the weight-norm constant and the decay thresholds.

#include "spherical/context.hpp"
#include "spherical/numbers.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace spherical::arch {

using cplx = std::complex<double>;

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Lanczos approximation (g = 7, 9 terms) with reflection below Re z = 1/2.
cplx cgamma(cplx z);
// A branch of log Gamma; accurate where Gamma itself would overflow.
cplx lgamma(cplx z);
// 1 / Gamma(z), entire; exactly 0 at nonpositive integers.
cplx rgamma(cplx z);
bool is_pole(cplx z, double tol = 1e-12);

enum class Field { real, complex };

struct ArchParams {
  Field field = Field::real;
  cplx s;
  std::vector<cplx> lambda;     // spectral parameter, m entries
  std::vector<Weight> weights;  // varpi_k with multiplicity
  std::int64_t l = 0;
};

struct FactorValue {
  cplx value;
  cplx log_value;  // meaningful unless pole or zero
  bool pole = false;
  bool zero = false;
};

// prod_k pi^{-(s + i w_k)/2} Gamma((s + i w_k)/2), w_k = varpi_k(lambda)
FactorValue lfactor_real(cplx s, const std::vector<cplx>& lambda, const std::vector<Weight>& weights);
// prod_k 2 (2 pi)^{-(2s + i w_k)/2} Gamma((2s + i w_k)/2)
FactorValue lfactor_cplx(cplx s, const std::vector<cplx>& lambda, const std::vector<Weight>& weights);
FactorValue lfactor(const ArchParams& p);

struct GammaFactor {
  FactorValue route1;  // L(1+s+l/2, lambda) / L(-s-l/2, -lambda)
  FactorValue route2;  // reflection-simplified product
  double discrepancy = 0;
};
GammaFactor gamma_factor(const ArchParams& p);

// sqrt(2 pi) |y|^{x-1/2} e^{-pi |y| / 2}
double stirling_form(double x, double y);
// |Gamma(x + i y)| / stirling_form(x, y), in log space.
double stirling_ratio(double x, double y);
// Gamma^{(n)}(z) / (Gamma(z) (log z)^n), derivatives by Richardson-extrapolated
// central differences of Gamma(z + t) / Gamma(z).
cplx derivative_ratio(int n, cplx z);

enum class Which { basic, kernel };

// Exact decay threshold: the max of varpi_k over the Weyl orbit of eps rho_B,
// eps = 2/p - 1, with the offsets for the kernel and the complex field.
Rational threshold(const GroupContext& ctx, const RepSpec& rho, const Rational& p, Which which,
                   Field field);

// Largest C with sum_k |varpi_k(x)| >= C sum_t |x_t|. Exact.
Rational c_rho_constant(const std::vector<Weight>& weights);

struct ProbeGrid {
  double radius = 60;
  int shells = 12;
  int directions = 24;
  int hull_samples = 4;
  unsigned seed = 20240601;
};

struct ProbeReport {
  double max_log10 = 0;         // log10 of the largest sample
  double inner_max_log10 = 0;   // shells before the last
  double last_shell_max_log10 = 0;
  bool decaying = false;
  bool pole_flag = false;
  std::size_t samples = 0;
  std::vector<double> shell_radius, shell_max_log10;
};

// Samples (|lambda|+1)^t |L(s, pi_lambda, rho)| for lambda = x + i y with x on
// shells of the given radius and y in the hull of W eps rho_B.
ProbeReport seminorm_probe(const GroupContext& ctx, const RepSpec& rho, cplx s, const Rational& p,
                           int t, const ProbeGrid& grid, Field field = Field::real, int jobs = 1);

}  // namespace spherical::arch
