#include "spherical/arch.hpp"

#include "spherical/memo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

namespace spherical::arch {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const double kLogPi = std::log(kPi);
const double kLog2Pi = std::log(2 * kPi);
const cplx kI(0, 1);

constexpr double kLanczosG = 7;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// log sin(pi z), without overflow for large |Im z| and without
// cancellation near the zeros.
cplx log_sin_pi(cplx z) {
  const double n = std::round(z.real());
  const cplx f = z - n;
  const cplx sign_log = std::fmod(std::abs(n), 2.0) == 1.0 ? cplx(0, kPi) : cplx(0);
  if (std::abs(f.imag()) < 5) return std::log(std::sin(kPi * f)) + sign_log;
  const cplx log_2i = std::log(cplx(0, 2));
  if (f.imag() > 0) return -kI * kPi * f + std::log(std::exp(2.0 * kI * kPi * f) - 1.0) - log_2i + sign_log;
  return kI * kPi * f + std::log(1.0 - std::exp(-2.0 * kI * kPi * f)) - log_2i + sign_log;
}

cplx lgamma_right(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * kLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

double dot_real(const Weight& w, const std::vector<double>& x) {
  double s = 0;
  for (std::size_t t = 0; t < w.size(); ++t) s += static_cast<double>(w[t]) * x[t];
  return s;
}

cplx pair(const Weight& w, const std::vector<cplx>& lambda) {
  if (w.size() != lambda.size()) throw InvalidInput("spectral parameter has the wrong length");
  cplx s = 0;
  for (std::size_t t = 0; t < w.size(); ++t) s += static_cast<double>(w[t]) * lambda[t];
  return s;
}

bool near_integer(cplx z, double tol) {
  return std::abs(z.imag()) <= tol && std::abs(z.real() - std::round(z.real())) <= tol;
}

// Accumulates log factors; pole and zero bookkeeping on the side.
struct LogProduct {
  cplx log = 0;
  bool pole = false, zero = false;
  FactorValue finish() const {
    FactorValue v;
    v.pole = pole;
    v.zero = zero && !pole;
    v.log_value = log;
    if (pole)
      v.value = cplx(std::numeric_limits<double>::infinity(), 0);
    else if (zero)
      v.value = 0;
    else
      v.value = std::exp(log);
    return v;
  }
  void gamma(cplx z) {
    if (is_pole(z)) pole = true;
    else log += lgamma(z);
  }
  void inv_gamma(cplx z) {
    if (is_pole(z)) zero = true;
    else log -= lgamma(z);
  }
  void sin_pi(cplx z) {
    if (near_integer(z, 1e-14)) zero = true;
    else log += log_sin_pi(z);
  }
};

double relative_gap(const FactorValue& a, const FactorValue& b) {
  if (a.pole || b.pole) return std::numeric_limits<double>::infinity();
  if (a.zero || b.zero) return std::abs(a.value - b.value);
  // compare in log space: |a/b - 1|
  cplx d = a.log_value - b.log_value;
  return std::abs(std::exp(d) - 1.0);
}

}  // namespace

bool is_pole(cplx z, double tol) { return near_integer(z, tol) && std::round(z.real()) <= 0; }

cplx lgamma(cplx z) {
  if (is_pole(z, 0)) throw PoleError("Gamma has a pole at a nonpositive integer");
  if (z.real() >= 0.5) return lgamma_right(z);
  return kLogPi - log_sin_pi(z) - lgamma_right(1.0 - z);
}

cplx cgamma(cplx z) {
  if (is_pole(z, 0)) throw PoleError("Gamma has a pole at a nonpositive integer");
  if (z.real() >= 0.5 && std::abs(z) < 140) {
    // direct form keeps full relative accuracy for moderate arguments
    z -= 1.0;
    cplx x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + kLanczosG + 0.5;
    return std::sqrt(2 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
  }
  return std::exp(lgamma(z));
}

cplx rgamma(cplx z) {
  if (is_pole(z, 0)) return 0;
  return std::exp(-lgamma(z));
}

FactorValue lfactor_real(cplx s, const std::vector<cplx>& lambda, const std::vector<Weight>& weights) {
  LogProduct p;
  for (auto& w : weights) {
    cplx arg = (s + kI * pair(w, lambda)) / 2.0;
    p.log -= arg * kLogPi;
    p.gamma(arg);
  }
  return p.finish();
}

FactorValue lfactor_cplx(cplx s, const std::vector<cplx>& lambda, const std::vector<Weight>& weights) {
  LogProduct p;
  for (auto& w : weights) {
    cplx arg = (2.0 * s + kI * pair(w, lambda)) / 2.0;
    p.log += std::log(2.0) - arg * kLog2Pi;
    p.gamma(arg);
  }
  return p.finish();
}

FactorValue lfactor(const ArchParams& p) {
  return p.field == Field::real ? lfactor_real(p.s, p.lambda, p.weights)
                                : lfactor_cplx(p.s, p.lambda, p.weights);
}

GammaFactor gamma_factor(const ArchParams& p) {
  const double half_l = static_cast<double>(p.l) / 2;
  const cplx a = 1.0 + p.s + half_l;  // numerator point
  const cplx b = -p.s - half_l;       // denominator point, a + b = 1
  LogProduct r1, r2;
  for (auto& wt : p.weights) {
    const cplx w = pair(wt, p.lambda);
    if (p.field == Field::real) {
      cplx num = (a + kI * w) / 2.0, den = (b - kI * w) / 2.0;
      r1.log += -num * kLogPi + den * kLogPi;
      r1.gamma(num);
      r1.inv_gamma(den);
      // pi^{-(1/2+s+l/2+iw)} Gamma((1+s+l/2+iw)/2) sin(pi(2+s+l/2+iw)/2)/pi Gamma((2+s+l/2+iw)/2)
      cplx u = p.s + half_l + kI * w;
      r2.log += -(0.5 + u) * kLogPi - kLogPi;
      r2.gamma((1.0 + u) / 2.0);
      r2.sin_pi((2.0 + u) / 2.0);
      r2.gamma((2.0 + u) / 2.0);
    } else {
      cplx num = a + kI * w / 2.0, den = b - kI * w / 2.0;
      r1.log += -num * kLog2Pi + den * kLog2Pi;
      r1.gamma(num);
      r1.inv_gamma(den);
      // (2 pi)^{1-2a-iw} Gamma(v)^2 sin(pi v)/pi, v = a + iw/2
      cplx v = num;
      r2.log += (1.0 - 2.0 * a - kI * w) * kLog2Pi - kLogPi;
      r2.gamma(v);
      r2.gamma(v);
      r2.sin_pi(v);
    }
  }
  GammaFactor g{r1.finish(), r2.finish(), 0};
  g.discrepancy = relative_gap(g.route1, g.route2);
  return g;
}

double stirling_form(double x, double y) {
  return std::exp(std::log(std::sqrt(2 * kPi)) + (x - 0.5) * std::log(std::abs(y)) -
                   kPi * std::abs(y) / 2);
}

double stirling_ratio(double x, double y) {
  if (std::abs(y) < 1) throw InvalidInput("stirling_ratio needs |y| >= 1");
  double log_form = 0.5 * kLog2Pi + (x - 0.5) * std::log(std::abs(y)) - kPi * std::abs(y) / 2;
  return std::exp(lgamma(cplx(x, y)).real() - log_form);
}

cplx derivative_ratio(int n, cplx z) {
  if (n < 1) throw InvalidInput("derivative order must be positive");
  if (z.real() <= 0 && z.imag() == 0) throw InvalidInput("z must satisfy |arg z| < pi");
  // distance to the nearest pole bounds the step
  double dist = std::numeric_limits<double>::infinity();
  if (z.real() < 0.5)
    for (double k = 0; k >= std::floor(z.real()) - 1; --k) dist = std::min(dist, std::abs(z - k));
  else
    dist = std::abs(z);
  const cplx lz = std::log(z);
  const cplx base = lgamma(z);
  auto g = [&](double t) { return std::exp(lgamma(z + t) - base); };
  auto central = [&](double h) {
    // n-th central difference with binomial weights, nodes (n/2 - j) h
    cplx s = 0;
    double binom = 1;
    for (int j = 0; j <= n; ++j) {
      s += (j % 2 ? -binom : binom) * g((n / 2.0 - j) * h);
      binom = binom * (n - j) / (j + 1);
    }
    return s / std::pow(h, n);
  };
  double h = std::min(0.5 / (1 + std::abs(lz)), 0.4 * dist / std::max(1, n));
  constexpr int levels = 8;
  std::vector<std::vector<cplx>> t(levels);
  cplx best = 0;
  double best_gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < levels; ++i, h /= 2) {
    t[i].push_back(central(h));
    double f = 4;
    for (int k = 1; k <= i; ++k, f *= 4) t[i].push_back(t[i][k - 1] + (t[i][k - 1] - t[i - 1][k - 1]) / (f - 1));
    if (i > 0) {
      double gap = std::abs(t[i][i] - t[i - 1][i - 1]);
      if (gap < best_gap) {
        best_gap = gap;
        best = t[i][i];
      }
    }
  }
  return best / std::pow(lz, n);
}

Rational threshold(const GroupContext& ctx, const RepSpec& rho, const Rational& p, Which which,
                   Field field) {
  if (p <= 0 || p > 2) throw InvalidInput("p must lie in (0, 2]");
  const Rational eps = Rational(2) / p - 1;
  const Weight& form = ctx.datum().rho_b_times_2();
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (const WeylElement& w : ctx.weyl().elements())
    for (auto& [wt, k] : rho.weights) best = std::max(best, form.dot(w.action.apply(wt)));
  Rational m = eps * Rational(best, 2);
  const Rational half_l(l_constant(ctx.datum(), rho), 2);
  if (field == Field::real) return which == Which::basic ? m : m - 1 - half_l;
  return which == Which::basic ? m / 2 : m / 2 - Rational(1, 2) - half_l / 2;
}

Rational c_rho_constant(const std::vector<Weight>& weights) {
  if (weights.empty()) throw InvalidInput("no weights");
  const std::size_t m = weights[0].size();
  if (m > 4) throw InvalidInput("c_rho_constant supports coweight rank at most 4");
  std::vector<Weight> planes;
  for (auto& w : weights) {
    if (w.size() != m) throw InvalidInput("weights differ in length");
    if (!w.is_zero() && std::find(planes.begin(), planes.end(), w) == planes.end()) planes.push_back(w);
  }
  for (std::size_t t = 0; t < m; ++t) {
    Weight e(m);
    e[t] = 1;
    if (std::find(planes.begin(), planes.end(), e) == planes.end()) planes.push_back(e);
  }
  // The objective is linear on each cell cut out by the planes varpi_k = 0
  // and x_t = 0, so its minimum over the cross-polytope boundary sits on a
  // line where m-1 of these planes meet.
  std::optional<Rational> best;
  std::vector<std::size_t> pick;
  auto evaluate = [&] {
    std::vector<std::vector<Rational>> a;
    for (auto i : pick) {
      std::vector<Rational> row;
      for (auto x : planes[i]) row.emplace_back(x);
      a.push_back(std::move(row));
    }
    // reduced row echelon form
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m && r < a.size(); ++col) {
      std::size_t piv = r;
      while (piv < a.size() && a[piv][col] == 0) ++piv;
      if (piv == a.size()) continue;
      std::swap(a[piv], a[r]);
      Rational d = a[r][col];
      for (auto& x : a[r]) x /= d;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == r || a[i][col] == 0) continue;
        Rational f = a[i][col];
        for (std::size_t j = 0; j < m; ++j) a[i][j] -= f * a[r][j];
      }
      pivots.push_back(col);
      ++r;
    }
    if (r != m - 1) return;
    std::size_t free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
    std::vector<Rational> d(m, Rational(0));
    d[free_col] = 1;
    for (std::size_t i = 0; i < r; ++i) d[pivots[i]] = -a[i][free_col];
    Rational num = 0, den = 0;
    for (auto& w : weights) {
      Rational v = 0;
      for (std::size_t t = 0; t < m; ++t) v += d[t] * w[t];
      num += abs(v);
    }
    for (auto& x : d) den += abs(x);
    Rational val = num / den;
    if (!best || val < *best) best = val;
  };
  auto choose = [&](auto& self, std::size_t from) -> void {
    if (pick.size() == m - 1) {
      evaluate();
      return;
    }
    for (std::size_t i = from; i < planes.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  choose(choose, 0);
  if (!best || *best == 0) throw InvalidInput("weights do not span; no positive constant exists");
  return *best;
}

ProbeReport seminorm_probe(const GroupContext& ctx, const RepSpec& rho, cplx s, const Rational& p,
                           int t, const ProbeGrid& grid, Field field, int jobs) {
  if (grid.shells < 2 || grid.directions < 1) throw InvalidInput("probe grid too small");
  const std::size_t m = ctx.datum().coweight_rank();
  const double eps = to_double(Rational(2) / p - 1);
  if (p <= 0 || p > 2) throw InvalidInput("p must lie in (0, 2]");
  const auto weights = rho.weight_list();

  // Vertices of the hull: the Weyl orbit of eps rho_B.
  std::vector<std::vector<double>> hull;
  for (const WeylElement& w : ctx.weyl().elements()) {
    Weight f = w.action.pull_back(ctx.datum().rho_b_times_2());
    std::vector<double> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = eps * static_cast<double>(f[i]) / 2;
    if (std::find(hull.begin(), hull.end(), v) == hull.end()) hull.push_back(v);
  }
  std::mt19937 gen(grid.seed);
  std::vector<std::vector<double>> ys = hull;
  std::uniform_real_distribution<double> unif(0, 1);
  for (int k = 0; k < grid.hull_samples; ++k) {
    std::vector<double> y(m, 0);
    double total = 0;
    std::vector<double> coef(hull.size());
    for (auto& c : coef) {
      c = unif(gen);
      total += c;
    }
    for (std::size_t h = 0; h < hull.size(); ++h)
      for (std::size_t i = 0; i < m; ++i) y[i] += coef[h] / total * hull[h][i];
    ys.push_back(y);
  }
  std::normal_distribution<double> normal;
  std::vector<std::vector<double>> dirs;
  for (int k = 0; k < grid.directions; ++k) {
    std::vector<double> d(m);
    double n2 = 0;
    for (auto& x : d) {
      x = normal(gen);
      n2 += x * x;
    }
    for (auto& x : d) x /= std::sqrt(n2);
    dirs.push_back(d);
  }

  ProbeReport rep;
  // Analytic pole proximity: a Gamma argument whose real part can come
  // within 0.1 of a nonpositive integer while its imaginary part vanishes.
  for (auto& w : weights) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (auto& y : hull) {
      lo = std::min(lo, dot_real(w, y));
      hi = std::max(hi, dot_real(w, y));
    }
    double re_lo, re_hi;
    if (field == Field::real) {
      re_lo = (s.real() - hi) / 2;
      re_hi = (s.real() - lo) / 2;
    } else {
      re_lo = s.real() - hi / 2;
      re_hi = s.real() - lo / 2;
    }
    bool im_can_vanish = !w.is_zero() || std::abs(s.imag()) < 1e-12;
    double nearest = std::min(0.0, std::floor(re_hi + 0.1));
    if (im_can_vanish && nearest >= re_lo - 0.1) rep.pole_flag = true;
  }

  const int shells = grid.shells;
  const std::size_t per_shell = dirs.size() * ys.size();
  std::vector<double> logs(static_cast<std::size_t>(shells + 1) * per_shell, -INFINITY);
  std::vector<char> poles(logs.size(), 0);
  parallel_for(logs.size(), jobs, [&](std::size_t idx) {
    const std::size_t shell = idx / per_shell, rest = idx % per_shell;
    const auto& d = dirs[rest / ys.size()];
    const auto& y = ys[rest % ys.size()];
    const double r = grid.radius * static_cast<double>(shell) / shells;
    std::vector<cplx> lambda(m);
    double norm2 = 0;
    for (std::size_t i = 0; i < m; ++i) {
      lambda[i] = cplx(r * d[i], y[i]);
      norm2 += std::norm(lambda[i]);
    }
    FactorValue v = field == Field::real ? lfactor_real(s, lambda, weights) : lfactor_cplx(s, lambda, weights);
    if (v.pole) {
      poles[idx] = 1;
      return;
    }
    logs[idx] = (t * std::log(std::sqrt(norm2) + 1) + v.log_value.real()) / std::log(10.0);
  });
  rep.samples = logs.size();
  rep.max_log10 = rep.inner_max_log10 = rep.last_shell_max_log10 = -INFINITY;
  for (std::size_t idx = 0; idx < logs.size(); ++idx) {
    if (poles[idx]) rep.pole_flag = true;
    const bool last = idx / per_shell == static_cast<std::size_t>(shells);
    rep.max_log10 = std::max(rep.max_log10, logs[idx]);
    auto& slot = last ? rep.last_shell_max_log10 : rep.inner_max_log10;
    slot = std::max(slot, logs[idx]);
  }
  rep.decaying = rep.last_shell_max_log10 < rep.inner_max_log10;
  for (int sh = 0; sh <= shells; ++sh) {
    double mx = -INFINITY;
    for (std::size_t i = 0; i < per_shell; ++i) mx = std::max(mx, logs[sh * per_shell + i]);
    rep.shell_radius.push_back(grid.radius * sh / shells);
    rep.shell_max_log10.push_back(mx);
  }
  return rep;
}

}  // namespace spherical::arch
