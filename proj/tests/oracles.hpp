// Brute-force reference computations used by the unit and acceptance tests.
// Nothing here calls into the library beyond reading the simple roots and
// coroots of a datum; every derived quantity is recomputed from scratch by
// exhaustive enumeration.
#pragma once

#include "spherical/root_datum.hpp"

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;  // row major, m x m
using Poly = std::map<int, long long>;  // exponent of q -> coefficient

inline long long dot(const Vec& a, const Vec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec act(const Mat& m, const Vec& x) {
  Vec y(x.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) y[i] = dot(m[i], x);
  return y;
}

inline Mat mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size();
  Mat c(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline long long det(Mat a) {
  // fraction-free Bareiss elimination
  std::size_t n = a.size();
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

struct Datum {
  std::size_t m = 0;
  std::vector<Vec> alpha, coalpha;  // simple roots and coroots
};

inline Datum gl(int n) {
  Datum d;
  d.m = static_cast<std::size_t>(n);
  for (int i = 0; i + 1 < n; ++i) {
    Vec a(d.m, 0);
    a[i] = 1;
    a[i + 1] = -1;
    d.alpha.push_back(a);
    d.coalpha.push_back(a);
  }
  return d;
}

inline Datum from(const spherical::RootDatum& rd) {
  Datum d;
  d.m = rd.coweight_rank();
  for (auto& w : rd.simple_roots()) d.alpha.push_back(w.coords());
  for (auto& w : rd.simple_coroots()) d.coalpha.push_back(w.coords());
  return d;
}

struct Element {
  Mat action;
  int sign;
};

// Closure of the simple reflections x -> x - <x, coalpha_i> alpha_i under products.
inline std::vector<Element> weyl(const Datum& d) {
  std::size_t m = d.m;
  Mat id(m, Vec(m, 0));
  for (std::size_t i = 0; i < m; ++i) id[i][i] = 1;
  std::vector<Mat> gens;
  for (std::size_t r = 0; r < d.alpha.size(); ++r) {
    Mat s = id;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) s[i][j] -= d.alpha[r][i] * d.coalpha[r][j];
    gens.push_back(s);
  }
  std::set<Mat> seen{id};
  std::vector<Mat> frontier{id};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (auto& g : frontier)
      for (auto& s : gens) {
        Mat h = mul(s, g);
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  std::vector<Element> out;
  for (auto& g : seen) out.push_back({g, static_cast<int>(det(g))});
  return out;
}

// Coefficients n with sum n_j alpha_j = beta and every n_j in [lo, hi]:
// solve the normal equations in floating point, round, and confirm exactly.
inline std::optional<Vec> simple_coords(const Datum& d, const Vec& beta, int lo, int hi) {
  std::size_t r = d.alpha.size();
  std::vector<std::vector<double>> g(r, std::vector<double>(r + 1, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) g[i][j] = static_cast<double>(dot(d.alpha[i], d.alpha[j]));
    g[i][r] = static_cast<double>(dot(d.alpha[i], beta));
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t piv = c;
    for (std::size_t i = c + 1; i < r; ++i)
      if (std::abs(g[i][c]) > std::abs(g[piv][c])) piv = i;
    std::swap(g[c], g[piv]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c) continue;
      double f = g[i][c] / g[c][c];
      for (std::size_t j = c; j <= r; ++j) g[i][j] -= f * g[c][j];
    }
  }
  Vec n(r);
  for (std::size_t i = 0; i < r; ++i) {
    double x = g[i][r] / g[i][i];
    n[i] = std::llround(x);
    if (std::abs(x - static_cast<double>(n[i])) > 1e-6 || n[i] < lo || n[i] > hi) return std::nullopt;
  }
  Vec s(d.m, 0);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < d.m; ++i) s[i] += n[j] * d.alpha[j][i];
  if (s != beta) return std::nullopt;
  return n;
}

struct Roots {
  std::vector<Vec> positive;         // as weights
  std::vector<Vec> positive_simple;  // in simple coordinates
  std::vector<Vec> positive_coroots;
};

inline Roots roots(const Datum& d, const std::vector<Element>& w) {
  Roots out;
  std::set<Vec> seen;
  for (auto& e : w) {
    // contragredient action on coweights is the transpose inverse; for a
    // reflection group element that is the transpose of the inverse matrix
    Mat inv;
    for (auto& f : w) {
      Mat p = mul(f.action, e.action);
      bool is_id = true;
      for (std::size_t i = 0; i < d.m; ++i)
        for (std::size_t j = 0; j < d.m; ++j) is_id = is_id && p[i][j] == (i == j ? 1 : 0);
      if (is_id) {
        inv = f.action;
        break;
      }
    }
    for (std::size_t r = 0; r < d.alpha.size(); ++r) {
      Vec beta = act(e.action, d.alpha[r]);
      if (!seen.insert(beta).second) continue;
      auto c = simple_coords(d, beta, -4, 4);
      if (!c) continue;
      if (std::all_of(c->begin(), c->end(), [](long long x) { return x >= 0; })) {
        Vec cob(d.m, 0);  // (inv)^T coalpha_r
        for (std::size_t i = 0; i < d.m; ++i)
          for (std::size_t j = 0; j < d.m; ++j) cob[i] += inv[j][i] * d.coalpha[r][j];
        out.positive.push_back(beta);
        out.positive_simple.push_back(*c);
        out.positive_coroots.push_back(cob);
      }
    }
  }
  return out;
}

inline Vec two_rho(const Datum& d, const Roots& r) {
  Vec s(d.m, 0);
  for (auto& b : r.positive)
    for (std::size_t i = 0; i < d.m; ++i) s[i] += b[i];
  return s;
}

// Number of ways to write target (simple coordinates) as a sum of positive
// roots, graded by the number of summands.
inline Poly partitions(const Roots& r, const Vec& target) {
  Poly out;
  std::function<void(std::size_t, Vec, int)> rec = [&](std::size_t i, Vec rem, int used) {
    if (std::all_of(rem.begin(), rem.end(), [](long long x) { return x == 0; })) {
      ++out[used];
      return;
    }
    if (i == r.positive_simple.size()) return;
    rec(i + 1, rem, used);
    const Vec& b = r.positive_simple[i];
    while (true) {
      for (std::size_t j = 0; j < rem.size(); ++j) rem[j] -= b[j];
      if (std::any_of(rem.begin(), rem.end(), [](long long x) { return x < 0; })) return;
      rec(i + 1, rem, ++used);
    }
  };
  rec(0, target, 0);
  return out;
}

inline bool dominant(const Datum& d, const Vec& mu) {
  for (auto& c : d.coalpha)
    if (dot(c, mu) < 0) return false;
  return true;
}

// Alternating Weyl sum of q-partition counts.
inline Poly kostka(const Datum& d, const std::vector<Element>& w, const Roots& r, const Vec& lambda,
                   const Vec& mu, int box = 16) {
  Vec rho2 = two_rho(d, r);
  Poly out;
  for (auto& e : w) {
    Vec x(d.m);
    for (std::size_t i = 0; i < d.m; ++i) x[i] = 2 * lambda[i] + rho2[i];
    x = act(e.action, x);
    bool even = true;
    for (std::size_t i = 0; i < d.m; ++i) {
      x[i] -= 2 * mu[i] + rho2[i];
      even = even && x[i] % 2 == 0;
      x[i] /= 2;
    }
    if (!even) continue;
    auto c = simple_coords(d, x, 0, box);
    if (!c) continue;
    for (auto& [k, n] : partitions(r, *c)) out[k] += e.sign * n;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Dominant mu with lambda - mu a nonnegative combination of simple roots.
inline std::set<Vec> dominant_below(const Datum& d, const Vec& lambda, int box) {
  std::set<Vec> out;
  std::size_t r = d.alpha.size();
  Vec n(r, 0);
  while (true) {
    Vec mu = lambda;
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < d.m; ++i) mu[i] -= n[j] * d.alpha[j][i];
    if (dominant(d, mu)) out.insert(mu);
    std::size_t j = 0;
    while (j < r && n[j] == box) n[j++] = 0;
    if (j == r) break;
    ++n[j];
  }
  return out;
}

inline double weyl_dimension(const Datum& d, const Roots& r, const Vec& lambda) {
  Vec rho2 = two_rho(d, r);
  double num = 1;
  for (auto& cb : r.positive_coroots) {
    long long a = 0, b = 0;
    for (std::size_t i = 0; i < d.m; ++i) {
      a += cb[i] * (2 * lambda[i] + rho2[i]);
      b += cb[i] * rho2[i];
    }
    num *= static_cast<double>(a) / static_cast<double>(b);
  }
  return num;
}

// Semistandard tableaux of shape lambda (weakly decreasing, entries shifted
// to be nonnegative by the caller) with content mu.
inline long long ssyt_count(const Vec& shape, const Vec& content) {
  int n = static_cast<int>(content.size());
  std::vector<std::vector<int>> t;
  for (auto len : shape) t.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < static_cast<int>(shape.size()); ++i)
    for (int j = 0; j < shape[i]; ++j) cells.emplace_back(i, j);
  Vec used(n, 0);
  long long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      count += used == content;
      return;
    }
    auto [i, j] = cells[k];
    for (int v = 0; v < n; ++v) {
      if (used[v] == content[v]) continue;
      if (j > 0 && t[i][j - 1] > v) continue;
      if (i > 0 && t[i - 1][j] >= v) continue;
      t[i][j] = v;
      ++used[v];
      rec(k + 1);
      --used[v];
    }
  };
  rec(0);
  return count;
}

// GL(n) weight multiplicity of mu in V(lambda) via tableaux.
inline long long gl_multiplicity(const Vec& lambda, const Vec& mu) {
  long long shift = -std::min<long long>(0, lambda.back());
  Vec shape = lambda, content = mu;
  long long sl = 0, sm = 0;
  for (auto& x : shape) sl += (x += shift);
  for (auto& x : content) {
    x += shift;
    if (x < 0) return 0;
    sm += x;
  }
  if (sl != sm) return 0;
  return ssyt_count(shape, content);
}

// Subgroups of (Z/p^2)^2 containing `inner`, of order |inner| * p, found by
// adjoining one element at a time and closing under addition.
inline long long count_intermediate(int p, const std::set<std::pair<int, int>>& inner) {
  int n = p * p;
  std::set<std::set<std::pair<int, int>>> found;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::set<std::pair<int, int>> g = inner;
      for (auto [x, y] : inner)
        for (int k = 0; k < n; ++k) g.insert({(x + k * a) % n, (y + k * b) % n});
      if (g.size() == inner.size() * static_cast<std::size_t>(p)) found.insert(g);
    }
  return static_cast<long long>(found.size());
}

// Coefficient of 1_{K mu K} in 1_{K(1,0)K} * 1_{K(1,0)K} for GL(2) at
// residue field size p: the number of lattices L with O^2 > L > M, each
// step of index p, where M is a fixed lattice of type mu inside O^2.
inline long long gl2_lattice_chain_count(int p, bool central) {
  int n = p * p;
  std::set<std::pair<int, int>> m;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool in = central ? (x % p == 0 && y % p == 0) : (y == 0);
      if (in) m.insert({x, y});
    }
  return count_intermediate(p, m);
}

}  // namespace oracle
