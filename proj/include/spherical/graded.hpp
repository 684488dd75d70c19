#pragma once

// Graded elements of the spherical Hecke algebra and of its Satake image.
//
// An element is a map grade -> (weight -> coefficient) together with the
// window of grades on which it is known exactly. Outside the window the
// element is unknown, not zero. Finite elements carry the full window.

#include "spherical/laurent.hpp"
#include "spherical/weight.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>

namespace spherical {

struct GradeWindow {
  std::optional<int> lo, hi;  // nullopt means unbounded on that side

  static GradeWindow all() { return {}; }
  static GradeWindow up_to(int hi) { return {std::nullopt, hi}; }
  static GradeWindow from(int lo) { return {lo, std::nullopt}; }
  static GradeWindow between(int lo, int hi) { return {lo, hi}; }

  bool contains(int g) const { return (!lo || g >= *lo) && (!hi || g <= *hi); }
  bool contains(const GradeWindow& o) const {
    bool lo_ok = !lo || (o.lo && *o.lo >= *lo);
    bool hi_ok = !hi || (o.hi && *o.hi <= *hi);
    return lo_ok && hi_ok;
  }
  GradeWindow intersect(const GradeWindow& o) const {
    GradeWindow w;
    w.lo = !lo ? o.lo : !o.lo ? lo : std::max(*lo, *o.lo);
    w.hi = !hi ? o.hi : !o.hi ? hi : std::min(*hi, *o.hi);
    return w;
  }
  std::string str() const {
    return "[" + (lo ? std::to_string(*lo) : std::string("-inf")) + ", " +
           (hi ? std::to_string(*hi) : std::string("+inf")) + "]";
  }
  friend bool operator==(const GradeWindow&, const GradeWindow&) = default;
};

struct HeckeBasis {};      // basis 1_{K mu K}
struct CharacterBasis {};  // basis chi_lambda

template <class Basis>
class Graded {
 public:
  using Component = std::map<Weight, LaurentCoeff, std::greater<>>;

  Graded() = default;
  explicit Graded(GradeWindow w) : window_(w) {}

  const GradeWindow& window() const { return window_; }
  const std::map<int, Component>& grades() const { return grades_; }

  void add(int grade, const Weight& w, const LaurentCoeff& c) {
    if (c.is_zero()) return;
    if (!window_.contains(grade))
      throw WindowError("grade " + std::to_string(grade) + " outside window " + window_.str());
    auto& comp = grades_[grade];
    auto [it, fresh] = comp.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) comp.erase(it);
    }
    if (comp.empty()) grades_.erase(grade);
  }

  LaurentCoeff coeff(int grade, const Weight& w) const {
    auto g = grades_.find(grade);
    if (g == grades_.end()) return {};
    auto it = g->second.find(w);
    return it == g->second.end() ? LaurentCoeff{} : it->second;
  }

  const Component& component(int grade) const {
    static const Component empty;
    auto g = grades_.find(grade);
    return g == grades_.end() ? empty : g->second;
  }

  std::optional<int> min_support() const {
    if (grades_.empty()) return std::nullopt;
    return grades_.begin()->first;
  }
  std::optional<int> max_support() const {
    if (grades_.empty()) return std::nullopt;
    return grades_.rbegin()->first;
  }
  bool is_finite() const { return !window_.lo && !window_.hi; }
  bool is_zero() const { return grades_.empty(); }
  std::size_t term_count() const {
    std::size_t n = 0;
    for (auto& [k, comp] : grades_) n += comp.size();
    return n;
  }

  // Narrows the window; grades outside it are dropped.
  Graded restricted(const GradeWindow& w) const {
    Graded out(window_.intersect(w));
    for (auto& [k, comp] : grades_)
      if (out.window_.contains(k)) out.grades_[k] = comp;
    return out;
  }

  // Applies f to every coefficient; f receives the grade.
  template <class F>
  Graded map_coeffs(F f) const {
    Graded out(window_);
    for (auto& [k, comp] : grades_)
      for (auto& [w, c] : comp) out.add(k, w, f(k, c));
    return out;
  }

  // Grade k is multiplied by X^{a k} v^{b k}; this realizes |sigma|^{a s - b/2}.
  Graded twisted(int a, int b) const {
    return map_coeffs([&](int k, const LaurentCoeff& c) { return c.shifted(b * k, a * k); });
  }
  // X -> v^{-two_s}, i.e. substitute the half-integer s = two_s / 2.
  Graded specialized(int two_s) const {
    return map_coeffs([&](int, const LaurentCoeff& c) { return c.specialize_x(-two_s); });
  }

  friend bool operator==(const Graded&, const Graded&) = default;

 private:
  GradeWindow window_;
  std::map<int, Component> grades_;
};

using HeckeElement = Graded<HeckeBasis>;
using SatakeImage = Graded<CharacterBasis>;

// Grades on which the product of a and b is determined exactly by the known
// parts of the inputs. Throws WindowError when the product of two opposite
// one-sided series would be needed.
template <class B>
GradeWindow product_window(const Graded<B>& a, const Graded<B>& b) {
  if ((a.is_finite() && a.is_zero()) || (b.is_finite() && b.is_zero())) return GradeWindow::all();
  constexpr std::int64_t inf = std::int64_t{1} << 40;
  struct Side {
    std::int64_t lo, hi;    // known window
    std::int64_t plo, phi;  // possible support
    bool closed_below, closed_above;
  };
  auto side = [&](const Graded<B>& x) {
    Side s;
    s.lo = x.window().lo ? *x.window().lo : -inf;
    s.hi = x.window().hi ? *x.window().hi : inf;
    s.closed_below = !x.window().lo;
    s.closed_above = !x.window().hi;
    auto mn = x.min_support(), mx = x.max_support();
    s.plo = s.closed_below ? (mn ? *mn : s.hi + 1) : -inf;
    s.phi = s.closed_above ? (mx ? *mx : s.lo - 1) : inf;
    return s;
  };
  auto sum = [&](std::int64_t x, std::int64_t y) {
    if (x >= inf / 2 || y >= inf / 2) return inf;
    if (x <= -inf / 2 || y <= -inf / 2) return -inf;
    return x + y;
  };
  Side sa = side(a), sb = side(b);
  bool below = sa.closed_below && sb.closed_below;
  bool above = sa.closed_above && sb.closed_above;
  if (!below && !above)
    throw WindowError("product of series supported in opposite directions is not defined");
  GradeWindow w;
  if (below) {
    auto hi = std::min(sum(sa.hi, sb.plo), sum(sb.hi, sa.plo));
    if (hi < inf / 2) w.hi = static_cast<int>(hi);
  }
  if (above) {
    auto lo = std::max(sum(sa.lo, sb.phi), sum(sb.lo, sa.phi));
    if (lo > -inf / 2) w.lo = static_cast<int>(lo);
  }
  return w;
}

// Generic graded product; mul(x, y, out_grade, out) accumulates the product
// of two basis elements with coefficients.
template <class B, class Mul>
Graded<B> graded_product(const Graded<B>& a, const Graded<B>& b,
                         std::optional<GradeWindow> requested, Mul mul) {
  GradeWindow exact = product_window(a, b);
  GradeWindow target = requested ? *requested : exact;
  if (!exact.contains(target))
    throw WindowError("insufficient input window: product is exact on " + exact.str() +
                      ", requested " + target.str());
  Graded<B> out(target);
  for (auto& [i, ci] : a.grades())
    for (auto& [j, cj] : b.grades()) {
      if (!target.contains(i + j)) continue;
      for (auto& [x, cx] : ci)
        for (auto& [y, cy] : cj) mul(x, y, cx * cy, i + j, out);
    }
  return out;
}

}  // namespace spherical
