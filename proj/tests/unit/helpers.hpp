#pragma once

#include "../oracles.hpp"
#include "spherical/characters.hpp"
#include "spherical/context.hpp"
#include "spherical/laurent.hpp"

#include <doctest.h>

namespace testing {

inline oracle::Vec vec(const spherical::Weight& w) { return w.coords(); }

inline spherical::Weight weight(const oracle::Vec& v) { return spherical::Weight(v); }

inline oracle::Mat mat(const spherical::IntMatrix& a) {
  oracle::Mat m(a.dim(), oracle::Vec(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m[i][j] = a.at(i, j);
  return m;
}

inline oracle::Poly poly(const spherical::QPoly& p) {
  oracle::Poly out;
  for (auto& [e, c] : p.terms()) out[e] = c.convert_to<long long>();
  return out;
}

// Dominant weights of a simple preset with sigma 0 and sum of Dynkin
// labels at most `size`, or partitions with at most n parts for GL(n).
inline std::vector<spherical::Weight> small_dominant(const spherical::RootDatum& rd, int size) {
  std::vector<spherical::Weight> out;
  std::size_t m = rd.coweight_rank();
  bool is_gl = rd.label().rfind("GL", 0) == 0;
  std::vector<std::int64_t> v(m, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == m) {
      spherical::Weight w(v);
      if (rd.is_dominant(w)) out.push_back(w);
      return;
    }
    if (!is_gl && i == 0) {
      v[0] = 0;
      rec(1, left);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      v[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, size);
  return out;
}

}  // namespace testing
