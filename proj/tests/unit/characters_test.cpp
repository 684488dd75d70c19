#include "helpers.hpp"

using namespace spherical;
using namespace testing;

namespace {

IrrDecomp single(const Weight& w) { return {{w, 1}}; }

}  // namespace

TEST_SUITE("characters") {

TEST_CASE("weight multiplicities examples") {
  GroupContext g2(RootDatum::gl(2)), g3(RootDatum::gl(3));
  CHECK(weight_multiplicities(g2, {1, 0}) == CharacterExpansion{{{1, 0}, 1}, {{0, 1}, 1}});
  CHECK(weight_multiplicities(g2, {2, 0}) == CharacterExpansion{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  auto ch = weight_multiplicities(g3, {1, 1, 0});
  CHECK(ch.size() == 3);
  for (auto& [w, m] : ch) CHECK(m == 1);
}

TEST_CASE("GL multiplicities against tableaux") {
  for (int n = 2; n <= 4; ++n) {
    GroupContext ctx(RootDatum::gl(n));
    for (auto& lam : small_dominant(ctx.datum(), 5)) {
      auto& ch = weight_multiplicities(ctx, lam);
      // every composition of |lam| into n parts
      long long total = 0;
      for (auto x : lam) total += x;
      std::vector<std::int64_t> mu(n, 0);
      std::function<void(int, long long)> rec = [&](int i, long long left) {
        if (i == n - 1) {
          mu[i] = left;
          Weight w(mu);
          auto it = ch.find(w);
          long long got = it == ch.end() ? 0 : it->second.convert_to<long long>();
          CHECK_MESSAGE(got == oracle::gl_multiplicity(vec(lam), mu), lam.str() << " " << w.str());
          return;
        }
        for (long long x = 0; x <= left; ++x) {
          mu[i] = x;
          rec(i + 1, left - x);
        }
      };
      rec(0, total);
    }
  }
}

TEST_CASE("dimensions against the Weyl dimension formula") {
  for (std::string name : {"A2", "B2", "C2", "G2", "B3", "C3", "D4"}) {
    GroupContext ctx(RootDatum::preset(name));
    auto od = oracle::from(ctx.datum());
    auto r = oracle::roots(od, oracle::weyl(od));
    for (auto& lam : small_dominant(ctx.datum(), 2)) {
      BigInt dim = 0;
      for (auto& [w, m] : weight_multiplicities(ctx, lam)) dim += m;
      CHECK_MESSAGE(dim.convert_to<double>() == doctest::Approx(oracle::weyl_dimension(od, r, vec(lam))),
                    name << " " << lam.str());
    }
  }
}

TEST_CASE("symmetric and exterior powers") {
  GroupContext g2(RootDatum::gl(2)), g3(RootDatum::gl(3));
  auto s2 = standard_rep(g2), s3 = standard_rep(g3);
  CHECK(sym_power_decomp(g2, s2, 2) == single({2, 0}));
  CHECK(sym_power_decomp(g2, s2, 0) == single({0, 0}));
  CHECK(sym_power_decomp(g3, s3, 3) == single({3, 0, 0}));
  CHECK(ext_power_decomp(g3, s3, 2) == single({1, 1, 0}));
  CHECK(ext_power_decomp(g3, s3, 0) == single({0, 0, 0}));
  CHECK(ext_power_decomp(g2, s2, 2) == single({1, 1}));
  CHECK(ext_power_decomp(g2, s2, 3).empty());
  // Sym^2 of the adjoint of SL2 (dual side) is V(4) + V(0)
  GroupContext a1(RootDatum::preset("A1"));
  auto ad = make_rep(a1, {1, 2});
  CHECK(sym_power_decomp(a1, ad, 2) == IrrDecomp{{{2, 4}, 1}, {{2, 0}, 1}});
}

TEST_CASE("decompose") {
  GroupContext g2(RootDatum::gl(2)), g3(RootDatum::gl(3));
  auto& v = weight_multiplicities(g2, {1, 0});
  CHECK(decompose(g2, character_product(v, v)) == IrrDecomp{{{2, 0}, 1}, {{1, 1}, 1}});
  CHECK(decompose(g2, {}).empty());
  CHECK(decompose(g3, weight_multiplicities(g3, {2, 1, 0})) == single({2, 1, 0}));
  CHECK_THROWS_AS(decompose(g2, CharacterExpansion{{{1, 0}, 1}}), InvalidInput);
}

TEST_CASE("tensor products preserve dimension") {
  GroupContext ctx(RootDatum::preset("B2"));
  auto dim = [&](const Weight& w) {
    BigInt d = 0;
    for (auto& [x, m] : weight_multiplicities(ctx, w)) d += m;
    return d;
  };
  for (auto& a : small_dominant(ctx.datum(), 2))
    for (auto& b : small_dominant(ctx.datum(), 2)) {
      BigInt total = 0;
      for (auto& c : tensor_decomp(ctx, a, b)) total += c.mult * dim(c.lambda);
      CHECK(total == dim(a) * dim(b));
    }
}

TEST_CASE("dual weights") {
  auto g2 = RootDatum::gl(2), g3 = RootDatum::gl(3);
  CHECK(dual_weight(g3, {1, 0, 0}) == Weight{0, 0, -1});
  CHECK(dual_weight(g2, {1, 1}) == Weight{-1, -1});
  CHECK(dual_weight(g2, {2, 0}) == Weight{0, -2});
}

TEST_CASE("character evaluation") {
  GroupContext g2(RootDatum::gl(2));
  std::vector<std::complex<double>> c{0.3, 0.2};
  CHECK(std::abs(eval_character(g2, {2, 0}, c) - (0.09 + 0.06 + 0.04)) < 1e-15);
  CHECK(std::abs(eval_character(g2, {0, 0}, c) - 1.0) < 1e-15);
}

}  // TEST_SUITE
