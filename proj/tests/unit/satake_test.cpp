#include "helpers.hpp"
#include "spherical/satake.hpp"

#include <random>

using namespace spherical;
using namespace testing;

namespace {

LaurentCoeff v(int e, long long c = 1) { return LaurentCoeff::monomial(c, e); }

SatakeImage one_term(int k, const Weight& w, const LaurentCoeff& c) {
  SatakeImage s;
  s.add(k, w, c);
  return s;
}

HeckeElement random_element(const GroupContext& ctx, std::mt19937& rng, int max_grade) {
  HeckeElement f;
  std::uniform_int_distribution<int> coef(-3, 3), vexp(-2, 2), xexp(-1, 1);
  const auto& rd = ctx.datum();
  bool is_gl = rd.label().rfind("GL", 0) == 0;
  for (auto lam : small_dominant(rd, max_grade)) {
    if (!is_gl) lam[0] = static_cast<std::int64_t>(rng() % 3);
    if (rng() % 2) continue;
    f.add(static_cast<int>(rd.sigma_grade(lam)), lam, LaurentCoeff::monomial(coef(rng), vexp(rng), xexp(rng)));
  }
  return f;
}

}  // namespace

TEST_SUITE("satake") {

TEST_CASE("basis images") {
  GroupContext g2(RootDatum::gl(2));
  CHECK(satake_basis(g2, {1, 0}) == SatakeImage::Component{{{1, 0}, v(1)}});
  CHECK(satake_basis(g2, {1, 1}) == SatakeImage::Component{{{1, 1}, v(0)}});
  CHECK(satake_basis(g2, {2, 0}) == SatakeImage::Component{{{2, 0}, v(2)}, {{1, 1}, v(0, -1)}});
}

TEST_CASE("transform and inverse") {
  GroupContext g2(RootDatum::gl(2));
  CHECK(satake(g2, identity_hecke(g2)) == identity_satake(g2));
  HeckeElement expect;
  expect.add(1, {1, 0}, v(-1));
  CHECK(inverse_satake(g2, character_element(g2, {1, 0})) == expect);
}

TEST_CASE("round trip on random elements") {
  std::mt19937 rng(7);
  for (std::string name : {"gl3", "B2"}) {
    GroupContext ctx(RootDatum::preset(name));
    for (int trial = 0; trial < 5; ++trial) {
      auto f = random_element(ctx, rng, 3);
      CHECK(inverse_satake(ctx, satake(ctx, f)) == f);
    }
  }
}

TEST_CASE("convolution") {
  GroupContext g2(RootDatum::gl(2));
  auto e = basis_element(g2, {1, 0});
  HeckeElement expect;
  expect.add(2, {2, 0}, 1);
  expect.add(2, {1, 1}, v(0) + v(2));  // q + 1
  CHECK(convolve(g2, e, e) == expect);
  CHECK(convolve(g2, e, identity_hecke(g2)) == e);
  CHECK(convolve(g2, basis_element(g2, {1, 1}), e) == basis_element(g2, {2, 1}));
}

TEST_CASE("convolution against lattice counting at q = 5") {
  GroupContext g2(RootDatum::gl(2));
  auto e = basis_element(g2, {1, 0});
  auto prod = convolve(g2, e, e);
  const double v5 = std::sqrt(5.0);
  long long central = oracle::gl2_lattice_chain_count(5, true);
  long long regular = oracle::gl2_lattice_chain_count(5, false);
  CHECK(central == 6);
  CHECK(regular == 1);
  CHECK(prod.coeff(2, {1, 1}).eval(v5, 1).real() == doctest::Approx(static_cast<double>(central)));
  CHECK(prod.coeff(2, {2, 0}).eval(v5, 1).real() == doctest::Approx(static_cast<double>(regular)));
}

TEST_CASE("convolution is commutative and matches the character product") {
  std::mt19937 rng(11);
  GroupContext ctx(RootDatum::gl(3));
  for (int trial = 0; trial < 4; ++trial) {
    auto a = random_element(ctx, rng, 2), b = random_element(ctx, rng, 2);
    auto ab = convolve(ctx, a, b);
    CHECK(ab == convolve(ctx, b, a));
    CHECK(satake(ctx, ab) == satake_product(ctx, satake(ctx, a), satake(ctx, b)));
  }
}

TEST_CASE("twists") {
  GroupContext g2(RootDatum::gl(2));
  auto f = basis_element(g2, {1, 0});
  CHECK(f.twisted(1, 0).twisted(-1, 0) == f);
  CHECK(f.twisted(1, 0).coeff(1, {1, 0}) == LaurentCoeff::monomial(1, 0, 1));
}

TEST_CASE("duality") {
  GroupContext g3(RootDatum::gl(3));
  auto f = basis_element(g3, {2, 1, 0}, v(3));
  auto d = dual(g3, f);
  CHECK(d.coeff(-3, {0, -1, -2}) == v(3));
  CHECK(dual(g3, d) == f);
  CHECK(satake(g3, d) == dual(g3, satake(g3, f)));
}

TEST_CASE("window bookkeeping") {
  GroupContext g2(RootDatum::gl(2));
  HeckeElement up(GradeWindow::up_to(3)), down(GradeWindow::from(-3));
  up.add(0, {0, 0}, 1);
  down.add(0, {0, 0}, 1);
  CHECK_THROWS_AS(convolve(g2, up, down), WindowError);
  CHECK_THROWS_AS(up.add(4, {2, 2}, 1), WindowError);
  auto sq = convolve(g2, up, up);
  CHECK(sq.window() == GradeWindow::up_to(3));
  CHECK_THROWS_AS(convolve(g2, up, up, GradeWindow::up_to(4)), WindowError);
}

TEST_CASE("numeric evaluation") {
  GroupContext g1(RootDatum::gl(1));
  SatakeImage geo(GradeWindow::up_to(30));
  for (int k = 0; k <= 30; ++k) geo.add(k, {k}, LaurentCoeff::monomial(1, 0, 1));
  auto r = eval_numeric(g1, geo, {0.5}, 2, 0, 30);
  CHECK(std::abs(r.value - 2.0) < 1e-8);
  CHECK(r.converged);
  GroupContext g2(RootDatum::gl(2));
  auto one = eval_numeric(g2, identity_satake(g2), {0.7, 0.1}, 3, {0.2, 1}, 0);
  CHECK(std::abs(one.value - 1.0) < 1e-15);
  CHECK_THROWS_AS(eval_numeric(g1, geo, {0.5}, 0.5, 0, 10), InvalidInput);
  CHECK(std::abs(eval_numeric(g2, one_term(1, {1, 0}, v(1)), {0.3, 0.2}, 4, 0, 1).value - 1.0) < 1e-15);
}

}  // TEST_SUITE
