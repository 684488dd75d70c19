#include "helpers.hpp"
#include "spherical/kostka.hpp"

using namespace spherical;
using namespace testing;

TEST_SUITE("kostka") {

TEST_CASE("Kostant partition function") {
  GroupContext g2(RootDatum::gl(2)), g3(RootDatum::gl(3));
  CHECK(kostant_q(g2, {1, -1}) == QPoly::monomial(1, 1));
  CHECK(kostant_q(g2, {0, 0}) == QPoly(1));
  CHECK(kostant_q(g3, {0, 0, 0}) == QPoly(1));
  CHECK(kostant_q(g3, {1, 0, -1}).str() == "q + q^2");
  CHECK(kostant_q(g2, {-1, 1}).is_zero());
}

TEST_CASE("Kostant partition function against enumeration") {
  for (std::string name : {"gl3", "B2", "G2", "C3"}) {
    GroupContext ctx(RootDatum::preset(name));
    auto od = oracle::from(ctx.datum());
    auto r = oracle::roots(od, oracle::weyl(od));
    // all nonnegative simple-coordinate vectors up to 3 per coordinate
    std::size_t rank = od.alpha.size();
    oracle::Vec n(rank, 0);
    while (true) {
      oracle::Vec beta(od.m, 0);
      for (std::size_t j = 0; j < rank; ++j)
        for (std::size_t i = 0; i < od.m; ++i) beta[i] += n[j] * od.alpha[j][i];
      CHECK(poly(kostant_q(ctx, weight(beta))) == oracle::partitions(r, n));
      std::size_t j = 0;
      while (j < rank && n[j] == 3) n[j++] = 0;
      if (j == rank) break;
      ++n[j];
    }
  }
}

TEST_CASE("Lusztig q-analogue examples") {
  GroupContext g2(RootDatum::gl(2)), g3(RootDatum::gl(3));
  CHECK(lusztig_q_analogue(g2, {2, 0}, {1, 1}) == QPoly::monomial(1, 1));
  CHECK(lusztig_q_analogue(g3, {2, 1, 0}, {1, 1, 1}).str() == "q + q^2");
  CHECK(lusztig_q_analogue(g3, {1, 1, 1}, {2, 1, 0}).is_zero());
  for (auto& lam : small_dominant(g3.datum(), 4)) CHECK(lusztig_q_analogue(g3, lam, lam) == QPoly(1));
  CHECK_THROWS_AS(lusztig_q_analogue(g2, {0, 1}, {0, 1}), InvalidInput);
}

TEST_CASE("Lusztig q-analogue against the alternating partition sum") {
  for (std::string name : {"gl2", "gl3", "A2", "B2", "C2", "G2", "B3"}) {
    GroupContext ctx(RootDatum::preset(name));
    auto od = oracle::from(ctx.datum());
    auto w = oracle::weyl(od);
    auto r = oracle::roots(od, w);
    int size = name == "B3" ? 2 : 3;
    for (auto& lam : small_dominant(ctx.datum(), size))
      for (auto& mu : dominant_below(ctx.datum(), lam)) {
        auto ref = oracle::kostka(od, w, r, vec(lam), vec(mu));
        CHECK_MESSAGE(poly(lusztig_q_analogue(ctx, lam, mu)) == ref, name << " " << lam.str() << " " << mu.str());
      }
  }
}

TEST_CASE("Kato-Lusztig matrix") {
  GroupContext g1(RootDatum::gl(1)), g2(RootDatum::gl(2));
  auto m1 = kl_matrix(g2, 1, {{1, 0}});
  REQUIRE(m1.size() == 1);
  CHECK(m1[0][0] == LaurentCoeff::monomial(1, -1));
  auto m2 = kl_matrix(g2, 2, {{2, 0}, {1, 1}});
  CHECK(m2[0][0] == LaurentCoeff::monomial(1, -2));
  CHECK(m2[0][1] == LaurentCoeff::monomial(1, -2));
  CHECK(m2[1][0].is_zero());
  CHECK(m2[1][1] == LaurentCoeff(1));
  for (int k = -2; k <= 2; ++k) CHECK(kl_matrix(g1, k, {{k}})[0][0] == LaurentCoeff(1));
}

}  // TEST_SUITE
