#include "helpers.hpp"
#include "spherical/root_datum.hpp"

using namespace spherical;
using namespace testing;

TEST_SUITE("root_datum") {

TEST_CASE("gl builders") {
  auto g2 = RootDatum::gl(2);
  CHECK(g2.rho_b_times_2() == Weight{1, -1});
  auto g3 = RootDatum::gl(3);
  std::set<Weight> roots(g3.positive_roots().begin(), g3.positive_roots().end());
  CHECK(roots == std::set<Weight>{{1, -1, 0}, {1, 0, -1}, {0, 1, -1}});
  auto g1 = RootDatum::gl(1);
  CHECK(g1.positive_roots().empty());
  CHECK(g1.rho_b_times_2() == Weight{0});
}

TEST_CASE("pairings and grades") {
  auto g2 = RootDatum::gl(2), g3 = RootDatum::gl(3);
  CHECK(g2.pair_rho_b({1, 0}) == Rational(1, 2));
  CHECK(g2.pair_rho_b({1, 1}) == 0);
  CHECK(g3.pair_rho_b({1, 0, 0}) == 1);
  CHECK(g3.sigma_grade({2, 1, 0}) == 3);
  CHECK(g2.sigma_grade({1, -1}) == 0);
  CHECK(g2.sigma_grade({-1, -1}) == -2);
}

TEST_CASE("l constant") {
  for (int n = 1; n <= 4; ++n) {
    GroupContext ctx(RootDatum::gl(n));
    CHECK(l_constant(ctx.datum(), standard_rep(ctx)) == n - 1);
  }
  GroupContext ctx(RootDatum::gl(2));
  CHECK(l_constant(ctx.datum(), make_rep(ctx, {2, 0})) == 2);
}

TEST_CASE("dominance order") {
  auto g2 = RootDatum::gl(2), g3 = RootDatum::gl(3);
  CHECK(dominance_leq(g2, {1, 1}, {2, 0}));
  CHECK_FALSE(dominance_leq(g2, {2, 0}, {1, 1}));
  CHECK(dominance_leq(g3, {1, 1, 1}, {3, 0, 0}));
  CHECK(dominant_below(g2, {2, 0}) == std::vector<Weight>{{2, 0}, {1, 1}});
  CHECK(dominant_below(g2, {1, 0}) == std::vector<Weight>{{1, 0}});
  CHECK(dominant_below(g3, {2, 1, 0}) == std::vector<Weight>{{2, 1, 0}, {1, 1, 1}});
}

TEST_CASE("dominant_below agrees with box search") {
  for (std::string name : {"gl2", "gl3", "gl4", "A2", "B2", "C2", "G2", "B3", "C3", "D4"}) {
    auto rd = RootDatum::preset(name);
    auto od = oracle::from(rd);
    for (auto& lam : small_dominant(rd, 3)) {
      auto got = dominant_below(rd, lam);
      std::set<oracle::Vec> mine;
      for (auto& w : got) mine.insert(vec(w));
      CHECK_MESSAGE(mine == oracle::dominant_below(od, vec(lam), 12), name << " " << lam.str());
      CHECK(got.size() == mine.size());
    }
  }
}

TEST_CASE("Weyl group against matrix closure") {
  std::map<std::string, std::size_t> order{{"gl1", 1}, {"gl2", 2}, {"gl3", 6}, {"gl4", 24},
                                           {"A2", 6},  {"B2", 8},  {"C2", 8},  {"G2", 12},
                                           {"B3", 48}, {"C3", 48}, {"D4", 192}};
  for (auto& [name, size] : order) {
    auto rd = RootDatum::preset(name);
    WeylGroup w(rd);
    CHECK_MESSAGE(w.size() == size, name);
    auto ref = oracle::weyl(oracle::from(rd));
    std::map<oracle::Mat, int> sign;
    for (auto& e : ref) sign[e.action] = e.sign;
    CHECK(ref.size() == size);
    int max_len = 0;
    for (auto& e : w.elements()) {
      auto it = sign.find(mat(e.action));
      REQUIRE(it != sign.end());
      CHECK(it->second == (e.length % 2 == 0 ? 1 : -1));
      CHECK(static_cast<int>(e.word.size()) == e.length);
      max_len = std::max(max_len, e.length);
    }
    CHECK(static_cast<std::size_t>(max_len) == rd.positive_roots().size());
  }
}

TEST_CASE("positive roots against reflection orbit") {
  for (std::string name : {"gl3", "A3", "B2", "C2", "G2", "B3", "C3", "D4"}) {
    auto rd = RootDatum::preset(name);
    auto od = oracle::from(rd);
    auto r = oracle::roots(od, oracle::weyl(od));
    std::set<oracle::Vec> mine, ref(r.positive.begin(), r.positive.end());
    for (auto& b : rd.positive_roots()) mine.insert(vec(b));
    CHECK_MESSAGE(mine == ref, name);
    std::set<oracle::Vec> mine_co, ref_co(r.positive_coroots.begin(), r.positive_coroots.end());
    for (auto& b : rd.positive_coroots()) mine_co.insert(vec(b));
    CHECK_MESSAGE(mine_co == ref_co, name);
  }
}

TEST_CASE("Weyl cap") { CHECK_THROWS_AS(WeylGroup(RootDatum::preset("D4"), 100), CapExceeded); }

TEST_CASE("validate_rho") {
  for (int n = 1; n <= 3; ++n) {
    GroupContext ctx(RootDatum::gl(n));
    CHECK(validate_rho(ctx.datum(), standard_rep(ctx)).pass);
  }
  GroupContext ctx(RootDatum::gl(2));
  auto report = validate_rho(ctx.datum(), make_rep(ctx, {2, 0}));
  CHECK_FALSE(report.pass);
  REQUIRE_FALSE(report.failures.empty());
  CHECK(report.failures.front().find("2") != std::string::npos);
}

TEST_CASE("malformed data is rejected") {
  CHECK_THROWS_AS(RootDatum::preset("E9"), InvalidInput);
  auto g2 = RootDatum::gl(2);
  CHECK_THROWS_AS(g2.sigma_grade({1, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(parse_weight("1,,2"), InvalidInput);
}

}  // TEST_SUITE
