#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ebc/data.hpp"
#include "ebc/geometry.hpp"
#include "support.hpp"

using namespace ebc;
using Catch::Approx;
using testing::kTwoPi;

TEST_CASE("mode set is lexicographic and closed under negation") {
  const ModeSet ms(TorusSpec{kTwoPi, 4.0, 4, 3});
  REQUIRE(ms.size() == 9u * 7u);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto& md = ms[i];
    CHECK(ms.index_of(md.m, md.n) == i);
    const auto& neg = ms[ms.negated(i)];
    CHECK(neg.m == -md.m);
    CHECK(neg.n == -md.n);
    if (i > 0) {
      const auto& prev = ms[i - 1];
      CHECK((prev.m < md.m || (prev.m == md.m && prev.n < md.n)));
    }
  }
  CHECK(ms[ms.mean_index()].is_mean());
  CHECK(ms[ms.index_of(1, 2)].k2 == Approx(2.0 * std::numbers::pi * 2 / 4.0));
}

TEST_CASE("out-of-band modes are rejected") {
  const ModeSet ms(testing::square_torus(2));
  CHECK_THROWS_AS(ms.index_of(3, 0), ConfigError);
  CHECK_THROWS_AS(ms.index_of(0, -3), ConfigError);
  CHECK_FALSE(ms.contains(0, 3));
}

TEST_CASE("torus validation") {
  CHECK_THROWS_AS((TorusSpec{0.0, 1.0, 1, 1}.validate()), ConfigError);
  CHECK_THROWS_AS((TorusSpec{1.0, 1.0, -1, 1}.validate()), ConfigError);
  CHECK_NOTHROW((TorusSpec{1.0, 2.0, 0, 0}.validate()));
}

TEST_CASE("eigenvalues on a square torus") {
  const ModeSet ms(testing::square_torus(4));
  CHECK(ms[ms.index_of(2, 0)].lambda() == Approx(4.0));
  CHECK(ms[ms.index_of(1, 1)].lambda() == Approx(2.0));
  CHECK(ms[ms.index_of(1, 2)].lambda_aniso(0.5) == Approx(3.0));
}

TEST_CASE("transform inverts synthesis for band-limited data", "[property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const TorusSpec torus{kTwoPi * (0.5 + trial % 3), kTwoPi, 1 + trial % 4, 2 + trial % 3};
    const auto g = testing::random_surface(torus, rng);
    const int n1 = 2 * torus.m_max + 1 + trial % 5, n2 = 2 * torus.n_max + 3;
    const auto samples = inverse_transform(g, n1, n2);
    const auto back = transform(samples, torus);
    CHECK(testing::max_coeff_gap(g, back) < 1e-12);
    // Parseval between coefficient and sample norms.
    CHECK(samples.l2_norm() == Approx(g.l2_norm()).epsilon(1e-12));
    CHECK(g.conjugate_asymmetry() == 0.0);
  }
}

TEST_CASE("constant function has mean coefficient c sqrt(area)") {
  const TorusSpec torus{3.0, 5.0, 2, 2};
  SurfaceSamples s{torus, 5, 5, std::vector<double>(25, 2.5)};
  const auto g = transform(s, torus);
  CHECK(g.at(0, 0).real() == Approx(2.5 * std::sqrt(15.0)));
  CHECK(g.l2_norm() == Approx(2.5 * std::sqrt(15.0)));
}

TEST_CASE("surface grid must resolve the band") {
  const auto torus = testing::square_torus(4);
  CHECK_THROWS_AS(check_surface_grid(torus, 8, 9), ConfigError);
  CHECK_NOTHROW(check_surface_grid(torus, 9, 9));
}

TEST_CASE("spectral derivatives of a cosine") {
  const auto torus = testing::square_torus(3);
  SurfaceFunction g{ModeSet(torus)};
  g.set_real_pair(2, 0, {0.5, 0.0}); // cos(2 s1) / sqrt(area)
  const auto lap = laplace_beltrami(g);
  CHECK(lap.at(2, 0).real() == Approx(-2.0));
  const auto d1 = derivative(g, 1, 0);
  CHECK(d1.at(2, 0).imag() == Approx(1.0));
  // |g| + |g1| + |g11| = (5|cos 2s| + 2|sin 2s|) / (2 pi), maximal value sqrt(29) / (2 pi).
  CHECK(c2_norm(g, 4096, 8) == Approx(std::sqrt(29.0) / kTwoPi).epsilon(1e-6));
}

TEST_CASE("radial grid geometry") {
  const auto grid = RadialGrid::two_domain(1.0, 0.1, 129, 17);
  REQUIRE(grid.size() == 129u + 16u);
  CHECK(grid.interface_index() == 128u);
  CHECK(grid.r(0) == Approx(-1.0));
  CHECK(grid.r(128) == 0.0);
  CHECK(grid.r(grid.size() - 1) == Approx(0.1));
  const auto w = grid.weights();
  double total = 0.0;
  for (double x : w) total += x;
  CHECK(total == Approx(1.1).epsilon(1e-14));
  const auto wb = grid.bulk_weights();
  REQUIRE(wb.size() == 129u);
  double bulk = 0.0;
  for (double x : wb) bulk += x;
  CHECK(bulk == Approx(1.0).epsilon(1e-14));
  CHECK(grid.same_bulk(RadialGrid::bulk_only(1.0, 129)));
  CHECK_FALSE(grid.same_bulk(RadialGrid::bulk_only(2.0, 129)));
}

TEST_CASE("radial grid rejects bad input") {
  CHECK_THROWS_AS(RadialGrid::bulk_only(0.0, 10), ConfigError);
  CHECK_THROWS_AS(RadialGrid::bulk_only(1.0, 2), ConfigError);
  CHECK_THROWS_AS(RadialGrid::two_domain(1.0, 0.0, 10, 5), ConfigError);
}

TEST_CASE("bulk norm of the unit field") {
  const TorusSpec torus{2.0, 3.0, 2, 2};
  const auto layout = make_layout(torus, RadialGrid::two_domain(1.5, 0.2, 31, 5));
  const ModeData one({{0, 0, {1.0, 0.0}, ConstantProfile{1.0}}});
  const auto f = one.project(layout, 0.0);
  // Mode (0,0) coefficient of the constant 1 is sqrt(area).
  const ModeData unit({{0, 0, {std::sqrt(6.0), 0.0}, ConstantProfile{1.0}}});
  const auto u = unit.project(layout, 0.0);
  CHECK(norm_L2_bulk(u) == Approx(std::sqrt(6.0 * 1.5)));
  CHECK(norm_L2_domain(u) == Approx(std::sqrt(6.0 * 1.7)));
  CHECK(trace_of(f).at(0, 0).real() == 1.0);
}

TEST_CASE("mode data projections are conjugate symmetric", "[property]") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto torus = testing::square_torus(3);
  const auto layout = make_layout(torus, RadialGrid::two_domain(1.0, 0.1, 33, 5));
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ModeTerm> terms;
    for (int k = 0; k < 5; ++k) {
      ModeTerm t;
      t.m = static_cast<int>(rng() % 7) - 3;
      t.n = static_cast<int>(rng() % 7) - 3;
      t.amplitude = {u(rng), u(rng)};
      t.profile = GaussianProfile{u(rng), 0.3, 1.0};
      t.time = CosTime{3.0};
      terms.push_back(t);
    }
    const ModeData d(terms);
    const auto f = d.project(layout, 0.37);
    CHECK(f.conjugate_asymmetry() < 1e-15);
  }
}

TEST_CASE("mode data outside the band is rejected") {
  const ModeData d({{5, 0, {1.0, 0.0}, ConstantProfile{1.0}}});
  CHECK_THROWS_AS(d.check_band(ModeSet(testing::square_torus(4))), ConfigError);
  CHECK_THROWS_AS(ModeData({{0, 0, {1.0, 0.0}, GaussianProfile{0.0, 0.0, 1.0}}}), ConfigError);
}

TEST_CASE("profiles and time factors") {
  CHECK(evaluate(RadialProfile{LinearProfile{1.0, 2.0}}, -0.5) == 0.0);
  CHECK(evaluate(RadialProfile{GaussianProfile{0.5, 0.5, 3.0}}, 0.5) == 3.0);
  CHECK(evaluate(TimeFactor{ExpTime{2.0}}, 0.5) == Approx(std::exp(-1.0)));
  CHECK(evaluate(TimeFactor{CosTime{std::numbers::pi}}, 1.0) == Approx(-1.0));
}
