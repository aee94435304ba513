#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <vector>

#include "graphmetric/digraph.hpp"
#include "graphmetric/errors.hpp"
#include "graphmetric/generators.hpp"
#include "graphmetric/graphon.hpp"

namespace gm = graphmetric;

namespace {

gm::estimator_config grid_cfg(long resolution) {
    gm::estimator_config cfg;
    cfg.mode = gm::estimator_mode::grid;
    cfg.grid_resolution = resolution;
    return cfg;
}

gm::estimator_config mc_cfg(long outer, long inner, std::uint64_t seed) {
    gm::estimator_config cfg;
    cfg.mode = gm::estimator_mode::monte_carlo;
    cfg.outer_samples = outer;
    cfg.inner_samples = inner;
    cfg.seed = seed;
    return cfg;
}

// two blocks: cross weight 0.5, block 1 self weight 0.5, block 0 keeps the
// implicit diagonal 1
gm::graphon two_block() {
    const gm::weighted_digraph g(2, {{0, 1, 0.5}, {1, 0, 0.5}, {1, 1, 0.5}});
    return gm::graphon::step(g);
}

const gm::path_function g02 = gm::path_function::constant({0.2, 0.0});
const gm::path_function h08 = gm::path_function::constant({0.8, 0.0});

// exact value for two_block with constant elemental distance 0.3:
// 1 - (0.7^1.5 + 0.7^2) / 2
constexpr double two_block_exact = 0.4621689907130736;

} // namespace

TEST_CASE("constant kernel frozen values in both modes") {
    // W = 1: the estimate is the elemental distance itself
    const auto one = gm::graphon::constant(1.0);
    const auto grid = gm::graphon_distance(one, g02, h08, grid_cfg(16));
    CHECK(std::fabs(grid.estimate - 0.3) < 1e-12);
    CHECK(grid.std_error == 0.0);
    CHECK(grid.jackknife_bias == 0.0);
    CHECK(grid.mode == gm::estimator_mode::grid);
    CHECK(grid.samples == 16 * 16);

    const auto mc = gm::graphon_distance(one, g02, h08, mc_cfg(64, 32, 7));
    CHECK(std::fabs(mc.estimate - 0.3) < 1e-12);
    CHECK(mc.mode == gm::estimator_mode::monte_carlo);
    CHECK(mc.samples == 64 * 32);

    // W = 0.5 doubles the exponent: 1 - 0.7^2
    const auto half = gm::graphon::constant(0.5);
    CHECK(std::fabs(gm::graphon_distance(half, g02, h08, grid_cfg(16)).estimate - 0.51) < 1e-10);
    CHECK(std::fabs(gm::graphon_distance(half, g02, h08, mc_cfg(64, 32, 7)).estimate - 0.51) <
          1e-10);
}

TEST_CASE("two-block step kernel matches the closed form") {
    const auto w = two_block();

    // even resolutions align with the blocks, so the midpoint rule is exact
    for (long r : {2, 8, 64, 256})
        CHECK(std::fabs(gm::graphon_distance(w, g02, h08, grid_cfg(r)).estimate -
                        two_block_exact) < 1e-12);

    // Monte Carlo lands within 4 standard errors
    for (std::uint64_t seed : {1u, 2u, 3u, 99u}) {
        const auto est = gm::graphon_distance(w, g02, h08, mc_cfg(512, 256, seed));
        REQUIRE(est.std_error > 0.0);
        REQUIRE(std::fabs(est.estimate - two_block_exact) <= 4.0 * est.std_error + 1e-12);
    }
}

TEST_CASE("equal arguments give exactly zero") {
    const auto w = two_block();
    CHECK(gm::graphon_distance(w, g02, g02, grid_cfg(8)).estimate == 0.0);
    const auto mc = gm::graphon_distance(w, g02, g02, mc_cfg(16, 8, 3));
    CHECK(mc.estimate == 0.0);
    CHECK(mc.std_error == 0.0);
}

TEST_CASE("estimator is symmetric in its two arguments") {
    const auto w = two_block();
    const auto ab = gm::graphon_distance(w, g02, h08, mc_cfg(64, 32, 11));
    const auto ba = gm::graphon_distance(w, h08, g02, mc_cfg(64, 32, 11));
    CHECK(ab.estimate == ba.estimate);
    CHECK(ab.std_error == ba.std_error);
}

TEST_CASE("larger kernels give smaller distances") {
    double prev = 2.0;
    for (double c : {0.25, 0.5, 0.75, 1.0}) {
        const double est =
            gm::graphon_distance(gm::graphon::constant(c), g02, h08, grid_cfg(8)).estimate;
        CHECK(est <= prev + 1e-12);
        prev = est;
    }
}

TEST_CASE("kernel floor keeps absent cells finite and dominant") {
    // no explicit edges: off-diagonal cells sit at the floor, which makes the
    // exponent 1/W huge and drives the distance toward 1
    const auto w = gm::graphon::step(gm::make_null(2));
    const auto est = gm::graphon_distance(w, g02, h08, grid_cfg(8));
    CHECK(est.estimate > 0.99);
    CHECK(est.estimate <= 1.0);
}

TEST_CASE("step kernel requires a symmetric graph") {
    CHECK_THROWS_AS(gm::graphon::step(gm::weighted_digraph(2, {{0, 1, 0.5}})),
                    gm::invalid_parameter);
    CHECK_THROWS_AS(gm::graphon::step(gm::weighted_digraph(2, {{0, 1, 0.5}, {1, 0, 0.6}})),
                    gm::invalid_parameter);
    CHECK_NOTHROW(gm::graphon::step(gm::weighted_digraph(2, {{0, 1, 0.5}, {1, 0, 0.5}})));
}

TEST_CASE("kernel constructors validate and clamp") {
    CHECK_THROWS_AS(gm::graphon::constant(0.0), gm::invalid_parameter);
    CHECK_THROWS_AS(gm::graphon::constant(1.5), gm::invalid_parameter);
    CHECK_THROWS_AS(gm::graphon::constant(0.5, 0.0), gm::invalid_parameter);
    CHECK_THROWS_AS(gm::graphon::constant(0.5, 2.0), gm::invalid_parameter);
    CHECK_THROWS_AS(gm::graphon::custom(nullptr), gm::invalid_parameter);

    const auto clamped = gm::graphon::custom([](double, double) { return 5.0; }, 0.25);
    CHECK(clamped(0.3, 0.7) == 1.0);
    const auto floored = gm::graphon::custom([](double, double) { return -1.0; }, 0.25);
    CHECK(floored(0.3, 0.7) == 0.25);
    CHECK(floored.floor() == 0.25);
}

TEST_CASE("step kernel cell lookup clamps the boundary") {
    const auto w = two_block();
    CHECK(w(0.0, 0.0) == 1.0);
    CHECK(w(0.25, 0.75) == 0.5);
    CHECK(w(0.75, 0.75) == 0.5);
    CHECK(w(1.0, 1.0) == 0.5); // 1.0 falls into the last block
}

TEST_CASE("estimator rejects degenerate sample plans") {
    const auto one = gm::graphon::constant(1.0);
    CHECK_THROWS_AS(gm::graphon_distance(one, g02, h08, grid_cfg(1)), gm::invalid_parameter);
    CHECK_THROWS_AS(gm::graphon_distance(one, g02, h08, grid_cfg(0)), gm::invalid_parameter);
    CHECK_THROWS_AS(gm::graphon_distance(one, g02, h08, mc_cfg(1, 32, 0)), gm::invalid_parameter);
    CHECK_THROWS_AS(gm::graphon_distance(one, g02, h08, mc_cfg(32, 1, 0)), gm::invalid_parameter);
    gm::estimator_config cfg = mc_cfg(8, 8, 0);
    cfg.elemental = nullptr;
    CHECK_THROWS_AS(gm::graphon_distance(one, g02, h08, cfg), gm::invalid_parameter);
}

TEST_CASE("saturated or invalid elemental distances are reported with the sample") {
    const auto one = gm::graphon::constant(1.0);
    gm::estimator_config cfg = grid_cfg(4);
    cfg.elemental = [](std::complex<double>, std::complex<double>) { return 1.0; };
    CHECK_THROWS_MATCHES(gm::graphon_distance(one, g02, h08, cfg), gm::saturated_distance,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("y=")));
    cfg.elemental = [](std::complex<double>, std::complex<double>) { return 1.5; };
    CHECK_THROWS_AS(gm::graphon_distance(one, g02, h08, cfg), gm::invalid_parameter);
    cfg.elemental = [](std::complex<double>, std::complex<double>) { return -0.1; };
    CHECK_THROWS_AS(gm::graphon_distance(one, g02, h08, cfg), gm::invalid_parameter);
}

TEST_CASE("default elemental metric halves the modulus and stays below 1") {
    CHECK(std::fabs(gm::clamped_half_modulus({0.2, 0.0}, {0.8, 0.0}) - 0.3) < 1e-15);
    CHECK(gm::clamped_half_modulus({1.0, 0.0}, {-1.0, 0.0}) == 1.0 - 1e-12);
    CHECK(gm::clamped_half_modulus({0.5, 0.5}, {0.5, 0.5}) == 0.0);
    // complex displacement: |3+4i| = 5
    CHECK(std::fabs(gm::clamped_half_modulus({0.0, 0.0}, {0.3, 0.4}) - 0.25) < 1e-15);
}

TEST_CASE("piecewise path functions validate breakpoints and own boundaries") {
    using cd = std::complex<double>;
    CHECK_THROWS_AS(gm::path_function::piecewise({0.0, 1.0}, {}), gm::invalid_parameter);
    CHECK_THROWS_AS(gm::path_function::piecewise({0.0, 0.5}, {cd{1.0, 0.0}}),
                    gm::invalid_parameter);
    CHECK_THROWS_AS(gm::path_function::piecewise({0.1, 1.0}, {cd{1.0, 0.0}}),
                    gm::invalid_parameter);
    CHECK_THROWS_AS(
        gm::path_function::piecewise({0.0, 0.5, 0.5, 1.0},
                                     {cd{1.0, 0.0}, cd{2.0, 0.0}, cd{3.0, 0.0}}),
        gm::invalid_parameter);
    CHECK_THROWS_AS(gm::path_function::piecewise({0.0, 1.0}, {cd{1.0, 0.0}, cd{2.0, 0.0}}),
                    gm::invalid_parameter);
    CHECK_THROWS_AS(gm::path_function::custom(nullptr), gm::invalid_parameter);

    const auto f = gm::path_function::piecewise({0.0, 0.5, 1.0}, {cd{1.0, 0.0}, cd{2.0, 0.0}});
    CHECK(f(0.0) == cd{1.0, 0.0});
    CHECK(f(0.499) == cd{1.0, 0.0});
    CHECK(f(0.5) == cd{2.0, 0.0});
    CHECK(f(1.0) == cd{2.0, 0.0}); // last piece owns t = 1
}

TEST_CASE("estimates are identical for every thread count") {
    const auto w = two_block();
    const auto run = [&](const char* threads) {
        setenv("GRAPHMETRIC_THREADS", threads, 1);
        const auto est = gm::graphon_distance(w, g02, h08, mc_cfg(128, 64, 17));
        const auto grid = gm::graphon_distance(w, g02, h08, grid_cfg(128));
        unsetenv("GRAPHMETRIC_THREADS");
        return std::vector<double>{est.estimate, est.std_error, est.jackknife_bias,
                                   grid.estimate};
    };
    CHECK(run("1") == run("4"));
}

TEST_CASE("jackknife bias tracks the convexity of the inner exponential") {
    // exp of a noisy mean is biased upward, so the bias estimate is positive
    // once the inner log terms actually vary
    const auto w = two_block();
    const auto est = gm::graphon_distance(w, g02, h08, mc_cfg(256, 128, 5));
    CHECK(est.jackknife_bias > 0.0);
    CHECK(est.jackknife_bias < 0.01);
}
