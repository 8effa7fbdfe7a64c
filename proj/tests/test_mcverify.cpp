#include <doctest.h>

#include "intersectq/catalog.hpp"
#include "intersectq/mcverify.hpp"

#include <cmath>
#include <cstdlib>

using namespace intersectq;

namespace {
Honeycomb make(const std::string& name) { return Honeycomb{MDQuantizer(catalog_get(name).components)}; }
}  // namespace

TEST_CASE("hexagonal frequencies and mean squared error")
{
    const Honeycomb h = make("hexagonal3");
    const auto r = h.enumerate();
    const auto m = mc_verify(h, r, {3, 20000});
    REQUIRE(m.probabilities.size() == 4);
    for (const auto& p : m.probabilities) {
        CHECK(p.exact == 0.25);
        CHECK(std::abs(p.estimate - 0.25) < 0.02);
        CHECK(p.std_error > 0);
    }
    CHECK(m.mse.exact == doctest::Approx(1.0 / 27));
    CHECK(mc_within(m));
}

TEST_CASE("bcc mean squared error separates the two candidate second moments")
{
    const Honeycomb h = make("bcc3");
    const auto r = h.enumerate();
    const auto m = estimate_mse(h, r, {5, 100000});
    CHECK(m.probabilities.empty());
    CHECK(std::abs(m.mse.z) <= 3);
    // sum p_i U_i / V_i / 3 with the tabulated U_2 = 11/600 and U_4 = 1/192
    const double tabulated = 0.25 * (0.25 + 0.11 + 3.0 / 64 + 1.0 / 16) / 3;
    CHECK(std::abs(m.mse.estimate - tabulated) / m.mse.std_error > 3);
}

TEST_CASE("a single lattice reproduces its Voronoi cell")
{
    const Honeycomb h{MDQuantizer({Lattice(catalog_get("hexagonal3").expected)})};
    const auto r = h.enumerate();
    REQUIRE(r.classes.size() == 1);
    CHECK(r.merit.g_value == doctest::Approx(0.080188).epsilon(1e-5));
    const auto m = estimate_mse(h, r, {8, 20000});
    // G = (U / nV) / V^(2/n) with n = 2
    const double v = r.lattice_volume.to_double();
    CHECK(std::abs(m.mse.estimate / v - 0.080188) <= 3 * m.mse.std_error / v);
}

TEST_CASE("results depend only on the seed")
{
    const Honeycomb h = make("bcc3");
    const auto r = h.enumerate();
    const auto a = mc_sample(h, r, {11, 3000});
    setenv("INTERSECTQ_THREADS", "1", 1);
    const auto b = mc_sample(h, r, {11, 3000});
    setenv("INTERSECTQ_THREADS", "3", 1);
    const auto c = mc_sample(h, r, {11, 3000});
    unsetenv("INTERSECTQ_THREADS");
    CHECK(a.cls == b.cls);
    CHECK(a.dist2 == b.dist2);
    CHECK(b.cls == c.cls);
    CHECK(b.dist2 == c.dist2);
    CHECK(mc_sample(h, r, {12, 3000}).dist2 != a.dist2);
    CHECK(std::string(mc_rng_name) == "splitmix64-counter");
}

TEST_CASE("bad runs are rejected")
{
    const Honeycomb h = make("hexagonal3");
    auto r = h.enumerate();
    CHECK_THROWS_AS(mc_verify(h, r, {1, 0}), std::invalid_argument);
    r.cell_index.erase(r.cell_index.begin());
    CHECK_THROWS_AS(mc_verify(h, r, {1, 2000}), std::runtime_error);
}
