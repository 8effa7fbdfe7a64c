#include <doctest.h>

#include "intersectq/catalog.hpp"
#include "intersectq/quantize.hpp"

#include <random>

using namespace intersectq;

namespace {
QuadElem fr(long long a, long long b = 1) { return QuadElem(Rational(a, b)); }

struct BoxMinimum {
    QuadElem dist2;
    std::vector<std::vector<long long>> argmins;
};

// Plain scan of the coefficient box of half-width r around the rounded coordinates.
BoxMinimum box_minimum(const Lattice& l, const FieldVec& x, long long r)
{
    const std::size_t n = l.dim();
    const FieldVec t = l.coordinates(x);
    std::vector<long long> base(n);
    for (std::size_t i = 0; i < n; ++i)
        base[i] = static_cast<long long>(std::llround(t[i].to_double()));
    BoxMinimum best;
    bool have = false;
    std::vector<long long> off(n, -r);
    while (true) {
        std::vector<long long> k(n);
        for (std::size_t i = 0; i < n; ++i)
            k[i] = base[i] + off[i];
        const QuadElem d = norm(x - l.point(k));
        if (!have || d < best.dist2) {
            best = {d, {k}};
            have = true;
        } else if (d == best.dist2) {
            best.argmins.push_back(k);
        }
        std::size_t i = 0;
        while (i < n && off[i] == r)
            off[i++] = -r;
        if (i == n)
            break;
        ++off[i];
    }
    std::sort(best.argmins.begin(), best.argmins.end());
    return best;
}

// Number of lattice points at the minimal distance from x.
std::size_t closest_count(const Lattice& l, const FieldVec& x)
{
    const QuadElem best = norm(x - nearest_point_oracle(l, x));
    std::size_t count = 0;
    enumerate_ball(l.gram(), l.coordinates(x), best, [&](const std::vector<long long>&, const QuadElem& d) {
        count += d == best;
    });
    return count;
}

std::vector<Lattice> honeycomb_components()
{
    std::vector<Lattice> out;
    for (const char* name : {"hexagonal3", "bcc3", "fcc4", "d4_3"})
        for (auto& l : catalog_get(name).components)
            out.push_back(std::move(l));
    return out;
}
}  // namespace

TEST_CASE("origin quantizes to the origin")
{
    for (const auto& l : honeycomb_components()) {
        const Quantizer q(l);
        CHECK(is_zero(q.nearest_point(FieldVec(l.dim()))));
        CHECK(is_zero(nearest_point_oracle(l, FieldVec(l.dim()))));
    }
}

TEST_CASE("coordinatewise rounding in Z^3")
{
    const Lattice z3 = Lattice::integer(3);
    const FieldVec x{fr(2, 5), fr(-3, 5), fr(6, 5)};
    const FieldVec want{fr(0), fr(-1), fr(1)};
    CHECK(nearest_point_oracle(z3, x) == want);
    CHECK(Quantizer(z3).nearest_point(x) == want);
}

TEST_CASE("ties resolve to the smallest coefficient vector")
{
    const Lattice l1 = catalog_get("bcc3").components[0];
    const FieldVec x{fr(1, 4), fr(3, 4), fr(1, 4)};
    const auto box = box_minimum(l1, x, 3);
    CHECK(box.dist2 == fr(11, 16));
    // 0 and (0,1,1) are equally close
    REQUIRE(box.argmins.size() == 2);
    CHECK(l1.point(box.argmins[1]) == FieldVec{fr(0), fr(1), fr(1)});
    CHECK(nearest_coeffs_oracle(l1, x) == box.argmins[0]);
    CHECK(Quantizer(l1).nearest_coeffs(x) == box.argmins[0]);
    CHECK(is_zero(Quantizer(l1).nearest_point(x)));

    // nudged off the bisector the answer is unique
    const FieldVec y{fr(1, 4), fr(3, 4) + fr(1, 100), fr(1, 4) + fr(1, 100)};
    CHECK(Quantizer(l1).nearest_point(y) == FieldVec{fr(0), fr(1), fr(1)});
}

TEST_CASE("quantizer agrees with the ball oracle and a box scan")
{
    for (const auto& l : honeycomb_components()) {
        const Quantizer q(l);
        for (std::uint64_t i = 0; i < 500; ++i) {
            const FieldVec x = random_lattice_point_region(l, 11, i, 3);
            const auto k = q.nearest_coeffs(x);
            REQUIRE(k == nearest_coeffs_oracle(l, x));
            if (i < 20) {
                const auto box = box_minimum(l, x, 3);
                CHECK(k == box.argmins.front());
            }
        }
    }
}

TEST_CASE("idempotence and translation equivariance")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> c(-6, 6);
    for (const auto& l : honeycomb_components()) {
        const Quantizer q(l);
        const std::size_t n = l.dim();
        for (std::uint64_t i = 0; i < 100; ++i) {
            std::vector<long long> k(n);
            for (auto& v : k)
                v = c(rng);
            const FieldVec p = l.point(k);
            CHECK(q.nearest_point(p) == p);
            const FieldVec x = random_lattice_point_region(l, 23, i, 1);
            if (closest_count(l, x) != 1)
                continue;
            CHECK(q.nearest_point(x + p) == q.nearest_point(x) + p);
        }
    }
}

TEST_CASE("Voronoi halfspaces of the component lattices")
{
    const Quantizer z3(Lattice::integer(3));
    const auto hs = voronoi_halfspaces(z3, FieldVec(3));
    CHECK(hs.size() == 6);
    for (const auto& h : hs)
        CHECK(h.offset == fr(1, 2));
    // bcc components: bricks with square cross-section
    for (const auto& l : catalog_get("bcc3").components)
        CHECK(voronoi_halfspaces(Quantizer(l), FieldVec(3)).size() == 6);
    // fcc components: hexagonal prisms
    for (const auto& l : catalog_get("fcc4").components)
        CHECK(voronoi_halfspaces(Quantizer(l), FieldVec(3)).size() == 8);
    for (const auto& l : catalog_get("hexagonal3").components)
        CHECK(voronoi_halfspaces(Quantizer(l), FieldVec(2)).size() == 4);

    const Lattice l1 = catalog_get("bcc3").components[0];
    const FieldVec p = l1.point({1, 2, -1});
    for (const auto& h : voronoi_halfspaces(Quantizer(l1), p))
        CHECK(dot(p, h.normal) < h.offset);
}

TEST_CASE("hexagonal walkthrough")
{
    const MDQuantizer md(catalog_get("hexagonal3").components);
    const FieldVec near0{fr(1, 20), fr(-1, 30)};
    for (const auto& p : md.quantize(near0))
        CHECK(is_zero(p));
    // just north of the central hexagon, whose top edge is y = 1/2
    const auto north = md.quantize({fr(0), fr(11, 20)});
    CHECK(north[0] == FieldVec{fr(0), fr(1)});
    CHECK(is_zero(north[1]));
    CHECK(is_zero(north[2]));
}

TEST_CASE("multiple-description quantizer")
{
    for (const char* name : {"hexagonal3", "bcc3", "fcc4", "d4_3"}) {
        const auto d = catalog_get(name);
        const MDQuantizer md(d.components);
        CHECK(md.intersection() == Lattice(d.expected));
        for (const auto& c : d.components)
            CHECK(c.contains(md.intersection()));
        for (std::uint64_t i = 0; i < 50; ++i) {
            const FieldVec x = random_lattice_point_region(md.intersection(), 3, i, 1);
            const auto tuple = md.quantize(x);
            REQUIRE(tuple.size() == d.components.size());
            for (std::size_t j = 0; j < tuple.size(); ++j) {
                CHECK(d.components[j].contains(tuple[j]));
                CHECK(tuple[j] == nearest_point_oracle(d.components[j], x));
            }
        }
    }
    const MDQuantizer d4(catalog_get("d4_3").components);
    const FieldVec x{fr(1), fr(1, 10), fr(1, 10), fr(1, 10)};
    const auto t = d4.quantize(x);
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(t[j] == nearest_point_oracle(d4.components()[j].lattice(), x));
    CHECK(d4.quantize_coeffs(x).size() == 12);
}

TEST_CASE("search radius validation")
{
    Quantizer fine(catalog_get("fcc4").components[0]);
    CHECK(validate_search_radius(fine, 200, 1) == 0);
    CHECK(fine.search_radius() == 2);

    // a badly skewed basis defeats rounding plus a radius-2 box
    Quantizer skew(Lattice(FieldMat::from_ints({{1, 0}, {40, 1}})));
    CHECK(validate_search_radius(skew, 200, 1) > 0);
    CHECK(skew.search_radius() == 3);
    CHECK_THROWS(skew.set_search_radius(0));
}

TEST_CASE("input validation and determinism")
{
    const Quantizer q(Lattice::integer(3));
    CHECK_THROWS(q.nearest_point(FieldVec(2)));
    CHECK_THROWS(nearest_point_oracle(Lattice::integer(3), FieldVec(4)));
    const MDQuantizer hex(catalog_get("hexagonal3").components);
    CHECK(hex.field() == 3);
    CHECK(counter_random(1, 2, 3) == counter_random(1, 2, 3));
    CHECK(counter_random(1, 2, 3) != counter_random(1, 2, 4));
    CHECK(counter_random(1, 2, 3) != counter_random(1, 3, 3));
    const Lattice l = catalog_get("bcc3").components[1];
    CHECK(random_lattice_point_region(l, 9, 4) == random_lattice_point_region(l, 9, 4));
}
