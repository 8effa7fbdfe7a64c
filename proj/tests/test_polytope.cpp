#include <doctest.h>

#include "intersectq/polytope.hpp"

using namespace intersectq;

namespace {
QuadElem fr(long long a, long long b = 1) { return QuadElem(Rational(a, b)); }

std::vector<Plane> box(std::size_t n, const QuadElem& h)
{
    std::vector<Plane> out;
    for (std::size_t i = 0; i < n; ++i)
        for (int s : {1, -1}) {
            FieldVec e(n);
            e[i] = s;
            out.push_back({e, h, {}});
        }
    return out;
}
}  // namespace

TEST_CASE("unit segment moments")
{
    const auto p = polytope_from_vertices({{fr(0)}, {fr(1)}});
    CHECK(p.moments.volume == fr(1));
    CHECK(p.moments.centroid == FieldVec{fr(1, 2)});
    // integral of x^2 over [0,1] is 1/3; about the centroid 1/3 - 1/4
    CHECK(p.moments.second_moment == fr(1, 12));
}

TEST_CASE("cube from halfspaces")
{
    const auto p = polytope_from_halfspaces(box(3, fr(1, 2)), 3);
    REQUIRE(p);
    CHECK(p->vertices.size() == 8);
    CHECK(p->facets.size() == 6);
    CHECK(p->edges.size() == 12);
    CHECK(p->moments.volume == fr(1));
    CHECK(p->moments.second_moment == fr(1, 4));
    CHECK(is_zero(p->moments.centroid));
}

TEST_CASE("degenerate and redundant halfspaces")
{
    auto planes = box(2, fr(1));
    planes.push_back({{fr(1), fr(0)}, fr(-1), {}});  // x <= -1 flattens the square
    CHECK_FALSE(polytope_from_halfspaces(planes, 2).has_value());
    auto dup = box(2, fr(1));
    dup.push_back({{fr(2), fr(0)}, fr(2), {{7, 3}}});
    const auto p = polytope_from_halfspaces(dup, 2);
    REQUIRE(p);
    CHECK(p->facets.size() == 4);
    bool merged = false;
    for (const auto& pl : p->planes)
        merged = merged || pl.sources.size() == 1;
    CHECK(merged);
}

TEST_CASE("hull drops a point interior to an edge")
{
    // (1, 1/2, 1/2) is the midpoint of the two apexes, so only five vertices survive
    const auto p = polytope_from_vertices({{fr(1), fr(1, 2), fr(1, 2)},
                                           {fr(1), fr(0), fr(1, 2)},
                                           {fr(1), fr(1, 2), fr(0)},
                                           {fr(1), fr(0), fr(0)},
                                           {fr(1, 2), fr(1, 2), fr(1, 2)},
                                           {fr(3, 2), fr(1, 2), fr(1, 2)}});
    CHECK(p.vertices.size() == 5);
    CHECK(p.facets.size() == 6);
    CHECK(p.edges.size() == 9);
    CHECK(p.moments.volume == fr(1, 12));
    CHECK(p.moments.second_moment == fr(7, 1536));
}

TEST_CASE("product of two skew triangles in four dimensions")
{
    const auto p = polytope_from_vertices({{fr(2), fr(1), fr(1), fr(0)},
                                           {fr(1), fr(1), fr(0), fr(0)},
                                           {fr(1), fr(0), fr(1), fr(0)},
                                           {fr(2), fr(0), fr(0), fr(0)},
                                           {fr(1), fr(1), fr(1), fr(1)},
                                           {fr(1), fr(1), fr(1), fr(-1)}});
    CHECK(p.facets.size() == 9);
    CHECK(p.moments.volume == fr(1, 4));
    CHECK(p.moments.second_moment == fr(1, 20));
}

TEST_CASE("regular hexagon")
{
    const QuadElem h = QuadElem::surd(Rational(1, 2), 3);
    std::vector<Plane> planes;
    // hexagon with inradius 1/2 and edge 1/sqrt3
    for (auto [a, b] : std::vector<std::pair<QuadElem, QuadElem>>{
             {fr(0), fr(1)}, {fr(0), fr(-1)}, {h, fr(1, 2)}, {h, fr(-1, 2)}, {-h, fr(1, 2)}, {-h, fr(-1, 2)}})
        planes.push_back({{a, b}, fr(1, 2), {}});
    const auto p = polytope_from_halfspaces(planes, 2);
    REQUIRE(p);
    CHECK(p->vertices.size() == 6);
    CHECK(p->moments.volume == QuadElem::surd(Rational(1, 2), 3));
    CHECK(p->moments.second_moment == QuadElem::surd(Rational(5, 72), 3));
    CHECK(polygon_cycle(*p).size() == 6);
}
