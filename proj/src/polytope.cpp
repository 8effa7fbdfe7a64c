#include "intersectq/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace intersectq {

std::size_t affine_dim(const std::vector<FieldVec>& points, const std::vector<std::size_t>& idx)
{
    if (idx.size() <= 1)
        return 0;
    std::vector<FieldVec> diffs;
    diffs.reserve(idx.size() - 1);
    for (std::size_t k = 1; k < idx.size(); ++k)
        diffs.push_back(points[idx[k]] - points[idx[0]]);
    return rank(FieldMat::from_rows(diffs));
}

namespace {

QuadElem factorial(std::size_t n)
{
    long long f = 1;
    for (std::size_t i = 2; i <= n; ++i)
        f *= static_cast<long long>(i);
    return QuadElem(f);
}

// Memoized face-lattice walk used for the pulling triangulation.
class Triangulator {
public:
    Triangulator(const std::vector<FieldVec>& pts, const std::vector<std::vector<std::size_t>>& facets)
        : pts_(pts), facets_(facets)
    {
    }

    std::size_t dim_of(const std::vector<std::size_t>& s)
    {
        auto it = dims_.find(s);
        if (it != dims_.end())
            return it->second;
        const std::size_t d = affine_dim(pts_, s);
        dims_.emplace(s, d);
        return d;
    }

    // Simplices (as vertex index lists of size k+1) of a k-face with vertex set s.
    std::vector<std::vector<std::size_t>> triangulate(const std::vector<std::size_t>& s, std::size_t k)
    {
        if (k == 0)
            return {{s.front()}};
        if (k == 1 || s.size() == k + 1)
            return {s};
        const std::size_t apex = s.front();
        std::set<std::vector<std::size_t>> subfaces;
        for (const auto& f : facets_) {
            std::vector<std::size_t> t;
            std::set_intersection(s.begin(), s.end(), f.begin(), f.end(), std::back_inserter(t));
            if (t.size() < k || t.size() == s.size() || std::binary_search(t.begin(), t.end(), apex))
                continue;
            if (dim_of(t) == k - 1)
                subfaces.insert(std::move(t));
        }
        std::vector<std::vector<std::size_t>> out;
        for (const auto& t : subfaces)
            for (auto simplex : triangulate(t, k - 1)) {
                simplex.push_back(apex);
                out.push_back(std::move(simplex));
            }
        return out;
    }

private:
    const std::vector<FieldVec>& pts_;
    const std::vector<std::vector<std::size_t>>& facets_;
    std::map<std::vector<std::size_t>, std::size_t> dims_;
};

}  // namespace

Moments polytope_moments(const std::vector<FieldVec>& vertices, const std::vector<std::vector<std::size_t>>& facets,
                         std::size_t n)
{
    if (vertices.size() < n + 1 || facets.empty())
        throw std::invalid_argument("polytope_moments: degenerate polytope");
    // work relative to the vertex centroid, which is interior
    FieldVec g(n);
    for (const auto& v : vertices)
        g = g + v;
    g = QuadElem(Rational(1, static_cast<long>(vertices.size()))) * g;
    std::vector<FieldVec> pts;
    pts.reserve(vertices.size());
    for (const auto& v : vertices)
        pts.push_back(v - g);

    Triangulator tri(pts, facets);
    const QuadElem nfact = factorial(n);
    const QuadElem moment_scale = QuadElem(static_cast<long long>((n + 1) * (n + 2)));
    QuadElem volume, u0;
    FieldVec first(n);
    for (const auto& f : facets) {
        for (const auto& simplex : tri.triangulate(f, n - 1)) {
            // cone over the facet simplex from the origin (= vertex centroid)
            FieldMat m(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    m(r, c) = pts[simplex[r]][c];
            const QuadElem vs = abs(det(m)) / nfact;
            if (vs.is_zero())
                continue;
            FieldVec s(n);
            QuadElem sq;
            for (auto i : simplex) {
                s = s + pts[i];
                sq += norm(pts[i]);
            }
            volume += vs;
            first = first + (vs / QuadElem(static_cast<long long>(n + 1))) * s;
            u0 += vs / moment_scale * (sq + norm(s));
        }
    }
    if (volume.is_zero())
        throw std::invalid_argument("polytope_moments: zero volume");
    Moments mo;
    mo.volume = volume;
    const FieldVec c = (QuadElem(1) / volume) * first;
    mo.centroid = c + g;
    mo.second_moment = u0 - volume * norm(c);
    return mo;
}

namespace {

struct PlaneKeyLess {
    bool operator()(const std::pair<FieldVec, QuadElem>& a, const std::pair<FieldVec, QuadElem>& b) const
    {
        if (FieldVecLess{}(a.first, b.first))
            return true;
        if (FieldVecLess{}(b.first, a.first))
            return false;
        return a.second < b.second;
    }
};

// Scale so the first nonzero normal entry has absolute value 1.
QuadElem normalizer(const FieldVec& normal)
{
    for (const auto& x : normal)
        if (!x.is_zero())
            return QuadElem(1) / abs(x);
    throw std::invalid_argument("zero normal vector");
}

bool solve_double(std::vector<double> a, std::vector<double> b, std::size_t n, std::vector<double>& x)
{
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col]))
                piv = r;
        if (std::abs(a[piv * n + col]) < 1e-9)
            return false;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a[piv * n + c], a[col * n + c]);
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            if (f == 0)
                continue;
            for (std::size_t c = col; c < n; ++c)
                a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c)
            s -= a[i * n + c] * x[c];
        x[i] = s / a[i * n + i];
    }
    return true;
}

void fill_edges(Polytope& p)
{
    const std::size_t nv = p.vertices.size();
    std::vector<std::vector<std::size_t>> on(nv);
    for (std::size_t f = 0; f < p.facets.size(); ++f)
        for (auto v : p.facets[f])
            on[v].push_back(f);
    for (std::size_t a = 0; a < nv; ++a)
        for (std::size_t b = a + 1; b < nv; ++b) {
            std::vector<std::size_t> common;
            std::set_intersection(on[a].begin(), on[a].end(), on[b].begin(), on[b].end(),
                                  std::back_inserter(common));
            if (common.empty()) {
                if (p.dim == 1)
                    p.edges.emplace_back(a, b);
                continue;
            }
            // smallest face containing both vertices
            std::vector<std::size_t> face = p.facets[common[0]];
            for (std::size_t k = 1; k < common.size(); ++k) {
                std::vector<std::size_t> t;
                std::set_intersection(face.begin(), face.end(), p.facets[common[k]].begin(),
                                      p.facets[common[k]].end(), std::back_inserter(t));
                face = std::move(t);
            }
            if (face.size() == 2 || affine_dim(p.vertices, face) == 1)
                p.edges.emplace_back(a, b);
        }
}

}  // namespace

std::optional<Polytope> polytope_from_halfspaces(std::vector<Plane> input, std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("polytope dimension must be positive");
    // merge coincident hyperplanes, keep the tighter of parallel ones
    std::map<FieldVec, std::size_t, FieldVecLess> by_direction;
    std::vector<Plane> planes;
    for (auto& pl : input) {
        if (pl.normal.size() != n)
            throw std::invalid_argument("halfspace dimension mismatch");
        const QuadElem s = normalizer(pl.normal);
        pl.normal = s * pl.normal;
        pl.offset = s * pl.offset;
        auto it = by_direction.find(pl.normal);
        if (it == by_direction.end()) {
            by_direction.emplace(pl.normal, planes.size());
            planes.push_back(std::move(pl));
            continue;
        }
        Plane& kept = planes[it->second];
        if (pl.offset == kept.offset)
            kept.sources.insert(kept.sources.end(), pl.sources.begin(), pl.sources.end());
        else if (pl.offset < kept.offset)
            kept = std::move(pl);
    }

    const std::size_t m = planes.size();
    std::vector<double> nd(m * n), od(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            nd[i * n + j] = planes[i].normal[j].to_double();
        od[i] = planes[i].offset.to_double();
    }

    std::set<FieldVec, FieldVecLess> found;
    if (m >= n) {
        std::vector<std::size_t> pick(n);
        std::iota(pick.begin(), pick.end(), 0);
        std::vector<double> a(n * n), b(n), x;
        while (true) {
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c)
                    a[r * n + c] = nd[pick[r] * n + c];
                b[r] = od[pick[r]];
            }
            if (solve_double(a, b, n, x)) {
                bool feasible = true;
                for (std::size_t i = 0; i < m && feasible; ++i) {
                    double s = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        s += nd[i * n + j] * x[j];
                    feasible = s <= od[i] + 1e-7 * (1.0 + std::abs(od[i]));
                }
                if (feasible) {
                    FieldMat ae(n, n);
                    FieldVec be(n);
                    for (std::size_t r = 0; r < n; ++r) {
                        for (std::size_t c = 0; c < n; ++c)
                            ae(r, c) = planes[pick[r]].normal[c];
                        be[r] = planes[pick[r]].offset;
                    }
                    if (auto v = solve(ae, be)) {
                        bool ok = true;
                        for (std::size_t i = 0; i < m && ok; ++i)
                            ok = dot(planes[i].normal, *v) <= planes[i].offset;
                        if (ok)
                            found.insert(std::move(*v));
                    }
                }
            }
            // next n-subset in lexicographic order
            std::size_t k = n;
            while (k > 0 && pick[k - 1] == m - n + k - 1)
                --k;
            if (k == 0)
                break;
            ++pick[k - 1];
            for (std::size_t j = k; j < n; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }

    Polytope p;
    p.dim = n;
    p.vertices.assign(found.begin(), found.end());
    std::vector<std::size_t> all(p.vertices.size());
    std::iota(all.begin(), all.end(), 0);
    if (p.vertices.size() < n + 1 || affine_dim(p.vertices, all) < n)
        return std::nullopt;
    p.planes = std::move(planes);
    for (std::size_t i = 0; i < p.planes.size(); ++i) {
        std::vector<std::size_t> tight;
        for (std::size_t v = 0; v < p.vertices.size(); ++v)
            if (dot(p.planes[i].normal, p.vertices[v]) == p.planes[i].offset)
                tight.push_back(v);
        if (tight.size() >= n && affine_dim(p.vertices, tight) == n - 1) {
            p.facets.push_back(std::move(tight));
            p.facet_planes.push_back(i);
        }
    }
    fill_edges(p);
    p.moments = polytope_moments(p.vertices, p.facets, n);
    return p;
}

namespace {

// Normal of the hyperplane through n affinely independent points (generalized cross product).
FieldVec hyperplane_normal(const std::vector<FieldVec>& pts, const std::vector<std::size_t>& idx, std::size_t n)
{
    FieldMat d(n - 1, n);
    for (std::size_t r = 1; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            d(r - 1, c) = pts[idx[r]][c] - pts[idx[0]][c];
    FieldVec normal(n);
    for (std::size_t j = 0; j < n; ++j) {
        FieldMat minor(n - 1, n - 1);
        for (std::size_t r = 0; r + 1 < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j)
                    minor(r, cc++) = d(r, c);
        }
        const QuadElem v = n == 1 ? QuadElem(1) : det(minor);
        normal[j] = (j % 2 == 0) ? v : -v;
    }
    return normal;
}

}  // namespace

Polytope polytope_from_vertices(const std::vector<FieldVec>& input)
{
    if (input.empty())
        throw std::invalid_argument("empty point set");
    const std::size_t n = input[0].size();
    std::set<FieldVec, FieldVecLess> uniq(input.begin(), input.end());
    std::vector<FieldVec> pts(uniq.begin(), uniq.end());
    std::vector<std::size_t> all(pts.size());
    std::iota(all.begin(), all.end(), 0);
    if (pts.size() < n + 1 || affine_dim(pts, all) < n)
        throw std::invalid_argument("point set is not full-dimensional");

    std::vector<Plane> planes;
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> pick(n);
    std::iota(pick.begin(), pick.end(), 0);
    const std::size_t m = pts.size();
    while (true) {
        if (affine_dim(pts, pick) == n - 1) {
            FieldVec normal = hyperplane_normal(pts, pick, n);
            QuadElem off = dot(normal, pts[pick[0]]);
            int above = 0, below = 0;
            std::vector<std::size_t> tight;
            for (std::size_t v = 0; v < m; ++v) {
                const int s = (dot(normal, pts[v]) - off).sign();
                if (s > 0)
                    ++above;
                else if (s < 0)
                    ++below;
                else
                    tight.push_back(v);
            }
            if ((above == 0 || below == 0) && seen.insert(tight).second) {
                if (above > 0) {
                    normal = QuadElem(-1) * normal;
                    off = -off;
                }
                planes.push_back({normal, off, {}});
            }
        }
        std::size_t k = n;
        while (k > 0 && pick[k - 1] == m - n + k - 1)
            --k;
        if (k == 0)
            break;
        ++pick[k - 1];
        for (std::size_t j = k; j < n; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    auto p = polytope_from_halfspaces(std::move(planes), n);
    if (!p)
        throw std::logic_error("hull construction lost full dimension");
    return *p;
}

std::vector<FieldVec> polygon_cycle(const Polytope& p)
{
    if (p.dim != 2)
        throw std::invalid_argument("polygon_cycle needs a 2-D polytope");
    const auto c = to_double(p.moments.centroid);
    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        const auto v = to_double(p.vertices[i]);
        order.emplace_back(std::atan2(v[1] - c[1], v[0] - c[0]), i);
    }
    std::sort(order.begin(), order.end());
    std::vector<FieldVec> out;
    for (const auto& [a, i] : order)
        out.push_back(p.vertices[i]);
    return out;
}

}  // namespace intersectq
