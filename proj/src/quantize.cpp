#include "intersectq/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace intersectq {

std::uint64_t counter_random(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
{
    std::uint64_t z = seed ^ (stream * 0xD1B54A32D192ED03ULL) ^ (index * 0x9E3779B97F4A7C15ULL);
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Quantizer::Quantizer(Lattice lattice, int search_radius) : lattice_(std::move(lattice)), radius_(search_radius)
{
    set_search_radius(search_radius);
    relevant_ = relevant_vectors(lattice_);
    for (const auto& v : relevant_) {
        const auto c = *lattice_.integer_coordinates(v);
        std::vector<long long> k(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            k[i] = c[i].convert_to<long long>();
        relevant_coeffs_.push_back(std::move(k));
    }
    const std::size_t n = lattice_.dim();
    const GramFactor f = ldl(lattice_.gram());
    chol_diag_.resize(n);
    chol_lower_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        chol_diag_[i] = f.diag[i].to_double();
        for (std::size_t j = 0; j < n; ++j)
            chol_lower_[i * n + j] = f.lower(i, j).to_double();
    }
}

void Quantizer::set_search_radius(int r)
{
    if (r < 1)
        throw std::invalid_argument("search radius must be at least 1");
    radius_ = r;
}

namespace {

void check_point(const Lattice& l, const FieldVec& x)
{
    if (x.size() != l.dim())
        throw std::invalid_argument("point has dimension " + std::to_string(x.size()) + ", lattice has " +
                                    std::to_string(l.dim()));
    const int fx = field_of(x);
    if (fx != 1 && l.field() != 1 && fx != l.field())
        throw FieldMismatch("point and lattice live in different quadratic fields");
}

// Exact choice among candidates: smallest distance, then smallest coefficients.
std::vector<long long> pick_exact(const Lattice& l, const FieldVec& x, const std::vector<std::vector<long long>>& cands)
{
    std::optional<QuadElem> best;
    std::vector<long long> arg;
    for (const auto& k : cands) {
        const QuadElem d = norm(x - l.point(k));
        if (!best || d < *best || (d == *best && k < arg)) {
            best = d;
            arg = k;
        }
    }
    return arg;
}

std::vector<long long> rounded(const Lattice& l, const FieldVec& x)
{
    const FieldVec t = l.coordinates(x);
    std::vector<long long> k(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        k[i] = round_half_down(t[i]).convert_to<long long>();
    return k;
}

}  // namespace

std::vector<long long> Quantizer::nearest_coeffs(const FieldVec& x) const
{
    check_point(lattice_, x);
    const std::size_t n = lattice_.dim();
    const FieldVec t_exact = lattice_.coordinates(x);
    std::vector<double> t(n);
    std::vector<long long> base(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = t_exact[i].to_double();
        base[i] = round_half_down(t_exact[i]).convert_to<long long>();
    }

    auto fdist = [&](const std::vector<long long>& k) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double y = static_cast<double>(k[i]) - t[i];
            for (std::size_t j = i + 1; j < n; ++j)
                y += chol_lower_[j * n + i] * (static_cast<double>(k[j]) - t[j]);
            s += chol_diag_[i] * y * y;
        }
        return s;
    };
    const double base_d = fdist(base);
    const double margin = 1e-9 * (1.0 + base_d);
    const double bound = base_d + margin;

    // pruned depth-first search of the coefficient box, collecting everything
    // within float distance `bound`
    std::vector<std::pair<double, std::vector<long long>>> found;
    std::vector<long long> k(n);
    std::vector<double> partial(n + 1, 0.0);
    auto descend = [&](auto&& self, std::size_t i) -> void {
        double c = t[i];
        for (std::size_t j = i + 1; j < n; ++j)
            c -= chol_lower_[j * n + i] * (static_cast<double>(k[j]) - t[j]);
        const double rem = bound - partial[i + 1];
        if (rem < 0)
            return;
        const double r = std::sqrt(rem / chol_diag_[i]);
        const long long lo = std::max(base[i] - radius_, static_cast<long long>(std::floor(c - r)));
        const long long hi = std::min(base[i] + radius_, static_cast<long long>(std::ceil(c + r)));
        for (long long v = lo; v <= hi; ++v) {
            const double y = static_cast<double>(v) - c;
            const double p = partial[i + 1] + chol_diag_[i] * y * y;
            if (p > bound)
                continue;
            k[i] = v;
            partial[i] = p;
            if (i == 0)
                found.emplace_back(p, k);
            else
                self(self, i - 1);
        }
    };
    descend(descend, n - 1);
    if (found.empty())
        return base;

    double fmin = std::numeric_limits<double>::infinity();
    for (const auto& f : found)
        fmin = std::min(fmin, f.first);
    std::vector<std::vector<long long>> cands;
    for (auto& f : found)
        if (f.first <= fmin + margin)
            cands.push_back(std::move(f.second));
    if (cands.size() == 1)
        return cands.front();
    return pick_exact(lattice_, x, cands);
}

FieldVec Quantizer::nearest_point(const FieldVec& x) const
{
    return lattice_.point(nearest_coeffs(x));
}

std::vector<long long> nearest_coeffs_oracle(const Lattice& lattice, const FieldVec& x)
{
    check_point(lattice, x);
    const std::vector<long long> base = rounded(lattice, x);
    const QuadElem bound = norm(x - lattice.point(base));
    const FieldVec t = lattice.coordinates(x);
    std::vector<std::vector<long long>> cands;
    std::optional<QuadElem> best;
    enumerate_ball(lattice.gram(), t, bound, [&](const std::vector<long long>& k, const QuadElem& d) {
        if (!best || d < *best) {
            best = d;
            cands.clear();
        }
        if (d == *best)
            cands.push_back(k);
    });
    if (cands.empty())
        return base;
    return *std::min_element(cands.begin(), cands.end());
}

FieldVec nearest_point_oracle(const Lattice& lattice, const FieldVec& x)
{
    return lattice.point(nearest_coeffs_oracle(lattice, x));
}

std::vector<Halfspace> voronoi_halfspaces(const Quantizer& q, const FieldVec& p)
{
    std::vector<Halfspace> out;
    out.reserve(q.relevant().size());
    for (const auto& w : q.relevant())
        out.push_back({w, dot(p, w) + norm(w) / QuadElem(2)});
    return out;
}

FieldVec random_lattice_point_region(const Lattice& lattice, std::uint64_t seed, std::uint64_t index, long long span)
{
    const std::size_t n = lattice.dim();
    FieldVec u(n);
    const Integer denom = Integer(1) << 32;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t r = counter_random(seed, i, index) >> 32;
        Rational v(Integer(r), denom);
        if (span > 1)
            v = v * Rational(span) - Rational(span / 2);
        u[i] = QuadElem(v);
    }
    return u * lattice.generator();
}

std::size_t validate_search_radius(Quantizer& q, std::size_t samples, std::uint64_t seed)
{
    std::size_t mismatches = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const FieldVec x = random_lattice_point_region(q.lattice(), seed, s, 4);
        if (q.nearest_coeffs(x) != nearest_coeffs_oracle(q.lattice(), x))
            ++mismatches;
    }
    if (mismatches > 0 && q.search_radius() < 3)
        q.set_search_radius(3);
    return mismatches;
}

namespace {
int common_field(const std::vector<Lattice>& ls)
{
    int f = 1;
    for (const auto& l : ls)
        if (l.field() != 1)
            f = l.field();
    return f;
}
}  // namespace

MDQuantizer::MDQuantizer(std::vector<Lattice> components)
    : intersection_(intersect(components)), field_(common_field(components))
{
    for (auto& c : components) {
        if (!c.contains(intersection_))
            throw std::logic_error("intersection is not contained in a component");
        quantizers_.emplace_back(std::move(c));
    }
}

MDTuple MDQuantizer::quantize(const FieldVec& x) const
{
    MDTuple out;
    out.reserve(quantizers_.size());
    for (const auto& q : quantizers_)
        out.push_back(q.nearest_point(x));
    return out;
}

std::vector<long long> MDQuantizer::quantize_coeffs(const FieldVec& x) const
{
    std::vector<long long> out;
    out.reserve(quantizers_.size() * dim());
    for (const auto& q : quantizers_) {
        const auto k = q.nearest_coeffs(x);
        out.insert(out.end(), k.begin(), k.end());
    }
    return out;
}

}  // namespace intersectq
