#include "intersectq/lattice.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace intersectq {

Lattice::Lattice(FieldMat generator) : gen_(std::move(generator))
{
    if (gen_.rows() != gen_.cols() || gen_.rows() == 0)
        throw std::invalid_argument("lattice generator must be square and nonempty");
    field_ = gen_.field();
    auto inv = inverse(gen_);
    if (!inv)
        throw std::invalid_argument("lattice generator is singular");
    inv_ = std::move(*inv);
    volume_ = abs(det(gen_));
    gram_ = gen_ * gen_.transpose();
    canonical_ = canonical_span(gen_.row_list(), field_);
}

Lattice Lattice::integer(std::size_t n, long long scale)
{
    return Lattice(QuadElem(scale) * FieldMat::identity(n));
}

FieldVec Lattice::coordinates(const FieldVec& v) const
{
    return v * inv_;
}

std::optional<std::vector<Integer>> Lattice::integer_coordinates(const FieldVec& v) const
{
    const FieldVec t = coordinates(v);
    std::vector<Integer> c(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!is_integer(t[i]))
            return std::nullopt;
        c[i] = boost::multiprecision::numerator(t[i].rational_part());
    }
    return c;
}

bool Lattice::contains(const FieldVec& v) const
{
    return integer_coordinates(v).has_value();
}

bool Lattice::contains(const Lattice& sub) const
{
    if (sub.dim() != dim())
        return false;
    for (std::size_t i = 0; i < sub.dim(); ++i)
        if (!contains(sub.gen_.row(i)))
            return false;
    return true;
}

FieldVec Lattice::point(const std::vector<long long>& coeffs) const
{
    FieldVec c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        c[i] = QuadElem(coeffs[i]);
    return c * gen_;
}

Lattice Lattice::dual() const
{
    return Lattice(inv_.transpose());
}

Lattice Lattice::scaled(const QuadElem& s) const
{
    return Lattice(s * gen_);
}

Lattice Lattice::transformed(const FieldMat& m) const
{
    return Lattice(gen_ * m);
}

bool operator==(const Lattice& x, const Lattice& y)
{
    return x.dim() == y.dim() && x.canonical_ == y.canonical_;
}

Lattice sum(const std::vector<Lattice>& lattices)
{
    if (lattices.empty())
        throw std::invalid_argument("sum of an empty list of lattices");
    const std::size_t n = lattices[0].dim();
    int field = 1;
    std::vector<FieldVec> rows;
    for (const auto& l : lattices) {
        if (l.dim() != n)
            throw std::invalid_argument("lattice dimensions differ");
        if (l.field() != 1) {
            if (field != 1 && field != l.field())
                throw FieldMismatch("lattices live in different quadratic fields");
            field = l.field();
        }
        for (const auto& r : l.canonical_basis())
            rows.push_back(r);
    }
    auto span = canonical_span(rows, field);
    if (span.size() != n)
        throw std::domain_error("lattices are not commensurable: their sum is not discrete");
    return Lattice(FieldMat::from_rows(span));
}

Lattice intersect(const std::vector<Lattice>& lattices)
{
    std::vector<Lattice> duals;
    duals.reserve(lattices.size());
    for (const auto& l : lattices)
        duals.push_back(l.dual());
    return sum(duals).dual();
}

GramFactor ldl(const FieldMat& gram)
{
    const std::size_t n = gram.rows();
    GramFactor f{std::vector<QuadElem>(n), FieldMat::identity(n)};
    for (std::size_t i = 0; i < n; ++i) {
        QuadElem d = gram(i, i);
        for (std::size_t k = 0; k < i; ++k)
            d -= f.lower(i, k) * f.lower(i, k) * f.diag[k];
        if (d.sign() <= 0)
            throw std::domain_error("Gram matrix is not positive definite");
        f.diag[i] = d;
        for (std::size_t j = i + 1; j < n; ++j) {
            QuadElem s = gram(j, i);
            for (std::size_t k = 0; k < i; ++k)
                s -= f.lower(j, k) * f.lower(i, k) * f.diag[k];
            f.lower(j, i) = s / d;
        }
    }
    return f;
}

namespace {

struct BallSearch {
    const GramFactor& factor;
    const FieldVec& center;
    const BallVisitor& visit;
    std::size_t n;
    std::vector<long long> z;
    std::vector<QuadElem> partial;  // partial[i] = contribution of levels >= i

    void descend(std::size_t level, const QuadElem& bound)
    {
        const std::size_t i = level;
        QuadElem c = center[i];
        for (std::size_t j = i + 1; j < n; ++j)
            if (!factor.lower(j, i).is_zero())
                c -= (QuadElem(z[j]) - center[j]) * factor.lower(j, i);
        const QuadElem rem = bound - partial[i + 1];
        if (rem.sign() < 0)
            return;
        const double cf = c.to_double();
        const double r = std::sqrt(std::max(0.0, rem.to_double() / factor.diag[i].to_double()));
        const long long lo = static_cast<long long>(std::floor(cf - r)) - 1;
        const long long hi = static_cast<long long>(std::ceil(cf + r)) + 1;
        for (long long v = lo; v <= hi; ++v) {
            const QuadElem diff = QuadElem(v) - c;
            QuadElem contrib = factor.diag[i] * diff * diff;
            if (contrib > rem)
                continue;
            z[i] = v;
            partial[i] = partial[i + 1] + contrib;
            if (i == 0)
                visit(z, partial[0]);
            else
                descend(i - 1, bound);
        }
    }
};

}  // namespace

void enumerate_ball(const FieldMat& gram, const FieldVec& center, const QuadElem& bound, const BallVisitor& visit)
{
    const std::size_t n = gram.rows();
    if (center.size() != n)
        throw std::invalid_argument("enumerate_ball: center dimension mismatch");
    if (bound.sign() < 0 || n == 0)
        return;
    const GramFactor f = ldl(gram);
    BallSearch s{f, center, visit, n, std::vector<long long>(n, 0), std::vector<QuadElem>(n + 1)};
    s.descend(n - 1, bound);
}

std::vector<FieldVec> vectors_of_norm(const Lattice& lattice, const QuadElem& m)
{
    if (m.sign() <= 0)
        throw std::invalid_argument("vectors_of_norm: norm must be positive");
    std::vector<FieldVec> out;
    enumerate_ball(lattice.gram(), FieldVec(lattice.dim()), m, [&](const std::vector<long long>& c, const QuadElem& d) {
        if (d == m)
            out.push_back(lattice.point(c));
    });
    std::sort(out.begin(), out.end(), FieldVecLess{});
    return out;
}

QuadElem minimal_norm(const FieldMat& gram)
{
    QuadElem bound = gram(0, 0);
    for (std::size_t i = 1; i < gram.rows(); ++i)
        bound = std::min(bound, gram(i, i));
    QuadElem best = bound;
    enumerate_ball(gram, FieldVec(gram.rows()), bound, [&](const std::vector<long long>&, const QuadElem& d) {
        if (!d.is_zero() && d < best)
            best = d;
    });
    return best;
}

QuadElem minimal_norm(const Lattice& lattice)
{
    return minimal_norm(lattice.gram());
}

std::map<QuadElem, std::size_t> theta_prefix(const FieldMat& gram, const QuadElem& max_norm)
{
    std::map<QuadElem, std::size_t> counts;
    enumerate_ball(gram, FieldVec(gram.rows()), max_norm, [&](const std::vector<long long>&, const QuadElem& d) {
        if (!d.is_zero())
            ++counts[d];
    });
    return counts;
}

std::vector<FieldVec> relevant_vectors(const Lattice& lattice)
{
    const std::size_t n = lattice.dim();
    if (n >= 20)
        throw std::invalid_argument("relevant_vectors: dimension too large for class enumeration");
    const FieldMat gram4 = QuadElem(4) * lattice.gram();
    std::vector<FieldVec> out;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        std::vector<long long> eps(n);
        FieldVec center(n);
        for (std::size_t i = 0; i < n; ++i) {
            eps[i] = (mask >> i) & 1UL;
            center[i] = QuadElem(Rational(-eps[i], 2));
        }
        const FieldVec s = lattice.point(eps);
        const QuadElem bound = norm(s);
        // v = (eps + 2k) * gen has norm (k + eps/2) 4G (k + eps/2)^T
        std::optional<QuadElem> best;
        std::vector<std::vector<long long>> minima;
        enumerate_ball(gram4, center, bound, [&](const std::vector<long long>& k, const QuadElem& d) {
            if (!best || d < *best) {
                best = d;
                minima.clear();
            }
            if (d == *best)
                minima.push_back(k);
        });
        if (minima.size() != 2)
            continue;
        for (const auto& k : minima) {
            std::vector<long long> c(n);
            for (std::size_t i = 0; i < n; ++i)
                c[i] = eps[i] + 2 * k[i];
            out.push_back(lattice.point(c));
        }
    }
    std::sort(out.begin(), out.end(), FieldVecLess{});
    return out;
}

bool is_frame(const std::vector<FieldVec>& part, FrameKind kind, std::string* why)
{
    auto fail = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };
    if (part.empty())
        return fail("empty part");
    const std::size_t n = part[0].size();
    std::set<FieldVec, FieldVecLess> set(part.begin(), part.end());
    if (set.size() != part.size())
        return fail("repeated vector");
    for (const auto& v : part)
        if (!set.contains(QuadElem(-1) * v))
            return fail("not closed under negation");
    const QuadElem m = norm(part[0]);
    for (const auto& v : part)
        if (norm(v) != m)
            return fail("unequal norms");

    if (kind == FrameKind::coordinate) {
        if (part.size() != 2 * n)
            return fail("coordinate frame needs " + std::to_string(2 * n) + " vectors");
        std::vector<FieldVec> reps;
        for (const auto& v : part) {
            const FieldVec neg = QuadElem(-1) * v;
            if (std::none_of(reps.begin(), reps.end(), [&](const FieldVec& r) { return r == neg; }))
                reps.push_back(v);
        }
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                if (!dot(reps[i], reps[j]).is_zero())
                    return fail("frame vectors are not orthogonal");
        return true;
    }

    if (n % 2 != 0 || part.size() != 3 * n)
        return fail("A2 frame needs " + std::to_string(3 * n) + " vectors in even dimension");
    const QuadElem half = m / QuadElem(2);
    std::vector<FieldVec> rest(part);
    std::vector<std::vector<FieldVec>> stars;
    while (!rest.empty()) {
        const FieldVec u = rest.front();
        std::vector<FieldVec> star, others;
        for (const auto& w : rest)
            (dot(u, w).is_zero() ? others : star).push_back(w);
        if (star.size() != 6)
            return fail("hexagonal star of size " + std::to_string(star.size()));
        for (const auto& a : star)
            for (const auto& b : star) {
                const QuadElem p = abs(dot(a, b));
                if (p != m && p != half)
                    return fail("star is not hexagonal");
            }
        if (rank(FieldMat::from_rows(star)) != 2)
            return fail("star is not planar");
        stars.push_back(std::move(star));
        rest = std::move(others);
    }
    if (stars.size() != n / 2)
        return fail("wrong number of hexagonal stars");
    for (std::size_t i = 0; i < stars.size(); ++i)
        for (std::size_t j = i + 1; j < stars.size(); ++j)
            for (const auto& a : stars[i])
                for (const auto& b : stars[j])
                    if (!dot(a, b).is_zero())
                        return fail("stars are not in orthogonal planes");
    return true;
}

FrameReport verify_frame_partition(const Lattice& lattice, const FramePartition& partition, FrameKind kind)
{
    FrameReport report;
    const auto minimal = vectors_of_norm(lattice, minimal_norm(lattice));
    const std::set<FieldVec, FieldVecLess> shell(minimal.begin(), minimal.end());
    std::set<FieldVec, FieldVecLess> seen;
    for (std::size_t p = 0; p < partition.parts.size(); ++p) {
        for (const auto& v : partition.parts[p]) {
            if (!shell.contains(v)) {
                report.failing_part = p;
                report.reason = "vector is not a minimal vector of the lattice";
                return report;
            }
            if (!seen.insert(v).second) {
                report.failing_part = p;
                report.reason = "parts are not disjoint";
                return report;
            }
        }
        std::string why;
        if (!is_frame(partition.parts[p], kind, &why)) {
            report.failing_part = p;
            report.reason = why;
            return report;
        }
    }
    if (seen.size() != shell.size()) {
        report.reason = "parts cover " + std::to_string(seen.size()) + " of " + std::to_string(shell.size()) +
                        " minimal vectors";
        return report;
    }
    report.ok = true;
    return report;
}

namespace {

struct ColoringSearch {
    const std::vector<std::vector<char>>& conflict;
    std::size_t colors;
    std::size_t capacity;
    std::uint64_t budget;
    std::vector<int> assignment;
    std::vector<std::size_t> load;
    std::uint64_t nodes = 0;
    bool timed_out = false;

    bool allowed(std::size_t node, std::size_t c) const
    {
        if (load[c] >= capacity)
            return false;
        for (std::size_t o = 0; o < assignment.size(); ++o)
            if (assignment[o] == static_cast<int>(c) && conflict[node][o])
                return false;
        return true;
    }

    bool run(std::size_t remaining)
    {
        if (remaining == 0)
            return true;
        if (++nodes > budget) {
            timed_out = true;
            return false;
        }
        // most constrained node first
        std::size_t pick = assignment.size();
        std::size_t pick_options = colors + 1;
        for (std::size_t v = 0; v < assignment.size(); ++v) {
            if (assignment[v] >= 0)
                continue;
            std::size_t options = 0;
            for (std::size_t c = 0; c < colors; ++c)
                if (allowed(v, c))
                    ++options;
            if (options == 0)
                return false;
            if (options < pick_options) {
                pick = v;
                pick_options = options;
            }
        }
        bool tried_empty = false;
        for (std::size_t c = 0; c < colors; ++c) {
            if (!allowed(pick, c))
                continue;
            if (load[c] == 0) {
                // empty colours are interchangeable
                if (tried_empty)
                    continue;
                tried_empty = true;
            }
            assignment[pick] = static_cast<int>(c);
            ++load[c];
            if (run(remaining - 1))
                return true;
            --load[c];
            assignment[pick] = -1;
            if (timed_out)
                return false;
        }
        return false;
    }
};

}  // namespace

ColoringResult color_partition_search(const std::vector<FieldVec>& vectors, FrameKind kind, std::size_t max_colors,
                                      std::uint64_t budget, const std::optional<FieldMat>& unit)
{
    ColoringResult result;
    if (vectors.empty())
        return result;
    const std::size_t n = vectors[0].size();
    if (kind == FrameKind::a2 && !unit)
        throw std::invalid_argument("A2 frame search needs the unit action");

    std::map<FieldVec, std::size_t, FieldVecLess> index;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        index.emplace(vectors[i], i);
    std::vector<int> owner(vectors.size(), -1);
    std::vector<std::vector<std::size_t>> orbits;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (owner[i] >= 0)
            continue;
        std::vector<FieldVec> orbit{vectors[i], QuadElem(-1) * vectors[i]};
        if (kind == FrameKind::a2) {
            const FieldVec w = vectors[i] * *unit;
            const FieldVec w2 = w * *unit;
            orbit.insert(orbit.end(), {w, QuadElem(-1) * w, w2, QuadElem(-1) * w2});
        }
        std::vector<std::size_t> members;
        for (const auto& v : orbit) {
            auto it = index.find(v);
            if (it == index.end())
                throw std::invalid_argument("vector set is not closed under the unit group");
            if (std::find(members.begin(), members.end(), it->second) == members.end())
                members.push_back(it->second);
        }
        for (auto m : members)
            owner[m] = static_cast<int>(orbits.size());
        orbits.push_back(std::move(members));
    }

    const std::size_t capacity = kind == FrameKind::coordinate ? n : n / 2;
    if (orbits.size() % capacity != 0 || orbits.size() / capacity > max_colors)
        return result;
    const std::size_t colors = orbits.size() / capacity;

    std::vector<std::vector<char>> conflict(orbits.size(), std::vector<char>(orbits.size(), 0));
    for (std::size_t a = 0; a < orbits.size(); ++a)
        for (std::size_t b = a + 1; b < orbits.size(); ++b) {
            bool clash = false;
            for (auto x : orbits[a]) {
                for (auto y : orbits[b])
                    if (!dot(vectors[x], vectors[y]).is_zero()) {
                        clash = true;
                        break;
                    }
                if (clash)
                    break;
            }
            conflict[a][b] = conflict[b][a] = clash;
        }

    ColoringSearch search{conflict, colors, capacity, budget, std::vector<int>(orbits.size(), -1),
                          std::vector<std::size_t>(colors, 0)};
    const bool found = search.run(orbits.size());
    result.nodes = search.nodes;
    if (!found) {
        result.status = search.timed_out ? ColoringStatus::timeout : ColoringStatus::infeasible;
        return result;
    }
    result.status = ColoringStatus::found;
    result.partition.parts.assign(colors, {});
    for (std::size_t i = 0; i < vectors.size(); ++i)
        result.partition.parts[static_cast<std::size_t>(search.assignment[static_cast<std::size_t>(owner[i])])]
            .push_back(vectors[i]);
    return result;
}

NormDoublingReport check_norm_doubling(const Lattice& lattice, const FieldMat& t)
{
    NormDoublingReport r;
    const std::size_t n = lattice.dim();
    if (t.rows() != n || t.cols() != n)
        throw std::invalid_argument("norm-doubling map has the wrong shape");
    const FieldMat images = lattice.generator() * t.transpose();
    r.maps_into = true;
    for (std::size_t i = 0; i < n; ++i)
        if (!lattice.contains(images.row(i)))
            r.maps_into = false;
    r.doubles_norm = images * images.transpose() == QuadElem(2) * lattice.gram();
    if (rank(images) == n) {
        const Lattice image(images);
        r.contains_double = image.contains(lattice.scaled(QuadElem(2)));
    }
    if (!r.maps_into)
        r.message = "T does not map the lattice into itself";
    else if (!r.doubles_norm)
        r.message = "T does not double norms";
    else if (!r.contains_double)
        r.message = "2L is not contained in T L";
    else
        r.message = "ok";
    return r;
}

CountingIdentityResult class_counting_identity(const std::vector<CountingTerm>& terms, unsigned n)
{
    CountingIdentityResult r;
    for (const auto& t : terms) {
        if (t.divisor == 0)
            throw std::invalid_argument("zero divisor in counting identity");
        r.sum += Rational(t.count, t.divisor);
    }
    r.target = Rational(Integer(1) << n);
    r.pass = r.sum == r.target;
    return r;
}

BinaryCode BinaryCode::span(std::size_t length, const std::vector<std::vector<int>>& generators)
{
    std::set<std::vector<int>> words{std::vector<int>(length, 0)};
    for (const auto& g : generators) {
        if (g.size() != length)
            throw std::invalid_argument("generator word has the wrong length");
        std::set<std::vector<int>> next(words);
        for (const auto& w : words) {
            std::vector<int> s(length);
            for (std::size_t i = 0; i < length; ++i)
                s[i] = (w[i] + g[i]) & 1;
            next.insert(s);
        }
        words = std::move(next);
    }
    return BinaryCode{length, std::vector<std::vector<int>>(words.begin(), words.end())};
}

bool BinaryCode::is_linear() const
{
    const std::set<std::vector<int>> set(words.begin(), words.end());
    if (!set.contains(std::vector<int>(length, 0)))
        return false;
    for (const auto& a : set)
        for (const auto& b : set) {
            std::vector<int> s(length);
            for (std::size_t i = 0; i < length; ++i)
                s[i] = (a[i] + b[i]) & 1;
            if (!set.contains(s))
                return false;
        }
    return true;
}

BinaryCode intersect_codes(const BinaryCode& a, const BinaryCode& b)
{
    if (a.length != b.length)
        throw std::invalid_argument("codes have different lengths");
    const std::set<std::vector<int>> sb(b.words.begin(), b.words.end());
    BinaryCode c{a.length, {}};
    for (const auto& w : a.words)
        if (sb.contains(w))
            c.words.push_back(w);
    std::sort(c.words.begin(), c.words.end());
    return c;
}

Lattice construction_a(const BinaryCode& code)
{
    const std::size_t n = code.length;
    if (n == 0)
        throw std::invalid_argument("empty code");
    for (const auto& w : code.words) {
        if (w.size() != n)
            throw std::invalid_argument("codeword has the wrong length");
        for (int x : w)
            if (x != 0 && x != 1)
                throw std::invalid_argument("codeword entries must be 0 or 1");
    }
    if (!code.is_linear())
        throw std::invalid_argument("Construction A needs a linear code");
    std::vector<FieldVec> rows;
    for (std::size_t i = 0; i < n; ++i) {
        FieldVec e(n);
        e[i] = 2;
        rows.push_back(std::move(e));
    }
    for (const auto& w : code.words) {
        FieldVec v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = w[i];
        rows.push_back(std::move(v));
    }
    return Lattice(FieldMat::from_rows(canonical_span(rows, 1)));
}

FrameCount bw_frame_count(unsigned m)
{
    if (m < 2)
        throw std::invalid_argument("bw_frame_count needs m >= 2");
    FrameCount f;
    f.minus_product = 1;
    f.plus_product = 1;
    for (unsigned j = 1; j < m; ++j) {
        f.minus_product *= (1LL << j) - 1;
        f.plus_product *= (1LL << j) + 1;
    }
    // minimal-vector counts of D4, E8, BW16
    static const std::map<unsigned, long long> kissing{{2, 24}, {3, 240}, {4, 4320}};
    if (auto it = kissing.find(m); it != kissing.end()) {
        f.value = it->second / (2LL << m);
        f.source = FrameCountSource::stored_minimal_vectors;
        f.conflict = f.value != f.minus_product;
    } else {
        f.value = f.minus_product;
        f.source = FrameCountSource::minus_product_formula;
    }
    return f;
}

SimilarityCertificate similarity_certificate(const FieldMat& gram_a, const FieldMat& gram_b)
{
    SimilarityCertificate c;
    if (gram_a.rows() != gram_b.rows()) {
        c.reason = "dimensions differ";
        return c;
    }
    const std::size_t n = gram_a.rows();
    const QuadElem ma = minimal_norm(gram_a);
    const QuadElem mb = minimal_norm(gram_b);
    c.norm_scale = ma / mb;
    QuadElem power(1);
    for (std::size_t i = 0; i < n; ++i)
        power *= c.norm_scale;
    if (det(gram_a) != power * det(gram_b)) {
        c.reason = "determinants are not in the ratio of minimal norms";
        return c;
    }
    const auto ta = theta_prefix(gram_a, QuadElem(4) * ma);
    const auto tb = theta_prefix(gram_b, QuadElem(4) * mb);
    std::map<QuadElem, std::size_t> scaled;
    for (const auto& [k, v] : tb)
        scaled[c.norm_scale * k] = v;
    if (ta != scaled) {
        c.reason = "theta series prefixes differ";
        return c;
    }
    c.similar = true;
    c.reason = "ok";
    return c;
}

std::string lattice_to_json(const Lattice& lattice, int indent)
{
    nlohmann::ordered_json j;
    j["dim"] = lattice.dim();
    j["field_d"] = lattice.field();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < lattice.dim(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < lattice.dim(); ++k)
            row.push_back(to_string(lattice.generator()(i, k)));
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump(indent);
}

Lattice lattice_from_json(const std::string& text)
{
    const auto j = nlohmann::json::parse(text);
    const auto dim = j.at("dim").get<std::size_t>();
    const auto field = j.at("field_d").get<int>();
    const auto& rows = j.at("rows");
    if (rows.size() != dim)
        throw std::invalid_argument("lattice file: expected " + std::to_string(dim) + " rows");
    FieldMat g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (rows[i].size() != dim)
            throw std::invalid_argument("lattice file: row " + std::to_string(i) + " has the wrong length");
        for (std::size_t k = 0; k < dim; ++k) {
            QuadElem v = parse_scalar(rows[i][k].get<std::string>(), field);
            if (!v.is_rational() && v.field() != field)
                throw FieldMismatch("lattice file: entry outside the declared field");
            g(i, k) = v;
        }
    }
    return Lattice(std::move(g));
}

Lattice read_lattice_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open lattice file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return lattice_from_json(ss.str());
}

}  // namespace intersectq
