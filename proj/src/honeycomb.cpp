#include "intersectq/honeycomb.hpp"

#include "intersectq/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace intersectq {

namespace {

Integer floor_rational(const Rational& x)
{
    const Integer num = boost::multiprecision::numerator(x);
    const Integer den = boost::multiprecision::denominator(x);
    Integer q = num / den;
    if (q * den > num)
        --q;
    return q;
}

long long floor_div(long long a, long long b)
{
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::vector<std::pair<Integer, unsigned>> factorize(Integer n)
{
    std::vector<std::pair<Integer, unsigned>> out;
    for (unsigned long p = 2; p < 1000000 && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k)
            out.emplace_back(Integer(p), k);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::string rational_text(const Rational& r)
{
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------- PowerProduct

void PowerProduct::absorb(const Integer& base, const Rational& exponent)
{
    if (base == 1 || exponent == 0)
        return;
    Rational total = exponent;
    if (auto it = powers_.find(base); it != powers_.end())
        total += it->second;
    const Integer whole = floor_rational(total);
    const Rational frac = total - Rational(whole);
    if (whole > 0)
        coefficient_ *= Rational(boost::multiprecision::pow(base, whole.convert_to<unsigned>()));
    else if (whole < 0)
        coefficient_ /= Rational(boost::multiprecision::pow(base, (-whole).convert_to<unsigned>()));
    if (frac == 0)
        powers_.erase(base);
    else
        powers_[base] = frac;
}

PowerProduct PowerProduct::from_monomial(const QuadElem& x)
{
    if (x.is_rational())
        return PowerProduct(x.rational_part());
    if (x.rational_part() != 0)
        throw std::domain_error("value " + intersectq::to_text(x) + " is not a monomial in the square root");
    PowerProduct p(x.surd_part());
    for (const auto& [q, k] : factorize(Integer(x.field())))
        p.absorb(q, Rational(k, 2));
    return p;
}

PowerProduct PowerProduct::pow(const Rational& e) const
{
    if (coefficient_ <= 0)
        throw std::domain_error("fractional power of a non-positive number");
    PowerProduct out;
    const Integer num = boost::multiprecision::numerator(coefficient_);
    const Integer den = boost::multiprecision::denominator(coefficient_);
    for (const auto& [q, k] : factorize(num))
        out.absorb(q, Rational(k) * e);
    for (const auto& [q, k] : factorize(den))
        out.absorb(q, -Rational(k) * e);
    for (const auto& [b, x] : powers_)
        out.absorb(b, x * e);
    return out;
}

PowerProduct operator*(const PowerProduct& x, const PowerProduct& y)
{
    PowerProduct out = x;
    out.coefficient_ *= y.coefficient_;
    for (const auto& [b, e] : y.powers_)
        out.absorb(b, e);
    return out;
}

double PowerProduct::value() const
{
    long double v = coefficient_.convert_to<long double>();
    for (const auto& [b, e] : powers_)
        v *= std::pow(b.convert_to<long double>(), e.convert_to<long double>());
    return static_cast<double>(v);
}

std::string PowerProduct::to_text() const
{
    std::ostringstream os;
    bool first = true;
    if (coefficient_ != 1 || powers_.empty()) {
        os << rational_text(coefficient_);
        first = false;
    }
    for (const auto& [b, e] : powers_) {
        if (!first)
            os << " * ";
        os << b << "^(" << rational_text(e) << ")";
        first = false;
    }
    return os.str();
}

std::string PowerProduct::to_string() const
{
    std::string s = to_text();
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
}

PowerProduct PowerProduct::parse(std::string_view text)
{
    std::string s(text);
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty())
        throw std::invalid_argument("empty power product");
    PowerProduct out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t end = std::min(s.find('*', start), s.size());
        const std::string tok = s.substr(start, end - start);
        const std::size_t caret = tok.find('^');
        if (caret == std::string::npos) {
            const QuadElem c = parse_scalar(tok);
            if (!c.is_rational() || c.sign() <= 0)
                throw std::invalid_argument("bad power product coefficient: " + tok);
            out = out * PowerProduct(c.rational_part());
        } else {
            std::string e = tok.substr(caret + 1);
            if (e.size() >= 2 && e.front() == '(' && e.back() == ')')
                e = e.substr(1, e.size() - 2);
            const QuadElem base = parse_scalar(tok.substr(0, caret));
            const QuadElem exponent = parse_scalar(e);
            if (!base.is_rational() || base.sign() <= 0 || !exponent.is_rational())
                throw std::invalid_argument("bad power product factor: " + tok);
            out = out * PowerProduct(base.rational_part()).pow(exponent.rational_part());
        }
        start = end + 1;
    }
    return out;
}

// ---------------------------------------------------------------- merit

FigureOfMerit figure_of_merit(const std::vector<ClassSummary>& classes, const QuadElem& lattice_volume, std::size_t n)
{
    if (classes.empty())
        throw std::invalid_argument("figure of merit needs at least one class");
    FigureOfMerit m;
    const Rational two_over_n(2, static_cast<long>(n));
    PowerProduct volume_term(1);
    double log_mean_volume = 0;
    for (const auto& c : classes) {
        m.mse += QuadElem(c.probability) * c.second_moment / c.volume;
        volume_term = volume_term * PowerProduct::from_monomial(c.volume).pow(-c.probability * two_over_n);
        const double p = c.probability.convert_to<double>();
        log_mean_volume += p * std::log2(c.volume.to_double());
        if (p > 0)
            m.entropy -= p * std::log2(p);
    }
    m.g = PowerProduct::from_monomial(m.mse / QuadElem(static_cast<long long>(n))) * volume_term;
    m.g_value = m.g.value();
    m.rate = (std::log2(lattice_volume.to_double()) - log_mean_volume) / static_cast<double>(n);
    return m;
}

// ---------------------------------------------------------------- fingerprint

Fingerprint fingerprint(const Polytope& p)
{
    Fingerprint f;
    f.dim = p.dim;
    f.vertices = p.vertices.size();
    f.edges = p.edges.size();
    f.facets = p.facets.size();
    f.volume = p.moments.volume;
    for (const auto& v : p.vertices)
        f.radii.push_back(norm(v - p.moments.centroid));
    for (const auto& [a, b] : p.edges)
        f.edge_lengths.push_back(norm(p.vertices[a] - p.vertices[b]));
    std::sort(f.radii.begin(), f.radii.end());
    std::sort(f.edge_lengths.begin(), f.edge_lengths.end());
    return f;
}

// ---------------------------------------------------------------- Honeycomb

Honeycomb::Honeycomb(MDQuantizer quantizer) : q_(std::move(quantizer))
{
    const std::size_t n = dim();
    const FieldMat& b = q_.intersection().generator();
    for (const auto& c : q_.components()) {
        const FieldMat mi = b * c.lattice().inverse_generator();
        std::vector<long long> flat(n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k) {
                if (!is_integer(mi(r, k)))
                    throw std::logic_error("intersection basis is not integral in a component");
                flat[r * n + k] = mi(r, k).rational_part().convert_to<long long>();
            }
        m_.push_back(std::move(flat));
    }
    FieldMat m1(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k)
            m1(r, k) = QuadElem(m_[0][r * n + k]);
    const QuadElem d = det(m1);
    det1_ = d.rational_part().convert_to<long long>();
    const FieldMat adj = d * *inverse(m1);
    adj1_.resize(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k)
            adj1_[r * n + k] = adj(r, k).rational_part().convert_to<long long>();
}

namespace {
std::vector<long long> shift_of(const std::vector<long long>& c1, const std::vector<long long>& adj, long long det,
                                std::size_t n)
{
    std::vector<long long> k(n);
    for (std::size_t j = 0; j < n; ++j) {
        long long s = 0;
        for (std::size_t i = 0; i < n; ++i)
            s += c1[i] * adj[i * n + j];
        k[j] = floor_div(s, det);
    }
    return k;
}
}  // namespace

CellId Honeycomb::canonical(const CellId& id) const
{
    const std::size_t n = dim();
    const std::vector<long long> c1(id.coeffs.begin(), id.coeffs.begin() + static_cast<long>(n));
    const auto k = shift_of(c1, adj1_, det1_, n);
    CellId out = id;
    for (std::size_t l = 0; l < m_.size(); ++l)
        for (std::size_t j = 0; j < n; ++j) {
            long long s = 0;
            for (std::size_t i = 0; i < n; ++i)
                s += k[i] * m_[l][i * n + j];
            out.coeffs[l * n + j] -= s;
        }
    return out;
}

FieldVec Honeycomb::offset(const CellId& id) const
{
    const std::size_t n = dim();
    const std::vector<long long> c1(id.coeffs.begin(), id.coeffs.begin() + static_cast<long>(n));
    return q_.intersection().point(shift_of(c1, adj1_, det1_, n));
}

CellId Honeycomb::zero_id() const
{
    return CellId{std::vector<long long>(dim() * q_.components().size(), 0)};
}

CellId Honeycomb::id_of(const FieldVec& x) const
{
    return canonical(CellId{q_.quantize_coeffs(x)});
}

std::vector<FieldVec> Honeycomb::points(const CellId& id) const
{
    const std::size_t n = dim();
    std::vector<FieldVec> out;
    for (std::size_t l = 0; l < q_.components().size(); ++l) {
        std::vector<long long> c(id.coeffs.begin() + static_cast<long>(l * n),
                                 id.coeffs.begin() + static_cast<long>((l + 1) * n));
        out.push_back(q_.components()[l].lattice().point(c));
    }
    return out;
}

std::optional<Cell> Honeycomb::build_cell(const CellId& id) const
{
    const auto pts = points(id);
    std::vector<Plane> planes;
    for (std::size_t l = 0; l < pts.size(); ++l) {
        const auto& rel = q_.components()[l].relevant();
        for (std::size_t r = 0; r < rel.size(); ++r)
            planes.push_back({rel[r], dot(pts[l], rel[r]) + norm(rel[r]) / QuadElem(2), {{l, r}}});
    }
    auto shape = polytope_from_halfspaces(std::move(planes), dim());
    if (!shape)
        return std::nullopt;
    Cell cell{id, std::move(*shape), {}};
    for (std::size_t k = 0; k < cell.shape.facets.size(); ++k)
        cell.neighbors.push_back(canonical(neighbor(cell, k)));
    return cell;
}

CellId Honeycomb::neighbor(const Cell& cell, std::size_t facet) const
{
    const std::size_t n = dim();
    const Plane& plane = cell.shape.planes.at(cell.shape.facet_planes.at(facet));
    CellId out = cell.id;
    for (const auto& [l, r] : plane.sources) {
        const auto& w = q_.components()[l].relevant_coeffs()[r];
        for (std::size_t j = 0; j < n; ++j)
            out.coeffs[l * n + j] += w[j];
    }
    return out;
}

namespace {

// Refines labels by the multiset of neighbor labels until the partition is stable.
std::vector<std::size_t> refine_labels(const std::vector<Cell>& cells, const std::map<CellId, std::size_t>& index,
                                       std::vector<std::size_t> labels)
{
    std::size_t classes = std::set<std::size_t>(labels.begin(), labels.end()).size();
    while (true) {
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> sigs;
        std::vector<std::size_t> next(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            std::vector<std::size_t> around;
            for (const auto& nb : cells[c].neighbors)
                around.push_back(labels[index.at(nb)]);
            std::sort(around.begin(), around.end());
            auto key = std::make_pair(labels[c], std::move(around));
            auto it = sigs.find(key);
            if (it == sigs.end())
                it = sigs.emplace(std::move(key), sigs.size()).first;
            next[c] = it->second;
        }
        if (sigs.size() == classes)
            return labels;
        classes = sigs.size();
        labels = std::move(next);
    }
}

void finish_report(HoneycombReport& r)
{
    QuadElem total;
    std::vector<ClassSummary> summaries;
    for (auto& c : r.classes) {
        const QuadElem share = QuadElem(static_cast<long long>(c.count())) * c.volume / r.lattice_volume;
        if (!share.is_rational())
            throw std::logic_error("class probability is irrational");
        c.probability = share.rational_part();
        total += QuadElem(static_cast<long long>(c.count())) * c.volume;
        summaries.push_back({c.volume, c.second_moment, c.probability});
    }
    r.closure_ok = total == r.lattice_volume;
    r.merit = figure_of_merit(summaries, r.lattice_volume, r.dim);
}

}  // namespace

HoneycombReport Honeycomb::enumerate(std::size_t budget) const
{
    HoneycombReport r;
    r.dim = dim();
    r.field = q_.field();
    r.lattice_volume = q_.intersection().volume();

    const CellId start = canonical(zero_id());
    r.cell_index.emplace(start, 0);
    r.cells.emplace_back();
    std::vector<CellId> frontier{start};
    while (!frontier.empty()) {
        std::vector<std::optional<Cell>> built(frontier.size());
        parallel_for(frontier.size(), [&](std::size_t i) { built[i] = build_cell(frontier[i]); });
        std::vector<CellId> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            if (!built[i])
                throw std::logic_error("reached a cell that is not full-dimensional");
            for (const auto& nb : built[i]->neighbors) {
                if (r.cell_index.contains(nb))
                    continue;
                if (r.cells.size() >= budget)
                    throw std::runtime_error("honeycomb enumeration exceeded the budget of " +
                                             std::to_string(budget) + " cells");
                r.cell_index.emplace(nb, r.cells.size());
                r.cells.emplace_back();
                next.push_back(nb);
            }
            r.cells[r.cell_index.at(frontier[i])] = std::move(*built[i]);
        }
        frontier = std::move(next);
    }

    // group by fingerprint, then split classes whose cells sit differently in the honeycomb
    std::vector<Fingerprint> fps(r.cells.size());
    parallel_for(r.cells.size(), [&](std::size_t i) { fps[i] = fingerprint(r.cells[i].shape); });
    std::map<Fingerprint, std::size_t> fp_label;
    std::vector<std::size_t> labels(r.cells.size());
    for (std::size_t c = 0; c < r.cells.size(); ++c)
        labels[c] = fp_label.emplace(fps[c], fp_label.size()).first->second;
    labels = refine_labels(r.cells, r.cell_index, labels);

    // number classes by first discovery
    std::map<std::size_t, std::size_t> order;
    r.cell_class.resize(r.cells.size());
    for (std::size_t c = 0; c < r.cells.size(); ++c) {
        auto it = order.emplace(labels[c], order.size()).first;
        r.cell_class[c] = it->second;
        if (it->second == r.classes.size()) {
            CellClass cls;
            cls.fp = fps[c];
            cls.representative = r.cells[c];
            cls.volume = r.cells[c].shape.moments.volume;
            cls.second_moment = r.cells[c].shape.moments.second_moment;
            r.classes.push_back(std::move(cls));
        }
        CellClass& cls = r.classes[it->second];
        if (r.cells[c].shape.moments.second_moment != cls.second_moment)
            throw std::logic_error("cells with equal fingerprints have different second moments");
        cls.members.push_back(c);
    }

    // incidence multigraph
    const std::size_t k = r.classes.size();
    std::vector<std::vector<std::size_t>> s(k, std::vector<std::size_t>(k, 0));
    for (std::size_t a = 0; a < k; ++a) {
        for (const auto& nb : r.classes[a].representative.neighbors)
            ++s[a][r.cell_class[r.cell_index.at(nb)]];
    }
    r.incidence_ok = true;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) {
            if (s[a][b] == 0 && s[b][a] == 0)
                continue;
            r.incidences.push_back({a, b, s[a][b], s[b][a]});
            if (r.classes[a].count() * s[a][b] != r.classes[b].count() * s[b][a])
                r.incidence_ok = false;
        }
    finish_report(r);
    return r;
}

std::optional<std::size_t> class_of_point(const Honeycomb& h, const HoneycombReport& report, const FieldVec& x)
{
    const auto it = report.cell_index.find(h.canonical(h.id_of(x)));
    if (it == report.cell_index.end())
        return std::nullopt;
    return report.cell_class[it->second];
}

HoneycombReport amalgamate(const Honeycomb& h, const HoneycombReport& report, std::size_t i, std::size_t j)
{
    const std::size_t k = report.classes.size();
    if (i >= k || j >= k || i == j)
        throw std::invalid_argument("amalgamate: class indices out of range or equal");
    auto class_of_neighbor = [&](const CellId& nb) { return report.cell_class[report.cell_index.at(nb)]; };
    for (auto m : report.classes[i].members) {
        std::size_t touching = 0;
        for (const auto& nb : report.cells[m].neighbors)
            touching += class_of_neighbor(nb) == j;
        if (touching == 0)
            throw std::invalid_argument("amalgamate: classes are not adjacent");
        if (touching != 1)
            throw std::invalid_argument("amalgamate: a cell of the first class touches several cells of the second");
    }

    HoneycombReport out;
    out.dim = report.dim;
    out.field = report.field;
    out.lattice_volume = report.lattice_volume;
    out.cells = report.cells;
    out.cell_index = report.cell_index;
    std::vector<std::size_t> remap(k);
    for (std::size_t c = 0, next = 0; c < k; ++c)
        if (c != i)
            remap[c] = next++;
    remap[i] = remap[j];
    for (std::size_t c = 0; c < k; ++c)
        if (c != i)
            out.classes.push_back(report.classes[c]);
    out.cell_class.resize(report.cell_class.size());
    for (std::size_t c = 0; c < report.cell_class.size(); ++c)
        out.cell_class[c] = remap[report.cell_class[c]];

    CellClass& merged = out.classes[remap[j]];
    bool first = true;
    for (auto m : report.classes[j].members) {
        const Cell& cell = report.cells[m];
        std::vector<FieldVec> pts = cell.shape.vertices;
        QuadElem parts = cell.shape.moments.volume;
        for (std::size_t f = 0; f < cell.neighbors.size(); ++f) {
            if (class_of_neighbor(cell.neighbors[f]) != i)
                continue;
            const auto other = h.build_cell(h.neighbor(cell, f));
            if (!other)
                throw std::logic_error("amalgamate: neighbor cell vanished");
            pts.insert(pts.end(), other->shape.vertices.begin(), other->shape.vertices.end());
            parts += other->shape.moments.volume;
        }
        Polytope hull = polytope_from_vertices(pts);
        if (hull.moments.volume != parts)
            throw std::invalid_argument("amalgamate: merged cells are not convex");
        if (first) {
            merged.representative = Cell{cell.id, hull, cell.neighbors};
            merged.fp = fingerprint(hull);
            merged.volume = hull.moments.volume;
            merged.second_moment = hull.moments.second_moment;
            first = false;
        } else if (fingerprint(hull) != merged.fp) {
            throw std::invalid_argument("amalgamate: merged cells are not congruent");
        }
    }
    finish_report(out);
    return out;
}

}  // namespace intersectq
