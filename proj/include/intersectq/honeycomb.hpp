#ifndef INTERSECTQ_HONEYCOMB_HPP
#define INTERSECTQ_HONEYCOMB_HPP

#include "intersectq/polytope.hpp"
#include "intersectq/quantize.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace intersectq {

/// Concatenated basis coefficients of the r component points of a cell.
struct CellId {
    std::vector<long long> coeffs;
    friend auto operator<=>(const CellId&, const CellId&) = default;
};

struct Cell {
    CellId id;
    Polytope shape;
    /// Canonical id of the cell across each facet (same order as shape.facets).
    std::vector<CellId> neighbors;
};

/// Congruence invariants used to group cells.
struct Fingerprint {
    std::size_t dim = 0, vertices = 0, edges = 0, facets = 0;
    QuadElem volume;
    std::vector<QuadElem> radii;         // sorted |vertex - centroid|^2
    std::vector<QuadElem> edge_lengths;  // sorted squared edge lengths
    friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const Polytope& p);

/**
 * Positive real number coefficient * prod base^exponent with rational
 * exponents in [0, 1), used for exact G values such as
 * 757/8400 * 2^(1/8) * 3^(1/4).
 */
class PowerProduct {
public:
    PowerProduct() = default;
    explicit PowerProduct(Rational coefficient) : coefficient_(std::move(coefficient)) {}
    /// a or b*sqrt(d); anything else throws.
    static PowerProduct from_monomial(const QuadElem& x);
    /// Reads either rendering of to_text / to_string.
    static PowerProduct parse(std::string_view text);

    PowerProduct pow(const Rational& e) const;
    friend PowerProduct operator*(const PowerProduct& x, const PowerProduct& y);
    friend bool operator==(const PowerProduct&, const PowerProduct&) = default;

    const Rational& coefficient() const { return coefficient_; }
    const std::map<Integer, Rational>& powers() const { return powers_; }
    double value() const;
    /// "757/8400 * 2^(1/8) * 3^(1/4)"
    std::string to_text() const;
    /// "757/8400*2^(1/8)*3^(1/4)"
    std::string to_string() const;

private:
    void absorb(const Integer& base, const Rational& exponent);

    Rational coefficient_{1};
    std::map<Integer, Rational> powers_;
};

struct ClassSummary {
    QuadElem volume;
    QuadElem second_moment;
    Rational probability;
};

struct FigureOfMerit {
    /// sum p_i U_i / V_i: mean squared error of the full quantizer (not yet divided by n)
    QuadElem mse;
    PowerProduct g;
    double g_value = 0;
    double rate = 0;     // bits per dimension from the volume ratios
    double entropy = 0;  // -sum p log2 p
};
FigureOfMerit figure_of_merit(const std::vector<ClassSummary>& classes, const QuadElem& lattice_volume, std::size_t n);

struct CellClass {
    Fingerprint fp;
    Cell representative;
    std::vector<std::size_t> members;  // indices into HoneycombReport::cells
    QuadElem volume;
    QuadElem second_moment;
    Rational probability;
    std::size_t count() const { return members.size(); }
};

struct IncidenceEdge {
    std::size_t i = 0, j = 0;  // class indices, i <= j
    std::size_t s = 0;         // facets of a P_i leading to P_j
    std::size_t t = 0;         // facets of a P_j leading to P_i
};

struct HoneycombReport {
    std::size_t dim = 0;
    int field = 1;
    QuadElem lattice_volume;
    std::vector<CellClass> classes;
    std::vector<IncidenceEdge> incidences;
    std::vector<Cell> cells;                   // every canonical cell, discovery order
    std::vector<std::size_t> cell_class;       // class index per cell
    std::map<CellId, std::size_t> cell_index;  // canonical id -> index into cells
    bool closure_ok = false;                   // sum N_i V_i == V
    bool incidence_ok = false;                 // N_i s_ij == N_j t_ji on every edge
    FigureOfMerit merit;
};

/// Honeycomb of an MDQuantizer: cells are intersections of component Voronoi cells.
class Honeycomb {
public:
    explicit Honeycomb(MDQuantizer quantizer);

    const MDQuantizer& quantizer() const { return q_; }
    std::size_t dim() const { return q_.dim(); }

    /// Translate by the intersection lattice so the first point lies in its fundamental parallelepiped.
    CellId canonical(const CellId& id) const;
    /// Lattice vector t with id = canonical(id) + t.
    FieldVec offset(const CellId& id) const;
    CellId zero_id() const;
    /// Canonical id of the cell containing x.
    CellId id_of(const FieldVec& x) const;
    std::vector<FieldVec> points(const CellId& id) const;

    /// Exact cell for an id (raw or canonical); nullopt when not full-dimensional.
    std::optional<Cell> build_cell(const CellId& id) const;
    /// Id across facet k, not canonicalized.
    CellId neighbor(const Cell& cell, std::size_t facet) const;

    /// Breadth-first closure from the origin cell, modulo the intersection lattice.
    HoneycombReport enumerate(std::size_t budget = 1000000) const;

private:
    MDQuantizer q_;
    std::vector<std::vector<long long>> m_;  // M_i = B B_i^{-1}, row-major
    std::vector<long long> adj1_;            // adjugate of M_1
    long long det1_ = 1;
};

/// Class of the cell containing x (ties broken by the quantizer); nullopt if the cell was never enumerated.
std::optional<std::size_t> class_of_point(const Honeycomb& h, const HoneycombReport& report, const FieldVec& x);

/**
 * Merges every class-j cell with its adjacent class-i cells. Each class-i
 * cell must touch exactly one class-j cell and every merged union must be
 * convex. Indices are 0-based.
 */
HoneycombReport amalgamate(const Honeycomb& h, const HoneycombReport& report, std::size_t i, std::size_t j);

}  // namespace intersectq

#endif
