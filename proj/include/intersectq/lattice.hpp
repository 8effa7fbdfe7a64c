#ifndef INTERSECTQ_LATTICE_HPP
#define INTERSECTQ_LATTICE_HPP

#include "intersectq/exactmath.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace intersectq {

/**
 * Full-rank lattice in R^n given by a generator matrix whose rows span it.
 *
 * The Gram matrix, |det|, inverse generator and the canonical (Hermite)
 * basis are computed once at construction; instances are immutable.
 */
class Lattice {
public:
    explicit Lattice(FieldMat generator);

    /// scale * Z^n
    static Lattice integer(std::size_t n, long long scale = 1);

    std::size_t dim() const { return gen_.rows(); }
    int field() const { return field_; }
    const FieldMat& generator() const { return gen_; }
    const FieldMat& gram() const { return gram_; }
    /// Volume of a fundamental cell, |det generator|.
    const QuadElem& volume() const { return volume_; }
    const FieldMat& inverse_generator() const { return inv_; }
    /// Hermite-normal-form basis; equal lattices have equal canonical bases.
    const std::vector<FieldVec>& canonical_basis() const { return canonical_; }

    /// Basis coordinates t with t * generator = v.
    FieldVec coordinates(const FieldVec& v) const;
    /// Integer coordinates when v is a lattice vector.
    std::optional<std::vector<Integer>> integer_coordinates(const FieldVec& v) const;
    bool contains(const FieldVec& v) const;
    /// Sublattice test on generators.
    bool contains(const Lattice& sub) const;
    FieldVec point(const std::vector<long long>& coeffs) const;

    Lattice dual() const;
    Lattice scaled(const QuadElem& s) const;
    /// Image under v -> v * m.
    Lattice transformed(const FieldMat& m) const;

    friend bool operator==(const Lattice& x, const Lattice& y);

private:
    FieldMat gen_;
    FieldMat gram_;
    FieldMat inv_;
    QuadElem volume_;
    std::vector<FieldVec> canonical_;
    int field_ = 1;
};

/// Lattice generated by the union of the inputs.
Lattice sum(const std::vector<Lattice>& lattices);
/// Intersection via dual(sum(duals)).
Lattice intersect(const std::vector<Lattice>& lattices);

/// Exact LDL^T factorization of a positive-definite Gram matrix.
struct GramFactor {
    std::vector<QuadElem> diag;
    FieldMat lower;  // unit lower triangular
};
GramFactor ldl(const FieldMat& gram);

using BallVisitor = std::function<void(const std::vector<long long>& coeffs, const QuadElem& dist2)>;

/**
 * Visits every integer vector z with (z - center) G (z - center)^T <= bound,
 * in a deterministic order. All pruning decisions are exact.
 */
void enumerate_ball(const FieldMat& gram, const FieldVec& center, const QuadElem& bound, const BallVisitor& visit);

/// All lattice vectors of norm exactly m, sorted lexicographically.
std::vector<FieldVec> vectors_of_norm(const Lattice& lattice, const QuadElem& m);
QuadElem minimal_norm(const FieldMat& gram);
QuadElem minimal_norm(const Lattice& lattice);
/// Counts of vectors by norm for 0 < norm <= max_norm.
std::map<QuadElem, std::size_t> theta_prefix(const FieldMat& gram, const QuadElem& max_norm);

/// Voronoi-relevant vectors: +-v strictly unique minima of their class mod 2L.
std::vector<FieldVec> relevant_vectors(const Lattice& lattice);

enum class FrameKind { coordinate, a2 };

struct FramePartition {
    std::vector<std::vector<FieldVec>> parts;
};

struct FrameReport {
    bool ok = false;
    std::optional<std::size_t> failing_part;
    std::string reason;
};

/// Checks that `partition` splits the minimal vectors of `lattice` into frames.
FrameReport verify_frame_partition(const Lattice& lattice, const FramePartition& partition, FrameKind kind);
/// Frame predicate for a single part.
bool is_frame(const std::vector<FieldVec>& part, FrameKind kind, std::string* why = nullptr);

enum class ColoringStatus { found, infeasible, timeout };

struct ColoringResult {
    ColoringStatus status = ColoringStatus::infeasible;
    FramePartition partition;
    std::uint64_t nodes = 0;
};

/**
 * Backtracking colour search for a frame partition of `vectors`.
 *
 * Nodes are the orbits of {+-1} (coordinate frames) or of the order-6 unit
 * group generated by -1 and `unit` (A2 frames, v -> v * unit); two nodes
 * conflict when any of their vectors are non-orthogonal. Every colour
 * class must fill a whole frame.
 */
ColoringResult color_partition_search(const std::vector<FieldVec>& vectors, FrameKind kind, std::size_t max_colors,
                                      std::uint64_t budget, const std::optional<FieldMat>& unit = std::nullopt);

struct NormDoublingReport {
    bool maps_into = false;      // T L subset of L
    bool doubles_norm = false;   // (Tu, Tv) = 2 (u, v)
    bool contains_double = false;  // 2L subset of T L
    bool ok() const { return maps_into && doubles_norm && contains_double; }
    std::string message;
};
/// T acts on row vectors as v -> v * T^T.
NormDoublingReport check_norm_doubling(const Lattice& lattice, const FieldMat& t);

struct CountingTerm {
    Integer count;
    Integer divisor;
};
struct CountingIdentityResult {
    bool pass = false;
    Rational sum;
    Rational target;
};
/// Checks sum(count / divisor) == 2^n exactly.
CountingIdentityResult class_counting_identity(const std::vector<CountingTerm>& terms, unsigned n);

/// Binary code given by its full list of codewords.
struct BinaryCode {
    std::size_t length = 0;
    std::vector<std::vector<int>> words;

    static BinaryCode span(std::size_t length, const std::vector<std::vector<int>>& generators);
    bool is_linear() const;
};
BinaryCode intersect_codes(const BinaryCode& a, const BinaryCode& b);
/// {x in Z^n : x mod 2 in C}
Lattice construction_a(const BinaryCode& code);

enum class FrameCountSource { stored_minimal_vectors, minus_product_formula };

struct FrameCount {
    long long value = 0;
    FrameCountSource source = FrameCountSource::stored_minimal_vectors;
    long long minus_product = 0;  // prod_{j<m} (2^j - 1)
    long long plus_product = 0;   // prod_{j<m} (2^j + 1)
    bool conflict = false;        // stored counts disagree with prod (2^j - 1)
};
/// Number of coordinate frames in the minimal vectors of BW_{2^m}.
FrameCount bw_frame_count(unsigned m);

struct SimilarityCertificate {
    bool similar = false;
    QuadElem norm_scale;  // norms of A = norm_scale * norms of B
    std::string reason;
};
/// Determinant plus theta-prefix (norms <= 4 * min) similarity certificate.
SimilarityCertificate similarity_certificate(const FieldMat& gram_a, const FieldMat& gram_b);

/// Lattice file: {"dim": n, "field_d": d, "rows": [["p/q", "p/q+r/s*w", ...], ...]}.
std::string lattice_to_json(const Lattice& lattice, int indent = 2);
Lattice lattice_from_json(const std::string& text);
Lattice read_lattice_file(const std::string& path);

}  // namespace intersectq

#endif
