#ifndef INTERSECTQ_QUANTIZE_HPP
#define INTERSECTQ_QUANTIZE_HPP

#include "intersectq/lattice.hpp"

#include <cstdint>
#include <vector>

namespace intersectq {

/// Halfspace normal . x <= offset.
struct Halfspace {
    FieldVec normal;
    QuadElem offset;
};

/**
 * Closest-point quantizer for one lattice.
 *
 * Rounds basis coordinates (halves down) and searches the coefficient box
 * of half-width `search_radius` around the rounded point. Ties go to the
 * lexicographically smallest coefficient vector.
 */
class Quantizer {
public:
    explicit Quantizer(Lattice lattice, int search_radius = 2);

    const Lattice& lattice() const { return lattice_; }
    int search_radius() const { return radius_; }
    void set_search_radius(int r);

    /// Voronoi-relevant vectors and their basis coefficients, same order.
    const std::vector<FieldVec>& relevant() const { return relevant_; }
    const std::vector<std::vector<long long>>& relevant_coeffs() const { return relevant_coeffs_; }

    std::vector<long long> nearest_coeffs(const FieldVec& x) const;
    FieldVec nearest_point(const FieldVec& x) const;

private:
    Lattice lattice_;
    int radius_;
    std::vector<FieldVec> relevant_;
    std::vector<std::vector<long long>> relevant_coeffs_;
    std::vector<double> chol_diag_;   // float LDL^T of the Gram matrix
    std::vector<double> chol_lower_;  // row-major n x n
};

/// Exhaustive search of the exact ball through the rounded candidate.
std::vector<long long> nearest_coeffs_oracle(const Lattice& lattice, const FieldVec& x);
FieldVec nearest_point_oracle(const Lattice& lattice, const FieldVec& x);

/// Halfspaces (x - p) . w <= (w . w) / 2, one per relevant vector w.
std::vector<Halfspace> voronoi_halfspaces(const Quantizer& q, const FieldVec& p);

/**
 * Checks nearest_point against the oracle on `samples` random rational
 * points and raises the search radius to 3 on any mismatch. Returns the
 * number of mismatches seen at the initial radius.
 */
std::size_t validate_search_radius(Quantizer& q, std::size_t samples, std::uint64_t seed);

/// Random point sum u_i b_i with u_i = k / 2^32 drawn from a counter-based stream.
FieldVec random_lattice_point_region(const Lattice& lattice, std::uint64_t seed, std::uint64_t index,
                                     long long span = 1);

using MDTuple = std::vector<FieldVec>;

/// Simultaneous quantization against every component lattice.
class MDQuantizer {
public:
    explicit MDQuantizer(std::vector<Lattice> components);

    std::size_t dim() const { return intersection_.dim(); }
    int field() const { return field_; }
    const std::vector<Quantizer>& components() const { return quantizers_; }
    std::vector<Quantizer>& components() { return quantizers_; }
    const Lattice& intersection() const { return intersection_; }

    MDTuple quantize(const FieldVec& x) const;
    /// Per-component basis coefficients, concatenated.
    std::vector<long long> quantize_coeffs(const FieldVec& x) const;

private:
    std::vector<Quantizer> quantizers_;
    Lattice intersection_;
    int field_ = 1;
};

/// splitmix64 finalizer applied to a (seed, stream, index) counter.
std::uint64_t counter_random(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

}  // namespace intersectq

#endif
