#ifndef INTERSECTQ_MCVERIFY_HPP
#define INTERSECTQ_MCVERIFY_HPP

#include "intersectq/honeycomb.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace intersectq {

/// Name of the sample generator, recorded in reports.
inline constexpr const char* mc_rng_name = "splitmix64-counter";

/**
 * Samples are x = sum u_i b_i over a basis of the intersection lattice,
 * u_i = k / 2^32 from counter_random(seed, i, index), so every point is
 * exact and each index can be drawn independently.
 */
struct McConfig {
    std::uint64_t seed = 1;
    std::size_t samples = 100000;
};

struct McEstimate {
    double estimate = 0;
    double std_error = 0;
    double exact = 0;
    double z = 0;  // (estimate - exact) / std_error
};

struct McResult {
    McConfig config;
    std::vector<McEstimate> probabilities;  // one per class
    McEstimate mse;                         // per dimension
};

/// Class index and squared distance to that cell's centroid for every sample.
struct McSamples {
    std::vector<std::size_t> cls;
    std::vector<double> dist2;
};

/// Throws std::invalid_argument for zero samples and std::runtime_error for a point outside every enumerated class.
McSamples mc_sample(const Honeycomb& h, const HoneycombReport& report, const McConfig& config);

McResult estimate_probabilities(const Honeycomb& h, const HoneycombReport& report, const McConfig& config);
McResult estimate_mse(const Honeycomb& h, const HoneycombReport& report, const McConfig& config);
/// Both estimates from one pass over the samples.
McResult mc_verify(const Honeycomb& h, const HoneycombReport& report, const McConfig& config);

/// True when every |z| <= bound.
bool mc_within(const McResult& r, double bound = 3);

}  // namespace intersectq

#endif
