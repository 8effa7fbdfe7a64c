#include "intersectq/mcverify.hpp"

#include "intersectq/parallel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace intersectq {

namespace {

McEstimate estimate(double mean, double std_error, double exact)
{
    McEstimate e{mean, std_error, exact, 0};
    if (std_error > 0)
        e.z = (mean - exact) / std_error;
    else if (mean != exact)
        e.z = std::copysign(std::numeric_limits<double>::infinity(), mean - exact);
    return e;
}

McResult summarize(const HoneycombReport& report, const McConfig& config, const McSamples& s, bool probs, bool mse)
{
    McResult r;
    r.config = config;
    const double n = static_cast<double>(s.cls.size());
    if (probs) {
        std::vector<std::size_t> hits(report.classes.size());
        for (auto c : s.cls)
            ++hits[c];
        for (std::size_t i = 0; i < hits.size(); ++i) {
            const double exact = report.classes[i].probability.convert_to<double>();
            const double f = static_cast<double>(hits[i]) / n;
            // binomial error at the observed frequency, falling back to the exact p when nothing was hit
            const double p = hits[i] == 0 || hits[i] == s.cls.size() ? exact : f;
            r.probabilities.push_back(estimate(f, std::sqrt(p * (1 - p) / n), exact));
        }
    }
    if (mse) {
        const double dim = static_cast<double>(report.dim);
        double sum = 0;
        for (double d : s.dist2)
            sum += d / dim;
        const double mean = sum / n;
        double var = 0;
        for (double d : s.dist2)
            var += (d / dim - mean) * (d / dim - mean);
        var /= n > 1 ? n - 1 : 1;
        r.mse = estimate(mean, std::sqrt(var / n), report.merit.mse.to_double() / dim);
    }
    return r;
}

}  // namespace

McSamples mc_sample(const Honeycomb& h, const HoneycombReport& report, const McConfig& config)
{
    if (config.samples == 0)
        throw std::invalid_argument("Monte Carlo run needs at least one sample");
    const Lattice& lat = h.quantizer().intersection();
    McSamples s;
    s.cls.resize(config.samples);
    s.dist2.resize(config.samples);
    parallel_for(config.samples, [&](std::size_t i) {
        const FieldVec x = random_lattice_point_region(lat, config.seed, i);
        const CellId id{h.quantizer().quantize_coeffs(x)};
        const auto it = report.cell_index.find(h.canonical(id));
        if (it == report.cell_index.end())
            throw std::runtime_error("sample " + std::to_string(i) + " lies in no enumerated cell");
        s.cls[i] = report.cell_class[it->second];
        const FieldVec centroid = report.cells[it->second].shape.moments.centroid + h.offset(id);
        s.dist2[i] = norm(x - centroid).to_double();
    });
    return s;
}

McResult estimate_probabilities(const Honeycomb& h, const HoneycombReport& report, const McConfig& config)
{
    return summarize(report, config, mc_sample(h, report, config), true, false);
}

McResult estimate_mse(const Honeycomb& h, const HoneycombReport& report, const McConfig& config)
{
    return summarize(report, config, mc_sample(h, report, config), false, true);
}

McResult mc_verify(const Honeycomb& h, const HoneycombReport& report, const McConfig& config)
{
    return summarize(report, config, mc_sample(h, report, config), true, true);
}

bool mc_within(const McResult& r, double bound)
{
    for (const auto& p : r.probabilities)
        if (!(std::abs(p.z) <= bound))
            return false;
    return std::abs(r.mse.z) <= bound;
}

}  // namespace intersectq
