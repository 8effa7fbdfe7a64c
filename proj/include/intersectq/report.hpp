#ifndef INTERSECTQ_REPORT_HPP
#define INTERSECTQ_REPORT_HPP

#include "intersectq/honeycomb.hpp"
#include "intersectq/mcverify.hpp"

#include <optional>
#include <string>

namespace intersectq {

/**
 * Versioned JSON document ("schema": 1). Exact scalars are canonical strings
 * ("751/9600*w", w = sqrt field_d), each paired with a floating value.
 */
std::string report_json(const std::string& name, const HoneycombReport& report,
                        const std::optional<McResult>& mc = std::nullopt);

/// Class table (v, e, f, N, V, p, U; no edge column in 4-D), incidences, closure and G.
std::string report_text(const std::string& name, const HoneycombReport& report,
                        const std::optional<McResult>& mc = std::nullopt);

}  // namespace intersectq

#endif
