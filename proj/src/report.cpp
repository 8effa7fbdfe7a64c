#include "intersectq/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace intersectq {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json exact(const QuadElem& x)
{
    return {{"exact", to_string(x)}, {"value", x.to_double()}};
}

ordered_json exact(const Rational& x)
{
    return exact(QuadElem(x));
}

ordered_json estimate(const McEstimate& e)
{
    return {{"estimate", e.estimate}, {"std_error", e.std_error}, {"exact", e.exact}, {"z", e.z}};
}

QuadElem closure_sum(const HoneycombReport& r)
{
    QuadElem s;
    for (const auto& c : r.classes)
        s += QuadElem(static_cast<long long>(c.count())) * c.volume;
    return s;
}

std::string fixed(double x, int digits = 6)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << x;
    return os.str();
}

std::string with_value(const QuadElem& x)
{
    return to_text(x) + " (" + fixed(x.to_double()) + ")";
}

std::string field_name(int d)
{
    return d == 1 ? "Q" : "Q(sqrt" + std::to_string(d) + ")";
}

}  // namespace

std::string report_json(const std::string& name, const HoneycombReport& report, const std::optional<McResult>& mc)
{
    ordered_json doc;
    doc["schema"] = 1;
    doc["name"] = name;
    doc["dim"] = report.dim;
    doc["field_d"] = report.field;
    doc["lattice_volume"] = exact(report.lattice_volume);
    doc["cells"] = report.cells.size();
    ordered_json classes = ordered_json::array();
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        const auto& c = report.classes[i];
        ordered_json row;
        row["index"] = i + 1;
        row["vertices"] = c.fp.vertices;
        if (report.dim <= 3)
            row["edges"] = c.fp.edges;
        row["facets"] = c.fp.facets;
        row["count"] = c.count();
        row["volume"] = exact(c.volume);
        row["probability"] = exact(c.probability);
        row["second_moment"] = exact(c.second_moment);
        ordered_json verts = ordered_json::array();
        for (const auto& v : c.representative.shape.vertices) {
            ordered_json p = ordered_json::array();
            for (const auto& x : v)
                p.push_back(to_string(x));
            verts.push_back(p);
        }
        row["representative_vertices"] = verts;
        classes.push_back(row);
    }
    doc["classes"] = classes;
    ordered_json inc = ordered_json::array();
    for (const auto& e : report.incidences)
        inc.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"s", e.s}, {"t", e.t}});
    doc["incidences"] = inc;
    doc["closure"] = {{"sum", exact(closure_sum(report))}, {"ok", report.closure_ok}};
    doc["incidence_ok"] = report.incidence_ok;
    doc["merit"] = {{"mse", exact(report.merit.mse)},
                    {"g", {{"exact", report.merit.g.to_string()}, {"value", report.merit.g_value}}},
                    {"rate", report.merit.rate},
                    {"entropy", report.merit.entropy}};
    if (mc) {
        ordered_json v;
        v["rng"] = mc_rng_name;
        v["seed"] = mc->config.seed;
        v["samples"] = mc->config.samples;
        ordered_json probs = ordered_json::array();
        for (const auto& p : mc->probabilities)
            probs.push_back(estimate(p));
        v["probabilities"] = probs;
        v["mse_per_dimension"] = estimate(mc->mse);
        v["within_3_sigma"] = mc_within(*mc);
        doc["verification"] = v;
    }
    return doc.dump(2) + "\n";
}

std::string report_text(const std::string& name, const HoneycombReport& report, const std::optional<McResult>& mc)
{
    std::ostringstream os;
    os << "honeycomb " << name << ": dimension " << report.dim << ", field " << field_name(report.field) << ", "
       << report.classes.size() << " classes, " << report.cells.size() << " cells per fundamental domain\n";
    os << "fundamental volume " << with_value(report.lattice_volume) << "\n\n";

    const bool edges = report.dim <= 3;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"P", "v"};
    if (edges)
        head.push_back("e");
    for (const char* h : {"f", "N", "V", "p", "U"})
        head.push_back(h);
    rows.push_back(head);
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        const auto& c = report.classes[i];
        std::vector<std::string> row{"P" + std::to_string(i + 1), std::to_string(c.fp.vertices)};
        if (edges)
            row.push_back(std::to_string(c.fp.edges));
        row.push_back(std::to_string(c.fp.facets));
        row.push_back(std::to_string(c.count()));
        row.push_back(with_value(c.volume));
        row.push_back(with_value(QuadElem(c.probability)));
        row.push_back(with_value(c.second_moment));
        rows.push_back(row);
    }
    std::vector<std::size_t> width(head.size());
    for (const auto& r : rows)
        for (std::size_t k = 0; k < r.size(); ++k)
            width[k] = std::max(width[k], r[k].size());
    for (const auto& r : rows) {
        for (std::size_t k = 0; k < r.size(); ++k) {
            // counts right-aligned, exact values left-aligned
            const bool right = k > 0 && k < head.size() - 3;
            const bool last = k + 1 == r.size();
            os << (k ? "  " : "") << (right ? std::right : std::left)
               << std::setw(last ? 0 : static_cast<int>(width[k])) << r[k];
        }
        os << "\n";
    }

    os << "\nincidences (s: facets of P_i leading to P_j, t: facets of P_j leading to P_i)\n";
    for (const auto& e : report.incidences)
        os << "  P" << e.i + 1 << " - P" << e.j + 1 << ": s = " << e.s << ", t = " << e.t << "\n";
    os << "incidence double counting " << (report.incidence_ok ? "ok" : "FAILED") << "\n";
    os << "sum N_i V_i = " << to_text(closure_sum(report)) << " (fundamental volume "
       << to_text(report.lattice_volume) << ", " << (report.closure_ok ? "ok" : "FAILED") << ")\n\n";

    os << "mean squared error sum p_i U_i / V_i = " << with_value(report.merit.mse) << "\n";
    os << "rate " << fixed(report.merit.rate, 4) << " bits/dim, class entropy " << fixed(report.merit.entropy, 4)
       << " bits\n";
    os << "G = " << report.merit.g.to_text() << " ≈ " << fixed(report.merit.g_value) << "\n";

    if (mc) {
        os << "\nMonte Carlo check (" << mc_rng_name << ", seed " << mc->config.seed << ", " << mc->config.samples
           << " samples)\n";
        for (std::size_t i = 0; i < mc->probabilities.size(); ++i) {
            const auto& p = mc->probabilities[i];
            os << "  p" << i + 1 << ": " << fixed(p.estimate) << " ± " << fixed(p.std_error) << "  exact "
               << fixed(p.exact) << "  z = " << fixed(p.z, 2) << "\n";
        }
        os << "  MSE/dim: " << fixed(mc->mse.estimate) << " ± " << fixed(mc->mse.std_error) << "  exact "
           << fixed(mc->mse.exact) << "  z = " << fixed(mc->mse.z, 2) << "\n";
        os << "  " << (mc_within(*mc) ? "all estimates within 3 standard errors" : "SOME ESTIMATES OUTSIDE 3 SIGMA")
           << "\n";
    }
    return os.str();
}

}  // namespace intersectq
