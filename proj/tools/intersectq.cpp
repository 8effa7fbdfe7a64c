// Command-line front end: catalog checks, lattice intersections, honeycomb
// analysis, quantization, plane slices and class amalgamation.

#include "intersectq/catalog.hpp"
#include "intersectq/honeycomb.hpp"
#include "intersectq/mcverify.hpp"
#include "intersectq/report.hpp"
#include "intersectq/slice.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace intersectq;

namespace {

// Bad input that is not a verification failure: exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_catalog_name(const std::string& s)
{
    const auto& names = catalog_names();
    return std::find(names.begin(), names.end(), s) != names.end();
}

std::vector<Lattice> load_components(const std::vector<std::string>& sources)
{
    if (sources.size() == 1 && is_catalog_name(sources[0]))
        return catalog_get(sources[0]).components;
    std::vector<Lattice> out;
    for (const auto& path : sources) {
        if (!std::filesystem::exists(path))
            throw UsageError("'" + path + "' is neither a catalog name nor a lattice file");
        try {
            out.push_back(read_lattice_file(path));
        } catch (const std::exception& e) {
            throw UsageError(path + ": " + e.what());
        }
    }
    return out;
}

std::string label(const std::vector<std::string>& sources)
{
    if (sources.size() == 1)
        return sources[0];
    std::string s;
    for (const auto& p : sources)
        s += (s.empty() ? "" : "+") + std::filesystem::path(p).stem().string();
    return s;
}

std::vector<QuadElem> parse_list(const std::string& text, int field, std::size_t want, const char* what)
{
    std::vector<QuadElem> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_scalar(item, field));
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": cannot read '" + item + "'");
        }
    }
    if (want && out.size() != want)
        throw UsageError(std::string(what) + ": expected " + std::to_string(want) + " comma-separated values, got " +
                         std::to_string(out.size()));
    return out;
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw UsageError("cannot write " + path);
    f << text;
}

std::string vec_text(const FieldVec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + to_text(v[i]);
    return s + ")";
}

std::string vec_string(const FieldVec& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + to_string(v[i]);
    return s;
}

int run_catalog_verify(const std::string& format)
{
    const auto items = verify_all();
    bool failed = false;
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["schema"] = 1;
        auto& arr = doc["checks"] = nlohmann::ordered_json::array();
        for (const auto& it : items)
            arr.push_back({{"name", it.name}, {"status", to_string(it.status)}, {"detail", it.detail}});
        std::cout << doc.dump(2) << "\n";
    }
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& it : items) {
        failed = failed || it.status == CheckStatus::fail;
        ++counts[static_cast<int>(it.status)];
        if (format != "json")
            std::cout << to_string(it.status) << "  " << it.name << (it.detail.empty() ? "" : ": " + it.detail) << "\n";
    }
    if (format != "json")
        std::cout << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " warnings\n";
    return failed ? 1 : 0;
}

int run_intersect(const std::vector<std::string>& files, const std::string& out)
{
    const auto comps = load_components(files);
    const Lattice meet = intersect(comps);
    write_output(out, lattice_to_json(meet) + "\n");
    std::cerr << "intersection of " << comps.size() << " lattices: dimension " << meet.dim() << ", volume "
              << to_text(meet.volume()) << "\n";
    return 0;
}

int run_analyze(const std::vector<std::string>& sources, const std::string& format, std::size_t mc_samples,
                std::uint64_t seed, std::size_t max_cells, const std::string& out)
{
    const Honeycomb h{MDQuantizer(load_components(sources))};
    const auto report = h.enumerate(max_cells);
    std::optional<McResult> mc;
    if (mc_samples > 0)
        mc = mc_verify(h, report, {seed, mc_samples});
    const std::string name = label(sources);
    write_output(out, format == "json" ? report_json(name, report, mc) : report_text(name, report, mc));
    const bool ok = report.closure_ok && report.incidence_ok && (!mc || mc_within(*mc));
    return ok ? 0 : 1;
}

int run_quantize(const std::vector<std::string>& sources, const std::string& point, bool with_cell,
                 std::size_t max_cells)
{
    const MDQuantizer md(load_components(sources));
    const FieldVec x = parse_list(point, md.field(), md.dim(), "--point");
    const auto tuple = md.quantize(x);
    for (std::size_t i = 0; i < tuple.size(); ++i)
        std::cout << "component " << i + 1 << ": " << vec_text(tuple[i]) << "  [" << vec_string(tuple[i]) << "]\n";
    if (with_cell) {
        const Honeycomb h{md};
        const auto report = h.enumerate(max_cells);
        const auto cls = class_of_point(h, report, x);
        if (!cls)
            throw std::runtime_error("point lies in no enumerated cell");
        std::cout << "cell class: P" << *cls + 1 << "\n";
    }
    return 0;
}

int run_slice(const std::vector<std::string>& sources, const std::string& plane, const std::string& window_text,
              double px, std::size_t max_cells, const std::string& out)
{
    std::pair<std::size_t, Rational> pl;
    try {
        pl = parse_plane(plane);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--plane: ") + e.what());
    }
    const auto w = parse_list(window_text, 1, 4, "--window");
    for (const auto& v : w)
        if (!v.is_rational())
            throw UsageError("--window values must be rational");
    const SliceWindow window{w[0].rational_part(), w[1].rational_part(), w[2].rational_part(), w[3].rational_part()};
    if (window.umin >= window.umax || window.vmin >= window.vmax)
        throw UsageError("--window must be umin,umax,vmin,vmax with umin < umax and vmin < vmax");
    const Honeycomb h{MDQuantizer(load_components(sources))};
    if (h.dim() != 3)
        throw UsageError("slices need a three-dimensional honeycomb");
    const auto report = h.enumerate(max_cells);
    const auto polys = plane_slice(h, report, pl.first, pl.second, window);
    write_output(out, slice_to_svg(polys, window, px));
    std::set<std::size_t> classes;
    for (const auto& p : polys)
        classes.insert(p.cls);
    std::cerr << polys.size() << " polygons, classes:";
    for (auto c : classes)
        std::cerr << " P" << c + 1;
    std::cerr << "\n";
    return 0;
}

int run_amalgamate(const std::vector<std::string>& sources, const std::string& merge, const std::string& format,
                   std::size_t max_cells)
{
    const auto ij = parse_list(merge, 1, 2, "--merge");
    std::size_t idx[2];
    for (int k = 0; k < 2; ++k) {
        if (!ij[k].is_rational() || !is_integer(ij[k]) || ij[k].sign() <= 0)
            throw UsageError("--merge takes two positive class numbers, e.g. 3,4");
        idx[k] = ij[k].rational_part().convert_to<std::size_t>() - 1;
    }
    const Honeycomb h{MDQuantizer(load_components(sources))};
    const auto report = h.enumerate(max_cells);
    HoneycombReport merged;
    try {
        merged = amalgamate(h, report, idx[0], idx[1]);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const std::string name = label(sources) + " with P" + std::to_string(idx[0] + 1) + "+P" +
                             std::to_string(idx[1] + 1) + " merged";
    std::cout << (format == "json" ? report_json(name, merged) : report_text(name, merged));
    if (format != "json")
        std::cout << "G before merging " << report.merit.g.to_text() << " ≈ " << report.merit.g_value << "\n";
    return merged.closure_ok ? 0 : 1;
}

int run_catalog_dump(const std::string& name, const std::string& dir)
{
    if (!is_catalog_name(name))
        throw UsageError("unknown catalog entry '" + name + "'");
    const auto d = catalog_get(name);
    if (dir.empty()) {
        nlohmann::ordered_json doc;
        doc["name"] = d.name;
        doc["description"] = d.description;
        doc["field_d"] = d.field_d;
        auto& comps = doc["components"] = nlohmann::ordered_json::array();
        for (const auto& c : d.components)
            comps.push_back(nlohmann::ordered_json::parse(lattice_to_json(c)));
        doc["expected_name"] = d.expected_name;
        doc["expected"] = nlohmann::ordered_json::parse(lattice_to_json(Lattice(d.expected)));
        doc["up_to_similarity"] = d.up_to_similarity;
        if (!d.symbolic.empty())
            doc["symbolic"] = d.symbolic;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < d.components.size(); ++i)
        write_output(dir + "/" + name + "_" + std::to_string(i + 1) + ".json", lattice_to_json(d.components[i]) + "\n");
    write_output(dir + "/" + name + "_expected.json", lattice_to_json(Lattice(d.expected)) + "\n");
    std::cerr << "wrote " << d.components.size() + 1 << " lattice files to " << dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact lattice intersections and multiple-description honeycombs"};
    app.require_subcommand(1);

    std::string format = "text", out, plane, window = "-3,9,-6,6", point, merge, dir;
    std::vector<std::string> sources;
    std::size_t mc_samples = 0, max_cells = 1000000;
    std::uint64_t seed = 1;
    double px = 60;
    bool with_cell = false;

    auto* verify = app.add_subcommand("catalog-verify", "check every stored decomposition, partition and identity");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* inter = app.add_subcommand("intersect", "intersect lattices given as files");
    inter->add_option("files", sources, "lattice files")->required();
    inter->add_option("-o,--out", out, "output file (default stdout)");

    auto add_budget = [&](CLI::App* c) {
        c->add_option("--max-cells", max_cells, "enumeration budget")->check(CLI::PositiveNumber);
    };

    auto* an = app.add_subcommand("analyze", "enumerate a honeycomb and report its cell classes");
    an->add_option("sources", sources, "catalog name or lattice files")->required();
    an->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    an->add_option("--mc-samples", mc_samples, "Monte Carlo samples (0 = none)");
    an->add_option("--seed", seed);
    an->add_option("-o,--out", out);
    add_budget(an);

    auto* rep = app.add_subcommand("report", "same as analyze, JSON by default");
    rep->add_option("sources", sources, "catalog name or lattice files")->required();
    rep->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    rep->add_option("--mc-samples", mc_samples);
    rep->add_option("--seed", seed);
    rep->add_option("-o,--out", out);
    add_budget(rep);

    auto* qu = app.add_subcommand("quantize", "nearest point in every component lattice");
    qu->add_option("sources", sources, "catalog name or lattice files")->required();
    qu->add_option("--point", point, "comma-separated exact coordinates, e.g. 1/3,0.35")->required();
    qu->add_flag("--cell", with_cell, "also report the honeycomb cell class");
    add_budget(qu);

    auto* sl = app.add_subcommand("slice", "SVG cross-section of a 3-D honeycomb");
    sl->add_option("sources", sources, "catalog name or lattice files")->required();
    sl->add_option("--plane", plane, "e.g. z=0 or z=7/20")->required();
    sl->add_option("--window", window, "umin,umax,vmin,vmax in the plane coordinates");
    sl->add_option("--px", px, "pixels per unit")->check(CLI::PositiveNumber);
    sl->add_option("-o,--out", out);
    add_budget(sl);

    auto* am = app.add_subcommand("amalgamate", "merge two adjacent cell classes and recompute G");
    am->add_option("sources", sources, "catalog name or lattice files")->required();
    am->add_option("--merge", merge, "class numbers i,j (1-based)")->required();
    am->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    add_budget(am);

    std::string dump_name;
    auto* dump = app.add_subcommand("catalog-dump", "write a catalog entry as lattice files");
    dump->add_option("name", dump_name)->required();
    dump->add_option("--dir", dir, "directory for one file per lattice (default: one JSON document on stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (rep->parsed() && rep->get_option("--format")->count() == 0)
        format = "json";

    try {
        if (verify->parsed())
            return run_catalog_verify(format);
        if (inter->parsed())
            return run_intersect(sources, out);
        if (an->parsed() || rep->parsed())
            return run_analyze(sources, format, mc_samples, seed, max_cells, out);
        if (qu->parsed())
            return run_quantize(sources, point, with_cell, max_cells);
        if (sl->parsed())
            return run_slice(sources, plane, window, px, max_cells, out);
        if (am->parsed())
            return run_amalgamate(sources, merge, format, max_cells);
        if (dump->parsed())
            return run_catalog_dump(dump_name, dir);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
