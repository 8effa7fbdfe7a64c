#include "intersectq/slice.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace intersectq {

namespace {

struct Box {
    std::array<double, 3> lo{}, hi{};
};

Box bounds(const Polytope& p)
{
    Box b;
    b.lo.fill(std::numeric_limits<double>::infinity());
    b.hi.fill(-std::numeric_limits<double>::infinity());
    for (const auto& v : p.vertices)
        for (std::size_t i = 0; i < 3; ++i) {
            const double x = v[i].to_double();
            b.lo[i] = std::min(b.lo[i], x);
            b.hi[i] = std::max(b.hi[i], x);
        }
    return b;
}

const char* const palette[] = {"#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0",
                               "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324", "#fffac8",
                               "#800000", "#aaffc3", "#808000", "#ffd8b1", "#000075", "#808080"};

}  // namespace

std::vector<SlicePolygon> plane_slice(const Honeycomb& h, const HoneycombReport& report, std::size_t axis,
                                      const Rational& c, const SliceWindow& window)
{
    if (report.dim != 3)
        throw std::invalid_argument("plane slices need a three-dimensional honeycomb");
    if (axis > 2)
        throw std::invalid_argument("plane axis must be x, y or z");
    if (window.umin >= window.umax || window.vmin >= window.vmax)
        throw std::invalid_argument("empty slice window");
    const std::size_t u = axis == 0 ? 1 : 0;
    const std::size_t v = axis == 2 ? 1 : 2;

    std::vector<Box> boxes;
    std::vector<QuadElem> top;  // exact largest coordinate along the axis
    Box all;
    all.lo.fill(std::numeric_limits<double>::infinity());
    all.hi.fill(-std::numeric_limits<double>::infinity());
    for (const auto& cell : report.cells) {
        boxes.push_back(bounds(cell.shape));
        QuadElem m = cell.shape.vertices.front()[axis];
        for (const auto& x : cell.shape.vertices)
            if (x[axis] > m)
                m = x[axis];
        top.push_back(m);
        for (std::size_t i = 0; i < 3; ++i) {
            all.lo[i] = std::min(all.lo[i], boxes.back().lo[i]);
            all.hi[i] = std::max(all.hi[i], boxes.back().hi[i]);
        }
    }

    // translations t with (cell + t) possibly meeting the window: t in [target - hi, target - lo]
    const double cz = c.convert_to<double>();
    const QuadElem qc(c);
    std::array<double, 3> tlo{}, thi{};
    tlo[u] = window.umin.convert_to<double>() - all.hi[u];
    thi[u] = window.umax.convert_to<double>() - all.lo[u];
    tlo[v] = window.vmin.convert_to<double>() - all.hi[v];
    thi[v] = window.vmax.convert_to<double>() - all.lo[v];
    tlo[axis] = cz - all.hi[axis];
    thi[axis] = cz - all.lo[axis];

    const Lattice& lat = h.quantizer().intersection();
    const FieldMat& inv = lat.inverse_generator();
    std::array<long long, 3> kmin{}, kmax{};
    kmin.fill(std::numeric_limits<long long>::max());
    kmax.fill(std::numeric_limits<long long>::min());
    for (int corner = 0; corner < 8; ++corner) {
        std::array<double, 3> p{};
        for (std::size_t i = 0; i < 3; ++i)
            p[i] = (corner >> i) & 1 ? thi[i] : tlo[i];
        for (std::size_t j = 0; j < 3; ++j) {
            double k = 0;
            for (std::size_t i = 0; i < 3; ++i)
                k += p[i] * inv(i, j).to_double();
            kmin[j] = std::min(kmin[j], static_cast<long long>(std::floor(k)) - 1);
            kmax[j] = std::max(kmax[j], static_cast<long long>(std::ceil(k)) + 1);
        }
    }

    std::vector<SlicePolygon> out;
    for (long long a = kmin[0]; a <= kmax[0]; ++a)
        for (long long b = kmin[1]; b <= kmax[1]; ++b)
            for (long long d = kmin[2]; d <= kmax[2]; ++d) {
                const FieldVec t = lat.point({a, b, d});
                const auto td = to_double(t);
                for (std::size_t ci = 0; ci < report.cells.size(); ++ci) {
                    const Box& bx = boxes[ci];
                    if (bx.lo[axis] + td[axis] > cz || bx.hi[axis] + td[axis] < cz)
                        continue;
                    if (bx.hi[u] + td[u] < window.umin.convert_to<double>() ||
                        bx.lo[u] + td[u] > window.umax.convert_to<double>() ||
                        bx.hi[v] + td[v] < window.vmin.convert_to<double>() ||
                        bx.lo[v] + td[v] > window.vmax.convert_to<double>())
                        continue;
                    // a cell lying below the plane and touching it along a facet belongs to the other side
                    if (top[ci] + t[axis] == qc)
                        continue;
                    std::vector<Plane> planes;
                    bool empty = false;
                    for (const auto& pl : report.cells[ci].shape.planes) {
                        const QuadElem off = pl.offset + dot(pl.normal, t) - pl.normal[axis] * qc;
                        const FieldVec n2{pl.normal[u], pl.normal[v]};
                        if (is_zero(n2)) {
                            empty = empty || off.sign() < 0;
                            continue;
                        }
                        planes.push_back({n2, off, {}});
                    }
                    if (empty)
                        continue;
                    planes.push_back({{QuadElem(1), QuadElem(0)}, QuadElem(window.umax), {}});
                    planes.push_back({{QuadElem(-1), QuadElem(0)}, QuadElem(-window.umin), {}});
                    planes.push_back({{QuadElem(0), QuadElem(1)}, QuadElem(window.vmax), {}});
                    planes.push_back({{QuadElem(0), QuadElem(-1)}, QuadElem(-window.vmin), {}});
                    const auto poly = polytope_from_halfspaces(std::move(planes), 2);
                    if (!poly)
                        continue;
                    out.push_back({report.cell_class[ci], ci, t, polygon_cycle(*poly), poly->moments.volume});
                }
            }
    return out;
}

std::string slice_to_svg(const std::vector<SlicePolygon>& polygons, const SliceWindow& window, double pixels_per_unit)
{
    const double u0 = window.umin.convert_to<double>(), v1 = window.vmax.convert_to<double>();
    const double width = (window.umax - window.umin).convert_to<double>() * pixels_per_unit;
    const double height = (window.vmax - window.vmin).convert_to<double>() * pixels_per_unit;
    std::ostringstream s;
    s << std::fixed << std::setprecision(3);
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    for (const auto& p : polygons) {
        s << "  <polygon class=\"P" << p.cls + 1 << "\" fill=\"" << palette[p.cls % std::size(palette)]
          << "\" stroke=\"black\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            const double x = (p.vertices[i][0].to_double() - u0) * pixels_per_unit;
            const double y = (v1 - p.vertices[i][1].to_double()) * pixels_per_unit;
            s << (i ? " " : "") << x << ',' << y;
        }
        s << "\"><title>P" << p.cls + 1 << "</title></polygon>\n";
    }
    s << "</svg>\n";
    return s.str();
}

std::pair<std::size_t, Rational> parse_plane(const std::string& spec)
{
    const auto eq = spec.find('=');
    if (eq != 1 || spec.size() < 3)
        throw std::invalid_argument("plane must look like z=<rational>");
    const char a = spec[0];
    std::size_t axis = 0;
    if (a == 'x')
        axis = 0;
    else if (a == 'y')
        axis = 1;
    else if (a == 'z')
        axis = 2;
    else
        throw std::invalid_argument("plane axis must be x, y or z");
    const QuadElem value = parse_scalar(spec.substr(2));
    if (!value.is_rational())
        throw std::invalid_argument("plane value must be rational");
    return {axis, value.rational_part()};
}

}  // namespace intersectq
