#include "pellfrieze/svg.hpp"

#include "pellfrieze/analysis.hpp"

#include <cmath>
#include <sstream>

namespace pellfrieze {

namespace {

constexpr double kSize = 640.0;
constexpr double kRadius = 270.0;

struct Point {
    double x;
    double y;
};

Point vertex_point(int i, int n) {
    // Vertex 0 on top, indices counterclockwise (y grows downward in SVG).
    const double angle = M_PI / 2.0 + 2.0 * M_PI * i / n;
    return {kSize / 2 + kRadius * std::cos(angle), kSize / 2 - kRadius * std::sin(angle)};
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << v;
    return os.str();
}

void line(std::ostringstream& os, Point a, Point b, const std::string& cls) {
    os << "  <line class=\"" << cls << "\" x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(a.y)
       << "\" x2=\"" << fmt(b.x) << "\" y2=\"" << fmt(b.y) << "\"/>\n";
}

}  // namespace

std::string render_svg(const Dissection& d, const FriezeTable* overlay_units) {
    const int n = d.n();
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
       << kSize << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    os << "  <style>\n"
          "    .boundary { stroke: #333; stroke-width: 1.5; }\n"
          "    .chord { stroke: #1f4e8c; stroke-width: 1.8; }\n"
          "    .overlay { stroke: #c03020; stroke-width: 1.4; stroke-dasharray: 6 4; }\n"
          "    text { font: 15px sans-serif; fill: #222; }\n"
          "    .weight { font: 12px sans-serif; fill: #c03020; }\n"
          "  </style>\n";

    for (int i = 0; i < n; ++i) {
        line(os, vertex_point(i, n), vertex_point((i + 1) % n, n), "boundary");
    }
    for (const Arc& a : d.arcs()) {
        line(os, vertex_point(a.u, n), vertex_point(a.v, n), "chord");
    }
    if (overlay_units != nullptr) {
        for (const Arc& a : analysis::unit_arcs(*overlay_units)) {
            const Point pu = vertex_point(a.u, n);
            const Point pv = vertex_point(a.v, n);
            line(os, pu, pv, "overlay");
            os << "  <text class=\"weight\" x=\"" << fmt((pu.x + pv.x) / 2 + 4) << "\" y=\""
               << fmt((pu.y + pv.y) / 2 - 4) << "\">" << overlay_units->at(a.u, a.v).str()
               << "</text>\n";
        }
    }
    for (int i = 0; i < n; ++i) {
        const Point p = vertex_point(i, n);
        const Point c{kSize / 2, kSize / 2};
        const double dx = p.x - c.x;
        const double dy = p.y - c.y;
        const double len = std::hypot(dx, dy);
        os << "  <circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\"3\"/>\n";
        os << "  <text x=\"" << fmt(p.x + 14 * dx / len - 5) << "\" y=\""
           << fmt(p.y + 14 * dy / len + 5) << "\">" << i << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace pellfrieze
