#include "cupcap/svg.hpp"

#include "cupcap/partition.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace cupcap {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

} // namespace

std::string render_svg(const PointSet& s, const SvgOptions& options) {
    const double width = 800, height = 600, pad = 40;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (!s.empty()) {
        xmin = xmax = s[0].x.to_double();
        ymin = ymax = s[0].y.to_double();
        for (const Point& p : s) {
            xmin = std::min(xmin, p.x.to_double());
            xmax = std::max(xmax, p.x.to_double());
            ymin = std::min(ymin, p.y.to_double());
            ymax = std::max(ymax, p.y.to_double());
        }
    }
    if (xmax - xmin < 1e-12) { xmin -= 1; xmax += 1; }
    if (ymax - ymin < 1e-12) { ymin -= 1; ymax += 1; }
    auto sx = [&](const Point& p) {
        return pad + (p.x.to_double() - xmin) / (xmax - xmin) * (width - 2 * pad);
    };
    auto sy = [&](const Point& p) {
        return height - pad - (p.y.to_double() - ymin) / (ymax - ymin) * (height - 2 * pad);
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    if (!options.overlay.empty()) {
        out << (options.overlay_closed ? "<polygon" : "<polyline") << " points=\"";
        for (std::size_t i = 0; i < options.overlay.size(); ++i) {
            if (i) out << " ";
            out << fmt(sx(options.overlay[i])) << "," << fmt(sy(options.overlay[i]));
        }
        out << "\" fill=\"" << (options.overlay_closed ? "#2f855a22" : "none")
            << "\" stroke=\"#2f855a\" stroke-width=\"2\"/>";
        if (!options.overlay_name.empty()) out << "<!-- overlay: " << options.overlay_name << " -->";
        out << "\n";
    }

    if (s.size() >= 2) {
        Partition part = ul_partition(s);
        for (const Point& p : s) {
            const char* color = part.is_upper(p) ? "#2b6cb0" : "#dd6b20";
            out << "<circle cx=\"" << fmt(sx(p)) << "\" cy=\"" << fmt(sy(p)) << "\" r=\"4\" fill=\""
                << color << "\"/>\n";
        }
    } else {
        for (const Point& p : s)
            out << "<circle cx=\"" << fmt(sx(p)) << "\" cy=\"" << fmt(sy(p))
                << "\" r=\"4\" fill=\"#444444\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace cupcap
