#include "onecenter/plot.hpp"

#include "onecenter/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace onecenter {

namespace {

std::string fmt(double v, const char* spec = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

// Exact rational sample grid strictly inside the arc's validity span.
std::vector<Rat> arc_samples(const Arc& arc, std::size_t n) {
    const Rat w(1, Int("1000000000000"));
    AlgebraicTime s = refine(arc.start, w);
    AlgebraicTime e = refine(arc.end, w);
    const Rat a = s.is_rational() ? s.value() : s.upper();
    const Rat b = e.is_rational() ? e.value() : e.lower();
    std::vector<Rat> out;
    out.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        out.push_back(a + (b - a) * Rat(static_cast<long>(j)) / Rat(static_cast<long>(n)));
    return out;
}

} // namespace

std::string plot_csv(const PiecewiseCenter& pc, std::size_t samples_per_arc) {
    if (pc.dimension != 2) throw ValidationError("plot output requires dimension 2");
    if (samples_per_arc < 1) samples_per_arc = 1;
    std::string out = "t,x,y\n";
    for (std::size_t ai = 0; ai < pc.arcs.size(); ++ai) {
        const Arc& arc = pc.arcs[ai];
        out += "# arc " + std::to_string(ai) + " support=" + arc.support.to_string() + "\n";
        for (const Rat& t : arc_samples(arc, samples_per_arc)) {
            const Point p = arc.curve.eval(t);
            out += fmt(rat_to_double(t));
            out += ",";
            out += fmt(rat_to_double(p.x[0]));
            out += ",";
            out += fmt(rat_to_double(p.x[1]));
            out += "\n";
        }
    }
    return out;
}

std::string plot_svg(const PiecewiseCenter& pc, const std::vector<Point>& statics,
                     const std::vector<RatCurve>& mobiles, std::size_t samples_per_arc) {
    if (pc.dimension != 2) throw ValidationError("plot output requires dimension 2");
    if (samples_per_arc < 1) samples_per_arc = 1;

    struct Path {
        std::vector<std::pair<double, double>> pts;
    };
    std::vector<Path> arc_paths;
    for (const auto& arc : pc.arcs) {
        Path path;
        for (const Rat& t : arc_samples(arc, samples_per_arc)) {
            const Point p = arc.curve.eval(t);
            path.pts.emplace_back(rat_to_double(p.x[0]), rat_to_double(p.x[1]));
        }
        arc_paths.push_back(std::move(path));
    }
    std::vector<Path> mobile_paths;
    for (const auto& m : mobiles) {
        Path path;
        const std::size_t n = std::max<std::size_t>(samples_per_arc * pc.arcs.size(), 32);
        for (std::size_t j = 0; j <= n; ++j) {
            const Rat t = pc.domain.lo +
                          (pc.domain.hi - pc.domain.lo) * Rat(static_cast<long>(j)) / Rat(static_cast<long>(n));
            const Point p = m.eval(t);
            path.pts.emplace_back(rat_to_double(p.x[0]), rat_to_double(p.x[1]));
        }
        mobile_paths.push_back(std::move(path));
    }

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto grow = [&](double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };
    for (const auto& p : statics) grow(rat_to_double(p.x[0]), rat_to_double(p.x[1]));
    for (const auto& path : arc_paths)
        for (const auto& [x, y] : path.pts) grow(x, y);
    for (const auto& path : mobile_paths)
        for (const auto& [x, y] : path.pts) grow(x, y);
    if (xmax <= xmin) xmax = xmin + 1;
    if (ymax <= ymin) ymax = ymin + 1;

    const double width = 800, height = 600, margin = 50;
    const double sx = (width - 2 * margin) / (xmax - xmin);
    const double sy = (height - 2 * margin) / (ymax - ymin);
    const double scale = std::min(sx, sy);
    auto mapx = [&](double x) { return margin + (x - xmin) * scale; };
    auto mapy = [&](double y) { return height - margin - (y - ymin) * scale; };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width, "%.0f") +
                      "\" height=\"" + fmt(height, "%.0f") + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    auto polyline = [&](const Path& path, const std::string& style) {
        std::string s = "<polyline fill=\"none\" " + style + " points=\"";
        for (std::size_t i = 0; i < path.pts.size(); ++i) {
            if (i) s += " ";
            s += fmt(mapx(path.pts[i].first), "%.3f");
            s += ",";
            s += fmt(mapy(path.pts[i].second), "%.3f");
        }
        return s + "\"/>\n";
    };

    for (const auto& path : mobile_paths)
        svg += polyline(path, "stroke=\"#888888\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"");
    static const char* palette[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400", "#16a085"};
    for (std::size_t i = 0; i < arc_paths.size(); ++i) {
        const std::string color = palette[i % 6];
        svg += polyline(arc_paths[i], "stroke=\"" + color + "\" stroke-width=\"2.5\"");
    }
    for (const auto& p : statics) {
        svg += "<circle cx=\"" + fmt(mapx(rat_to_double(p.x[0])), "%.3f") + "\" cy=\"" +
               fmt(mapy(rat_to_double(p.x[1])), "%.3f") + "\" r=\"4\" fill=\"black\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace onecenter
