#include "ghzsym/plot.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ghzsym/error.hpp"

namespace ghzsym {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kYMin = -1.0 / (4.0 * kSqrt3);
const double kYMax = kSqrt3 / 4.0;

const SymCoords kCornerBottom{0.0, kYMin};
const SymCoords kCornerRight{0.5, kYMax};
const SymCoords kCornerLeft{-0.5, kYMax};

// Uniform world-to-viewport map, y pointing up, triangle centered.
constexpr double kWidth = 1000.0;
constexpr double kHeight = 900.0;
constexpr double kMargin = 60.0;
const double kScale = kWidth - 2.0 * kMargin; // world x spans exactly 1
const double kYOffset = (kHeight - kScale * (kYMax - kYMin)) / 2.0;

std::string px(SymCoords c) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f,%.2f", kMargin + (c.x + 0.5) * kScale,
                  kHeight - kYOffset - (c.y - kYMin) * kScale);
    return buf;
}

std::string points_attr(const std::vector<SymCoords>& poly) {
    std::string s;
    for (size_t i = 0; i < poly.size(); ++i) {
        if (i) s += " ";
        s += px(poly[i]);
    }
    return s;
}

std::string line_elem(SymCoords from, SymCoords to, const std::string& style) {
    const std::string a = px(from);
    const std::string b = px(to);
    return "<line x1=\"" + a.substr(0, a.find(',')) + "\" y1=\"" + a.substr(a.find(',') + 1) +
           "\" x2=\"" + b.substr(0, b.find(',')) + "\" y2=\"" + b.substr(b.find(',') + 1) +
           "\" " + style + "/>\n";
}

} // namespace

std::vector<SymCoords> region_polygon(SloccClass cls, int curve_samples) {
    if (curve_samples < 2)
        throw Error(Errc::InvalidArgument, "need at least 2 curve samples");
    std::vector<SymCoords> poly;
    switch (cls) {
        case SloccClass::Separable:
            poly = {kCornerBottom, {0.125, 0.0}, {0.0, kYMax}, {-0.125, 0.0}};
            break;
        case SloccClass::Biseparable: {
            const double yb = 1.0 / (4.0 * kSqrt3);
            poly = {kCornerBottom, {0.25, yb}, {0.0, kYMax}, {-0.25, yb}};
            break;
        }
        case SloccClass::WClass:
            poly.push_back(kCornerBottom);
            for (int k = 0; k < curve_samples; ++k) {
                const double v = 1.0 - 2.0 * k / (curve_samples - 1);
                poly.push_back(boundary_point(v));
            }
            break;
        case SloccClass::GhzClass:
            poly = {kCornerBottom, kCornerRight, kCornerLeft};
            break;
    }
    return poly;
}

double polygon_area(const std::vector<SymCoords>& poly) {
    double twice = 0.0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const SymCoords& p = poly[i];
        const SymCoords& q = poly[(i + 1) % poly.size()];
        twice += p.x * q.y - q.x * p.y;
    }
    return 0.5 * twice;
}

std::optional<std::pair<SymCoords, SymCoords>> clip_line_to_triangle(const Line& l) {
    const SymCoords corners[3] = {kCornerBottom, kCornerRight, kCornerLeft};
    std::vector<SymCoords> hits;
    for (int e = 0; e < 3; ++e) {
        const SymCoords p = corners[e];
        const SymCoords q = corners[(e + 1) % 3];
        const double fp = l.value(p);
        const double fq = l.value(q);
        if (fp == 0.0 && fq == 0.0) return std::make_pair(p, q); // line contains the edge
        if ((fp > 0.0 && fq > 0.0) || (fp < 0.0 && fq < 0.0)) continue;
        const double t = fp / (fp - fq);
        hits.push_back(SymCoords{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
    // Dedupe corner touches.
    std::vector<SymCoords> distinct;
    for (const SymCoords& h : hits) {
        bool seen = false;
        for (const SymCoords& d : distinct)
            seen = seen || (std::abs(d.x - h.x) < 1e-12 && std::abs(d.y - h.y) < 1e-12);
        if (!seen) distinct.push_back(h);
    }
    if (distinct.size() < 2) return std::nullopt;
    return std::make_pair(distinct[0], distinct[1]);
}

std::string render_svg(const PlotOptions& opts) {
    const int n = std::max(opts.curve_samples, 512);
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"1000\" height=\"900\" viewBox=\"0 0 1000 900\">\n";
    svg << "<rect width=\"1000\" height=\"900\" fill=\"#ffffff\"/>\n";

    // Regions back to front; each layer covers the classes above it.
    struct Layer {
        SloccClass cls;
        const char* fill;
    };
    const Layer layers[4] = {{SloccClass::GhzClass, "#c8c8c8"},
                             {SloccClass::WClass, "#f4e04d"},
                             {SloccClass::Biseparable, "#79c979"},
                             {SloccClass::Separable, "#6b8fe3"}};
    for (const Layer& layer : layers)
        svg << "<polygon points=\"" << points_attr(region_polygon(layer.cls, n))
            << "\" fill=\"" << layer.fill << "\" stroke=\"none\"/>\n";

    // Boundary curve on top of the fills.
    std::vector<SymCoords> curve;
    curve.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        curve.push_back(boundary_point(-1.0 + 2.0 * k / (n - 1)));
    svg << "<polyline points=\"" << points_attr(curve)
        << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"2\"/>\n";

    svg << "<polygon points=\""
        << points_attr({kCornerBottom, kCornerRight, kCornerLeft})
        << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";

    if (opts.pseudo_pure)
        svg << line_elem({0.0, 0.0}, kCornerRight, "stroke=\"#ff00ff\" stroke-width=\"3\"");

    for (const Line& l : opts.lines) {
        const auto chord = clip_line_to_triangle(l);
        if (!chord) continue;
        svg << line_elem(chord->first, chord->second,
                         "stroke=\"#444444\" stroke-width=\"2\" stroke-dasharray=\"8 5\"");
    }

    for (const SymCoords& m : opts.markers) {
        const std::string p = px(m);
        svg << "<circle cx=\"" << p.substr(0, p.find(',')) << "\" cy=\""
            << p.substr(p.find(',') + 1)
            << "\" r=\"6\" fill=\"#dd2222\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace ghzsym
