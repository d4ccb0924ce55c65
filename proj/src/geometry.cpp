#include "ghzsym/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

namespace ghzsym {

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kYMin = -1.0 / (4.0 * kSqrt3);
const double kYMax = kSqrt3 / 4.0;

constexpr double kBoundaryTol = 1e-10; // classify tie band
constexpr double kTriangleTol = 1e-12;

double boundary_x(double v) { return (std::pow(v, 5) + 8.0 * v * v * v) / (8.0 * (4.0 - v * v)); }
double boundary_y(double v) {
    const double v2 = v * v;
    return (kSqrt3 / 4.0) * (4.0 - v2 - v2 * v2) / (4.0 - v2);
}

void check_param(double v) {
    if (!(std::abs(v) <= 1.0 + 1e-12))
        throw Error(Errc::InvalidArgument, "curve parameter must satisfy |v| <= 1");
}

/// Origin-positive normalized tangent functional at point c, as a function
/// of the curve parameter. Smooth through v = 0 where the limiting
/// horizontal line through the apex applies.
double tangent_functional(double v, SymCoords c) {
    if (v == 0.0) return kYMax - c.y;
    const double a = boundary_dy(v);
    const double b = -boundary_dx(v);
    double g = boundary_y(v) * boundary_dx(v) - boundary_x(v) * boundary_dy(v);
    const double n = std::hypot(a, b);
    double f = (a * c.x + b * c.y + g) / n;
    if (g < 0.0) f = -f; // analytically g > 0 for v != 0; keep orientation robust
    return f;
}

/// Grid minimum of f over [-1, 1] with `cells` cells, plus local Newton
/// refinement on the winning cell (numeric derivatives, clamped steps).
double grid_newton_min(const std::function<double(double)>& f, int cells) {
    const double step = 2.0 / cells;
    double best_v = -1.0;
    double best = f(-1.0);
    for (int k = 1; k <= cells; ++k) {
        const double v = (k == cells) ? 1.0 : -1.0 + step * k;
        const double val = f(v);
        if (val < best) {
            best = val;
            best_v = v;
        }
    }

    const double lo = std::max(-1.0, best_v - step);
    const double hi = std::min(1.0, best_v + step);
    double v = best_v;
    const double delta = 1e-6;
    for (int it = 0; it < 30; ++it) {
        const double fp = f(std::min(hi, v + delta));
        const double fm = f(std::max(lo, v - delta));
        const double f0 = f(v);
        const double d1 = (fp - fm) / (2.0 * delta);
        const double d2 = (fp - 2.0 * f0 + fm) / (delta * delta);
        if (!(d2 > 1e-9)) break; // flat or concave: grid value stands
        double next = v - d1 / d2;
        next = std::clamp(next, lo, hi);
        if (std::abs(next - v) < 1e-13) {
            v = next;
            break;
        }
        v = next;
    }
    return std::min(best, f(v));
}

double separable_functional(SymCoords c) {
    return 0.125 - c.y / (2.0 * kSqrt3) - std::abs(c.x);
}

double biseparable_functional(SymCoords c) {
    return 0.75 - 2.0 * std::abs(c.x) - kSqrt3 * c.y;
}

/// Membership in the at-most-W region, with a sound coarse-scan shortcut.
/// The coarse minimum bounds the true minimum from above (subset), deciding
/// clear non-members; the functional's derivative in v is below 0.25 over
/// the triangle, so a coarse minimum above +0.02 (step 0.01) proves
/// membership. Points near the curve take the full prescribed scan.
bool at_most_w(SymCoords c) {
    double coarse = tangent_functional(-1.0, c);
    for (int k = 1; k <= 200; ++k) {
        const double v = (k == 200) ? 1.0 : -1.0 + 0.01 * k;
        coarse = std::min(coarse, tangent_functional(v, c));
    }
    if (coarse < -1e-3) return false;
    if (coarse > 0.02) return true;
    return min_tangent_functional(c) >= -kBoundaryTol;
}

} // namespace

const char* slocc_name(SloccClass c) {
    switch (c) {
        case SloccClass::Separable: return "Separable";
        case SloccClass::Biseparable: return "Biseparable";
        case SloccClass::WClass: return "WClass";
        case SloccClass::GhzClass: return "GhzClass";
    }
    return "Unknown";
}

Line make_line(double alpha, double beta, double gamma) {
    const double n = std::hypot(alpha, beta);
    if (n < 1e-14)
        throw Error(Errc::DegenerateWitness, "line has no direction (alpha = beta = 0)");
    Line l{alpha / n, beta / n, gamma / n};
    if (l.gamma < 0.0) {
        l.alpha = -l.alpha;
        l.beta = -l.beta;
        l.gamma = -l.gamma;
    }
    return l;
}

bool in_triangle(SymCoords c) {
    if (c.y < kYMin - kTriangleTol || c.y > kYMax + kTriangleTol) return false;
    return std::abs(c.x) <= kSqrt3 * c.y / 2.0 + 0.125 + kTriangleTol;
}

SymCoords boundary_point(double v) {
    check_param(v);
    return SymCoords{boundary_x(v), boundary_y(v)};
}

double boundary_dx(double v) {
    const double v2 = v * v;
    const double d = 4.0 - v2;
    return (3.0 / 8.0) * v2 * (8.0 - v2) * (v2 + 4.0) / (d * d);
}

double boundary_dy(double v) {
    const double v2 = v * v;
    const double d = 4.0 - v2;
    return -(kSqrt3 / 2.0) * v * v2 * (8.0 - v2) / (d * d);
}

Line boundary_tangent(double v) {
    check_param(v);
    if (v == 0.0) return Line{0.0, -1.0, kYMax}; // limiting horizontal tangent
    const double a = boundary_dy(v);
    const double b = -boundary_dx(v);
    const double g = boundary_y(v) * boundary_dx(v) - boundary_x(v) * boundary_dy(v);
    return make_line(a, b, g);
}

double min_tangent_functional(SymCoords c) {
    return grid_newton_min([&c](double v) { return tangent_functional(v, c); }, 2000);
}

double min_line_over_region(const Line& l, SloccClass bound) {
    const SymCoords rho_r{0.0, kYMin};
    const SymCoords apex{0.0, kYMax};
    double m;
    switch (bound) {
        case SloccClass::Separable:
            m = std::min({l.value({0.125, 0.0}), l.value({-0.125, 0.0}), l.value(apex),
                          l.value(rho_r)});
            break;
        case SloccClass::Biseparable: {
            const double yb = 1.0 / (4.0 * kSqrt3);
            m = std::min({l.value({0.25, yb}), l.value({-0.25, yb}), l.value(apex),
                          l.value(rho_r)});
            break;
        }
        case SloccClass::WClass: {
            const double curve_min = grid_newton_min(
                [&l](double v) { return l.value(boundary_point(v)); }, 2000);
            m = std::min(curve_min, l.value(rho_r));
            break;
        }
        default:
            throw Error(Errc::InvalidArgument, "no bounded region for GhzClass");
    }
    return m;
}

SloccClass classify(SymCoords c) {
    if (!in_triangle(c)) {
        std::ostringstream os;
        os << "(" << c.x << ", " << c.y << ") is not in the triangle";
        throw Error(Errc::OutsideTriangle, os.str());
    }
    if (separable_functional(c) >= -kBoundaryTol) return SloccClass::Separable;
    if (biseparable_functional(c) >= -kBoundaryTol) return SloccClass::Biseparable;
    if (at_most_w(c)) return SloccClass::WClass;
    return SloccClass::GhzClass;
}

bool is_ppt(SymCoords c) { return separable_functional(c) >= -1e-12; }

bool is_full_rank(SymCoords c) {
    // Spectrum of the symmetric state in closed form: six values
    // (1 - 4y/sqrt3)/8 and the pair sqrt3 y/2 + 1/8 +- x.
    const double middle = (1.0 - 4.0 * c.y / kSqrt3) / 8.0;
    const double corner = kSqrt3 * c.y / 2.0 + 0.125 - std::abs(c.x);
    return middle > 1e-12 && corner > 1e-12;
}

double line_curve_intersection(SymCoords p0, SymCoords p1) {
    const double dx = p1.x - p0.x;
    const double dy = p1.y - p0.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 < 1e-24)
        throw Error(Errc::InvalidArgument, "segment endpoints coincide");

    // Signed position of the curve relative to the segment's line.
    const auto h = [&](double v) {
        const SymCoords b = boundary_point(v);
        return dx * (b.y - p0.y) - dy * (b.x - p0.x);
    };
    const auto dh = [&](double v) { return dx * boundary_dy(v) - dy * boundary_dx(v); };

    constexpr int kCells = 4096;
    std::array<double, kCells + 1> hv{};
    double hmax = 0.0;
    for (int k = 0; k <= kCells; ++k) {
        hv[static_cast<size_t>(k)] = h(static_cast<double>(k) / kCells);
        hmax = std::max(hmax, std::abs(hv[static_cast<size_t>(k)]));
    }
    if (hmax == 0.0) throw Error(Errc::NoCrossing, "segment is degenerate against the curve");
    const double htol = 1e-12 * hmax;

    std::vector<double> roots;
    const auto push_root = [&roots](double v) {
        for (double r : roots)
            if (std::abs(r - v) < 1e-6) return;
        roots.push_back(v);
    };

    for (int k = 0; k < kCells; ++k) {
        const double ha = hv[static_cast<size_t>(k)];
        const double hb = hv[static_cast<size_t>(k + 1)];
        if (!(ha == 0.0) && !(hb == 0.0) && (ha > 0.0) == (hb > 0.0)) continue;
        double lo = static_cast<double>(k) / kCells;
        double hi = static_cast<double>(k + 1) / kCells;
        double flo = ha;
        for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            const double fm = h(mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((fm > 0.0) == (flo > 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        double v = 0.5 * (lo + hi);
        // Newton polish; keep the bisection value on overshoot.
        for (int it = 0; it < 3; ++it) {
            const double d = dh(v);
            if (std::abs(d) < 1e-14) break;
            const double next = v - h(v) / d;
            if (next < lo - 1e-9 || next > hi + 1e-9) break;
            if (std::abs(h(next)) <= std::abs(h(v))) v = next;
        }
        push_root(v);
    }

    // Tangential touch at the scan ends (no sign change), e.g. a segment
    // running along the triangle edge through the curve endpoint.
    if (std::abs(hv[0]) <= htol) push_root(0.0);
    if (std::abs(hv[kCells]) <= htol) push_root(1.0);

    // Keep only roots that lie on the segment itself.
    std::vector<double> on_segment;
    for (double v : roots) {
        const SymCoords b = boundary_point(v);
        const double t = ((b.x - p0.x) * dx + (b.y - p0.y) * dy) / len2;
        if (t < -1e-9 || t > 1.0 + 1e-9) continue;
        const double dist = std::abs(h(v)) / std::sqrt(len2);
        if (dist > 1e-10) continue;
        on_segment.push_back(v);
    }

    if (on_segment.empty())
        throw Error(Errc::NoCrossing, "segment does not cross the boundary curve");
    if (on_segment.size() > 1) {
        std::ostringstream os;
        os << on_segment.size() << " crossings detected";
        throw Error(Errc::AmbiguousCrossing, os.str());
    }
    return on_segment[0];
}

} // namespace ghzsym
