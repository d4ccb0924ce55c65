#include "ghzsym/witness.hpp"

#include <cmath>
#include <sstream>

namespace ghzsym {

namespace {

const double kSqrt3 = std::sqrt(3.0);

void check_coeffs(const Witness& w) {
    if (!(std::isfinite(w.a) && std::isfinite(w.b) && std::isfinite(w.c)))
        throw Error(Errc::InvalidArgument, "witness coefficients must be finite");
    if (!(w.a + (w.b + w.c) / 8.0 > 0.0))
        throw Error(Errc::SignConvention, "witness must be positive at the maximally mixed state");
}

void check_line(const MixingLine& line) {
    if (!in_triangle(line.noise) || !in_triangle(line.target))
        throw Error(Errc::OutsideTriangle, "mixing line endpoints must lie in the triangle");
    const double dx = line.target.x - line.noise.x;
    const double dy = line.target.y - line.noise.y;
    if (dx * dx + dy * dy < 1e-24)
        throw Error(Errc::InvalidArgument, "mixing line endpoints coincide");
}

SymCoords lerp(const MixingLine& line, double p) {
    return SymCoords{(1.0 - p) * line.noise.x + p * line.target.x,
                     (1.0 - p) * line.noise.y + p * line.target.y};
}

} // namespace

double expectation_sym(const Witness& w, SymCoords c) {
    return (w.b - w.c) * c.x + (kSqrt3 / 2.0) * (w.b + w.c) * c.y + w.a + (w.b + w.c) / 8.0;
}

Matrix8 to_matrix(const Witness& w) {
    Matrix8 m = w.a * Matrix8::identity();
    m += w.b * ghz_plus_projector();
    m += w.c * ghz_minus_projector();
    return m;
}

Line zero_line(const Witness& w) {
    return make_line(w.b - w.c, kSqrt3 * (w.b + w.c) / 2.0, w.a + (w.b + w.c) / 8.0);
}

Witness witness_from_line(const Line& l, SloccClass bound) {
    const Line n = make_line(l.alpha, l.beta, l.gamma);
    const double m = min_line_over_region(n, bound);
    if (m < -1e-9) {
        std::ostringstream os;
        os << "zero line cuts " << std::abs(m) << " into the nonnegative region";
        throw Error(Errc::LineCrossesUninteresting, os.str());
    }
    const double sum = 2.0 * n.beta / kSqrt3; // b + c
    Witness w;
    w.b = (n.alpha + sum) / 2.0;
    w.c = (sum - n.alpha) / 2.0;
    w.a = n.gamma - sum / 8.0;
    check_coeffs(w);
    return w;
}

Witness bisep_sep_witness() { return Witness{1.0, -4.0, 2.0}; }

Witness genuine_witness() { return Witness{0.5, -1.0, 0.0}; }

Witness projection_witness() { return Witness{0.75, -1.0, 0.0}; }

Witness ghz_tangent_witness(double v0) {
    if (!(std::abs(v0) <= 1.0 + 1e-12))
        throw Error(Errc::InvalidArgument, "tangency parameter must satisfy |v0| <= 1");
    return Witness{0.75, -3.0 / (v0 * v0 - 2.0 * v0 + 4.0), -3.0 / (v0 * v0 + 2.0 * v0 + 4.0)};
}

Witness mirror(const Witness& w) { return Witness{w.a, w.c, w.b}; }

bool detects(const Witness& w, const DensityMatrix& rho) {
    return expectation(to_matrix(w), rho) < 0.0;
}

double detection_threshold(const Witness& w, const MixingLine& line) {
    check_coeffs(w);
    check_line(line);
    const double e0 = expectation_sym(w, line.noise);
    const double e1 = expectation_sym(w, line.target);
    if (e0 < 0.0) return 0.0;
    if (e1 >= 0.0) return 2.0; // nothing on the segment is detected
    return e0 / (e0 - e1);
}

OptimalWitnessResult optimal_witness_for_noise(const MixingLine& line, SloccClass target_class) {
    check_line(line);
    if (target_class == SloccClass::Separable)
        throw Error(Errc::InvalidArgument, "no witness detects separable states");

    const SloccClass target_cls = classify(line.target);
    if (static_cast<int>(target_cls) < static_cast<int>(target_class)) {
        std::ostringstream os;
        os << "target is " << slocc_name(target_cls) << ", need at least "
           << slocc_name(target_class);
        throw Error(Errc::TargetNotInClass, os.str());
    }
    const SloccClass noise_cls = classify(line.noise);
    if (static_cast<int>(noise_cls) >= static_cast<int>(target_class)) {
        std::ostringstream os;
        os << "noise is already " << slocc_name(noise_cls);
        throw Error(Errc::NoiseNotLower, os.str());
    }

    const bool mirrored = line.target.x < 0.0;
    const MixingLine folded{
        SymCoords{mirrored ? -line.noise.x : line.noise.x, line.noise.y},
        SymCoords{mirrored ? -line.target.x : line.target.x, line.target.y}};

    OptimalWitnessResult result;
    double v0 = 0.0;
    switch (target_class) {
        case SloccClass::Biseparable:
            result.witness = bisep_sep_witness();
            break;
        case SloccClass::WClass:
            result.witness = genuine_witness();
            break;
        case SloccClass::GhzClass:
            v0 = line_curve_intersection(folded.noise, folded.target);
            result.witness = ghz_tangent_witness(v0);
            break;
        default:
            throw Error(Errc::InvalidArgument, "unsupported target class");
    }
    if (mirrored) {
        result.witness = mirror(result.witness);
        v0 = -v0;
    }
    result.curve_parameter = v0;
    result.threshold = detection_threshold(result.witness, line);
    return result;
}

bool is_optimal_for_symmetric(const Witness& w, SloccClass bound) {
    check_coeffs(w);
    const double m = min_line_over_region(zero_line(w), bound);
    return std::abs(m) <= 1e-9;
}

bool is_optimal_on_line(const Witness& w, const MixingLine& line, SloccClass bound) {
    check_coeffs(w);
    check_line(line);
    const auto at_most_bound = [&](double p) {
        return static_cast<int>(classify(lerp(line, p))) <= static_cast<int>(bound);
    };

    double exit_p;
    if (!at_most_bound(0.0)) {
        exit_p = 0.0;
    } else if (at_most_bound(1.0)) {
        exit_p = 2.0; // the line never leaves the uninteresting region
    } else {
        double lo = 0.0, hi = 1.0;
        while (hi - lo > 1e-12) {
            const double mid = 0.5 * (lo + hi);
            (at_most_bound(mid) ? lo : hi) = mid;
        }
        exit_p = 0.5 * (lo + hi);
    }

    const double p_star = detection_threshold(w, line);
    if (exit_p > 1.0) return p_star > 1.0;
    return p_star <= exit_p + 1e-9;
}

} // namespace ghzsym
