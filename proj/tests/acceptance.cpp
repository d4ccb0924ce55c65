// Acceptance suite. Each numbered criterion prints one [PASS]/[FAIL] line
// with its worst observed residual; the exit status is the failure count.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "ghzsym/geometry.hpp"
#include "ghzsym/linalg.hpp"
#include "ghzsym/symmetry.hpp"
#include "ghzsym/witness.hpp"
#include "test_util.hpp"

using namespace ghzsym;

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kYMax = kSqrt3 / 4.0;

int failures = 0;

void report(int idx, const char* name, bool ok, double worst) {
    std::printf("[%s] %2d  %-52s  worst residual %.3g\n", ok ? "PASS" : "FAIL", idx, name, worst);
    if (!ok) ++failures;
}

double ratio_spread(const std::vector<double>& ratios) {
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    return *hi - *lo;
}

// 1. The white-noise -> GHZ corner segment crosses the W/GHZ curve at the
//    quintic root parameter.
double criterion_crossing_parameter() {
    const double v0 = line_curve_intersection({0.0, 0.0}, {0.5, kYMax});
    double worst = std::abs(v0 - 0.980701);
    worst = std::max(worst, std::abs(v0 - testutil::quintic_boundary_parameter()) / 1e-4);
    report(1, "crossing parameter of the white-noise GHZ line", worst <= 1e-5, worst);
    return v0;
}

// 2. Coefficients of the tangent witness at that crossing.
void criterion_optimal_coefficients(double v0) {
    const Witness w = ghz_tangent_witness(v0);
    double worst = std::abs(w.a - 0.75);
    worst = std::max(worst, std::abs(w.b + 0.999876));
    worst = std::max(worst, std::abs(w.c + 0.433327));
    report(2, "tangent witness coefficients at the crossing", worst <= 1e-5, worst);
}

// 3. The curve-endpoint tangent witness has exact rational coefficients.
void criterion_endpoint_witness() {
    const Witness w = ghz_tangent_witness(1.0);
    double worst = std::abs(w.a - 0.75);
    worst = std::max(worst, std::abs(w.b + 1.0));
    worst = std::max(worst, std::abs(w.c + 3.0 / 7.0));
    report(3, "endpoint tangent witness (3/4, -1, -3/7)", worst <= 1e-15, worst);
}

// 4. The polygon-edge lines reproduce the canonical witnesses up to a
//    positive factor.
void criterion_edge_line_recovery() {
    const Witness w1 =
        witness_from_line(make_line(2.0, 1.0 / kSqrt3, -0.25), SloccClass::Separable);
    const std::vector<double> r1{w1.a / 1.0, w1.b / -4.0, w1.c / 2.0};
    double worst = ratio_spread(r1);
    bool ok = r1[0] > 0.0;

    const Witness w2 =
        witness_from_line(make_line(1.0, kSqrt3 / 2.0, -3.0 / 8.0), SloccClass::Biseparable);
    const std::vector<double> r2{w2.a / 0.5, w2.b / -1.0};
    worst = std::max(worst, ratio_spread(r2));
    worst = std::max(worst, std::abs(w2.c));
    ok = ok && r2[0] > 0.0;
    report(4, "edge lines recover the canonical witnesses", ok && worst <= 1e-12, worst);
}

// 5. Curve endpoints against their closed coordinates.
void criterion_curve_endpoints() {
    const SymCoords end = boundary_point(1.0);
    const SymCoords apex = boundary_point(0.0);
    double worst = std::abs(end.x - 3.0 / 8.0);
    worst = std::max(worst, std::abs(end.y - 1.0 / (2.0 * kSqrt3)));
    worst = std::max(worst, std::abs(apex.x));
    worst = std::max(worst, std::abs(apex.y - kYMax));
    report(5, "curve endpoints (3/8, 1/(2 sqrt 3)) and (0, sqrt(3)/4)", worst <= 1e-14, worst);
}

// 6. Detection thresholds on the pseudo-pure line form the strict ladder
//    1/5 < 3/7 < root-derived GHZ value < 5/7.
void criterion_threshold_ladder(double v0) {
    const MixingLine pp{{0.0, 0.0}, {0.5, kYMax}};
    const double p1 = detection_threshold(bisep_sep_witness(), pp);
    const double p2 = detection_threshold(genuine_witness(), pp);
    const double p3 = detection_threshold(ghz_tangent_witness(v0), pp);
    const double p4 = detection_threshold(projection_witness(), pp);

    double worst = std::abs(p1 - 0.2) / 1e-6;
    worst = std::max(worst, std::abs(p2 - 3.0 / 7.0) / 1e-6);
    worst = std::max(worst, std::abs(p3 - 0.69554) / 1e-4);
    worst = std::max(worst, std::abs(p3 - testutil::pseudo_pure_ghz_threshold()) / 1e-4);
    worst = std::max(worst, std::abs(p4 - 5.0 / 7.0) / 1e-6);
    const bool ordered = p1 < p2 && p2 < p3 && p3 < p4;
    report(6, "pseudo-pure threshold ladder 1/5, 3/7, 0.69554, 5/7", ordered && worst <= 1.0,
           worst);
}

// 7. PPT coincides with the separable polygon, and with the sign of the
//    smallest partial-transpose eigenvalue.
void criterion_ppt_separable() {
    auto rng = testutil::make_rng(701);
    int mismatches = 0;
    for (int i = 0; i < 10000; ++i) {
        const SymCoords c = testutil::random_in_triangle(rng);
        const double margin = 0.125 - c.y / (2.0 * kSqrt3) - std::abs(c.x);
        if (std::abs(margin) <= 1e-10) continue;
        if (is_ppt(c) != (classify(c) == SloccClass::Separable)) ++mismatches;
    }
    for (int i = 0; i < 1000; ++i) {
        const SymCoords c = testutil::random_in_triangle(rng);
        const double margin = 0.125 - c.y / (2.0 * kSqrt3) - std::abs(c.x);
        if (std::abs(margin) <= 1e-9) continue;
        const Matrix8 pt = partial_transpose(reconstruct_state(c), 1);
        const auto eigs = hermitian_eigenvalues(pt);
        const bool oracle = *std::min_element(eigs.begin(), eigs.end()) >= -1e-10;
        if (oracle != is_ppt(c)) ++mismatches;
    }
    report(7, "PPT = separable polygon = partial-transpose sign", mismatches == 0,
           static_cast<double>(mismatches));
}

// 8. Coordinates of the exact twirl and of the Monte-Carlo twirl agree with
//    the direct coordinate map.
void criterion_twirl_equivalence() {
    auto rng = testutil::make_rng(801);
    double worst_exact = 0.0;
    double worst_mc = 0.0;
    for (int i = 0; i < 100; ++i) {
        const DensityMatrix rho = testutil::random_density(rng);
        const SymCoords direct = twirl_coordinates(rho);
        const SymCoords exact = twirl_coordinates(sampled_twirl(rho, 0, 0));
        worst_exact = std::max(worst_exact, std::abs(exact.x - direct.x));
        worst_exact = std::max(worst_exact, std::abs(exact.y - direct.y));
        const SymCoords mc =
            twirl_coordinates(sampled_twirl(rho, 100000, 900 + static_cast<std::uint64_t>(i)));
        worst_mc = std::max(worst_mc, std::abs(mc.x - direct.x));
        worst_mc = std::max(worst_mc, std::abs(mc.y - direct.y));
    }
    const double worst = std::max(worst_exact / 1e-12, worst_mc / 0.01);
    report(8, "twirl coordinates: exact 1e-12, Monte-Carlo 0.01", worst <= 1.0,
           std::max(worst_exact, worst_mc));
}

// 9. Every constructed witness is nonnegative on 10^4 samples of the region
//    it must not detect, and the tangent family touches the curve.
void criterion_witness_positivity(double v0) {
    auto rng = testutil::make_rng(901);
    const struct {
        Witness w;
        SloccClass bound;
    } cases[] = {
        {bisep_sep_witness(), SloccClass::Separable},
        {genuine_witness(), SloccClass::Biseparable},
        {projection_witness(), SloccClass::WClass},
        {ghz_tangent_witness(v0), SloccClass::WClass},
        {ghz_tangent_witness(0.3), SloccClass::WClass},
    };
    double worst = 0.0;
    bool ok = true;
    for (const auto& tc : cases) {
        for (int i = 0; i < 10000; ++i) {
            SymCoords c = testutil::random_in_triangle(rng);
            while (static_cast<int>(classify(c)) > static_cast<int>(tc.bound))
                c = testutil::random_in_triangle(rng);
            const double value = expectation_sym(tc.w, c);
            ok = ok && value >= -1e-10;
            worst = std::max(worst, -value);
        }
    }
    double tangency = 0.0;
    for (int k = 0; k <= 100; ++k) {
        const double v = -1.0 + 0.02 * k;
        tangency =
            std::max(tangency, std::abs(expectation_sym(ghz_tangent_witness(v), boundary_point(v))));
    }
    ok = ok && tangency <= 1e-12;
    report(9, "witness positivity on 10^4 samples + tangency", ok, std::max(worst, tangency));
}

// 10. Round-trip and mirror identities, 1000 cases each.
void criterion_round_trip_and_mirror() {
    auto rng = testutil::make_rng(1001);
    double worst = 0.0;
    bool exact_ok = true;
    for (int i = 0; i < 1000; ++i) {
        const SymCoords c = testutil::random_in_triangle(rng);
        const SymCoords back = twirl_coordinates(reconstruct_state(c));
        worst = std::max(worst, std::abs(back.x - c.x));
        worst = std::max(worst, std::abs(back.y - c.y));
    }
    for (int i = 0; i < 1000; ++i) {
        Witness w{0.0, 0.0, 0.0};
        do {
            w.a = 2.0 * testutil::uniform01(rng) - 1.0;
            w.b = 2.0 * testutil::uniform01(rng) - 1.0;
            w.c = 2.0 * testutil::uniform01(rng) - 1.0;
        } while (!(w.a + (w.b + w.c) / 8.0 > 0.05));
        const SymCoords c = testutil::random_in_triangle(rng);
        exact_ok =
            exact_ok && expectation_sym(mirror(w), {-c.x, c.y}) == expectation_sym(w, c);
    }
    for (int i = 0; i < 1000; ++i) {
        const double v = 2.0 * testutil::uniform01(rng) - 1.0;
        const SymCoords plus = boundary_point(v);
        const SymCoords minus = boundary_point(-v);
        exact_ok = exact_ok && minus.x == -plus.x && minus.y == plus.y;
    }
    report(10, "round-trip 1e-14 + exact mirror identities", exact_ok && worst <= 1e-14, worst);
}

} // namespace

int main() {
    const double v0 = criterion_crossing_parameter();
    criterion_optimal_coefficients(v0);
    criterion_endpoint_witness();
    criterion_edge_line_recovery();
    criterion_curve_endpoints();
    criterion_threshold_ladder(v0);
    criterion_ppt_separable();
    criterion_twirl_equivalence();
    criterion_witness_positivity(v0);
    criterion_round_trip_and_mirror();

    std::printf("acceptance: %d/10 criteria passed\n", 10 - failures);
    return failures;
}
