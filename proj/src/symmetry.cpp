#include "ghzsym/symmetry.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "ghzsym/geometry.hpp"

namespace ghzsym {

namespace {

const double kSqrt3 = std::sqrt(3.0);

/// Index permutation on basis states induced by a qubit permutation:
/// the bit at qubit position k moves to position perm[k].
std::array<int, kDim> index_permutation(const std::array<int, 3>& perm) {
    std::array<int, kDim> p{};
    for (int idx = 0; idx < kDim; ++idx) {
        const int bits[3] = {(idx >> 2) & 1, (idx >> 1) & 1, idx & 1};
        int out = 0;
        for (int k = 0; k < 3; ++k)
            out |= bits[k] << (2 - perm[static_cast<size_t>(k)]);
        p[static_cast<size_t>(idx)] = out;
    }
    return p;
}

/// Phase angle picked up by basis state |idx> under the correlated rotation.
/// sigma_z gives +1 on |0> and -1 on |1>.
double rotation_phase(int idx, double phi1, double phi2) {
    const double s1 = ((idx >> 2) & 1) ? -1.0 : 1.0;
    const double s2 = ((idx >> 1) & 1) ? -1.0 : 1.0;
    const double s3 = (idx & 1) ? -1.0 : 1.0;
    return phi1 * s1 + phi2 * s2 - (phi1 + phi2) * s3;
}

/// U rho U^dagger for U = P * F * R, using the element structure: R is
/// diagonal, F and P permute indices. Matches realize() exactly; pinned to
/// the dense route by a unit test.
Matrix8 conjugate_by_element(const Matrix8& rho, const SymmetryElement& e) {
    std::array<Complex, kDim> u{};
    for (int i = 0; i < kDim; ++i)
        u[static_cast<size_t>(i)] = std::polar(1.0, rotation_phase(i, e.phi1, e.phi2));

    Matrix8 t;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            t.at(i, j) = u[static_cast<size_t>(i)] * std::conj(u[static_cast<size_t>(j)]) *
                         rho.at(i, j);

    if (e.flip) {
        Matrix8 f;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) f.at(i, j) = t.at(7 - i, 7 - j);
        t = f;
    }

    const auto p = index_permutation(kQubitPermutations[static_cast<size_t>(e.permutation)]);
    std::array<int, kDim> pinv{};
    for (int i = 0; i < kDim; ++i) pinv[static_cast<size_t>(p[static_cast<size_t>(i)])] = i;
    Matrix8 r;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            r.at(i, j) = t.at(pinv[static_cast<size_t>(i)], pinv[static_cast<size_t>(j)]);
    return r;
}

/// Analytic average over the two rotation angles: integration leaves only
/// the diagonal and the [0][7], [7][0] pair.
Matrix8 phase_average(const Matrix8& rho) {
    Matrix8 r;
    for (int i = 0; i < kDim; ++i) r.at(i, i) = rho.at(i, i);
    r.at(0, 7) = rho.at(0, 7);
    r.at(7, 0) = rho.at(7, 0);
    return r;
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

Matrix8 realize(const SymmetryElement& e) {
    if (e.permutation < 0 || e.permutation >= 6)
        throw Error(Errc::InvalidArgument, "permutation index must be in [0, 6)");

    Matrix8 u;
    for (int i = 0; i < kDim; ++i)
        u.at(i, i) = std::polar(1.0, rotation_phase(i, e.phi1, e.phi2));

    if (e.flip) {
        Matrix8 f;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) f.at(i, j) = u.at(7 - i, j);
        u = f;
    }

    const auto p = index_permutation(kQubitPermutations[static_cast<size_t>(e.permutation)]);
    Matrix8 r;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            r.at(p[static_cast<size_t>(i)], j) = u.at(i, j);
    return r;
}

SymCoords twirl_coordinates(const DensityMatrix& rho) {
    const Matrix8& m = rho.matrix();
    SymCoords c;
    c.x = 0.5 * (m.at(0, 7) + m.at(7, 0)).real();
    c.y = (m.at(0, 0).real() + m.at(7, 7).real() - 0.25) / kSqrt3;
    return c;
}

DensityMatrix reconstruct_state(SymCoords c) {
    if (!in_triangle(c)) {
        std::ostringstream os;
        os << "(" << c.x << ", " << c.y << ") is not in the triangle";
        throw Error(Errc::OutsideTriangle, os.str());
    }
    Matrix8 m;
    const double corner = kSqrt3 / 2.0 * c.y + 0.125;
    const double middle = (1.0 - 4.0 * c.y / kSqrt3) / 8.0;
    m.at(0, 0) = corner;
    m.at(7, 7) = corner;
    for (int i = 1; i < 7; ++i) m.at(i, i) = middle;
    m.at(0, 7) = c.x;
    m.at(7, 0) = c.x;
    return make_density_matrix(m);
}

DensityMatrix sampled_twirl(const DensityMatrix& rho, std::uint64_t n, std::uint64_t seed) {
    Matrix8 acc;

    if (n == 0) {
        const Matrix8 base = phase_average(rho.matrix());
        for (int perm = 0; perm < 6; ++perm)
            for (int flip = 0; flip < 2; ++flip)
                acc += conjugate_by_element(base, SymmetryElement{perm, flip == 1, 0.0, 0.0});
        acc *= 1.0 / 12.0;
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t k = 0; k < n; ++k) {
            SymmetryElement e;
            e.permutation = static_cast<int>(rng() % 6);
            e.flip = (rng() & 1) != 0;
            e.phi1 = 2.0 * std::numbers::pi * uniform01(rng);
            e.phi2 = 2.0 * std::numbers::pi * uniform01(rng);
            acc += conjugate_by_element(rho.matrix(), e);
        }
        acc *= 1.0 / static_cast<double>(n);
    }

    // Renormalized Hermitian part, to suppress float drift.
    Matrix8 herm;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            herm.at(i, j) = 0.5 * (acc.at(i, j) + std::conj(acc.at(j, i)));
    const double tr = herm.trace().real();
    herm *= 1.0 / tr;
    return make_density_matrix(herm);
}

} // namespace ghzsym
