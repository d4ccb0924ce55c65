#pragma once

#include <array>
#include <cstdint>

#include "ghzsym/linalg.hpp"

namespace ghzsym {

/// Coordinates of a GHZ-symmetric state:
///   x = (rho[0][7] + rho[7][0]) / 2,   y = (rho[0][0] + rho[7][7] - 1/4) / sqrt(3).
struct SymCoords {
    double x = 0.0;
    double y = 0.0;
};

/// The six qubit permutations, as images of positions (1,2,3).
inline constexpr std::array<std::array<int, 3>, 6> kQubitPermutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

/// One element of the symmetry group: a qubit permutation, an optional
/// sigma_x^{x3} flip, and the correlated z-rotation
/// U(phi1, phi2) = exp(i phi1 sz) x exp(i phi2 sz) x exp(-i (phi1+phi2) sz).
struct SymmetryElement {
    int permutation = 0; // index into kQubitPermutations
    bool flip = false;
    double phi1 = 0.0;
    double phi2 = 0.0;
};

/// Dense unitary for a group element, composed as P * F * R (rotation acts
/// first). Leaves |GHZ_+> invariant with global phase exactly +1.
Matrix8 realize(const SymmetryElement& e);

/// Coordinates of the twirled image of rho. Always lands in the triangle.
SymCoords twirl_coordinates(const DensityMatrix& rho);

/// The GHZ-symmetric state at coordinates c. Throws OutsideTriangle.
DensityMatrix reconstruct_state(SymCoords c);

/// Group average of U rho U^dagger. n = 0 requests the exact average:
/// analytic phase integration (which removes every matrix element except the
/// diagonal and the [0][7]/[7][0] pair) followed by the exact average over
/// the 12 discrete elements. n >= 1 draws n elements with a seeded
/// generator; the output is the renormalized Hermitian part of the mean.
DensityMatrix sampled_twirl(const DensityMatrix& rho, std::uint64_t n,
                            std::uint64_t seed = 0x9e3779b97f4a7c15ull);

} // namespace ghzsym
