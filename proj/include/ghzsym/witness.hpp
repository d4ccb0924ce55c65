#pragma once

#include "ghzsym/geometry.hpp"
#include "ghzsym/linalg.hpp"

namespace ghzsym {

/// Symmetric witness operator W = a*1 + b*P+ + c*P- built from the identity
/// and the projectors onto the two maximally entangled corner states.
/// Coefficients are kept in a fixed sign convention: the witness is positive
/// at the maximally mixed state, a + (b + c)/8 > 0.
struct Witness {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

/// Line of states rho(p) = (1-p)*noise + p*target for p in [0, 1],
/// described by the coordinates of its endpoints.
struct MixingLine {
    SymCoords noise{0.0, 0.0};
    SymCoords target{0.0, 0.0};
};

/// <W> on the symmetric state with coordinates c; affine in (x, y).
double expectation_sym(const Witness& w, SymCoords c);

/// Dense 8x8 operator for evaluation against arbitrary states.
Matrix8 to_matrix(const Witness& w);

/// The zero set of expectation_sym as a normalized oriented line.
/// Throws DegenerateWitness when b = c = 0 (no zero line in the plane).
Line zero_line(const Witness& w);

/// Inverse of zero_line up to the overall positive scale fixed by the
/// normalization of l. Throws LineCrossesUninteresting when the line cuts
/// into the region a witness for `bound` must leave nonnegative.
Witness witness_from_line(const Line& l, SloccClass bound);

/// Witness separating the biseparable states from the separable region,
/// tight on the x >= 0 separable edge.
Witness bisep_sep_witness();

/// Witness detecting genuine multipartite entanglement, tight on the
/// x >= 0 biseparable edge.
Witness genuine_witness();

/// Projector-based GHZ witness 3/4 - P+; not tangent to the class boundary
/// except at the curve endpoint.
Witness projection_witness();

/// GHZ-class witness whose zero line is tangent to the W/GHZ boundary
/// curve at parameter v0 in [-1, 1]. Well defined for every v0 including 0
/// (apex tangent, the top edge of the triangle) and +-1 (curve endpoints).
Witness ghz_tangent_witness(double v0);

/// Reflects the witness across x = 0 (swaps the corner projectors).
Witness mirror(const Witness& w);

/// True when tr(W rho) < 0.
bool detects(const Witness& w, const DensityMatrix& rho);

/// Smallest p for which the witness detects states on the line, found from
/// the affine expectation; returns a value > 1 when nothing on the segment
/// is detected.
double detection_threshold(const Witness& w, const MixingLine& line);

struct OptimalWitnessResult {
    Witness witness;
    double threshold = 0.0;  // first detected p on the line
    double curve_parameter = 0.0; // crossing parameter for GhzClass targets, else 0
};

/// Constructs the witness detecting states of class `target_class` as early
/// as possible along the mixing line. The target must be of at least that
/// class and the noise endpoint of a lower class.
OptimalWitnessResult optimal_witness_for_noise(const MixingLine& line, SloccClass target_class);

/// True when the witness expectation reaches zero (within tolerance) on the
/// closure of the region it must leave nonnegative: nothing detectable by a
/// symmetric witness of this class escapes it.
bool is_optimal_for_symmetric(const Witness& w, SloccClass bound);

/// True when the witness detects every state of class > bound on the given
/// line: its threshold matches the point where the line leaves the
/// at-most-`bound` region.
bool is_optimal_on_line(const Witness& w, const MixingLine& line, SloccClass bound);

} // namespace ghzsym
