#pragma once

#include <string>

#include "ghzsym/symmetry.hpp"

namespace ghzsym {

/// SLOCC entanglement hierarchy; boundaries belong to the lower class.
enum class SloccClass : int {
    Separable = 0,
    Biseparable = 1,
    WClass = 2,
    GhzClass = 3,
};

const char* slocc_name(SloccClass c);

/// Oriented line alpha*x + beta*y + gamma = 0, normalized so that
/// alpha^2 + beta^2 = 1 and the origin side is nonnegative (gamma >= 0).
struct Line {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    double value(SymCoords c) const { return alpha * c.x + beta * c.y + gamma; }
};

/// Normalizes coefficients into a Line; throws DegenerateWitness when
/// alpha and beta are both (numerically) zero.
Line make_line(double alpha, double beta, double gamma);

/// Triangle membership: -1/(4 sqrt 3) <= y <= sqrt(3)/4 and
/// |x| <= sqrt(3) y / 2 + 1/8, all within 1e-12.
bool in_triangle(SymCoords c);

/// GHZ/W boundary curve, |v| <= 1:
///   x_B(v) = (v^5 + 8 v^3) / (8 (4 - v^2))
///   y_B(v) = (sqrt(3)/4) (4 - v^2 - v^4) / (4 - v^2)
SymCoords boundary_point(double v);

/// Tangent line of the boundary curve at parameter v, oriented
/// origin-positive. Both derivatives vanish at v = 0; the limiting
/// horizontal line through (0, sqrt(3)/4) is returned there.
Line boundary_tangent(double v);

/// Curve derivatives in closed form (used by the tangent and by tests).
double boundary_dx(double v);
double boundary_dy(double v);

/// Minimum over v in [-1, 1] of the origin-positive tangent functional at c;
/// nonnegative (within 1e-10) exactly on the at-most-W region. Dense grid
/// (step 1e-3) plus local Newton refinement.
double min_tangent_functional(SymCoords c);

/// Minimum of the line functional over the at-most-`bound` region
/// (polygon corners, plus the curve when bound is WClass).
double min_line_over_region(const Line& l, SloccClass bound);

/// SLOCC class of the symmetric state at c. Points within 1e-10 of a class
/// boundary get the lower class. Throws OutsideTriangle.
SloccClass classify(SymCoords c);

/// Positive partial transpose, equivalent to |x| <= 1/8 - y/(2 sqrt 3)
/// within 1e-12. For this family PPT coincides with full separability.
bool is_ppt(SymCoords c);

/// True strictly inside the triangle: every eigenvalue of the state exceeds
/// 1e-12 exactly when c is off the border.
bool is_full_rank(SymCoords c);

/// Parameter v0 of the crossing between the boundary curve and the segment
/// p0 -> p1, for segments crossing in the x >= 0 half (mirror x first for
/// the other half). p0 must be on the at-most-W side and p1 strictly above.
/// Sign-bracketed bisection to |dv| <= 1e-12 with a Newton polish; throws
/// NoCrossing / AmbiguousCrossing.
double line_curve_intersection(SymCoords p0, SymCoords p1);

} // namespace ghzsym
