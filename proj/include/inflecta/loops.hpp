#pragma once

#include <cstdint>
#include <vector>

#include "inflecta/poly.hpp"
#include "inflecta/solver.hpp"
#include "inflecta/tracker.hpp"

namespace inflecta {

// A loop that circles a coefficient-space point whose fiber degenerates: a
// straight approach from a global base curve to the entry point of a small
// circle in the given pencil direction, the full circle counterclockwise, and
// the approach reversed. Radius is measured relative to the center curve's
// coefficient norm.
struct BypassSpec {
    HomPoly3 center_curve;
    std::vector<cplx> direction; // HomPoly3 coefficient layout, nonzero
    double radius = 1e-2;
    int circle_steps = 64;
    HomPoly3 base_curve; // loop start/end; commonly the circle entry itself
    int approach_steps = 1; // minimum subdivision of the approach segment

    // A distant base aiming straight at a very small circle tends to graze the
    // degeneracy. When approach_radius exceeds radius, the path instead meets
    // the pencil at approach_radius and slides down the pencil line to the
    // circle through descent_steps geometrically spaced radii (and back up on
    // the return leg).
    double approach_radius = 0.0;
    int descent_steps = 12;

    // Index of the coefficient pinned by the affine chart; -1 picks it
    // automatically so that both the base curve and the pencil keep a healthy
    // share of their norm there.
    int pivot_hint = -1;

    // base_curve starts out as the center; callers normally reassign it to
    // bypass_entry(*this) once the radius is settled
    BypassSpec(HomPoly3 center, std::vector<cplx> dir)
        : center_curve(std::move(center)), direction(std::move(dir)),
          base_curve(center_curve) {}
};

// Entry point of the bypass circle: center + radius * |center| * unit direction.
// Callers solve their base fiber here and usually set base_curve to the result.
HomPoly3 bypass_entry(const BypassSpec& spec);

// Closed triangle base -> R1 -> R2 -> base through two seeded random smooth
// curves of the same degree. Waypoints are pinned to the affine coefficient
// chart where the base curve's largest coefficient keeps its value, and every
// segment is subdivided to length <= 0.05 relative to the base norm.
CoeffPath random_loop(const HomPoly3& base, std::uint64_t seed);

// The bypass path described by the spec, same chart pinning and densification
// as random_loop. The circle is probed at four angles by full fiber solves
// first; a degenerate fiber at any probe throws RadiusTooLarge.
CoeffPath bypass_loop(const BypassSpec& spec);

// The same path without the probe gate. For pencils whose every member has a
// degenerate full fiber (the Fermat u-pencil keeps multiple points on z2 = 0
// at all u) the probes can never pass, yet tracking a subset of simple fiber
// points around the circle is still well posed.
CoeffPath pencil_circle(const BypassSpec& spec);

// Same waypoints in reverse order; for a closed loop this inverts the
// homotopy class, so the tracked permutation inverts too.
CoeffPath reversed(const CoeffPath& path);

// The 3d coordinate-line inflection points of the degree-d Fermat curve in a
// fixed order: axis 0 holds (0, mu_l, 1), axis 1 holds (mu_l, 0, 1), axis 2
// holds (mu_l, 1, 0), with mu_l the d-th roots of -1 by increasing angle.
std::vector<ProjPoint> fermat_flexes(int degree);

// A fiber of the Fermat u-pencil with every point labeled by the nearest
// Fermat coordinate flex (index into fermat_flexes(degree)).
struct LabeledFiber {
    HomPoly3 curve;
    InflectionSet fiber;
    std::vector<ProjPoint> references;
    std::vector<int> labels;
};

// Solves the fiber over fermat(d) + u0 z1^2 z3^(d-2) and labels each point.
// A degenerate fiber propagates; for this pencil the points on z2 = 0 stay
// multiple inflection points at every u, so the full solve reports degeneracy
// whenever it resolves them.
LabeledFiber fermat_bypass_base(int degree, cplx u0);

// The portion of the u-pencil fiber lying nearest to the chosen axis of
// Fermat flexes, recovered from the solve even when the full fiber is
// degenerate. Points are kept only with residual <= 1e-8; the result must
// contain exactly d(d-2) points (the d clusters of d-2 simple points that
// split off the axis flexes) or DegenerateFiber is thrown. The returned set
// carries a fresh unitary chart that keeps every point finite, so it can be
// handed to the tracker directly.
InflectionSet fermat_axis_subfiber(int degree, cplx u0, int axis,
                                   std::uint64_t chart_seed);

// Degree-4 curve z2^4 + z1 S(z1, z2, z3) with S random cubic, S(0, 0, 1) = 1:
// smooth with exactly one double inflection point at (0, 0, 1) along the
// tangent z1 = 0. Redraws S until the fiber solve confirms that the double
// point is the only degeneracy (23 distinct points instead of 24).
HomPoly3 double_flex_quartic(std::uint64_t seed);

} // namespace inflecta
