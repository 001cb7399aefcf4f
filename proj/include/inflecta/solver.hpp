#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "inflecta/poly.hpp"

namespace inflecta {

// One solved fiber: the curve, its inflection points in canonical order, the
// scale-normalized residual of every point, and the unitary chart the solve
// ran in (path tracking reuses it so start points stay well-conditioned).
struct InflectionSet {
    HomPoly3 curve;
    std::vector<ProjPoint> points;
    std::vector<double> residuals;
    CoordChange chart;
};

struct Resultant {
    std::vector<cplx> coeffs; // in x, constant term first
    // largest sampled determinant relative to its Hadamard bound; a value
    // near machine zero means the resultant vanishes identically
    double relative_magnitude = 0.0;
};

// Resultant of f and g with respect to y. Sampled as a Sylvester determinant
// on roots of unity and interpolated back by an inverse DFT.
Resultant sylvester_resultant(const BiPoly& f, const BiPoly& g);

// All complex roots of sum_i coeffs[i] x^i by the Aberth-Ehrlich simultaneous
// iteration, polished and verified by a per-root backward error bound.
// Throws RootFindingFailed when the iteration stalls or a root fails the bound.
std::vector<cplx> univariate_roots(const std::vector<cplx>& coeffs);

// Newton iteration for the 2x2 system f = g = 0 from (x, y). Throws
// SingularJacobian when the Jacobian determinant degenerates relative to the
// size of its entries.
std::pair<cplx, cplx> newton_refine(const BiPoly& f, const BiPoly& g, cplx x, cplx y,
                                    double tol = 1e-12, int max_iter = 50);

// The full fiber of inflection points of a smooth plane curve: intersect the
// curve with its Hessian curve in a seeded random unitary chart, eliminate one
// variable by resultant, back-substitute and refine. Throws DegenerateFiber
// (carrying whatever was found) when the point count or residuals are off,
// which is how singular or otherwise special members announce themselves.
InflectionSet inflection_points(const HomPoly3& curve, std::uint64_t seed);

// Gaussian random curve of the given degree, redrawn (at most 20 times) until
// its inflection fiber solves cleanly.
HomPoly3 random_smooth_curve(int degree, std::uint64_t seed);

// Single-linkage clustering under Fubini-Study distance. Groups are returned
// as index lists, largest group first (ties by smallest member index).
std::vector<std::vector<int>> cluster(const std::vector<ProjPoint>& points, double radius);

// Searches for a point where all three partial derivatives vanish, i.e. a
// certificate that the curve is singular. Returns nullopt when none is found.
std::optional<ProjPoint> singular_witness(const HomPoly3& curve);

} // namespace inflecta
