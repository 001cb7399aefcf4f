#pragma once

#include <optional>
#include <vector>

#include "inflecta/permutation.hpp"
#include "inflecta/poly.hpp"
#include "inflecta/solver.hpp"

namespace inflecta {

// Piecewise-linear path in the coefficient space of degree-d curves.
// Waypoints use the same exponent indexing as HomPoly3. A closed path must
// repeat its first waypoint bitwise at the end.
struct CoeffPath {
    int degree = 0;
    std::vector<std::vector<cplx>> waypoints;
    bool closed = false;
};

HomPoly3 waypoint_curve(const CoeffPath& path, std::size_t index);

struct TrackOptions {
    double initial_step = 1e-2;
    double min_step = 1e-9;
    double newton_tol = 1e-11;
    int max_newton_iters = 8;
    double step_expand = 2.0;
    double step_contract = 0.5;
    int max_steps = 2000000;
};

struct TrackResult {
    std::vector<ProjPoint> end_points; // in the order of the start fiber
    int steps_taken = 0;
    int rejections = 0;
    double min_step_used = 1.0;
    std::optional<Permutation> permutation; // closed paths only
};

// Tracks every point of the start fiber along the path by Euler prediction
// and Newton correction in the start fiber's chart. All strands advance with
// a shared adaptive parameter step; a step is accepted only when every strand
// corrects. Throws PathFailure (strand stalls, leaves the chart or exhausts
// the budget) and PathCollision (two strands closer than the separation
// threshold, i.e. the path runs too close to the discriminant).
TrackResult track_path(const CoeffPath& path, const InflectionSet& start,
                       const TrackOptions& opts = {});

// Nearest-neighbour matching of end points against start points in
// Fubini-Study distance. Each end point must have its second-nearest start
// point at least 10x farther than its nearest, and the whole assignment must
// be a bijection; otherwise MatchAmbiguous. images[i] is the start index
// where strand i terminates.
Permutation match_points(const std::vector<ProjPoint>& end,
                         const std::vector<ProjPoint>& start);

// Monodromy action of a closed loop on the base fiber: track, then match the
// endpoint fiber back onto the start fiber. With this orientation,
// traversing loop L then loop M gives compose(perm(M), perm(L)).
Permutation monodromy_permutation(const CoeffPath& loop, const InflectionSet& base,
                                  const TrackOptions& opts = {});

} // namespace inflecta
