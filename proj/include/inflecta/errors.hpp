#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "inflecta/poly.hpp"

namespace inflecta {

// The inflection fiber is not the clean 3d(d-2) simple points: wrong distinct
// count, residual overflow, identically vanishing resultant or ambiguous
// back-substitution. This is a meaningful signal (curve on or near the
// discriminant), so it carries whatever the solve recovered.
struct DegenerateFiber : std::runtime_error {
    int expected_count = 0;
    int found_count = 0;
    double max_residual = 0.0;
    std::vector<ProjPoint> found_points;
    std::vector<double> found_residuals;

    DegenerateFiber(const std::string& what, int expected, int found,
                    double max_res, std::vector<ProjPoint> points = {},
                    std::vector<double> residuals = {})
        : std::runtime_error(what), expected_count(expected), found_count(found),
          max_residual(max_res), found_points(std::move(points)),
          found_residuals(std::move(residuals)) {}
};

// The working chart is unusable (vanishing leading coefficient in the
// eliminated variable); the caller redraws the chart.
struct ChartDegenerate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RootFindingFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 2x2 Jacobian of (F, Hess) is singular at the point: a multiple inflection
struct SingularJacobian : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PathFailure : std::runtime_error {
    int strand = -1;
    int segment = -1;
    double s = 0.0;
    PathFailure(const std::string& what, int strand_, int segment_, double s_)
        : std::runtime_error(what), strand(strand_), segment(segment_), s(s_) {}
};

struct PathCollision : std::runtime_error {
    int strand_a = -1;
    int strand_b = -1;
    int segment = -1;
    PathCollision(const std::string& what, int a, int b, int segment_)
        : std::runtime_error(what), strand_a(a), strand_b(b), segment(segment_) {}
};

struct MatchAmbiguous : std::runtime_error {
    int end_index = -1;
    MatchAmbiguous(const std::string& what, int end_index_)
        : std::runtime_error(what), end_index(end_index_) {}
};

struct RadiusTooLarge : std::runtime_error {
    int probe_index = -1;
    RadiusTooLarge(const std::string& what, int probe_index_)
        : std::runtime_error(what), probe_index(probe_index_) {}
};

} // namespace inflecta
