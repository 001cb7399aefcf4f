#include "inflecta/loops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "inflecta/errors.hpp"
#include "inflecta/rng.hpp"

namespace inflecta {

namespace {

double l2_norm(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
}

double l2_dist(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

std::size_t largest_index(const std::vector<cplx>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    return best;
}

// Shared waypoint builder: pins every raw waypoint to the affine chart where
// the base curve's pivot coefficient keeps its exact value, then subdivides
// so no segment is longer than 0.05 of the base norm.
class PathBuilder {
public:
    explicit PathBuilder(const HomPoly3& base, int pivot = -1) : base_(base.coeffs()) {
        pivot_ = pivot >= 0 ? static_cast<std::size_t>(pivot) : largest_index(base_);
        base_norm_ = l2_norm(base_);
        waypoints_.push_back(base_);
    }

    std::vector<cplx> pinned(const std::vector<cplx>& raw) const {
        const cplx w = raw[pivot_];
        if (std::abs(w) < 1e-9 * l2_norm(raw))
            throw ChartDegenerate("loop builder: waypoint vanishes at the pivot "
                                  "coefficient of the base curve");
        const cplx factor = base_[pivot_] / w;
        std::vector<cplx> out(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) out[i] = factor * raw[i];
        return out;
    }

    // appends the segment from the current endpoint to `to` (already pinned),
    // inserting evenly spaced interior points; zero-length segments vanish
    void extend(const std::vector<cplx>& to, int min_pieces = 1) {
        // copy: push_back below reallocates and would invalidate a reference
        const std::vector<cplx> from = waypoints_.back();
        const double dist = l2_dist(from, to) / base_norm_;
        if (dist < 1e-14) return;
        const int pieces =
            std::max(min_pieces, static_cast<int>(std::ceil(dist / 0.05)));
        for (int k = 1; k < pieces; ++k) {
            const double t = static_cast<double>(k) / pieces;
            std::vector<cplx> mid(from.size());
            for (std::size_t i = 0; i < from.size(); ++i)
                mid[i] = from[i] + t * (to[i] - from[i]);
            waypoints_.push_back(std::move(mid));
        }
        waypoints_.push_back(to);
    }

    CoeffPath close(int degree) {
        if (waypoints_.back() != waypoints_.front()) {
            if (l2_dist(waypoints_.back(), waypoints_.front()) >
                1e-12 * base_norm_)
                throw std::logic_error("loop builder: path did not return to its base");
            waypoints_.back() = waypoints_.front();
        }
        CoeffPath path;
        path.degree = degree;
        path.closed = true;
        path.waypoints = std::move(waypoints_);
        return path;
    }

private:
    std::vector<cplx> base_;
    std::size_t pivot_;
    double base_norm_;
    std::vector<std::vector<cplx>> waypoints_;
};

} // namespace

HomPoly3 bypass_entry(const BypassSpec& spec) {
    const std::size_t nc = HomPoly3::coeff_count(spec.center_curve.degree());
    if (spec.direction.size() != nc)
        throw std::invalid_argument("bypass_entry: direction has wrong length");
    const double dnorm = l2_norm(spec.direction);
    if (dnorm <= 0.0) throw std::invalid_argument("bypass_entry: direction is zero");
    if (spec.radius <= 0.0) throw std::invalid_argument("bypass_entry: radius must be positive");
    const double step = spec.radius * l2_norm(spec.center_curve.coeffs()) / dnorm;
    HomPoly3 entry = spec.center_curve;
    for (std::size_t i = 0; i < nc; ++i) entry.coeffs()[i] += step * spec.direction[i];
    return entry;
}

CoeffPath random_loop(const HomPoly3& base, std::uint64_t seed) {
    const int degree = base.degree();
    PathBuilder builder(base);

    const auto corner = [&](std::uint64_t corner_seed) {
        for (int attempt = 0; attempt < 8; ++attempt) {
            const HomPoly3 cand =
                random_smooth_curve(degree, corner_seed + 0x100000ULL * attempt);
            // reject corners nearly orthogonal to the pivot axis; pinning them
            // would blow the loop up to an enormous coefficient scale
            const std::size_t pivot = largest_index(base.coeffs());
            if (std::abs(cand.coeffs()[pivot]) >= 0.05 * l2_norm(cand.coeffs()))
                return builder.pinned(cand.coeffs());
        }
        throw ChartDegenerate("random_loop: no usable corner curve after 8 draws");
    };

    builder.extend(corner(2 * seed + 1));
    builder.extend(corner(2 * seed + 2));
    builder.extend(builder.pinned(base.coeffs()));
    return builder.close(degree);
}

namespace {

// chart pivot usable for the whole bypass: the coefficient where base and
// pencil center both keep the largest share of their norms
int bypass_pivot(const BypassSpec& spec) {
    if (spec.pivot_hint >= 0) return spec.pivot_hint;
    const auto& b = spec.base_curve.coeffs();
    const auto& c = spec.center_curve.coeffs();
    const double bn = l2_norm(b), cn = l2_norm(c);
    int best = -1;
    double best_share = -1.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const double share = std::min(std::abs(b[i]) / bn, std::abs(c[i]) / cn);
        if (share > best_share) {
            best_share = share;
            best = static_cast<int>(i);
        }
    }
    if (best_share < 1e-9)
        throw ChartDegenerate("bypass_loop: no coefficient carries both the base "
                              "and the pencil center");
    return best;
}

} // namespace

CoeffPath pencil_circle(const BypassSpec& spec) {
    const int degree = spec.center_curve.degree();
    const std::size_t nc = HomPoly3::coeff_count(degree);
    if (spec.base_curve.degree() != degree)
        throw std::invalid_argument("bypass_loop: base and center degree mismatch");
    if (spec.direction.size() != nc)
        throw std::invalid_argument("bypass_loop: direction has wrong length");
    if (spec.circle_steps < 16)
        throw std::invalid_argument("bypass_loop: need at least 16 circle steps");
    if (spec.approach_steps < 1)
        throw std::invalid_argument("bypass_loop: approach_steps must be positive");
    if (spec.descent_steps < 1)
        throw std::invalid_argument("bypass_loop: descent_steps must be positive");
    if (spec.approach_radius < 0.0)
        throw std::invalid_argument("bypass_loop: approach_radius must not be negative");
    const double dnorm = l2_norm(spec.direction);
    if (dnorm <= 0.0) throw std::invalid_argument("bypass_loop: direction is zero");
    if (spec.radius <= 0.0) throw std::invalid_argument("bypass_loop: radius must be positive");

    const double unit = l2_norm(spec.center_curve.coeffs()) / dnorm;
    const auto on_pencil = [&](double r, double theta) {
        const cplx phase = std::polar(r * unit, theta);
        std::vector<cplx> w = spec.center_curve.coeffs();
        for (std::size_t i = 0; i < nc; ++i) w[i] += phase * spec.direction[i];
        return w;
    };

    PathBuilder builder(spec.base_curve, bypass_pivot(spec));

    // radii visited on the way in: possibly an outer meeting point, then a
    // geometric slide down to the circle radius
    std::vector<double> radii;
    if (spec.approach_radius > spec.radius) {
        const double ratio = spec.radius / spec.approach_radius;
        for (int j = 0; j < spec.descent_steps; ++j)
            radii.push_back(spec.approach_radius *
                            std::pow(ratio, static_cast<double>(j) / spec.descent_steps));
    }
    radii.push_back(spec.radius);

    std::vector<std::vector<cplx>> inbound;
    inbound.reserve(radii.size());
    for (double r : radii) inbound.push_back(builder.pinned(on_pencil(r, 0.0)));

    builder.extend(inbound.front(), spec.approach_steps);
    for (std::size_t j = 1; j < inbound.size(); ++j) builder.extend(inbound[j]);
    for (int k = 1; k < spec.circle_steps; ++k)
        builder.extend(
            builder.pinned(on_pencil(spec.radius, 2.0 * M_PI * k / spec.circle_steps)));
    builder.extend(inbound.back());
    for (std::size_t j = inbound.size() - 1; j-- > 0;) builder.extend(inbound[j]);
    builder.extend(builder.pinned(spec.base_curve.coeffs()), spec.approach_steps);
    return builder.close(degree);
}

CoeffPath bypass_loop(const BypassSpec& spec) {
    const int degree = spec.center_curve.degree();
    const std::size_t nc = HomPoly3::coeff_count(degree);
    if (spec.direction.size() != nc)
        throw std::invalid_argument("bypass_loop: direction has wrong length");
    const double dnorm = l2_norm(spec.direction);
    if (dnorm <= 0.0) throw std::invalid_argument("bypass_loop: direction is zero");
    if (spec.radius <= 0.0) throw std::invalid_argument("bypass_loop: radius must be positive");

    // the circle must stay clear of the degeneracy it walks around
    const double step = spec.radius * l2_norm(spec.center_curve.coeffs()) / dnorm;
    for (int probe = 0; probe < 4; ++probe) {
        const double theta = 2.0 * M_PI * probe / 4.0;
        const cplx phase = std::polar(step, theta);
        HomPoly3 candidate = spec.center_curve;
        for (std::size_t i = 0; i < nc; ++i) candidate.coeffs()[i] += phase * spec.direction[i];
        try {
            inflection_points(candidate, 1);
        } catch (const DegenerateFiber& e) {
            throw RadiusTooLarge(std::string("bypass_loop: degenerate fiber on the "
                                             "circle: ") +
                                     e.what(),
                                 probe);
        }
    }
    return pencil_circle(spec);
}

CoeffPath reversed(const CoeffPath& path) {
    CoeffPath out = path;
    std::reverse(out.waypoints.begin(), out.waypoints.end());
    return out;
}

std::vector<ProjPoint> fermat_flexes(int degree) {
    if (degree < 3) throw std::invalid_argument("fermat_flexes: degree must be >= 3");
    std::vector<ProjPoint> out;
    out.reserve(static_cast<std::size_t>(3 * degree));
    for (int axis = 0; axis < 3; ++axis)
        for (int l = 0; l < degree; ++l) {
            const cplx mu = std::polar(1.0, M_PI * (2.0 * l + 1.0) / degree);
            if (axis == 0)
                out.emplace_back(cplx{0.0, 0.0}, mu, cplx{1.0, 0.0});
            else if (axis == 1)
                out.emplace_back(mu, cplx{0.0, 0.0}, cplx{1.0, 0.0});
            else
                out.emplace_back(mu, cplx{1.0, 0.0}, cplx{0.0, 0.0});
        }
    return out;
}

namespace {

int nearest_reference(const ProjPoint& p, const std::vector<ProjPoint>& refs) {
    int best = 0;
    double best_dist = fs_distance(p, refs[0]);
    for (std::size_t r = 1; r < refs.size(); ++r) {
        const double dist = fs_distance(p, refs[r]);
        if (dist < best_dist) {
            best_dist = dist;
            best = static_cast<int>(r);
        }
    }
    return best;
}

} // namespace

LabeledFiber fermat_bypass_base(int degree, cplx u0) {
    LabeledFiber out{fermat_u_family(degree, u0), inflection_points(fermat_u_family(degree, u0), 1),
                     fermat_flexes(degree), {}};
    out.labels.reserve(out.fiber.points.size());
    for (const auto& p : out.fiber.points)
        out.labels.push_back(nearest_reference(p, out.references));
    return out;
}

InflectionSet fermat_axis_subfiber(int degree, cplx u0, int axis,
                                   std::uint64_t chart_seed) {
    if (axis < 0 || axis > 2)
        throw std::invalid_argument("fermat_axis_subfiber: axis must be 0, 1 or 2");
    const HomPoly3 curve = fermat_u_family(degree, u0);

    std::vector<ProjPoint> points;
    std::vector<double> residuals;
    try {
        const InflectionSet full = inflection_points(curve, 1);
        points = full.points;
        residuals = full.residuals;
    } catch (const DegenerateFiber& e) {
        // the pencil's permanent multiple points on z2 = 0 make the full solve
        // degenerate; the simple points it recovered are still trustworthy
        points = e.found_points;
        residuals = e.found_residuals;
    }

    const std::vector<ProjPoint> refs = fermat_flexes(degree);
    std::vector<ProjPoint> kept;
    std::vector<double> kept_res;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (residuals[i] > 1e-8) continue;
        const int label = nearest_reference(points[i], refs);
        if (label / degree == axis) {
            kept.push_back(points[i]);
            kept_res.push_back(residuals[i]);
        }
    }

    const int expected = degree * (degree - 2);
    if (static_cast<int>(kept.size()) != expected)
        throw DegenerateFiber("fermat_axis_subfiber: axis cluster points incomplete",
                              expected, static_cast<int>(kept.size()),
                              kept_res.empty() ? 0.0
                                               : *std::max_element(kept_res.begin(),
                                                                   kept_res.end()),
                              std::move(kept), std::move(kept_res));

    for (int attempt = 0; attempt < 8; ++attempt) {
        const CoordChange chart =
            CoordChange::random_unitary(chart_seed + 1000 * static_cast<std::uint64_t>(attempt));
        bool usable = true;
        for (const auto& p : kept) {
            const auto w = chart.apply_adjoint(p.z);
            if (std::abs(w[2]) < 1e-2 * (std::abs(w[0]) + std::abs(w[1]))) {
                usable = false;
                break;
            }
        }
        if (usable) return InflectionSet{curve, kept, kept_res, chart};
    }
    throw ChartDegenerate("fermat_axis_subfiber: no chart keeps the subfiber finite");
}

HomPoly3 double_flex_quartic(std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        HomPoly3 s(3);
        for (auto& c : s.coeffs()) c = rng.cgauss();
        s.set(0, 0, 3, cplx{1.0, 0.0});

        HomPoly3 curve(4);
        curve.set(0, 4, 0, cplx{1.0, 0.0});
        s.for_each([&](int k, int m, int n, std::size_t) {
            curve.set(k + 1, m, n, curve.at(k + 1, m, n) + s.at(k, m, n));
        });

        try {
            inflection_points(curve, 1);
        } catch (const DegenerateFiber& e) {
            // exactly one double point collapses 24 to 23 distinct points; any
            // other count means the draw has extra degeneracies
            if (e.found_count == 23) return curve;
            continue;
        }
        // a full 24-point fiber would contradict the forced double flex; treat
        // it as a bad draw as well
    }
    throw RootFindingFailed("double_flex_quartic: no admissible draw in 16 attempts");
}

} // namespace inflecta
