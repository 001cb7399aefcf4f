#include "inflecta/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "inflecta/errors.hpp"

namespace inflecta {

HomPoly3 waypoint_curve(const CoeffPath& path, std::size_t index) {
    if (index >= path.waypoints.size())
        throw std::invalid_argument("waypoint_curve: index out of range");
    const auto& w = path.waypoints[index];
    if (w.size() != HomPoly3::coeff_count(path.degree))
        throw std::invalid_argument("waypoint_curve: coefficient count mismatch");
    HomPoly3 p(path.degree);
    p.coeffs() = w;
    return p;
}

namespace {

// a + s b, assuming identical layout
BiPoly lin_comb(const BiPoly& a, const BiPoly& b, double s) {
    BiPoly r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += s * b.c[i];
    return r;
}

std::vector<double> abs_coeffs(const BiPoly& p) {
    std::vector<double> out(p.c.size());
    for (std::size_t i = 0; i < p.c.size(); ++i) out[i] = std::abs(p.c[i]);
    return out;
}

// |p(x, y)| over sum |c_ij| |x|^i |y|^j: a residual that means the same thing
// at every coefficient scale and every point magnitude
double rel_residual(const BiPoly& p, const std::vector<double>& pabs, cplx x, cplx y) {
    const double ax = std::abs(x), ay = std::abs(y);
    double denom = 0.0, xp = 1.0;
    for (int i = 0; i <= p.dx; ++i) {
        double yp = 1.0;
        for (int j = 0; j <= p.dy; ++j) {
            denom += pabs[static_cast<std::size_t>(i * (p.dy + 1) + j)] * xp * yp;
            yp *= ay;
        }
        xp *= ax;
    }
    return std::abs(p.eval(x, y)) / std::max(denom, 1e-300);
}

void validate(const CoeffPath& path, const InflectionSet& start, const TrackOptions& opts) {
    if (path.degree < 3)
        throw std::invalid_argument("track_path: degree must be at least 3");
    if (path.waypoints.size() < 2)
        throw std::invalid_argument("track_path: need at least two waypoints");
    const std::size_t nc = HomPoly3::coeff_count(path.degree);
    for (const auto& w : path.waypoints)
        if (w.size() != nc)
            throw std::invalid_argument("track_path: waypoint coefficient count mismatch");
    if (path.closed && path.waypoints.front() != path.waypoints.back())
        throw std::invalid_argument("track_path: closed path must repeat its first waypoint");
    if (start.curve.degree() != path.degree)
        throw std::invalid_argument("track_path: start fiber degree mismatch");
    if (!approx_equal(waypoint_curve(path, 0), start.curve, 1e-10))
        throw std::invalid_argument("track_path: start fiber is not over the first waypoint");
    if (!(opts.min_step > 0.0) || !(opts.min_step < opts.initial_step) ||
        !(opts.initial_step <= 1.0))
        throw std::invalid_argument("track_path: inconsistent step options");
}

} // namespace

TrackResult track_path(const CoeffPath& path, const InflectionSet& start,
                       const TrackOptions& opts) {
    validate(path, start, opts);
    const CoordChange& chart = start.chart;
    const int n = static_cast<int>(start.points.size());

    // strand state in chart coordinates
    std::vector<cplx> sx(static_cast<std::size_t>(n)), sy(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto w = chart.apply_adjoint(start.points[static_cast<std::size_t>(i)].z);
        if (std::abs(w[2]) < 1e-9 * (std::abs(w[0]) + std::abs(w[1])))
            throw PathFailure("track_path: start point at chart infinity", i, 0, 0.0);
        sx[static_cast<std::size_t>(i)] = w[0] / w[2];
        sy[static_cast<std::size_t>(i)] = w[1] / w[2];
    }

    TrackResult out;
    out.min_step_used = opts.initial_step;
    int steps = 0, rejections = 0;

    const auto project = [&](cplx x, cplx y) {
        const auto v = chart.apply({x, y, cplx{1.0, 0.0}});
        return ProjPoint(v[0], v[1], v[2]);
    };

    for (int seg = 0; seg + 1 < static_cast<int>(path.waypoints.size()); ++seg) {
        // a repeated waypoint is a zero-length segment; nothing moves
        if (path.waypoints[static_cast<std::size_t>(seg)] ==
            path.waypoints[static_cast<std::size_t>(seg) + 1])
            continue;
        const HomPoly3 a_curve = waypoint_curve(path, static_cast<std::size_t>(seg));
        const HomPoly3 b_curve = waypoint_curve(path, static_cast<std::size_t>(seg) + 1);
        const HomPoly3 ga = change_coords(a_curve, chart);
        const HomPoly3 gd = change_coords(subtract(b_curve, a_curve), chart);
        const BiPoly fa = dehomogenize(ga, 3);
        const BiPoly fd = dehomogenize(gd, 3);
        const BiPoly fax = fa.deriv_x(), fay = fa.deriv_y();
        const BiPoly fdx = fd.deriv_x(), fdy = fd.deriv_y();

        const auto hess_at = [&](double s) {
            return dehomogenize(hessian_det(add(ga, scale(gd, cplx{s, 0.0}))), 3);
        };

        double s = 0.0;
        double step = opts.initial_step;
        int consecutive = 0;
        BiPoly h = hess_at(0.0);
        BiPoly hx = h.deriv_x(), hy = h.deriv_y();
        bool tangent_ready = false;
        std::vector<cplx> tx(static_cast<std::size_t>(n)), ty(static_cast<std::size_t>(n));

        while (s < 1.0 - 1e-12) {
            if (steps >= opts.max_steps)
                throw PathFailure("track_path: step budget exhausted", -1, seg, s);

            if (!tangent_ready) {
                // parameter derivative of the hessian by finite difference on
                // the segment coefficients
                const double delta = 1e-7;
                const BiPoly hplus = hess_at(s + delta);
                BiPoly hdot = hplus;
                for (std::size_t k = 0; k < hdot.c.size(); ++k)
                    hdot.c[k] = (hdot.c[k] - h.c[k]) / delta;
                for (int i = 0; i < n; ++i) {
                    const auto iu = static_cast<std::size_t>(i);
                    const cplx x = sx[iu], y = sy[iu];
                    const cplx fx = fax.eval(x, y) + s * fdx.eval(x, y);
                    const cplx fy = fay.eval(x, y) + s * fdy.eval(x, y);
                    const cplx gx = hx.eval(x, y);
                    const cplx gy = hy.eval(x, y);
                    const cplx det = fx * gy - fy * gx;
                    const double scale =
                        std::abs(fx) * std::abs(gy) + std::abs(fy) * std::abs(gx);
                    if (std::abs(det) <= 1e-12 * scale + 1e-300) {
                        // no usable tangent; the trust region will force tiny
                        // steps and surface a PathFailure if this persists
                        tx[iu] = ty[iu] = cplx{0.0, 0.0};
                        continue;
                    }
                    const cplx rf = fd.eval(x, y);
                    const cplx rh = hdot.eval(x, y);
                    tx[iu] = -(rf * gy - fy * rh) / det;
                    ty[iu] = -(fx * rh - rf * gx) / det;
                }
                tangent_ready = true;
            }

            double s2 = s + step;
            if (s2 > 1.0 - 1e-12) s2 = 1.0;
            const double ds = s2 - s;

            const BiPoly f2 = lin_comb(fa, fd, s2);
            const BiPoly h2 = hess_at(s2);
            const BiPoly f2x = f2.deriv_x(), f2y = f2.deriv_y();
            const BiPoly h2x = h2.deriv_x(), h2y = h2.deriv_y();
            const std::vector<double> f2abs = abs_coeffs(f2);
            const std::vector<double> h2abs = abs_coeffs(h2);

            int bad_strand = -1;
            int overflow_strand = -1;
            std::vector<cplx> nx(static_cast<std::size_t>(n)), ny(static_cast<std::size_t>(n));
            for (int i = 0; i < n && bad_strand < 0 && overflow_strand < 0; ++i) {
                const auto iu = static_cast<std::size_t>(i);
                const cplx px = sx[iu] + ds * tx[iu];
                const cplx py = sy[iu] + ds * ty[iu];
                const double pred_disp = std::abs(ds * tx[iu]) + std::abs(ds * ty[iu]);

                cplx x = px, y = py;
                bool converged = false;
                for (int it = 0; it <= opts.max_newton_iters; ++it) {
                    if (rel_residual(f2, f2abs, x, y) < opts.newton_tol &&
                        rel_residual(h2, h2abs, x, y) < opts.newton_tol) {
                        converged = true;
                        break;
                    }
                    if (it == opts.max_newton_iters) break;
                    const cplx fv = f2.eval(x, y), hv = h2.eval(x, y);
                    const cplx jfx = f2x.eval(x, y), jfy = f2y.eval(x, y);
                    const cplx jhx = h2x.eval(x, y), jhy = h2y.eval(x, y);
                    const cplx det = jfx * jhy - jfy * jhx;
                    const double dscale =
                        std::abs(jfx) * std::abs(jhy) + std::abs(jfy) * std::abs(jhx);
                    if (std::abs(det) <= 1e-14 * dscale + 1e-300) break;
                    x -= (fv * jhy - jfy * hv) / det;
                    y -= (jfx * hv - fv * jhx) / det;
                }
                if (!converged) {
                    bad_strand = i;
                    break;
                }
                // the corrector may only polish the prediction, never wander
                if (std::abs(x - px) + std::abs(y - py) > 0.5 * pred_disp + 1e-9) {
                    bad_strand = i;
                    break;
                }
                if (std::abs(x) > 1e6 || std::abs(y) > 1e6) {
                    overflow_strand = i;
                    break;
                }
                nx[iu] = x;
                ny[iu] = y;
            }
            ++steps;

            if (overflow_strand >= 0)
                throw PathFailure("track_path: strand left the chart", overflow_strand, seg, s2);
            if (bad_strand >= 0) {
                ++rejections;
                consecutive = 0;
                step *= opts.step_contract;
                if (step < opts.min_step)
                    throw PathFailure("track_path: step underflow", bad_strand, seg, s);
                continue;
            }

            sx = std::move(nx);
            sy = std::move(ny);
            s = s2;
            out.min_step_used = std::min(out.min_step_used, ds);
            h = h2;
            hx = h.deriv_x();
            hy = h.deriv_y();
            tangent_ready = false;

            std::vector<ProjPoint> snapshot;
            snapshot.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                snapshot.push_back(
                    project(sx[static_cast<std::size_t>(i)], sy[static_cast<std::size_t>(i)]));
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (fs_distance(snapshot[static_cast<std::size_t>(i)],
                                    snapshot[static_cast<std::size_t>(j)]) < 1e-4)
                        throw PathCollision("track_path: strands too close, path hugs the "
                                            "discriminant",
                                            i, j, seg);

            if (++consecutive >= 4) {
                step = std::min(step * opts.step_expand, 0.25);
                consecutive = 0;
            }
        }
    }

    out.steps_taken = steps;
    out.rejections = rejections;
    out.end_points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.end_points.push_back(
            project(sx[static_cast<std::size_t>(i)], sy[static_cast<std::size_t>(i)]));
    if (path.closed) out.permutation = match_points(out.end_points, start.points);
    return out;
}

Permutation match_points(const std::vector<ProjPoint>& end,
                         const std::vector<ProjPoint>& start) {
    if (end.size() != start.size())
        throw std::invalid_argument("match_points: cardinality mismatch");
    const int n = static_cast<int>(end.size());
    std::vector<int> images(static_cast<std::size_t>(n), -1);
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        double best = 1e300, second = 1e300;
        int best_j = -1;
        for (int j = 0; j < n; ++j) {
            const double dist = fs_distance(end[static_cast<std::size_t>(i)],
                                            start[static_cast<std::size_t>(j)]);
            if (dist < best) {
                second = best;
                best = dist;
                best_j = j;
            } else if (dist < second) {
                second = dist;
            }
        }
        if (n > 1 && second < 10.0 * best)
            throw MatchAmbiguous("match_points: second-nearest start point within 10x of "
                                 "nearest",
                                 i);
        images[static_cast<std::size_t>(i)] = best_j;
        ++hits[static_cast<std::size_t>(best_j)];
    }
    for (int j = 0; j < n; ++j)
        if (hits[static_cast<std::size_t>(j)] != 1) {
            int offender = -1;
            for (int i = 0; i < n; ++i)
                if (images[static_cast<std::size_t>(i)] == j) offender = i;
            throw MatchAmbiguous("match_points: assignment is not a bijection", offender);
        }
    return Permutation(std::move(images));
}

Permutation monodromy_permutation(const CoeffPath& loop, const InflectionSet& base,
                                  const TrackOptions& opts) {
    if (!loop.closed)
        throw std::invalid_argument("monodromy_permutation: loop must be closed");
    TrackResult result = track_path(loop, base, opts);
    return *result.permutation;
}

} // namespace inflecta
