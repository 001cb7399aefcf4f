#include "inflecta/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "inflecta/errors.hpp"
#include "inflecta/rng.hpp"

namespace inflecta {

namespace {

// effective degrees: largest exponent whose coefficient column is not noise
std::pair<int, int> effective_degrees(const BiPoly& p, double tol) {
    int dx = 0, dy = 0;
    for (int i = 0; i <= p.dx; ++i)
        for (int j = 0; j <= p.dy; ++j)
            if (std::abs(p.at(i, j)) > tol) {
                dx = std::max(dx, i);
                dy = std::max(dy, j);
            }
    return {dx, dy};
}

} // namespace

Resultant sylvester_resultant(const BiPoly& f, const BiPoly& g) {
    const double fmax = f.norm_inf(), gmax = g.norm_inf();
    if (fmax == 0.0 || gmax == 0.0)
        return {{cplx{0.0, 0.0}}, 0.0};
    const auto [dxf, m] = effective_degrees(f, 1e-13 * fmax);
    const auto [dxg, n] = effective_degrees(g, 1e-13 * gmax);
    if (m + n == 0) return {{cplx{1.0, 0.0}}, 1.0};

    const int size = m + n;
    const int samples = n * dxf + m * dxg + 1;
    std::vector<cplx> det_at(static_cast<std::size_t>(samples));
    double rel_mag = 0.0;
    for (int j = 0; j < samples; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / samples;
        const cplx x = std::polar(1.0, theta);
        const std::vector<cplx> fy = f.y_coeffs_at(x);
        const std::vector<cplx> gy = g.y_coeffs_at(x);
        Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(size, size);
        for (int r = 0; r < n; ++r)
            for (int t = 0; t <= m; ++t) s(r, r + t) = fy[static_cast<std::size_t>(m - t)];
        for (int r = 0; r < m; ++r)
            for (int t = 0; t <= n; ++t) s(n + r, r + t) = gy[static_cast<std::size_t>(n - t)];
        const cplx det = s.determinant();
        det_at[static_cast<std::size_t>(j)] = det;
        double hadamard = 1.0;
        for (int r = 0; r < size; ++r)
            hadamard *= std::max(s.row(r).norm(), 1e-300);
        rel_mag = std::max(rel_mag, std::abs(det) / hadamard);
    }

    // interpolate back from the unit-circle samples
    std::vector<cplx> coeffs(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        cplx acc{0.0, 0.0};
        for (int j = 0; j < samples; ++j) {
            const double theta = -2.0 * std::numbers::pi * j * k / samples;
            acc += det_at[static_cast<std::size_t>(j)] * std::polar(1.0, theta);
        }
        coeffs[static_cast<std::size_t>(k)] = acc / static_cast<double>(samples);
    }
    double cmax = 0.0;
    for (const auto& c : coeffs) cmax = std::max(cmax, std::abs(c));
    while (coeffs.size() > 1 && std::abs(coeffs.back()) <= 1e-12 * cmax) coeffs.pop_back();
    return {std::move(coeffs), rel_mag};
}

std::vector<cplx> univariate_roots(const std::vector<cplx>& coeffs_in) {
    std::vector<cplx> c = coeffs_in;
    double cmax = 0.0;
    for (const auto& v : c) cmax = std::max(cmax, std::abs(v));
    if (cmax == 0.0)
        throw RootFindingFailed("univariate_roots: zero polynomial");
    while (c.size() > 1 && std::abs(c.back()) <= 1e-13 * cmax) c.pop_back();
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 0) return {};
    for (auto& v : c) v /= cmax;

    const auto eval_both = [&](cplx z) {
        cplx p{0.0, 0.0}, dp{0.0, 0.0};
        for (int i = n; i >= 0; --i) {
            dp = dp * z + p;
            p = p * z + c[static_cast<std::size_t>(i)];
        }
        return std::pair{p, dp};
    };

    // initial guesses on a slightly eccentric circle sized by |c0/cn|^(1/n)
    double r0 = 1.0;
    if (std::abs(c.front()) > 0.0)
        r0 = std::pow(std::abs(c.front()) / std::abs(c.back()), 1.0 / n);
    r0 = std::clamp(r0, 1e-6, 1e6);
    std::vector<cplx> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double radius = r0 * (0.95 + 0.1 * k / std::max(1, n - 1));
        const double theta = 2.0 * std::numbers::pi * k / n + 0.4;
        z[static_cast<std::size_t>(k)] = std::polar(radius, theta);
    }

    const auto backward_error = [&](cplx zk, cplx pval) {
        double denom = 0.0, pw = 1.0;
        const double az = std::abs(zk);
        for (int i = 0; i <= n; ++i) {
            denom += std::abs(c[static_cast<std::size_t>(i)]) * pw;
            pw *= az;
        }
        return std::abs(pval) / std::max(denom, 1e-300);
    };

    bool settled = false;
    for (int sweep = 0; sweep < 500 && !settled; ++sweep) {
        double max_rel_step = 0.0;
        for (int k = 0; k < n; ++k) {
            auto& zk = z[static_cast<std::size_t>(k)];
            const auto [p, dp] = eval_both(zk);
            if (p == cplx{0.0, 0.0}) continue;
            if (dp == cplx{0.0, 0.0}) {
                zk += 1e-6 * (1.0 + std::abs(zk)) * std::polar(1.0, 0.7);
                max_rel_step = 1.0;
                continue;
            }
            const cplx newton = p / dp;
            cplx repel{0.0, 0.0};
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                cplx diff = zk - z[static_cast<std::size_t>(j)];
                if (std::abs(diff) < 1e-300) diff = cplx{1e-300, 0.0};
                repel += 1.0 / diff;
            }
            const cplx denom = 1.0 - newton * repel;
            const cplx step = std::abs(denom) < 1e-300 ? newton : newton / denom;
            zk -= step;
            max_rel_step = std::max(max_rel_step, std::abs(step) / (1.0 + std::abs(zk)));
        }
        if (max_rel_step < 1e-14) settled = true;
        // clustered (multiple) roots never settle in step size, but they do in
        // backward error; accept that as convergence too
        if (!settled && max_rel_step < 1e-7) {
            double worst = 0.0;
            for (const auto& zk : z) worst = std::max(worst, backward_error(zk, eval_both(zk).first));
            if (worst < 1e-12) settled = true;
        }
    }

    // guarded polish: plain Newton steps kept only when they reduce |p|
    for (auto& zk : z) {
        for (int it = 0; it < 2; ++it) {
            const auto [p, dp] = eval_both(zk);
            if (dp == cplx{0.0, 0.0}) break;
            const cplx cand = zk - p / dp;
            if (std::abs(eval_both(cand).first) < std::abs(p)) zk = cand;
            else break;
        }
    }

    double worst = 0.0;
    for (const auto& zk : z) worst = std::max(worst, backward_error(zk, eval_both(zk).first));
    if (worst > 1e-10)
        throw RootFindingFailed("univariate_roots: backward error " + std::to_string(worst));

    std::sort(z.begin(), z.end(), [](cplx a, cplx b) {
        return std::pair{a.real(), a.imag()} < std::pair{b.real(), b.imag()};
    });
    return z;
}

std::pair<cplx, cplx> newton_refine(const BiPoly& f, const BiPoly& g, cplx x, cplx y,
                                    double tol, int max_iter) {
    const BiPoly fx = f.deriv_x(), fy = f.deriv_y();
    const BiPoly gx = g.deriv_x(), gy = g.deriv_y();
    for (int it = 0; it < max_iter; ++it) {
        const cplx fv = f.eval(x, y), gv = g.eval(x, y);
        const cplx a = fx.eval(x, y), b = fy.eval(x, y);
        const cplx cc = gx.eval(x, y), dd = gy.eval(x, y);
        const cplx det = a * dd - b * cc;
        const double scale = std::abs(a) * std::abs(dd) + std::abs(b) * std::abs(cc);
        if (std::abs(det) <= 1e-8 * scale + 1e-300)
            throw SingularJacobian("newton_refine: jacobian degenerate");
        const cplx dx = (fv * dd - b * gv) / det;
        const cplx dy = (a * gv - fv * cc) / det;
        x -= dx;
        y -= dy;
        if (std::abs(dx) + std::abs(dy) < tol * (1.0 + std::abs(x) + std::abs(y))) break;
    }
    return {x, y};
}

namespace {

InflectionSet solve_in_chart(const HomPoly3& curve, const HomPoly3& hess,
                             const CoordChange& chart, int expected) {
    const HomPoly3 g = change_coords(curve, chart);
    const HomPoly3 hg = change_coords(hess, chart);
    if (std::abs(g.at(0, g.degree(), 0)) < 1e-8 * g.norm_inf())
        throw ChartDegenerate("chart kills the curve's top y coefficient");
    if (std::abs(hg.at(0, hg.degree(), 0)) < 1e-8 * hg.norm_inf())
        throw ChartDegenerate("chart kills the hessian's top y coefficient");

    BiPoly f = dehomogenize(g, 3);
    BiPoly h = dehomogenize(hg, 3);
    f.scale(1.0 / f.norm_inf());
    h.scale(1.0 / h.norm_inf());

    const Resultant res = sylvester_resultant(f, h);
    if (res.relative_magnitude <= 1e-10)
        throw DegenerateFiber("curve and hessian share a component: resultant vanishes",
                              expected, 0, 0.0);
    const std::vector<cplx> xroots = univariate_roots(res.coeffs);
    if (static_cast<int>(xroots.size()) != expected)
        throw ChartDegenerate("resultant degree dropped: intersection at infinity");

    // absolute values of h's coefficients, for scale-aware residual ranking
    std::vector<double> habs(h.c.size());
    for (std::size_t i = 0; i < h.c.size(); ++i) habs[i] = std::abs(h.c[i]);
    const auto h_rel = [&](cplx x, cplx y) {
        double denom = 0.0;
        const double ax = std::abs(x), ay = std::abs(y);
        double xp = 1.0;
        for (int i = 0; i <= h.dx; ++i) {
            double yp = 1.0;
            for (int j = 0; j <= h.dy; ++j) {
                denom += habs[static_cast<std::size_t>(i * (h.dy + 1) + j)] * xp * yp;
                yp *= ay;
            }
            xp *= ax;
        }
        return std::abs(h.eval(x, y)) / std::max(denom, 1e-300);
    };

    std::vector<std::pair<cplx, cplx>> chart_points;
    chart_points.reserve(xroots.size());
    for (const cplx x0 : xroots) {
        const std::vector<cplx> ycands = univariate_roots(f.y_coeffs_at(x0));
        double best = 1e300, second = 1e300;
        cplx ybest{0.0, 0.0}, ysecond{0.0, 0.0};
        for (const cplx y : ycands) {
            const double rel = h_rel(x0, y);
            if (rel < best) {
                second = best;
                ysecond = ybest;
                best = rel;
                ybest = y;
            } else if (rel < second) {
                second = rel;
                ysecond = y;
            }
        }
        if (ycands.empty())
            throw ChartDegenerate("no curve point above a resultant root");
        if (second < 1e-8 && std::abs(ysecond - ybest) > 1e-6 * (1.0 + std::abs(ybest)))
            throw ChartDegenerate("two hessian roots above one x: ambiguous column");

        cplx xr = x0, yr = ybest;
        try {
            const auto [xn, yn] = newton_refine(f, h, x0, ybest);
            // refinement may not wander to a different basin
            if (std::abs(xn - x0) + std::abs(yn - ybest) <=
                1e-2 * (1.0 + std::abs(x0) + std::abs(ybest))) {
                xr = xn;
                yr = yn;
            }
        } catch (const SingularJacobian&) {
            // multiple point; the unrefined value is as good as it gets
        }
        chart_points.emplace_back(xr, yr);
    }

    const double curve_norm = curve.norm_inf();
    const double hess_norm = hess.norm_inf();
    std::vector<ProjPoint> points;
    std::vector<double> residuals;
    for (const auto& [x, y] : chart_points) {
        const auto v = chart.apply({x, y, cplx{1.0, 0.0}});
        const ProjPoint p(v[0], v[1], v[2]);
        const double r = std::max(std::abs(curve.evaluate(p)) / curve_norm,
                                  std::abs(hess.evaluate(p)) / hess_norm);
        bool merged = false;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (fs_distance(points[i], p) < 1e-6) {
                if (r < residuals[i]) {
                    points[i] = p;
                    residuals[i] = r;
                }
                merged = true;
                break;
            }
        }
        if (!merged) {
            points.push_back(p);
            residuals.push_back(r);
        }
    }

    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto key = [](const ProjPoint& p) {
            return std::array<double, 6>{p[0].real(), p[0].imag(), p[1].real(),
                                         p[1].imag(), p[2].real(), p[2].imag()};
        };
        return key(points[a]) < key(points[b]);
    });
    std::vector<ProjPoint> sorted_points;
    std::vector<double> sorted_res;
    for (const std::size_t i : order) {
        sorted_points.push_back(points[i]);
        sorted_res.push_back(residuals[i]);
    }

    const double max_res =
        sorted_res.empty() ? 0.0 : *std::max_element(sorted_res.begin(), sorted_res.end());
    const int found = static_cast<int>(sorted_points.size());
    if (found != expected || max_res > 1e-10)
        throw DegenerateFiber("inflection fiber is not the expected set of simple points",
                              expected, found, max_res, std::move(sorted_points),
                              std::move(sorted_res));
    return {curve, std::move(sorted_points), std::move(sorted_res), chart};
}

} // namespace

InflectionSet inflection_points(const HomPoly3& curve, std::uint64_t seed) {
    const int d = curve.degree();
    if (d < 3)
        throw std::invalid_argument("inflection_points: degree must be at least 3");
    if (curve.norm_inf() == 0.0)
        throw std::invalid_argument("inflection_points: zero curve");
    const int expected = 3 * d * (d - 2);
    const HomPoly3 hess = hessian_det(curve);
    if (hess.norm_inf() <= 1e-14 * std::pow(curve.norm_inf(), 3.0))
        throw DegenerateFiber("hessian determinant vanishes identically", expected, 0, 0.0);

    std::string chart_error;
    for (std::uint64_t attempt = 0; attempt < 4; ++attempt) {
        const CoordChange chart = CoordChange::random_unitary(seed + 77 + 1000 * attempt);
        try {
            return solve_in_chart(curve, hess, chart, expected);
        } catch (const ChartDegenerate& e) {
            chart_error = e.what();
        }
    }
    throw ChartDegenerate("no usable chart after 4 draws: " + chart_error);
}

HomPoly3 random_smooth_curve(int degree, std::uint64_t seed) {
    Rng rng(seed);
    std::string last_error;
    for (int attempt = 0; attempt < 20; ++attempt) {
        HomPoly3 cand(degree);
        for (auto& c : cand.coeffs()) c = rng.cgauss();
        try {
            inflection_points(cand, seed);
            return cand;
        } catch (const DegenerateFiber& e) {
            last_error = e.what();
        } catch (const ChartDegenerate& e) {
            last_error = e.what();
        } catch (const RootFindingFailed& e) {
            last_error = e.what();
        }
    }
    throw RootFindingFailed("random_smooth_curve: 20 draws all failed, last: " + last_error);
}

std::vector<std::vector<int>> cluster(const std::vector<ProjPoint>& points, double radius) {
    const int n = static_cast<int>(points.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (fs_distance(points[static_cast<std::size_t>(i)],
                            points[static_cast<std::size_t>(j)]) < radius)
                parent[static_cast<std::size_t>(find(i))] = find(j);

    std::vector<std::vector<int>> groups;
    std::vector<int> root_group(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const int r = find(i);
        if (root_group[static_cast<std::size_t>(r)] < 0) {
            root_group[static_cast<std::size_t>(r)] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<std::size_t>(root_group[static_cast<std::size_t>(r)])].push_back(i);
    }
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return groups;
}

std::optional<ProjPoint> singular_witness(const HomPoly3& curve) {
    const HomPoly3 p1 = partial(curve, 1);
    const HomPoly3 p2 = partial(curve, 2);
    const HomPoly3 p3 = partial(curve, 3);
    const double n1 = std::max(p1.norm_inf(), 1e-300);
    const double n2 = std::max(p2.norm_inf(), 1e-300);
    const double n3 = std::max(p3.norm_inf(), 1e-300);
    const auto is_witness = [&](const ProjPoint& p) {
        return std::abs(p1.evaluate(p)) / n1 < 1e-8 &&
               std::abs(p2.evaluate(p)) / n2 < 1e-8 &&
               std::abs(p3.evaluate(p)) / n3 < 1e-8;
    };

    for (const ProjPoint corner : {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1)})
        if (is_witness(corner)) return corner;

    // affine candidates: common zeros of the first two partials in the z3 = 1
    // chart, screened against all three
    const BiPoly f1 = dehomogenize(p1, 3);
    const BiPoly f2 = dehomogenize(p2, 3);
    if (f1.norm_inf() > 0.0 && f2.norm_inf() > 0.0) {
        const Resultant res = sylvester_resultant(f1, f2);
        if (res.relative_magnitude > 1e-12) {
            try {
                for (const cplx x0 : univariate_roots(res.coeffs)) {
                    std::vector<cplx> ycands;
                    try {
                        ycands = univariate_roots(f1.y_coeffs_at(x0));
                    } catch (const RootFindingFailed&) {
                        continue;
                    }
                    for (const cplx y : ycands) {
                        const ProjPoint cand(x0, y, 1);
                        if (is_witness(cand)) return cand;
                    }
                }
            } catch (const RootFindingFailed&) {
                // fall through to the line at infinity
            }
        }
    }

    // candidates on z3 = 0: restrict the first partial to (t, 1, 0)
    const int dp = p1.degree();
    std::vector<cplx> a(static_cast<std::size_t>(dp + 1));
    for (int k = 0; k <= dp; ++k) a[static_cast<std::size_t>(k)] = p1.at(k, dp - k, 0);
    double amax = 0.0;
    for (const auto& v : a) amax = std::max(amax, std::abs(v));
    if (amax > 1e-13 * n1) {
        try {
            for (const cplx t : univariate_roots(a)) {
                const ProjPoint cand(t, 1, 0);
                if (is_witness(cand)) return cand;
            }
        } catch (const RootFindingFailed&) {
        }
    }
    return std::nullopt;
}

} // namespace inflecta
