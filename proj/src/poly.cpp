#include "inflecta/poly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace inflecta {

// ---------------------------------------------------------------- ProjPoint

ProjPoint::ProjPoint(cplx z1, cplx z2, cplx z3) : z{z1, z2, z3} {
    int best = 0;
    double best_mod = std::abs(z[0]);
    for (int i = 1; i < 3; ++i) {
        const double m = std::abs(z[static_cast<std::size_t>(i)]);
        if (m > best_mod) {
            best_mod = m;
            best = i;
        }
    }
    if (best_mod == 0.0)
        throw std::invalid_argument("ProjPoint: zero vector");
    const cplx pivot = z[static_cast<std::size_t>(best)];
    for (auto& zi : z) zi /= pivot;
    z[static_cast<std::size_t>(best)] = cplx{1.0, 0.0};
}

double fs_distance(const ProjPoint& a, const ProjPoint& b) {
    // sin of the angle via the Lagrange identity
    //   |a|^2 |b|^2 - |<a,b>|^2 = sum_{i<j} |a_i b_j - a_j b_i|^2,
    // which stays accurate for nearly parallel representatives where the
    // 1 - cos^2 form loses everything to cancellation
    double na = 0.0, nb = 0.0, wedge = 0.0;
    for (int i = 0; i < 3; ++i) {
        na += std::norm(a[i]);
        nb += std::norm(b[i]);
        for (int j = i + 1; j < 3; ++j) wedge += std::norm(a[i] * b[j] - a[j] * b[i]);
    }
    return std::sqrt(wedge / (na * nb));
}

// -------------------------------------------------------------- CoordChange

CoordChange::CoordChange(const std::array<cplx, 9>& m) : m_(m) {
    if (std::abs(det()) < 1e-6)
        throw std::invalid_argument("CoordChange: matrix numerically singular");
}

CoordChange CoordChange::identity() {
    return CoordChange({cplx{1, 0}, {}, {}, {}, cplx{1, 0}, {}, {}, {}, cplx{1, 0}});
}

CoordChange CoordChange::random_unitary(std::uint64_t seed) {
    Rng rng(seed);
    Eigen::Matrix3cd g;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            g(r, c) = rng.cgauss();
    Eigen::HouseholderQR<Eigen::Matrix3cd> qr(g);
    Eigen::Matrix3cd q = qr.householderQ();
    std::array<cplx, 9> out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            out[static_cast<std::size_t>(3 * r + c)] = q(r, c);
    return CoordChange(out);
}

cplx CoordChange::det() const {
    const auto& m = m_;
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

CoordChange CoordChange::inverse() const {
    const auto& m = m_;
    const cplx d = det();
    std::array<cplx, 9> inv;
    inv[0] = (m[4] * m[8] - m[5] * m[7]) / d;
    inv[1] = (m[2] * m[7] - m[1] * m[8]) / d;
    inv[2] = (m[1] * m[5] - m[2] * m[4]) / d;
    inv[3] = (m[5] * m[6] - m[3] * m[8]) / d;
    inv[4] = (m[0] * m[8] - m[2] * m[6]) / d;
    inv[5] = (m[2] * m[3] - m[0] * m[5]) / d;
    inv[6] = (m[3] * m[7] - m[4] * m[6]) / d;
    inv[7] = (m[1] * m[6] - m[0] * m[7]) / d;
    inv[8] = (m[0] * m[4] - m[1] * m[3]) / d;
    return CoordChange(inv);
}

std::array<cplx, 3> CoordChange::apply(const std::array<cplx, 3>& v) const {
    std::array<cplx, 3> out{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            out[static_cast<std::size_t>(r)] +=
                m_[static_cast<std::size_t>(3 * r + c)] * v[static_cast<std::size_t>(c)];
    return out;
}

std::array<cplx, 3> CoordChange::apply_adjoint(const std::array<cplx, 3>& v) const {
    std::array<cplx, 3> out{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            out[static_cast<std::size_t>(r)] +=
                std::conj(m_[static_cast<std::size_t>(3 * c + r)]) * v[static_cast<std::size_t>(c)];
    return out;
}

// ------------------------------------------------------------------- BiPoly

cplx BiPoly::eval(cplx x, cplx y) const {
    // Horner in x of Horner-in-y rows
    cplx acc{0.0, 0.0};
    for (int i = dx; i >= 0; --i) {
        cplx row{0.0, 0.0};
        for (int j = dy; j >= 0; --j) row = row * y + at(i, j);
        acc = acc * x + row;
    }
    return acc;
}

BiPoly BiPoly::deriv_x() const {
    if (dx == 0) return BiPoly(0, dy);
    BiPoly out(dx - 1, dy);
    for (int i = 1; i <= dx; ++i)
        for (int j = 0; j <= dy; ++j)
            out.at(i - 1, j) = static_cast<double>(i) * at(i, j);
    return out;
}

BiPoly BiPoly::deriv_y() const {
    if (dy == 0) return BiPoly(dx, 0);
    BiPoly out(dx, dy - 1);
    for (int i = 0; i <= dx; ++i)
        for (int j = 1; j <= dy; ++j)
            out.at(i, j - 1) = static_cast<double>(j) * at(i, j);
    return out;
}

std::vector<cplx> BiPoly::y_coeffs_at(cplx x) const {
    std::vector<cplx> out(static_cast<std::size_t>(dy + 1), cplx{0.0, 0.0});
    for (int j = 0; j <= dy; ++j) {
        cplx acc{0.0, 0.0};
        for (int i = dx; i >= 0; --i) acc = acc * x + at(i, j);
        out[static_cast<std::size_t>(j)] = acc;
    }
    return out;
}

double BiPoly::norm_inf() const {
    double best = 0.0;
    for (const auto& v : c) best = std::max(best, std::abs(v));
    return best;
}

void BiPoly::scale(cplx s) {
    for (auto& v : c) v *= s;
}

// ----------------------------------------------------------------- HomPoly3

HomPoly3::HomPoly3(int degree)
    : degree_(degree), c_(coeff_count(degree), cplx{0.0, 0.0}) {
    if (degree < 0) throw std::invalid_argument("HomPoly3: negative degree");
}

std::size_t HomPoly3::index(int degree, int k, int m) {
    const int r = degree - k;
    return static_cast<std::size_t>(r * (r + 1) / 2 + (r - m));
}

cplx HomPoly3::at(int k, int m, int n) const {
    if (k < 0 || m < 0 || n < 0 || k + m + n != degree_)
        throw std::invalid_argument("HomPoly3::at: exponents do not sum to degree");
    return c_[index(degree_, k, m)];
}

void HomPoly3::set(int k, int m, int n, cplx value) {
    if (k < 0 || m < 0 || n < 0 || k + m + n != degree_)
        throw std::invalid_argument("HomPoly3::set: exponents do not sum to degree");
    c_[index(degree_, k, m)] = value;
}

double HomPoly3::norm_inf() const {
    double best = 0.0;
    for (const auto& v : c_) best = std::max(best, std::abs(v));
    return best;
}

bool HomPoly3::is_zero(double tol) const {
    for (const auto& v : c_)
        if (std::abs(v) > tol) return false;
    return true;
}

cplx HomPoly3::evaluate(const ProjPoint& p) const {
    // power tables per coordinate keep this linear in the coefficient count
    const int d = degree_;
    std::vector<cplx> p1(static_cast<std::size_t>(d + 1)), p2(p1), p3(p1);
    p1[0] = p2[0] = p3[0] = cplx{1.0, 0.0};
    for (int e = 1; e <= d; ++e) {
        p1[static_cast<std::size_t>(e)] = p1[static_cast<std::size_t>(e - 1)] * p[0];
        p2[static_cast<std::size_t>(e)] = p2[static_cast<std::size_t>(e - 1)] * p[1];
        p3[static_cast<std::size_t>(e)] = p3[static_cast<std::size_t>(e - 1)] * p[2];
    }
    cplx acc{0.0, 0.0};
    for_each([&](int k, int m, int n, std::size_t idx) {
        const cplx coeff = c_[idx];
        if (coeff != cplx{0.0, 0.0})
            acc += coeff * p1[static_cast<std::size_t>(k)] * p2[static_cast<std::size_t>(m)] *
                   p3[static_cast<std::size_t>(n)];
    });
    return acc;
}

HomPoly3 add(const HomPoly3& a, const HomPoly3& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("add: degree mismatch");
    HomPoly3 out(a.degree());
    for (std::size_t i = 0; i < out.coeffs().size(); ++i)
        out.coeffs()[i] = a.coeffs()[i] + b.coeffs()[i];
    return out;
}

HomPoly3 subtract(const HomPoly3& a, const HomPoly3& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("subtract: degree mismatch");
    HomPoly3 out(a.degree());
    for (std::size_t i = 0; i < out.coeffs().size(); ++i)
        out.coeffs()[i] = a.coeffs()[i] - b.coeffs()[i];
    return out;
}

HomPoly3 scale(const HomPoly3& a, cplx s) {
    HomPoly3 out(a.degree());
    for (std::size_t i = 0; i < out.coeffs().size(); ++i)
        out.coeffs()[i] = a.coeffs()[i] * s;
    return out;
}

HomPoly3 multiply(const HomPoly3& a, const HomPoly3& b) {
    HomPoly3 out(a.degree() + b.degree());
    const int dout = out.degree();
    a.for_each([&](int ka, int ma, int, std::size_t ia) {
        const cplx ca = a.coeffs()[ia];
        if (ca == cplx{0.0, 0.0}) return;
        b.for_each([&](int kb, int mb, int, std::size_t ib) {
            const cplx cb = b.coeffs()[ib];
            if (cb == cplx{0.0, 0.0}) return;
            out.coeffs()[HomPoly3::index(dout, ka + kb, ma + mb)] += ca * cb;
        });
    });
    return out;
}

HomPoly3 partial(const HomPoly3& p, int axis) {
    if (axis < 1 || axis > 3) throw std::invalid_argument("partial: axis must be 1..3");
    if (p.degree() == 0) return HomPoly3(0);
    HomPoly3 out(p.degree() - 1);
    const int dout = out.degree();
    p.for_each([&](int k, int m, int n, std::size_t idx) {
        const cplx c = p.coeffs()[idx];
        if (c == cplx{0.0, 0.0}) return;
        if (axis == 1 && k > 0)
            out.coeffs()[HomPoly3::index(dout, k - 1, m)] += static_cast<double>(k) * c;
        else if (axis == 2 && m > 0)
            out.coeffs()[HomPoly3::index(dout, k, m - 1)] += static_cast<double>(m) * c;
        else if (axis == 3 && n > 0)
            out.coeffs()[HomPoly3::index(dout, k, m)] += static_cast<double>(n) * c;
    });
    return out;
}

HomPoly3 hessian_det(const HomPoly3& p) {
    if (p.degree() < 3)
        throw std::invalid_argument("hessian_det: degree must be >= 3");
    const HomPoly3 p1 = partial(p, 1), p2 = partial(p, 2), p3 = partial(p, 3);
    const HomPoly3 h11 = partial(p1, 1), h12 = partial(p1, 2), h13 = partial(p1, 3);
    const HomPoly3 h22 = partial(p2, 2), h23 = partial(p2, 3), h33 = partial(p3, 3);
    HomPoly3 det = multiply(h11, subtract(multiply(h22, h33), multiply(h23, h23)));
    det = subtract(det, multiply(h12, subtract(multiply(h12, h33), multiply(h13, h23))));
    det = add(det, multiply(h13, subtract(multiply(h12, h23), multiply(h13, h22))));
    return det;
}

HomPoly3 change_coords(const HomPoly3& p, const CoordChange& A) {
    const int d = p.degree();
    // rows of A as linear forms, with cached powers up to d
    std::array<std::vector<HomPoly3>, 3> pows;
    for (int r = 0; r < 3; ++r) {
        HomPoly3 lin(1);
        lin.set(1, 0, 0, A.at(r, 0));
        lin.set(0, 1, 0, A.at(r, 1));
        lin.set(0, 0, 1, A.at(r, 2));
        auto& cache = pows[static_cast<std::size_t>(r)];
        cache.reserve(static_cast<std::size_t>(d + 1));
        cache.emplace_back(0);
        cache.back().set(0, 0, 0, cplx{1.0, 0.0});
        for (int e = 1; e <= d; ++e) cache.push_back(multiply(cache.back(), lin));
    }
    HomPoly3 out(d);
    p.for_each([&](int k, int m, int n, std::size_t idx) {
        const cplx c = p.coeffs()[idx];
        if (c == cplx{0.0, 0.0}) return;
        HomPoly3 term = multiply(pows[0][static_cast<std::size_t>(k)],
                                 pows[1][static_cast<std::size_t>(m)]);
        term = multiply(term, pows[2][static_cast<std::size_t>(n)]);
        out = add(out, scale(term, c));
    });
    return out;
}

BiPoly dehomogenize(const HomPoly3& p, int chart) {
    if (chart < 1 || chart > 3)
        throw std::invalid_argument("dehomogenize: chart must be 1..3");
    const int d = p.degree();
    BiPoly out(d, d);
    p.for_each([&](int k, int m, int n, std::size_t idx) {
        const cplx c = p.coeffs()[idx];
        if (c == cplx{0.0, 0.0}) return;
        if (chart == 3)
            out.at(k, m) += c;
        else if (chart == 2)
            out.at(k, n) += c;
        else
            out.at(m, n) += c;
    });
    return out;
}

bool approx_equal(const HomPoly3& a, const HomPoly3& b, double tol) {
    if (a.degree() != b.degree()) return false;
    const double scale_ab = std::max(a.norm_inf(), b.norm_inf());
    if (scale_ab == 0.0) return true;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        if (std::abs(a.coeffs()[i] - b.coeffs()[i]) > tol * scale_ab) return false;
    return true;
}

// ------------------------------------------------------- named constructors

HomPoly3 fermat(int d) {
    if (d < 1) throw std::invalid_argument("fermat: degree must be >= 1");
    HomPoly3 p(d);
    p.set(d, 0, 0, cplx{1.0, 0.0});
    p.set(0, d, 0, cplx{1.0, 0.0});
    p.set(0, 0, d, cplx{1.0, 0.0});
    return p;
}

HomPoly3 klein() {
    HomPoly3 p(4);
    p.set(3, 1, 0, cplx{1.0, 0.0});
    p.set(0, 3, 1, cplx{1.0, 0.0});
    p.set(1, 0, 3, cplx{1.0, 0.0});
    return p;
}

HomPoly3 hesse_member(cplx t1, cplx t2) {
    HomPoly3 p(3);
    p.set(3, 0, 0, t1);
    p.set(0, 3, 0, t1);
    p.set(0, 0, 3, t1);
    p.set(1, 1, 1, t2);
    return p;
}

HomPoly3 fermat_u_family(int d, cplx u) {
    if (d < 3) throw std::invalid_argument("fermat_u_family: degree must be >= 3");
    HomPoly3 p = fermat(d);
    p.set(2, 0, d - 2, p.at(2, 0, d - 2) + u);
    return p;
}

HomPoly3 two_tuple_family(int d, const HomPoly3& base, cplx v) {
    if (base.degree() != d)
        throw std::invalid_argument("two_tuple_family: base degree mismatch");
    if (d < 4) throw std::invalid_argument("two_tuple_family: degree must be >= 4");
    HomPoly3 p = base;
    p.set(0, 2, d - 2, p.at(0, 2, d - 2) + v);
    return p;
}

HomPoly3 nodal_family(int d, std::uint64_t seed, cplx t) {
    if (d < 4) throw std::invalid_argument("nodal_family: degree must be >= 4");
    Rng rng(seed);
    const int max_redraws = 16;
    for (int attempt = 0; attempt < max_redraws; ++attempt) {
        HomPoly3 p(d);
        p.set(1, 1, d - 2, cplx{1.0, 0.0});
        // cubic in z1, z2 at z3-degree d-3
        std::array<cplx, 4> alpha{};
        for (int j = 0; j <= 3; ++j) {
            alpha[static_cast<std::size_t>(j)] = rng.cgauss();
            p.set(j, 3 - j, d - 3, alpha[static_cast<std::size_t>(j)]);
        }
        // generic remainder on every monomial of z3-degree <= d-4
        p.for_each([&](int k, int m, int n, std::size_t) {
            if (n <= d - 4) p.set(k, m, n, rng.cgauss());
        });
        if (std::abs(alpha[3]) < 1e-12 || std::abs(alpha[0]) < 1e-12)
            continue; // corner cubic coefficient too small, redraw everything
        p.set(0, 0, d, p.at(0, 0, d) + t);
        return p;
    }
    throw std::runtime_error("nodal_family: could not draw admissible coefficients");
}

} // namespace inflecta
