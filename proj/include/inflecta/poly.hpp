#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "inflecta/rng.hpp"

namespace inflecta {

// Point of the complex projective plane, stored as a canonical representative:
// the coordinate of largest modulus is scaled to exactly 1 (first such index
// on ties). Throws std::invalid_argument on the zero vector.
struct ProjPoint {
    std::array<cplx, 3> z;

    ProjPoint(cplx z1, cplx z2, cplx z3);

    cplx operator[](int i) const { return z[static_cast<std::size_t>(i)]; }
    bool operator==(const ProjPoint&) const = default;
};

// sin of the angle between the lines spanned by the two representatives
double fs_distance(const ProjPoint& a, const ProjPoint& b);

// Invertible 3x3 complex matrix (row major). Construction rejects matrices
// with |det| < 1e-6; everything downstream may assume invertibility.
class CoordChange {
public:
    explicit CoordChange(const std::array<cplx, 9>& m);

    static CoordChange identity();
    // QR of an iid complex Gaussian matrix: a Haar-ish random unitary chart
    static CoordChange random_unitary(std::uint64_t seed);

    cplx at(int r, int c) const { return m_[static_cast<std::size_t>(3 * r + c)]; }
    const std::array<cplx, 9>& raw() const { return m_; }
    cplx det() const;
    CoordChange inverse() const;

    // v -> M v
    std::array<cplx, 3> apply(const std::array<cplx, 3>& v) const;
    // v -> M^H v (the inverse map when M is unitary)
    std::array<cplx, 3> apply_adjoint(const std::array<cplx, 3>& v) const;

private:
    std::array<cplx, 9> m_;
};

// Dense bivariate polynomial, c[i*(dy+1)+j] multiplying x^i y^j. Produced by
// dehomogenize() and consumed by the elimination and tracking code.
struct BiPoly {
    int dx = 0;
    int dy = 0;
    std::vector<cplx> c;

    BiPoly() : c(1, cplx{0.0, 0.0}) {}
    BiPoly(int dx_, int dy_)
        : dx(dx_), dy(dy_),
          c(static_cast<std::size_t>((dx_ + 1) * (dy_ + 1)), cplx{0.0, 0.0}) {}

    cplx& at(int i, int j) { return c[static_cast<std::size_t>(i * (dy + 1) + j)]; }
    cplx at(int i, int j) const { return c[static_cast<std::size_t>(i * (dy + 1) + j)]; }

    cplx eval(cplx x, cplx y) const;
    BiPoly deriv_x() const;
    BiPoly deriv_y() const;
    // coefficients of y^0..y^dy after substituting the given x
    std::vector<cplx> y_coeffs_at(cplx x) const;
    double norm_inf() const;
    void scale(cplx s);
};

// Homogeneous polynomial of fixed degree d in z1, z2, z3 with complex
// coefficients, stored dense in graded-lex order (k descending, then m
// descending). The zero polynomial keeps its degree tag.
class HomPoly3 {
public:
    explicit HomPoly3(int degree);

    static std::size_t coeff_count(int degree) {
        return static_cast<std::size_t>((degree + 1) * (degree + 2) / 2);
    }
    static std::size_t index(int degree, int k, int m);

    int degree() const { return degree_; }
    cplx at(int k, int m, int n) const;
    void set(int k, int m, int n, cplx value);

    const std::vector<cplx>& coeffs() const { return c_; }
    std::vector<cplx>& coeffs() { return c_; }

    double norm_inf() const;
    bool is_zero(double tol = 0.0) const;

    cplx evaluate(const ProjPoint& p) const;

    // visits (k, m, n, flat index) in storage order
    template <class F>
    void for_each(F&& f) const {
        std::size_t idx = 0;
        for (int k = degree_; k >= 0; --k)
            for (int m = degree_ - k; m >= 0; --m)
                f(k, m, degree_ - k - m, idx++);
    }

private:
    int degree_;
    std::vector<cplx> c_;
};

HomPoly3 add(const HomPoly3& a, const HomPoly3& b);
HomPoly3 subtract(const HomPoly3& a, const HomPoly3& b);
HomPoly3 scale(const HomPoly3& a, cplx s);
HomPoly3 multiply(const HomPoly3& a, const HomPoly3& b);

// d/dz_axis, axis in {1,2,3}; degree-0 input yields the degree-0 zero poly
HomPoly3 partial(const HomPoly3& p, int axis);

// determinant of the 3x3 matrix of second partials, by exact coefficient
// arithmetic; degree 3(d-2), requires d >= 3
HomPoly3 hessian_det(const HomPoly3& p);

// p(A z)
HomPoly3 change_coords(const HomPoly3& p, const CoordChange& A);

// set the chart variable to 1; chart 3 gives (x, y) = (z1, z2), chart 2 gives
// (x, y) = (z1, z3), chart 1 gives (x, y) = (z2, z3)
BiPoly dehomogenize(const HomPoly3& p, int chart);

// coefficientwise comparison after normalizing by the largest coefficient
// modulus of either side
bool approx_equal(const HomPoly3& a, const HomPoly3& b, double tol = 1e-10);

// ---- named curve constructors ----

// z1^d + z2^d + z3^d
HomPoly3 fermat(int d);
// z1^3 z2 + z2^3 z3 + z3^3 z1
HomPoly3 klein();
// t1 (z1^3 + z2^3 + z3^3) + t2 z1 z2 z3
HomPoly3 hesse_member(cplx t1, cplx t2);
// fermat(d) + u z1^2 z3^(d-2)
HomPoly3 fermat_u_family(int d, cplx u);
// base + v z2^2 z3^(d-2)
HomPoly3 two_tuple_family(int d, const HomPoly3& base, cplx v);
// z1 z2 z3^(d-2) + z3^(d-3) (random cubic in z1, z2) + random part of
// z3-degree <= d-4, plus t z3^d; redraws until the two corner cubic
// coefficients are nonzero
HomPoly3 nodal_family(int d, std::uint64_t seed, cplx t);

} // namespace inflecta
