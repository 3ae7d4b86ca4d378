// SPDX-License-Identifier: MIT
// The map Phi from the torus onto the deltoid, its S3 symmetry, the
// Jacobian in its several closed forms, inversion through the cubic, and
// the grids D_l of 3l-th root pairs.
#pragma once

#include "nimrep/numeric.hpp"

#include <array>
#include <string>
#include <vector>

namespace nimrep {

// Either exact (rational angles) or floating; the floating pair is always
// filled in.
struct TorusPoint {
    double t1 = 0, t2 = 0;
    bool exact = false;
    Frac f1, f2;

    TorusPoint() = default;
    TorusPoint(double a, double b) : t1(a), t2(b) {}
    TorusPoint(Frac a, Frac b);
};

// Phi(w1, w2) = w1 + 1/w2 + w2/w1 with w_j = exp(2 pi i theta_j).
cplx phi(const TorusPoint& p);
cplx phi(double t1, double t2);

// Orbit of p under the group generated by T2 = [[0,-1],[-1,0]] and
// T3 = [[0,-1],[1,-1]] acting on column vectors mod 1. Always six points,
// listed as e, T3, T3^2, T2, T2 T3, T2 T3^2 applied to p (repeats kept).
std::array<TorusPoint, 6> s3_orbit(const TorusPoint& p);

enum class JacobianForm { theta, omega, abs_z, sine_product };
// Signed for theta/sine_product, real part of the omega form (which is
// real on the torus), and the non-negative modulus for abs_z.
double jacobian(const TorusPoint& p, JacobianForm form);
// 27 - 18 z zbar + 4 z^3 + 4 zbar^3 - z^2 zbar^2; real inside the deltoid.
cplx deltoid_discriminant(cplx z);
// |J| as a function of z, and in the (x, y) and (r, t) parametrisations.
double jacobian_abs_z(cplx z);
double jacobian_abs_xy(double x, double y);
double jacobian_abs_rt(double r, double t);
// x = r(2cos 2 pi t + cos 4 pi t), y = r(2 sin 2 pi t - sin 4 pi t).
cplx deltoid_boundary_point(double r, double t);

bool in_deltoid(cplx z, double tol = 1e-9);

// The three roots of w^3 - z w^2 + zbar w - 1 = 0 via Cardano with the
// cube-root branch of arg in [0, 2 pi / 3).
std::array<cplx, 3> cubic_roots(cplx z);
// Candidate torus points (w1, w2) with Phi = z; w2 roots are conjugates of
// the w1 roots. Throws DomainError outside the deltoid.
std::array<TorusPoint, 3> invert_phi(cplx z);

// All (q1/3l, q2/3l) with q1 + q2 = 0 mod 3; exactly 3 l^2 points.
std::vector<TorusPoint> generate_Dl(int l);

// 2 t2 - t1 >= 0, 2 t1 - t2 >= 0, t1 + t2 <= 1 (boundary inclusive).
bool fundamental_domain_contains(const TorusPoint& p, double tol = 0);

// Density sampler: rows (x, y, |J(z)|, 1/|J(z)|) over the bounding box
// [-1.5, 3] x [-2.6, 2.6], NaN outside the deltoid.
struct DensityRow {
    double x, y, absJ, invJ;
};
std::vector<DensityRow> sample_density(int grid);
std::string density_csv(const std::vector<DensityRow>& rows);

}  // namespace nimrep
