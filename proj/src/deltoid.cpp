// SPDX-License-Identifier: MIT
#include "nimrep/deltoid.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace nimrep {

namespace {

double wrap(double t) {
    t -= std::floor(t);
    return t >= 1.0 ? 0.0 : t;
}

TorusPoint apply(const TorusPoint& p, int a, int b, int c, int d) {
    if (p.exact) return TorusPoint((a * p.f1 + b * p.f2).mod1(), (c * p.f1 + d * p.f2).mod1());
    return TorusPoint(wrap(a * p.t1 + b * p.t2), wrap(c * p.t1 + d * p.t2));
}

}  // namespace

TorusPoint::TorusPoint(Frac a, Frac b) : t1(a.value()), t2(b.value()), exact(true), f1(a), f2(b) {}

cplx phi(double t1, double t2) {
    cplx w1 = unit(t1), w2 = unit(t2);
    return w1 + 1.0 / w2 + w2 / w1;
}

cplx phi(const TorusPoint& p) { return phi(p.t1, p.t2); }

std::array<TorusPoint, 6> s3_orbit(const TorusPoint& p) {
    // T3 = [[0,-1],[1,-1]], T2 = [[0,-1],[-1,0]]
    TorusPoint r1 = apply(p, 0, -1, 1, -1);
    TorusPoint r2 = apply(r1, 0, -1, 1, -1);
    return {p, r1, r2, apply(p, 0, -1, -1, 0), apply(r1, 0, -1, -1, 0), apply(r2, 0, -1, -1, 0)};
}

double jacobian(const TorusPoint& p, JacobianForm form) {
    const double t1 = p.t1, t2 = p.t2;
    switch (form) {
    case JacobianForm::theta:
        return 4 * kPi * kPi *
               (std::sin(2 * kPi * (t1 + t2)) - std::sin(2 * kPi * (2 * t1 - t2)) -
                std::sin(2 * kPi * (2 * t2 - t1)));
    case JacobianForm::omega: {
        cplx w1 = unit(t1), w2 = unit(t2);
        cplx s = w1 * w2 - 1.0 / (w1 * w2) - w1 * w1 / w2 + w2 / (w1 * w1) - w2 * w2 / w1 +
                 w1 / (w2 * w2);
        return (cplx(0, -2 * kPi * kPi) * s).real();
    }
    case JacobianForm::abs_z:
        return jacobian_abs_z(phi(p));
    case JacobianForm::sine_product:
        return -16 * kPi * kPi * std::sin((2 * t2 - t1) * kPi) * std::sin((2 * t1 - t2) * kPi) *
               std::sin((t1 + t2) * kPi);
    }
    return 0;
}

cplx deltoid_discriminant(cplx z) {
    cplx zb = std::conj(z);
    return 27.0 - 18.0 * z * zb + 4.0 * z * z * z + 4.0 * zb * zb * zb - z * z * zb * zb;
}

double jacobian_abs_z(cplx z) {
    return 2 * kPi * kPi * std::sqrt(std::max(0.0, deltoid_discriminant(z).real()));
}

double jacobian_abs_xy(double x, double y) {
    double s = x * x + y * y;
    double v = 27 - 18 * s + 8 * x * (x * x - 3 * y * y) - s * s;
    return 2 * kPi * kPi * std::sqrt(std::max(0.0, v));
}

double jacobian_abs_rt(double r, double t) {
    double c = std::cos(6 * kPi * t);
    double a = 5 + 4 * c;
    double v = (1 - r) * (a * a * r * r * r - 9 * (7 + 8 * c) * r * r + 27 * r + 27);
    return 2 * kPi * kPi * std::sqrt(std::max(0.0, v));
}

cplx deltoid_boundary_point(double r, double t) {
    return {r * (2 * std::cos(2 * kPi * t) + std::cos(4 * kPi * t)),
            r * (2 * std::sin(2 * kPi * t) - std::sin(4 * kPi * t))};
}

bool in_deltoid(cplx z, double tol) {
    cplx d = deltoid_discriminant(z);
    return d.real() >= -tol && std::abs(d.imag()) < tol;
}

std::array<cplx, 3> cubic_roots(cplx z) {
    const cplx zb = std::conj(z);
    const cplx base = 27.0 - 9.0 * z * zb + 2.0 * z * z * z;
    const cplx root = 3.0 * std::sqrt(3.0) * std::sqrt(deltoid_discriminant(z));
    const cplx d0 = z * z - 3.0 * zb;
    const cplx eps = unit(1.0 / 3.0);

    auto cube_root = [&](cplx v) {
        cplx c = std::pow(v, 1.0 / 3.0);  // principal branch, arg in (-pi/3, pi/3]
        if (std::arg(c) < 0) c *= eps;    // move to arg in [0, 2 pi / 3)
        return c;
    };

    cplx P = cube_root(base + root);
    if (std::abs(P) < 1e-12) P = cube_root(base - root);
    std::array<cplx, 3> w;
    if (std::abs(P) < 1e-12) {
        w.fill(z / 3.0);  // cusp: triple root
        return w;
    }
    const double c1 = std::pow(2.0, -1.0 / 3.0), c2 = std::pow(2.0, 1.0 / 3.0);
    cplx ek = 1.0;
    for (int k = 0; k < 3; ++k) {
        w[k] = (z + c1 * ek * P + c2 * std::conj(ek) * d0 / P) / 3.0;
        ek *= eps;
    }
    return w;
}

std::array<TorusPoint, 3> invert_phi(cplx z) {
    if (!in_deltoid(z)) throw DomainError("point lies outside the deltoid");
    auto r = cubic_roots(z);
    std::array<TorusPoint, 3> out;
    for (int k = 0; k < 3; ++k) {
        double a1 = std::arg(r[k]) / (2 * kPi);
        double a2 = -std::arg(r[(k + 1) % 3]) / (2 * kPi);
        out[k] = TorusPoint(wrap(a1), wrap(a2));
    }
    return out;
}

std::vector<TorusPoint> generate_Dl(int l) {
    if (l < 1) throw InvalidParameter("D_l needs l >= 1");
    std::vector<TorusPoint> pts;
    const int n = 3 * l;
    pts.reserve(std::size_t(3) * l * l);
    for (int q1 = 0; q1 < n; ++q1)
        for (int q2 = 0; q2 < n; ++q2)
            if ((q1 + q2) % 3 == 0) pts.emplace_back(Frac(q1, n), Frac(q2, n));
    return pts;
}

bool fundamental_domain_contains(const TorusPoint& p, double tol) {
    if (p.exact) {
        return !(2 * p.f2 - p.f1 < Frac(0)) && !(2 * p.f1 - p.f2 < Frac(0)) &&
               !(Frac(1) < p.f1 + p.f2);
    }
    return 2 * p.t2 - p.t1 >= -tol && 2 * p.t1 - p.t2 >= -tol && p.t1 + p.t2 <= 1 + tol;
}

std::vector<DensityRow> sample_density(int grid) {
    if (grid < 2) throw InvalidParameter("density grid needs at least 2 points per side");
    const double x0 = -1.5, x1 = 3.0, y0 = -1.5 * std::sqrt(3.0), y1 = 1.5 * std::sqrt(3.0);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<DensityRow> rows;
    rows.reserve(std::size_t(grid) * grid);
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            double x = x0 + (x1 - x0) * i / (grid - 1);
            double y = y0 + (y1 - y0) * j / (grid - 1);
            cplx z(x, y);
            if (deltoid_discriminant(z).real() < 0) {
                rows.push_back({x, y, nan, nan});
                continue;
            }
            double a = jacobian_abs_z(z);
            rows.push_back({x, y, a, a > 0 ? 1.0 / a : nan});
        }
    return rows;
}

std::string density_csv(const std::vector<DensityRow>& rows) {
    std::ostringstream os;
    os << "x,y,absJ,invJ\n";
    for (const auto& r : rows)
        os << format_double(r.x) << ',' << format_double(r.y) << ',' << format_double(r.absJ)
           << ',' << format_double(r.invJ) << '\n';
    return os.str();
}

}  // namespace nimrep
