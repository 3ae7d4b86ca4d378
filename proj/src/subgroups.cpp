// SPDX-License-Identifier: MIT
#include "nimrep/subgroups.hpp"

#include <cmath>
#include <regex>

namespace nimrep {

namespace {

constexpr double kSame = 1e-9;

Mat2 mul(const Mat2& x, const Mat2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}
Mat2 adjoint(const Mat2& x) { return {std::conj(x[0]), std::conj(x[2]), std::conj(x[1]), std::conj(x[3])}; }
cplx det(const Mat2& x) { return x[0] * x[3] - x[1] * x[2]; }
cplx trace(const Mat2& x) { return x[0] + x[3]; }
bool same(const Mat2& x, const Mat2& y) {
    for (int k = 0; k < 4; ++k)
        if (std::abs(x[std::size_t(k)] - y[std::size_t(k)]) >= kSame) return false;
    return true;
}
int find(const std::vector<Mat2>& v, const Mat2& x) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (same(v[i], x)) return int(i);
    return -1;
}
Mat2 diag(cplx a, cplx b) { return {a, 0, 0, b}; }
const Mat2 kIdentity = diag(1, 1);

std::vector<Mat2> generators(const GroupSpec& s) {
    using K = GroupSpec::Kind;
    const cplx I(0, 1);
    switch (s.kind) {
    case K::Z2n:
        return {diag(unit(1.0 / (2 * s.n)), unit(-1.0 / (2 * s.n)))};
    case K::BD:
        return {diag(unit(1.0 / (2 * (s.n - 2))), unit(-1.0 / (2 * (s.n - 2)))), {0, 1, -1, 0}};
    case K::BT:
    case K::BO: {
        auto e = [](int k) { return unit(k / 8.0); };
        const double r = 1 / std::sqrt(2.0);
        std::vector<Mat2> g = {diag(I, -I), {0, 1, -1, 0}, {r * e(7), r * e(7), r * e(5), r * e(1)}};
        if (s.kind == K::BO) g.push_back(diag(e(1), e(7)));
        return g;
    }
    case K::BI: {
        auto e = [](int k) { return unit(k / 5.0); };
        const double r = 1 / std::sqrt(5.0);
        return {diag(-e(3), -e(2)),
                {r * (e(4) - e(1)), r * (e(2) - e(3)), r * (e(2) - e(3)), r * (e(1) - e(4))}};
    }
    }
    return {};
}

std::vector<int> rep(int g, int k) { return std::vector<int>(std::size_t(k), g); }
std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

std::string GroupSpec::name() const {
    switch (kind) {
    case Kind::Z2n: return "Z" + std::to_string(2 * n);
    case Kind::BD: return "BD" + std::to_string(n);
    case Kind::BT: return "BT";
    case Kind::BO: return "BO";
    case Kind::BI: return "BI";
    }
    return "?";
}

int GroupSpec::expected_order() const {
    switch (kind) {
    case Kind::Z2n: return 2 * n;
    case Kind::BD: return 4 * (n - 2);
    case Kind::BT: return 24;
    case Kind::BO: return 48;
    case Kind::BI: return 120;
    }
    return 0;
}

std::string GroupSpec::mckay_graph_id() const {
    switch (kind) {
    case Kind::Z2n: return "Aff-A(" + std::to_string(2 * n) + ")";
    case Kind::BD: return "Aff-D(" + std::to_string(n) + ")";
    case Kind::BT: return "Aff-E(6)";
    case Kind::BO: return "Aff-E(7)";
    case Kind::BI: return "Aff-E(8)";
    }
    return "";
}

GroupSpec parse_group(const std::string& s) {
    static const std::regex re(R"(^(Z2n|Z|BD|BT|BO|BI)\(?(\d*)\)?$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw InvalidParameter("unknown group '" + s + "'");
    const std::string f = m[1];
    const int k = m[2].length() ? std::stoi(m[2]) : 0;
    using K = GroupSpec::Kind;
    if (f == "BT") return {K::BT, 0};
    if (f == "BO") return {K::BO, 0};
    if (f == "BI") return {K::BI, 0};
    if (f == "BD") {
        if (k < 4) throw InvalidParameter("BD(n) needs n >= 4");
        return {K::BD, k};
    }
    if (f == "Z2n") {
        if (k < 1) throw InvalidParameter("Z2n(n) needs n >= 1");
        return {K::Z2n, k};
    }
    if (k < 2 || k % 2) throw InvalidParameter("cyclic subgroups of SU(2) here have even order >= 2");
    return {K::Z2n, k / 2};
}

FiniteMatrixGroup generate_group(const GroupSpec& spec) {
    FiniteMatrixGroup g;
    g.spec = spec;
    g.generators = generators(spec);
    const int expected = spec.expected_order();
    g.elements = {kIdentity};
    for (std::size_t i = 0; i < g.elements.size(); ++i)
        for (const auto& s : g.generators) {
            Mat2 x = mul(g.elements[i], s);
            if (find(g.elements, x) >= 0) continue;
            g.elements.push_back(x);
            if (int(g.elements.size()) > 10 * expected)
                throw IdentityFailure("closure of the " + spec.name() +
                                      " generators runs past ten times the expected order: generator transcription error");
        }
    for (const auto& x : g.elements)
        if (std::abs(det(x) - 1.0) >= 1e-10) throw IdentityFailure(spec.name() + " has an element with det != 1");
    if (g.order() != expected)
        throw IdentityFailure(spec.name() + " closes at order " + std::to_string(g.order()) + ", expected " +
                              std::to_string(expected));
    return g;
}

std::vector<ClassRow> character_table(const GroupSpec& s) {
    using K = GroupSpec::Kind;
    const double mp = (1 + std::sqrt(5.0)) / 2, mm = (1 - std::sqrt(5.0)) / 2, r2 = std::sqrt(2.0);
    switch (s.kind) {
    case K::Z2n: {
        std::vector<ClassRow> t;
        for (int j = 0; j < 2 * s.n; ++j)
            t.push_back({"g^" + std::to_string(j), rep(0, j), 1, 2 * std::cos(kPi * j / s.n), Frac(j, 2 * s.n)});
        return t;
    }
    case K::BD: {
        const int m = s.n - 2;
        std::vector<ClassRow> t = {{"1", {}, 1, 2, Frac(0)}, {"(tau sigma)^2", {1, 0, 1, 0}, 1, -2, Frac(1, 2)}};
        for (int j = 1; j <= s.n - 3; ++j)
            t.push_back({"sigma^" + std::to_string(j), rep(0, j), 2, 2 * std::cos(kPi * j / m), Frac(j, 2 * m)});
        t.push_back({"tau", {1}, m, 0, Frac(1, 4)});
        t.push_back({"tau sigma", {1, 0}, m, 0, Frac(3, 4)});
        return t;
    }
    case K::BT:
        return {{"1", {}, 1, 2, Frac(0)},           {"-1", {0, 0}, 1, -2, Frac(1, 2)},
                {"tau", {1}, 6, 0, Frac(1, 4)},     {"mu", {2}, 4, 1, Frac(1, 6)},
                {"mu^2", rep(2, 2), 4, -1, Frac(1, 3)}, {"mu^4", rep(2, 4), 4, -1, Frac(2, 3)},
                {"mu^5", rep(2, 5), 4, 1, Frac(5, 6)}};
    case K::BO:
        return {{"1", {}, 1, 2, Frac(0)},           {"-1", {0, 0}, 1, -2, Frac(1, 2)},
                {"mu", {2}, 8, 1, Frac(1, 6)},      {"mu^2", rep(2, 2), 8, -1, Frac(1, 3)},
                {"tau", {1}, 6, 0, Frac(1, 4)},     {"kappa", {3}, 6, r2, Frac(1, 8)},
                {"tau kappa", {1, 3}, 12, 0, Frac(1, 4)}, {"kappa^3", rep(3, 3), 6, -r2, Frac(3, 8)}};
    case K::BI:
        return {{"1", {}, 1, 2, Frac(0)},
                {"-1", rep(0, 5), 1, -2, Frac(1, 2)},
                {"sigma", {0}, 12, mp, Frac(1, 10)},
                {"sigma^2", rep(0, 2), 12, -mm, Frac(1, 5)},
                {"sigma^3", rep(0, 3), 12, mm, Frac(3, 10)},
                {"sigma^4", rep(0, 4), 12, -mp, Frac(2, 5)},
                {"tau", {1}, 30, 0, Frac(1, 4)},
                // The usual table names these classes sigma^2 tau and sigma^7 tau;
                // with these generators those words have trace +-(1+sqrt5)/2, and
                // the trace -1 and 1 classes are reached by sigma^6 tau and sigma tau.
                {"sigma^6 tau", cat(rep(0, 6), {1}), 20, -1, Frac(1, 3)},
                {"sigma tau", {0, 1}, 20, 1, Frac(1, 6)}};
    }
    return {};
}

ClassData class_data(const FiniteMatrixGroup& g) {
    const int N = g.order();
    std::vector<int> cls(std::size_t(N), -1);
    std::vector<int> sizes;
    for (int i = 0; i < N; ++i) {
        if (cls[std::size_t(i)] >= 0) continue;
        const int c = int(sizes.size());
        sizes.push_back(0);
        for (const auto& h : g.elements) {
            int j = find(g.elements, mul(mul(h, g.elements[std::size_t(i)]), adjoint(h)));
            if (j < 0) throw IdentityFailure("conjugate left the enumerated " + g.spec.name());
            if (cls[std::size_t(j)] < 0) {
                cls[std::size_t(j)] = c;
                ++sizes.back();
            }
        }
    }

    ClassData cd;
    cd.group = g.spec.name();
    cd.order = N;
    const auto rows = character_table(g.spec);
    std::vector<int> claimed(sizes.size(), 0);
    for (const auto& row : rows) {
        Mat2 x = kIdentity;
        for (int k : row.word) x = mul(x, g.generators[std::size_t(k)]);
        const int j = find(g.elements, x);
        const int c = cls[std::size_t(j)];
        const double chi = trace(x).real();
        if (sizes[std::size_t(c)] != row.size || std::abs(chi - row.chi_rho) > 1e-9 ||
            std::abs(trace(x).imag()) > 1e-9)
            throw IdentityFailure("data-integrity: class " + row.label + " of " + cd.group + " has size " +
                                  std::to_string(sizes[std::size_t(c)]) + " and trace " + format_double(chi) +
                                  ", table says " + std::to_string(row.size) + " and " + format_double(row.chi_rho));
        if (claimed[std::size_t(c)]++)
            throw IdentityFailure("data-integrity: class " + row.label + " of " + cd.group +
                                  " duplicates another table row");
        cd.classes.push_back({row.label, sizes[std::size_t(c)], chi, row.theta});
    }
    if (rows.size() != sizes.size())
        throw IdentityFailure("data-integrity: " + cd.group + " has " + std::to_string(sizes.size()) +
                              " classes, table lists " + std::to_string(rows.size()));
    return cd;
}

double subgroup_moment(const ClassData& cd, int m) {
    double s = 0;
    for (const auto& c : cd.classes) s += double(c.size) / cd.order * std::pow(c.chi_rho, m);
    return s;
}

DSeries moment_generating_series(const ClassData& cd, int order) {
    DSeries g(order);
    for (const auto& c : cd.classes) {
        double p = double(c.size) / cd.order;
        for (int k = 0; k <= order; ++k, p *= c.chi_rho) g[k] += p;
    }
    return g;
}

namespace {

// 1 / (1 - c t + d t^2) expanded to the given order.
std::vector<cplx> inverse_quadratic(cplx c, cplx d, int order) {
    std::vector<cplx> a(std::size_t(order + 1), 0.0);
    for (int k = 0; k <= order; ++k) {
        cplx v = k == 0 ? 1.0 : 0.0;
        if (k >= 1) v += c * a[std::size_t(k - 1)];
        if (k >= 2) v -= d * a[std::size_t(k - 2)];
        a[std::size_t(k)] = v;
    }
    return a;
}

}  // namespace

DSeries molien_series_trivial(const FiniteMatrixGroup& g, int order) {
    std::vector<cplx> acc(std::size_t(order + 1), 0.0);
    for (const auto& x : g.elements) {
        // det(1 - A t) = 1 - tr(A) t + det(A) t^2
        const Mat2 xc = {std::conj(x[0]), std::conj(x[1]), std::conj(x[2]), std::conj(x[3])};
        if (std::abs(trace(xc) - trace(x)) > 1e-9 || std::abs(det(xc) - det(x)) > 1e-9)
            throw IdentityFailure("conjugate representation of " + g.spec.name() +
                                  " has a different determinant polynomial");
        auto a = inverse_quadratic(trace(xc), det(xc), order);
        for (int k = 0; k <= order; ++k) acc[std::size_t(k)] += a[std::size_t(k)];
    }
    DSeries s(order, "t");
    for (int k = 0; k <= order; ++k) s[k] = acc[std::size_t(k)].real() / g.order();
    return s;
}

DSeries kostant_trivial(const ClassData& cd, int order) {
    DSeries s(order, "t");
    for (const auto& c : cd.classes) {
        auto a = inverse_quadratic(c.chi_rho, 1.0, order);
        for (int k = 0; k <= order; ++k) s[k] += double(c.size) / cd.order * a[std::size_t(k)].real();
    }
    return s;
}

nlohmann::json to_json(const ClassData& cd) {
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& c : cd.classes)
        cls.push_back({{"class_label", c.label}, {"size", c.size}, {"chi_rho", c.chi_rho}, {"theta", c.theta.str()}});
    return {{"group", cd.group}, {"order", cd.order}, {"classes", cls}};
}

}  // namespace nimrep
