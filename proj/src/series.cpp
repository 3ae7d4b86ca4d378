// SPDX-License-Identifier: MIT
#include "nimrep/series.hpp"

#include "nimrep/measures.hpp"
#include "nimrep/paths.hpp"

#include <cmath>

namespace nimrep {

namespace {

Mat<BigInt> big(const Mat<int>& m) {
    Mat<BigInt> r(m.rows, m.cols);
    for (std::size_t k = 0; k < m.a.size(); ++k) r.a[k] = m.a[k];
    return r;
}

IMatrixSeries zero_series(const std::string& id, int n, int order) {
    IMatrixSeries H;
    H.graph_id = id;
    H.c.assign(std::size_t(order + 1), Mat<BigInt>(n, n));
    return H;
}

bool commutes(const Mat<int>& a, const Mat<int>& b) { return a * b == b * a; }

std::string at(int k) { return "degree " + std::to_string(k); }

}  // namespace

RSeries polynomial(int order, const std::vector<std::pair<int, long>>& terms, const std::string& var) {
    RSeries s(order, var);
    for (const auto& [e, c] : terms)
        if (e >= 0 && e <= order) s[e] += Rational(c);
    return s;
}

RSeries product_quotient(int order, const std::vector<int>& num, const std::vector<int>& den,
                         const std::string& var) {
    auto factor = [&](int k) { return polynomial(order, {{0, 1}, {std::abs(k), k > 0 ? 1 : -1}}, var); };
    RSeries n = RSeries::one(order, var), d = RSeries::one(order, var);
    for (int k : num) n = n * factor(k);
    for (int k : den) d = d * factor(k);
    return n * d.inverse();
}

IMatrixSeries apply_su2_denominator(const Mat<int>& D, const IMatrixSeries& H) {
    const Mat<BigInt> d = big(D);
    IMatrixSeries out = zero_series(H.graph_id, H.size(), H.order());
    out.var = H.var;
    for (int k = 0; k <= H.order(); ++k) {
        Mat<BigInt> m = H.c[std::size_t(k)];
        if (k >= 1) m = m - d * H.c[std::size_t(k - 1)];
        if (k >= 2) m = m + H.c[std::size_t(k - 2)];
        out.c[std::size_t(k)] = m;
    }
    return out;
}

IMatrixSeries apply_su3_denominator(const Mat<int>& D, const IMatrixSeries& H) {
    const Mat<BigInt> d = big(D), dt = big(D.transpose());
    IMatrixSeries out = zero_series(H.graph_id, H.size(), H.order());
    out.var = H.var;
    for (int k = 0; k <= H.order(); ++k) {
        Mat<BigInt> m = H.c[std::size_t(k)];
        if (k >= 1) m = m - d * H.c[std::size_t(k - 1)];
        if (k >= 2) m = m + dt * H.c[std::size_t(k - 2)];
        if (k >= 3) m = m - H.c[std::size_t(k - 3)];
        out.c[std::size_t(k)] = m;
    }
    return out;
}

std::optional<Mat<int>> nakayama_permutation(const Graph& g) {
    GraphKey key = parse_graph_id(g.id);
    const int n = g.size();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[std::size_t(i)] = i;
    switch (key.kind) {
    case GraphKey::Kind::A:
        for (int i = 0; i < n; ++i) perm[std::size_t(i)] = n - 1 - i;
        break;
    case GraphKey::Kind::D:
        if (key.n % 2) std::swap(perm[0], perm[1]);
        break;
    case GraphKey::Kind::E:
        if (key.n == 6) {  // swap the two long arms
            std::swap(perm[0], perm[4]);
            std::swap(perm[1], perm[3]);
        }
        break;
    case GraphKey::Kind::Tad:
        break;
    default:
        return std::nullopt;
    }
    Mat<int> P(n, n);
    for (int i = 0; i < n; ++i) P(i, perm[std::size_t(i)]) = 1;
    if (!commutes(P, g.adjacency) || !(P * P == Mat<int>::identity(n)))
        throw IdentityFailure("numerator permutation of " + g.id + " is not an involutive graph automorphism");
    return P;
}

IMatrixSeries hilbert_su2(const Graph& g, int order) {
    if (!g.symmetric) throw InvalidParameter("pre-projective Hilbert series needs an undirected graph");
    if (order < 0) throw InvalidParameter("order must be non-negative");
    const int n = g.size();
    const auto P = nakayama_permutation(g);
    const int h = P && g.coxeter_h ? *g.coxeter_h : -1;
    const Mat<BigInt> d = big(g.adjacency), I = Mat<BigInt>::identity(n);
    IMatrixSeries H = zero_series(g.id, n, order);
    for (int k = 0; k <= order; ++k) {
        Mat<BigInt> m(n, n);
        if (k == 0) m = I;
        if (k == h) m = m + big(*P);
        if (k >= 1) m = m + d * H.c[std::size_t(k - 1)];
        if (k >= 2) m = m - H.c[std::size_t(k - 2)];
        H.c[std::size_t(k)] = m;
    }
    if (h > 0)
        for (int k = h - 1; k <= order; ++k)
            if (!H.c[std::size_t(k)].is_zero())
                throw IdentityFailure("Hilbert series of " + g.id + " does not terminate: non-zero at " + at(k));
    return H;
}

IMatrixSeries hilbert_su3(const Graph& g, const Mat<int>& P, int h, int order) {
    if (!commutes(P, g.adjacency) || !commutes(P, g.adjacency.transpose()))
        throw IdentityFailure("numerator permutation does not commute with the adjacency matrix of " + g.id);
    const int n = g.size();
    const Mat<BigInt> d = big(g.adjacency), dt = big(g.adjacency.transpose());
    IMatrixSeries H = zero_series(g.id, n, order);
    for (int k = 0; k <= order; ++k) {
        Mat<BigInt> m(n, n);
        if (k == 0) m = Mat<BigInt>::identity(n);
        if (k == h) m = m - big(P);
        if (k >= 1) m = m + d * H.c[std::size_t(k - 1)];
        if (k >= 2) m = m - dt * H.c[std::size_t(k - 2)];
        if (k >= 3) m = m + H.c[std::size_t(k - 3)];
        H.c[std::size_t(k)] = m;
    }
    return H;
}

Mat<int> su3_numerator_permutation(const Graph& g) {
    GraphKey key = parse_graph_id(g.id);
    if (key.kind == GraphKey::Kind::SU3_A) return su3_rotation(g);
    if (key.kind == GraphKey::Kind::SU3_Astar) return Mat<int>::identity(g.size());
    throw DataUnavailable("no numerator permutation recorded for " + g.id);
}

Graph abelian_mckay(int m, int a, int b, int c) {
    if (m < 2) throw InvalidParameter("abelian McKay graph needs m >= 2");
    auto mod = [m](long x) { return int(((x % m) + m) % m); };
    if (mod(long(a) + b + c) != 0)
        throw InvalidParameter("weights must sum to 0 mod m for the embedding to have determinant 1");
    Graph g;
    g.id = "Z(" + std::to_string(m) + ";" + std::to_string(mod(a)) + "," + std::to_string(mod(b)) + "," +
           std::to_string(mod(c)) + ")";
    g.adjacency = Mat<int>(m, m);
    for (int k = 0; k < m; ++k) {
        g.vertices.push_back("chi" + std::to_string(k));
        for (int w : {a, b, c}) g.adjacency(k, mod(long(k) + w)) += 1;
    }
    g.symmetric = g.adjacency == g.adjacency.transpose();
    return g;
}

IMatrixSeries cy3_hilbert(const Graph& mckay, int order) {
    return hilbert_su3(mckay, Mat<int>::identity(mckay.size()), -1, order);
}

RSeries abelian_invariant_count(int m, int a, int b, int c, int r, int order) {
    RSeries s(order, "t");
    for (int n = 0; n <= order; ++n) {
        long cnt = 0;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) {
                long v = r + long(i) * a + long(j) * b + long(n - i - j) * c;
                if (((v % m) + m) % m == 0) ++cnt;
            }
        s[n] = cnt;
    }
    return s;
}

DSeries abelian_molien(int m, int a, int b, int c, int r, int order) {
    std::vector<cplx> acc(std::size_t(order + 1), 0.0);
    for (int k = 0; k < m; ++k) {
        std::vector<cplx> s(std::size_t(order + 1), 0.0);
        s[0] = 1;
        for (int w : {a, b, c}) {
            const cplx z = unit(-double(k) * w / m);
            // multiply by 1 / (1 - z t)
            for (int i = 1; i <= order; ++i) s[std::size_t(i)] += z * s[std::size_t(i - 1)];
        }
        const cplx chi = unit(-double(r) * k / m);
        for (int i = 0; i <= order; ++i) acc[std::size_t(i)] += chi * s[std::size_t(i)];
    }
    DSeries out(order, "t");
    for (int i = 0; i <= order; ++i) {
        cplx v = acc[std::size_t(i)] / double(m);
        if (std::abs(v.imag()) > 1e-9 * std::max(1.0, std::abs(v.real())))
            throw IdentityFailure("Molien sum has an imaginary part at " + at(i));
        out[i] = v.real();
    }
    return out;
}

RSeries loop_series(const Graph& g, int order) {
    RSeries f(order, "z");
    for (int k = 0; k <= order; ++k) {
        BigInt v = moment_path_count(g, k, k);
        f[k] = Rational(v);
    }
    return f;
}

RSeries closed_form_t_series(const std::string& graph_id, int order) {
    GraphKey key = parse_graph_id(graph_id);
    const int n = key.n;
    using K = GraphKey::Kind;
    switch (key.kind) {
    case K::A:
        return product_quotient(order, {-n}, {-(n + 1)});
    case K::D:
        if (n >= 4) return product_quotient(order, {n - 2}, {n - 1});
        break;
    case K::E:
        if (n == 6) return product_quotient(order, {-6, -8}, {-3, -12});
        if (n == 7) return product_quotient(order, {-9, -12}, {-4, -18});
        if (n == 8) return product_quotient(order, {-10, -15, -18}, {-5, -9, -30});
        break;
    case K::AffA:
        if (n >= 2 && n % 2 == 0) return product_quotient(order, {n / 2}, {-1, -n / 2});
        break;
    case K::AffD:
        if (n >= 4) return product_quotient(order, {n - 1}, {-2, -(n - 2)});
        break;
    case K::AffE:
        if (n == 6) return product_quotient(order, {6}, {-3, -4});
        if (n == 7) return product_quotient(order, {9}, {-4, -6});
        if (n == 8) return product_quotient(order, {15}, {-6, -10});
        break;
    default:
        break;
    }
    throw InvalidParameter("no closed-form T series for " + graph_id);
}

RSeries printed_d_t_series(int n, int order) {
    if (n < 4) throw InvalidParameter("D_n needs n >= 4");
    return product_quotient(order, {n - 3}, {n - 2});
}

namespace {

// Even circle moments int u^{2k} d mu for k <= order; odd ones must vanish.
std::vector<double> even_circle_moments(const DiscreteMeasure& mu, int order) {
    std::vector<double> m;
    for (int k = 0; k <= order; ++k) {
        cplx e = circle_moment(mu, 2 * k), o = circle_moment(mu, 2 * k + 1);
        if (std::abs(e.imag()) > 1e-12 || std::abs(o) > 1e-12)
            throw IdentityFailure("measure is not symmetric under u -> -u, u -> 1/u at " + at(2 * k));
        m.push_back(e.real());
    }
    return m;
}

DiscreteMeasure theta_measure(const std::string& graph_id, int order) {
    GraphKey key = parse_graph_id(graph_id);
    // The A_infinity measure alpha(u) du has the same moments up to degree
    // 2(order + 1) as alpha d_N for N = order + 2.
    if (key.kind == GraphKey::Kind::Trunc && key.trunc == InfiniteKind::Ainf)
        return make_measure("alpha*d(" + std::to_string(order + 2) + ")");
    return canonical_measure(graph_id);
}

RSeries q_over_one_plus_q_squared(int order) {
    RSeries q = RSeries::monomial(order, 1, Rational(1));
    RSeries onep = polynomial(order, {{0, 1}, {1, 1}});
    return q * (onep * onep).inverse();
}

}  // namespace

DSeries t_series(const std::string& graph_id, int order, TRoute route) {
    switch (route) {
    case TRoute::closed_form:
        return to_double(closed_form_t_series(graph_id, order));
    case TRoute::f_compose: {
        Graph g = graph_by_id(graph_id);
        RSeries f = loop_series(g, order);
        f.var = "q";
        RSeries onep = polynomial(order, {{0, 1}, {1, 1}});
        return to_double(onep.inverse() * f.compose(q_over_one_plus_q_squared(order)));
    }
    case TRoute::measure: {
        auto m = even_circle_moments(canonical_measure(graph_id), order);
        DSeries t(order);
        double run = 0;  // dividing by 1 - q takes partial sums
        for (int k = 0; k <= order; ++k) {
            run += 2 * m[std::size_t(k)] - (k == 0 ? 1.0 : 0.0);
            t[k] = run;
        }
        return t;
    }
    }
    throw InvalidParameter("unknown T-series route");
}

DSeries theta_series_measure(const std::string& graph_id, int order) {
    auto m = even_circle_moments(theta_measure(graph_id, order), order);
    DSeries th(order);
    for (int k = 0; k <= order; ++k) th[k] = 2 * m[std::size_t(k)];
    th[0] -= 1;
    if (order >= 1) th[1] += 1;
    return th;
}

RSeries theta_series_paths(const Graph& g, int order) {
    RSeries f = loop_series(g, order);
    f.var = "q";
    RSeries onep = polynomial(order, {{0, 1}, {1, 1}}), onem = polynomial(order, {{0, 1}, {1, -1}});
    return RSeries::monomial(order, 1, Rational(1)) +
           onem * onep.inverse() * f.compose(q_over_one_plus_q_squared(order));
}

IMatrixSeries generalized_t(const Graph& g, int order) {
    const int n = g.size();
    using BS = Series<BigInt>;
    BS onept2(order, "w");
    onept2[0] = 1;
    if (order >= 2) onept2[2] = 1;
    const BS inv = onept2.inverse();
    const BS s = BS::monomial(order, 1, BigInt(1), "w") * inv;  // w / (1 + w^2)
    IMatrixSeries T = zero_series(g.id, n, order);
    T.var = "w";
    Mat<BigInt> power = Mat<BigInt>::identity(n);
    const Mat<BigInt> d = big(g.adjacency);
    BS sn = BS::one(order, "w");
    for (int p = 0; p <= order; ++p) {
        const BS cn = sn * inv;
        for (int k = p; k <= order; ++k)
            if (cn[k] != 0) T.c[std::size_t(k)] = T.c[std::size_t(k)] + cn[k] * power;
        sn = sn * s;
        power = power * d;
    }
    return T;
}

KostantCheck kostant_closed_form_check(const std::string& family, int order) {
    KostantCheck out;
    out.family = family;
    Graph g;
    if (family == "E6" || family == "E7" || family == "E8") {
        const int n = family[1] - '0';
        out.a = n == 6 ? 6 : n == 7 ? 8 : 12;
        out.b = n == 6 ? 8 : n == 7 ? 12 : 20;
        g = build_su2_affine_graph(AffineFamily::E1, n);
    } else {
        GraphKey key = parse_graph_id(family);
        if (key.kind == GraphKey::Kind::A) {
            out.a = 2;
            out.b = key.n + 1;
            g = cyclic_mckay_graph(key.n + 1);
        } else if (key.kind == GraphKey::Kind::D) {
            out.a = 4;
            out.b = 2 * key.n - 4;
            g = build_su2_affine_graph(AffineFamily::D1, key.n);
        } else {
            throw InvalidParameter("Kostant check needs E6, E7, E8, A(l) or D(l)");
        }
    }
    out.affine_graph = g.id;
    const int deg = out.a + out.b - 2;
    const int N = std::max(order, 2 * (out.a + out.b));
    IMatrixSeries H = hilbert_su2(g, N);
    RSeries den = product_quotient(N, {-out.a, -out.b}, {}, "t");
    for (int v = 0; v < g.size(); ++v) {
        RSeries z = H.entry(v, g.distinguished).cast<Rational>() * den;
        for (int k = deg + 1; k <= N; ++k)
            if (z[k] != 0)
                throw IdentityFailure("Kostant numerator of vertex " + g.vertices[std::size_t(v)] + " on " + g.id +
                                      " is not a polynomial: non-zero at " + at(k));
        out.numerators.push_back(z.truncate(deg));
    }
    return out;
}

RSeries rseries_from_json(const nlohmann::json& j) {
    const auto& cs = j.at("coeffs");
    RSeries s(int(cs.size()) - 1, j.value("variable", "q"));
    for (std::size_t k = 0; k < cs.size(); ++k) s.c[k] = Rational(cs[k].get<std::string>());
    return s;
}

}  // namespace nimrep
