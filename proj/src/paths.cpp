// SPDX-License-Identifier: MIT
#include "nimrep/paths.hpp"

#include <algorithm>
#include <sstream>

namespace nimrep {

std::vector<BigInt> paths_from_distinguished(const Graph& g, int n) {
    const int N = g.size();
    std::vector<BigInt> v(static_cast<std::size_t>(N), 0), w(static_cast<std::size_t>(N));
    v[std::size_t(g.distinguished)] = 1;
    for (int step = 0; step < n; ++step) {
        std::fill(w.begin(), w.end(), BigInt(0));
        for (int a = 0; a < N; ++a) {
            if (v[std::size_t(a)] == 0) continue;
            for (int b = 0; b < N; ++b)
                if (int e = g.adjacency(a, b)) w[std::size_t(b)] += v[std::size_t(a)] * e;
        }
        std::swap(v, w);
    }
    return v;
}

BigInt moment_path_count(const Graph& g, int m, int n) {
    if (m < 0 || n < 0) throw InvalidParameter("moment indices must be non-negative");
    if (g.depth && m + n > *g.depth)
        throw TruncationError("moment (" + std::to_string(m) + "," + std::to_string(n) +
                              ") exceeds truncation depth " + std::to_string(*g.depth) + " of " + g.id);
    auto a = paths_from_distinguished(g, m);
    auto b = m == n ? a : paths_from_distinguished(g, n);
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string MomentTable::csv() const {
    std::ostringstream os;
    os << "m,n,value\n";
    for (const auto& [k, v] : entries) os << k.first << ',' << k.second << ',' << v.str() << '\n';
    return os.str();
}

MomentTable moment_table(const Graph& g, int max_total) {
    MomentTable t;
    t.graph_id = g.id;
    for (int s = 0; s <= max_total; ++s)
        for (int m = 0; m <= s; ++m) t.entries[{m, s - m}] = moment_path_count(g, m, s - m);
    return t;
}

BigInt combinatorial_dimension(DimensionKind kind, int k) {
    if (k < 0) throw InvalidParameter("level must be non-negative");
    switch (kind) {
    case DimensionKind::su2_torus: return binomial(2 * k, k);
    case DimensionKind::su2_group: return catalan(k);
    case DimensionKind::su3_torus2: {
        BigInt s = 0;
        for (int j = 0; j <= k; ++j) {
            BigInt c = binomial(k, j);
            s += binomial(2 * j, j) * c * c;
        }
        return s;
    }
    case DimensionKind::su3_group: return moment_formula_su3_Ainf(k, k);
    }
    return 0;
}

BigInt moment_formula_su3_A6inf(int m, int n) {
    if (m < 0 || n < 0) throw InvalidParameter("moment indices must be non-negative");
    if ((n - m) % 3 != 0) return 0;
    const int r = (n - m) / 3;
    BigInt s = 0;
    const int lo = std::max(0, -r), hi = std::min(m, m + 2 * r), top = std::min(m, m + r);
    for (int k1 = lo; k1 <= hi; ++k1)
        for (int k2 = lo; k2 <= hi && k1 + k2 <= top; ++k2)
            s += multinomial(k1, k2, m - k1 - k2) * multinomial(k1 + r, k2 + r, m + r - k1 - k2);
    return s;
}

Laurent laurent_mul(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) out[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Laurent jacobian_laurent() {
    return {{{1, 1}, 1}, {{1, -2}, 1}, {{-2, 1}, 1}, {{-1, -1}, -1}, {{2, -1}, -1}, {{-1, 2}, -1}};
}

const Laurent& jacobian_laurent_square() {
    static const Laurent sq = [] {
        Laurent j = jacobian_laurent();
        return laurent_mul(j, j);
    }();
    return sq;
}

BigInt moment_formula_su3_Ainf(int m, int n) {
    if (m < 0 || n < 0) throw InvalidParameter("moment indices must be non-negative");
    if ((n - m) % 3 != 0) return 0;
    const int r = (n - m) / 3;
    BigInt s = 0;
    for (const auto& [a, gamma] : jacobian_laurent_square()) {
        const int b1 = (2 * a.first + a.second) / 3, b2 = (a.first + 2 * a.second) / 3;
        const int k1lo = std::max(0, -r - b1), k1hi = std::min(m, m + 2 * r - b1);
        const int k2lo = std::max(0, -r + b2), k2hi = std::min(m, m + 2 * r + b2);
        const int top = std::min(m, m + r - b1 + b2);
        for (int k1 = k1lo; k1 <= k1hi; ++k1)
            for (int k2 = k2lo; k2 <= k2hi && k1 + k2 <= top; ++k2)
                s += gamma * multinomial(k1, k2, m - k1 - k2) *
                     multinomial(k1 + r + b1, k2 + r - b2, m + r - b1 + b2 - k1 - k2);
    }
    if (s % 6 != 0)
        throw IdentityFailure("signed multinomial sum not divisible by 6 at (" + std::to_string(m) + "," +
                              std::to_string(n) + ")");
    return -s / 6;
}

BigInt su3_path_count_formula(int n, int l1, int l2) {
    if (n < 0 || l1 < 0 || l2 < 0) throw InvalidParameter("arguments must be non-negative");
    const int x = n + 2 * l1 + l2 + 6, y = n - l1 + l2 + 3, z = n - l1 - 2 * l2;
    if (x % 3 != 0 || z < 0 || y < 0) return 0;
    BigInt num = BigInt(l1 + 1) * (l2 + 1) * (l1 + l2 + 2) * factorial(n);
    BigInt den = factorial(x / 3) * factorial(y / 3) * factorial(z / 3);
    if (num % den != 0) throw IdentityFailure("path count formula gave a non-integer");
    return num / den;
}

BigInt hecke_multinomial_expression(int n, int p1, int p2) {
    const int p3 = n - p1 - p2;
    return multinomial(p1, p2, p3) - multinomial(p1, p2 + 1, p3 - 1) + multinomial(p1 + 1, p2 + 1, p3 - 2) -
           multinomial(p1 + 1, p2 - 1, p3) + multinomial(p1 + 2, p2 - 1, p3 - 1) -
           multinomial(p1 + 2, p2, p3 - 2);
}

BigInt hecke_dimension(int n, int p1, int p2, HeckeMethod method) {
    const int p3 = n - p1 - p2;
    if (p2 < 0 || p3 < 0 || p1 < p2 || p2 < p3)
        throw InvalidParameter("(" + std::to_string(p1) + "," + std::to_string(p2) + "," + std::to_string(p3) +
                               ") is not a Young diagram");
    if (method == HeckeMethod::multinomial) return hecke_multinomial_expression(n, p1, p2);

    auto inv = [](int q) -> Rational {
        if (q < 0) return 0;
        return Rational(1) / Rational(factorial(q));
    };
    Rational M[3][3] = {{inv(p1), inv(p1 + 1), inv(p1 + 2)},
                        {inv(p2 - 1), inv(p2), inv(p2 + 1)},
                        {inv(p3 - 2), inv(p3 - 1), inv(p3)}};
    Rational det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                   M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                   M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    Rational v = det * Rational(factorial(n));
    if (boost::multiprecision::denominator(v) != 1) throw IdentityFailure("determinantal formula gave a non-integer");
    return boost::multiprecision::numerator(v);
}

BigInt hecke_square_sum(int n, HeckeMethod method) {
    BigInt s = 0;
    for (int p1 = 0; p1 <= n; ++p1)
        for (int p2 = 0; p2 <= p1; ++p2) {
            int p3 = n - p1 - p2;
            if (p3 < 0 || p3 > p2) continue;
            BigInt d = hecke_dimension(n, p1, p2, method);
            s += d * d;
        }
    return s;
}

BigInt path_count_square_sum(int n) {
    BigInt s = 0;
    for (int l1 = 0; l1 <= n; ++l1)
        for (int l2 = 0; l1 + l2 <= n; ++l2) {
            BigInt c = su3_path_count_formula(n, l1, l2);
            s += c * c;
        }
    return s;
}

}  // namespace nimrep
