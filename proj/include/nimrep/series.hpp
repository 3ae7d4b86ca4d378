// SPDX-License-Identifier: MIT
// Truncated power series (scalar and matrix), Hilbert series of the
// pre-projective and Calabi-Yau-3 path algebras, and the T / Theta series
// of SU(2) graphs by several independent routes.
#pragma once

#include "nimrep/graph.hpp"
#include "nimrep/numeric.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace nimrep {

inline std::string coeff_str(const Rational& x) { return to_string(x); }
inline std::string coeff_str(const BigInt& x) { return to_string(x); }
inline std::string coeff_str(double x) { return format_double(x); }
inline double coeff_double(const Rational& x) { return to_double(x); }
inline double coeff_double(const BigInt& x) { return x.convert_to<double>(); }
inline double coeff_double(double x) { return x; }

// Coefficients c[0..order] of a series in one variable.
template <class T>
struct Series {
    std::vector<T> c;
    std::string var = "q";

    Series() = default;
    explicit Series(int order, std::string v = "q") : c(std::size_t(order + 1), T(0)), var(std::move(v)) {}

    int order() const { return int(c.size()) - 1; }
    T& operator[](int k) { return c[std::size_t(k)]; }
    const T& operator[](int k) const { return c[std::size_t(k)]; }

    static Series one(int order, std::string v = "q") {
        Series s(order, std::move(v));
        s[0] = T(1);
        return s;
    }
    // coeff * var^k, or zero when k exceeds the order.
    static Series monomial(int order, int k, T coeff, std::string v = "q") {
        Series s(order, std::move(v));
        if (k <= order) s[k] = coeff;
        return s;
    }

    Series truncate(int order) const {
        Series s(order, var);
        for (int k = 0; k <= std::min(order, this->order()); ++k) s[k] = c[std::size_t(k)];
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series s(std::min(a.order(), b.order()), a.var);
        for (int k = 0; k <= s.order(); ++k) s[k] = a[k] + b[k];
        return s;
    }
    friend Series operator-(const Series& a, const Series& b) {
        Series s(std::min(a.order(), b.order()), a.var);
        for (int k = 0; k <= s.order(); ++k) s[k] = a[k] - b[k];
        return s;
    }
    friend Series operator*(const Series& a, const Series& b) {
        Series s(std::min(a.order(), b.order()), a.var);
        for (int i = 0; i <= s.order(); ++i) {
            if (a[i] == T(0)) continue;
            for (int j = 0; i + j <= s.order(); ++j) s[i + j] += a[i] * b[j];
        }
        return s;
    }
    friend Series operator*(const T& x, Series a) {
        for (auto& v : a.c) v *= x;
        return a;
    }

    // Needs an invertible constant term.
    Series inverse() const {
        if (c.empty() || c[0] == T(0)) throw InvalidParameter("series inverse needs a non-zero constant term");
        Series s(order(), var);
        s[0] = T(1) / c[0];
        for (int k = 1; k <= order(); ++k) {
            T acc(0);
            for (int i = 1; i <= k; ++i) acc += c[std::size_t(i)] * s[k - i];
            s[k] = -acc / c[0];
        }
        return s;
    }

    // this(inner(x)); inner must have zero constant term.
    Series compose(const Series& inner) const {
        if (inner.c.empty() || inner[0] != T(0)) throw InvalidParameter("composition needs an inner series without constant term");
        const int N = std::min(order(), inner.order());
        Series r(N, inner.var);
        Series g = inner.truncate(N);
        for (int k = order(); k >= 0; --k) {
            r = r * g;
            r[0] += c[std::size_t(k)];
        }
        return r;
    }

    // q -> q^k at the same order.
    Series stretch(int k) const {
        Series s(order(), var);
        for (int i = 0; i * k <= order(); ++i) s[i * k] = c[std::size_t(i)];
        return s;
    }

    template <class U>
    Series<U> cast() const {
        Series<U> s(order(), var);
        for (int k = 0; k <= order(); ++k) s[k] = U(c[std::size_t(k)]);
        return s;
    }
};

using RSeries = Series<Rational>;
using DSeries = Series<double>;

inline DSeries to_double(const RSeries& s) {
    DSeries d(s.order(), s.var);
    for (int k = 0; k <= s.order(); ++k) d[k] = to_double(s[k]);
    return d;
}

// Polynomial given as (exponent, coefficient) terms, as a series.
RSeries polynomial(int order, const std::vector<std::pair<int, long>>& terms, const std::string& var = "q");
// Product of (1 + sign q^k) factors over product of (1 + sign q^k) factors;
// each factor is written as a signed exponent: +k means (1 + q^k), -k means (1 - q^k).
RSeries product_quotient(int order, const std::vector<int>& num, const std::vector<int>& den,
                         const std::string& var = "q");

// Largest |a_k - b_k| over the common order.
template <class A, class B>
double max_abs_diff(const Series<A>& a, const Series<B>& b) {
    double m = 0;
    for (int k = 0; k <= std::min(a.order(), b.order()); ++k)
        m = std::max(m, std::abs(coeff_double(a[k]) - coeff_double(b[k])));
    return m;
}

template <class T>
struct MatrixSeries {
    std::string graph_id;
    std::string var = "t";
    std::vector<Mat<T>> c;  // c[k] = coefficient of var^k

    int order() const { return int(c.size()) - 1; }
    int size() const { return c.empty() ? 0 : c[0].rows; }
    Series<T> entry(int i, int j) const {
        Series<T> s(order(), var);
        for (int k = 0; k <= order(); ++k) s[k] = c[std::size_t(k)](i, j);
        return s;
    }
    // Largest degree with a non-zero coefficient, -1 for the zero series.
    int degree() const {
        for (int k = order(); k >= 0; --k)
            if (!c[std::size_t(k)].is_zero()) return k;
        return -1;
    }
};

using IMatrixSeries = MatrixSeries<BigInt>;

// (1 - D t + t^2) H and (1 - D t + D^T t^2 - t^3) H, truncated at the order of H.
IMatrixSeries apply_su2_denominator(const Mat<int>& D, const IMatrixSeries& H);
IMatrixSeries apply_su3_denominator(const Mat<int>& D, const IMatrixSeries& H);

// Numerator permutation of the pre-projective Hilbert series of an ADET
// graph (identity or the unique non-trivial involution), validated as a
// graph automorphism with P^2 = 1. Empty for graphs without one.
std::optional<Mat<int>> nakayama_permutation(const Graph& g);

// (1 + P t^h)(1 - D t + t^2)^{-1} for ADET graphs, (1 - D t + t^2)^{-1}
// otherwise. For ADET graphs asserts all coefficients above h - 2 vanish.
IMatrixSeries hilbert_su2(const Graph& g, int order);

// (1 - P t^h)(1 - D t + D^T t^2 - t^3)^{-1}; P must commute with D and D^T.
IMatrixSeries hilbert_su3(const Graph& g, const Mat<int>& P, int h, int order);
// The numerator permutation for the catalogue's SU(3) graphs: the Z/3
// rotation for A^(l), the identity for A^(l)* with l >= 5.
Mat<int> su3_numerator_permutation(const Graph& g);

// Directed McKay graph of Z_m embedded in SU(3) as diag(e^a, e^b, e^c),
// e = exp(2 pi i / m): edges k -> k+a, k+b, k+c (mod m).
Graph abelian_mckay(int m, int a, int b, int c);
// (1 - D t + D^T t^2 - t^3)^{-1}.
IMatrixSeries cy3_hilbert(const Graph& mckay, int order);
// Monomials x^i y^j z^k of degree n with r + i a + j b + k c = 0 mod m,
// i.e. the multiplicity of the character r in degree n.
RSeries abelian_invariant_count(int m, int a, int b, int c, int r, int order);
// Molien sum (1/m) sum_g conj(chi_r(g)) / det(1 - conj(rho(g)) t), in floating point.
DSeries abelian_molien(int m, int a, int b, int c, int r, int order);

enum class TRoute { measure, f_compose, closed_form };

// Path-count series f(z) = sum_k [D^2k]_{*,*} z^k.
RSeries loop_series(const Graph& g, int order);
// Closed form from the classical table; ids A(n), D(n), E(6..8),
// Aff-A(2n), Aff-D(n), Aff-E(6..8).
RSeries closed_form_t_series(const std::string& graph_id, int order);
// The D_n row exactly as usually printed, (1 + q^(n-3)) / (1 + q^(n-2)).
RSeries printed_d_t_series(int n, int order);
DSeries t_series(const std::string& graph_id, int order, TRoute route);

// Theta(q) = 2 G(q^{1/2}) + q - 1 (measure route) and
// q + ((1 - q)/(1 + q)) f(q / (1 + q)^2) (path route).
DSeries theta_series_measure(const std::string& graph_id, int order);
RSeries theta_series_paths(const Graph& g, int order);

// (1 + q)^{-1} f~(q / (1 + q)^2) in the variable w = q^{1/2}, so that the
// coefficient list is that of T~(t^2).
IMatrixSeries generalized_t(const Graph& g, int order);

// Kostant data: a, b and the numerator polynomials z_gamma for every
// vertex of the affine diagram.
struct KostantCheck {
    std::string family;
    int a = 0, b = 0;
    std::string affine_graph;
    std::vector<RSeries> numerators;  // indexed by vertex
};
// family in {E6, E7, E8, A(l), D(l)}; throws IdentityFailure naming the
// first vertex and degree where the product fails to be a polynomial.
KostantCheck kostant_closed_form_check(const std::string& family, int order);

template <class T>
nlohmann::json to_json(const Series<T>& s) {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& x : s.c) cs.push_back(coeff_str(x));
    return {{"variable", s.var}, {"order", s.order()}, {"coeffs", cs}};
}
RSeries rseries_from_json(const nlohmann::json& j);

template <class T>
nlohmann::json to_json(const MatrixSeries<T>& m) {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& M : m.c) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < M.rows; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < M.cols; ++j) row.push_back(coeff_str(M(i, j)));
            rows.push_back(row);
        }
        cs.push_back(rows);
    }
    return {{"graph_id", m.graph_id}, {"variable", m.var}, {"order", m.order()}, {"coeffs", cs}};
}

}  // namespace nimrep
