// SPDX-License-Identifier: MIT
// Exact and floating scalar plumbing shared by every module.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace nimrep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846264338327950288;

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DataUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};
// A stated identity failed to hold; the message names the first offending spot.
struct IdentityFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Small exact fraction for angles on the torus. Denominators stay tiny
// (a few hundred at most) so 64 bits is plenty.
struct Frac {
    std::int64_t p = 0;
    std::int64_t q = 1;

    Frac() = default;
    Frac(std::int64_t num, std::int64_t den = 1);

    double value() const { return double(p) / double(q); }
    // Representative in [0,1).
    Frac mod1() const;
    std::string str() const;
    static Frac parse(const std::string& s);

    friend Frac operator+(Frac a, Frac b) { return {a.p * b.q + b.p * a.q, a.q * b.q}; }
    friend Frac operator-(Frac a, Frac b) { return {a.p * b.q - b.p * a.q, a.q * b.q}; }
    friend Frac operator-(Frac a) { return {-a.p, a.q}; }
    friend Frac operator*(std::int64_t k, Frac a) { return {k * a.p, a.q}; }
    friend bool operator==(Frac a, Frac b) { return a.p == b.p && a.q == b.q; }
    friend bool operator<(Frac a, Frac b) { return a.p * b.q < b.p * a.q; }
};

// e^{2 pi i theta}
cplx unit(double theta);
inline cplx unit(Frac theta) { return unit(theta.value()); }

// Dense row-major square-or-rectangular matrix over any ring.
template <class T>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, T(0)) {}
    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    T& operator()(int i, int j) { return a[std::size_t(i) * cols + j]; }
    const T& operator()(int i, int j) const { return a[std::size_t(i) * cols + j]; }

    template <class U>
    Mat<U> cast() const {
        Mat<U> m(rows, cols);
        for (std::size_t k = 0; k < a.size(); ++k) m.a[k] = U(a[k]);
        return m;
    }
    Mat transpose() const {
        Mat m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    bool is_zero() const {
        for (const auto& x : a)
            if (x != T(0)) return false;
        return true;
    }
    friend Mat operator+(Mat x, const Mat& y) {
        for (std::size_t k = 0; k < x.a.size(); ++k) x.a[k] += y.a[k];
        return x;
    }
    friend Mat operator-(Mat x, const Mat& y) {
        for (std::size_t k = 0; k < x.a.size(); ++k) x.a[k] -= y.a[k];
        return x;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols != y.rows) throw InvalidParameter("matrix shape mismatch");
        Mat m(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const T& v = x(i, k);
                if (v == T(0)) continue;
                for (int j = 0; j < y.cols; ++j) m(i, j) += v * y(k, j);
            }
        return m;
    }
    friend Mat operator*(const T& s, Mat x) {
        for (auto& v : x.a) v *= s;
        return x;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

// Combinatorics over big integers. Negative arguments give zero where the
// usual convention 1/q! = 0 for q < 0 applies.
BigInt factorial(long n);
BigInt binomial(long n, long k);
BigInt catalan(long k);
// (a, b, c)! = (a+b+c)! / (a! b! c!), zero if any part is negative.
BigInt multinomial(long a, long b, long c);

// Canonical text forms used by every exporter.
std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);  // "p/q" or "p"
std::string format_double(double x);       // 17 significant digits

double to_double(const Rational& x);

}  // namespace nimrep
