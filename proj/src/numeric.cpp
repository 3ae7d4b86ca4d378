// SPDX-License-Identifier: MIT
#include "nimrep/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>

namespace nimrep {

Frac::Frac(std::int64_t num, std::int64_t den) : p(num), q(den) {
    if (q == 0) throw InvalidParameter("zero denominator");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    std::int64_t g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
}

Frac Frac::mod1() const {
    std::int64_t r = p % q;
    if (r < 0) r += q;
    return {r, q};
}

std::string Frac::str() const {
    if (q == 1) return std::to_string(p);
    return std::to_string(p) + "/" + std::to_string(q);
}

Frac Frac::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return {std::stoll(s), 1};
        return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
    } catch (const std::logic_error&) {
        throw InvalidParameter("not a fraction: " + s);
    }
}

cplx unit(double theta) {
    double a = 2 * kPi * theta;
    return {std::cos(a), std::sin(a)};
}

BigInt factorial(long n) {
    if (n < 0) return 0;
    static std::mutex mu;
    static std::vector<BigInt> cache{1};
    std::lock_guard<std::mutex> lock(mu);
    while (long(cache.size()) <= n) cache.push_back(cache.back() * BigInt(cache.size()));
    return cache[std::size_t(n)];
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

BigInt catalan(long k) {
    if (k < 0) return 0;
    return binomial(2 * k, k) / (k + 1);
}

BigInt multinomial(long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0) return 0;
    return factorial(a + b + c) / (factorial(a) * factorial(b) * factorial(c));
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
    BigInt n = boost::multiprecision::numerator(x);
    BigInt d = boost::multiprecision::denominator(x);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

std::string format_double(double x) {
    if (std::isnan(x)) return "NaN";
    if (x == 0) return "0";  // folds -0 into 0 for bit-stable output
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace nimrep
