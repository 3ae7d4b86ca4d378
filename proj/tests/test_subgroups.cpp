#include "nimrep/graph.hpp"
#include "nimrep/paths.hpp"
#include "nimrep/series.hpp"
#include "nimrep/subgroups.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace nimrep;

namespace {

Mat2 mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

double dist(const Mat2& a, const Mat2& b) {
    double d = 0;
    for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(a[std::size_t(i)] - b[std::size_t(i)]));
    return d;
}

bool contains(const FiniteMatrixGroup& g, const Mat2& x) {
    return std::any_of(g.elements.begin(), g.elements.end(), [&](const Mat2& y) { return dist(x, y) < 1e-9; });
}

std::vector<int> sorted_sizes(const ClassData& cd) {
    std::vector<int> v;
    for (const auto& c : cd.classes) v.push_back(c.size);
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("subgroups: name parsing") {
    CHECK(parse_group("Z4").expected_order() == 4);
    CHECK(parse_group("Z2n(3)").expected_order() == 6);
    CHECK(parse_group("BD(5)").expected_order() == 12);
    CHECK(parse_group("BD5").mckay_graph_id() == "Aff-D(5)");
    CHECK(parse_group("BT").mckay_graph_id() == "Aff-E(6)");
    CHECK(parse_group("BO").mckay_graph_id() == "Aff-E(7)");
    CHECK(parse_group("BI").mckay_graph_id() == "Aff-E(8)");
    CHECK(parse_group("Z6").mckay_graph_id() == "Aff-A(6)");
    CHECK_THROWS_AS(parse_group("SU5"), InvalidParameter);
}

TEST_CASE("subgroups: enumerated groups are closed, unimodular and of the expected order") {
    struct Row { const char* name; int order; };
    for (Row r : {Row{"Z4", 4}, Row{"Z6", 6}, Row{"BD4", 8}, Row{"BD5", 12}, Row{"BD7", 20}, Row{"BT", 24},
                  Row{"BO", 48}, Row{"BI", 120}}) {
        CAPTURE(r.name);
        FiniteMatrixGroup g = generate_group(parse_group(r.name));
        CHECK(g.order() == r.order);
        for (const auto& x : g.elements) {
            cplx det = x[0] * x[3] - x[1] * x[2];
            CHECK(std::abs(det - cplx(1)) < 1e-10);
            // Unitary: the inverse is the conjugate transpose and lies in the group.
            Mat2 inv = {std::conj(x[0]), std::conj(x[2]), std::conj(x[1]), std::conj(x[3])};
            CHECK(dist(mul(x, inv), Mat2{1, 0, 0, 1}) < 1e-10);
            CHECK(contains(g, inv));
        }
        for (std::size_t i = 0; i < g.elements.size(); i += 7)
            for (std::size_t j = 0; j < g.elements.size(); j += 5) CHECK(contains(g, mul(g.elements[i], g.elements[j])));
    }
}

TEST_CASE("subgroups: class sizes follow the classical tables") {
    CHECK(sorted_sizes(class_data(generate_group(parse_group("BT")))) == std::vector<int>{1, 1, 4, 4, 4, 4, 6});
    CHECK(sorted_sizes(class_data(generate_group(parse_group("BO")))) == std::vector<int>{1, 1, 6, 6, 6, 8, 8, 12});
    CHECK(sorted_sizes(class_data(generate_group(parse_group("BI")))) ==
          std::vector<int>{1, 1, 12, 12, 12, 12, 20, 20, 30});
    for (int n : {4, 5, 6, 7}) {
        CAPTURE(n);
        ClassData cd = class_data(generate_group(parse_group("BD" + std::to_string(n))));
        std::vector<int> want = {1, 1};
        for (int j = 1; j <= n - 3; ++j) want.push_back(2);
        want.push_back(n - 2);
        want.push_back(n - 2);
        std::sort(want.begin(), want.end());
        CHECK(sorted_sizes(cd) == want);
    }
    ClassData z = class_data(generate_group(parse_group("Z6")));
    CHECK(z.classes.size() == 6);
}

TEST_CASE("subgroups: class data is consistent with the elements") {
    for (const char* name : {"Z4", "BD5", "BT", "BO", "BI"}) {
        CAPTURE(name);
        FiniteMatrixGroup g = generate_group(parse_group(name));
        ClassData cd = class_data(g);
        int total = 0;
        double trace_sum = 0, trace_sq = 0;
        for (const auto& c : cd.classes) {
            total += c.size;
            CHECK(c.chi_rho >= -2 - 1e-12);
            CHECK(c.chi_rho <= 2 + 1e-12);
            CHECK(c.chi_rho == doctest::Approx(2 * std::cos(2 * kPi * c.theta.value())).epsilon(1e-12));
            trace_sum += c.size * c.chi_rho;
            trace_sq += c.size * c.chi_rho * c.chi_rho;
        }
        CHECK(total == g.order());
        // rho is irreducible and non-trivial (for the non-abelian groups).
        CHECK(std::abs(trace_sum) < 1e-9);
        if (std::string(name) != "Z4") CHECK(trace_sq / g.order() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("subgroups: moments match affine path counts and element averages") {
    for (const char* name : {"Z4", "Z6", "BD4", "BD5", "BT", "BO", "BI"}) {
        CAPTURE(name);
        GroupSpec spec = parse_group(name);
        FiniteMatrixGroup g = generate_group(spec);
        ClassData cd = class_data(g);
        Graph aff = graph_by_id(spec.mckay_graph_id());
        for (int m = 0; m <= 12; ++m) {
            CAPTURE(m);
            double avg = 0;
            for (const auto& x : g.elements) avg += std::pow((x[0] + x[3]).real(), m);
            avg /= g.order();
            double paths = moment_path_count(aff, m, 0).convert_to<double>();
            CHECK(std::abs(subgroup_moment(cd, m) - paths) < 1e-9 * std::max(1.0, paths));
            CHECK(std::abs(avg - paths) < 1e-9 * std::max(1.0, paths));
        }
    }
}

TEST_CASE("subgroups: Molien, Kostant and Hilbert series agree for the trivial representation") {
    const int order = 40;
    for (const char* name : {"Z4", "BD4", "BT", "BO", "BI"}) {
        CAPTURE(name);
        GroupSpec spec = parse_group(name);
        FiniteMatrixGroup g = generate_group(spec);
        ClassData cd = class_data(g);
        DSeries mol = molien_series_trivial(g, order);
        DSeries kos = kostant_trivial(cd, order);
        Graph aff = graph_by_id(spec.mckay_graph_id());
        RSeries h = hilbert_su2(aff, order).entry(aff.distinguished, aff.distinguished).cast<Rational>();
        CHECK(max_abs_diff(mol, kos) < 1e-9);
        CHECK(max_abs_diff(mol, h) < 1e-9);
    }
    // Binary icosahedral invariants: degrees 12, 20, 30 with one relation in degree 60.
    DSeries bi = molien_series_trivial(generate_group(parse_group("BI")), 40);
    RSeries klein = product_quotient(40, {}, {-12, -20}, "t");
    CHECK(max_abs_diff(bi, klein + RSeries::monomial(40, 30, 1, "t") * klein) < 1e-9);
}

TEST_CASE("subgroups: moment generating series") {
    ClassData cd = class_data(generate_group(parse_group("BT")));
    DSeries s = moment_generating_series(cd, 12);
    for (int m = 0; m <= 12; ++m) CHECK(s[m] == doctest::Approx(subgroup_moment(cd, m)));
    auto j = to_json(cd);
    CHECK(j.at("order") == 24);
    CHECK(j.at("classes").size() == 7);
}
