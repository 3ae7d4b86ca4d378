#include "nimrep/graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace nimrep;

namespace {

const char* kSu2Ids[] = {"A(2)", "A(5)", "A(9)", "D(4)", "D(5)", "D(6)", "D(9)",
                         "E(6)", "E(7)", "E(8)", "Tad(1)", "Tad(4)"};

}  // namespace

TEST_CASE("catalogue: id parsing accepts the documented spellings") {
    CHECK(parse_graph_id("Dyn-E7").canonical() == "E(7)");
    CHECK(parse_graph_id("E(6)").canonical() == "E(6)");
    CHECK(parse_graph_id("Aff-D6").canonical() == "Aff-D(6)");
    CHECK(parse_graph_id("SU3-Astar(8)").canonical() == "SU3-Astar(8)");
    CHECK(parse_graph_id("Trunc-Ainfinf(6)").canonical() == "Trunc-Ainfinf(6)");
    CHECK_THROWS_AS(parse_graph_id("banana"), InvalidParameter);
    CHECK_THROWS_AS(graph_by_id("SU3-E(8)"), DataUnavailable);
}

TEST_CASE("catalogue: vertex counts and degrees") {
    CHECK(graph_by_id("A(7)").size() == 7);
    CHECK(graph_by_id("D(7)").size() == 7);
    CHECK(graph_by_id("E(8)").size() == 8);
    CHECK(graph_by_id("Aff-D(6)").size() == 7);
    CHECK(graph_by_id("Aff-E(6)").size() == 7);
    CHECK(graph_by_id("Aff-E(7)").size() == 8);
    CHECK(graph_by_id("Aff-E(8)").size() == 9);
    CHECK(graph_by_id("Aff-A(6)").size() == 6);
    // A^(l) has one vertex per lattice point with l1 + l2 <= l - 3.
    for (int l = 4; l <= 9; ++l) CHECK(graph_by_id("SU3-A(" + std::to_string(l) + ")").size() == (l - 2) * (l - 1) / 2);

    // Affine SU(2) graphs have Perron-Frobenius eigenvalue exactly 2.
    for (const char* id : {"Aff-A(4)", "Aff-A(8)", "Aff-D(4)", "Aff-D(7)", "Aff-E(6)", "Aff-E(7)", "Aff-E(8)"})
        CHECK(spectral_radius(graph_by_id(id)) == doctest::Approx(2.0).epsilon(1e-10));
    // SU(3) triangle graphs have spectral radius 3 on the infinite graph and below 3 at finite level.
    CHECK(spectral_radius(graph_by_id("SU3-A(6)")) < 3.0);
}

TEST_CASE("catalogue: Dynkin spectra are 2cos(pi j / h) over the Coxeter exponents") {
    struct Row { Su2Family f; int n; std::vector<int> exps; int h; };
    std::vector<Row> rows = {
        {Su2Family::E, 6, {1, 4, 5, 7, 8, 11}, 12},
        {Su2Family::E, 7, {1, 5, 7, 9, 11, 13, 17}, 18},
        {Su2Family::E, 8, {1, 7, 11, 13, 17, 19, 23, 29}, 30},
        {Su2Family::D, 5, {1, 3, 4, 5, 7}, 8},
        {Su2Family::A, 4, {1, 2, 3, 4}, 5},
    };
    for (const auto& r : rows) {
        CHECK(coxeter_exponents(r.f, r.n) == r.exps);
        CHECK(coxeter_number(r.f, r.n) == r.h);
    }
    for (const char* id : kSu2Ids) {
        CAPTURE(id);
        Graph g = graph_by_id(id);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle::dense(g));
        std::vector<double> got(es.eigenvalues().data(), es.eigenvalues().data() + g.size());
        std::vector<double> want;
        for (const auto& e : eigendata(id).entries)
            for (int k = 0; k < e.multiplicity; ++k) want.push_back(e.eigenvalue.real());
        // D_{2l} lists the repeated exponent once with its tail weight
        // and once with weight zero; the multiset must still match.
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-10));
    }
}

TEST_CASE("eigendata: weights equal squared eigenvector entries at the distinguished vertex") {
    for (const char* id : kSu2Ids) {
        CAPTURE(id);
        auto ref = oracle::spectral_weights(graph_by_id(id));
        EigenData e = eigendata(id);
        CHECK(e.total_weight() == doctest::Approx(1.0).epsilon(1e-12));
        for (auto [lam, w] : ref) {
            double mine = 0;
            for (const auto& x : e.entries)
                if (std::abs(x.eigenvalue.real() - lam) < 1e-8) mine += x.weight * x.multiplicity;
            CHECK(mine == doctest::Approx(w).epsilon(1e-10));
        }
    }
}

TEST_CASE("eigendata: E7 and E8 weights from the conformal embedding are positive and sum to one") {
    for (const char* id : {"E(7)", "E(8)"}) {
        EigenData e = eigendata(id);
        double s = 0;
        for (const auto& x : e.entries) {
            CHECK(x.weight > 0);
            s += x.weight;
        }
        CHECK(s == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("eigendata: SU(3) A^(l) eigenvalues are Phi at the exponent angles and match the directed spectrum") {
    for (int l = 4; l <= 8; ++l) {
        std::string id = "SU3-A(" + std::to_string(l) + ")";
        CAPTURE(id);
        Graph g = graph_by_id(id);
        EigenData e = eigendata(id);
        CHECK(e.dimension == 2);
        CHECK(e.total_weight() == doctest::Approx(1.0).epsilon(1e-12));
        auto spec = numeric_spectrum(g);
        REQUIRE(spec.size() == e.entries.size());
        for (const auto& x : e.entries) {
            double best = 1e9;
            for (auto s : spec) best = std::min(best, std::abs(s - x.eigenvalue));
            CHECK(best < 1e-8);
        }
    }
}

TEST_CASE("eigendata: exceptional SU(3) tables carry weights summing to one") {
    for (const char* id : {"SU3-E(8)", "SU3-E1(12)"}) {
        CAPTURE(id);
        EigenData e = eigendata(id);
        CHECK(e.dimension == 2);
        CHECK(e.total_weight() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("graph: SU(3) rotation is an automorphism of order three") {
    for (int l = 4; l <= 8; ++l) {
        Graph g = graph_by_id("SU3-A(" + std::to_string(l) + ")");
        Mat<int> P = su3_rotation(g);
        CHECK(P * g.adjacency == g.adjacency * P);
        CHECK(P * P * P == Mat<int>::identity(g.size()));
        if (g.size() > 1) CHECK_FALSE(P == Mat<int>::identity(g.size()));
    }
}

TEST_CASE("graph: Perron-Frobenius vector is positive and unit length") {
    for (const char* id : {"E(8)", "D(6)", "Aff-E(7)"}) {
        auto v = perron_frobenius_vector(graph_by_id(id));
        double n2 = 0;
        for (double x : v) {
            CHECK(x > 0);
            n2 += x * x;
        }
        CHECK(n2 == doctest::Approx(1.0));
    }
}

TEST_CASE("graph: distinguished vertex has the smallest Perron-Frobenius entry") {
    for (const char* id : {"A(6)", "D(6)", "E(6)", "E(7)", "E(8)"}) {
        CAPTURE(id);
        Graph g = graph_by_id(id);
        auto v = perron_frobenius_vector(g);
        double lo = *std::min_element(v.begin(), v.end());
        CHECK(v[std::size_t(g.distinguished)] == doctest::Approx(lo).epsilon(1e-12));
    }
}

TEST_CASE("graph: JSON round trip") {
    for (const char* id : {"E(7)", "SU3-A(6)", "Trunc-Ainf(5)"}) {
        Graph g = graph_by_id(id);
        Graph h = graph_from_json(to_json(g));
        CHECK(h.id == g.id);
        CHECK(h.adjacency == g.adjacency);
        CHECK(h.distinguished == g.distinguished);
        CHECK(h.lattice == g.lattice);
    }
    EigenData e = eigendata("E(8)");
    EigenData f = eigendata_from_json(to_json(e));
    REQUIRE(f.entries.size() == e.entries.size());
    for (std::size_t i = 0; i < e.entries.size(); ++i) CHECK(f.entries[i].weight == e.entries[i].weight);
}

TEST_CASE("graph: invalid parameters are refused") {
    CHECK_THROWS_AS(build_su2_graph(Su2Family::D, 3), InvalidParameter);
    CHECK_THROWS_AS(build_su2_graph(Su2Family::E, 9), InvalidParameter);
    CHECK_THROWS_AS(build_su3_graph(Su3Family::Astar, 7), InvalidParameter);
    CHECK_THROWS_AS(eigendata("A(0)"), InvalidParameter);
}
