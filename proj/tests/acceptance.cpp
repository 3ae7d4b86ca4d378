// SPDX-License-Identifier: MIT
// Acceptance run: one PASS/FAIL line per criterion. Each statement is
// checked as written; where a statement fails, the detail line names the
// variant that does hold.
#include "nimrep/deltoid.hpp"
#include "nimrep/graph.hpp"
#include "nimrep/measures.hpp"
#include "nimrep/paths.hpp"
#include "nimrep/series.hpp"
#include "nimrep/subgroups.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace nimrep;

namespace {

// Pinned tolerances.
constexpr double kTolMoment = 1e-9;
constexpr double kTolAlphaP = 5e-4;
constexpr double kTolIdentity = 1e-12;
constexpr double kTolCoefficient = 1e-12;
constexpr double kInfeasibleResidual = 1e-2;
constexpr double kTolSeries = 1e-9;
constexpr double kTolDeltoid = 1e-9;

struct Verdict {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

double rel(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

double psi2(const EigenData& e, int h, int p) {
    if (p > h) p = 2 * h - p;
    for (const auto& x : e.entries)
        if (x.exponent[0] == p) return x.weight;
    return 0;
}

double alpha_j(int j, double phase) { return 2 * std::pow(std::sin(j * phase), 2); }

IMatrixSeries numerator(const Mat<int>& P, int h, int order, int sign) {
    IMatrixSeries m;
    for (int k = 0; k <= order; ++k) m.c.push_back(Mat<BigInt>(P.rows, P.rows));
    m.c[0] = Mat<BigInt>::identity(P.rows);
    if (h <= order) m.c[std::size_t(h)] = m.c[std::size_t(h)] + BigInt(sign) * P.cast<BigInt>();
    return m;
}

bool same(const IMatrixSeries& a, const IMatrixSeries& b, int order) {
    for (int k = 0; k <= order; ++k)
        if (!(a.c[std::size_t(k)] == b.c[std::size_t(k)])) return false;
    return true;
}

void c1(Verdict& v) {
    Graph ainf = truncate_infinite_graph(InfiniteKind::Ainf, 24);
    Graph ainfinf = truncate_infinite_graph(InfiniteKind::AinfInf, 24);
    for (int k = 0; k <= 12; ++k) {
        v.require(moment_path_count(ainf, 2 * k, 0) == catalan(k), "A_inf length " + std::to_string(2 * k));
        v.require(moment_path_count(ainfinf, 2 * k, 0) == binomial(2 * k, k), "A_inf,inf length " + std::to_string(2 * k));
        if (k < 12) {
            v.require(moment_path_count(ainf, 2 * k + 1, 0) == 0, "odd A_inf");
            v.require(moment_path_count(ainfinf, 2 * k + 1, 0) == 0, "odd A_inf,inf");
        }
    }
    v.detail << "k <= 12 exact";
}

void c2(Verdict& v) {
    std::vector<std::string> ids;
    for (int n = 1; n <= 10; ++n) ids.push_back("A(" + std::to_string(n) + ")");
    for (int n = 4; n <= 10; ++n) ids.push_back("D(" + std::to_string(n) + ")");
    for (int n = 6; n <= 8; ++n) ids.push_back("E(" + std::to_string(n) + ")");
    for (int n = 2; n <= 10; n += 2) ids.push_back("Aff-A(" + std::to_string(n) + ")");
    for (int n = 4; n <= 10; ++n) ids.push_back("Aff-D(" + std::to_string(n) + ")");
    for (int n = 6; n <= 8; ++n) ids.push_back("Aff-E(" + std::to_string(n) + ")");
    double worst = 0;
    for (const auto& id : ids) {
        DiscreteMeasure mu = canonical_measure(id);
        Graph g = graph_by_id(id);
        for (int m = 0; m <= 12; ++m) {
            double d = rel(moment_t(mu, m), moment_path_count(g, m, 0).convert_to<double>());
            worst = std::max(worst, d);
            v.require(d <= kTolMoment, id + " m=" + std::to_string(m));
        }
    }
    v.detail << ids.size() << " graphs, m <= 12, worst relative deviation " << worst;
}

void c3(Verdict& v) {
    const std::map<std::string, int> orders = {{"Z4", 4}, {"Z6", 6}, {"BD4", 8}, {"BD5", 12},
                                               {"BT", 24}, {"BO", 48}, {"BI", 120}};
    double worst = 0;
    for (const auto& [name, order] : orders) {
        GroupSpec s = parse_group(name);
        FiniteMatrixGroup g = generate_group(s);
        v.require(g.order() == order, name + " order");
        ClassData cd = class_data(g);
        std::vector<ClassRow> table = character_table(s);
        v.require(table.empty() || table.size() == cd.classes.size(), name + " class count");
        for (std::size_t i = 0; i < table.size() && i < cd.classes.size(); ++i) {
            v.require(table[i].size == cd.classes[i].size, name + " class size " + table[i].label);
            v.require(std::abs(table[i].chi_rho - cd.classes[i].chi_rho) < 1e-9, name + " chi " + table[i].label);
        }
        Graph aff = graph_by_id(s.mckay_graph_id());
        for (int m = 0; m <= 12; ++m) {
            double d = rel(subgroup_moment(cd, m), moment_path_count(aff, m, 0).convert_to<double>());
            worst = std::max(worst, d);
            v.require(d <= kTolMoment, name + " moment " + std::to_string(m));
        }
    }
    v.detail << "orders and tables match; worst moment deviation " << worst;
}

void c4(Verdict& v) {
    EigenData e7 = eigendata("E(7)"), e8 = eigendata("E(8)");
    const std::map<int, double> a7 = {{1, 0.4076},  {5, 2.7057},  {7, -0.1133}, {9, 4.0},   {11, -0.1133},
                                      {13, 2.7057}, {17, 0.4076}, {19, 0.4076}, {23, 2.7057}, {25, -0.1133},
                                      {27, 4.0},    {29, -0.1133}, {31, 2.7057}, {35, 0.4076}};
    const std::map<int, double> a8 = {{1, 0.4038},  {7, 3.5135},  {11, 2.0511}, {13, 4.5316}, {17, 4.5316},
                                      {19, 2.0511}, {23, 3.5135}, {29, 0.4038}, {31, 0.4038}, {37, 3.5135},
                                      {41, 2.0511}, {43, 4.5316}, {47, 4.5316}, {49, 2.0511}, {53, 3.5135},
                                      {59, 0.4038}};
    double wa = 0;
    for (auto [p, val] : a7) {
        double d = std::abs(18 * psi2(e7, 18, p) - alpha_j(1, p * kPi / 18) - val);
        wa = std::max(wa, d);
        v.require(d <= kTolAlphaP, "E7 alpha_" + std::to_string(p));
    }
    for (auto [p, val] : a8) {
        double d = std::abs(30 * psi2(e8, 30, p) - alpha_j(1, p * kPi / 30) - val);
        wa = std::max(wa, d);
        v.require(d <= kTolAlphaP, "E8 alpha_" + std::to_string(p));
    }
    double w7 = 0;
    for (int p : {1, 5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 35}) {
        double d = std::abs(9 * psi2(e7, 18, p) - alpha_j(2, p * kPi / 18));
        w7 = std::max(w7, d);
        v.require(d <= kTolIdentity, "E7 9|psi|^2 = alpha_2 at p=" + std::to_string(p));
    }
    double w30 = 0, w15 = 0;
    for (auto [p, val] : a8) {
        const double rhs = alpha_j(1, p * kPi / 30) + alpha_j(3, p * kPi / 30);
        w30 = std::max(w30, std::abs(30 * psi2(e8, 30, p) - rhs));
        w15 = std::max(w15, std::abs(15 * psi2(e8, 30, p) - rhs));
    }
    v.require(w30 <= kTolIdentity, "E8 30|psi|^2 = (alpha_1 + alpha_3)");
    v.detail << "alpha_p worst " << wa << "; E7 identity worst " << w7 << "; E8 identity with factor 30 worst "
             << w30 << ", with factor 15 worst " << w15;
}

void c5(Verdict& v) {
    FitResult e6 = cyclotomic_fit(eigendata_measure(eigendata("E(6)")),
                                  {make_measure("alpha*d(12)"), measure_d(12), measure_d(6), measure_d(4),
                                   measure_d(3)});
    const double want[] = {1, 0.5, -0.5, -0.5, 0.5};
    v.require(e6.feasible, "E6 fit feasible");
    for (std::size_t i = 0; i < 5 && i < e6.coefficients.size(); ++i)
        v.require(std::abs(e6.coefficients[i] - want[i]) <= kTolCoefficient, "E6 coefficient " + std::to_string(i));
    for (auto [id, N] : {std::pair<const char*, int>{"E(7)", 36}, {"E(8)", 60}}) {
        std::vector<DiscreteMeasure> basis;
        for (int n = 1; n <= N; ++n)
            if (N % n == 0) {
                basis.push_back(measure_d(n));
                basis.push_back(with_density(measure_d(n), [](const AngleKey& a) { return density_alpha(a.first); }));
            }
        FitResult r = cyclotomic_fit(eigendata_measure(eigendata(id)), basis);
        v.require(!r.feasible && r.residual > kInfeasibleResidual, std::string(id) + " infeasible");
        v.detail << id << " residual " << r.residual << "; ";
    }
    ThreePointSystem e8 = exceptional_three_point_system("SU3-E(8)");
    const double want8 = std::abs(1.0 / 16 - 1.0 / 12);
    v.require(!e8.fit.feasible && e8.fit.certificate_residual > kInfeasibleResidual, "SU3 E(8) infeasible");
    v.require(std::abs(e8.fit.certificate_residual - want8) <= kTolCoefficient, "SU3 E(8) residual 1/48");
    ThreePointSystem e12 = exceptional_three_point_system("SU3-E1(12)");
    v.require(!e12.fit.feasible && e12.fit.certificate_residual > kInfeasibleResidual, "SU3 E1(12) infeasible");
    v.detail << "SU3 E(8) residual " << e8.fit.certificate_residual << " (|1/16 - 1/12| = " << want8
             << "); SU3 E1(12) residual " << e12.fit.certificate_residual;
}

void c6(Verdict& v) {
    const char* ids[] = {"A(3)", "A(7)", "D(4)", "D(5)", "D(8)", "E(6)", "E(7)", "E(8)", "Aff-A(2)", "Aff-A(6)",
                         "Aff-D(4)", "Aff-D(7)", "Aff-E(6)", "Aff-E(7)", "Aff-E(8)"};
    double shifted = 0;
    for (const char* id : ids) {
        GraphKey key = parse_graph_id(id);
        // The D_n row is taken as tabulated; every other row from the table.
        const bool d_row = key.kind == GraphKey::Kind::D;
        DSeries cf = to_double(d_row ? printed_d_t_series(key.n, 30) : closed_form_t_series(id, 30));
        DSeries fc = t_series(id, 30, TRoute::f_compose), me = t_series(id, 30, TRoute::measure);
        v.require(max_abs_diff(fc, cf) == 0, std::string(id) + " f-composition vs closed form");
        v.require(max_abs_diff(me, cf) <= kTolSeries, std::string(id) + " measure route vs closed form");
        if (d_row)
            shifted = std::max(shifted, max_abs_diff(fc, product_quotient(30, {key.n - 2}, {key.n - 1})));
    }
    v.detail << "D_n routes against (1+q^(n-2))/(1+q^(n-1)): max difference " << shifted;
}

void c7(Verdict& v) {
    for (const char* id : {"Aff-A(2)", "Aff-A(4)", "Aff-A(8)", "Aff-D(4)", "Aff-D(5)", "Aff-D(7)", "Aff-E(6)",
                           "Aff-E(7)", "Aff-E(8)"}) {
        Graph g = graph_by_id(id);
        v.require(same(generalized_t(g, 24), hilbert_su2(g, 24), 24), std::string(id) + " generalized T = H");
    }
    double worst = 0;
    for (const char* name : {"BT", "BO", "BI", "BD4", "Z4"}) {
        GroupSpec s = parse_group(name);
        FiniteMatrixGroup g = generate_group(s);
        Graph aff = graph_by_id(s.mckay_graph_id());
        DSeries F = kostant_trivial(class_data(g), 40);
        DSeries P = molien_series_trivial(g, 40);
        RSeries H = hilbert_su2(aff, 40).entry(aff.distinguished, aff.distinguished).cast<Rational>();
        DSeries T2 = t_series(aff.id, 40, TRoute::measure).stretch(2);
        const double d = std::max({max_abs_diff(F, P), max_abs_diff(P, H), max_abs_diff(H, T2)});
        worst = std::max(worst, d);
        v.require(d <= kTolSeries, std::string(name) + " chain");
    }
    struct Row { const char* fam; int a, b; };
    for (Row r : {Row{"E6", 6, 8}, Row{"E7", 8, 12}, Row{"E8", 12, 20}, Row{"A(4)", 2, 5}, Row{"A(7)", 2, 8},
                  Row{"D(5)", 4, 6}, Row{"D(8)", 4, 12}}) {
        KostantCheck k = kostant_closed_form_check(r.fam, 60);
        v.require(k.a == r.a && k.b == r.b, std::string(r.fam) + " (a,b)");
        for (const auto& z : k.numerators)
            for (int d = r.a + r.b - 1; d <= z.order(); ++d) v.require(z[d] == 0, std::string(r.fam) + " polynomial");
    }
    v.detail << "chain worst " << worst;
}

void c8(Verdict& v) {
    for (const char* id : {"A(2)", "A(3)", "A(4)", "A(5)", "A(6)", "D(4)", "D(5)", "D(6)", "E(6)", "E(7)", "E(8)"}) {
        Graph g = graph_by_id(id);
        const int h = *g.coxeter_h;
        IMatrixSeries H = hilbert_su2(g, 3 * h);
        v.require(same(apply_su2_denominator(g.adjacency, H), numerator(*nakayama_permutation(g), h, 3 * h, +1), 3 * h),
                  std::string(id) + " identity");
    }
    for (const char* id : {"A(2)", "A(3)", "D(4)"}) {
        Graph g = graph_by_id(id);
        BigInt total = 0;
        for (const auto& M : hilbert_su2(g, 2 * *g.coxeter_h).c)
            for (const auto& x : M.a) total += x;
        const long brute = oracle::preprojective_dimension(g, *g.coxeter_h + 1);
        v.require(total == brute, std::string(id) + " total dimension");
        v.detail << id << " " << to_string(total) << " = " << brute << "; ";
    }
}

void c9(Verdict& v) {
    double worst = 0;
    for (int n = 0; n <= 9; ++n) {
        Graph cham = truncate_infinite_graph(InfiniteKind::SU3_Ainf, 2 * n + 1);
        const BigInt paths = moment_path_count(cham, n, n);
        const std::string at = " n=" + std::to_string(n);
        v.require(paths == moment_formula_su3_Ainf(n, n), "multinomial" + at);
        v.require(paths == path_count_square_sum(n), "square sum" + at);
        v.require(paths == hecke_square_sum(n, HeckeMethod::determinantal), "determinantal Hecke" + at);
        v.require(paths == hecke_square_sum(n, HeckeMethod::multinomial), "multinomial Hecke" + at);
        const double grid = moment_t2(canonical_measure("SU3-A(" + std::to_string(n + 4) + ")"), n, n).real();
        const double d = rel(grid, paths.convert_to<double>());
        worst = std::max(worst, d);
        v.require(d <= kTolMoment, "grid moment" + at);
    }
    v.detail << "exact chain for n <= 9, grid route worst " << worst;
}

void c10(Verdict& v) {
    double worst = 0;
    for (int l = 4; l <= 9; ++l) {
        std::string id = "SU3-A(" + std::to_string(l) + ")";
        DiscreteMeasure mu = canonical_measure(id);
        EigenData e = eigendata(id);
        Graph g = graph_by_id(id);
        for (int m = 0; m <= 8; ++m)
            for (int n = 0; m + n <= 8; ++n) {
                const double p = moment_path_count(g, m, n).convert_to<double>();
                const double d = std::max(std::abs(moment_t2(mu, m, n) - cplx(p)),
                                          std::abs(eigen_moment(e, m, n) - cplx(p))) / std::max(1.0, p);
                worst = std::max(worst, d);
                v.require(d <= kTolMoment, id);
            }
    }
    for (int k : {2, 3}) {
        std::string id = "SU3-D(" + std::to_string(3 * k) + ")";
        DiscreteMeasure mu = canonical_measure(id);
        EigenData e = eigendata(id);
        for (int m = 0; m <= 8; ++m)
            for (int n = 0; m + n <= 8; ++n) {
                const cplx want = eigen_moment(e, m, n);
                const double d = std::abs(moment_t2(mu, m, n) - want) / std::max(1.0, std::abs(want));
                worst = std::max(worst, d);
                v.require(d <= kTolMoment, id);
            }
    }
    for (int l = 4; l <= 16; l += 2) {
        std::string id = "SU3-Astar(" + std::to_string(l) + ")";
        DiscreteMeasure mu = canonical_measure(id);
        Graph g = graph_by_id(id);
        Graph a = graph_by_id("A(" + std::to_string(l / 2 - 1) + ")");
        for (int m = 0; m <= 10; ++m) {
            BigInt s = 0;
            for (int j = 0; j <= m; ++j) s += binomial(m, j) * moment_path_count(a, j, 0);
            v.require(moment_path_count(g, m, 0) == s, id + " path shift");
            v.require(rel(moment_t(mu, m, 1.0), s.convert_to<double>()) <= kTolMoment, id + " measure shift");
        }
    }
    v.detail << "worst moment deviation " << worst;
}

void c11(Verdict& v) {
    for (int l = 4; l <= 7; ++l) {
        Graph g = graph_by_id("SU3-A(" + std::to_string(l) + ")");
        Mat<int> P = su3_numerator_permutation(g);
        IMatrixSeries H = hilbert_su3(g, P, l, 3 * l);
        v.require(same(apply_su3_denominator(g.adjacency, H), numerator(P, l, 3 * l, -1), 3 * l),
                  "A(" + std::to_string(l) + ") identity");
        if (l == 4) {
            IMatrixSeries want;
            for (int k = 0; k <= 3 * l; ++k) want.c.push_back(Mat<BigInt>(g.size(), g.size()));
            want.c[0] = Mat<BigInt>::identity(g.size());
            want.c[1] = g.adjacency.cast<BigInt>();
            v.require(same(H, want, 3 * l), "A(4): H = I + C t");
        }
    }
    int triples = 0;
    for (int m = 2; m <= 7; ++m)
        for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b)
                for (int c = b; c < m; ++c) {
                    if ((a + b + c) % m) continue;
                    ++triples;
                    IMatrixSeries H = cy3_hilbert(abelian_mckay(m, a, b, c), 18);
                    for (int r = 0; r < m; ++r) {
                        RSeries exact = abelian_invariant_count(m, a, b, c, r, 18);
                        v.require(max_abs_diff(H.entry(r, 0).cast<Rational>(), exact) == 0, "CY3 Hilbert");
                        v.require(max_abs_diff(abelian_molien(m, a, b, c, r, 18), exact) <= kTolSeries, "CY3 Molien");
                    }
                }
    v.detail << triples << " abelian subgroups with m <= 7";
}

void c12(Verdict& v) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> U(0, 1);
    double wj = 0, wi = 0, wb = 0;
    for (int i = 0; i < 1000; ++i) {
        TorusPoint p(U(rng), U(rng));
        const double a = std::pow(jacobian(p, JacobianForm::theta), 2);
        for (auto f : {JacobianForm::omega, JacobianForm::abs_z, JacobianForm::sine_product})
            wj = std::max(wj, rel(std::pow(jacobian(p, f), 2), a));
        const cplx z = phi(p);
        for (const auto& q : invert_phi(z)) wi = std::max(wi, std::abs(phi(q) - z));
    }
    for (int l = 1; l <= 20; ++l) v.require(int(generate_Dl(l).size()) == 3 * l * l, "|D_l|");
    for (int i = 0; i <= 1000; ++i) wb = std::max(wb, jacobian_abs_rt(1.0, i / 1000.0));
    v.require(wj <= kTolDeltoid, "Jacobian forms");
    v.require(wi <= kTolDeltoid, "inversion");
    v.require(wb <= kTolDeltoid, "boundary");
    v.detail << "forms " << wj << ", inversion " << wi << ", boundary " << wb;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
        {"path dimensions: binomial and Catalan", c1},
        {"SU(2) measures against paths", c2},
        {"finite subgroups: orders, classes, moments", c3},
        {"E7/E8 alpha_p and |psi|^2 identities", c4},
        {"cyclotomic solver", c5},
        {"T-series closed forms", c6},
        {"generalized T, Molien/Kostant chain", c7},
        {"pre-projective Hilbert series", c8},
        {"SU(3) dimension chain", c9},
        {"SU(3) measures", c10},
        {"SU(3) and CY3 Hilbert series", c11},
        {"deltoid geometry", c12}};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            criteria[i].second(v);
        } catch (const std::exception& e) {
            v.require(false, std::string("exception: ") + e.what());
        }
        failed += !v.pass;
        std::cout << "CRITERION " << i + 1 << ' ' << (v.pass ? "PASS" : "FAIL") << ": " << criteria[i].first << " | "
                  << v.detail.str() << '\n';
    }
    return failed == 0 ? 0 : 1;
}
