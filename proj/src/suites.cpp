// SPDX-License-Identifier: MIT
#include "nimrep/suites.hpp"

#include "nimrep/deltoid.hpp"
#include "nimrep/graph.hpp"
#include "nimrep/measures.hpp"
#include "nimrep/paths.hpp"
#include "nimrep/series.hpp"
#include "nimrep/subgroups.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

namespace nimrep {

std::string to_string(CaseStatus s) {
    switch (s) {
    case CaseStatus::pass: return "pass";
    case CaseStatus::fail: return "fail";
    case CaseStatus::skipped: return "skipped";
    }
    return "?";
}

namespace {

struct Outcome {
    double measured = 0;
    double expected = 0;
    double tol = 0;
    std::string note;
    std::optional<bool> pass;  // default: |measured - expected| <= tol
    bool skipped = false;
};

struct CaseDef {
    std::string id;
    std::function<Outcome()> fn;
};

using Cases = std::vector<CaseDef>;

Outcome deviation(double worst, double tol, std::string note = {}) {
    Outcome o;
    o.measured = worst;
    o.tol = tol;
    o.note = std::move(note);
    return o;
}

double rel(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

const char* kSu2Canonical[] = {"A(2)", "A(5)", "A(8)", "D(4)", "D(5)", "D(6)", "D(7)", "E(6)", "E(7)", "E(8)",
                               "Aff-A(2)", "Aff-A(4)", "Aff-A(8)", "Aff-D(4)", "Aff-D(5)", "Aff-D(7)", "Aff-E(6)",
                               "Aff-E(7)", "Aff-E(8)"};
const char* kClosedForm[] = {"A(6)", "D(6)", "E(6)", "E(7)", "E(8)", "Aff-A(6)", "Aff-D(6)", "Aff-E(6)",
                             "Aff-E(7)", "Aff-E(8)"};
const char* kGroups[] = {"Z4", "Z6", "BD4", "BD5", "BT", "BO", "BI"};

double psi2(const EigenData& e, int h, int p) {
    if (p > h) p = 2 * h - p;
    for (const auto& x : e.entries)
        if (x.exponent[0] == p) return x.weight;
    return 0;
}

double alpha_j(int j, double phase) { return 2 * std::pow(std::sin(j * phase), 2); }

// ---------------------------------------------------------------------------

Cases su2_measures(const SuiteOptions& opt) {
    Cases cs;
    const int M = std::max(12, opt.depth);
    for (const char* id : kSu2Canonical)
        cs.push_back({std::string("moments:") + id, [id, M, opt] {
                          DiscreteMeasure mu = canonical_measure(id);
                          Graph g = graph_by_id(id);
                          double worst = std::abs(mu.mass() - 1);
                          for (int m = 0; m <= M; ++m)
                              worst = std::max(worst, rel(moment_t(mu, m), moment_path_count(g, m, 0).convert_to<double>()));
                          return deviation(worst, opt.tol, canonical_measure_expression(id));
                      }});
    for (const char* id : {"A(7)", "D(8)", "E(6)", "E(7)", "E(8)", "Tad(4)"})
        cs.push_back({std::string("eigendata:") + id, [id, M, opt] {
                          EigenData e = eigendata(id);
                          Graph g = graph_by_id(id);
                          double worst = 0;
                          for (int m = 0; m <= M; ++m)
                              worst = std::max(worst, rel(eigen_moment(e, m, 0).real(),
                                                          moment_path_count(g, m, 0).convert_to<double>()));
                          return deviation(worst, opt.tol);
                      }});
    cs.push_back({"catalan:Trunc-Ainf", [opt] {
                      const int K = std::max(12, opt.depth);
                      Graph g = truncate_infinite_graph(InfiniteKind::Ainf, 2 * K);
                      int bad = 0;
                      for (int k = 0; k <= K; ++k) {
                          bad += moment_path_count(g, 2 * k, 0) != catalan(k);
                          if (k < K) bad += moment_path_count(g, 2 * k + 1, 0) != 0;
                      }
                      return deviation(bad, 0, "mismatched moments up to length 2K");
                  }});
    cs.push_back({"binomial:Trunc-Ainfinf", [opt] {
                      const int K = std::max(12, opt.depth);
                      Graph g = truncate_infinite_graph(InfiniteKind::AinfInf, 2 * K);
                      int bad = 0;
                      for (int k = 0; k <= K; ++k) {
                          bad += moment_path_count(g, 2 * k, 0) != binomial(2 * k, k);
                          if (k < K) bad += moment_path_count(g, 2 * k + 1, 0) != 0;
                      }
                      return deviation(bad, 0, "mismatched moments up to length 2K");
                  }});
    cs.push_back({"d-prime-atoms", [] {
                      double worst = 0;
                      for (int n = 1; n <= 6; ++n) {
                          DiscreteMeasure dp = measure_d_prime(n), dpp = measure_d_double_prime(n);
                          for (int k = 0; k < 12 * n; ++k) {
                              const double w1 = k % 3 == 0 && (k / 3) % 2 ? 1.0 / (2 * n) : 0.0;
                              worst = std::max(worst, std::abs(dp.weight_at({Frac(k, 12 * n).mod1(), Frac(0)}) - w1));
                              const double w2 = std::gcd(k, 6) == 1 ? 1.0 / (4 * n) : 0.0;
                              worst = std::max(worst, std::abs(dpp.weight_at({Frac(k, 12 * n).mod1(), Frac(0)}) - w2));
                          }
                      }
                      return deviation(worst, 1e-14, "d'_n on odd 4n-th roots, d''_n on 12n-th roots of order 6k+-1");
                  }});
    cs.push_back({"E7-alpha_p", [] {
                      EigenData e = eigendata("E(7)");
                      const std::map<int, double> want = {{1, 0.4076}, {5, 2.7057}, {7, -0.1133}, {9, 4.0},
                                                          {11, -0.1133}, {13, 2.7057}, {17, 0.4076}, {19, 0.4076},
                                                          {23, 2.7057}, {25, -0.1133}, {27, 4.0}, {29, -0.1133},
                                                          {31, 2.7057}, {35, 0.4076}};
                      double worst = 0;
                      for (auto [p, v] : want)
                          worst = std::max(worst, std::abs(18 * psi2(e, 18, p) - alpha_j(1, p * kPi / 18) - v));
                      return deviation(worst, 5e-4, "published values have four decimals");
                  }});
    cs.push_back({"E8-alpha_p", [] {
                      EigenData e = eigendata("E(8)");
                      const std::map<int, double> want = {{1, 0.4038}, {7, 3.5135}, {11, 2.0511}, {13, 4.5316},
                                                          {17, 4.5316}, {19, 2.0511}, {23, 3.5135}, {29, 0.4038},
                                                          {31, 0.4038}, {37, 3.5135}, {41, 2.0511}, {43, 4.5316},
                                                          {47, 4.5316}, {49, 2.0511}, {53, 3.5135}, {59, 0.4038}};
                      double worst = 0;
                      for (auto [p, v] : want)
                          worst = std::max(worst, std::abs(30 * psi2(e, 30, p) - alpha_j(1, p * kPi / 30) - v));
                      return deviation(worst, 5e-4, "published values have four decimals");
                  }});
    cs.push_back({"E7-psi-identity", [] {
                      EigenData e = eigendata("E(7)");
                      double worst = 0;
                      for (int p : {1, 5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 35})
                          worst = std::max(worst, std::abs(9 * psi2(e, 18, p) - alpha_j(2, p * kPi / 18)));
                      return deviation(worst, 1e-12, "9|psi^p|^2 = alpha_2(u^p), p coprime to 6");
                  }});
    cs.push_back({"E8-psi-identity", [] {
                      EigenData e = eigendata("E(8)");
                      double worst = 0;
                      for (int p : {1, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 49, 53, 59})
                          worst = std::max(worst, std::abs(15 * psi2(e, 30, p) - alpha_j(1, p * kPi / 30) -
                                                           alpha_j(3, p * kPi / 30)));
                      return deviation(worst, 1e-12, "15|psi^p|^2 = (alpha_1 + alpha_3)(u^p); see README for factor 30");
                  }});
    cs.push_back({"E6-decomposition", [] {
                      FitResult r = cyclotomic_fit(eigendata_measure(eigendata("E(6)")),
                                                   {make_measure("alpha*d(12)"), measure_d(12), measure_d(6),
                                                    measure_d(4), measure_d(3)});
                      const double want[] = {1, 0.5, -0.5, -0.5, 0.5};
                      double worst = r.feasible ? 0 : 1;
                      for (std::size_t i = 0; i < 5; ++i) worst = std::max(worst, std::abs(r.coefficients[i] - want[i]));
                      return deviation(worst, 1e-12, "alpha d12 + (d12 - d6 - d4 + d3)/2");
                  }});
    for (auto [id, N] : {std::pair<const char*, int>{"E(7)", 36}, {"E(8)", 60}})
        cs.push_back({std::string(id) + "-not-cyclotomic", [id = std::string(id), N = N] {
                          std::vector<DiscreteMeasure> basis;
                          for (int n = 1; n <= N; ++n)
                              if (N % n == 0) {
                                  basis.push_back(measure_d(n));
                                  basis.push_back(with_density(measure_d(n), [](const AngleKey& a) {
                                      return density_alpha(a.first);
                                  }));
                              }
                          FitResult r = cyclotomic_fit(eigendata_measure(eigendata(id)), basis);
                          Outcome o;
                          o.measured = r.residual;
                          o.expected = 1e-2;
                          o.note = "least-squares residual over {d_n, alpha d_n : n | " + std::to_string(N) + "}";
                          o.pass = !r.feasible && r.residual > 1e-2;
                          return o;
                      }});
    return cs;
}

Cases su2_subgroups(const SuiteOptions& opt) {
    Cases cs;
    for (const char* name : kGroups) {
        cs.push_back({std::string("order:") + name, [name] {
                          GroupSpec s = parse_group(name);
                          Outcome o;
                          o.measured = generate_group(s).order();
                          o.expected = s.expected_order();
                          return o;
                      }});
        cs.push_back({std::string("classes:") + name, [name] {
                          FiniteMatrixGroup g = generate_group(parse_group(name));
                          ClassData cd = class_data(g);
                          int total = 0;
                          for (const auto& c : cd.classes) total += c.size;
                          Outcome o;
                          o.measured = total;
                          o.expected = g.order();
                          o.note = std::to_string(cd.classes.size()) + " classes matched to the table";
                          return o;
                      }});
        cs.push_back({std::string("moments:") + name, [name, opt] {
                          GroupSpec s = parse_group(name);
                          ClassData cd = class_data(generate_group(s));
                          Graph aff = graph_by_id(s.mckay_graph_id());
                          double worst = 0;
                          for (int m = 0; m <= std::max(12, opt.depth); ++m)
                              worst = std::max(worst, rel(subgroup_moment(cd, m),
                                                          moment_path_count(aff, m, 0).convert_to<double>()));
                          return deviation(worst, opt.tol, "against paths on " + s.mckay_graph_id());
                      }});
        cs.push_back({std::string("molien:") + name, [name, opt] {
                          GroupSpec s = parse_group(name);
                          FiniteMatrixGroup g = generate_group(s);
                          Graph aff = graph_by_id(s.mckay_graph_id());
                          RSeries h = hilbert_su2(aff, opt.order).entry(aff.distinguished, aff.distinguished).cast<Rational>();
                          double worst = std::max(max_abs_diff(molien_series_trivial(g, opt.order), h),
                                                  max_abs_diff(kostant_trivial(class_data(g), opt.order), h));
                          return deviation(worst, opt.tol, "Molien and Kostant sums against H_{*,*}");
                      }});
    }
    return cs;
}

Cases series_theorems(const SuiteOptions& opt) {
    Cases cs;
    const int order = opt.order;
    for (const char* id : kClosedForm)
        cs.push_back({std::string("T:") + id, [id, order, opt] {
                          DSeries cf = to_double(closed_form_t_series(id, order));
                          double worst = std::max(max_abs_diff(t_series(id, order, TRoute::f_compose), cf),
                                                  max_abs_diff(t_series(id, order, TRoute::measure), cf));
                          std::string note = "measure and path routes against the closed form";
                          if (std::string(id).rfind("D(", 0) == 0) note += " (1+q^(n-2))/(1+q^(n-1))";
                          return deviation(worst, opt.tol, note);
                      }});
    for (const char* id : {"A(5)", "D(6)", "E(6)", "E(7)", "E(8)", "Aff-D(5)", "Aff-E(6)", "Aff-E(8)"})
        cs.push_back({std::string("Theta:") + id, [id, order, opt] {
                          return deviation(max_abs_diff(theta_series_measure(id, order),
                                                        theta_series_paths(graph_by_id(id), order)),
                                           opt.tol);
                      }});
    for (const char* id : {"Aff-A(4)", "Aff-D(5)", "Aff-E(6)", "Aff-E(7)", "Aff-E(8)"})
        cs.push_back({std::string("generalized-T:") + id, [id] {
                          Graph g = graph_by_id(id);
                          IMatrixSeries T = generalized_t(g, 24), H = hilbert_su2(g, 24);
                          int bad = 0;
                          for (int k = 0; k <= 24; ++k) bad += !(T.c[std::size_t(k)] == H.c[std::size_t(k)]);
                          return deviation(bad, 0, "coefficient matrices differing up to t^24");
                      }});
    for (const char* name : {"BT", "BO", "BI", "BD4", "Z4"})
        cs.push_back({std::string("chain:") + name, [name, order, opt] {
                          GroupSpec s = parse_group(name);
                          FiniteMatrixGroup g = generate_group(s);
                          ClassData cd = class_data(g);
                          Graph aff = graph_by_id(s.mckay_graph_id());
                          DSeries F = kostant_trivial(cd, order);
                          DSeries P = molien_series_trivial(g, order);
                          RSeries H = hilbert_su2(aff, order).entry(aff.distinguished, aff.distinguished).cast<Rational>();
                          DSeries T2 = t_series(aff.id, order, TRoute::measure).stretch(2);
                          double worst = std::max({max_abs_diff(F, P), max_abs_diff(P, H), max_abs_diff(H, T2)});
                          return deviation(worst, opt.tol, "F_id = P_S,id = H_id,id = T(t^2)");
                      }});
    struct KRow { const char* fam; int a, b; };
    for (KRow r : {KRow{"E6", 6, 8}, KRow{"E7", 8, 12}, KRow{"E8", 12, 20}, KRow{"A(6)", 2, 7}, KRow{"D(6)", 4, 8}})
        cs.push_back({std::string("kostant:") + r.fam, [r] {
                          KostantCheck k = kostant_closed_form_check(r.fam, 60);
                          int bad = (k.a != r.a) + (k.b != r.b);
                          for (const auto& z : k.numerators)
                              for (int d = r.a + r.b - 1; d <= z.order(); ++d) bad += z[d] != 0;
                          return deviation(bad, 0, "(a,b) = (" + std::to_string(k.a) + "," + std::to_string(k.b) +
                                                       ") on " + k.affine_graph + ", nonzero tail coefficients");
                      }});
    return cs;
}

Cases su3_dimensions(const SuiteOptions& opt) {
    Cases cs;
    const int N = std::min(std::max(9, opt.depth), 12);
    for (int n = 0; n <= N; ++n)
        cs.push_back({"chain:n=" + std::to_string(n), [n, opt] {
                          Graph cham = truncate_infinite_graph(InfiniteKind::SU3_Ainf, 2 * n + 1);
                          const BigInt paths = moment_path_count(cham, n, n);
                          int bad = 0;
                          bad += paths != moment_formula_su3_Ainf(n, n);
                          bad += paths != path_count_square_sum(n);
                          bad += paths != hecke_square_sum(n, HeckeMethod::determinantal);
                          bad += paths != hecke_square_sum(n, HeckeMethod::multinomial);
                          const int l = n + 4;
                          double grid = moment_t2(canonical_measure("SU3-A(" + std::to_string(l) + ")"), n, n).real();
                          Outcome o;
                          o.measured = rel(grid, paths.convert_to<double>());
                          o.tol = opt.tol;
                          o.note = "value " + to_string(paths) + ", exact mismatches " + std::to_string(bad);
                          o.pass = bad == 0 && o.measured <= opt.tol;
                          return o;
                      }});
    cs.push_back({"hexagonal-formula", [opt] {
                      const int D = std::max(8, opt.depth);
                      Graph hex = truncate_infinite_graph(InfiniteKind::SU3_A6inf, D);
                      int bad = 0;
                      for (int m = 0; m <= D; ++m)
                          for (int n = 0; m + n <= D; ++n) bad += moment_path_count(hex, m, n) != moment_formula_su3_A6inf(m, n);
                      return deviation(bad, 0, "double multinomial sum against truncated paths");
                  }});
    cs.push_back({"chamber-formula", [opt] {
                      const int D = std::max(8, opt.depth);
                      Graph c = truncate_infinite_graph(InfiniteKind::SU3_Ainf, D);
                      int bad = 0;
                      for (int m = 0; m <= D; ++m)
                          for (int n = 0; m + n <= D; ++n) bad += moment_path_count(c, m, n) != moment_formula_su3_Ainf(m, n);
                      return deviation(bad, 0, "Jacobian-weighted sum against truncated paths");
                  }});
    return cs;
}

Cases su3_measures(const SuiteOptions& opt) {
    Cases cs;
    for (int l = 4; l <= 9; ++l)
        cs.push_back({"A(" + std::to_string(l) + ")", [l, opt] {
                          std::string id = "SU3-A(" + std::to_string(l) + ")";
                          DiscreteMeasure mu = canonical_measure(id);
                          EigenData e = eigendata(id);
                          Graph g = graph_by_id(id);
                          double worst = 0;
                          for (int m = 0; m <= 8; ++m)
                              for (int n = 0; m + n <= 8; ++n) {
                                  const double p = moment_path_count(g, m, n).convert_to<double>();
                                  worst = std::max({worst, std::abs(moment_t2(mu, m, n) - cplx(p)) / std::max(1.0, p),
                                                    std::abs(eigen_moment(e, m, n) - cplx(p)) / std::max(1.0, p)});
                              }
                          return deviation(worst, opt.tol, canonical_measure_expression(id));
                      }});
    for (int l : {6, 9})
        cs.push_back({"D(" + std::to_string(l) + ")", [l, opt] {
                          std::string id = "SU3-D(" + std::to_string(l) + ")";
                          DiscreteMeasure mu = canonical_measure(id);
                          EigenData e = eigendata(id);
                          double worst = 0;
                          for (int m = 0; m <= 8; ++m)
                              for (int n = 0; m + n <= 8; ++n)
                                  worst = std::max(worst, std::abs(moment_t2(mu, m, n) - eigen_moment(e, m, n)));
                          return deviation(worst, opt.tol, canonical_measure_expression(id));
                      }});
    cs.push_back({"Astar-shift", [opt] {
                      double worst = 0;
                      int bad = 0;
                      for (int l = 4; l <= 16; l += 2) {
                          DiscreteMeasure mu = canonical_measure("SU3-Astar(" + std::to_string(l) + ")");
                          Graph g = graph_by_id("SU3-Astar(" + std::to_string(l) + ")");
                          Graph a = graph_by_id("A(" + std::to_string(l / 2 - 1) + ")");
                          for (int m = 0; m <= 10; ++m) {
                              BigInt s = 0;
                              for (int k = 0; k <= m; ++k) s += binomial(m, k) * moment_path_count(a, k, 0);
                              bad += moment_path_count(g, m, 0) != s;
                              worst = std::max(worst, rel(moment_t(mu, m, 1.0), s.convert_to<double>()));
                          }
                      }
                      Outcome o = deviation(worst, opt.tol, "exact mismatches " + std::to_string(bad));
                      o.pass = bad == 0 && worst <= opt.tol;
                      return o;
                  }});
    cs.push_back({"Astar-semicircle", [] {
                      DiscreteMeasure mu = canonical_measure("SU3-Astar(120)");
                      double worst = 0;
                      for (int m = 0; m <= 6; ++m) {
                          double want = 0;
                          for (int k = 0; 2 * k <= m; ++k)
                              want += binomial(m, 2 * k).convert_to<double>() * catalan(k).convert_to<double>();
                          worst = std::max(worst, std::abs(moment_t(mu, m, 1.0) - want) / want);
                      }
                      return deviation(worst, 1e-2, "relative error at l = 120");
                  }});
    for (const char* id : {"SU3-E(8)", "SU3-E1(12)"})
        cs.push_back({std::string("orbit-sum:") + id, [id, opt] {
                          EigenData e = eigendata(id);
                          double worst = std::abs(e.total_weight() - 1);
                          for (int m = 0; m <= 6; ++m)
                              for (int n = 0; m + n <= 6; ++n)
                                  worst = std::max(worst, std::abs(eigen_moment(e, m, n) - eigen_moment_orbit(e, m, n)));
                          return deviation(worst, opt.tol);
                      }});
    return cs;
}

Cases su3_obstructions(const SuiteOptions&) {
    Cases cs;
    cs.push_back({"E(8)-infeasible", [] {
                      ThreePointSystem s = exceptional_three_point_system("SU3-E(8)");
                      Outcome o;
                      o.measured = s.fit.certificate_residual;
                      o.expected = std::abs(1.0 / 16 - 1.0 / 12);
                      o.tol = 1e-12;
                      std::ostringstream note;
                      note << "c1 = " << format_double(s.fit.subsystem_solution.at(0))
                           << ", c2 = " << format_double(s.fit.subsystem_solution.at(1));
                      o.note = note.str();
                      o.pass = !s.fit.feasible && std::abs(o.measured - o.expected) <= o.tol;
                      return o;
                  }});
    cs.push_back({"E1(12)-infeasible", [] {
                      ThreePointSystem s = exceptional_three_point_system("SU3-E1(12)");
                      Outcome o;
                      o.measured = s.fit.certificate_residual;
                      o.expected = 1e-2;
                      o.note = "residual must exceed 1e-2";
                      o.pass = !s.fit.feasible && o.measured > 1e-2;
                      return o;
                  }});
    for (const char* id : {"SU3-E(8)", "SU3-E1(12)"})
        cs.push_back({std::string("no-closed-form:") + id, [id] {
                          Outcome o;
                          o.note = "canonical_measure refuses";
                          try {
                              canonical_measure(id);
                              o.pass = false;
                          } catch (const DataUnavailable&) {
                              o.pass = true;
                          }
                          return o;
                      }});
    return cs;
}

Cases deltoid_geometry(const SuiteOptions& opt) {
    Cases cs;
    auto points = [seed = opt.seed](int count) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> U(0, 1);
        std::vector<TorusPoint> v;
        for (int i = 0; i < count; ++i) v.emplace_back(U(rng), U(rng));
        return v;
    };
    cs.push_back({"jacobian-forms", [points, opt] {
                      double worst = 0;
                      for (const auto& p : points(1000)) {
                          const double a = std::pow(jacobian(p, JacobianForm::theta), 2);
                          for (auto f : {JacobianForm::omega, JacobianForm::abs_z, JacobianForm::sine_product})
                              worst = std::max(worst, rel(std::pow(jacobian(p, f), 2), a));
                      }
                      return deviation(worst, opt.tol, "squares of the four forms on 1000 random points");
                  }});
    cs.push_back({"Dl-size", [] {
                      int bad = 0;
                      for (int l = 1; l <= 20; ++l) bad += int(generate_Dl(l).size()) != 3 * l * l;
                      return deviation(bad, 0, "|D_l| = 3 l^2 for l <= 20");
                  }});
    cs.push_back({"inversion-roundtrip", [points, opt] {
                      double worst = 0;
                      for (const auto& p : points(1000)) {
                          cplx z = phi(p);
                          for (const auto& q : invert_phi(z)) worst = std::max(worst, std::abs(phi(q) - z));
                      }
                      return deviation(worst, opt.tol, "Phi(invert_phi(z)) on 1000 interior points");
                  }});
    cs.push_back({"boundary-zero", [opt] {
                      double worst = 0;
                      for (int i = 0; i <= 1000; ++i) {
                          const double t = i / 1000.0;
                          worst = std::max({worst, jacobian_abs_rt(1.0, t),
                                            std::abs(deltoid_discriminant(deltoid_boundary_point(1.0, t)))});
                      }
                      return deviation(worst, opt.tol, "J and the discriminant on r = 1");
                  }});
    cs.push_back({"fundamental-domain", [points] {
                      int bad = 0;
                      for (const auto& p : points(500)) {
                          int inside = 0;
                          for (const auto& q : s3_orbit(p)) inside += fundamental_domain_contains(q);
                          bad += inside != 1;
                      }
                      return deviation(bad, 0, "generic orbits meeting the domain other than once");
                  }});
    return cs;
}

IMatrixSeries scalar_numerator(const Mat<int>& P, int h, int order, int sign) {
    IMatrixSeries m;
    for (int k = 0; k <= order; ++k) m.c.push_back(Mat<BigInt>(P.rows, P.rows));
    m.c[0] = Mat<BigInt>::identity(P.rows);
    if (h <= order) m.c[std::size_t(h)] = m.c[std::size_t(h)] + BigInt(sign) * P.cast<BigInt>();
    return m;
}

Cases hilbert(const SuiteOptions&) {
    Cases cs;
    for (const char* id : {"A(2)", "A(3)", "A(4)", "A(5)", "A(6)", "D(4)", "D(5)", "D(6)", "E(6)", "E(7)", "E(8)"})
        cs.push_back({std::string("preprojective:") + id, [id] {
                          Graph g = graph_by_id(id);
                          const int h = *g.coxeter_h;
                          IMatrixSeries H = hilbert_su2(g, 3 * h);
                          IMatrixSeries lhs = apply_su2_denominator(g.adjacency, H);
                          IMatrixSeries rhs = scalar_numerator(*nakayama_permutation(g), h, 3 * h, +1);
                          int bad = 0;
                          for (int k = 0; k <= 3 * h; ++k) bad += !(lhs.c[std::size_t(k)] == rhs.c[std::size_t(k)]);
                          BigInt total = 0;
                          for (const auto& M : H.c)
                              for (const auto& x : M.a) total += x;
                          Outcome o = deviation(bad, 0, "dimension " + to_string(total));
                          o.pass = bad == 0 && total == h * (h + 1) * g.size() / 6;
                          return o;
                      }});
    for (int l = 4; l <= 7; ++l)
        cs.push_back({"su3:A(" + std::to_string(l) + ")", [l] {
                          Graph g = graph_by_id("SU3-A(" + std::to_string(l) + ")");
                          Mat<int> P = su3_numerator_permutation(g);
                          IMatrixSeries H = hilbert_su3(g, P, l, 3 * l);
                          IMatrixSeries lhs = apply_su3_denominator(g.adjacency, H);
                          IMatrixSeries rhs = scalar_numerator(P, l, 3 * l, -1);
                          int bad = 0;
                          for (int k = 0; k <= 3 * l; ++k) bad += !(lhs.c[std::size_t(k)] == rhs.c[std::size_t(k)]);
                          Outcome o = deviation(bad, 0, "degree " + std::to_string(H.degree()));
                          if (l == 4) o.pass = bad == 0 && H.degree() == 1 && H.c[1] == g.adjacency.cast<BigInt>();
                          return o;
                      }});
    for (int l = 6; l <= 12; l += 2)
        cs.push_back({"su3:Astar(" + std::to_string(l) + ")", [l] {
                          Graph g = graph_by_id("SU3-Astar(" + std::to_string(l) + ")");
                          IMatrixSeries H = hilbert_su3(g, su3_numerator_permutation(g), l, 3 * l);
                          Outcome o;
                          o.measured = H.degree();
                          o.expected = l - 3;
                          o.note = "polynomial degree";
                          return o;
                      }});
    for (int m = 2; m <= 7; ++m)
        for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b)
                for (int c = b; c < m; ++c) {
                    if ((a + b + c) % m) continue;
                    Graph g0 = abelian_mckay(m, a, b, c);
                    cs.push_back({"cy3:" + g0.id, [m, a, b, c] {
                                      const int order = 18;
                                      IMatrixSeries H = cy3_hilbert(abelian_mckay(m, a, b, c), order);
                                      int bad = 0;
                                      double worst = 0;
                                      for (int r = 0; r < m; ++r) {
                                          RSeries exact = abelian_invariant_count(m, a, b, c, r, order);
                                          bad += max_abs_diff(H.entry(r, 0).cast<Rational>(), exact) != 0;
                                          worst = std::max(worst, max_abs_diff(abelian_molien(m, a, b, c, r, order), exact));
                                      }
                                      Outcome o = deviation(worst, 1e-9, "exact mismatches " + std::to_string(bad));
                                      o.pass = bad == 0 && worst <= 1e-9;
                                      return o;
                                  }});
                }
    return cs;
}

using Builder = Cases (*)(const SuiteOptions&);
const std::vector<std::pair<std::string, Builder>>& registry() {
    static const std::vector<std::pair<std::string, Builder>> r = {
        {"su2-measures", su2_measures},       {"su2-subgroups", su2_subgroups},
        {"series-theorems", series_theorems}, {"su3-dimensions", su3_dimensions},
        {"su3-measures", su3_measures},       {"su3-obstructions", su3_obstructions},
        {"deltoid-geometry", deltoid_geometry}, {"hilbert", hilbert}};
    return r;
}

CaseResult run_case(const CaseDef& c) {
    CaseResult r;
    r.id = c.id;
    auto t0 = std::chrono::steady_clock::now();
    try {
        Outcome o = c.fn();
        r.measured = o.measured;
        r.expected = o.expected;
        r.tol = o.tol;
        r.note = o.note;
        bool ok = o.pass ? *o.pass : std::abs(o.measured - o.expected) <= o.tol;
        r.status = o.skipped ? CaseStatus::skipped : ok ? CaseStatus::pass : CaseStatus::fail;
    } catch (const std::exception& e) {
        r.status = CaseStatus::fail;
        r.note = std::string("exception: ") + e.what();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, b] : registry()) v.push_back(n);
        return v;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
    Cases cases;
    for (const auto& [n, build] : registry())
        if (name == "all" || name == n) {
            Cases part = build(opt);
            for (auto& c : part) {
                if (name == "all") c.id = n + "/" + c.id;
                cases.push_back(std::move(c));
            }
        }
    if (cases.empty()) throw InvalidParameter("unknown suite '" + name + "'");

    SuiteReport rep;
    rep.suite = name;
    rep.cases.resize(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < cases.size();) rep.cases[i] = run_case(cases[i]);
    };
    const int jobs = std::max(1, std::min<int>(opt.jobs, int(cases.size())));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (const auto& c : rep.cases) {
        if (c.status == CaseStatus::pass) ++rep.passed;
        else if (c.status == CaseStatus::fail) ++rep.failed;
        else ++rep.skipped;
    }
    return rep;
}

nlohmann::json to_json(const SuiteReport& r) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : r.cases)
        cases.push_back({{"id", c.id},
                         {"status", to_string(c.status)},
                         {"measured", c.measured},
                         {"expected", c.expected},
                         {"tol", c.tol},
                         {"note", c.note},
                         {"runtime_ms", c.runtime_ms}});
    return {{"suite", r.suite},
            {"cases", cases},
            {"summary", {{"pass", r.passed}, {"fail", r.failed}, {"skipped", r.skipped}}}};
}

std::string report_csv(const SuiteReport& r) {
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    };
    std::ostringstream os;
    os << "id,status,measured,expected,tol,runtime_ms,note\n";
    for (const auto& c : r.cases)
        os << quote(c.id) << ',' << to_string(c.status) << ',' << format_double(c.measured) << ','
           << format_double(c.expected) << ',' << format_double(c.tol) << ',' << format_double(c.runtime_ms) << ','
           << quote(c.note) << '\n';
    return os.str();
}

std::string report_table(const SuiteReport& r) {
    std::size_t w = 4;
    for (const auto& c : r.cases) w = std::max(w, c.id.size());
    std::ostringstream os;
    os << std::left << std::setw(int(w)) << "case" << "  status   measured      expected      tol        ms\n";
    for (const auto& c : r.cases) {
        os << std::left << std::setw(int(w)) << c.id << "  " << std::setw(7) << to_string(c.status) << "  "
           << std::setw(12) << std::setprecision(4) << c.measured << "  " << std::setw(12) << c.expected << "  "
           << std::setw(9) << c.tol << "  " << std::fixed << std::setprecision(1) << c.runtime_ms
           << std::defaultfloat;
        if (!c.note.empty()) os << "  " << c.note;
        os << '\n';
    }
    os << r.suite << ": " << r.passed << " passed, " << r.failed << " failed, " << r.skipped << " skipped\n";
    return os.str();
}

}  // namespace nimrep
