// SPDX-License-Identifier: MIT
// Discrete measures on the circle and the torus with atoms at rational
// angles, their moments, the closed-form spectral measures of the catalogue
// graphs, and a solver that decides whether a target measure is a linear
// combination of given basis measures.
#pragma once

#include "nimrep/deltoid.hpp"
#include "nimrep/graph.hpp"
#include "nimrep/numeric.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nimrep {

// Angle key; for one-dimensional measures the second component is 0.
using AngleKey = std::pair<Frac, Frac>;

struct Atom {
    AngleKey theta;
    double weight = 0;
};

struct DiscreteMeasure {
    int dimension = 1;
    std::vector<Atom> atoms;  // sorted by angle, no repeats
    std::string provenance;

    double mass() const;
    double min_weight() const;
    double weight_at(const AngleKey& k) const;  // 0 when absent
};

// Primitives. Index arguments follow the usual d_n convention: d(n) is
// uniform on the 2n-th roots, so n may be a half-integer.
DiscreteMeasure uniform_roots(int N);
DiscreteMeasure measure_d(double n);
DiscreteMeasure measure_d_prime(double n);         // 2 d_{2n} - d_n
DiscreteMeasure measure_d_double_prime(double n);  // (3 d'_{3n} - d'_n) / 2
DiscreteMeasure dirac(Frac theta);
DiscreteMeasure dirac(Frac t1, Frac t2);
DiscreteMeasure product(const DiscreteMeasure& a, const DiscreteMeasure& b);
DiscreteMeasure uniform_Dl(int l);

DiscreteMeasure add(const DiscreteMeasure& a, const DiscreteMeasure& b, double sb = 1.0);
DiscreteMeasure scale(const DiscreteMeasure& a, double s);
DiscreteMeasure with_density(const DiscreteMeasure& a, const std::function<double(const AngleKey&)>& f);

// Densities on the circle / torus.
double density_alpha(Frac theta, int j = 1);    // 2 Im(u^j)^2
double density_J2(const AngleKey& theta);        // J^2 / (24 pi^4)

// Composition language: sums, differences, scalar products and quotients of
//   d(n)  dp(n)  dpp(n)  u(N)  dl(l)  delta(p/q[, r/s])  prod(m1, m2)
// multiplied by densities built from  alpha  alpha(j)  J2  and constants.
// Example: "alpha*d(12) + (d(12) - d(6) - d(4) + d(3))/2".
DiscreteMeasure make_measure(const std::string& expr);

// Closed-form spectral measure of a catalogue graph, or DataUnavailable
// when none exists (the exceptional SU(3) graphs).
std::string canonical_measure_expression(const std::string& graph_id);
DiscreteMeasure canonical_measure(const std::string& graph_id);

// Sum w (u + 1/u + shift)^m over a circle measure.
double moment_t(const DiscreteMeasure& mu, int m, double shift = 0.0);
// Sum w u^k (complex in general).
cplx circle_moment(const DiscreteMeasure& mu, int k);
// Sum w Phi^m conj(Phi)^n over a torus measure.
cplx moment_t2(const DiscreteMeasure& mu, int m, int n);

// Sum mult * weight * beta^m conj(beta)^n.
cplx eigen_moment(const EigenData& e, int m, int n);
// Same moment summed over the S3 orbit of every exponent with weight/6 on
// each image; needs torus angles on every entry.
cplx eigen_moment_orbit(const EigenData& e, int m, int n);
// The measure the eigendata defines: on the circle, weight/2 at +-theta;
// on the torus, weight/6 at each S3 image of theta.
DiscreteMeasure eigendata_measure(const EigenData& e);

struct FitResult {
    bool feasible = false;
    std::vector<double> coefficients;   // least-squares solution
    double residual = 0;                // max |target - basis * c| over the grid
    // Infeasibility certificate: an independent subsystem solved exactly
    // and the equation it then violates most.
    std::vector<AngleKey> subsystem;
    std::vector<double> subsystem_solution;
    std::optional<AngleKey> violated;
    double certificate_residual = 0;
};
// Grid = union of all atoms unless `grid` is given (its order is kept and
// decides which rows form the certificate subsystem).
FitResult cyclotomic_fit(const DiscreteMeasure& target, const std::vector<DiscreteMeasure>& basis,
                         const std::vector<AngleKey>& grid = {}, double tol = 1e-9);

// The three-point system showing that the SU3-E(8) / SU3-E1(12) measure is
// not a combination of c1 e + c2 J^2 e with e uniform on a root grid:
// target weights are the eigendata weights whose S3 orbit meets each point,
// the basis is e (rescaled to unit atoms) and (J^2 / 16 pi^4) e.
struct ThreePointSystem {
    std::string graph_id;
    std::vector<AngleKey> points;
    std::vector<double> target;
    std::vector<double> j2;  // J^2 / 16 pi^4 at each point
    FitResult fit;
};
ThreePointSystem exceptional_three_point_system(const std::string& graph_id);

nlohmann::json to_json(const DiscreteMeasure& mu);
DiscreteMeasure measure_from_json(const nlohmann::json& j);
std::string density_bars_csv(const DiscreteMeasure& mu);

}  // namespace nimrep
