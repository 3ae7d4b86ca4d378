// SPDX-License-Identifier: MIT
// Graph catalogue: SU(2) Dynkin/affine/tadpole graphs, SU(3) triangle
// graphs, finite truncations of the infinite graphs, and closed-form
// eigendata (exponents, eigenvalues, squared first-entry weights).
#pragma once

#include "nimrep/numeric.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nimrep {

struct Graph {
    std::string id;
    std::vector<std::string> vertices;
    Mat<int> adjacency;  // adjacency(a, b) = number of edges a -> b
    bool symmetric = true;
    int distinguished = 0;
    std::optional<int> coxeter_h;
    // Lattice labels (lambda1, lambda2) for SU(3) graphs, empty otherwise.
    std::vector<std::pair<int, int>> lattice;
    // Set on finite truncations of infinite graphs: moments of total length
    // above this are refused.
    std::optional<int> depth;

    int size() const { return int(vertices.size()); }
    int degree(int v) const;
};

enum class Su2Family { A, D, E, Tadpole };
enum class AffineFamily { A1, D1, E1 };
enum class InfiniteKind { Ainf, AinfInf, Dinf, SU3_Ainf, SU3_A6inf };
enum class Su3Family { A, Astar };

Graph build_su2_graph(Su2Family family, int n);
// A1 takes the vertex count of the cycle (even, >= 2); D1 and E1 take the
// usual index, so D1(n) has n+1 vertices and E1(n) has n+1 vertices.
Graph build_su2_affine_graph(AffineFamily family, int n);
// Cycle on k >= 2 vertices (k = 2 gives the doubled edge): McKay graph of Z_k.
Graph cyclic_mckay_graph(int k);
Graph truncate_infinite_graph(InfiniteKind kind, int depth);
Graph build_su3_graph(Su3Family family, int l);

// Parses ids such as "A(5)", "Dyn-E7", "E(6)", "Aff-D6", "Aff-A(4)",
// "Tad(3)", "SU3-A(6)", "SU3-Astar(8)", "Trunc-Ainfinf(6)".
Graph graph_by_id(const std::string& id);

struct GraphKey {
    enum class Kind {
        A, D, E, Tad,
        AffA, AffD, AffE,
        SU3_A, SU3_Astar, SU3_D, SU3_E8, SU3_E1_12,
        Trunc
    } kind;
    int n = 0;
    InfiniteKind trunc = InfiniteKind::Ainf;
    std::string canonical() const;
};
GraphKey parse_graph_id(const std::string& id);

struct EigenEntry {
    std::vector<int> exponent;  // j for SU(2), (lambda1, lambda2) for SU(3)
    cplx eigenvalue;
    double weight = 0;          // |psi^exponent_*|^2
    int multiplicity = 1;
    std::vector<Frac> theta;    // angle(s) with eigenvalue = Phi(theta) or 2cos(2 pi theta)
    std::string label() const;
};

struct EigenData {
    std::string graph_id;
    int dimension = 1;  // 1: eigenvalues u + 1/u on the circle; 2: Phi on the torus
    std::vector<EigenEntry> entries;

    double total_weight() const;
};

EigenData eigendata(const std::string& graph_id);

// Coxeter exponents of the Dynkin/tadpole families.
std::vector<int> coxeter_exponents(Su2Family family, int n);
int coxeter_number(Su2Family family, int n);

// Numerical spectrum via Eigen (complex for directed graphs), and the
// Perron-Frobenius vector normalised to unit length.
std::vector<cplx> numeric_spectrum(const Graph& g);
double spectral_radius(const Graph& g);
std::vector<double> perron_frobenius_vector(const Graph& g);

// Z/3 rotation of the SU(3) triangle graph A^(l):
// (mu1, mu2) -> (l - 3 - mu1 - mu2, mu1), as a permutation matrix P with
// P(v, rot(v)) = 1.
Mat<int> su3_rotation(const Graph& g);

nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const EigenData& e);
EigenData eigendata_from_json(const nlohmann::json& j);

}  // namespace nimrep
