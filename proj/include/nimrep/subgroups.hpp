// SPDX-License-Identifier: MIT
// Finite subgroups of SU(2) from explicit generators: enumeration,
// conjugacy classes checked against the classical character tables, and
// the series built from the fundamental character.
#pragma once

#include "nimrep/numeric.hpp"
#include "nimrep/series.hpp"

#include <json.hpp>

#include <array>
#include <string>
#include <vector>

namespace nimrep {

using Mat2 = std::array<cplx, 4>;  // row-major 2x2

struct GroupSpec {
    enum class Kind { Z2n, BD, BT, BO, BI } kind;
    int n = 0;  // Z2n: half the order; BD: the D_n index
    std::string name() const;
    int expected_order() const;
    // Id of the affine diagram that is its McKay graph.
    std::string mckay_graph_id() const;
};
// "Z4", "Z2n(3)", "BD(5)", "BD5", "BT", "BO", "BI".
GroupSpec parse_group(const std::string& s);

struct FiniteMatrixGroup {
    GroupSpec spec;
    std::vector<Mat2> generators;
    std::vector<Mat2> elements;  // breadth-first order, identity first
    int order() const { return int(elements.size()); }
};

FiniteMatrixGroup generate_group(const GroupSpec& spec);

// Hard-coded character-table row: the class of the element given by a
// word in the generators.
struct ClassRow {
    std::string label;
    std::vector<int> word;  // generator indices, multiplied left to right
    int size = 0;
    double chi_rho = 0;
    Frac theta;
};
std::vector<ClassRow> character_table(const GroupSpec& spec);

struct ClassInfo {
    std::string label;
    int size = 0;
    double chi_rho = 0;  // trace of an enumerated representative
    Frac theta;
};
struct ClassData {
    std::string group;
    int order = 0;
    std::vector<ClassInfo> classes;  // table order
};

// Conjugacy classes by orbit partition, matched against the table;
// IdentityFailure names the first class that disagrees.
ClassData class_data(const FiniteMatrixGroup& g);

double subgroup_moment(const ClassData& cd, int m);
DSeries moment_generating_series(const ClassData& cd, int order);
// (1/|G|) sum_g 1 / det(1 - conj(g) t).
DSeries molien_series_trivial(const FiniteMatrixGroup& g, int order);
// sum_j |G_j|/|G| / (1 - t chi_rho(G_j) + t^2).
DSeries kostant_trivial(const ClassData& cd, int order);

nlohmann::json to_json(const ClassData& cd);

}  // namespace nimrep
