// SPDX-License-Identifier: MIT
// Exact big-integer path counting and closed-form combinatorial moments.
#pragma once

#include "nimrep/graph.hpp"
#include "nimrep/numeric.hpp"

#include <map>
#include <string>
#include <utility>

namespace nimrep {

// [D^m (D^T)^n]_{*,*}. Refuses m + n above the depth of a truncation.
BigInt moment_path_count(const Graph& g, int m, int n);

// Number of paths of length n from the distinguished vertex to each vertex.
std::vector<BigInt> paths_from_distinguished(const Graph& g, int n);

struct MomentTable {
    std::string graph_id;
    std::map<std::pair<int, int>, BigInt> entries;
    std::string csv() const;  // columns m,n,value
};
// All (m, n) with m + n <= max_total.
MomentTable moment_table(const Graph& g, int max_total);

enum class DimensionKind { su2_torus, su2_group, su3_torus2, su3_group };
BigInt combinatorial_dimension(DimensionKind kind, int k);

// Double multinomial sum for the hexagonal lattice graph.
BigInt moment_formula_su3_A6inf(int m, int n);
// Jacobian-weighted double multinomial sum for the Weyl chamber graph.
BigInt moment_formula_su3_Ainf(int m, int n);

// Two-variable Laurent polynomial with integer coefficients.
using Laurent = std::map<std::pair<int, int>, BigInt>;
Laurent laurent_mul(const Laurent& a, const Laurent& b);
// w1 w2 + w1 w2^-2 + w1^-2 w2 - w1^-1 w2^-1 - w1^2 w2^-1 - w1^-1 w2^2
Laurent jacobian_laurent();
// Its square: keys are the index set of the sum, values the coefficients.
const Laurent& jacobian_laurent_square();

// Paths of length n from (0,0) to (l1,l2) in the Weyl chamber graph.
BigInt su3_path_count_formula(int n, int l1, int l2);

enum class HeckeMethod { determinantal, multinomial };
// Dimension of the Hecke algebra irreducible labelled by the Young diagram
// (p1, p2, n - p1 - p2). Throws InvalidParameter for non-partitions.
BigInt hecke_dimension(int n, int p1, int p2, HeckeMethod method);
// The six-term multinomial expression itself, defined for any integers.
BigInt hecke_multinomial_expression(int n, int p1, int p2);

// Sum of squared Hecke dimensions over all Young diagrams with n boxes and
// at most three rows.
BigInt hecke_square_sum(int n, HeckeMethod method);
// Sum of (c^(n)_lambda)^2 over the chamber.
BigInt path_count_square_sum(int n);

}  // namespace nimrep
