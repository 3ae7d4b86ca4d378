// SPDX-License-Identifier: MIT
#include "nimrep/graph.hpp"

#include "nimrep/deltoid.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <regex>

namespace nimrep {

extern const char* const kExceptionalEigendataJson;  // generated from data/

int Graph::degree(int v) const {
    int d = 0;
    for (int j = 0; j < size(); ++j) d += adjacency(v, j);
    return d;
}

namespace {

void add_edge(Graph& g, int a, int b) {
    g.adjacency(a, b) += 1;
    if (a != b) g.adjacency(b, a) += 1;
}

Graph blank(std::string id, int n) {
    Graph g;
    g.id = std::move(id);
    g.adjacency = Mat<int>(n, n);
    for (int i = 0; i < n; ++i) g.vertices.push_back(std::to_string(i + 1));
    return g;
}

// Star with arms of the given lengths (number of vertices beyond the
// centre). Vertex 0 is the far end of the first arm, numbering runs along
// that arm into the centre and then out along the remaining arms.
Graph star(std::string id, std::vector<int> arms) {
    int n = 1;
    for (int a : arms) n += a;
    Graph g = blank(std::move(id), n);
    const int centre = arms[0];
    for (int i = 0; i < arms[0]; ++i) add_edge(g, i, i + 1);
    int next = centre + 1;
    for (std::size_t k = 1; k < arms.size(); ++k) {
        int prev = centre;
        for (int i = 0; i < arms[k]; ++i) {
            add_edge(g, prev, next);
            prev = next++;
        }
    }
    return g;
}

std::string paren(const std::string& f, int n) { return f + "(" + std::to_string(n) + ")"; }

}  // namespace

int coxeter_number(Su2Family family, int n) {
    switch (family) {
    case Su2Family::A: return n + 1;
    case Su2Family::D: return 2 * n - 2;
    case Su2Family::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
    case Su2Family::Tadpole: return 2 * n + 1;
    }
    return 0;
}

std::vector<int> coxeter_exponents(Su2Family family, int n) {
    std::vector<int> e;
    switch (family) {
    case Su2Family::A:
        for (int j = 1; j <= n; ++j) e.push_back(j);
        break;
    case Su2Family::D:
        for (int j = 1; j <= 2 * n - 3; j += 2) e.push_back(j);
        e.push_back(n - 1);
        std::sort(e.begin(), e.end());
        break;
    case Su2Family::E:
        if (n == 6) e = {1, 4, 5, 7, 8, 11};
        if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
        if (n == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
        break;
    case Su2Family::Tadpole:
        for (int j = 1; j <= 2 * n - 1; j += 2) e.push_back(j);
        break;
    }
    return e;
}

Graph build_su2_graph(Su2Family family, int n) {
    switch (family) {
    case Su2Family::A: {
        if (n < 1) throw InvalidParameter("A_n needs n >= 1");
        Graph g = blank(paren("A", n), n);
        for (int i = 0; i + 1 < n; ++i) add_edge(g, i, i + 1);
        g.coxeter_h = n + 1;
        return g;
    }
    case Su2Family::D: {
        if (n < 4) throw InvalidParameter("D_n needs n >= 4");
        // vertices 1, 2 are the fork leaves, 3 the branch point, n the tail end
        Graph g = blank(paren("D", n), n);
        add_edge(g, 0, 2);
        add_edge(g, 1, 2);
        for (int i = 2; i + 1 < n; ++i) add_edge(g, i, i + 1);
        g.distinguished = n - 1;
        g.coxeter_h = 2 * n - 2;
        return g;
    }
    case Su2Family::E: {
        if (n < 6 || n > 8) throw InvalidParameter("E_n needs n in {6, 7, 8}");
        std::vector<int> arms = n == 6 ? std::vector<int>{2, 2, 1}
                                : n == 7 ? std::vector<int>{3, 2, 1}
                                         : std::vector<int>{4, 2, 1};
        Graph g = star(paren("E", n), arms);
        g.coxeter_h = coxeter_number(family, n);
        return g;
    }
    case Su2Family::Tadpole: {
        if (n < 1) throw InvalidParameter("Tad_n needs n >= 1");
        Graph g = blank(paren("Tad", n), n);
        for (int i = 0; i + 1 < n; ++i) add_edge(g, i, i + 1);
        add_edge(g, n - 1, n - 1);
        g.coxeter_h = 2 * n + 1;
        return g;
    }
    }
    throw InvalidParameter("unknown SU(2) family");
}

Graph cyclic_mckay_graph(int k) {
    if (k < 2) throw InvalidParameter("cycle needs at least 2 vertices");
    Graph g = blank(paren("Aff-A", k), k);
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        g.adjacency(i, j) += 1;
        g.adjacency(j, i) += 1;
    }
    return g;
}

Graph build_su2_affine_graph(AffineFamily family, int n) {
    switch (family) {
    case AffineFamily::A1:
        if (n < 2 || n % 2) throw InvalidParameter("affine A needs an even vertex count >= 2");
        return cyclic_mckay_graph(n);
    case AffineFamily::D1: {
        if (n < 4) throw InvalidParameter("affine D_n needs n >= 4");
        // leaves 1, 2 on the first chain vertex, leaves n, n+1 on the last
        Graph g = blank(paren("Aff-D", n), n + 1);
        const int first = 2, last = n - 2;
        add_edge(g, 0, first);
        add_edge(g, 1, first);
        for (int i = first; i < last; ++i) add_edge(g, i, i + 1);
        add_edge(g, last, n - 1);
        add_edge(g, last, n);
        return g;
    }
    case AffineFamily::E1: {
        if (n < 6 || n > 8) throw InvalidParameter("affine E_n needs n in {6, 7, 8}");
        std::vector<int> arms = n == 6 ? std::vector<int>{2, 2, 2}
                                : n == 7 ? std::vector<int>{3, 3, 1}
                                         : std::vector<int>{5, 2, 1};
        return star(paren("Aff-E", n), arms);
    }
    }
    throw InvalidParameter("unknown affine family");
}

Graph truncate_infinite_graph(InfiniteKind kind, int depth) {
    if (depth < 1) throw InvalidParameter("truncation depth must be >= 1");
    Graph g;
    switch (kind) {
    case InfiniteKind::Ainf: {
        g = blank(paren("Trunc-Ainf", depth), depth + 1);
        for (int i = 0; i < depth; ++i) add_edge(g, i, i + 1);
        break;
    }
    case InfiniteKind::AinfInf: {
        g = blank(paren("Trunc-Ainfinf", depth), 2 * depth + 1);
        for (int i = 0; i < 2 * depth; ++i) add_edge(g, i, i + 1);
        for (int i = 0; i <= 2 * depth; ++i) g.vertices[i] = std::to_string(i - depth);
        g.distinguished = depth;
        break;
    }
    case InfiniteKind::Dinf: {
        // vertex 0 = distinguished fork leaf, 1..depth the chain, last = other leaf
        int n = depth + 1 + (depth >= 2 ? 1 : 0);
        g = blank(paren("Trunc-Dinf", depth), n);
        add_edge(g, 0, 1);
        for (int i = 1; i < depth; ++i) add_edge(g, i, i + 1);
        if (depth >= 2) add_edge(g, n - 1, 1);
        break;
    }
    case InfiniteKind::SU3_Ainf:
    case InfiniteKind::SU3_A6inf: {
        const bool chamber = kind == InfiniteKind::SU3_Ainf;
        std::vector<std::pair<int, int>> pts;
        if (chamber) {
            for (int s = 0; s <= depth; ++s)
                for (int a = s; a >= 0; --a) pts.emplace_back(a, s - a);
        } else {
            pts.emplace_back(0, 0);
            for (int a = -depth; a <= depth; ++a)
                for (int b = -depth; b <= depth; ++b) {
                    int d = std::max({std::abs(a), std::abs(b), std::abs(a + b)});
                    if (d >= 1 && d <= depth) pts.emplace_back(a, b);
                }
        }
        std::map<std::pair<int, int>, int> index;
        for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = int(i);
        g = blank(paren(chamber ? "Trunc-SU3_Ainf" : "Trunc-SU3_A6inf", depth), int(pts.size()));
        g.symmetric = false;
        g.lattice = pts;
        const int step[3][2] = {{1, 0}, {-1, 1}, {0, -1}};
        for (std::size_t i = 0; i < pts.size(); ++i) {
            g.vertices[i] = "(" + std::to_string(pts[i].first) + "," + std::to_string(pts[i].second) + ")";
            for (auto& s : step) {
                auto it = index.find({pts[i].first + s[0], pts[i].second + s[1]});
                if (it != index.end()) g.adjacency(int(i), it->second) += 1;
            }
        }
        break;
    }
    }
    g.depth = depth;
    return g;
}

Graph build_su3_graph(Su3Family family, int l) {
    if (family == Su3Family::Astar) {
        if (l < 4) throw InvalidParameter("A^(l)* needs l >= 4");
        if (l % 2)
            throw InvalidParameter("A^(l)* for odd l has no adjacency construction; use eigendata(\"SU3-Astar(" +
                                   std::to_string(l) + ")\")");
        const int m = l / 2;
        Graph g = blank(paren("SU3-Astar", l), m - 1);
        for (int i = 0; i + 2 < m; ++i) add_edge(g, i, i + 1);
        for (int i = 0; i < m - 1; ++i) g.adjacency(i, i) += 1;
        g.coxeter_h = l;
        return g;
    }
    if (l < 4) throw InvalidParameter("A^(l) needs l >= 4");
    Graph g = truncate_infinite_graph(InfiniteKind::SU3_Ainf, l - 3);
    g.id = paren("SU3-A", l);
    g.depth.reset();
    g.coxeter_h = l;
    return g;
}

Mat<int> su3_rotation(const Graph& g) {
    if (g.lattice.empty() || !g.coxeter_h) throw InvalidParameter("rotation needs an SU(3) A^(l) graph");
    const int top = *g.coxeter_h - 3;
    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < g.lattice.size(); ++i) index[g.lattice[i]] = int(i);
    Mat<int> P(g.size(), g.size());
    for (std::size_t i = 0; i < g.lattice.size(); ++i) {
        auto [a, b] = g.lattice[i];
        auto it = index.find({top - a - b, a});
        if (it == index.end()) throw InvalidParameter("graph is not closed under rotation");
        P(int(i), it->second) = 1;
    }
    return P;
}

// ---------------------------------------------------------------------------
// ids

std::string GraphKey::canonical() const {
    switch (kind) {
    case Kind::A: return paren("A", n);
    case Kind::D: return paren("D", n);
    case Kind::E: return paren("E", n);
    case Kind::Tad: return paren("Tad", n);
    case Kind::AffA: return paren("Aff-A", n);
    case Kind::AffD: return paren("Aff-D", n);
    case Kind::AffE: return paren("Aff-E", n);
    case Kind::SU3_A: return paren("SU3-A", n);
    case Kind::SU3_Astar: return paren("SU3-Astar", n);
    case Kind::SU3_D: return paren("SU3-D", n);
    case Kind::SU3_E8: return "SU3-E(8)";
    case Kind::SU3_E1_12: return "SU3-E1(12)";
    case Kind::Trunc: {
        const char* names[] = {"Ainf", "Ainfinf", "Dinf", "SU3_Ainf", "SU3_A6inf"};
        return paren(std::string("Trunc-") + names[int(trunc)], n);
    }
    }
    return "?";
}

GraphKey parse_graph_id(const std::string& id) {
    static const std::regex re(R"(^(Dyn-|Aff-|SU3-|Trunc-)?([A-Za-z_0-9]+?)\(?(\d+)\)?$)");
    std::smatch m;
    if (!std::regex_match(id, m, re)) throw InvalidParameter("unrecognised graph id: " + id);
    const std::string prefix = m[1], fam = m[2];
    const int n = std::stoi(m[3]);
    using K = GraphKey::Kind;
    GraphKey k{K::A, n};
    if (prefix.empty() || prefix == "Dyn-") {
        if (fam == "A") k.kind = K::A;
        else if (fam == "D") k.kind = K::D;
        else if (fam == "E") k.kind = K::E;
        else if (fam == "Tad") k.kind = K::Tad;
        else throw InvalidParameter("unrecognised graph id: " + id);
    } else if (prefix == "Aff-") {
        if (fam == "A") k.kind = K::AffA;
        else if (fam == "D") k.kind = K::AffD;
        else if (fam == "E") k.kind = K::AffE;
        else throw InvalidParameter("unrecognised graph id: " + id);
    } else if (prefix == "SU3-") {
        if (fam == "A") k.kind = K::SU3_A;
        else if (fam == "Astar") k.kind = K::SU3_Astar;
        else if (fam == "D") k.kind = K::SU3_D;
        else if (fam == "E" && n == 8) k.kind = K::SU3_E8;
        else if (fam == "E1" && n == 12) k.kind = K::SU3_E1_12;
        else throw DataUnavailable("no data for SU(3) graph " + id);
    } else {
        k.kind = K::Trunc;
        static const std::map<std::string, InfiniteKind> kinds = {
            {"Ainf", InfiniteKind::Ainf}, {"Ainfinf", InfiniteKind::AinfInf},
            {"Dinf", InfiniteKind::Dinf}, {"SU3_Ainf", InfiniteKind::SU3_Ainf},
            {"SU3_A6inf", InfiniteKind::SU3_A6inf}};
        auto it = kinds.find(fam);
        if (it == kinds.end()) throw InvalidParameter("unrecognised truncation: " + id);
        k.trunc = it->second;
    }
    return k;
}

Graph graph_by_id(const std::string& id) {
    GraphKey k = parse_graph_id(id);
    using K = GraphKey::Kind;
    switch (k.kind) {
    case K::A: return build_su2_graph(Su2Family::A, k.n);
    case K::D: return build_su2_graph(Su2Family::D, k.n);
    case K::E: return build_su2_graph(Su2Family::E, k.n);
    case K::Tad: return build_su2_graph(Su2Family::Tadpole, k.n);
    case K::AffA: return build_su2_affine_graph(AffineFamily::A1, k.n);
    case K::AffD: return build_su2_affine_graph(AffineFamily::D1, k.n);
    case K::AffE: return build_su2_affine_graph(AffineFamily::E1, k.n);
    case K::SU3_A: return build_su3_graph(Su3Family::A, k.n);
    case K::SU3_Astar: return build_su3_graph(Su3Family::Astar, k.n);
    case K::Trunc: return truncate_infinite_graph(k.trunc, k.n);
    default:
        throw DataUnavailable("no adjacency data for " + k.canonical() + "; eigendata only");
    }
}

// ---------------------------------------------------------------------------
// eigendata

std::string EigenEntry::label() const {
    if (exponent.size() == 1) return std::to_string(exponent[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < exponent.size(); ++i) s += (i ? "," : "") + std::to_string(exponent[i]);
    return s + ")";
}

double EigenData::total_weight() const {
    double s = 0;
    for (const auto& e : entries) s += e.weight * e.multiplicity;
    return s;
}

namespace {

EigenEntry su2_entry(int j, int h, double w) {
    EigenEntry e;
    e.exponent = {j};
    e.theta = {Frac(j, 2 * h)};
    e.eigenvalue = 2 * std::cos(kPi * j / h);
    e.weight = w;
    return e;
}

// Squared first entry of the PF-type eigenvector of A^(l) at (lambda1, lambda2),
// from the sine form of the SU(3) S-matrix row.
double su3_A_weight(int l, int a, int b) {
    const double a1 = a + 1, b1 = b + 1;
    double psi = 2.0 / (l * std::sqrt(3.0)) *
                 (std::sin(2 * kPi * a1 / l) + std::sin(2 * kPi * b1 / l) - std::sin(2 * kPi * (a1 + b1) / l));
    return psi * psi;
}

EigenEntry su3_entry(int l, int a, int b, double w) {
    EigenEntry e;
    e.exponent = {a, b};
    e.theta = {Frac(a + 2 * b + 3, 3 * l), Frac(2 * a + b + 3, 3 * l)};
    e.eigenvalue = phi(e.theta[0].value(), e.theta[1].value());
    e.weight = w;
    return e;
}

// psi^j_1 = sqrt(S_1j * sum_{i in P} S_ij) for the SU(2)_{h-2} S-matrix.
double conformal_embedding_weight(int h, int j, std::initializer_list<int> P) {
    auto S = [h](int i, int k) { return std::sqrt(2.0 / h) * std::sin(i * k * kPi / h); };
    double s = 0;
    for (int i : P) s += S(i, j);
    return S(1, j) * s;
}

}  // namespace

EigenData eigendata(const std::string& graph_id) {
    GraphKey k = parse_graph_id(graph_id);
    using K = GraphKey::Kind;
    EigenData out;
    out.graph_id = k.canonical();
    const int n = k.n;
    switch (k.kind) {
    case K::A: {
        if (n < 1) throw InvalidParameter("A_n needs n >= 1");
        const int h = n + 1;
        for (int j = 1; j <= n; ++j) {
            double s = std::sin(kPi * j / h);
            out.entries.push_back(su2_entry(j, h, 2.0 / h * s * s));
        }
        return out;
    }
    case K::D: {
        if (n < 4) throw InvalidParameter("D_n needs n >= 4");
        const int h = 2 * n - 2;
        // Odd exponents carry the tail-end weight; the extra exponent n-1
        // (the second copy when n is even) is invisible from the tail end.
        for (int j = 1; j <= h - 1; j += 2) {
            double s = std::sin(kPi * j / h);
            out.entries.push_back(su2_entry(j, h, 4.0 / h * s * s));
        }
        out.entries.push_back(su2_entry(n - 1, h, 0.0));
        return out;
    }
    case K::Tad: {
        if (n < 1) throw InvalidParameter("Tad_n needs n >= 1");
        const int h = 2 * n + 1;
        for (int j = 1; j <= 2 * n - 1; j += 2) {
            double s = std::sin(kPi * j / h);
            out.entries.push_back(su2_entry(j, h, 4.0 / h * s * s));
        }
        return out;
    }
    case K::E: {
        if (n == 6) {
            const double lo = (3 - std::sqrt(3.0)) / 24, hi = (3 + std::sqrt(3.0)) / 24;
            const std::pair<int, double> rows[] = {{1, lo}, {4, 0.25}, {5, hi}, {7, hi}, {8, 0.25}, {11, lo}};
            for (auto [j, w] : rows) out.entries.push_back(su2_entry(j, 12, w));
            return out;
        }
        if (n == 7) {
            for (int j : coxeter_exponents(Su2Family::E, 7))
                out.entries.push_back(su2_entry(j, 18, conformal_embedding_weight(18, j, {1, 9, 17})));
            return out;
        }
        if (n == 8) {
            for (int j : coxeter_exponents(Su2Family::E, 8))
                out.entries.push_back(su2_entry(j, 30, conformal_embedding_weight(30, j, {1, 11, 19, 29})));
            return out;
        }
        throw InvalidParameter("E_n needs n in {6, 7, 8}");
    }
    case K::SU3_A: {
        if (n < 4) throw InvalidParameter("A^(l) needs l >= 4");
        out.dimension = 2;
        for (int s = 0; s <= n - 3; ++s)
            for (int a = s; a >= 0; --a) out.entries.push_back(su3_entry(n, a, s - a, su3_A_weight(n, a, s - a)));
        return out;
    }
    case K::SU3_D: {
        if (n < 6 || n % 3) throw InvalidParameter("D^(3k) needs 3k with k >= 2");
        const int kk = n / 3;
        out.dimension = 2;
        double used = 0;
        for (int s = 0; s <= n - 3; ++s)
            for (int a = s; a >= 0; --a) {
                int b = s - a;
                if ((a - b) % 3 != 0 || (a == kk - 1 && b == kk - 1)) continue;
                double w = 3 * su3_A_weight(n, a, b);
                used += w;
                out.entries.push_back(su3_entry(n, a, b, w));
            }
        EigenEntry fixed = su3_entry(n, kk - 1, kk - 1, (1 - used) / 3);
        fixed.multiplicity = 3;
        out.entries.push_back(fixed);
        return out;
    }
    case K::SU3_Astar: {
        if (n < 4) throw InvalidParameter("A^(l)* needs l >= 4");
        out.dimension = 2;
        for (int j = 0; j <= (n - 3) / 2; ++j) {
            EigenEntry e;
            e.exponent = {j, j};
            e.theta = {Frac(j + 1, n), Frac(j + 1, n)};
            e.eigenvalue = 1 + 2 * std::cos(2 * kPi * (j + 1) / n);
            double s = std::sin(2 * kPi * (j + 1) / n);
            e.weight = 4.0 / n * s * s;
            out.entries.push_back(e);
        }
        return out;
    }
    case K::SU3_E8:
    case K::SU3_E1_12: {
        auto all = nlohmann::json::parse(kExceptionalEigendataJson);
        for (const auto& j : all)
            if (j.at("graph_id") == out.graph_id) return eigendata_from_json(j);
        throw DataUnavailable("eigendata table missing for " + out.graph_id);
    }
    default:
        throw DataUnavailable("no tabulated eigendata for " + out.graph_id);
    }
}

// ---------------------------------------------------------------------------
// numerics

namespace {
Eigen::MatrixXd to_eigen(const Graph& g) {
    Eigen::MatrixXd m(g.size(), g.size());
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j) m(i, j) = g.adjacency(i, j);
    return m;
}
}  // namespace

std::vector<cplx> numeric_spectrum(const Graph& g) {
    std::vector<cplx> out;
    Eigen::MatrixXd m = to_eigen(g);
    if (g.symmetric) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        for (int i = 0; i < m.rows(); ++i) out.emplace_back(es.eigenvalues()(i), 0.0);
    } else {
        Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
        for (int i = 0; i < m.rows(); ++i) out.push_back(es.eigenvalues()(i));
    }
    return out;
}

double spectral_radius(const Graph& g) {
    double r = 0;
    for (auto v : numeric_spectrum(g)) r = std::max(r, std::abs(v));
    return r;
}

std::vector<double> perron_frobenius_vector(const Graph& g) {
    Eigen::MatrixXd m = to_eigen(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m + m.transpose());
    Eigen::VectorXd v = es.eigenvectors().col(m.rows() - 1);
    std::vector<double> out(std::size_t(v.size()));
    for (int i = 0; i < v.size(); ++i) out[std::size_t(i)] = std::abs(v(i));
    return out;
}

// ---------------------------------------------------------------------------
// json

nlohmann::json to_json(const Graph& g) {
    nlohmann::json adj = nlohmann::json::array();
    for (int i = 0; i < g.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < g.size(); ++j) row.push_back(g.adjacency(i, j));
        adj.push_back(row);
    }
    nlohmann::json j = {{"id", g.id},
                        {"vertices", g.vertices},
                        {"adjacency", adj},
                        {"distinguished", g.distinguished},
                        {"coxeter_h", g.coxeter_h ? nlohmann::json(*g.coxeter_h) : nlohmann::json(nullptr)}};
    if (!g.lattice.empty()) j["lattice"] = g.lattice;
    if (g.depth) j["depth"] = *g.depth;
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    Graph g;
    g.id = j.at("id").get<std::string>();
    g.vertices = j.at("vertices").get<std::vector<std::string>>();
    const int n = int(g.vertices.size());
    g.adjacency = Mat<int>(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.adjacency(a, b) = j.at("adjacency").at(a).at(b).get<int>();
    g.symmetric = g.adjacency == g.adjacency.transpose();
    g.distinguished = j.at("distinguished").get<int>();
    if (!j.at("coxeter_h").is_null()) g.coxeter_h = j.at("coxeter_h").get<int>();
    if (j.contains("lattice")) g.lattice = j.at("lattice").get<std::vector<std::pair<int, int>>>();
    if (j.contains("depth")) g.depth = j.at("depth").get<int>();
    return g;
}

nlohmann::json to_json(const EigenData& e) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& x : e.entries) {
        nlohmann::json th = nlohmann::json::array();
        for (auto f : x.theta) th.push_back(f.str());
        entries.push_back({{"exponent", x.exponent},
                           {"eigenvalue", {x.eigenvalue.real(), x.eigenvalue.imag()}},
                           {"weight", x.weight},
                           {"multiplicity", x.multiplicity},
                           {"theta", th}});
    }
    return {{"graph_id", e.graph_id}, {"dimension", e.dimension}, {"entries", entries}};
}

EigenData eigendata_from_json(const nlohmann::json& j) {
    EigenData e;
    e.graph_id = j.at("graph_id").get<std::string>();
    e.dimension = j.at("dimension").get<int>();
    for (const auto& x : j.at("entries")) {
        EigenEntry en;
        en.exponent = x.at("exponent").get<std::vector<int>>();
        en.eigenvalue = {x.at("eigenvalue").at(0).get<double>(), x.at("eigenvalue").at(1).get<double>()};
        en.weight = x.at("weight").get<double>();
        en.multiplicity = x.value("multiplicity", 1);
        for (const auto& t : x.at("theta")) en.theta.push_back(Frac::parse(t.get<std::string>()));
        e.entries.push_back(en);
    }
    return e;
}

}  // namespace nimrep
