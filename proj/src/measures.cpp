// SPDX-License-Identifier: MIT
#include "nimrep/measures.hpp"

#include <Eigen/Dense>

#include <cctype>
#include <cmath>
#include <map>
#include <sstream>
#include <variant>

namespace nimrep {

namespace {

using AtomMap = std::map<AngleKey, double>;

constexpr double kPrune = 1e-14;

DiscreteMeasure from_map(int dim, const AtomMap& m, std::string prov) {
    DiscreteMeasure mu;
    mu.dimension = dim;
    mu.provenance = std::move(prov);
    for (const auto& [k, w] : m)
        if (std::abs(w) > kPrune) mu.atoms.push_back({k, w});
    return mu;
}

AtomMap to_map(const DiscreteMeasure& mu) {
    AtomMap m;
    for (const auto& a : mu.atoms) m[a.theta] += a.weight;
    return m;
}

int index_from(double n, const char* what) {
    double twice = 2 * n;
    long N = std::lround(twice);
    if (N < 1 || std::abs(twice - double(N)) > 1e-9)
        throw InvalidParameter(std::string(what) + " needs a positive index with 2n an integer");
    return int(N);
}

std::string num(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

cplx ipow(cplx z, int k) {
    cplx r = 1.0;
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

}  // namespace

double DiscreteMeasure::mass() const {
    double s = 0;
    for (const auto& a : atoms) s += a.weight;
    return s;
}

double DiscreteMeasure::min_weight() const {
    double s = 0;
    for (const auto& a : atoms) s = std::min(s, a.weight);
    return s;
}

double DiscreteMeasure::weight_at(const AngleKey& k) const {
    for (const auto& a : atoms)
        if (a.theta == k) return a.weight;
    return 0;
}

DiscreteMeasure uniform_roots(int N) {
    if (N < 1) throw InvalidParameter("uniform measure needs N >= 1 roots");
    AtomMap m;
    for (int k = 0; k < N; ++k) m[{Frac(k, N), Frac(0)}] = 1.0 / N;
    return from_map(1, m, "u(" + std::to_string(N) + ")");
}

DiscreteMeasure measure_d(double n) {
    DiscreteMeasure mu = uniform_roots(index_from(n, "d_n"));
    mu.provenance = "d(" + num(n) + ")";
    return mu;
}

DiscreteMeasure measure_d_prime(double n) {
    index_from(n, "d'_n");
    DiscreteMeasure mu = add(scale(measure_d(2 * n), 2.0), measure_d(n), -1.0);
    mu.provenance = "dp(" + num(n) + ")";
    return mu;
}

DiscreteMeasure measure_d_double_prime(double n) {
    index_from(n, "d''_n");
    DiscreteMeasure mu = scale(add(scale(measure_d_prime(3 * n), 3.0), measure_d_prime(n), -1.0), 0.5);
    mu.provenance = "dpp(" + num(n) + ")";
    return mu;
}

DiscreteMeasure dirac(Frac theta) {
    return from_map(1, {{{theta.mod1(), Frac(0)}, 1.0}}, "delta(" + theta.str() + ")");
}

DiscreteMeasure dirac(Frac t1, Frac t2) {
    return from_map(2, {{{t1.mod1(), t2.mod1()}, 1.0}}, "delta(" + t1.str() + "," + t2.str() + ")");
}

DiscreteMeasure product(const DiscreteMeasure& a, const DiscreteMeasure& b) {
    if (a.dimension != 1 || b.dimension != 1) throw InvalidParameter("product needs two circle measures");
    AtomMap m;
    for (const auto& x : a.atoms)
        for (const auto& y : b.atoms) m[{x.theta.first, y.theta.first}] += x.weight * y.weight;
    return from_map(2, m, "prod(" + a.provenance + ", " + b.provenance + ")");
}

DiscreteMeasure uniform_Dl(int l) {
    auto pts = generate_Dl(l);
    AtomMap m;
    for (const auto& p : pts) m[{p.f1, p.f2}] += 1.0 / double(pts.size());
    return from_map(2, m, "dl(" + std::to_string(l) + ")");
}

DiscreteMeasure add(const DiscreteMeasure& a, const DiscreteMeasure& b, double sb) {
    if (a.atoms.size() && b.atoms.size() && a.dimension != b.dimension)
        throw InvalidParameter("cannot add measures of different dimension");
    AtomMap m = to_map(a);
    for (const auto& x : b.atoms) m[x.theta] += sb * x.weight;
    std::string p = "(" + a.provenance + (sb < 0 ? " - " : " + ") +
                    (std::abs(sb) == 1 ? "" : num(std::abs(sb)) + "*") + b.provenance + ")";
    return from_map(a.atoms.empty() ? b.dimension : a.dimension, m, p);
}

DiscreteMeasure scale(const DiscreteMeasure& a, double s) {
    AtomMap m;
    for (const auto& x : a.atoms) m[x.theta] += s * x.weight;
    return from_map(a.dimension, m, num(s) + "*" + a.provenance);
}

DiscreteMeasure with_density(const DiscreteMeasure& a, const std::function<double(const AngleKey&)>& f) {
    AtomMap m;
    for (const auto& x : a.atoms) m[x.theta] += f(x.theta) * x.weight;
    return from_map(a.dimension, m, a.provenance);
}

double density_alpha(Frac theta, int j) {
    double s = std::sin(2 * kPi * j * theta.value());
    return 2 * s * s;
}

double density_J2(const AngleKey& theta) {
    double J = jacobian(TorusPoint(theta.first, theta.second), JacobianForm::theta);
    return J * J / (24 * std::pow(kPi, 4));
}

// ---------------------------------------------------------------------------
// composition language

namespace {

struct Density {
    int dim = 0;  // 0: constant, usable in any dimension
    std::function<double(const AngleKey&)> f;
};
using Value = std::variant<double, Density, DiscreteMeasure>;

Density as_density(const Value& v) {
    if (auto d = std::get_if<double>(&v)) {
        double c = *d;
        return {0, [c](const AngleKey&) { return c; }};
    }
    return std::get<Density>(v);
}

bool is_measure(const Value& v) { return std::holds_alternative<DiscreteMeasure>(v); }

class Parser {
public:
    explicit Parser(std::string s) : s_(std::move(s)) {}

    DiscreteMeasure parse() {
        Value v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        if (!is_measure(v)) fail("expression does not denote a measure");
        auto mu = std::get<DiscreteMeasure>(v);
        mu.provenance = s_;
        return mu;
    }

private:
    std::string s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw InvalidParameter("measure expression: " + msg + " at offset " + std::to_string(pos_) + " in \"" +
                               s_ + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    Value combine(const Value& a, const Value& b, char op) {
        if (op == '+' || op == '-') {
            const double sgn = op == '+' ? 1.0 : -1.0;
            if (is_measure(a) && is_measure(b))
                return add(std::get<DiscreteMeasure>(a), std::get<DiscreteMeasure>(b), sgn);
            if (is_measure(a) || is_measure(b)) fail("cannot add a measure and a density");
            if (std::holds_alternative<double>(a) && std::holds_alternative<double>(b))
                return std::get<double>(a) + sgn * std::get<double>(b);
            Density x = as_density(a), y = as_density(b);
            return Density{std::max(x.dim, y.dim), [x, y, sgn](const AngleKey& k) { return x.f(k) + sgn * y.f(k); }};
        }
        if (op == '/') {
            if (!std::holds_alternative<double>(b)) fail("can only divide by a number");
            return combine(a, 1.0 / std::get<double>(b), '*');
        }
        // '*'
        if (is_measure(a) && is_measure(b)) fail("use prod(a, b) for product measures");
        if (is_measure(a) || is_measure(b)) {
            const auto& mu = std::get<DiscreteMeasure>(is_measure(a) ? a : b);
            const Value& other = is_measure(a) ? b : a;
            if (auto c = std::get_if<double>(&other)) return scale(mu, *c);
            Density d = std::get<Density>(other);
            if (d.dim && d.dim != mu.dimension) fail("density dimension does not match the measure");
            return with_density(mu, d.f);
        }
        if (std::holds_alternative<double>(a) && std::holds_alternative<double>(b))
            return std::get<double>(a) * std::get<double>(b);
        Density x = as_density(a), y = as_density(b);
        return Density{std::max(x.dim, y.dim), [x, y](const AngleKey& k) { return x.f(k) * y.f(k); }};
    }

    Value expr() {
        Value v = term();
        for (;;) {
            if (eat('+')) v = combine(v, term(), '+');
            else if (eat('-')) v = combine(v, term(), '-');
            else return v;
        }
    }
    Value term() {
        Value v = factor();
        for (;;) {
            if (eat('*')) v = combine(v, factor(), '*');
            else if (eat('/')) v = combine(v, factor(), '/');
            else return v;
        }
    }
    double number() {
        skip();
        std::size_t used = 0;
        double x = std::stod(s_.substr(pos_), &used);
        pos_ += used;
        return x;
    }
    double scalar_arg() {
        Value v = expr();
        if (!std::holds_alternative<double>(v)) fail("expected a number");
        return std::get<double>(v);
    }
    Frac frac_arg() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/' ||
                                    s_[pos_] == '-'))
            ++pos_;
        return Frac::parse(s_.substr(start, pos_ - start));
    }
    Value factor() {
        skip();
        if (eat('-')) return combine(-1.0, factor(), '*');
        if (eat('(')) {
            Value v = expr();
            expect(')');
            return v;
        }
        if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
            return number();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        const std::string id = s_.substr(start, pos_ - start);
        if (id.empty()) fail("expected a term");
        if (id == "J2") return Density{2, [](const AngleKey& k) { return density_J2(k); }};
        if (id == "alpha") {
            int j = 1;
            if (eat('(')) {
                j = int(std::lround(scalar_arg()));
                expect(')');
            }
            return Density{1, [j](const AngleKey& k) { return density_alpha(k.first, j); }};
        }
        expect('(');
        Value out;
        if (id == "d") out = measure_d(scalar_arg());
        else if (id == "dp") out = measure_d_prime(scalar_arg());
        else if (id == "dpp") out = measure_d_double_prime(scalar_arg());
        else if (id == "u") out = uniform_roots(int(std::lround(scalar_arg())));
        else if (id == "dl") out = uniform_Dl(int(std::lround(scalar_arg())));
        else if (id == "delta") {
            Frac a = frac_arg();
            if (eat(',')) out = dirac(a, frac_arg());
            else out = dirac(a);
        } else if (id == "prod") {
            Value a = expr();
            expect(',');
            Value b = expr();
            if (!is_measure(a) || !is_measure(b)) fail("prod needs two measures");
            out = product(std::get<DiscreteMeasure>(a), std::get<DiscreteMeasure>(b));
        } else {
            fail("unknown name '" + id + "'");
        }
        expect(')');
        return out;
    }
};

}  // namespace

DiscreteMeasure make_measure(const std::string& expr) { return Parser(expr).parse(); }

std::string canonical_measure_expression(const std::string& graph_id) {
    GraphKey k = parse_graph_id(graph_id);
    using K = GraphKey::Kind;
    const int n = k.n;
    auto s = [](int x) { return std::to_string(x); };
    switch (k.kind) {
    case K::A:
        if (n < 1) break;
        return "alpha*d(" + s(n + 1) + ")";
    case K::D:
        if (n < 4) break;
        return "alpha*dp(" + s(n - 1) + ")";
    case K::E:
        if (n == 6) return "alpha*d(12) + (d(12) - d(6) - d(4) + d(3))/2";
        if (n == 7) return "(2*alpha(2)*dpp(3) + dp(1))/3";
        if (n == 8) return "(2*(alpha(1) + alpha(3))*dpp(5) - dpp(1))/3";
        break;
    case K::AffA:
        if (n < 2 || n % 2) break;
        return "d(" + s(n / 2) + ")";
    case K::AffD:
        if (n < 4) break;
        return "d(" + s(n - 2) + ")/2 + dp(1)/2";
    case K::AffE:
        if (n == 6) return "(alpha - 1/2)*d(3) + d(2)/2";
        if (n == 7) return "(alpha - 1/2)*d(4) + d(3)/2";
        if (n == 8) return "(alpha - 1/2)*d(6) + d(5)/2";
        break;
    case K::SU3_A:
        if (n < 4) break;
        return "J2*dl(" + s(n) + ")";
    case K::SU3_D:
        if (n < 6 || n % 3) break;
        return "J2*prod(d(" + s(n) + "/2), d(" + s(n) + "/2))";
    case K::SU3_Astar:
        if (n < 4) break;
        return "alpha*d(" + s(n) + "/2)";
    case K::SU3_E8:
    case K::SU3_E1_12:
        throw DataUnavailable(k.canonical() +
                              " has no closed-form measure on roots of unity; its measure is the eigendata atom list");
    default:
        throw DataUnavailable("no closed-form measure for " + k.canonical());
    }
    throw InvalidParameter("parameter out of range for " + graph_id);
}

DiscreteMeasure canonical_measure(const std::string& graph_id) {
    return make_measure(canonical_measure_expression(graph_id));
}

// ---------------------------------------------------------------------------
// moments

double moment_t(const DiscreteMeasure& mu, int m, double shift) {
    if (mu.dimension != 1) throw InvalidParameter("moment_t needs a circle measure");
    cplx s = 0;
    for (const auto& a : mu.atoms) {
        cplx u = unit(a.theta.first);
        s += a.weight * ipow(u + std::conj(u) + shift, m);
    }
    if (std::abs(s.imag()) > 1e-12 * std::max(1.0, std::abs(s.real())))
        throw IdentityFailure("circle moment has an imaginary residue");
    return s.real();
}

cplx circle_moment(const DiscreteMeasure& mu, int k) {
    if (mu.dimension != 1) throw InvalidParameter("circle_moment needs a circle measure");
    cplx s = 0;
    for (const auto& a : mu.atoms) s += a.weight * unit(k * a.theta.first.value());
    return s;
}

cplx moment_t2(const DiscreteMeasure& mu, int m, int n) {
    if (mu.dimension != 2) throw InvalidParameter("moment_t2 needs a torus measure");
    cplx s = 0;
    for (const auto& a : mu.atoms) {
        cplx z = phi(TorusPoint(a.theta.first, a.theta.second));
        s += a.weight * ipow(z, m) * ipow(std::conj(z), n);
    }
    return s;
}

cplx eigen_moment(const EigenData& e, int m, int n) {
    cplx s = 0;
    for (const auto& x : e.entries)
        s += double(x.multiplicity) * x.weight * ipow(x.eigenvalue, m) * ipow(std::conj(x.eigenvalue), n);
    return s;
}

cplx eigen_moment_orbit(const EigenData& e, int m, int n) {
    cplx s = 0;
    for (const auto& x : e.entries) {
        if (x.theta.size() != 2) throw InvalidParameter("orbit moment needs torus angles");
        for (const auto& p : s3_orbit(TorusPoint(x.theta[0], x.theta[1]))) {
            cplx z = phi(p);
            s += double(x.multiplicity) * x.weight / 6.0 * ipow(z, m) * ipow(std::conj(z), n);
        }
    }
    return s;
}

DiscreteMeasure eigendata_measure(const EigenData& e) {
    AtomMap m;
    int dim = 1;
    for (const auto& x : e.entries) {
        const double w = x.weight * x.multiplicity;
        if (x.theta.size() == 1) {
            m[{x.theta[0].mod1(), Frac(0)}] += w / 2;
            m[{(-x.theta[0]).mod1(), Frac(0)}] += w / 2;
        } else if (x.theta.size() == 2) {
            dim = 2;
            for (const auto& p : s3_orbit(TorusPoint(x.theta[0], x.theta[1]))) m[{p.f1, p.f2}] += w / 6;
        } else {
            throw InvalidParameter("eigendata entry lacks angles");
        }
    }
    return from_map(dim, m, "eigendata(" + e.graph_id + ")");
}

// ---------------------------------------------------------------------------
// linear-combination solver

FitResult cyclotomic_fit(const DiscreteMeasure& target, const std::vector<DiscreteMeasure>& basis,
                         const std::vector<AngleKey>& grid_in, double tol) {
    if (basis.empty()) throw InvalidParameter("cyclotomic_fit needs a non-empty basis");
    std::vector<AngleKey> grid = grid_in;
    if (grid.empty()) {
        AtomMap all = to_map(target);
        for (const auto& b : basis)
            for (const auto& a : b.atoms) all[a.theta];
        for (const auto& [k, w] : all) grid.push_back(k);
    }
    const int R = int(grid.size()), C = int(basis.size());
    std::vector<AtomMap> maps;
    for (const auto& b : basis) maps.push_back(to_map(b));
    AtomMap tmap = to_map(target);
    Eigen::MatrixXd A(R, C);
    Eigen::VectorXd rhs(R);
    for (int i = 0; i < R; ++i) {
        auto it = tmap.find(grid[std::size_t(i)]);
        rhs(i) = it == tmap.end() ? 0.0 : it->second;
        for (int j = 0; j < C; ++j) {
            auto jt = maps[std::size_t(j)].find(grid[std::size_t(i)]);
            A(i, j) = jt == maps[std::size_t(j)].end() ? 0.0 : jt->second;
        }
    }

    FitResult out;
    Eigen::VectorXd c = A.colPivHouseholderQr().solve(rhs);
    out.coefficients.assign(c.data(), c.data() + c.size());
    out.residual = (rhs - A * c).cwiseAbs().maxCoeff();
    out.feasible = out.residual < tol;
    if (out.feasible) return out;

    // Certificate: first rows (in grid order) that raise the rank, solved
    // exactly, then the worst violated remaining row.
    std::vector<int> rows;
    Eigen::MatrixXd sub(0, C);
    int rank = 0;
    for (int i = 0; i < R; ++i) {
        Eigen::MatrixXd trial(sub.rows() + 1, C);
        trial << sub, A.row(i);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(trial);
        lu.setThreshold(1e-10);
        if (lu.rank() > rank) {
            sub = trial;
            rank = int(lu.rank());
            rows.push_back(i);
        }
    }
    Eigen::VectorXd srhs(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) srhs(Eigen::Index(k)) = rhs(rows[k]);
    Eigen::VectorXd sc = sub.completeOrthogonalDecomposition().solve(srhs);
    out.subsystem_solution.assign(sc.data(), sc.data() + sc.size());
    for (int i : rows) out.subsystem.push_back(grid[std::size_t(i)]);
    Eigen::VectorXd r = (rhs - A * sc).cwiseAbs();
    Eigen::Index worst = 0;
    out.certificate_residual = r.maxCoeff(&worst);
    out.violated = grid[std::size_t(worst)];
    return out;
}

ThreePointSystem exceptional_three_point_system(const std::string& graph_id) {
    GraphKey k = parse_graph_id(graph_id);
    ThreePointSystem sys;
    sys.graph_id = k.canonical();
    DiscreteMeasure base;
    if (k.kind == GraphKey::Kind::SU3_E8) {
        sys.points = {{Frac(8, 24), Frac(13, 24)}, {Frac(7, 24), Frac(8, 24)}, {Frac(10, 24), Frac(11, 24)}};
        base = uniform_Dl(8);
    } else if (k.kind == GraphKey::Kind::SU3_E1_12) {
        // Images of the exponents (9,0) and (4,1), then the point (5/12, 1/2)
        // that any grid containing both also carries.
        sys.points = {{Frac(4, 12), Frac(7, 12)}, {Frac(3, 12), Frac(4, 12)}, {Frac(5, 12), Frac(6, 12)}};
        base = product(measure_d(6), measure_d(6));
    } else {
        throw InvalidParameter("three-point system is defined for SU3-E(8) and SU3-E1(12) only");
    }
    const EigenData e = eigendata(sys.graph_id);
    for (const auto& pt : sys.points) {
        double w = 0;
        for (const auto& x : e.entries)
            for (const auto& img : s3_orbit(TorusPoint(x.theta[0], x.theta[1])))
                if (img.f1.mod1() == pt.first && img.f2.mod1() == pt.second) {
                    w += x.weight * x.multiplicity;
                    break;
                }
        sys.target.push_back(w);
        sys.j2.push_back(density_J2(pt) * 24.0 / 16.0);
    }
    DiscreteMeasure unit_base = scale(base, 1.0 / base.atoms.front().weight);
    DiscreteMeasure jbase = with_density(unit_base, [](const AngleKey& a) { return density_J2(a) * 24.0 / 16.0; });
    DiscreteMeasure target;
    target.dimension = 2;
    for (std::size_t i = 0; i < sys.points.size(); ++i)
        target = add(target, dirac(sys.points[i].first, sys.points[i].second), sys.target[i]);
    sys.fit = cyclotomic_fit(target, {unit_base, jbase}, sys.points);
    return sys;
}

// ---------------------------------------------------------------------------
// export

nlohmann::json to_json(const DiscreteMeasure& mu) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : mu.atoms) {
        nlohmann::json th = mu.dimension == 1 ? nlohmann::json(a.theta.first.str())
                                              : nlohmann::json::array({a.theta.first.str(), a.theta.second.str()});
        atoms.push_back({{"theta", th}, {"weight", a.weight}});
    }
    return {{"dimension", mu.dimension}, {"atoms", atoms}, {"provenance", mu.provenance}};
}

DiscreteMeasure measure_from_json(const nlohmann::json& j) {
    DiscreteMeasure mu;
    mu.dimension = j.at("dimension").get<int>();
    mu.provenance = j.value("provenance", "");
    AtomMap m;
    for (const auto& a : j.at("atoms")) {
        const auto& th = a.at("theta");
        AngleKey k = th.is_array() ? AngleKey{Frac::parse(th.at(0).get<std::string>()),
                                              Frac::parse(th.at(1).get<std::string>())}
                                   : AngleKey{Frac::parse(th.get<std::string>()), Frac(0)};
        m[k] += a.at("weight").get<double>();
    }
    for (const auto& [k, w] : m) mu.atoms.push_back({k, w});
    return mu;
}

std::string density_bars_csv(const DiscreteMeasure& mu) {
    std::ostringstream os;
    if (mu.dimension == 1) {
        os << "theta,x,weight\n";
        for (const auto& a : mu.atoms)
            os << a.theta.first.str() << ',' << format_double(2 * std::cos(2 * kPi * a.theta.first.value())) << ','
               << format_double(a.weight) << '\n';
    } else {
        os << "theta1,theta2,re_z,im_z,weight\n";
        for (const auto& a : mu.atoms) {
            cplx z = phi(TorusPoint(a.theta.first, a.theta.second));
            os << a.theta.first.str() << ',' << a.theta.second.str() << ',' << format_double(z.real()) << ','
               << format_double(z.imag()) << ',' << format_double(a.weight) << '\n';
        }
    }
    return os.str();
}

}  // namespace nimrep
