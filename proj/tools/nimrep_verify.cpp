// SPDX-License-Identifier: MIT
// nimrep_verify: run verification suites, export graphs, measures, series
// and plot data.
#include "nimrep/deltoid.hpp"
#include "nimrep/graph.hpp"
#include "nimrep/measures.hpp"
#include "nimrep/series.hpp"
#include "nimrep/subgroups.hpp"
#include "nimrep/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace nimrep;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, sep);) parts.push_back(p);
    return parts;
}

std::string matrix_csv(const Mat<int>& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) os << (j ? "," : "") << m(i, j);
        os << '\n';
    }
    return os.str();
}

template <class S>
std::string series_csv(const S& s) {
    std::ostringstream os;
    os << "k,coeff\n";
    for (std::size_t k = 0; k < s.c.size(); ++k) os << k << ',' << coeff_str(s.c[k]) << '\n';
    return os.str();
}

std::string matrix_series_csv(const IMatrixSeries& m) {
    std::ostringstream os;
    os << "k,i,j,coeff\n";
    for (std::size_t k = 0; k < m.c.size(); ++k)
        for (int i = 0; i < m.c[k].rows; ++i)
            for (int j = 0; j < m.c[k].cols; ++j) os << k << ',' << i << ',' << j << ',' << to_string(m.c[k](i, j)) << '\n';
    return os.str();
}

std::string eigendata_csv(const EigenData& e) {
    std::ostringstream os;
    os << "exponent1,exponent2,re,im,weight,multiplicity\n";
    for (const auto& x : e.entries)
        os << x.exponent[0] << ',' << (x.exponent.size() > 1 ? x.exponent[1] : 0) << ','
           << format_double(x.eigenvalue.real()) << ',' << format_double(x.eigenvalue.imag()) << ','
           << format_double(x.weight) << ',' << x.multiplicity << '\n';
    return os.str();
}

IMatrixSeries hilbert_for(const Graph& g, int order) {
    if (g.id.rfind("SU3-", 0) == 0) return hilbert_su3(g, su3_numerator_permutation(g), *g.coxeter_h, order);
    return hilbert_su2(g, order);
}

// object specs: graph:ID, measure:ID, eigendata:ID, series:{T,Theta,loop}:ID,
// hilbert:ID, group:NAME, deltoid-density
std::string export_object(const std::string& spec, bool csv, int order, int grid) {
    auto dump = [](const nlohmann::json& j) { return j.dump(2) + "\n"; };
    auto parts = split(spec, ':');
    const std::string kind = parts.empty() ? "" : parts[0];
    if (kind == "deltoid-density" && parts.size() == 1) {
        auto rows = sample_density(grid);
        if (csv) return density_csv(rows);
        nlohmann::json a = nlohmann::json::array();
        for (const auto& r : rows) a.push_back({r.x, r.y, r.absJ, r.invJ});
        return dump({{"columns", {"x", "y", "absJ", "invJ"}}, {"grid", grid}, {"rows", a}});
    }
    if (parts.size() == 2 && kind == "graph") {
        Graph g = graph_by_id(parts[1]);
        return csv ? matrix_csv(g.adjacency) : dump(to_json(g));
    }
    if (parts.size() == 2 && kind == "measure") {
        DiscreteMeasure mu = canonical_measure(parts[1]);
        return csv ? density_bars_csv(mu) : dump(to_json(mu));
    }
    if (parts.size() == 2 && kind == "eigendata") {
        EigenData e = eigendata(parts[1]);
        return csv ? eigendata_csv(e) : dump(to_json(e));
    }
    if (parts.size() == 2 && kind == "hilbert") {
        IMatrixSeries h = hilbert_for(graph_by_id(parts[1]), order);
        return csv ? matrix_series_csv(h) : dump(to_json(h));
    }
    if (parts.size() == 2 && kind == "group") {
        ClassData cd = class_data(generate_group(parse_group(parts[1])));
        return dump(to_json(cd));
    }
    if (parts.size() == 3 && kind == "series") {
        const std::string& which = parts[1];
        const std::string& id = parts[2];
        if (which == "T") {
            try {
                RSeries s = closed_form_t_series(id, order);
                return csv ? series_csv(s) : dump(to_json(s));
            } catch (const InvalidParameter&) {
                DSeries s = t_series(id, order, TRoute::measure);
                return csv ? series_csv(s) : dump(to_json(s));
            }
        }
        if (which == "Theta") {
            RSeries s = theta_series_paths(graph_by_id(id), order);
            return csv ? series_csv(s) : dump(to_json(s));
        }
        if (which == "loop") {
            RSeries s = loop_series(graph_by_id(id), order);
            return csv ? series_csv(s) : dump(to_json(s));
        }
    }
    throw InvalidParameter("unknown object '" + spec + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral measures, nimrep graphs and Hilbert series: verification and export"};
    app.set_config("--config", "", "key=value file with the same keys as the flags; flags win");

    SuiteOptions opt;
    std::string format = "table";
    std::string out;
    int grid = 200;
    app.add_option("--order", opt.order, "series truncation")->capture_default_str();
    app.add_option("--depth", opt.depth, "graph truncation / moment length bound")->capture_default_str();
    app.add_option("--tol", opt.tol, "floating tolerance")->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for random point sampling")->capture_default_str();
    app.add_option("--jobs", opt.jobs, "parallel cases (0 = hardware threads)")->capture_default_str();
    app.add_option("--format", format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    app.add_option("--out", out, "output file (default stdout)");
    app.require_subcommand(1);

    std::string suite;
    auto* run = app.add_subcommand("suite", "run a verification suite")->fallthrough();
    run->add_option("name", suite, "suite name or 'all'")->required();

    std::string spec;
    auto* exp = app.add_subcommand("export", "export an object")->fallthrough();
    exp->add_option("object", spec,
                    "graph:ID, measure:ID, eigendata:ID, series:T|Theta|loop:ID, hilbert:ID, group:NAME, "
                    "deltoid-density")
        ->required();
    exp->add_option("--grid", grid, "deltoid-density grid size")->capture_default_str();

    app.add_subcommand("list", "list suite names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    if (opt.jobs <= 0) opt.jobs = int(std::max(1u, std::thread::hardware_concurrency()));

    auto emit = [&](const std::string& text) {
        if (out.empty()) {
            std::cout << text;
            return true;
        }
        std::ofstream f(out, std::ios::binary);
        f << text;
        if (!f) {
            std::cerr << "error: cannot write " << out << "\n";
            return false;
        }
        return true;
    };

    if (app.got_subcommand("list")) {
        std::string s;
        for (const auto& n : suite_names()) s += n + "\n";
        return emit(s + "all\n") ? 0 : 2;
    }

    if (*run) {
        SuiteReport rep;
        try {
            rep = run_suite(suite, opt);
        } catch (const InvalidParameter& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        std::string text = format == "json"  ? to_json(rep).dump(2) + "\n"
                           : format == "csv" ? report_csv(rep)
                                             : report_table(rep);
        if (!emit(text)) return 2;
        return rep.failed == 0 ? 0 : 1;
    }

    try {
        if (!emit(export_object(spec, format == "csv", opt.order, grid))) return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
