#include "nimrep/graph.hpp"
#include "nimrep/measures.hpp"
#include "nimrep/series.hpp"
#include "nimrep/suites.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace nimrep;
namespace fs = std::filesystem;

namespace {

const fs::path kTmp = fs::temp_directory_path() / "nimrep_cli_test";

int verify(const std::string& args) {
    const std::string cmd = std::string(NIMREP_VERIFY_BIN) + " " + args + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::string export_to(const std::string& spec, const std::string& name, const std::string& extra = "") {
    fs::create_directories(kTmp);
    const fs::path out = kTmp / name;
    REQUIRE(verify("export '" + spec + "' --out " + out.string() + " " + extra) == 0);
    return slurp(out);
}

}  // namespace

TEST_CASE("cli: exit codes") {
    CHECK(verify("suite su3-obstructions") == 0);
    CHECK(verify("suite no-such-suite") == 2);
    CHECK(verify("export nothing:here") == 2);
    CHECK(verify("export 'graph:E(7)' --out /nonexistent-dir/x.json") == 2);
}

TEST_CASE("cli: exports round-trip through the parsers and are byte-stable") {
    const std::string m1 = export_to("measure:E7", "m1.json");
    CHECK(m1 == export_to("measure:E7", "m2.json"));
    auto jm = nlohmann::json::parse(m1);
    DiscreteMeasure mu = measure_from_json(jm);
    CHECK(to_json(mu) == jm);
    // Atoms at +-i carry the Dirac part.
    CHECK(mu.weight_at({Frac(1, 4), Frac(0)}) > 0);
    CHECK(mu.weight_at({Frac(3, 4), Frac(0)}) > 0);

    auto jg = nlohmann::json::parse(export_to("graph:SU3-A(5)", "g.json"));
    CHECK(to_json(graph_from_json(jg)) == jg);

    auto je = nlohmann::json::parse(export_to("eigendata:E(8)", "e.json"));
    CHECK(to_json(eigendata_from_json(je)) == je);

    auto js = nlohmann::json::parse(export_to("series:T:E8", "t.json", "--order 30"));
    RSeries t = rseries_from_json(js);
    CHECK(max_abs_diff(t, product_quotient(30, {-10, -15, -18}, {-5, -9, -30})) == 0);
    CHECK(to_json(t) == js);
}

TEST_CASE("cli: deltoid density CSV masks the exterior") {
    const std::string csv = export_to("deltoid-density", "d.csv", "--grid 20 --format csv");
    CHECK(csv.rfind("x,y,absJ,invJ\n", 0) == 0);
    CHECK(csv.find(",NaN,NaN\n") != std::string::npos);
}

TEST_CASE("cli: config file supplies defaults and flags win") {
    fs::create_directories(kTmp);
    const fs::path cfg = kTmp / "cfg.ini";
    std::ofstream(cfg) << "order=5\nformat=csv\n";
    const std::string a = export_to("series:T:E8", "c1.csv", "--config " + cfg.string());
    CHECK(a.rfind("k,coeff\n", 0) == 0);
    CHECK(std::count(a.begin(), a.end(), '\n') == 7);
    const std::string b = export_to("series:T:E8", "c2.csv", "--config " + cfg.string() + " --order 8");
    CHECK(std::count(b.begin(), b.end(), '\n') == 10);
}

TEST_CASE("suites: report shape") {
    SuiteReport r = run_suite("su3-obstructions", {});
    REQUIRE(r.failed == 0);
    auto it = std::find_if(r.cases.begin(), r.cases.end(), [](const CaseResult& c) { return c.id == "E(8)-infeasible"; });
    REQUIRE(it != r.cases.end());
    CHECK(it->measured == doctest::Approx(1.0 / 48).epsilon(1e-12));
    auto j = to_json(r);
    CHECK(j.at("summary").at("fail") == 0);
    CHECK(report_csv(r).rfind("id,status,", 0) == 0);
    CHECK_THROWS_AS(run_suite("nope", {}), InvalidParameter);
    CHECK(suite_names().size() == 8);
}
