#include "salg/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run salg_cli(const std::string& args) {
    static int counter = 0;
    std::string path = "cli_out_" + std::to_string(counter++) + ".txt";
    std::string cmd = std::string(SALG_CLI) + " " + args + " > " + path + " 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    std::remove(path.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, s.str()};
}

}  // namespace

TEST_CASE("check exits 0 when the identity holds symbolically") {
    Run r = salg_cli("check --corpus m3-3-1 --map alpha1 --identity hom-malcev");
    CHECK(r.code == 0);
    CHECK(r.out.find("holds on 256 tuples") != std::string::npos);
}

TEST_CASE("check exits 1 with a counterexample when it fails") {
    Run r = salg_cli("check --corpus dt-flexible --map alpha --identity lie-admissible --set beta=3 --set a=2 --set t=1");
    CHECK(r.code == 1);
    CHECK(r.out.find("(e1, e2, x)") != std::string::npos);
}

TEST_CASE("input errors exit 2") {
    CHECK(salg_cli("check --corpus m3-3-1 --identity no-such-checker").code == 2);
    CHECK(salg_cli("check --corpus no-such-entry --identity hom-lie").code == 2);
    CHECK(salg_cli("check --file /nonexistent.salg --identity hom-lie").code == 2);
    CHECK(salg_cli("check --corpus m3-3-1 --file x.salg --identity hom-lie").code == 2);
    CHECK(salg_cli("check --corpus kaplansky-k3 --identity hom-jordan --set c=0").code == 2);
    CHECK(salg_cli("check --corpus m3-3-1 --identity hom-lie --set a").code == 2);
    CHECK(salg_cli("check --corpus m3-3-1").code == 2);
    CHECK(salg_cli("twist --corpus m3-3-1").code == 2);
    CHECK(salg_cli("check --corpus m3-3-1 --identity hom-lie --bogus").code == 2);
    CHECK(salg_cli("").code == 2);
    // b42's map is only an endomorphism for a^2 = 1; symbolic a is refused
    CHECK(salg_cli("check --corpus b42 --map alpha --identity alternative").code == 2);
    CHECK(salg_cli("check --corpus b42 --map alpha --identity alternative --set a=1 --set sign=1").code == 0);
}

TEST_CASE("malformed files exit 2 with a located message") {
    {
        std::ofstream f("cli_bad.salg");
        f << "[algebra]\nname = bad\nfield = Q\neven = x\n[product]\nx*x = y\n";
    }
    Run r = salg_cli("validate --file cli_bad.salg");
    CHECK(r.code == 2);
    CHECK(r.out.find("line 6, column 7") != std::string::npos);
    std::remove("cli_bad.salg");
}

TEST_CASE("validate") {
    CHECK(salg_cli("validate --corpus b42").code == 0);
    Run j = salg_cli("validate --corpus m3-3-1 --json");
    CHECK(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["valid"] == true);
}

TEST_CASE("twist output parses back and reports are deterministic") {
    Run a = salg_cli("twist --corpus m3-3-1 --map alpha1 --out cli_twist.salg");
    CHECK(a.code == 0);
    std::ifstream f("cli_twist.salg");
    std::stringstream s;
    s << f.rdbuf();
    salg::AlgebraDocument d = salg::parse_algebra_file(s.str());
    CHECK(d.twist == "alpha");
    Run c = salg_cli("check --file cli_twist.salg --identity hom-malcev");
    CHECK(c.code == 0);
    std::remove("cli_twist.salg");
    Run x = salg_cli("check --corpus m3-3-1 --identity hom-lie --json");
    Run y = salg_cli("check --corpus m3-3-1 --identity hom-lie --json");
    CHECK(x.code == 1);
    CHECK(x.out == y.out);
    auto j = nlohmann::json::parse(x.out);
    CHECK(j["reports"][0]["identity"] == "hom-lie");
    CHECK(j["reports"][0]["holds"] == false);
}

TEST_CASE("derive, commutator and plus") {
    Run d = salg_cli("derive --corpus m3-3-1 --map alpha1 2");
    CHECK(d.code == 0);
    CHECK(d.out.find("m3-3-1-alpha1-derived-2") != std::string::npos);
    Run m = salg_cli("commutator --corpus b42 --json");
    CHECK(m.code == 0);
    CHECK(nlohmann::json::parse(m.out)["products"].size() > 0);
    CHECK(salg_cli("plus --corpus kaplansky-k3").code == 0);
    CHECK(salg_cli("plus --corpus b42").code == 0);
}

TEST_CASE("corpus listing") {
    Run r = salg_cli("corpus");
    CHECK(r.code == 0);
    CHECK(r.out.find("dt-flexible") != std::string::npos);
    Run j = salg_cli("corpus --corpus b42 --json");
    CHECK(nlohmann::json::parse(j.out)["claims"].size() == 17);
}
