#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

#include "hgspec/families.hpp"
#include "hgspec/hypergraph.hpp"

namespace {

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(HGSPEC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

/// First value printed as "key=value" on its own line.
double field(const std::string& out, const std::string& key) {
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(key + "=", 0) == 0) return std::stod(line.substr(key.size() + 1));
    FAIL("missing field " << key << " in:\n" << out);
    return 0.0;
}

bool has_line(const std::string& out, const std::string& want) {
    std::istringstream in(out);
    std::string line;
    while (std::getline(in, line))
        if (line == want) return true;
    return false;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& p) : path(p) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("construct writes the text format") {
    SECTION("to stdout, parseable and canonical") {
        CliResult r = run_cli("construct --family cycle --params 5 --k 3");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.output.rfind("3 10 5\n", 0) == 0);
        std::istringstream in(r.output);
        hgspec::Hypergraph H = hgspec::read_hypergraph(in);
        REQUIRE(H == hgspec::build(hgspec::FamilySpec::loose_cycle(5), 3));
    }
    SECTION("to a file, closing the loop with rho") {
        TempFile f("/tmp/hgspec_cli_cycle5.txt");
        CliResult c = run_cli("construct --family cycle --params 5 --k 3 --out " + f.path);
        REQUIRE(c.exit_code == 0);
        CliResult r = run_cli("rho " + f.path);
        REQUIRE(r.exit_code == 0);
        REQUIRE(std::fabs(field(r.output, "rho") - 1.5874010519682) <= 1e-6);
        REQUIRE(field(r.output, "upper_bound") >= field(r.output, "lower_bound"));
        REQUIRE(field(r.output, "iterations") >= 1);
    }
}

TEST_CASE("certificate reports the eigenvector weighting") {
    TempFile f("/tmp/hgspec_cli_c3.txt");
    REQUIRE(run_cli("construct --family C3 --params 2,2 --k 4 --out " + f.path).exit_code == 0);
    CliResult r = run_cli("certificate " + f.path);
    REQUIRE(r.exit_code == 0);
    REQUIRE(has_line(r.output, "classification=alpha_normal"));
    REQUIRE(has_line(r.output, "consistency=true"));
    double alpha = field(r.output, "alpha");
    double rho = 1.543689013;  // shared-edge family (2,2) at k = 4
    REQUIRE(std::fabs(alpha - std::pow(rho, -4)) <= 1e-8);
    REQUIRE(std::fabs(field(r.output, "vertex_sum[0]") - 1.0) <= 1e-8);
    REQUIRE(std::fabs(field(r.output, "edge_product[0]") - alpha) <= 1e-8);
}

TEST_CASE("mobius orbits print poles by name") {
    SECTION("forward through the pole chain") {
        CliResult r = run_cli("mobius --alpha 0.2 --x0 0.2 --n 3");
        REQUIRE(r.exit_code == 0);
        REQUIRE(std::fabs(field(r.output, "r1") - 0.7236067977499790) <= 1e-10);
        REQUIRE(std::fabs(field(r.output, "r2") - 0.2763932022500210) <= 1e-10);
        REQUIRE(has_line(r.output, "x[0]=0.2"));
        REQUIRE(has_line(r.output, "x[1]=0"));
        REQUIRE(has_line(r.output, "x[2]=pole"));
        REQUIRE(has_line(r.output, "x[3]=1"));
    }
    SECTION("backward indices are negative") {
        CliResult r = run_cli("mobius --alpha 0.2 --x0 1 --n -3");
        REQUIRE(r.exit_code == 0);
        REQUIRE(has_line(r.output, "x[0]=1"));
        REQUIRE(has_line(r.output, "x[-1]=pole"));
        REQUIRE(has_line(r.output, "x[-2]=0"));
        REQUIRE(has_line(r.output, "x[-3]=0.2"));
    }
    SECTION("the F0* table") {
        CliResult r = run_cli("mobius --alpha 0.2 --table f0star --range -1..3");
        REQUIRE(r.exit_code == 0);
        REQUIRE(has_line(r.output, "f0star[0]=0.5"));
        int rows = 0;
        std::istringstream in(r.output);
        std::string line;
        while (std::getline(in, line))
            if (line.rfind("f0star[", 0) == 0) ++rows;
        REQUIRE(rows == 5);
    }
    SECTION("an orbit needs a start and a length") {
        CliResult r = run_cli("mobius --alpha 0.2");
        REQUIRE(r.exit_code == 2);
        REQUIRE(r.output.find("either --table with --range, or --x0 with --n") !=
                std::string::npos);
    }
}

TEST_CASE("sweep lists one family sorted by rho") {
    SECTION("text rows") {
        CliResult r = run_cli("sweep --m 8 --k 3 --family C1");
        REQUIRE(r.exit_code == 0);
        std::istringstream in(r.output);
        std::string first;
        REQUIRE(std::getline(in, first));
        REQUIRE(first.find("family=C1") != std::string::npos);
        REQUIRE(first.find("params=2,2,2") != std::string::npos);
        REQUIRE(first.find("converged=true") != std::string::npos);
        int rows = 1;
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) ++rows;
        REQUIRE(rows == 6);
    }
    SECTION("json rows") {
        CliResult r = run_cli("sweep --m 8 --k 3 --family C1 --json");
        REQUIRE(r.exit_code == 0);
        nlohmann::json arr = nlohmann::json::parse(r.output);
        REQUIRE(arr.is_array());
        REQUIRE(arr.size() == 6);
        REQUIRE(arr[0]["family"] == "C1");
        REQUIRE(arr[0]["params"] == nlohmann::json({2, 2, 2}));
        REQUIRE(std::fabs(arr[0]["rho"].get<double>() - 1.695620769559862) <= 1e-9);
        REQUIRE(arr[0]["converged"].get<bool>());
    }
}

TEST_CASE("extremal prints the closed-form report") {
    CliResult r = run_cli("extremal --m 14 --k 3");
    REQUIRE(r.exit_code == 0);
    REQUIRE(has_line(r.output, "m=14"));
    REQUIRE(has_line(r.output, "k=3"));
    REQUIRE(has_line(r.output, "q=4"));
    REQUIRE(has_line(r.output, "witness[0]=C1(4,4,4)"));
    REQUIRE(has_line(r.output, "witness[1]=C2(4,4,4)"));
    REQUIRE(std::fabs(field(r.output, "theta0") - 0.35580643248135974) <= 1e-9);
    REQUIRE(std::fabs(field(r.output, "alpha") - 0.2208418946321056) <= 1e-9);
    REQUIRE(std::fabs(field(r.output, "rho") - 1.6543961542965406) <= 1e-9);
}

TEST_CASE("verify runs the quick acceptance subset") {
    CliResult r = run_cli("verify --suite quick");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("status=PASS") != std::string::npos);
    REQUIRE(r.output.find("status=FAIL") == std::string::npos);
    REQUIRE(r.output.find("criterion=1 ") != std::string::npos);
}

TEST_CASE("parse errors exit 2, domain errors exit 1") {
    REQUIRE(run_cli("").exit_code == 2);
    REQUIRE(run_cli("rho --bogus /tmp/nowhere.txt").exit_code == 2);
    REQUIRE(run_cli("construct --family bogus --params 1 --k 3").exit_code == 2);

    CliResult wrong_arity = run_cli("construct --family C3 --params 1,2,3 --k 4");
    REQUIRE(wrong_arity.exit_code == 1);
    REQUIRE(wrong_arity.output.find("error: family C3 takes 2 parameter(s)") !=
            std::string::npos);

    CliResult missing = run_cli("rho /tmp/hgspec_cli_missing.txt");
    REQUIRE(missing.exit_code == 1);
    REQUIRE(missing.output.find("error: cannot open") != std::string::npos);

    TempFile f("/tmp/hgspec_cli_disconnected.txt");
    {
        std::ofstream out(f.path);
        out << "3 6 2\n0 1 2\n3 4 5\n";
    }
    CliResult disconnected = run_cli("rho " + f.path);
    REQUIRE(disconnected.exit_code == 1);
    REQUIRE(disconnected.output.find("connected") != std::string::npos);

    REQUIRE(run_cli("construct --family path --params 0 --k 3").exit_code == 1);
    REQUIRE(run_cli("sweep --m 9 --k 3 --family C3").exit_code == 1);
}
