#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vaeq/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "vaeq");
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = vaeq::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return CliResult{code, out.str(), err.str()};
}

} // namespace

TEST_CASE("va reports the closed form, table 2 first") {
    const CliResult r = run({"va", "--parts", "7,7"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["value"] == 4);
    CHECK(j["method"] == "CLOSED_FORM_TABLE2");
    CHECK(j["parts"] == json::array({7, 7}));
}

TEST_CASE("va dispatches per spec family") {
    CHECK(json::parse(run({"va", "--parts", "4,5"}).out)["method"] == "CLOSED_FORM_TABLE1");
    CHECK(json::parse(run({"va", "--kstar", "3x4"}).out)["method"] == "CLOSED_FORM_TABLE2");
    const json irregular = json::parse(run({"va", "--parts", "2,3,4"}).out);
    CHECK(irregular["method"] == "GENERAL_ENGINE");
    CHECK(irregular.contains("certificate_q"));
}

TEST_CASE("va --check cross-checks against the engine") {
    const CliResult r = run({"va", "--parts", "6,7", "--check"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["value"] == 4);
    CHECK(j["engine"] == 4);
    CHECK(j["agree"] == true);
}

TEST_CASE("kstar shorthand equals the expanded spelling") {
    CHECK(run({"va", "--kstar", "4x6"}).out == run({"va", "--parts", "6,6,6,6"}).out);
}

TEST_CASE("p subcommand") {
    const CliResult r = run({"p", "--q", "14", "--parts", "7,7"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["p"] == 8);
    CHECK(j["d"] == 2);
    CHECK(j["trigger"] == "CONDITION_I");

    // p is undefined where no equitable q-coloring exists
    const CliResult bad = run({"p", "--q", "7", "--parts", "7,7"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("threshold subcommand") {
    const json j = json::parse(run({"threshold", "--parts", "7,7"}).out);
    CHECK(j["threshold"] == 8);
    const json j2 = json::parse(run({"threshold", "--parts", "3,3,3"}).out);
    CHECK(j2["threshold"] == 6);
}

TEST_CASE("feasible subcommand and its exit codes") {
    const CliResult no = run({"feasible", "--q", "7", "--parts", "7,7"});
    CHECK(no.code == 2);
    const json j = json::parse(no.out);
    CHECK(j["feasible"] == false);
    CHECK(j["rule"] == "max-classes");

    const CliResult yes = run({"feasible", "--q", "6", "--parts", "7,7"});
    CHECK(yes.code == 0);
    CHECK(json::parse(yes.out)["feasible"] == true);

    const CliResult tree = run({"feasible", "--q", "3", "--parts", "4,5", "--tree", "1"});
    CHECK(tree.code == 2);
    CHECK(json::parse(tree.out)["feasible"] == false);

    const CliResult unsupported = run({"feasible", "--q", "3", "--parts", "4,5", "--tree", "2"});
    CHECK(unsupported.code == 1);
}

TEST_CASE("construct emits the partition schema") {
    const CliResult r = run({"construct", "--q", "3", "--parts", "6,3"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "{\"classes\":[{\"counts\":[3,0]},{\"counts\":[3,0]},{\"counts\":[0,3]}]}\n");

    const CliResult infeasible = run({"construct", "--q", "5", "--parts", "7,7"});
    CHECK(infeasible.code == 2);
    CHECK(infeasible.out.empty());

    const CliResult tree = run({"construct", "--q", "5", "--parts", "6,6", "--tree", "--verify"});
    REQUIRE(tree.code == 0);
    CHECK(json::parse(tree.out)["classes"].size() == 5);
}

TEST_CASE("construct --members round-trips through verify") {
    const CliResult built = run({"construct", "--q", "4", "--parts", "5,5", "--tree", "--members"});
    REQUIRE(built.code == 0);

    const std::string path = "cli_test_partition.json";
    {
        std::ofstream f(path);
        f << built.out;
    }
    const CliResult verified = run({"verify", "--partition", path, "--parts", "5,5", "--tree", "1"});
    std::remove(path.c_str());
    REQUIRE(verified.code == 0);
    const json j = json::parse(verified.out);
    CHECK(j["isTreeColoring"] == true);
    CHECK(j["coversAllVertices"] == true);
}

TEST_CASE("verify rejects a bad partition with exit 2") {
    const std::string path = "cli_test_bad_partition.json";
    {
        std::ofstream f(path);
        f << R"({"classes":[{"counts":[4,0]},{"counts":[0,4]},{"counts":[1,1]}]})";
    }
    // sizes 4,4,2 are not equitable
    const CliResult r = run({"verify", "--partition", path, "--parts", "5,5", "--tree", "1"});
    std::remove(path.c_str());
    CHECK(r.code == 2);
    const json j = json::parse(r.out);
    CHECK(j["isTreeColoring"] == false);
    CHECK(j["isEquitable"] == false);
}

TEST_CASE("table1 CSV has the fixed columns and all rows agree") {
    const CliResult r = run({"table1", "--max", "6"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "m,n,closed_form,engine,agree,method");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.find(",true,") != std::string::npos);
    }
    CHECK(rows == 21); // pairs 1 <= m <= n <= 6
}

TEST_CASE("table2 CSV covers the requested grid") {
    const CliResult r = run({"table2", "--max-k", "3", "--max-n", "4"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "k,n,closed_form,engine,agree,method");
    int rows = 0;
    while (std::getline(lines, line))
        ++rows;
    CHECK(rows == 8); // k in {2,3} x n in 1..4
    CHECK(r.out.find("false") == std::string::npos);
}

TEST_CASE("full-size tables agree on every row") {
    const CliResult t1 = run({"table1", "--max", "40"});
    CHECK(t1.code == 0);
    CHECK(t1.out.find("false") == std::string::npos);

    const CliResult t2 = run({"table2", "--max-k", "6", "--max-n", "20"});
    CHECK(t2.code == 0);
    CHECK(t2.out.find("false") == std::string::npos);
}

TEST_CASE("--timing goes to standard error only") {
    const CliResult plain = run({"va", "--parts", "7,7"});
    const CliResult timed = run({"--timing", "va", "--parts", "7,7"});
    CHECK(timed.out == plain.out);
    CHECK(timed.err.find("elapsed_ms=") == 0);
}

TEST_CASE("certify sweeps engine against oracle") {
    const CliResult r = run({"certify", "--max-total", "6"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["disagreements"] == 0);
    CHECK(j["specs"] == 1 + 3 + 7 + 15 + 31);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"va"}).code == 1);                             // no spec
    CHECK(run({"va", "--parts", "5"}).code == 1);             // one part
    CHECK(run({"va", "--parts", "a,b"}).code == 1);           // not integers
    CHECK(run({"va", "--parts", "3,0"}).code == 1);           // zero size
    CHECK(run({"va", "--kstar", "4"}).code == 1);             // malformed shorthand
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({"va", "--parts", "2,2", "--kstar", "2x2"}).code == 1);
}

TEST_CASE("output is byte-deterministic") {
    const std::vector<std::vector<std::string>> invocations = {
        {"va", "--parts", "7,7", "--check"},
        {"p", "--q", "14", "--parts", "7,7"},
        {"construct", "--q", "5", "--parts", "6,6", "--tree", "--members"},
        {"table1", "--max", "5"},
    };
    for (const auto& args : invocations) {
        const CliResult a = run(args);
        const CliResult b = run(args);
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
}

TEST_CASE("help exits 0") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"va", "--help"}).code == 0);
}
