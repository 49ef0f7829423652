#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "srdef/cli.hpp"

using namespace srdef;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli text output") {
    auto r = run({"bset", "cycle:4"});
    CHECK(r.code == 0);
    CHECK(r.out == "|B(K)| = 2\n  {0,2}\n  {1,3}\n");

    r = run({"t2", "--degree0", "cyclic4:8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("dim T2_A,0 = 64") != std::string::npos);
    CHECK(r.out.find("from edges: 24") != std::string::npos);
    CHECK(r.out.find("from vertices: 40") != std::string::npos);

    r = run({"t1", "--a", "0", "--b", "1,3", "octahedron", "--oracle"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(agrees)") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    CHECK(run({}).code == exit_error);
    CHECK(run({"info"}).code == exit_error);
    CHECK(run({"t1", "--degree0", "--b", "1", "torus:7"}).code == exit_error);
    CHECK(run({"info", "no-such-complex"}).code == exit_error);
    CHECK(run({"versal-ideal", "boundary-simplex:4"}).code == exit_error);
    CHECK(run({"verify-nf", "--n", "4", "--order", "3"}).code == exit_ok);
    CHECK(run({"verify-nf", "--n", "4", "--order", "3", "--mutate"}).code == exit_verification_failed);
    CHECK(run({"--help"}).code == exit_ok);

    const auto r = run({"info", "no-such-complex", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK_FALSE(j["ok"].get<bool>());
    CHECK(j["error"]["code"] == "usage");
}

TEST_CASE("cli json is deterministic and round-trips") {
    for (const std::vector<std::string> cmd : {std::vector<std::string>{"t1", "--degree0", "torus:7"},
                                              {"t2", "--degree0", "cyclic4:8"},
                                              {"surface", "icosahedron"}}) {
        auto a = cmd, b = cmd;
        a.insert(a.end(), {"--format", "json", "--parallel", "1"});
        b.insert(b.end(), {"--format", "json", "--parallel", "4"});
        const auto ra = run(a), rb = run(b);
        CHECK(ra.code == 0);
        CHECK(ra.out == rb.out);
        const auto j = nlohmann::ordered_json::parse(ra.out);
        CHECK(j.dump(2) + "\n" == ra.out);
    }
    const auto v = nlohmann::json::parse(run({"versal-ideal", "suspension:cycle:6", "--format", "json"}).out)["result"];
    CHECK(v["n_variables"] == 30);
    CHECK(v["minors"].size() == 6);
    CHECK(v["exact"] == true);
    CHECK(v["krull_dimension"] == 26);

    const auto nf = nlohmann::json::parse(run({"normal-form", "--n", "3", "--order", "1", "--format", "json"}).out)["result"];
    const auto& terms = nf["equations"][0]["terms"];
    bool found = false;
    for (const auto& t : terms)
        if (t["params"].empty()) {
            CHECK(t["coeff"] == "1");
            CHECK(t["ys"] == nlohmann::json{{"y1", 1}, {"y2", 1}, {"y3", 1}});
            found = true;
        }
    CHECK(found);
}

TEST_CASE("cli reports facet normalisation") {
    const std::string path = "cli_test_facets.txt";
    std::ofstream(path) << "0 1 2\n1 2\n0 1 3\n";
    const auto r = run({"info", path});
    CHECK(r.code == 0);
    CHECK(r.err.find("non-maximal facet {1,2} dropped") != std::string::npos);
    const auto j = nlohmann::json::parse(run({"info", path, "--format", "json"}).out);
    CHECK(j["warnings"].size() == 1);
    CHECK(j["result"]["f_vector"] == nlohmann::json{4, 5, 2});
    std::remove(path.c_str());

    const auto f = nlohmann::json::parse(run({"flip", "boundary-simplex:3", "--a", "0,1,2", "--b", "4", "--format", "json"}).out);
    CHECK(f["result"]["f_vector"] == nlohmann::json{5, 9, 6});
}
