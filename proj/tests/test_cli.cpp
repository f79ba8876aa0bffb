#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(APDIV_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) res.output.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("classify 42") {
    auto res = run("classify 42 --format json");
    CHECK(res.exit_code == 0);
    json j = json::parse(res.output);
    CHECK(j["n"] == 42);
    CHECK(j["exclusive"]["form"] == "PQRConstrained");
    CHECK(j["exclusive"]["witnesses"] == json::array({2, 3, 7}));
    CHECK(j["exclusive"]["divisors"] == json::array({7, 14, 21}));
    CHECK(j["exclusive"]["is_ap"] == true);
    CHECK(j["exclusive"]["common_difference"] == 7);
    CHECK(j["inclusive"]["form"] == "NotAP");
    CHECK(j["inclusive"]["is_ap"] == false);
    CHECK(j["oracle_agrees"] == true);
}

TEST_CASE("classify 1") {
    auto res = run("classify 1 --format json");
    CHECK(res.exit_code == 0);
    json j = json::parse(res.output);
    CHECK(j["exclusive"]["divisors"] == json::array());
    CHECK(j["exclusive"]["is_ap"] == true);
    CHECK(j["inclusive"]["divisors"] == json::array({1}));
}

TEST_CASE("classify errors") {
    CHECK(run("classify 0").exit_code == 1);
    CHECK(run("classify notanumber").exit_code == 1);
    CHECK(run("classify 9223372036854775808").exit_code == 1);  // 2^63
}

TEST_CASE("json output round-trips") {
    auto res = run("classify 360360 --format json");
    json j = json::parse(res.output);
    CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("csv output has a header row") {
    auto res = run("classify 12 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.output.rfind("n,mode,form,witnesses,divisors,is_ap,common_difference\n", 0) == 0);
}

TEST_CASE("verify") {
    auto res = run("verify --limit 10000 --format json");
    CHECK(res.exit_code == 0);
    json j = json::parse(res.output);
    CHECK(j["classifier_mismatches"] == 0);
    CHECK(j["long_ap_sets"] == 0);
    CHECK(j["tau_identity_violations"] == 0);
    CHECK(j["ok"] == true);

    CHECK(run("verify --limit 1").exit_code == 0);
    CHECK(run("verify --limit 1e12").exit_code == 3);  // over budget
}

TEST_CASE("census") {
    auto res = run("census --limit 100 --mode inclusive --format json");
    CHECK(res.exit_code == 0);
    json j = json::parse(res.output);
    CHECK(j["total"] == 62);
    CHECK(j["x"] == 100);
    CHECK(j["family_counts"]["Semiprime"] == 30);

    auto excl = run("census --limit 100 --mode exclusive --format json");
    CHECK(json::parse(excl.output)["total"] == 84);

    auto brute = run("census --limit 100 --brute");
    CHECK(brute.exit_code == 0);
    CHECK(brute.output.find("total = 62") != std::string::npos);
    CHECK(brute.output.find("paths agree") != std::string::npos);
}

TEST_CASE("census accepts scientific shorthand and is thread-stable") {
    auto a = run("census --limit 1e4 --mode exclusive --brute --threads 1 --format json");
    auto b = run("census --limit 10000 --mode exclusive --brute --threads 4 --segment-size 4096 --format json");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(json::parse(a.output)["total"] == json::parse(b.output)["total"]);
    CHECK(json::parse(a.output)["total"] == 5011);
}

TEST_CASE("ratio-table") {
    auto res = run("ratio-table 100 --format csv");
    CHECK(res.exit_code == 0);
    CHECK(res.output.rfind("x,total,landau_term,ratio\n", 0) == 0);
    CHECK(res.output.find("100,62,") != std::string::npos);

    auto multi = run("ratio-table 1e3 1e4 1e5 --format json");
    json rows = json::parse(multi.output);
    CHECK(rows.size() == 3);
    CHECK(rows[0]["ratio"].get<double>() > rows[1]["ratio"].get<double>());
    CHECK(rows[1]["ratio"].get<double>() > rows[2]["ratio"].get<double>());

    CHECK(run("ratio-table 2").exit_code == 1);
    CHECK(run("ratio-table 100 50").exit_code == 1);
}
