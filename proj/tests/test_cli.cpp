#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int rc = -1;
    std::string out;
    std::string err;
};

const std::string cfg = BEZOUT_CONFIG_DIR;

Run bezout(const std::string& args)
{
    fs::path err_file = fs::temp_directory_path() / ("bezout_cli_err_" + std::to_string(::getpid()));
    std::string cmd = std::string("\"") + BEZOUT_CLI_PATH + "\" " + args + " 2>\"" + err_file.string() + "\"";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, n);
    }
    int status = ::pclose(pipe);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(err_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.err = ss.str();
    fs::remove(err_file);
    return r;
}

} // namespace

TEST_CASE("eval-degree")
{
    auto r = bezout("eval-degree --chain " + cfg + "/cusp.json 'x1^2 - x2^3'");
    CHECK(r.rc == 0);
    CHECK(r.out == "1\n");
    CHECK(bezout("eval-degree --chain " + cfg + "/cusp.json x1").out == "3\n");
    CHECK(bezout("eval-degree --chain " + cfg + "/cusp.json x2").out == "2\n");
    CHECK(bezout("eval-degree --chain " + cfg + "/cusp.json 'x1 + (x1^2 - x2^3)^2'").out == "3\n");
    CHECK(bezout("eval-degree --weights 3,2 'x1 + (x1^2 - x2^3)^2'").out == "12\n");
    CHECK(bezout("eval-degree --weights 1,1 0").out == "-inf\n");

    auto j = bezout("--format json eval-degree --weights 2,5 --vars u,v 'u*v^2'");
    REQUIRE(j.rc == 0);
    CHECK(nlohmann::json::parse(j.out).at("degree") == "12");
}

TEST_CASE("bound over the family configs")
{
    for (int k = 1; k <= 5; ++k) {
        auto r = bezout("bound --config " + cfg + "/f" + std::to_string(k) + ".json");
        REQUIRE(r.rc == 0);
        auto arr = nlohmann::ordered_json::parse(r.out);
        REQUIRE(arr.is_array());
        std::map<std::string, std::string> value;
        std::map<std::string, std::string> exact;
        for (const auto& rep : arr) {
            value[rep.at("method")] = rep.at("value");
            exact[rep.at("method")] = rep.at("exact");
            auto it = rep.begin();
            CHECK(it.key() == "method");
            CHECK((++it).key() == "value");
            CHECK((++it).key() == "exact");
            CHECK((++it).key() == "trail");
        }
        CHECK(value["weighted"] == std::to_string(12 * k));
        CHECK(value["bkk"] == std::to_string(12 * k));
        CHECK(value["iterated"] == std::to_string(3 * k));
        CHECK(value["okounkov"] == std::to_string(3 * k));
        CHECK(exact["iterated"] == "proven-exact");
    }
    auto one = bezout("bound --config " + cfg + "/f2.json --method iterated");
    REQUIRE(one.rc == 0);
    CHECK(nlohmann::json::parse(one.out).is_object());

    auto text = bezout("--format text bound --config " + cfg + "/f1.json --method weighted");
    CHECK(text.out == "weighted 12 not-proven\n");

    auto inline_run = bezout("bound --weights 1,1 --system 'x1^2 + x2' --system 'x2^2 - x1' --method weighted");
    REQUIRE(inline_run.rc == 0);
    CHECK(nlohmann::json::parse(inline_run.out).at("value") == "4");
}

TEST_CASE("newton and okounkov")
{
    auto r = bezout("newton --shift 1,1 'x1 + (x1^2 - x2^3)^2' 'x1^2 - x2^3'");
    REQUIRE(r.rc == 0);
    CHECK(r.out.find("vol(P) = 12\n") != std::string::npos);
    CHECK(r.out.find("vol(Q) = 3\n") != std::string::npos);
    CHECK(r.out.find("vol(P+Q) = 27\n") != std::string::npos);
    CHECK(r.out.find("M = 12\n") != std::string::npos);

    auto o = bezout("okounkov --chain " + cfg + "/cusp.json --d 6 --cutoff 18");
    REQUIRE(o.rc == 0);
    CHECK(o.out.find("2*area = 36\n") != std::string::npos);
    CHECK(o.out.find("D/d^n = 1\n") != std::string::npos);

    auto w = bezout("--format json okounkov --weights 3,2 --d 6 --cutoff 18");
    REQUIRE(w.rc == 0);
    CHECK(nlohmann::json::parse(w.out).at("twice_area") == "6");
}

TEST_CASE("oracle-count")
{
    auto r = bezout("--format json oracle-count --config " + cfg + "/f2.json --seed 3");
    REQUIRE(r.rc == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("count") == 6);
    CHECK(j.at("trials").size() == 5);

    auto point = bezout("oracle-count --config " + cfg + "/linear.json --point 1,2");
    CHECK(point.rc == 0);
    CHECK(point.out == "count = 1\n");

    // same seed, same output
    auto a = bezout("oracle-count --config " + cfg + "/f1.json --seed 99 --trials 6");
    auto b = bezout("oracle-count --config " + cfg + "/f1.json --seed 99 --trials 6");
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
    auto c = bezout("oracle-count --config " + cfg + "/f1.json --seed 100 --trials 6");
    CHECK(a.out != c.out);
}

TEST_CASE("verify")
{
    auto r = bezout("verify --config " + cfg + "/f1.json");
    REQUIRE(r.rc == 0);
    CHECK(r.out.find("verdict: iterated exact") != std::string::npos);
    auto j = bezout("--format json verify --config " + cfg + "/f3.json");
    REQUIRE(j.rc == 0);
    auto v = nlohmann::json::parse(j.out);
    CHECK(v.at("oracle") == 9);
    CHECK(v.at("verdict").get<std::string>().find("iterated exact") != std::string::npos);
}

TEST_CASE("exit codes, nothing on stdout")
{
    struct Case {
        std::string args;
        int rc;
    };
    std::vector<Case> cases{
        {"eval-degree --weights 3,2 'x1 +* x2'", 2},
        {"eval-degree --weights 3,2 x3", 2},
        {"eval-degree --weights 3,0 x1", 2},
        {"bound --config /nonexistent/job.json", 2},
        {"--format yaml bound --config " + cfg + "/f1.json", 2},
        {"oracle-count --system x1 --system x2", 2},
        {"no-such-command", 2},
        {"bound --weights 1,1 --system x1 --system 5", 3},
        {"okounkov --chain " + cfg + "/cusp.json --d 6 --cutoff 6", 3},
        {"oracle-count --system 'x1*x2' --system 'x1*x2^2' --point 0,0", 3},
    };
    for (const auto& c : cases) {
        CAPTURE(c.args);
        auto r = bezout(c.args);
        CHECK(r.rc == c.rc);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }

    fs::path chain = fs::temp_directory_path() / ("bezout_np_" + std::to_string(::getpid()) + ".json");
    std::ofstream(chain) << R"({"vars": ["x1", "x2"], "weights": [1, 1], "steps": [{"h": "x1^2 - x2^2", "w": 1}]})";
    auto np = bezout("eval-degree --chain " + chain.string() + " x1");
    CHECK(np.rc == 3);
    CHECK(np.out.empty());
    fs::remove(chain);
}

TEST_CASE("output file")
{
    fs::path out = fs::temp_directory_path() / ("bezout_out_" + std::to_string(::getpid()) + ".json");
    auto r = bezout("bound --config " + cfg + "/f1.json --method bkk --output " + out.string());
    CHECK(r.rc == 0);
    CHECK(r.out.empty());
    std::ifstream in(out);
    REQUIRE(in);
    auto j = nlohmann::json::parse(in);
    CHECK(j.at("value") == "12");
    fs::remove(out);
}
