#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "terqf/commands.hpp"

using namespace terqf;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes")
{
    CHECK(run({"repr", "--form", "1,1,1,0,0,0", "--n", "9"}).code == 0);
    CHECK(run({"repr", "--form", "1,1,1,0,0", "--n", "9"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"repr", "--form", "1,1,-1,0,0,0", "--n", "9"}).code == 3);
    CHECK(run({"classnum", "--D", "-5"}).code == 3);
    CHECK(run({"density", "--form", "1,1,1,0,0,0", "--p", "4", "--n", "3"}).code == 3);
    CHECK(run({"reproduce", "no-such-target"}).code == 3);
}

TEST_CASE("repr output")
{
    auto r = run({"repr", "--form", "1,1,1,0,0,0", "--n", "9"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 30);
    auto csv = run({"repr", "--form", "1,1,1,0,0,0", "--n", "3", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.find("x,y,z") != std::string::npos);
}

TEST_CASE("density example")
{
    auto r = run({"density", "--form", "7,15,23,10,2,6", "--p", "2", "--n", "6"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["density"] == "0");
}

TEST_CASE("aut and classgroup")
{
    auto a = nlohmann::json::parse(run({"aut", "--form", "1,3,4,3,1,0"}).out);
    CHECK(a["order"] == 8);
    auto g = nlohmann::json::parse(run({"classgroup", "--D", "-420"}).out);
    CHECK(g["structure"] == "Z2xZ2xZ2");
}

TEST_CASE("deterministic output")
{
    std::vector<std::string> args = {"reproduce", "automorphs"};
    auto first = run(args);
    auto second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("runtime") == std::string::npos);
    auto timed = run({"reproduce", "bands", "--timing"});
    CHECK(timed.out.find("runtime") != std::string::npos);
}
