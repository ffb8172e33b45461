#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rtalt/cli/dispatch.hpp"
#include "rtalt/core/machine_file.hpp"
#include "rtalt/pafa/builders.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rtalt;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name)
{
    return std::string(RTALT_FIXTURES) + "/" + name;
}

fs::path scratch()
{
    static fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("rtalt_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text)
{
    std::ofstream(p) << text;
}

} // namespace

TEST_CASE("build and run UPOWER")
{
    auto path = (scratch() / "upower.json").string();
    auto b = run({"build", "upower", "-o", path});
    CHECK(b.code == 0);
    CHECK(core::parse_machine(slurp(path)) == core::MachineDescription{pafa::build_upower()});
    auto r = run({"run", path, "1111"});
    CHECK(r.code == 0);
    CHECK(r.out == "ACCEPT\n");
    r = run({"run", path, "111"});
    CHECK(r.code == 1);
    CHECK(r.out == "REJECT\n");
    r = run({"run", path, ""});
    CHECK(r.code == 1);
    r = run({"run", path, "12"});
    CHECK(r.code == 2);
}

TEST_CASE("emptiness of the zero fixture")
{
    auto r = run({"emptiness", fixture("zero_nqfa.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "EMPTY\n");
}

TEST_CASE("emptiness with a witness")
{
    auto path = scratch() / "rot.json";
    spit(path, R"({"kind":"qfa","alphabet":["a"],"machine":{"basis":["q1","q2"],"initial":"q1","accept":["q2"],
        "ops":{"a":[[[["3/5","0/1"],["-4/5","0/1"]],[["4/5","0/1"],["3/5","0/1"]]]]}}})");
    auto r = run({"emptiness", path.string()});
    CHECK(r.code == 1);
    CHECK(r.out == "NONEMPTY a\n");
    r = run({"run", path.string(), "a"});
    CHECK(r.code == 0);
    CHECK(r.out == "ACCEPT\nprobability 16/25\n");
}

TEST_CASE("emptiness refuses undecidable kinds unless bounded")
{
    auto path = (scratch() / "twin.json").string();
    REQUIRE(run({"build", "twin", "-o", path}).code == 0);
    auto r = run({"emptiness", path});
    CHECK(r.code == 2);
    CHECK(r.err.find("undecidable") != std::string::npos);
    r = run({"emptiness", path, "--bounded", "2"});
    CHECK(r.code == 1);
    CHECK(r.out == "NONEMPTY c\n");

    auto none = scratch() / "none.json";
    spit(none, R"({"kind":"afa","alphabet":["a"],"machine":{"states":["s","t"],"universal":[],
        "initial":"s","accepting":"t","delta":{}}})");
    r = run({"emptiness", none.string(), "--bounded", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("NO WITNESS ≤ 3", 0) == 0);
}

TEST_CASE("compile-tm then run u^(2n)")
{
    auto path = (scratch() / "write2.json").string();
    auto c = run({"compile-tm", fixture("tm_write2.json"), "-o", path});
    CHECK(c.code == 0);
    auto r = run({"run", path, std::string(8, 'u')});
    CHECK(r.code == 0);
    CHECK(r.out == "ACCEPT\n");
    r = run({"run", path, std::string(6, 'u')});
    CHECK(r.code == 1);
}

TEST_CASE("compile-tm refuses machines that break the assumptions")
{
    auto tm = scratch() / "away.json";
    spit(tm, R"({"states":["q0","q1","qf"],"initial":"q0","halting":"qf","tape_alphabet":["▷","_"],
        "start_symbol":"▷","blank":"_","delta":{"q0":{"▷":["q1","▷","R"]},"q1":{"_":["qf","_","R"]}}})");
    auto r = run({"compile-tm", tm.string(), "-o", (scratch() / "away_out.json").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("halt away from cell 0") != std::string::npos);
}

TEST_CASE("enumerate lists accepted words in shortlex order")
{
    auto path = (scratch() / "twin2.json").string();
    REQUIRE(run({"build", "twin", "-o", path}).code == 0);
    auto r = run({"enumerate", path, "--max-len", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "c\n0c0\n1c1\n");
}

TEST_CASE("check exit codes follow the validator")
{
    auto path = (scratch() / "usq.json").string();
    REQUIRE(run({"build", "usquare-aqfa", "-o", path}).code == 0);
    auto r = run({"check", path});
    CHECK(r.code == 0);
    CHECK(r.out == "OK\n");

    auto bad = scratch() / "bad.json";
    spit(bad, R"({"kind":"qfa","alphabet":["a"],"machine":{"basis":["q1"],"initial":"q1","accept":["q1"],
        "ops":{"a":[[[["1/2","0/1"]]]]}}})");
    r = run({"check", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.out.rfind("violation: ", 0) == 0);
    r = run({"run", bad.string(), "a"});
    CHECK(r.code == 2);
    CHECK(r.err.rfind("validation failed", 0) == 0);
}

TEST_CASE("tree export")
{
    auto path = (scratch() / "upower2.json").string();
    REQUIRE(run({"build", "upower", "-o", path}).code == 0);
    auto dot = scratch() / "tree.dot";
    auto r = run({"run", path, "11", "--tree", dot.string()});
    CHECK(r.code == 0);
    CHECK(slurp(dot).rfind("digraph", 0) == 0);
    auto aq = (scratch() / "aq.json").string();
    REQUIRE(run({"build", "usquare-aqfa", "-o", aq}).code == 0);
    r = run({"run", aq, "aaaa", "--tree", (scratch() / "aq.dot").string()});
    CHECK(r.code == 0);
}

TEST_CASE("usage errors and repeatability")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"build", "nothing", "-o", "x"}).code == 2);
    CHECK(run({"run", (scratch() / "missing.json").string(), "a"}).code == 2);
    auto path = (scratch() / "usq2.json").string();
    REQUIRE(run({"build", "usquare-pa1ca", "-o", path}).code == 0);
    auto first = run({"enumerate", path, "--max-len", "5"});
    auto second = run({"enumerate", path, "--max-len", "5"});
    CHECK(first.out == "ε\n1\n1111\n");
    CHECK(first.out == second.out);
    auto again = (scratch() / "usq3.json").string();
    REQUIRE(run({"build", "usquare-pa1ca", "-o", again}).code == 0);
    CHECK(slurp(path) == slurp(again));
}
