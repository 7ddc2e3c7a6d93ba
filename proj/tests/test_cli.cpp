#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string bin() {
    const char* b = std::getenv("HTVERIFY_BIN");
    REQUIRE_MESSAGE(b != nullptr, "HTVERIFY_BIN is not set");
    return b;
}

int run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + bin() + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path tmp(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("htverify_test_" + name + ".json");
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run("verify sp-relations --g 4") == 0);
    CHECK(run("verify sp-relations --g 3..5 --quiet") == 0);
    CHECK(run("verify no-such-suite") == 2);
    CHECK(run("") == 2);
    CHECK(run("verify sp-relations --g x") == 2);
    CHECK(run("verify sp-relations --g 2") == 2);
    CHECK(run("verify the-fact --g 3") == 0);
    CHECK(run("--bogus verify the-fact") == 2);
    // The braid generators reach only the symmetric group mod 2 once g >= 2.
    CHECK(run("verify braid-mod2-image --g 1") == 0);
    CHECK(run("verify braid-mod2-image --g 2") == 1);
}

TEST_CASE("report schema") {
    const auto path = tmp("reducibility");
    REQUIRE(run("--no-timing --report " + path.string() + " verify reducibility --g 3") == 0);
    const auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["suite"] == "reducibility");
    CHECK(j["g"] == 3);
    CHECK(j["total_cases"].get<int>() > 0);
    CHECK(j["failures"].empty());
    CHECK(j["elapsed_ms"] == 0.0);
    CHECK(j["notes"]["exceptions"].size() == 1);
    CHECK(j["notes"]["exceptions"][0]["relator"] == "auxiliary (vii)");
    CHECK(j["notes"]["exceptions"][0]["chord"] == "c{4,7}");
    std::filesystem::remove(path);
}

TEST_CASE("failure entries") {
    const auto path = tmp("braid");
    REQUIRE(run("--report " + path.string() + " verify braid-mod2-image --g 2") == 1);
    const auto j = nlohmann::json::parse(slurp(path));
    REQUIRE(j["failures"].size() == 1);
    const auto& f = j["failures"][0];
    CHECK(f["case_id"] == "generates-full-group");
    CHECK(f["expected"] == 720);
    CHECK(f["got"] == 120);
    CHECK(f.contains("inputs"));
    std::filesystem::remove(path);
}

TEST_CASE("fixed seed gives identical reports") {
    const auto a = tmp("seed_a"), b = tmp("seed_b"), c = tmp("seed_c");
    const std::string args = " verify matching --g 2 --samples 25";
    REQUIRE(run("--no-timing --seed 5 --report " + a.string() + args) == 0);
    REQUIRE(run("--no-timing --seed 5 --report " + b.string() + args) == 0);
    REQUIRE(run("--no-timing --seed 6 --report " + c.string() + args) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
    for (const auto& p : {a, b, c}) std::filesystem::remove(p);
}

TEST_CASE("other subcommands") {
    const auto path = tmp("burau");
    REQUIRE(run("--report " + path.string() + " burau --n 3 --word \"s1 s1\"") == 0);
    auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["matrix"]["data"] == nlohmann::json::parse("[[1,-2],[0,1]]"));
    CHECK(run("burau --n 3 --word \"s5\"") == 2);

    REQUIRE(run("--report " + path.string() + " liftclass --n 7 --curve \"c{2,3,5,6}\"") == 0);
    j = nlohmann::json::parse(slurp(path));
    CHECK(j["lift_class"] == nlohmann::json::parse("[0,1,0,0,-1,0]"));

    REQUIRE(run("--report " + path.string() + " sp --g 2") == 0);
    CHECK(nlohmann::json::parse(slurp(path))["order_f2"] == 720);

    REQUIRE(run("--report " + path.string() + " complex --type tits --g 2") == 0);
    j = nlohmann::json::parse(slurp(path));
    CHECK(j["simplices"] == nlohmann::json::parse("[30,45]"));
    CHECK(j["homology"]["reduced_betti"][1] == 16);
    CHECK(run("complex --type nope --g 2") == 2);
    CHECK(run("complex --type ib --g 4") == 2);
    std::filesystem::remove(path);
}

TEST_CASE("memory gate") {
    CHECK(run("complex --type ibhat --g 3 --no-homology", "HT_MAX_MEM=8") == 2);
    CHECK(run("complex --type ibhat --g 2", "HT_MAX_MEM=8") == 0);
    CHECK(run("verify setsofvec --g 2", "HT_MAX_MEM=junk") == 2);
    const auto path = tmp("gate");
    REQUIRE(run("--report " + path.string() + " verify complex-homology --g 3", "HT_MAX_MEM=8") == 0);
    auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["notes"].contains("skipped"));
    REQUIRE(run("--report " + path.string() + " verify complex-homology --g 4") == 0);
    j = nlohmann::json::parse(slurp(path));
    CHECK(j["total_cases"] == 0);
    CHECK(j["notes"].contains("skipped"));
    std::filesystem::remove(path);
}
