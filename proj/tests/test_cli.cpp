#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "dihedral/cli.hpp"

using namespace dihedral;

namespace {

struct cli_result {
    int exit_code;
    std::string out;
    std::string err;
};

cli_result run(const std::vector<std::string>& args) {
    std::ostringstream captured_out;
    std::ostringstream captured_err;
    auto* old_out = std::cout.rdbuf(captured_out.rdbuf());
    auto* old_err = std::cerr.rdbuf(captured_err.rdbuf());
    int code = run_cli(args);
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, captured_out.str(), captured_err.str()};
}

}  // namespace

TEST_CASE("classify emits the dimension-two verdict as JSON") {
    auto result = run({"classify", "--n", "5", "--set", "r1,r4,s1"});
    CHECK(result.exit_code == 0);
    auto j = nlohmann::json::parse(result.out);
    CHECK(j.at("dim2") == true);
    CHECK(j.at("case") == "C_rotpair_reflection");
    CHECK(j.at("n") == 5);
    CHECK(j.at("set") == "r1,r4,s1");
}

TEST_CASE("dim reports dimension, basis and stats") {
    auto result = run({"dim", "--n", "2", "--set", "s0,s1"});
    CHECK(result.exit_code == 0);
    auto j = nlohmann::json::parse(result.out);
    CHECK(j.at("dimension") == 2);
    CHECK(j.at("basis").size() == 2);
    CHECK(j.at("basis_tokens").size() == 2);
    CHECK(j.at("stats").contains("examined"));
}

TEST_CASE("build emits JSON by default and DOT on request") {
    auto as_json = run({"build", "--n", "2", "--set", "s0,s1"});
    CHECK(as_json.exit_code == 0);
    auto j = nlohmann::json::parse(as_json.out);
    CHECK(j.at("vertices").size() == 4);
    CHECK(j.at("edges").size() == 4);

    auto as_dot = run({"build", "--n", "2", "--set", "s0,s1", "--dot"});
    CHECK(as_dot.exit_code == 0);
    CHECK(as_dot.out.find("graph cayley {") == 0);
    CHECK(as_dot.out.find("--") != std::string::npos);

    CHECK(run({"build", "--n", "2", "--set", "s0,s1", "--dot", "--json"}).exit_code == 1);
}

TEST_CASE("recognize names the matched structure") {
    auto result = run({"recognize", "--n", "5", "--set", "r1,r4,s1"});
    CHECK(result.exit_code == 0);
    auto j = nlohmann::json::parse(result.out);
    CHECK(j.at("kind") == "prism");
    CHECK(j.at("parameter") == 5);
    CHECK(j.at("mapping").size() == 10);
}

TEST_CASE("malformed input exits with code 1 and an explanation") {
    auto bad_token = run({"classify", "--n", "5", "--set", "r1,x2"});
    CHECK(bad_token.exit_code == 1);
    CHECK(bad_token.err.find("x2") != std::string::npos);

    CHECK(run({"classify", "--n", "6", "--set", "s0,s2"}).exit_code == 1);  // non-generating
    CHECK(run({"dim", "--n", "2"}).exit_code == 1);                         // missing --set
    CHECK(run({"frobnicate"}).exit_code == 1);                              // unknown command
    CHECK(run({}).exit_code == 1);                                          // no subcommand
}

TEST_CASE("help is not an error") {
    CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("verify writes a report file and summarizes") {
    const auto path = std::filesystem::temp_directory_path() / "cayleydim_cli_report.json";
    std::filesystem::remove(path);
    auto result = run({"verify", "--from", "2", "--to", "4", "--max-set-size", "3", "--out",
                       path.string()});
    CHECK(result.exit_code == 0);
    CHECK(result.out.find("disagreements=0") != std::string::npos);
    std::ifstream in(path);
    REQUIRE(in.good());
    nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j.at("meta").at("n_lo") == 2);
    CHECK(j.at("meta").at("n_hi") == 4);
    CHECK(j.at("summary").at("disagreements").empty());
    std::filesystem::remove(path);
}

TEST_CASE("verify without an output file prints the full report") {
    auto result = run({"verify", "--from", "2", "--to", "2"});
    CHECK(result.exit_code == 0);
    auto j = nlohmann::json::parse(result.out);
    CHECK(j.contains("records"));
    CHECK(j.contains("summary"));
}

TEST_CASE("solver caps surface as input errors on the command line") {
    auto result = run({"dim", "--n", "8", "--set", "r1,r7,s0", "--max-vertices", "10"});
    CHECK(result.exit_code == 1);
    CHECK(result.err.find("error:") != std::string::npos);
}
