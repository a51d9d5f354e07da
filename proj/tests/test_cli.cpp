#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string command = std::string(POLYPRISM_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buffer{};
    std::size_t got;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("polyprism_test_" + name);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("gen writes graphs") {
    const auto path = temp_file("b2.json");
    REQUIRE(run("gen --family prism-polyomino --n 2 --format json --output " + path.string()).exit_code == 0);
    const auto doc = nlohmann::json::parse(slurp(path));
    CHECK(doc["nodes"].size() == 12);
    CHECK(doc["edges"].size() == 34);
    std::filesystem::remove(path);

    const RunResult dot = run("gen --family polyomino --n 3 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("graph") == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("gen --family cycle --n 2 --format dot").exit_code == 2);
    CHECK(run("gen --family star --n 3").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("verify --min-n 4 --max-n 2").exit_code == 2);
    CHECK(run("verify --checks nothing").exit_code == 2);
    CHECK(run("sweep --max-n 1").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("invariants output is deterministic without a timestamp") {
    const RunResult a = run("invariants --family prism-polyomino --n 3 --exact --no-timestamp");
    const RunResult b = run("invariants --family prism-polyomino --n 3 --exact --no-timestamp");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["tau"] == "19025362944");
    CHECK(doc["gutman"] == "7944");

    const RunResult csv = run("invariants --family cycle --n 5 --csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("cycle,5,5,5,") != std::string::npos);
}

TEST_CASE("verify exits 0 on the pattern regime and reports n = 1 as info") {
    const RunResult r = run("verify --min-n 1 --max-n 4 --checks all --jobs 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("info") != std::string::npos);
}

TEST_CASE("sweep writes 99 rows for max-n 100") {
    const auto path = temp_file("sweep.csv");
    REQUIRE(run("sweep --max-n 100 --jobs 2 --output " + path.string()).exit_code == 0);
    std::istringstream in(slurp(path));
    std::string line;
    std::size_t lines = 0;
    std::string last;
    while (std::getline(in, line))
        if (!line.empty()) { ++lines; last = line; }
    CHECK(lines == 100);
    const auto ratio_start = last.find(",0.12");
    CHECK(ratio_start != std::string::npos);
    std::filesystem::remove(path);
}
