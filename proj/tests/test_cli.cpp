#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "cli_runner.hpp"
#include "fragchain/io.hpp"
#include "support.hpp"

using namespace fragchain;
using fragtest::run_cli;

namespace {

std::string canonical_file() {
    static bool written = false;
    const std::string path = "/tmp/fragchain_test_canonical.tsv";
    if (!written) {
        fragtest::write_file(path, fragment_file_text(fragtest::canonical_example()));
        written = true;
    }
    return path;
}

std::string score_field(const std::string& report) {
    const std::string line = fragtest::first_data_line(report);
    return line.substr(0, line.find('\t'));
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("chain reports the optimal score for every engine") {
    for (const std::string algo : {"dp", "ls", "hybrid", "oracle2", "oraclex"}) {
        CAPTURE(algo);
        const auto result = run_cli("chain " + canonical_file() + " --algo " + algo);
        REQUIRE(result.exit_code == 0);
        REQUIRE(score_field(result.out) == "7");
    }
}

TEST_CASE("chain --json emits one object with the expected keys") {
    const auto result = run_cli("chain " + canonical_file() + " --algo hybrid --json");
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.find("\"score\":7") != std::string::npos);
    for (const std::string key :
         {"\"algo\"", "\"k\"", "\"n\"", "\"m\"", "\"nPrime\"", "\"mPrime\"", "\"micros\"",
          "\"counters\"", "\"staircaseOps\""}) {
        CAPTURE(key);
        CHECK(result.out.find(key) != std::string::npos);
    }
    CHECK(fragtest::count_data_lines(result.out) == 1);
}

TEST_CASE("chain --emit-chain prints the chain ids") {
    const auto result = run_cli("chain " + canonical_file() + " --algo dp --emit-chain");
    REQUIRE(result.exit_code == 0);
    std::istringstream in(result.out);
    std::string line;
    std::vector<std::string> ids;
    bool past_report = false;
    while (std::getline(in, line)) {
        if (past_report) ids.push_back(line);
        if (!line.empty() && line[0] != '#') past_report = true;
    }
    CHECK(ids == std::vector<std::string>{"0", "2"});
}

TEST_CASE("an empty fragment file scores 0") {
    const std::string path = "/tmp/fragchain_test_empty.tsv";
    fragtest::write_file(path, "");
    const auto result = run_cli("chain " + path + " --algo hybrid");
    CHECK(result.exit_code == 0);
    CHECK(score_field(result.out) == "0");
    std::remove(path.c_str());
}

TEST_CASE("malformed input exits 2 and cites the line") {
    const std::string path = "/tmp/fragchain_test_bad.tsv";
    fragtest::write_file(path, "#n=10 m=10\n0\t1\t0\t1\t2\n5\t3\t0\t1\t2\n");
    const auto result = run_cli("chain " + path + " --algo dp");
    CHECK(result.exit_code == 2);
    CHECK(result.err.find("line 3") != std::string::npos);
    std::remove(path.c_str());

    const auto missing = run_cli("chain /nonexistent/file.tsv --algo dp");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("oraclex refuses more than 20 fragments with exit 3") {
    std::ostringstream text;
    for (int i = 0; i < 21; ++i) {
        text << 2 * i << '\t' << 2 * i << '\t' << 2 * i << '\t' << 2 * i << "\t1\n";
    }
    const std::string path = "/tmp/fragchain_test_wide.tsv";
    fragtest::write_file(path, text.str());
    const auto result = run_cli("chain " + path + " --algo oraclex");
    CHECK(result.exit_code == 3);
    std::remove(path.c_str());
}

TEST_CASE("gen two-spikes derives the header and count from n") {
    const auto result = run_cli("gen --profile two-spikes --n 256 --seed 4");
    REQUIRE(result.exit_code == 0);
    std::istringstream in(result.out);
    std::string header;
    std::getline(in, header);
    CHECK(header == "#n=256 m=84");
    CHECK(fragtest::count_data_lines(result.out) == 8192);
}

TEST_CASE("gen is byte-identical for identical flags") {
    const std::string flags = "gen --n 40 --m 30 --k 25 --seed 11";
    const auto first = run_cli(flags);
    const auto second = run_cli(flags);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK_FALSE(first.out.empty());
}

TEST_CASE("gen --k 0 emits only the header") {
    const auto result = run_cli("gen --n 12 --m 7 --k 0");
    REQUIRE(result.exit_code == 0);
    CHECK(result.out == "#n=12 m=7\n");
}

TEST_CASE("gen output round-trips through chain") {
    const auto generated = run_cli("gen --n 48 --m 36 --k 30 --seed 21");
    REQUIRE(generated.exit_code == 0);
    const std::string path = "/tmp/fragchain_test_roundtrip.tsv";
    fragtest::write_file(path, generated.out);

    std::string seen;
    for (const std::string algo : {"dp", "ls", "hybrid", "oracle2"}) {
        const auto result = run_cli("chain " + path + " --algo " + algo);
        REQUIRE(result.exit_code == 0);
        const std::string score = score_field(result.out);
        if (seen.empty()) seen = score;
        CHECK(score == seen);
    }
    std::remove(path.c_str());
}

TEST_CASE("bench emits one row per size and engine") {
    const auto result = run_cli("bench --family uniform --sizes 24,32 --repeats 1 --seed 2");
    REQUIRE(result.exit_code == 0);
    CHECK(fragtest::count_data_lines(result.out) == 6);

    const auto single = run_cli("bench --family two-spikes --sizes 16 --repeats 1");
    REQUIRE(single.exit_code == 0);
    CHECK(fragtest::count_data_lines(single.out) == 3);
}

TEST_CASE("bench detects a corrupted engine") {
    for (const std::string engine : {"dp", "ls", "hybrid"}) {
        CAPTURE(engine);
        const auto result =
            run_cli("bench --family uniform --sizes 24 --repeats 1 --inject-fault " + engine);
        REQUIRE(result.exit_code == 1);
        CHECK(result.err.find("mismatch") != std::string::npos);
    }
}

TEST_SUITE_END();
