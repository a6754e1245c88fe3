#include <doctest.h>

#include <sstream>

#include "oracles.hpp"

// Golden fixtures for the command-line tool. DDP_CLI_PATH is injected by the
// build so the tests always exercise the freshly built binary.

namespace {

const std::string kCli = DDP_CLI_PATH;

std::string quoted(const std::string& s) { return "'" + s + "'"; }

}  // namespace

using ddp_test::run_cli;

TEST_CASE("construct corona emits the documented edge list") {
    auto r = run_cli(quoted(kCli) + " construct corona --h path:3 -d 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "9\n0 1\n0 4\n1 2\n1 6\n2 8\n3 4\n5 6\n7 8\n");
}

TEST_CASE("gamma on a piped construction") {
    auto r = run_cli(quoted(kCli) + " construct corona --h path:3 -d 2 | " + quoted(kCli) +
                     " gamma -d 2 -p 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"value\": 3") != std::string::npos);
}

TEST_CASE("gamma JSON fixture for a path") {
    auto r = run_cli("printf '4\\n0 1\\n1 2\\n2 3\\n' | " + quoted(kCli) + " gamma -d 1 -p 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\n  \"n\": 4,\n  \"d\": 1,\n  \"p\": 1,\n  \"value\": 2,\n"
          "  \"witness\": [\n    0,\n    2\n  ]\n}\n");
}

TEST_CASE("gamma reports the infinite value as a string") {
    auto r = run_cli(quoted(kCli) + " construct cycle -n 4 | " + quoted(kCli) +
                     " gamma -d 1 -p 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"value\": \"inf\"") != std::string::npos);
}

TEST_CASE("recognize fixture: balanced double star") {
    auto r = run_cli(quoted(kCli) + " construct double-star --t1 2 --t2 2 | " + quoted(kCli) +
                     " recognize --family zeta1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"member\": true") != std::string::npos);

    auto miss = run_cli(quoted(kCli) + " construct path -n 6 | " + quoted(kCli) +
                        " recognize --family zeta1");
    CHECK(miss.exit_code == 0);
    CHECK(miss.out.find("\"member\": false") != std::string::npos);
}

TEST_CASE("recognize corona emits the certificate") {
    auto r = run_cli(quoted(kCli) + " construct path -n 6 | " + quoted(kCli) +
                     " recognize --family corona -d 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"member\": true") != std::string::npos);
    CHECK(r.out.find("\"anchors\"") != std::string::npos);
}

TEST_CASE("enumerate counts and graph6 output") {
    auto count = run_cli(quoted(kCli) + " enumerate --space trees -n 7 --count");
    CHECK(count.exit_code == 0);
    CHECK(count.out == "11\n");

    auto lines = run_cli(quoted(kCli) + " enumerate --space trees -n 5 --out-format graph6");
    CHECK(lines.exit_code == 0);
    int newlines = 0;
    for (char c : lines.out) newlines += c == '\n';
    CHECK(newlines == 3);

    auto bip = run_cli(quoted(kCli) + " enumerate --space bipartite -n 6 --count");
    CHECK(bip.out == "17\n");

    // Shard sizes add up to the full stream.
    int total = 0;
    for (int i = 0; i < 3; ++i) {
        auto piece = run_cli(quoted(kCli) + " enumerate --space trees -n 7 --shards 3 --shard " +
                             std::to_string(i) + " --count");
        total += std::stoi(piece.out);
    }
    CHECK(total == 11);
}

TEST_CASE("partition fixture") {
    auto r = run_cli(quoted(kCli) + " construct cycle -n 6 | " + quoted(kCli) + " partition -d 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"verified\": true") != std::string::npos);
}

TEST_CASE("verify: TSV summary with stable leading columns") {
    auto r = run_cli("printf 'checks=thm33\\ntree_n_max=8\\n' > /tmp/ddp_cli_cfg.txt && " +
                     quoted(kCli) + " verify --config /tmp/ddp_cli_cfg.txt");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string header, row;
    REQUIRE(std::getline(lines, header));
    REQUIRE(std::getline(lines, row));
    CHECK(header == "check_id\td\tn_max\tscanned\tviolations\tstatus\tseconds");
    CHECK(row.rfind("thm33\t1\t8\t48\t0\tPASS\t", 0) == 0);  // seconds vary
}

TEST_CASE("conjecture subcommand exits cleanly on a counterexample-free scope") {
    auto r = run_cli(quoted(kCli) + " conjecture -d 2 --n-max 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"status\": \"PASS\"") != std::string::npos);
}

TEST_CASE("error exit codes: usage 64, domain errors 1") {
    CHECK(run_cli(quoted(kCli) + " nosuchcommand").exit_code == 64);
    CHECK(run_cli(quoted(kCli) + " gamma").exit_code == 64);  // missing -d
    CHECK(run_cli("printf '2\\n' | " + quoted(kCli) + " gamma -d 1").exit_code == 1);  // disconnected
    CHECK(run_cli("printf 'garbage!!\\n' | " + quoted(kCli) + " gamma -d 1").exit_code == 1);
    CHECK(run_cli(quoted(kCli) + " conjecture -d 1").exit_code == 1);  // out of scope
}
