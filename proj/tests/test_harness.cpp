#include <doctest.h>

#include <algorithm>

#include "ddp/harness.hpp"

using namespace ddp;

namespace {

bool has_control(const TheoremReport& r, const std::string& needle) {
    return std::any_of(r.negative_controls.begin(), r.negative_controls.end(),
                       [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("partition check passes on the small universe") {
    for (int d : {1, 2}) {
        TheoremReport r = check_partition_theorem(d, 6);
        CHECK(r.pass());
        CHECK(r.instances_scanned > 0);
        CHECK(r.check_id == "partition");
    }
    // d=3: orders below 4 are excluded by the guard, so only the 3 + 5
    // connected bipartite graphs of orders 4 and 5 get scanned.
    TheoremReport r3 = check_partition_theorem(3, 5);
    CHECK(r3.pass());
    CHECK(r3.instances_scanned == 3 + 5);
}

TEST_CASE("order bound check and its out-of-universe control") {
    TheoremReport r = check_cor22(2, 6);
    CHECK(r.pass());
    CHECK(has_control(r, "non-bipartite"));
    CHECK(has_control(r, "gamma_21 = 7"));
    TheoremReport r3 = check_cor22(3, 6);
    CHECK(r3.pass());
    CHECK(has_control(r3, "non-bipartite"));
}

TEST_CASE("corona family value check") {
    TheoremReport r = check_prop32(2, 12);
    CHECK(r.pass());
    CHECK(r.instances_scanned == 6);
}

TEST_CASE("equality-set checks close on small scopes") {
    EqualitySetComparison t33 = check_thm33(10);
    CHECK(t33.pass());
    CHECK(t33.equality_set == t33.characterized_set);
    CHECK(!t33.equality_set.empty());

    EqualitySetComparison t35 = check_thm35(2, 10);
    CHECK(t35.pass());

    EqualitySetComparison t41 = check_thm41(2, 10);
    CHECK(t41.pass());
    CHECK(has_control(t41.to_report(), "small-core"));

    EqualitySetComparison t42 = check_thm42(2, 10);
    CHECK(t42.pass());
    CHECK_THROWS_AS(check_thm35(1, 8), ParameterOutOfRange);
}

TEST_CASE("comparison-to-report conversion surfaces differences as violations") {
    EqualitySetComparison cmp;
    cmp.check_id = "demo";
    cmp.only_equality = {"tAAA"};
    cmp.only_characterized = {"tBBB"};
    TheoremReport r = cmp.to_report();
    CHECK(r.violations.size() == 2);
    CHECK(!r.pass());
    CHECK(!r.conjecture_counterexample);

    cmp.conjecture = true;
    TheoremReport rc = cmp.to_report();
    CHECK(rc.conjecture_counterexample);
}

TEST_CASE("piecewise corollary check reports per-branch witnesses") {
    TheoremReport r = check_cor43_44_45(2, 10);
    CHECK(r.pass());
    bool found = std::any_of(r.notes.begin(), r.notes.end(), [](const std::string& s) {
        return s.find("piecewise equality witnesses") != std::string::npos;
    });
    CHECK(found);
}

TEST_CASE("structural lemma check counts only qualifying trees") {
    TheoremReport r = check_lemma34(2, 10);
    CHECK(r.pass());
    CHECK(has_control(r, "joined subdivided stars"));
}

TEST_CASE("conjecture scan: scope guard and clean small run") {
    CHECK_THROWS_AS(check_conjecture(1, 6), ParameterOutOfRange);
    EqualitySetComparison cmp = check_conjecture(2, 7);
    CHECK(cmp.pass());
    CHECK(!cmp.to_report().conjecture_counterexample);
}

TEST_CASE("leaf-count bound for plain domination and the r-leaves control") {
    TheoremReport r = check_section4_intro(9);
    CHECK(r.pass());
    CHECK(has_control(r, "r-leaves"));
}

TEST_CASE("suite config parsing") {
    SuiteConfig def = default_suite_config();
    CHECK(def.checks.size() == 11);
    CHECK(def.d_values == std::vector<int>{2, 3});
    CHECK(def.tree_n_max == 12);
    CHECK(def.bipartite_n_max == 8);

    SuiteConfig parsed = parse_suite_config(
        "# comment\nchecks = thm33, prop32\n d_values = 2 \ntree_n_max=9\nshards=4\n");
    CHECK(parsed.checks == std::vector<std::string>{"thm33", "prop32"});
    CHECK(parsed.d_values == std::vector<int>{2});
    CHECK(parsed.tree_n_max == 9);
    CHECK(parsed.shards == 4);

    CHECK_THROWS_AS(parse_suite_config("bogus_key=1\n"), ConfigError);
    CHECK_THROWS_AS(parse_suite_config("tree_n_max=abc\n"), ConfigError);
    CHECK_THROWS_AS(parse_suite_config("no equals sign\n"), ConfigError);
    CHECK_THROWS_AS(parse_suite_config("shards=0\n"), ConfigError);
}

TEST_CASE("suite runner: empty list, unknown id, report ordering") {
    SuiteConfig empty;
    empty.checks.clear();
    CHECK(run_suite(empty).empty());
    CHECK(suite_exit_code({}) == 0);

    SuiteConfig bad;
    bad.checks = {"nonsense"};
    CHECK_THROWS_AS(run_suite(bad), ConfigError);

    SuiteConfig small;
    small.checks = {"thm33", "prop32", "conjecture"};
    small.d_values = {2};
    small.tree_n_max = 8;
    small.bipartite_n_max = 6;
    auto reports = run_suite(small);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].check_id == "conjecture");
    CHECK(reports[1].check_id == "prop32");
    CHECK(reports[2].check_id == "thm33");
    CHECK(suite_exit_code(reports) == 0);
    CHECK(has_control(reports[0], "d = 1 rejected"));
}

TEST_CASE("exit codes distinguish bugs from discoveries") {
    TheoremReport clean;
    TheoremReport broken;
    broken.violations.push_back({"x", "a", "b", {}});
    TheoremReport discovery;
    discovery.violations.push_back({"x", "a", "b", {}});
    discovery.conjecture_counterexample = true;
    CHECK(suite_exit_code({clean}) == 0);
    CHECK(suite_exit_code({clean, broken}) == 2);
    CHECK(suite_exit_code({clean, discovery}) == 3);
    CHECK(suite_exit_code({discovery, broken}) == 2);
}

TEST_CASE("reports are byte-identical across runs and shard counts") {
    SuiteConfig config;
    config.checks = {"partition", "cor22", "conjecture"};
    config.d_values = {2};
    config.bipartite_n_max = 7;
    config.shards = 1;
    auto first = run_suite(config);
    auto second = run_suite(config);
    CHECK(suite_to_json(first) == suite_to_json(second));

    config.shards = 8;
    auto sharded = run_suite(config);
    CHECK(suite_to_json(first) == suite_to_json(sharded));
    for (size_t i = 0; i < first.size(); ++i)
        CHECK(first[i].instances_scanned == sharded[i].instances_scanned);
}

TEST_CASE("serialization formats") {
    TheoremReport r;
    r.check_id = "demo";
    r.d = 2;
    r.n_max = 8;
    r.instances_scanned = 5;
    r.seconds = 1.25;
    std::string json = report_to_json(r);
    CHECK(json.find("\"check_id\": \"demo\"") != std::string::npos);
    CHECK(json.find("\"status\": \"PASS\"") != std::string::npos);
    CHECK(json.find("seconds") == std::string::npos);  // JSON stays run-invariant

    std::string tsv = suite_to_tsv({r});
    CHECK(tsv.find("check_id\td\tn_max") == 0);
    CHECK(tsv.find("demo\t2\t8\t5\t0\tPASS\t1.250") != std::string::npos);
}
