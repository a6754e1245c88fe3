#ifndef DDP_HARNESS_HPP
#define DDP_HARNESS_HPP

#include <string>
#include <vector>

#include "ddp/graph.hpp"

namespace ddp {

struct Violation {
    std::string canonical;
    std::string expected;
    std::string observed;
    VertexSet witness;
};

// Outcome of one exhaustive check. `seconds` is reported in the TSV summary
// only; the JSON document stays byte-identical across runs.
struct TheoremReport {
    std::string check_id;
    int d = 0;
    int n_max = 0;
    long long instances_scanned = 0;
    std::vector<Violation> violations;
    std::vector<std::string> negative_controls;  // confirmed negatives, in order
    std::vector<std::string> notes;
    bool conjecture_counterexample = false;
    double seconds = 0.0;

    bool pass() const { return violations.empty(); }
};

// The two sides of an "if and only if" theorem as canonical-code sets.
struct EqualitySetComparison {
    std::string check_id;
    int d = 0;
    int n_max = 0;
    long long instances_scanned = 0;
    std::vector<std::string> equality_set;        // graphs attaining the bound
    std::vector<std::string> characterized_set;   // graphs the theorem names
    std::vector<std::string> only_equality;       // symmetric difference
    std::vector<std::string> only_characterized;
    std::vector<Violation> violations;            // outright bound breaches
    std::vector<std::string> negative_controls;
    bool conjecture = false;  // differences are a discovery, not a bug
    double seconds = 0.0;

    bool pass() const {
        return only_equality.empty() && only_characterized.empty() && violations.empty();
    }
    TheoremReport to_report() const;
};

TheoremReport check_partition_theorem(int d, int n_max, int shards = 1);
TheoremReport check_cor22(int d, int n_max, int shards = 1);
TheoremReport check_prop32(int d, int n_max);
EqualitySetComparison check_thm33(int n_max);
EqualitySetComparison check_thm35(int d, int n_max);
EqualitySetComparison check_thm41(int d, int n_max);
EqualitySetComparison check_thm42(int d, int n_max);
TheoremReport check_cor43_44_45(int d, int n_max);
TheoremReport check_lemma34(int d, int n_max);
EqualitySetComparison check_conjecture(int d, int n_max, int shards = 1);
TheoremReport check_section4_intro(int n_max);

struct SuiteConfig {
    std::vector<std::string> checks;  // empty = none requested
    std::vector<int> d_values{2, 3};
    int tree_n_max = 12;
    int bipartite_n_max = 8;
    int shards = 1;
};

SuiteConfig default_suite_config();
SuiteConfig parse_suite_config(const std::string& text);  // throws ConfigError

std::vector<TheoremReport> run_suite(const SuiteConfig& config);  // throws ConfigError

// 0 all-pass, 2 theorem violation, 3 conjecture counterexample.
int suite_exit_code(const std::vector<TheoremReport>& reports);

std::string report_to_json(const TheoremReport& report);   // deterministic
std::string suite_to_json(const std::vector<TheoremReport>& reports);
std::string suite_to_tsv(const std::vector<TheoremReport>& reports);  // includes seconds

}  // namespace ddp

#endif
