#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bgg {

// One batch job, assembled from CLI flags, config-file stanzas or C API
// key/value calls. Keys: command, type, lambda, module, parabolic, rows,
// format, seed, jobs, budget, kmax, progress.
struct JobConfig {
    std::string command;  // maps | cohomology | table
    std::string type;
    std::vector<int> lambda;
    bool lambda_given = false;
    std::string module;
    std::vector<int> parabolic;  // 0-based
    bool parabolic_given = false;
    std::vector<std::vector<int>> rows;  // table rows, 0-based subsets
    bool rows_given = false;
    std::string format = "text";
    std::uint64_t seed = 42;
    int jobs = 1;
    long budget = 1000000;  // Weyl enumeration cap; BGG_BUDGET overrides the default
    int kmax = -1;
    bool progress = false;

    JobConfig();
    void set(const std::string& key, const std::string& value);  // throws on bad key/value
    std::string canonical() const;
    static JobConfig parse(const std::string& text);  // ';'- or newline-separated key=value pairs
};

struct JobResult {
    std::string text;
    bool ok = true;
};

JobResult run_job(const JobConfig& cfg);

}  // namespace bgg
