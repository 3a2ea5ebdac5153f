#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jtab/partition.hpp"

namespace jtab {

/* One invariant suite run.  Assertable suites (theorem-backed) set `pass`;
 * conjecture suites set `conjecture` and list deviations instead of failing.
 */
struct SuiteResult {
    std::string name;
    bool pass = true;
    bool conjecture = false;
    long long checks = 0;
    std::vector<std::string> notes;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        pass = false;
        failures.push_back(std::move(msg));
    }
};

SuiteResult verify_table_completeness(int max_n, int jobs);
SuiteResult verify_lemma38(int max_u);
SuiteResult verify_pn_identity(int max_n);
SuiteResult verify_dhl_boxes(int max_n);
SuiteResult verify_box_counts(int max_n, int jobs);
SuiteResult verify_mc_oblak(int max_n, int trials, uint64_t seed, int jobs);
SuiteResult verify_scaling(const std::vector<Partition>& bases, int trials, uint64_t seed);
SuiteResult verify_loci_52(int trials, uint64_t seed);
SuiteResult verify_dimension_check(int count, uint64_t seed);

/* conjecture-level reports (never gate) */
SuiteResult report_bruhat_column(int max_n);
SuiteResult report_box_4part(int max_n, int jobs);
SuiteResult report_ob_parts(int max_n);
SuiteResult report_loci_beyond(int trials, uint64_t seed);

} // namespace jtab
