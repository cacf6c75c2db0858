// Acceptance gate: runs the full criteria battery at full sweep sizes and prints
// one PASS/FAIL line per criterion.  Exit status 0 only if every criterion
// passes.  The benchmark criterion writes its table to acceptance_bench.csv
// in the working directory.

#include <cstdio>

#include "diffschub/criteria.hpp"

int main() {
    diffschub::CriteriaOptions opt;
    opt.bench_csv = "acceptance_bench.csv";
    bool all = true;
    for (int id = 1; id <= diffschub::kCriterionCount; ++id) {
        const diffschub::CriterionResult r = diffschub::run_criterion(id, opt);
        std::printf("[%2d/%d] %s %-26s (%.2fs) — %s\n", r.id, diffschub::kCriterionCount,
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "ACCEPTANCE: all criteria pass"
                            : "ACCEPTANCE: FAILURES present");
    return all ? 0 : 1;
}
