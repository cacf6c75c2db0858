#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace diffschub {

// One acceptance check: exact-equality and property sweeps at desk scale,
// each comparing an operator-side computation against an independent
// combinatorial oracle or a pinned exact value.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // counts checked on success, first mismatch on failure
    double seconds = 0.0;
};

struct CriteriaOptions {
    std::uint64_t seed = 20260825ULL;  // fixed default keeps runs reproducible
    int max_size = 0;                  // > 0 caps the sweep bounds for a quick pass
    std::string bench_csv;             // criterion 13 writes its table here if set
};

constexpr int kCriterionCount = 13;

const char* criterion_name(int id);  // 1-based
CriterionResult run_criterion(int id, const CriteriaOptions& opt = {});
std::vector<CriterionResult> run_all_criteria(const CriteriaOptions& opt = {});

// Wall-time comparison of the memoized operator recursion against the
// polynomial/tableau oracles, one row per instance size.
struct BenchRow {
    std::string suite;  // "lr" or "mult-ss"
    int size = 0;       // |lambda| = |mu| for lr; |lambda| + l(w) for mult-ss
    int instances = 0;
    double operator_seconds = 0.0;
    double oracle_seconds = 0.0;
};

std::vector<BenchRow> bench_lr(int max_size);
std::vector<BenchRow> bench_mult_ss(int max_size);
void write_bench_csv(const std::vector<BenchRow>& rows, const std::string& path);

}  // namespace diffschub
