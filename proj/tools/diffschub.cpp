#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "diffschub/bsops.hpp"
#include "diffschub/criteria.hpp"
#include "diffschub/errors.hpp"
#include "diffschub/opexpr.hpp"
#include "diffschub/oracle.hpp"
#include "diffschub/product.hpp"
#include "diffschub/serial.hpp"
#include "diffschub/yops.hpp"

namespace {

using namespace diffschub;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

template <typename K>
void print_sum(const FormalSum<K>& s, bool json) {
    if (json)
        std::cout << sum_to_json(s).dump(2) << "\n";
    else
        std::cout << sum_to_text(s);
}

int cmd_lr(const std::string& lam_s, const std::string& mu_s, bool verify, bool json) {
    const Partition lam = Partition::parse(lam_s), mu = Partition::parse(mu_s);
    const DiagElement got = multiply(lam, mu);
    print_sum(got, json);
    if (!verify) return kExitOk;
    int bad = 0;
    for (const Partition& nu : partitions_of(lam.size() + mu.size())) {
        const Rational want(oracle::lr_count(lam, mu, nu));
        if (got.coeff(nu) != want) {
            std::cout << "mismatch " << nu.str() << ": operator=" << got.coeff(nu)
                      << " oracle=" << want << "\n";
            ++bad;
        }
    }
    if (bad) {
        std::cout << "verify: " << bad << " mismatching coefficient(s)\n";
        return kExitMismatch;
    }
    std::cout << "verify: ok\n";
    return kExitOk;
}

int cmd_apply(const std::string& basis, const std::string& op_s,
              const std::string& elem_s, bool json) {
    const OpPtr op = parse_op(op_s);
    if (basis == "partition") {
        print_sum(apply_op(op, parse_partition_sum(elem_s)), json);
    } else {
        print_sum(apply_op(op, parse_permutation_sum(elem_s)), json);
    }
    return kExitOk;
}

int cmd_mult_ss(const std::string& lam_s, const std::string& w_s, bool verify,
                std::string cache_path, bool json) {
    const Partition lam = Partition::parse(lam_s);
    const PermutationZ w = PermutationZ::parse(w_s);
    if (cache_path.empty())
        if (const char* env = std::getenv("DIFFSCHUB_CACHE")) cache_path = env;
    ProductCache& cache = global_product_cache();
    if (!cache_path.empty() && std::filesystem::exists(cache_path))
        cache_load(cache, cache_path);
    const SchubElement got = schur_times_schubert(lam, w, cache);
    print_sum(got, json);
    if (!cache_path.empty()) cache_save(cache, cache_path);
    if (!verify) return kExitOk;
    const VerifyReport rep = verify_product(lam, w, got, cache);
    std::cout << "verify descent-recursion: " << (rep.descent_ok ? "ok" : "FAIL") << "\n"
              << "verify leibniz-images:    " << (rep.leibniz_ok ? "ok" : "FAIL") << "\n"
              << "verify word-counts:       " << (rep.word_count_ok ? "ok" : "FAIL") << "\n"
              << "verify positivity:        " << (rep.positive_ok ? "ok" : "FAIL") << "\n";
    if (!rep.all_ok()) {
        std::cout << "verify: " << rep.detail << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_stanley(const std::string& w_s, bool verify, bool json) {
    const PermutationZ w = PermutationZ::parse(w_s);
    const FormalSum<Partition> got = stanley_coeffs(w);
    print_sum(got, json);
    if (!verify) return kExitOk;
    const FormalSum<Partition> want = oracle::stanley_schur_expand(w);
    if (got != want) {
        const FormalSum<Partition> diff = got - want;
        for (const auto& [lam, c] : diff)
            std::cout << "mismatch " << lam.str() << ": operator=" << want.coeff(lam) + c
                      << " oracle=" << want.coeff(lam) << "\n";
        return kExitMismatch;
    }
    std::cout << "verify: ok\n";
    return kExitOk;
}

int cmd_identity(const std::string& which, const std::string& lam_s) {
    const Partition lam = Partition::parse(lam_s);
    DiagElement got;
    if (which == "jt-h")
        got = jacobi_trudi_h(lam);
    else if (which == "jt-e")
        got = jacobi_trudi_e(lam);
    else
        got = giambelli(lam);
    if (got == DiagElement::unit(lam)) {
        std::cout << "pass\n";
        return kExitOk;
    }
    std::cout << "fail: determinant evaluates to\n" << sum_to_text(got);
    return kExitMismatch;
}

int cmd_suite(int max_size, const std::string& csv, bool json) {
    CriteriaOptions opt;
    opt.max_size = max_size;
    opt.bench_csv = csv;
    const auto results = run_all_criteria(opt);
    bool all = true;
    if (json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : results) {
            out.push_back({{"id", r.id},
                           {"name", r.name},
                           {"pass", r.pass},
                           {"seconds", r.seconds},
                           {"detail", r.detail}});
            all = all && r.pass;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::printf("[%2d/%d] %s %-26s (%.2fs) — %s\n", r.id, kCriterionCount,
                        r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                        r.detail.c_str());
            all = all && r.pass;
        }
        std::printf("%s\n", all ? "all criteria pass" : "FAILURES present");
    }
    return all ? kExitOk : kExitMismatch;
}

int cmd_bench(const std::string& which, int max_size, const std::string& csv) {
    const std::vector<BenchRow> rows =
        which == "lr" ? bench_lr(max_size) : bench_mult_ss(max_size);
    std::printf("suite,size,instances,operator_seconds,oracle_seconds\n");
    for (const auto& r : rows)
        std::printf("%s,%d,%d,%.6f,%.6f\n", r.suite.c_str(), r.size, r.instances,
                    r.operator_seconds, r.oracle_seconds);
    if (!csv.empty()) write_bench_csv(rows, csv);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus of corner operators on Schur and Schubert expansions"};
    app.require_subcommand(1);

    std::string lam_s, mu_s, w_s, op_s, elem_s, basis, cache_path, csv, which;
    bool verify = false, json = false;
    int max_size = 0;

    CLI::App* lr = app.add_subcommand("lr", "Littlewood-Richardson expansion of s_lambda * s_mu");
    lr->add_option("lambda", lam_s, "first partition, e.g. 2,1")->required();
    lr->add_option("mu", mu_s, "second partition")->required();
    lr->add_flag("--verify", verify, "cross-check against the tableau oracle");
    lr->add_flag("--json", json, "JSON output");

    CLI::App* ap = app.add_subcommand("apply", "apply an operator expression to an element");
    ap->add_option("--basis", basis, "partition or permutation")
        ->required()
        ->check(CLI::IsMember({"partition", "permutation"}));
    ap->add_option("--op", op_s, "operator expression, e.g. \"[xi,nabla]\"")->required();
    ap->add_option("--elem", elem_s, "element, e.g. \"1*4,3,1\"")->required();
    ap->add_flag("--json", json, "JSON output");

    CLI::App* ms = app.add_subcommand("mult-ss", "expand s_lambda times a Schubert class");
    ms->add_option("--partition", lam_s, "Schur factor")->required();
    ms->add_option("--perm", w_s, "window form c1,...,cn@a (@1 default)")->required();
    ms->add_flag("--verify", verify, "run the full verification report");
    ms->add_option("--cache", cache_path, "expansion cache file (default $DIFFSCHUB_CACHE)");
    ms->add_flag("--json", json, "JSON output");

    CLI::App* st = app.add_subcommand("stanley", "Schur expansion of a Stanley symmetric function");
    st->add_option("--perm", w_s, "window form c1,...,cn@a")->required();
    st->add_flag("--verify", verify, "cross-check the compatible-sequence oracle");
    st->add_flag("--json", json, "JSON output");

    CLI::App* id = app.add_subcommand("identity", "evaluate a determinantal identity");
    id->add_option("which", which, "jt-h, jt-e or giambelli")
        ->required()
        ->check(CLI::IsMember({"jt-h", "jt-e", "giambelli"}));
    id->add_option("lambda", lam_s, "partition")->required();

    CLI::App* su = app.add_subcommand("suite", "run the full acceptance battery");
    su->add_option("--max-size", max_size, "cap sweep bounds for a quicker pass");
    su->add_option("--csv", csv, "also write the benchmark table here");
    su->add_flag("--json", json, "JSON summary");

    CLI::App* be = app.add_subcommand("bench", "wall-time trend: operator recursion vs oracle");
    be->add_option("which", which, "lr or mult-ss")
        ->required()
        ->check(CLI::IsMember({"lr", "mult-ss"}));
    be->add_option("--max-size", max_size, "largest instance size")->default_val(7);
    be->add_option("--csv", csv, "write the table to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (lr->parsed()) return cmd_lr(lam_s, mu_s, verify, json);
        if (ap->parsed()) return cmd_apply(basis, op_s, elem_s, json);
        if (ms->parsed()) return cmd_mult_ss(lam_s, w_s, verify, cache_path, json);
        if (st->parsed()) return cmd_stanley(w_s, verify, json);
        if (id->parsed()) return cmd_identity(which, lam_s);
        if (su->parsed()) return cmd_suite(max_size, csv, json);
        if (be->parsed()) return cmd_bench(which, max_size, csv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MalformedWord& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
