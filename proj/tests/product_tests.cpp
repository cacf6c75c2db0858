#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>

#include "diffschub/oracle.hpp"
#include "diffschub/product.hpp"
#include "doctest.h"

using namespace diffschub;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }
PermutationZ W(const std::string& s) { return PermutationZ::parse(s); }

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/diffschub-test-" + name) {
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};
}  // namespace

TEST_CASE("product base cases") {
    ProductCache cache;
    const PermutationZ w = W("3,1,4,2@1");
    CHECK(schur_times_schubert(Partition(), w, cache) == SchubElement::unit(w));
    CHECK(schur_times_schubert(P("2,1"), PermutationZ::identity(), cache) ==
          SchubElement::unit(grass_encode(0, P("2,1"))));
}

TEST_CASE("multiplying two single-box classes") {
    ProductCache cache;
    const SchubElement got =
        schur_times_schubert(P("1"), grass_encode(0, P("1")), cache);
    SchubElement want;
    want.add(grass_encode(0, P("2")), 1);
    want.add(grass_encode(0, P("1,1")), 1);
    CHECK(got == want);
}

TEST_CASE("the two-term worked product") {
    ProductCache cache;
    const Partition lam = P("1");
    const PermutationZ w = W("0,2,3,1,4@0").shifted(-2);
    const SchubElement got = schur_times_schubert(lam, w, cache);
    SchubElement want;
    want.add(W("1,2,3,0,4@0").shifted(-2), 1);
    want.add(W("0,2,4,1,3@0").shifted(-2), 1);
    CHECK(got == want);

    const VerifyReport rep = verify_product(lam, w, got, cache);
    CHECK(rep.descent_ok);
    CHECK(rep.leibniz_ok);
    CHECK(rep.word_count_ok);
    CHECK(rep.positive_ok);
    CHECK(rep.all_ok());
}

TEST_CASE("verification catches a perturbed coefficient") {
    ProductCache cache;
    const Partition lam = P("1");
    const PermutationZ w = W("0,2,3,1,4@0").shifted(-2);
    SchubElement mutated = schur_times_schubert(lam, w, cache);
    mutated.add(mutated.begin()->first, Rational(1));
    const VerifyReport rep = verify_product(lam, w, mutated, cache);
    CHECK_FALSE(rep.all_ok());
    CHECK_FALSE(rep.detail.empty());
}

TEST_CASE("grassmannian-only mutations are still caught") {
    ProductCache cache;
    // product with a single descent-0 term: s_1 * S_w for Grassmannian w
    const Partition lam = P("1");
    const PermutationZ w = grass_encode(0, P("2"));
    SchubElement mutated = schur_times_schubert(lam, w, cache);
    mutated.add(grass_encode(0, P("3")), Rational(1));
    const VerifyReport rep = verify_product(lam, w, mutated, cache);
    CHECK_FALSE(rep.all_ok());
}

TEST_CASE("monk products across shifts") {
    ProductCache cache;
    std::mt19937_64 rng(17);
    std::vector<int> img(4);
    std::iota(img.begin(), img.end(), 1);
    int cases = 0;
    for (int trial = 0; trial < 30; ++trial) {
        std::shuffle(img.begin(), img.end(), rng);
        PermutationZ w(1, img);
        if (w.length() > 5) continue;
        w = w.shifted(static_cast<int>(rng() % 5) - 2);
        ++cases;
        const SchubElement got = schur_times_schubert(P("1"), w, cache);
        CHECK(got == oracle::monk_rule(0, w));
        CHECK(verify_product(P("1"), w, got, cache).all_ok());
    }
    CHECK(cases > 0);
}

TEST_CASE("product cache store and lookup") {
    ProductCache cache;
    CHECK(cache.size() == 0);
    SchubElement out;
    CHECK_FALSE(cache.find(P("1"), PermutationZ::simple(1), out));
    schur_times_schubert(P("2"), PermutationZ::simple(1), cache);
    CHECK(cache.size() > 0);
    CHECK(cache.find(P("2"), PermutationZ::simple(1), out));
    cache.clear();
    CHECK(cache.size() == 0);
}

TEST_CASE("cache persistence round-trip") {
    TempFile tmp("cache-roundtrip.json");
    ProductCache a;
    schur_times_schubert(P("2,1"), W("2,1@1"), a);
    schur_times_schubert(P("1"), W("3,1,2@1"), a);
    cache_save(a, tmp.path);

    ProductCache b;
    cache_load(b, tmp.path);
    CHECK(a.snapshot() == b.snapshot());

    // loading the same file again is a no-op union
    cache_load(b, tmp.path);
    CHECK(a.snapshot() == b.snapshot());
}

TEST_CASE("cache conflicts and io errors") {
    CHECK_THROWS_AS(
        [] {
            ProductCache c;
            cache_load(c, "/tmp/diffschub-test-definitely-missing.json");
        }(),
        IoError);

    TempFile bad("cache-badversion.json");
    {
        std::ofstream out(bad.path);
        out << "{\"version\": 9, \"entries\": []}\n";
    }
    CHECK_THROWS_AS(
        [&] {
            ProductCache c;
            cache_load(c, bad.path);
        }(),
        VersionMismatch);

    TempFile tmp("cache-conflict.json");
    ProductCache a;
    schur_times_schubert(P("1"), W("2,1@1"), a);
    cache_save(a, tmp.path);
    ProductCache c;
    c.insert(P("1"), W("2,1@1"), SchubElement::unit(W("2,1@1"), Rational(5)));
    CHECK_THROWS_AS(cache_load(c, tmp.path), ConflictError);
}

TEST_CASE("expansions are positive, integral and homogeneous") {
    ProductCache cache;
    std::mt19937_64 rng(23);
    const auto shapes = partitions_up_to(3);
    std::vector<int> img(4);
    std::iota(img.begin(), img.end(), 1);
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(img.begin(), img.end(), rng);
        const PermutationZ w(1, img);
        const Partition lam = shapes[rng() % shapes.size()];
        const SchubElement got = schur_times_schubert(lam, w, cache);
        for (const auto& [v, c] : got) {
            CHECK(c.is_integer());
            CHECK(c.sign() > 0);
            CHECK(v.length() == lam.size() + w.length());
        }
    }
}
