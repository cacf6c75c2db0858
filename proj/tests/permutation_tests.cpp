#include <algorithm>
#include <random>

#include "diffschub/permutation.hpp"
#include "doctest.h"

using namespace diffschub;

namespace {
PermutationZ W(const std::string& s) { return PermutationZ::parse(s); }
}  // namespace

TEST_CASE("window parsing, trimming and printing") {
    CHECK(W("").is_identity());
    CHECK(W("id").is_identity());
    CHECK(W("").length() == 0);
    CHECK(W("").descents().empty());
    CHECK(W("2,1").str() == "2,1@1");        // @1 may be omitted on input
    CHECK(W("1,3,2,4@1").str() == "3,2@2");  // fixed ends trimmed
    CHECK(W("1,2,3").is_identity());
    CHECK_THROWS_AS(W("2,2@1"), MalformedWord);  // not a bijection
    CHECK_THROWS_AS(W("2,4@1"), MalformedWord);  // values must fill the window
    CHECK_THROWS_AS(W("x"), MalformedWord);
}

TEST_CASE("length and descents of the pinned windows") {
    CHECK(W("3,2,7,1,5,4,6@1").length() == 8);
    CHECK(W("2,5,7,1,3,4,6@1").descents() == std::vector<int>{3});
    CHECK(W("3,2,7,1,5,4,6@1").descents() == std::vector<int>{1, 3, 5});
    CHECK(PermutationZ::simple(4).length() == 1);
    CHECK(PermutationZ::simple(-2).descents() == std::vector<int>{-2});
}

TEST_CASE("apply, preimage, inverse") {
    const PermutationZ w = W("3,1,4,2@1");
    CHECK(w.apply(1) == 3);
    CHECK(w.apply(4) == 2);
    CHECK(w.apply(17) == 17);
    CHECK(w.apply(-3) == -3);
    CHECK(w.preimage(3) == 1);
    CHECK(w.inverse().apply(3) == 1);
    CHECK((w.inverse().length()) == w.length());
}

TEST_CASE("simple reflection products") {
    auto [down, d1] = left_s(1, W("2,1@1"));
    CHECK(down.is_identity());
    CHECK(d1 == -1);

    auto [up, d2] = left_s(1, PermutationZ::identity());
    CHECK(up == PermutationZ::simple(1));
    CHECK(d2 == +1);

    auto [w, d3] = left_s(1, W("0,2,3,1,4@0"));
    CHECK(w == W("0,1,3,2,4@0"));
    CHECK(d3 == -1);

    CHECK(PermutationZ::simple(1).shifted(1) == PermutationZ::simple(2));
    CHECK(PermutationZ::simple(1).shifted(1).str() == "3,2@2");
}

TEST_CASE("right multiplication acts on positions") {
    const PermutationZ w = W("3,1,2@1");  // w(1)=3
    auto [ws, d] = right_s(1, w);
    CHECK(ws == W("1,3,2@1"));
    CHECK(d == -1);
    // left vs right: s_k w swaps values, w s_k swaps positions
    CHECK(left_s(1, w).first == W("3,2,1@1"));
}

TEST_CASE("left descents match length drops") {
    std::mt19937_64 rng(5);
    std::vector<int> img(5);
    std::iota(img.begin(), img.end(), 1);
    for (int trial = 0; trial < 40; ++trial) {
        std::shuffle(img.begin(), img.end(), rng);
        const PermutationZ w(1, img);
        const auto lds = left_descents(w);
        for (int k = -1; k <= 6; ++k) {
            const bool is_ld = std::find(lds.begin(), lds.end(), k) != lds.end();
            CHECK(is_ld == (left_s(k, w).second == -1));
            // left descent at k means value k+1 appears before value k
            CHECK(is_ld == (w.preimage(k + 1) < w.preimage(k)));
        }
    }
}

TEST_CASE("reduced words") {
    auto words = reduced_words(W("3,2,1@1"));
    std::sort(words.begin(), words.end());
    REQUIRE(words.size() == 2);
    CHECK(words[0] == std::vector<int>{1, 2, 1});
    CHECK(words[1] == std::vector<int>{2, 1, 2});

    CHECK(reduced_words(PermutationZ::identity()) ==
          std::vector<std::vector<int>>{{}});

    CHECK(reduced_word_count(W("3,2,1@1")) == 2);
    CHECK(reduced_word_count(PermutationZ::identity()) == 1);
    // counts agree with full enumeration on a window-4 sweep
    std::vector<int> img(4);
    std::iota(img.begin(), img.end(), 1);
    do {
        const PermutationZ w(1, img);
        CHECK(reduced_word_count(w) == mpz_class(reduced_words(w).size()));
    } while (std::next_permutation(img.begin(), img.end()));
}

TEST_CASE("the pinned length-8 word is reduced") {
    const std::vector<int> word{1, 2, 1, 4, 6, 5, 4, 3};
    PermutationZ acc;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        auto [next, delta] = left_s(*it, acc);
        CHECK(delta == +1);
        acc = next;
    }
    CHECK(acc == W("3,2,7,1,5,4,6@1"));
}

TEST_CASE("divided differences") {
    const auto one = FormalSum<PermutationZ>::unit(W("2,1@1"));
    CHECK(divided_difference(1, one) ==
          FormalSum<PermutationZ>::unit(PermutationZ::identity()));
    // kills classes without the descent
    CHECK(divided_difference(2, one).is_zero());
}

TEST_CASE("grassmannian codec") {
    const GrassCode g = grass_decode(W("2,5,7,1,3,4,6@1"));
    CHECK(g.descent == 3);
    CHECK(g.shape == Partition::parse("4,3,1"));

    CHECK(grass_encode(0, Partition::parse("1")) == PermutationZ::simple(0));
    CHECK(grass_encode(0, Partition::parse("1")) == W("1,0@0"));
    CHECK(grass_decode(PermutationZ::identity()).shape == Partition());

    CHECK_THROWS_AS(grass_decode(W("3,2,1@1")), NotGrassmannian);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick_k(-3, 3), pick_n(0, 6);
    for (int trial = 0; trial < 500; ++trial) {
        const int k = pick_k(rng);
        const auto shapes = partitions_of(pick_n(rng));
        std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
        const Partition lam = shapes[pick(rng)];
        const PermutationZ w = grass_encode(k, lam);
        CHECK(w.length() == lam.size());
        const GrassCode back = grass_decode(w);
        if (lam.size() > 0) CHECK(back.descent == k);
        CHECK(back.shape == lam);
    }
}

TEST_CASE("lehmer codes") {
    std::mt19937_64 rng(21);
    std::vector<int> img(6);
    std::iota(img.begin(), img.end(), 1);
    for (int trial = 0; trial < 60; ++trial) {
        std::shuffle(img.begin(), img.end(), rng);
        const PermutationZ w(1, img);
        if (w.is_identity() || w.window_start() != 1) continue;
        const auto code = w.lehmer_code();
        int sum = 0;
        for (int d : code) sum += d;
        CHECK(sum == w.length());
        CHECK(from_lehmer_code(code) == w);
    }
}

TEST_CASE("shift conjugation") {
    const PermutationZ w = W("3,1,2@1");
    CHECK(w.shifted(2).window_start() == 3);
    CHECK(w.shifted(2).apply(3) == 5);
    CHECK(w.shifted(-4).shifted(4) == w);
    CHECK(w.shifted(3).length() == w.length());
}
