#include <random>

#include "diffschub/formal_sum.hpp"
#include "diffschub/nullspace.hpp"
#include "diffschub/partition.hpp"
#include "diffschub/rational.hpp"
#include "diffschub/serial.hpp"
#include "diffschub/yops.hpp"
#include "doctest.h"

using namespace diffschub;

TEST_CASE("rational normalization and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational::parse("7/3").str() == "7/3");
    CHECK(Rational::parse("-4/2").str() == "-2");
    CHECK(Rational::parse("5").str() == "5");
    CHECK(Rational(0).is_zero());
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).as_integer() == 2);
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1) / Rational(4) == Rational(1, 4));
}

TEST_CASE("formal sums cancel and purge zeros") {
    DiagElement a;
    a.add(Partition::parse("2,1"), 2);
    a.add(Partition::parse("3"), 1);
    a.add(Partition::parse("2,1"), -2);
    CHECK(a.term_count() == 1);
    CHECK(a.coeff(Partition::parse("3")) == Rational(1));
    CHECK((Rational(0) * a).is_zero());

    DiagElement b = DiagElement::unit(Partition::parse("1"));
    const DiagElement mapped = b.map([](const Partition& lam) {
        return xi(DiagElement::unit(lam));
    });
    CHECK(mapped == DiagElement::unit(Partition()));
}

TEST_CASE("formal sum algebra on random inputs") {
    std::mt19937_64 rng(13);
    const auto shapes = partitions_up_to(5);
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        DiagElement x, y, z;
        for (int i = 0; i < 4; ++i) {
            x.add(shapes[pick(rng)], coeff(rng));
            y.add(shapes[pick(rng)], coeff(rng));
            z.add(shapes[pick(rng)], coeff(rng));
        }
        const Rational c(coeff(rng), 3);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK(c * (x + y) == c * x + c * y);
        CHECK(x - x == DiagElement());
    }
}

TEST_CASE("json round-trip is bit-exact") {
    DiagElement x;
    x.add(Partition::parse("4,3,1"), Rational(22, 7));
    x.add(Partition::parse("2"), Rational(-5));
    CHECK(partition_sum_from_json(sum_to_json(x)) == x);

    FormalSum<PermutationZ> y;
    y.add(PermutationZ::parse("3,1,2@1"), Rational(9));
    y.add(PermutationZ::parse("-1,1,0,2@-1"), Rational(1, 3));
    CHECK(permutation_sum_from_json(sum_to_json(y)) == y);

    CHECK_THROWS_AS(partition_sum_from_json(sum_to_json(y)), ParseError);
}

TEST_CASE("nullspace basics") {
    Matrix m{{Rational(1), Rational(-1)}};
    auto basis = solve_nullspace(m, 2);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == basis[0][1]);
    CHECK(basis[0][0] != Rational(0));

    Matrix id3{{Rational(1), Rational(0), Rational(0)},
               {Rational(0), Rational(1), Rational(0)},
               {Rational(0), Rational(0), Rational(1)}};
    CHECK(solve_nullspace(id3, 3).empty());

    Matrix dep{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    basis = solve_nullspace(dep, 2);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] * Rational(1) + basis[0][1] * Rational(2) == Rational(0));
}

TEST_CASE("nullspace vectors annihilate the matrix exactly") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t rows = 3 + trial % 3, cols = 4 + trial % 4;
        Matrix m(rows, std::vector<Rational>(cols));
        for (auto& row : m)
            for (auto& e : row) e = Rational(entry(rng));
        const auto basis = solve_nullspace(m, cols);
        for (const auto& v : basis)
            for (const auto& row : m) {
                Rational dot;
                for (std::size_t j = 0; j < cols; ++j) dot += row[j] * v[j];
                CHECK(dot == Rational(0));
            }
        // rank-nullity, with the rank recomputed under a reversed pivot order
        CHECK(matrix_rank(m, true) + basis.size() == cols);
    }
}

TEST_CASE("assert_integral flags denominators") {
    DiagElement ok = DiagElement::unit(Partition::parse("2"), Rational(3));
    CHECK_NOTHROW(assert_integral(ok, "test"));
    DiagElement bad = DiagElement::unit(Partition::parse("2"), Rational(1, 2));
    CHECK_THROWS_AS(assert_integral(bad, "test"), InternalInconsistency);
}

TEST_CASE("split_homogeneous groups by degree") {
    DiagElement x;
    x.add(Partition::parse("2,1"), 1);
    x.add(Partition::parse("3"), 2);
    x.add(Partition::parse("1"), 5);
    const auto parts =
        split_homogeneous(x, [](const Partition& lam) { return lam.size(); });
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(1) == DiagElement::unit(Partition::parse("1"), Rational(5)));
    CHECK(parts.at(3).term_count() == 2);
}
