#include "diffschub/partition.hpp"
#include "doctest.h"

using namespace diffschub;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }
}  // namespace

TEST_CASE("parse and print") {
    CHECK(P("4,3,1").str() == "4,3,1");
    CHECK(P("0").str() == "0");
    CHECK(P("").str() == "0");
    CHECK(P("4,3,1").size() == 8);
    CHECK(P("4,3,1").rows() == 3);
    CHECK(P("4,3,1").part(2) == 3);
    CHECK(P("4,3,1").part(7) == 0);
    CHECK_THROWS_AS(P("1,2"), MalformedWord);   // increasing
    CHECK_THROWS_AS(P("3,-1"), MalformedWord);  // nonpositive part
    CHECK_THROWS_AS(P("a"), MalformedWord);
}

TEST_CASE("removable corners with their contents") {
    const auto rc = removable_corners(P("4,3,1"));
    REQUIRE(rc.size() == 3);
    CHECK(rc[0].first == Box{1, 4});
    CHECK(rc[0].second == P("3,3,1"));
    CHECK(rc[1].first == Box{2, 3});
    CHECK(rc[1].second == P("4,2,1"));
    CHECK(rc[2].first == Box{3, 1});
    CHECK(rc[2].second == P("4,3"));
    CHECK(rc[0].first.content() == 3);
    CHECK(rc[1].first.content() == 1);
    CHECK(rc[2].first.content() == -2);

    CHECK(removable_corners(Partition()).empty());
    const auto one = removable_corners(P("1"));
    REQUIRE(one.size() == 1);
    CHECK(one[0].first == Box{1, 1});
    CHECK(one[0].second == Partition());
}

TEST_CASE("addable corners") {
    const auto empty = addable_corners(Partition());
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].first == Box{1, 1});
    CHECK(empty[0].second == P("1"));

    const auto tri = addable_corners(P("2,1"));
    REQUIRE(tri.size() == 3);
    CHECK(tri[0].first == Box{1, 3});
    CHECK(tri[1].first == Box{2, 2});
    CHECK(tri[2].first == Box{3, 1});

    const auto sq = addable_corners(P("2,2"));
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].first == Box{1, 3});
    CHECK(sq[1].first == Box{3, 1});
}

TEST_CASE("border strips") {
    auto strips = border_strips_removable(P("2"), 2);
    REQUIRE(strips.size() == 1);
    CHECK(strips[0].rest == Partition());
    CHECK(strips[0].height == 1);

    strips = border_strips_removable(P("1,1"), 2);
    REQUIRE(strips.size() == 1);
    CHECK(strips[0].rest == Partition());
    CHECK(strips[0].height == 2);

    CHECK(border_strips_removable(P("2,1"), 2).empty());

    // hook-shaped strip off a staircase: (3,2,1) minus a 3-strip
    strips = border_strips_removable(P("3,2,1"), 3);
    for (const auto& s : strips) CHECK(s.rest.size() == 3);
}

TEST_CASE("hook length tableau counts") {
    CHECK(hook_syt_count(P("2,1")) == 2);
    CHECK(hook_syt_count(P("2,2")) == 2);
    CHECK(hook_syt_count(P("5")) == 1);
    CHECK(hook_syt_count(Partition()) == 1);
    CHECK(hook_syt_count(P("3,2")) == 5);
    CHECK(hook_syt_count(P("2,2,1")) == 5);
}

TEST_CASE("conjugate, compare, contain") {
    CHECK(P("4,3,1").conjugate() == P("3,2,2,1"));
    CHECK(P("3,2,2,1").conjugate() == P("4,3,1"));
    CHECK(lex_compare(P("3"), P("2,1")) > 0);
    CHECK(lex_compare(P("2,1"), P("3")) < 0);
    CHECK(lex_compare(P("2,1"), P("2,1")) == 0);
    CHECK(lex_compare(P("4"), P("2,1")) > 0);  // size decides first
    CHECK(P("4,3,1").contains(P("2,2")));
    CHECK_FALSE(P("2,2").contains(P("3")));

    // canonical storage order: size ascending, lex-greatest first inside
    CHECK(P("3") < P("2,1"));
    CHECK(P("2,1") < P("1,1,1"));
    CHECK(P("1") < P("3"));
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(6, 2).size() == 4);      // parts <= 2
    CHECK(partitions_of(6, -1, 2).size() == 4);  // rows <= 2
    const auto up = partitions_up_to(3);
    REQUIRE(up.size() == 7);  // 1+1+2+3
    CHECK(up.front() == Partition());
    for (std::size_t i = 1; i < up.size(); ++i) CHECK(up[i - 1] < up[i]);
}
