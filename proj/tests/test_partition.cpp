#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpair/partition.hpp"

using namespace mpair;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

}  // namespace

TEST_CASE("partition counts match A000041") {
    const int a000041[] = {1, 1,  2,  3,  5,  7,  11, 15,  22,  30,  42,
                           56, 77, 101, 135, 176, 231, 297, 385, 490, 627, 792};
    for (int n = 0; n <= 21; ++n) {
        CHECK(static_cast<int>(partitions_of(n).size()) == a000041[n]);
    }
}

TEST_CASE("canonical order is descending lexicographic") {
    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == P({3}));
    CHECK(p3[1] == P({2, 1}));
    CHECK(p3[2] == P({1, 1, 1}));

    for (int n : {5, 8}) {
        auto all = partitions_of(n);
        for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i].canonical_before(all[i + 1]));
    }
}

TEST_CASE("partitions_of honors filters") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition()});

    PartitionFilter f;
    f.parts_from = std::set<int>{1, 2, 4, 8};
    auto got = partitions_of(6, f);
    std::vector<Partition> want = {P({4, 2}),          P({4, 1, 1}),    P({2, 2, 2}),
                                   P({2, 2, 1, 1}),    P({2, 1, 1, 1, 1}),
                                   P({1, 1, 1, 1, 1, 1})};
    CHECK(got == want);

    for (const Partition& p : partitions_of(9, 4)) CHECK(p.part(0) <= 4);
}

TEST_CASE("exponent notation round-trips") {
    Partition p = P({4, 2, 1, 1});
    CHECK(p.to_string() == "[4,2,1,1]");
    CHECK(p.exponent_form() == "4^1 2^1 1^2");
    CHECK(Partition::parse("4^1 2^1 1^2") == p);
    CHECK(Partition::parse("[4,2,1,1]") == p);
    CHECK(Partition::parse("1^2 4^1 2^1") == p);  // any input order normalizes
    CHECK(Partition::parse("(2^3)") == P({2, 2, 2}));
    CHECK(Partition::parse("(4,2,1,1)") == p);
    CHECK(Partition::parse("[]") == Partition());
    CHECK(Partition::parse("()") == Partition());
    CHECK(Partition().to_string() == "[]");
    CHECK_THROWS_AS(Partition::parse("[0,1]"), ParseError);
    CHECK_THROWS_AS(Partition::parse("nope"), ParseError);
}

TEST_CASE("derived quantities") {
    Partition p = P({4, 2, 1, 1});
    CHECK(p.size() == 8);
    CHECK(p.length() == 4);
    CHECK(p.multiplicity(1) == 2);
    CHECK(p.multiplicity(3) == 0);
    CHECK(p.conjugate() == P({4, 2, 1, 1}));  // self-conjugate example
    CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
    CHECK(P({3, 1}).conjugate().conjugate() == P({3, 1}));
    CHECK(p.without_value(1) == P({4, 2}));

    CHECK(dominates(P({3}), P({2, 1})));
    CHECK(dominates(P({2, 1}), P({1, 1, 1})));
    CHECK(!dominates(P({2, 2}), P({3, 1})));
    CHECK(!dominates(P({3, 1}), P({3})));  // different sizes never dominate
}
