#include "tmdd/mdd.hpp"

#include "doctest.h"

#include <memory>
#include <set>
#include <sstream>

using namespace tmdd;

namespace {

// the 3-DD over {e1,e2,e3} holding exactly one element of each of the two
// colors: {({e1},{e2}), ({e1},{e3}), ({e2},{e1}), ({e2},{e3}),
//          ({e3},{e1}), ({e3},{e2})}
Mdd one_of_each_color() {
    auto st = std::make_shared<MddStore>(3, 3);
    NodeRef bot = st->bottom(), top = st->top();
    NodeRef n31 = st->make_node(3, {bot, bot, top});  // still needs a color-2 pick
    NodeRef n32 = st->make_node(3, {bot, top, bot});
    NodeRef n33 = st->make_node(3, {top, bot, bot});
    NodeRef n21 = st->make_node(2, {bot, n31, n32});
    NodeRef n22 = st->make_node(2, {n31, bot, n33});
    NodeRef n23 = st->make_node(2, {n32, n33, bot});
    NodeRef root = st->make_node(1, {n21, n22, n23});
    return Mdd{st, root};
}

}  // namespace

TEST_CASE("make_node reductions and hash-consing") {
    auto st = std::make_shared<MddStore>(3, 5);
    CHECK(st->make_node(3, {st->bottom(), st->bottom(), st->bottom()}) == st->bottom());
    NodeRef a = st->make_node(5, {st->top(), st->bottom(), st->bottom()});
    NodeRef b = st->make_node(5, {st->top(), st->bottom(), st->bottom()});
    CHECK(a == b);
    CHECK(st->label(a) == 5);

    CHECK_THROWS_AS(st->make_node(0, {a, a, a}), std::invalid_argument);
    CHECK_THROWS_AS(st->make_node(6, {a, a, a}), std::invalid_argument);
    // child label must be label+1 or terminal
    CHECK_THROWS_AS(st->make_node(3, {a, a, a}), std::invalid_argument);
    NodeRef c4 = st->make_node(4, {a, st->bottom(), st->bottom()});
    CHECK(st->child(c4, 0) == a);
    CHECK(st->child(c4, 1) == st->bottom());
}

TEST_CASE("the example 3-DD has 7 non-terminal nodes") {
    Mdd d = one_of_each_color();
    CHECK(d.store->node_count() == 2 + 7);
    CHECK(width(d) == 3);
    auto counts = level_node_counts(d);
    CHECK(counts[1] == 1);
    CHECK(counts[2] == 3);
    CHECK(counts[3] == 3);
}

TEST_CASE("count_members") {
    Mdd d = one_of_each_color();
    CHECK(count_members(d).value == 6);
    CHECK(count_members(Mdd{d.store, d.store->bottom()}).value == 0);
    CHECK(count_members(Mdd{d.store, d.store->top()}).value == 1);
}

TEST_CASE("enumerate_members") {
    Mdd d = one_of_each_color();
    auto members = enumerate_members(d, 10);
    REQUIRE(members.size() == 6);
    // depth-first with the 0-arc first: skip e1, color e2 with 1, e3 with 2
    CHECK(members[0] == ColoredSubset{{1}, {2}});
    std::set<ColoredSubset> distinct(members.begin(), members.end());
    CHECK(distinct.size() == 6);

    CHECK(enumerate_members(d, 2).size() == 2);
    auto top_only = enumerate_members(Mdd{d.store, d.store->top()}, 10);
    REQUIRE(top_only.size() == 1);
    CHECK(top_only[0] == ColoredSubset{{}, {}});
}

TEST_CASE("contains") {
    Mdd d = one_of_each_color();
    CHECK(contains(d, {{0}, {1}}));
    CHECK(contains(d, {{2}, {0}}));
    CHECK_FALSE(contains(d, {{0, 1}, {2}}));
    CHECK_FALSE(contains(d, {{0}, {}}));
    CHECK_THROWS_AS(contains(d, ColoredSubset{{0}, {0}}), std::invalid_argument);

    // agreement with a linear scan over the enumeration
    auto members = enumerate_members(d, 1000);
    std::set<ColoredSubset> family(members.begin(), members.end());
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            ColoredSubset x{{a}, {b}};
            CHECK(contains(d, x) == (family.count(x) > 0));
        }
}

TEST_CASE("width edge cases") {
    auto st = std::make_shared<MddStore>(2, 4);
    CHECK(width(Mdd{st, st->top()}) == 0);
    NodeRef cur = st->top();
    for (int l = 4; l >= 1; --l) cur = st->make_node(l, {cur, st->bottom()});
    CHECK(width(Mdd{st, cur}) == 1);
    CHECK(count_members(Mdd{st, cur}).value == 1);
}

TEST_CASE("count equals enumeration size and members are distinct") {
    Mdd d = one_of_each_color();
    auto members = enumerate_members(d, 100000);
    CHECK(count_members(d).value == members.size());
    std::set<ColoredSubset> distinct(members.begin(), members.end());
    CHECK(distinct.size() == members.size());
}

TEST_CASE("rebuild_into preserves structure and canonicalizes") {
    Mdd d = one_of_each_color();
    auto st2 = std::make_shared<MddStore>(3, 3);
    NodeRef r1 = rebuild_into(*st2, d);
    NodeRef r2 = rebuild_into(*st2, d);
    CHECK(r1 == r2);
    CHECK(count_members(Mdd{st2, r1}).value == 6);
}

TEST_CASE("dd export round-trips bit-exactly") {
    Mdd d = one_of_each_color();
    std::ostringstream first;
    write_dd(first, d);
    std::istringstream in(first.str());
    Mdd back = read_dd(in);
    CHECK(back.arity() == 3);
    CHECK(back.ground_set_size() == 3);
    CHECK(count_members(back).value == 6);
    std::ostringstream second;
    write_dd(second, back);
    CHECK(first.str() == second.str());
}

TEST_CASE("dd export of terminal roots") {
    auto st = std::make_shared<MddStore>(2, 3);
    for (NodeRef root : {st->bottom(), st->top()}) {
        std::ostringstream out;
        write_dd(out, Mdd{st, root});
        std::istringstream in(out.str());
        Mdd back = read_dd(in);
        CHECK(back.root == root);
        std::ostringstream again;
        write_dd(again, back);
        CHECK(out.str() == again.str());
    }
}

TEST_CASE("family count printing") {
    CHECK(FamilyCount{1023}.decimal() == "1023");
    CHECK(FamilyCount{1023}.scientific() == "1.02e3");
    CHECK(FamilyCount{1026}.scientific() == "1.03e3");
    CHECK(FamilyCount{0}.scientific() == "0");
    CHECK(FamilyCount{7}.scientific() == "7.00e0");
    CHECK(FamilyCount{999'600}.scientific() == "1.00e6");
    boost::multiprecision::cpp_int big = 1;
    for (int i = 0; i < 1349; ++i) big *= 10;
    CHECK(FamilyCount{big * 795 / 100}.scientific() == "7.95e1349");
}
