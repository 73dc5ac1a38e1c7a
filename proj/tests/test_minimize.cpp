#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "baskets/level.hpp"
#include "baskets/minimize.hpp"

using namespace baskets;

namespace {

bool same_descendants(const std::vector<Descendant>& a,
                      const std::vector<Descendant>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].basket != b[i].basket || a[i].k3 != b[i].k3 ||
            a[i].trace != b[i].trace)
            return false;
    return true;
}

}  // namespace

TEST_CASE("all_packings enumerates every two-element merge") {
    CHECK(all_packings(Basket{}).empty());

    const Basket two({{1, {1, 2}}, {1, {1, 3}}});
    const auto moves = all_packings(two);
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].result == Basket({{1, {2, 5}}}));

    // a doubled entry can be merged with itself, literally
    const Basket dbl({{2, {2, 5}}});
    const auto self = all_packings(dbl);
    REQUIRE(self.size() == 1);
    CHECK(self[0].result == Basket({{1, {4, 10}}}));
    CHECK(self[0].result.reduced() == Basket({{2, {2, 5}}}));

    // three distinct entries: three unordered choices
    CHECK(all_packings(Basket({{1, {1, 2}}, {1, {1, 3}}, {1, {1, 4}}}))
              .size() == 3);
}

TEST_CASE("admissible_packings keeps only class-preserving merges") {
    // equal fractions never count, whatever the representation
    CHECK(admissible_packings(Basket({{2, {2, 5}}})).empty());
    CHECK(admissible_packings(Basket({{1, {2, 5}}, {1, {4, 10}}})).empty());

    // (1,2)+(1,3) -> (2,5) changes the level-12 unpacking: not admissible
    CHECK(admissible_packings(Basket({{1, {1, 2}}, {1, {1, 3}}})).empty());

    // (2,5)+(3,8) -> (5,13) unpacks right back: admissible
    const auto moves =
        admissible_packings(Basket({{1, {2, 5}}, {1, {3, 8}}}));
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].result == Basket({{1, {5, 13}}}));
    CHECK(unpack_to_level(moves[0].result, 12) ==
          Basket({{1, {2, 5}}, {1, {3, 8}}}));

    // (7,16)+(3,7) -> (10,23) unpacks to (4,9)+2(3,7) = the operands' own
    // unpackings, so it stays in the fiber
    const auto deep =
        admissible_packings(Basket({{1, {7, 16}}, {1, {3, 7}}}));
    REQUIRE(deep.size() == 1);
    CHECK(deep[0].result == Basket({{1, {10, 23}}}));
}

TEST_CASE("a basket with no positive admissible child is its own "
          "minimal set") {
    const FormalBasket row1{Basket({{4, {1, 2}},
                                    {2, {3, 7}},
                                    {2, {2, 5}},
                                    {4, {1, 3}},
                                    {2, {1, 4}}}),
                            2, 0};
    const auto desc = minimal_positive_descendants(row1);
    REQUIRE(desc.size() == 1);
    CHECK(desc[0].basket == row1.basket);
    CHECK(desc[0].k3 == Rat(1, 210));
    CHECK(desc[0].trace.empty());
}

TEST_CASE("case (ii) minimal descendants") {
    const auto classes = enumerate_classes(CaseTag::case_ii);
    REQUIRE(classes.size() == 2);

    const auto d1 = minimal_positive_descendants(
        {classes[0].b12.to_basket(), classes[0].profile.chi, 0});
    REQUIRE(!d1.empty());
    CHECK(d1.front().k3 == Rat(1, 2184));
    CHECK(d1.front().basket == Basket({{5, {1, 2}},
                                       {1, {3, 7}},
                                       {1, {5, 13}},
                                       {1, {3, 8}},
                                       {3, {1, 3}},
                                       {1, {1, 6}}}));
    CHECK(d1.front().trace == "(2,5),(3,8) ≻ (5,13)");

    const auto d2 = minimal_positive_descendants(
        {classes[1].b12.to_basket(), classes[1].profile.chi, 0});
    REQUIRE(!d2.empty());
    CHECK(d2.front().k3 == Rat(1, 1170));

    // descendants are sorted, dominated in volume, and class-preserving
    for (std::size_t c = 0; c < 2; ++c) {
        const Basket root = classes[c].b12.to_basket();
        const FormalBasket f{root, classes[c].profile.chi, 0};
        const auto& ds = c == 0 ? d1 : d2;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            CHECK(ds[i].k3 > 0);
            CHECK(ds[i].k3 <= classes[c].k3);
            CHECK(unpack_to_level(ds[i].basket, 12) == root);
            if (i + 1 < ds.size()) CHECK(ds[i].k3 <= ds[i + 1].k3);
            const FormalBasket g{ds[i].basket, f.chi, 0};
            for (Int m = 2; m <= 13; ++m) CHECK(chi_m(g, m) == chi_m(f, m));
        }
    }

    const auto gm = global_minimum(classes);
    CHECK(gm.k3 == Rat(1, 2184));
    REQUIRE(gm.witnesses.size() == 1);
    CHECK(gm.witnesses[0].first == 0);
    CHECK(gm.witnesses[0].second.basket == d1.front().basket);
}

TEST_CASE("memoized search matches the brute-force reference") {
    const auto& slots = level12_slots(CaseTag::case_i);
    std::mt19937 rng(20260826);
    std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
    std::uniform_int_distribution<int> len(2, 5);

    int compared = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<Basket::Entry> es;
        const int k = len(rng);
        for (int i = 0; i < k; ++i) es.push_back({1, slots[pick(rng)]});
        const Basket b = Basket(std::move(es)).reduced();

        // smallest chi giving positive volume, if any
        FormalBasket f{b, 0, 0};
        while (f.chi <= 4 && !(k_cubed(f) > 0)) ++f.chi;
        if (!(k_cubed(f) > 0)) continue;

        CHECK(same_descendants(minimal_positive_descendants(f),
                               minimal_positive_descendants_bruteforce(f)));
        ++compared;
    }
    CHECK(compared > 100);
}

TEST_CASE("render_trace") {
    const Basket bh({{9, {1, 2}},
                     {1, {7, 16}},
                     {1, {3, 7}},
                     {2, {5, 13}},
                     {5, {1, 3}},
                     {1, {2, 7}},
                     {1, {3, 11}},
                     {1, {1, 4}}});
    const Basket root = unpack_to_level(bh, 12);
    CHECK(render_trace(root, bh) ==
          "(4,9),(3,7) ≻ (7,16); 2(2,5),2(3,8) ≻ 2(5,13)");
    CHECK(render_trace(root, root).empty());
}
