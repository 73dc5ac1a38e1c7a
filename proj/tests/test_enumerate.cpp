#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "baskets/enumerate.hpp"
#include "baskets/errors.hpp"
#include "baskets/level.hpp"

using namespace baskets;

namespace {

std::vector<Int> slot_counts(const ClassRecord& r) {
    std::vector<Int> out;
    for (const auto& [pair, cnt] : r.b12.counts) out.push_back(cnt);
    return out;
}

const ClassRecord* find_by_slots(const std::vector<ClassRecord>& classes,
                                 const std::vector<Int>& slots) {
    for (const auto& r : classes)
        if (slot_counts(r) == slots) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("case (ii) enumeration: exactly two classes") {
    const auto classes = enumerate_classes(CaseTag::case_ii);
    REQUIRE(classes.size() == 2);

    CHECK(slot_counts(classes[0]) ==
          std::vector<Int>{5, 0, 0, 1, 0, 1, 2, 0, 3, 0, 0, 0, 0, 0, 1});
    CHECK(classes[0].k3 == Rat(1, 420));
    CHECK(classes[0].profile.chi == 2);

    CHECK(slot_counts(classes[1]) ==
          std::vector<Int>{4, 0, 1, 0, 0, 2, 1, 0, 4, 0, 0, 0, 0, 0, 1});
    CHECK(classes[1].k3 == Rat(1, 360));
    CHECK(classes[1].profile.chi == 2);
}

TEST_CASE("case (i) enumeration: 149 classes, spot values") {
    const auto classes = enumerate_classes(CaseTag::case_i, {}, 4);
    REQUIRE(classes.size() == 149);

    // the smallest class in key order
    CHECK(slot_counts(classes[0]) ==
          std::vector<Int>{4, 0, 0, 2, 0, 2, 0, 0, 4, 0, 0, 0, 2, 0, 0});
    CHECK(classes[0].k3 == Rat(1, 210));
    CHECK(classes[0].profile.chi == 2);

    // the class containing the extremal witness B_H: the slots record the
    // level-12 unpacking ((7,16) -> (4,9)+(3,7), 2(5,13) -> 2(2,5)+2(3,8)),
    // and the class K^3 belongs to that fully unpacked basket
    const auto* bh = find_by_slots(
        classes, {9, 0, 1, 2, 0, 2, 2, 0, 5, 0, 1, 1, 1, 0, 0});
    REQUIRE(bh != nullptr);
    CHECK(bh->k3 == Rat(19, 3465));
    CHECK(bh->profile.chi == 4);
    CHECK(bh->b12.to_basket() ==
          unpack_to_level(Basket({{9, {1, 2}},
                                  {1, {7, 16}},
                                  {1, {3, 7}},
                                  {2, {5, 13}},
                                  {5, {1, 3}},
                                  {1, {2, 7}},
                                  {1, {3, 11}},
                                  {1, {1, 4}}}),
                          12));

    // every class carries positive volume and a clean cross-check
    for (const auto& r : classes) {
        CHECK(r.k3 > 0);
        CHECK(validate_class(r).empty());
    }
}

TEST_CASE("enumeration is deterministic across job counts") {
    const auto a = enumerate_classes(CaseTag::case_i, {}, 1);
    const auto b = enumerate_classes(CaseTag::case_i, {}, 8);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].key() == b[i].key());
        CHECK(a[i].k3 == b[i].k3);
        CHECK(a[i].profile.P == b[i].profile.P);
        CHECK(a[i].profile.eta == b[i].profile.eta);
        CHECK(a[i].profile.zeta == b[i].profile.zeta);
        CHECK(a[i].profile.alpha == b[i].profile.alpha);
        CHECK(a[i].profile.beta == b[i].profile.beta);
    }
}

TEST_CASE("filter configuration") {
    FilterConfig cfg;
    for (const char* name : {"slots-nonneg", "eps-nonneg", "regime",
                             "product-rule", "delta-consistency"})
        CHECK(cfg.enabled(name));
    cfg.disable("product-rule");
    CHECK_FALSE(cfg.enabled("product-rule"));
    CHECK(cfg.enabled("eps-nonneg"));
    CHECK_THROWS_AS(cfg.disable("no-such-filter"), Error);
    CHECK_THROWS_AS(cfg.enabled("no-such-filter"), Error);

    // dropping a filter can only widen the class list
    const auto base = enumerate_classes(CaseTag::case_ii);
    const auto wide = enumerate_classes(CaseTag::case_ii, cfg);
    CHECK(wide.size() >= base.size());
    for (const auto& r : base)
        CHECK(find_by_slots(wide, slot_counts(r)) != nullptr);
}
