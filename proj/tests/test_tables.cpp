#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "baskets/errors.hpp"
#include "baskets/level.hpp"
#include "baskets/tables.hpp"

using namespace baskets;

namespace {

// Every profile on a small parameter grid; feasibility is decided by
// coefficients() itself.
std::vector<PluriProfile> grid(CaseTag tag) {
    std::vector<PluriProfile> out;
    for (Int chi = 2; chi <= 4; ++chi)
        for (Int mask = 0; mask < (1 << 9); ++mask)
            for (Int p12 = 1; p12 <= 2; ++p12)
                for (Int p13 = 0; p13 <= 1; ++p13)
                    for (Int eta = 0; eta <= 1; ++eta)
                        for (Int zeta = 0; zeta <= 1; ++zeta) {
                            PluriProfile p;
                            p.case_tag = tag;
                            p.chi = chi;
                            for (Int m = 3; m <= 11; ++m)
                                p.P[m] = (mask >> (m - 3)) & 1;
                            p.P[12] = p12;
                            p.P[13] = p13;
                            p.eta = eta;
                            p.zeta = zeta;
                            out.push_back(p);
                        }
    return out;
}

}  // namespace

TEST_CASE("level-12 slot lists") {
    const auto& si = level12_slots(CaseTag::case_i);
    const auto& sii = level12_slots(CaseTag::case_ii);
    CHECK(si.size() == 15);
    CHECK(sii.size() == 15);
    CHECK(si.front() == Pair{1, 2});
    CHECK(si.back() == Pair{1, 5});
    CHECK(sii.back() == Pair{1, 6});
    // fractions strictly descending, all in S^(12)
    const LevelSet s12(12, 16);
    for (const auto& slots : {si, sii})
        for (std::size_t i = 0; i < slots.size(); ++i) {
            CHECK(s12.contains(slots[i]));
            if (i + 1 < slots.size())
                CHECK(slots[i].b * slots[i + 1].r >
                      slots[i + 1].b * slots[i].r);
        }
}

TEST_CASE("closed-form tables agree with the unpack operator on a grid") {
    Int feasible = 0, consistent = 0;
    for (const CaseTag tag : {CaseTag::case_i, CaseTag::case_ii}) {
        for (const PluriProfile& p : grid(tag)) {
            std::map<Int, CoeffVector> coef;
            try {
                coef = coefficients(p);
            } catch (const InfeasibleProfile&) {
                continue;
            }
            ++feasible;

            // expected level structure
            std::vector<Int> keys;
            for (const auto& [n, cv] : coef) {
                keys.push_back(n);
                CHECK(cv.level == n);
            }
            CHECK(keys == std::vector<Int>{0, 5, 7, 8, 9, 10, 11, 12});

            const Basket b12 = coef.at(12).to_basket();
            CHECK(coef.at(12).counts.size() == level12_slots(tag).size());

            Int prev = -1;
            for (const Int n : keys) {
                const Basket bn = coef.at(n).to_basket();
                // sigma is preserved at every level
                CHECK(sigma(bn) == p.sigma());
                // consecutive levels are related by the unpack operator
                if (prev >= 0) {
                    const Basket prev_closed = coef.at(prev).to_basket();
                    CHECK(unpack_to_level(bn, prev) == prev_closed);
                }
                prev = n;
            }
            // the whole chain also follows from B^12 directly
            for (const Int n : keys)
                CHECK(unpack_to_level(b12, n) == coef.at(n).to_basket());

            // printed eps_n forms match the operator definition
            for (const auto& [n, e] : epsilon_forms(p))
                CHECK(e == epsilon_n(b12, n));

            // the Delta forms match the basket exactly when B^12 is
            // Delta-consistent (the enumerator's F5 condition); then the
            // agreement propagates to every lower level of the chain
            bool cons = true;
            for (Int j = 3; j <= 12; ++j)
                if (delta_n_basket(b12, j) != delta_from_profile(p, j))
                    cons = false;
            if (cons) {
                ++consistent;
                for (const Int n : keys) {
                    const Basket bn = coef.at(n).to_basket();
                    for (Int j = 3; j <= (n == 0 ? 4 : n); ++j)
                        CHECK(delta_n_basket(bn, j) ==
                              delta_from_profile(p, j));
                }
            }
        }
    }
    // the grid must actually exercise both branches: plenty of feasible
    // profiles, most Delta-consistent, some (case ii) not
    CHECK(feasible >= 200);
    CHECK(consistent >= 150);
    CHECK(feasible - consistent >= 20);
}

TEST_CASE("coefficients_unchecked reports negative slots that "
          "coefficients rejects") {
    PluriProfile p;  // chi = 2, all P zero: n^0 counts fine, but P12 = 0
    p.case_tag = CaseTag::case_i;
    p.P[3] = 2;  // drives n^0_{1,5} = eps = -2 < 0
    CHECK_THROWS_AS(coefficients(p), InfeasibleProfile);
    const auto coef = coefficients_unchecked(p);
    bool negative = false;
    for (const auto& [n, cv] : coef)
        for (const auto& [slot, cnt] : cv.counts)
            if (cnt < 0) negative = true;
    CHECK(negative);
}
