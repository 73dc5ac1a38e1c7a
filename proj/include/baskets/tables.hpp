#pragma once

#include <map>
#include <vector>

#include "baskets/formal.hpp"

namespace baskets {

// Level-n slot counts as an ordered coefficient vector.
struct CoeffVector {
    Int level = 0;
    // (slot, count), slots descending in b/r; identically-zero slots kept.
    std::vector<std::pair<Pair, Int>> counts;

    Basket to_basket() const;
    friend bool operator==(const CoeffVector&, const CoeffVector&) = default;
};

// The fixed level-12 slot lists.
const std::vector<Pair>& level12_slots(CaseTag tag);

// Closed-form coefficient tables, evaluated at the profile: levels
// 0, 5, 7..12 for both cases. Throws InfeasibleProfile (naming the first
// violated slot) if any count is negative.
std::map<Int, CoeffVector> coefficients(const PluriProfile& p);

// As above but without the negativity check (diagnostics / filter use).
std::map<Int, CoeffVector> coefficients_unchecked(const PluriProfile& p);

// The printed eps_n linear forms: keys 5 (case ii only), 7..12.
std::map<Int, Int> epsilon_forms(const PluriProfile& p);

}  // namespace baskets
