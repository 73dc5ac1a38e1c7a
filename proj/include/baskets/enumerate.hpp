#pragma once

#include <optional>
#include <string>
#include <vector>

#include "baskets/tables.hpp"

namespace baskets {

struct FilterConfig {
    bool slots_nonneg = true;    // F1: all coefficients >= 0 at every level
    bool eps_nonneg = true;      // F2: every eps_n >= 0 (and case-i eps >= 0)
    bool regime = true;          // F3: P2=0, Pm<=1 (m<=11), P12=2, chi>=2
    bool product_rule = true;    // F4: P_{a+b} >= P_a * P_b, a,b>=2, a+b<=13
    bool delta_consistency = true;  // F5: Delta^j(B^12) == profile, 3<=j<=12

    bool enabled(const std::string& name) const;
    void disable(const std::string& name);  // throws Error on unknown name
};

struct ClassRecord {
    PluriProfile profile;  // witness parameters (first found in scan order)
    CoeffVector b12;
    Rat k3;

    // dedup/sort key: (chi, P3..P11, level-12 counts)
    std::vector<Int> key() const;
};

// Exhaustive scan of the parameter grid; deduplicated on key(); sorted by
// key(). Deterministic for any jobs >= 1.
std::vector<ClassRecord> enumerate_classes(CaseTag tag,
                                           const FilterConfig& cfg = {},
                                           int jobs = 1);

// Recomputes every level two ways (closed form vs unpack_to_level(B^12))
// and eps_n two ways; empty vector means clean.
std::vector<std::string> validate_class(const ClassRecord& r);

}  // namespace baskets
