#pragma once

#include <utility>
#include <vector>

#include "baskets/basket.hpp"

namespace baskets {

// S^(n): all reduced fractions b/r <= 1/2 with r <= n, plus unit fractions
// 1/r for r > n, descending; consecutive members are Farey-adjacent
// (p1*q2 - p2*q1 == 1), asserted at construction.
class LevelSet {
public:
    // max_index: largest denominator that must be representable.
    LevelSet(Int n, Int max_index);

    Int level() const { return n_; }
    const std::vector<Pair>& fractions() const { return fractions_; }

    // true when the reduced form of p is a member
    bool contains(const Pair& p) const;

    // Consecutive members p1/q1 > b/r > p2/q2; throws AlreadyAtLevel.
    std::pair<Pair, Pair> neighbors(const Pair& p) const;

private:
    Int n_;
    Int max_index_;
    std::vector<Pair> fractions_;
};

std::pair<Pair, Pair> neighbors(const Pair& p, Int n);

// B^(n): each entry with reduced fraction outside S^(n) is replaced by
// a x (p1,q1) + c x (p2,q2), a = b*q2 - r*p2, c = r*p1 - b*q1;
// members of S^(n) pass through unchanged.
Basket unpack_to_level(const Basket& b, Int n);

// eps_n(B) = Delta^n(B^(n-1)) - Delta^n(B^(n)); always >= 0.
Int epsilon_n(const Basket& b, Int n);

}  // namespace baskets
