#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "baskets/pair.hpp"

namespace baskets {

// Finite weighted multiset of Pairs in canonical form:
// entries sorted by b/r descending then r ascending, equal pairs merged,
// weights >= 1. Immutable in spirit: all operations return new baskets.
class Basket {
public:
    struct Entry {
        Int weight;
        Pair pair;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    Basket() = default;
    explicit Basket(std::vector<Entry> entries);
    Basket(std::initializer_list<Entry> entries)
        : Basket(std::vector<Entry>(entries)) {}

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    // total element count (sum of weights)
    Int size() const;

    Int count(const Pair& p) const;

    // this + {p} (weight w)
    Basket with(const Pair& p, Int w = 1) const;
    // this - {p}; throws PairNotPresent
    Basket without(const Pair& p, Int w = 1) const;

    // Replace non-coprime pairs (kb, kr) by k copies of (b, r).
    // Invariant-preserving (sigma, sigma', every Delta^n, K^3).
    Basket reduced() const;

    friend bool operator==(const Basket&, const Basket&) = default;
    friend std::strong_ordering operator<=>(const Basket& x, const Basket& y);

private:
    std::vector<Entry> entries_;
};

Int sigma(const Basket& b);
Rat sigma_prime(const Basket& b);
Int delta_n_basket(const Basket& b, Int n);

// One packing step: remove one copy each of p1, p2, add (b1+b2, r1+r2).
Basket pack(const Basket& b, const Pair& p1, const Pair& p2);

// Text format: one entry per line, "w x (b,r)" ("(b,r)" when w == 1);
// '#' comments; blank lines ignored.
std::string serialize(const Basket& b);
Basket parse_basket(std::istream& in, PairKind kind = PairKind::generalized);
Basket parse_basket_string(const std::string& text,
                           PairKind kind = PairKind::generalized);

}  // namespace baskets
