#pragma once

#include <compare>
#include <string>

#include "baskets/rational.hpp"

namespace baskets {

enum class PairKind { terminal, generalized };

// One singularity type (b, r), possibly weighted inside a Basket.
struct Pair {
    Int b = 0;
    Int r = 1;

    friend bool operator==(const Pair&, const Pair&) = default;

    // Order: fraction b/r descending, then index r ascending.
    // This is the canonical entry order used everywhere.
    friend std::strong_ordering operator<=>(const Pair& x, const Pair& y) {
        // x before y  <=>  x.b/x.r > y.b/y.r, i.e. x.b*y.r > y.b*x.r
        const Int lhs = x.b * y.r, rhs = y.b * x.r;
        if (lhs != rhs) return rhs <=> lhs;
        return x.r <=> y.r;
    }
};

Pair make_pair(Int b, Int r, PairKind kind);

// gcd-reduced fraction plus the multiplicity it carries:
// (4,10) -> ((2,5), 2).
struct Reduced {
    Pair pair;
    Int mult;
};
Reduced reduce(const Pair& p);

// Delta^n(b, r) = delta*b*n - r*delta*(delta+1)/2 with delta = floor(bn/r).
// Defined only for b/r <= 1/2; throws DomainError otherwise.
Int delta_n(const Pair& p, Int n);

// |b1*r2 - b2*r1| == 1.
bool is_prime_packing(const Pair& p1, const Pair& p2);

// (r1*b2 - r2*b1)^2 / (r1*r2*(r1+r2)): exact sigma' loss of the merge.
Rat sigma_prime_drop(const Pair& p1, const Pair& p2);

std::string to_string(const Pair& p);

}  // namespace baskets
