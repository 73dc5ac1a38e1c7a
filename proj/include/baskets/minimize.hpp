#pragma once

#include <string>
#include <vector>

#include "baskets/enumerate.hpp"
#include "baskets/formal.hpp"

namespace baskets {

// Every unordered choice of two element copies, literal Def of a packing.
struct PackingMove {
    Pair p1, p2;
    Basket result;
};
std::vector<PackingMove> all_packings(const Basket& b);

// Class-preserving moves: fractions differ and
// unpack12(merge) == unpack12(p1) (+) unpack12(p2) as multisets.
// Results are kept gcd-reduced. These are the moves that stay inside the
// fiber of the level-12 unpacking, i.e. inside one enumerated class.
std::vector<PackingMove> admissible_packings(const Basket& b);

struct Descendant {
    Basket basket;  // reduced canonical form
    Rat k3;
    std::string trace;  // "(4,9),(3,7) > (7,16); 2(2,5),2(3,8) > 2(5,13)"
};

// All minimal positive baskets dominated by F.basket under admissible
// packings (memoized DFS). Requires k_cubed(F) > 0. `root` is the basket
// traces are rendered against (defaults to F.basket itself).
std::vector<Descendant> minimal_positive_descendants(const FormalBasket& f);

// Reference implementation without memoization, for completeness checks on
// small baskets.
std::vector<Descendant> minimal_positive_descendants_bruteforce(
    const FormalBasket& f);

struct GlobalMinimum {
    Rat k3;
    // every attaining (class index into the input list, descendant)
    std::vector<std::pair<std::size_t, Descendant>> witnesses;
};
GlobalMinimum global_minimum(const std::vector<ClassRecord>& classes,
                             int jobs = 1);

// Net trace from `root` to `descendant` in the conventional shorthand,
// groups ordered by merged fraction descending, joined by "; ".
std::string render_trace(const Basket& root, const Basket& descendant);

}  // namespace baskets
