#include "baskets/level.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace baskets {

LevelSet::LevelSet(Int n, Int max_index) : n_(n), max_index_(max_index) {
    if (n < 2) throw Error("level must be >= 2");
    if (max_index < n) throw Error("max_index must be >= level");
    for (Int r = 2; r <= n; ++r)
        for (Int b = 1; 2 * b <= r; ++b)
            if (std::gcd(b, r) == 1) fractions_.push_back({b, r});
    for (Int r = n + 1; r <= max_index; ++r) fractions_.push_back({1, r});
    std::sort(fractions_.begin(), fractions_.end());
    for (std::size_t i = 0; i + 1 < fractions_.size(); ++i) {
        const auto& [p1, q1] = fractions_[i];
        const auto& [p2, q2] = fractions_[i + 1];
        if (p1 * q2 - p2 * q1 != 1)
            throw Error("level set adjacency violated between " +
                        to_string(fractions_[i]) + " and " +
                        to_string(fractions_[i + 1]));
    }
}

bool LevelSet::contains(const Pair& p) const {
    const Pair q = reduce(p).pair;
    return (q.r <= n_ && 2 * q.b <= q.r) || q.b == 1;
}

std::pair<Pair, Pair> LevelSet::neighbors(const Pair& p) const {
    if (contains(p))
        throw AlreadyAtLevel(to_string(p) + " already lies in S^(" +
                             std::to_string(n_) + ")");
    if (p.r > max_index_)
        throw Error("level set built with max_index too small for " +
                    to_string(p));
    // first member with fraction < b/r
    auto it = std::upper_bound(fractions_.begin(), fractions_.end(), p);
    if (it == fractions_.begin() || it == fractions_.end())
        throw Error("no neighbors for " + to_string(p) + " at level " +
                    std::to_string(n_));
    return {*std::prev(it), *it};
}

namespace {

const LevelSet& cached_level_set(Int n, Int max_index) {
    static std::map<std::pair<Int, Int>, LevelSet> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    const Int mi = std::max({max_index, n, Int{64}});  // coarse buckets
    auto [it, inserted] = cache.try_emplace({n, mi}, n, mi);
    return it->second;
}

}  // namespace

std::pair<Pair, Pair> neighbors(const Pair& p, Int n) {
    return cached_level_set(n, p.r).neighbors(p);
}

Basket unpack_to_level(const Basket& b, Int n) {
    // S^(0) = ... = S^(4): unit fractions plus 1/2, which is the n = 2 set.
    n = std::max<Int>(n, 2);
    std::vector<Basket::Entry> out;
    for (const auto& e : b.entries()) {
        const auto& [bb, rr] = e.pair;
        if (2 * bb > rr)
            throw DomainError("cannot unpack " + to_string(e.pair) +
                              ": b/r > 1/2");
        if (cached_level_set(n, rr).contains(e.pair)) {
            out.push_back(e);
            continue;
        }
        const auto [hi, lo] = neighbors(e.pair, n);
        const Int a = bb * lo.r - rr * lo.b;
        const Int c = rr * hi.b - bb * hi.r;
        if (a <= 0 || c <= 0 || a * hi.b + c * lo.b != bb ||
            a * hi.r + c * lo.r != rr)
            throw Error("unpacking decomposition failed for " +
                        to_string(e.pair));
        out.push_back({e.weight * a, hi});
        out.push_back({e.weight * c, lo});
    }
    return Basket(std::move(out));
}

Int epsilon_n(const Basket& b, Int n) {
    const Int e = delta_n_basket(unpack_to_level(b, n - 1), n) -
                  delta_n_basket(unpack_to_level(b, n), n);
    if (e < 0)
        throw Error("epsilon_" + std::to_string(n) + " negative: unpacking bug");
    return e;
}

}  // namespace baskets
