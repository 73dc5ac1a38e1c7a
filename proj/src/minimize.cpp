#include "baskets/minimize.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "baskets/level.hpp"

namespace baskets {

namespace {

// Level-12 unpacking of a single (gcd-reduced) pair, memoized.
const Basket& unpack12_pair(const Pair& p) {
    static std::map<Pair, Basket> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto it = cache.find(p);
    if (it == cache.end()) {
        const auto [p0, g] = reduce(p);
        it = cache.emplace(p, unpack_to_level(Basket({{g, p0}}), 12)).first;
    }
    return it->second;
}

Basket merge_baskets(const Basket& a, const Basket& b) {
    auto es = a.entries();
    for (const auto& e : b.entries()) es.push_back(e);
    return Basket(std::move(es));
}

bool class_preserving(const Pair& p1, const Pair& p2) {
    const Pair merged{p1.b + p2.b, p1.r + p2.r};
    if (2 * merged.b > merged.r) return false;  // outside the theory's domain
    return unpack12_pair(merged) ==
           merge_baskets(unpack12_pair(p1), unpack12_pair(p2));
}

bool same_fraction(const Pair& p1, const Pair& p2) {
    return p1.b * p2.r == p2.b * p1.r;
}

}  // namespace

std::vector<PackingMove> all_packings(const Basket& b) {
    std::vector<PackingMove> out;
    const auto& es = b.entries();
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i; j < es.size(); ++j) {
            if (i == j && es[i].weight < 2) continue;
            out.push_back(
                {es[i].pair, es[j].pair, pack(b, es[i].pair, es[j].pair)});
        }
    }
    return out;
}

std::vector<PackingMove> admissible_packings(const Basket& b) {
    std::vector<PackingMove> out;
    const auto& es = b.entries();
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const Pair &p1 = es[i].pair, &p2 = es[j].pair;
            if (same_fraction(p1, p2)) continue;
            if (!class_preserving(p1, p2)) continue;
            out.push_back({p1, p2, pack(b, p1, p2).reduced()});
        }
    }
    return out;
}

bool is_minimal_positive(const FormalBasket& f) {
    if (!(k_cubed(f) > 0)) return false;
    const Basket base = f.basket.reduced();
    for (const auto& mv : admissible_packings(base)) {
        if (k_cubed({mv.result, f.chi, f.chi2}) > 0) return false;
    }
    return true;
}

namespace {

struct Search {
    Int chi;
    Int chi2;
    bool memoize;
    std::map<Basket, std::set<Basket>> memo;

    // b is reduced and K^3(b) > 0.
    std::set<Basket> run(const Basket& b) {
        if (memoize) {
            if (auto it = memo.find(b); it != memo.end()) return it->second;
        }
        std::set<Basket> out;
        bool has_positive_child = false;
        for (const auto& mv : admissible_packings(b)) {
            if (!(k_cubed({mv.result, chi, chi2}) > 0)) continue;
            has_positive_child = true;
            auto sub = run(mv.result);
            out.insert(sub.begin(), sub.end());
        }
        if (!has_positive_child) out.insert(b);
        if (memoize) memo.emplace(b, out);
        return out;
    }
};

std::vector<Descendant> descendants_impl(const FormalBasket& f, bool memoize) {
    if (!(k_cubed(f) > 0))
        throw Error("minimal_positive_descendants requires K^3 > 0");
    const Basket root = f.basket.reduced();
    Search s{f.chi, f.chi2, memoize, {}};
    std::vector<Descendant> out;
    for (const auto& b : s.run(root))
        out.push_back({b, k_cubed({b, f.chi, f.chi2}), render_trace(root, b)});
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.k3 != y.k3) return x.k3 < y.k3;
        return x.basket < y.basket;
    });
    return out;
}

}  // namespace

std::vector<Descendant> minimal_positive_descendants(const FormalBasket& f) {
    return descendants_impl(f, true);
}

std::vector<Descendant> minimal_positive_descendants_bruteforce(
    const FormalBasket& f) {
    return descendants_impl(f, false);
}

std::string render_trace(const Basket& root, const Basket& descendant) {
    (void)root;  // groups are recovered from the level-12 unpackings
    std::string out;
    for (const auto& e : descendant.entries()) {
        const Basket u = unpack12_pair(e.pair);
        if (u == Basket({{1, e.pair}})) continue;  // untouched slot
        if (!out.empty()) out += "; ";
        std::string lhs;
        for (const auto& part : u.entries()) {
            if (!lhs.empty()) lhs += ",";
            const Int k = e.weight * part.weight;
            if (k != 1) lhs += std::to_string(k);
            lhs += to_string(part.pair);
        }
        out += lhs + " ≻ ";
        if (e.weight != 1) out += std::to_string(e.weight);
        out += to_string(e.pair);
    }
    return out;
}

GlobalMinimum global_minimum(const std::vector<ClassRecord>& classes,
                             int jobs) {
    std::vector<std::vector<Descendant>> per_class(classes.size());
    const int n = std::max(1, jobs);
    std::vector<std::thread> threads;
    for (int t = 0; t < n; ++t) {
        threads.emplace_back([&, t] {
            for (std::size_t i = t; i < classes.size(); i += n) {
                per_class[i] = minimal_positive_descendants(
                    {classes[i].b12.to_basket(), classes[i].profile.chi, 0});
            }
        });
    }
    for (auto& th : threads) th.join();

    GlobalMinimum gm;
    bool first = true;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (const auto& d : per_class[i]) {
            if (first || d.k3 < gm.k3) {
                gm.k3 = d.k3;
                gm.witnesses.clear();
                first = false;
            }
            if (d.k3 == gm.k3) gm.witnesses.push_back({i, d});
        }
    }
    if (first) throw Error("global_minimum: no classes given");
    return gm;
}

}  // namespace baskets
