#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "baskets/errors.hpp"
#include "baskets/level.hpp"

using namespace baskets;

TEST_CASE("level sets are Farey chains") {
    for (Int n : {2, 5, 7, 12, 13}) {
        const LevelSet s(n, 64);
        const auto& fr = s.fractions();
        REQUIRE(fr.size() >= 2);
        CHECK(fr.front() == Pair{1, 2});
        for (std::size_t i = 0; i + 1 < fr.size(); ++i) {
            // descending and adjacent
            CHECK(fr[i].b * fr[i + 1].r - fr[i + 1].b * fr[i].r == 1);
        }
        for (const auto& p : fr) {
            CHECK(std::gcd(p.b, p.r) == 1);
            CHECK(2 * p.b <= p.r);
            CHECK((p.r <= n || p.b == 1));
        }
    }
}

TEST_CASE("S^0..S^4 collapse to S^2") {
    // only 1/2 and the unit fractions below n survive at n <= 4
    for (Int n : {2, 3, 4}) {
        const LevelSet s(n, 20);
        for (const auto& p : s.fractions())
            CHECK((p.b == 1));
    }
}

TEST_CASE("membership and neighbors") {
    const LevelSet s(12, 64);
    CHECK(s.contains({5, 12}));
    CHECK(s.contains({10, 24}));  // reduced form is a member
    CHECK(s.contains({1, 17}));
    CHECK_FALSE(s.contains({5, 13}));
    CHECK_FALSE(s.contains({7, 16}));

    const auto [hi, lo] = s.neighbors({7, 16});
    CHECK(hi == Pair{4, 9});
    CHECK(lo == Pair{3, 7});
    CHECK_THROWS_AS(s.neighbors({5, 12}), AlreadyAtLevel);

    const auto [h2, l2] = neighbors(Pair{8, 23}, 12);
    CHECK(h2 == Pair{4, 11});
    CHECK(l2 == Pair{1, 3});
}

TEST_CASE("unpacking known pairs to level 12") {
    const Basket b({{1, {7, 16}}});
    CHECK(unpack_to_level(b, 12) == Basket({{1, {4, 9}}, {1, {3, 7}}}));
    CHECK(unpack_to_level(Basket({{1, {8, 23}}}), 12) ==
          Basket({{1, {4, 11}}, {4, {1, 3}}}));
    CHECK(unpack_to_level(Basket({{1, {10, 23}}}), 12) ==
          Basket({{1, {4, 9}}, {2, {3, 7}}}));
    // members pass through; non-coprime entries unpack through their
    // reduced form
    CHECK(unpack_to_level(Basket({{2, {5, 12}}}), 12) ==
          Basket({{2, {5, 12}}}));
    CHECK(unpack_to_level(Basket({{1, {10, 26}}}), 12) ==
          Basket({{2, {2, 5}}, {2, {3, 8}}}));
}

TEST_CASE("unpacking is elementwise additive") {
    const Basket b({{9, {1, 2}},
                    {1, {7, 16}},
                    {1, {3, 7}},
                    {2, {5, 13}},
                    {5, {1, 3}},
                    {1, {2, 7}},
                    {1, {3, 11}},
                    {1, {1, 4}}});
    Basket acc;
    for (const auto& e : b.entries()) {
        const Basket part =
            unpack_to_level(Basket({{e.weight, e.pair}}), 12);
        for (const auto& pe : part.entries())
            acc = acc.with(pe.pair, pe.weight);
    }
    CHECK(acc == unpack_to_level(b, 12));
}

namespace {
Basket random_basket(std::mt19937& rng, Int max_index) {
    std::uniform_int_distribution<Int> nd(1, 6), rd(2, max_index);
    std::vector<Basket::Entry> es;
    const Int k = nd(rng);
    for (Int i = 0; i < k; ++i) {
        Int r = rd(rng);
        std::uniform_int_distribution<Int> bd(1, r / 2);
        Int b = bd(rng);
        const Int g = std::gcd(b, r);
        es.push_back({nd(rng), {b / g, r / g}});
    }
    return Basket(std::move(es));
}
}  // namespace

TEST_CASE("canonical sequence properties on random baskets") {
    std::mt19937 rng(4242);
    for (int it = 0; it < 1000; ++it) {
        const Basket b = random_basket(rng, 16);
        Basket prev = unpack_to_level(b, 2);
        for (Int n = 3; n <= 16; ++n) {
            const Basket bn = unpack_to_level(b, n);
            // re-unpacking a finer level reproduces the coarser one
            CHECK(unpack_to_level(bn, n - 1) == prev);
            // Delta^j agrees below the level
            for (Int j = 2; j < n; ++j)
                CHECK(delta_n_basket(prev, j) == delta_n_basket(bn, j));
            // Delta^n(B^(n)) == Delta^n(B)
            CHECK(delta_n_basket(bn, n) == delta_n_basket(b, n));
            // eps_n = Delta^n(B^(n-1)) - Delta^n(B^(n)) >= 0
            const Int eps = epsilon_n(b, n);
            CHECK(eps >= 0);
            CHECK(delta_n_basket(prev, n) == delta_n_basket(bn, n) + eps);
            // sigma and sigma' bracketing: unpacking only raises sigma'
            CHECK(sigma(bn) == sigma(b));
            CHECK(sigma_prime(bn) >= sigma_prime(b));
            prev = bn;
        }
    }
}

TEST_CASE("unpack rejects out-of-domain fractions") {
    CHECK_THROWS_AS(unpack_to_level(Basket({{1, {3, 5}}}), 12), DomainError);
}
