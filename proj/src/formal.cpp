#include "baskets/formal.hpp"

#include "baskets/level.hpp"

namespace baskets {

Rat k_cubed(const FormalBasket& f) {
    return -sigma(f.basket) + sigma_prime(f.basket) + 6 * f.chi + 2 * f.chi2;
}

Int chi_m(const FormalBasket& f, Int m) {
    if (m < 2) throw Error("chi_m defined for m >= 2");
    if (m == 2) return f.chi2;
    const Int sig = sigma(f.basket);
    Rat acc = -sig + 10 * f.chi + 5 * f.chi2;  // chi_3
    const Rat k3ms = k_cubed(f) - sigma_prime(f.basket);  // packing-invariant
    for (Int j = 3; j < m; ++j)
        acc += Rat(j * j, 2) * k3ms + Rat(j, 2) * sig - 2 * f.chi +
               delta_n_basket(f.basket, j);
    if (denominator(acc) != 1)
        throw NonIntegerChi("chi_" + std::to_string(m) +
                            " is not an integer: " + to_string(acc));
    return static_cast<Int>(numerator(acc));
}

Int delta_from_profile(const PluriProfile& p, Int n) {
    const auto& P = p.P;
    const Int c = p.chi;
    switch (n) {
        case 3: return 5 * c - 4 * P[3] + P[4];
        case 4: return 14 * c - 6 * P[3] - P[4] + P[5];
        case 5: return 27 * c - 10 * P[3] - P[5] + P[6];
        case 6: return 44 * c - 15 * P[3] - P[6] + P[7];
        case 7: return 65 * c - 21 * P[3] - P[7] + P[8];
        case 8: return 90 * c - 28 * P[3] - P[8] + P[9];
        case 9: return 119 * c - 36 * P[3] - P[9] + P[10];
        case 10: return 152 * c - 45 * P[3] - P[10] + P[11];
        case 11: return 189 * c - 55 * P[3] - P[11] + P[12];
        case 12: return 230 * c - 66 * P[3] - P[12] + P[13];
        default: throw Error("delta_from_profile: n must be in 3..12");
    }
}

Basket solve_b0(const PluriProfile& p) {
    const Int n12 = delta_from_profile(p, 3);
    const Int n13 = delta_from_profile(p, 4) - 2 * n12;
    const Int n15 = p.case_tag == CaseTag::case_i ? p.eps() : 0;
    const Int n16 = p.case_tag == CaseTag::case_i ? 0 : 1;
    const Int n14 = p.sigma() - n12 - n13 - n15 - n16;
    const std::pair<Pair, Int> slots[] = {
        {{1, 2}, n12}, {{1, 3}, n13}, {{1, 4}, n14},
        {{1, 5}, n15}, {{1, 6}, n16}};
    std::vector<Basket::Entry> es;
    for (const auto& [pair, cnt] : slots) {
        if (cnt < 0)
            throw InfeasibleProfile("B^(0) slot " + to_string(pair) +
                                    " negative: " + std::to_string(cnt));
        if (cnt > 0) es.push_back({cnt, pair});
    }
    return Basket(std::move(es));
}

}  // namespace baskets
