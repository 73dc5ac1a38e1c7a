#pragma once

#include <array>

#include "baskets/basket.hpp"

namespace baskets {

// Formal triple (B, chi~, chi2~) carrying chi_m and K^3.
struct FormalBasket {
    Basket basket;
    Int chi = 0;   // chi~ = chi(O_X)
    Int chi2 = 0;  // chi2~ = P_2, >= 0
};

// K^3 = -sigma + sigma' + 6*chi~ + 2*chi2~
Rat k_cubed(const FormalBasket& f);

// chi_2 = chi2~, chi_3 = -sigma + 10*chi~ + 5*chi2~, then
// chi_{m+1} - chi_m = (m^2/2)(K^3 - sigma') + (m/2)sigma - 2chi~ + Delta^m(B).
// Throws NonIntegerChi if the rational intermediate is not an integer.
Int chi_m(const FormalBasket& f, Int m);

// K^3 > 0 and every admissible packing sends K^3 <= 0. Admissible moves are
// the class-preserving ones: merges whose result unpacks at level 12 to the
// disjoint union of the operands' unpackings (see minimize.hpp); merges of
// equal fractions change no invariant and are excluded.
bool is_minimal_positive(const FormalBasket& f);

enum class CaseTag { case_i, case_ii };

// (chi, P_2..P_13) plus packing-count parameters (eta, zeta, alpha, beta).
struct PluriProfile {
    Int chi = 2;
    std::array<Int, 14> P{};  // P[m] valid for 2 <= m <= 13; P[0], P[1] unused
    Int eta = 0;
    Int zeta = 0;  // unused in case (ii)
    Int alpha = 0;
    Int beta = 0;
    CaseTag case_tag = CaseTag::case_i;

    // epsilon = -P3 + P4 + P5 + P6 - P7 (= n^0_{1,5} in case (i))
    Int eps() const { return -P[3] + P[4] + P[5] + P[6] - P[7]; }
    Int sigma() const { return 10 * chi - P[3]; }
    Int tau() const { return 4 * chi - P[3]; }
};

// The linear forms Delta^n(chi, P) for 3 <= n <= 12.
Int delta_from_profile(const PluriProfile& p, Int n);

// Level-0 basket: slots (1,2),(1,3),(1,4),(1,5),(1,6).
// Case (i): (n_{1,5}, n_{1,6}) = (eps, 0); case (ii): (0, 1).
// Throws InfeasibleProfile if any slot count is negative.
Basket solve_b0(const PluriProfile& p);

}  // namespace baskets
