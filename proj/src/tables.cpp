#include "baskets/tables.hpp"

#include <algorithm>

#include "baskets/level.hpp"

namespace baskets {

Basket CoeffVector::to_basket() const {
    std::vector<Basket::Entry> es;
    for (const auto& [pair, cnt] : counts)
        if (cnt > 0) es.push_back({cnt, pair});
    return Basket(std::move(es));
}

const std::vector<Pair>& level12_slots(CaseTag tag) {
    static const std::vector<Pair> slots_i = {
        {1, 2}, {5, 11}, {4, 9},  {3, 7}, {5, 12}, {2, 5}, {3, 8}, {4, 11},
        {1, 3}, {3, 10}, {2, 7},  {3, 11}, {1, 4}, {2, 9}, {1, 5}};
    static const std::vector<Pair> slots_ii = {
        {1, 2}, {5, 11}, {4, 9},  {3, 7}, {5, 12}, {2, 5}, {3, 8}, {4, 11},
        {1, 3}, {3, 10}, {2, 7},  {3, 11}, {1, 4}, {1, 5}, {1, 6}};
    return tag == CaseTag::case_i ? slots_i : slots_ii;
}

namespace {

using Row = std::vector<std::pair<Pair, Int>>;

CoeffVector make_level(Int level, Row row) {
    return CoeffVector{level, std::move(row)};
}

// Levels 0, 5, 7..12 in case (i). Forms are linear in
// (chi, P3..P13, eta, zeta, alpha, beta).
std::map<Int, CoeffVector> coeffs_case_i(const PluriProfile& p) {
    const Int c = p.chi;
    const auto& P = p.P;
    const Int p3 = P[3], p4 = P[4], p5 = P[5], p6 = P[6], p7 = P[7],
              p8 = P[8], p9 = P[9], p10 = P[10], p11 = P[11], p12 = P[12],
              p13 = P[13];
    const Int h = p.eta, z = p.zeta, a = p.alpha, bt = p.beta;
    const Int eps = p.eps();  // n^0_{1,5}

    const Int n12_0 = 5 * c - 4 * p3 + p4;
    const Int n13_0 = 4 * c + 2 * p3 - 3 * p4 + p5;
    const Int n14_0 = p.sigma() - n12_0 - n13_0 - eps;
    const Int e5 = 2 * c - p4 + p5 - 2 * p6 + p7;  // eps_5

    std::map<Int, CoeffVector> out;
    out[0] = make_level(0, {{{1, 2}, n12_0},
                            {{1, 3}, n13_0},
                            {{1, 4}, n14_0},
                            {{1, 5}, eps},
                            {{1, 6}, 0}});
    out[5] = make_level(5, {{{1, 2}, n12_0 - e5},
                            {{2, 5}, e5},
                            {{1, 3}, n13_0 - e5},
                            {{1, 4}, n14_0},
                            {{1, 5}, eps},
                            {{1, 6}, 0}});
    out[7] = make_level(
        7, {{{1, 2}, 2 * c - 3 * p3 + 2 * p4 - p5 + p6 - 2 * p7 + p8 + h},
            {{3, 7}, c - p3 + p6 + p7 - p8 - h},
            {{2, 5}, c + p3 - p4 + p5 - 3 * p6 + p8 + h},
            {{1, 3}, 2 * c + 2 * p3 - 2 * p4 + 2 * p6 - p7 - h},
            {{2, 7}, h},
            {{1, 4}, c + 2 * p3 + p4 - 2 * p5 - p6 + p7 - h},
            {{1, 5}, eps}});
    out[8] = make_level(
        8, {{{1, 2}, 2 * c - 3 * p3 + 2 * p4 - p5 + p6 - 2 * p7 + p8 + h},
            {{3, 7}, c - p3 + p6 + p7 - p8 - h},
            {{2, 5}, c + 2 * p3 - 4 * p6 + p9 + h},
            {{3, 8}, -p3 - p4 + p5 + p6 + p8 - p9},
            {{1, 3}, 2 * c + 3 * p3 - p4 - p5 + p6 - p7 - p8 + p9 - h},
            {{2, 7}, h},
            {{1, 4}, c + 2 * p3 + p4 - 2 * p5 - p6 + p7 - h},
            {{1, 5}, eps}});
    out[9] = make_level(
        9, {{{1, 2}, 2 * c - 3 * p3 + 2 * p4 - p5 + p6 - 2 * p7 + p8 + h - z},
            {{4, 9}, z},
            {{3, 7}, c - p3 + p6 + p7 - p8 - h - z},
            {{2, 5}, c + 2 * p3 - 4 * p6 + p9 + h},
            {{3, 8}, -p3 - p4 + p5 + p6 + p8 - p9},
            {{1, 3}, 2 * c + 3 * p3 - p4 - p5 + p6 - p7 - p8 + p9 - h},
            {{2, 7}, h},
            {{1, 4},
             c + 3 * p3 + p4 - 2 * p5 + p7 - p8 - p9 + p10 - 2 * h + z},
            {{2, 9}, -p3 - p6 + p8 + p9 - p10 + h - z},
            {{1, 5}, p4 + p5 + 2 * p6 - p7 - p8 - p9 + p10 - h + z}});
    out[10] = make_level(
        10,
        {{{1, 2}, 2 * c - 3 * p3 + 2 * p4 - p5 + p6 - 2 * p7 + p8 + h - z},
         {{4, 9}, z},
         {{3, 7}, c - p3 + p6 + p7 - p8 - h - z},
         {{2, 5}, c + 2 * p3 - 4 * p6 + p9 + h},
         {{3, 8}, -p3 - p4 + p5 + p6 + p8 - p9},
         {{1, 3}, 2 * c + 3 * p3 - 2 * p7 - p8 + p9 - p10 + p11},
         {{3, 10}, -p4 - p5 + p6 + p7 + p10 - p11 - h},
         {{2, 7}, p4 + p5 - p6 - p7 - p10 + p11 + 2 * h},
         {{1, 4}, c + 3 * p3 + p4 - 2 * p5 + p7 - p8 - p9 + p10 - 2 * h + z},
         {{2, 9}, -p3 - p6 + p8 + p9 - p10 + h - z},
         {{1, 5}, p4 + p5 + 2 * p6 - p7 - p8 - p9 + p10 - h + z}});
    out[11] = make_level(
        11,
        {{{1, 2},
          2 * c - 3 * p3 + 2 * p4 - p5 + p6 - 2 * p7 + p8 + h - z - a},
         {{5, 11}, a},
         {{4, 9}, z - a},
         {{3, 7}, c - p3 + p6 + p7 - p8 - h - z},
         {{2, 5}, c + 2 * p3 - 4 * p6 + p9 + h},
         {{3, 8}, -p3 - p4 + p5 + p6 + p8 - p9 - bt},
         {{4, 11}, bt},
         {{1, 3}, 2 * c + 3 * p3 - 2 * p7 - p8 + p9 - p10 + p11 - bt},
         {{3, 10}, -p4 - p5 + p6 + p7 + p10 - p11 - h},
         {{2, 7},
          -c + p4 + 2 * p5 - p7 - p9 - p10 + p12 + 2 * h + z + a + bt},
         {{3, 11}, c - p5 - p6 + p9 + p11 - p12 - z - a - bt},
         {{1, 4}, 3 * p3 + p4 - p5 + p6 + p7 - p8 - 2 * p9 + p10 - p11 +
                      p12 - 2 * h + 2 * z + a + bt},
         {{2, 9}, -p3 - p6 + p8 + p9 - p10 + h - z},
         {{1, 5}, p4 + p5 + 2 * p6 - p7 - p8 - p9 + p10 - h + z}});
    out[12] = make_level(
        12,
        {{{1, 2},
          2 * c - 3 * p3 + 2 * p4 - p5 + p6 - 2 * p7 + p8 + h - z - a},
         {{5, 11}, a},
         {{4, 9}, z - a},
         {{3, 7}, 2 * c + p3 + p4 - p5 + p6 + p7 - 2 * p8 - p12 + p13 -
                      2 * h - z},
         {{5, 12}, -c - 2 * p3 - p4 + p5 + p8 + p12 - p13 + h},
         {{2, 5}, 2 * c + 4 * p3 + p4 - p5 - 4 * p6 - p8 + p9 - p12 + p13},
         {{3, 8}, -p3 - p4 + p5 + p6 + p8 - p9 - bt},
         {{4, 11}, bt},
         {{1, 3}, 2 * c + 3 * p3 - 2 * p7 - p8 + p9 - p10 + p11 - bt},
         {{3, 10}, -p4 - p5 + p6 + p7 + p10 - p11 - h},
         {{2, 7},
          -c + p4 + 2 * p5 - p7 - p9 - p10 + p12 + 2 * h + z + a + bt},
         {{3, 11}, c - p5 - p6 + p9 + p11 - p12 - z - a - bt},
         {{1, 4}, 3 * p3 + p4 - p5 + p6 + p7 - p8 - 2 * p9 + p10 - p11 +
                      p12 - 2 * h + 2 * z + a + bt},
         {{2, 9}, -p3 - p6 + p8 + p9 - p10 + h - z},
         {{1, 5}, p4 + p5 + 2 * p6 - p7 - p8 - p9 + p10 - h + z}});
    return out;
}

// Levels 0, 5, 7..12 in case (ii); no zeta, slot (1,6) carries weight 1.
std::map<Int, CoeffVector> coeffs_case_ii(const PluriProfile& p) {
    const Int c = p.chi;
    const auto& P = p.P;
    const Int p3 = P[3], p4 = P[4], p5 = P[5], p6 = P[6], p7 = P[7],
              p8 = P[8], p9 = P[9], p10 = P[10], p11 = P[11], p13 = P[13];
    const Int h = p.eta, a = p.alpha, bt = p.beta;

    std::map<Int, CoeffVector> out;
    out[0] = make_level(0, {{{1, 2}, 5 * c - 4 * p3 + p4},
                            {{1, 3}, 4 * c + 2 * p3 - 3 * p4 + p5},
                            {{1, 4}, c + p3 + 2 * p4 - p5 - 1},
                            {{1, 5}, 0},
                            {{1, 6}, 1}});
    out[5] = make_level(5, {{{1, 2}, 3 * c - 3 * p3 + p4 - 2 * p5 + p6 + 1},
                            {{2, 5}, 2 * c - p3 + 2 * p5 - p6 - 1},
                            {{1, 3}, 2 * c + 3 * p3 - 3 * p4 - p5 + p6 + 1},
                            {{1, 4}, c + p3 + 2 * p4 - p5 - 1},
                            {{1, 5}, 0},
                            {{1, 6}, 1}});
    out[7] = make_level(
        7, {{{1, 2}, 2 * c - 2 * p3 + p4 - 2 * p5 - p7 + p8 + 2 + h},
            {{3, 7}, c - p3 + p6 + p7 - p8 - 1 - h},
            {{2, 5}, c + 2 * p5 - 2 * p6 - p7 + p8 + h},
            {{1, 3}, 2 * c + 3 * p3 - 3 * p4 - p5 + p6 + 1 - h},
            {{2, 7}, h},
            {{1, 4}, c + p3 + 2 * p4 - p5 - 1 - h},
            {{1, 6}, 1}});
    out[8] = make_level(
        8, {{{1, 2}, 2 * c - 2 * p3 + p4 - 2 * p5 - p7 + p8 + 2 + h},
            {{3, 7}, c - p3 + p6 + p7 - p8 - 1 - h},
            {{2, 5}, c + p3 + p4 + p5 - 3 * p6 - p7 + p9 + 1 + h},
            {{3, 8}, -p3 - p4 + p5 + p6 + p8 - p9 - 1},
            {{1, 3}, 2 * c + 4 * p3 - 2 * p4 - 2 * p5 - p8 + p9 + 2 - h},
            {{2, 7}, h},
            {{1, 4}, c + p3 + 2 * p4 - p5 - 1 - h},
            {{1, 6}, 1}});
    out[9] = make_level(
        9, {{{1, 2}, 2 * c - 3 * p5 - p9 + p10 + 3},
            {{4, 9}, -2 * p3 + p4 + p5 - p7 + p8 + p9 - p10 - 1 + h},
            {{3, 7},
             c + p3 - p4 - p5 + p6 + 2 * p7 - 2 * p8 - p9 + p10 - 2 * h},
            {{2, 5}, c + p3 + p4 + p5 - 3 * p6 - p7 + p9 + 1 + h},
            {{3, 8}, -p3 - p4 + p5 + p6 + p8 - p9 - 1},
            {{1, 3}, 2 * c + 4 * p3 - 2 * p4 - 2 * p5 - p8 + p9 + 2 - h},
            {{2, 7}, h},
            {{1, 4}, c + p3 + 2 * p4 - p5 - 1 - h},
            {{1, 6}, 1}});
    out[10] = make_level(
        10, {{{1, 2}, 2 * c - 3 * p5 - p9 + p10 + 3},
             {{4, 9}, -2 * p3 + p4 + p5 - p7 + p8 + p9 - p10 - 1 + h},
             {{3, 7},
              c + p3 - p4 - p5 + p6 + 2 * p7 - 2 * p8 - p9 + p10 - 2 * h},
             {{2, 5}, c + p3 + p4 + p5 - 3 * p6 - p7 + p9 + 1 + h},
             {{3, 8}, -p3 - p4 + p5 + p6 + p8 - p9 - 1},
             {{1, 3}, 2 * c + 5 * p3 - 2 * p4 - 2 * p5 - 2 * p6 - p8 + p9 -
                          p10 + p11 + 4},
             {{3, 10}, -p3 + 2 * p6 + p10 - p11 - 2 - h},
             {{2, 7}, p3 - 2 * p6 - p10 + p11 + 2 + 2 * h},
             {{1, 4}, c + p3 + 2 * p4 - p5 - 1 - h},
             {{1, 6}, 1}});
    out[11] = make_level(
        11, {{{1, 2}, 2 * c - 3 * p5 - p9 + p10 + 3 - a},
             {{5, 11}, a},
             {{4, 9}, -2 * p3 + p4 + p5 - p7 + p8 + p9 - p10 - 1 + h - a},
             {{3, 7},
              c + p3 - p4 - p5 + p6 + 2 * p7 - 2 * p8 - p9 + p10 - 2 * h},
             {{2, 5}, c + p3 + p4 + p5 - 3 * p6 - p7 + p9 + 1 + h},
             {{3, 8}, -p3 - p4 + p5 + p6 + p8 - p9 - 1 - bt},
             {{4, 11}, bt},
             {{1, 3}, 2 * c + 5 * p3 - 2 * p4 - 2 * p5 - 2 * p6 - p8 + p9 -
                          p10 + p11 + 4 - bt},
             {{3, 10}, -p3 + 2 * p6 + p10 - p11 - 2 - h},
             {{2, 7}, -c + p5 - 2 * p6 + p8 - 2 * p10 + 4 + 3 * h + a + bt},
             {{3, 11}, c + p3 - p5 - p8 + p10 + p11 - 2 - h - a - bt},
             {{1, 4}, 2 * p4 + p8 - p10 - p11 + 1 + a + bt},
             {{1, 6}, 1}});
    out[12] = make_level(
        12, {{{1, 2}, 2 * c - 3 * p5 - p9 + p10 + 3 - a},
             {{5, 11}, a},
             {{4, 9}, -2 * p3 + p4 + p5 - p7 + p8 + p9 - p10 - 1 + h - a},
             {{3, 7}, 2 * c + 4 * p3 - p4 - 3 * p5 + 3 * p7 - 3 * p8 - p9 +
                          p10 + p13 + 1 - 3 * h},
             {{5, 12}, -c - 3 * p3 + 2 * p5 + p6 - p7 + p8 - p13 - 1 + h},
             {{2, 5}, 2 * c + 4 * p3 + p4 - p5 - 4 * p6 - p8 + p9 + p13 + 2},
             {{3, 8}, -p3 - p4 + p5 + p6 + p8 - p9 - 1 - bt},
             {{4, 11}, bt},
             {{1, 3}, 2 * c + 5 * p3 - 2 * p4 - 2 * p5 - 2 * p6 - p8 + p9 -
                          p10 + p11 + 4 - bt},
             {{3, 10}, -p3 + 2 * p6 + p10 - p11 - 2 - h},
             {{2, 7}, -c + p5 - 2 * p6 + p8 - 2 * p10 + 4 + 3 * h + a + bt},
             {{3, 11}, c + p3 - p5 - p8 + p10 + p11 - 2 - h - a - bt},
             {{1, 4}, 2 * p4 + p8 - p10 - p11 + 1 + a + bt},
             {{1, 6}, 1}});
    return out;
}

// Case (ii) levels print no (1,5) slot; pad so every CoeffVector carries the
// full slot list for its level.
void pad_case_ii(std::map<Int, CoeffVector>& levels) {
    for (auto& [n, cv] : levels) {
        if (n == 0 || n == 5) continue;  // already full
        auto& cs = cv.counts;
        const Pair one5{1, 5};
        auto it = std::find_if(cs.begin(), cs.end(), [&](const auto& sc) {
            return sc.first == Pair{1, 6};
        });
        cs.insert(it, {one5, 0});
    }
}

}  // namespace

std::map<Int, CoeffVector> coefficients_unchecked(const PluriProfile& p) {
    auto out = p.case_tag == CaseTag::case_i ? coeffs_case_i(p)
                                             : coeffs_case_ii(p);
    if (p.case_tag == CaseTag::case_ii) pad_case_ii(out);
    return out;
}

std::map<Int, CoeffVector> coefficients(const PluriProfile& p) {
    auto out = coefficients_unchecked(p);
    for (const auto& [n, cv] : out)
        for (const auto& [pair, cnt] : cv.counts)
            if (cnt < 0)
                throw InfeasibleProfile(
                    "level " + std::to_string(n) + " slot " + to_string(pair) +
                    " negative: " + std::to_string(cnt));
    return out;
}

std::map<Int, Int> epsilon_forms(const PluriProfile& p) {
    const Int c = p.chi;
    const auto& P = p.P;
    const Int p3 = P[3], p4 = P[4], p5 = P[5], p6 = P[6], p7 = P[7],
              p8 = P[8], p9 = P[9], p10 = P[10], p11 = P[11], p12 = P[12],
              p13 = P[13];
    const Int h = p.eta, z = p.zeta, a = p.alpha, bt = p.beta;
    (void)a;
    if (p.case_tag == CaseTag::case_i) {
        return {{5, 2 * c - p4 + p5 - 2 * p6 + p7},
                {7, c - p3 + p6 + p7 - p8},
                {8, -p3 - p4 + p5 + p6 + p8 - p9},
                {9, -p3 - p6 + p8 + p9 - p10 + h},
                {10, -p4 - p5 + p6 + p7 + p10 - p11 - h},
                {11, c - p5 - p6 + p9 + p11 - p12 - z},
                {12, -c - 2 * p3 - p4 + p5 + p8 + p12 - p13 + h}};
    }
    (void)bt;
    return {{5, 2 * c - p3 + 2 * p5 - p6 - 1},
            {7, c - p3 + p6 + p7 - p8 - 1},
            {8, -p3 - p4 + p5 + p6 + p8 - p9 - 1},
            {9, -2 * p3 + p4 + p5 - p7 + p8 + p9 - p10 - 1 + h},
            {10, -p3 + 2 * p6 + p10 - p11 - 2 - h},
            {11, c + p3 - p5 - p8 + p10 + p11 - 2 - h},
            {12, -c - 3 * p3 + 2 * p5 + p6 - p7 + p8 - p13 - 1 + h}};
}

}  // namespace baskets
