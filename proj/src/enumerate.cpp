#include "baskets/enumerate.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "baskets/level.hpp"
#include "baskets/minimize.hpp"

namespace baskets {

bool FilterConfig::enabled(const std::string& name) const {
    if (name == "slots-nonneg") return slots_nonneg;
    if (name == "eps-nonneg") return eps_nonneg;
    if (name == "regime") return regime;
    if (name == "product-rule") return product_rule;
    if (name == "delta-consistency") return delta_consistency;
    throw Error("unknown filter '" + name + "'");
}

void FilterConfig::disable(const std::string& name) {
    if (name == "slots-nonneg")
        slots_nonneg = false;
    else if (name == "eps-nonneg")
        eps_nonneg = false;
    else if (name == "regime")
        regime = false;
    else if (name == "product-rule")
        product_rule = false;
    else if (name == "delta-consistency")
        delta_consistency = false;
    else
        throw Error("unknown filter '" + name + "'");
}

std::vector<Int> ClassRecord::key() const {
    std::vector<Int> k;
    k.push_back(profile.chi);
    for (Int m = 3; m <= 11; ++m) k.push_back(profile.P[m]);
    for (const auto& [pair, cnt] : b12.counts) k.push_back(cnt);
    return k;
}

namespace {

bool product_rule_ok(const PluriProfile& p) {
    for (Int a = 2; a <= 11; ++a)
        for (Int b = a; a + b <= 13; ++b)
            if (p.P[a + b] < p.P[a] * p.P[b]) return false;
    return true;
}

bool passes(const PluriProfile& p, const FilterConfig& cfg,
            ClassRecord* out) {
    if (cfg.product_rule && !product_rule_ok(p)) return false;

    // F2 (in case (i), eps = n^0_{1,5} must itself be a count)
    if (cfg.eps_nonneg) {
        if (p.case_tag == CaseTag::case_i && p.eps() < 0) return false;
        for (const auto& [n, e] : epsilon_forms(p))
            if (e < 0) return false;
    }

    // F1 over every closed-form level
    const auto levels = coefficients_unchecked(p);
    if (cfg.slots_nonneg)
        for (const auto& [n, cv] : levels)
            for (const auto& [pair, cnt] : cv.counts)
                if (cnt < 0) return false;

    const auto& b12 = levels.at(12);
    const Basket basket = b12.to_basket();

    // F5
    if (cfg.delta_consistency) {
        if (sigma(basket) != p.sigma()) return false;
        for (Int j = 3; j <= 12; ++j)
            if (delta_n_basket(basket, j) != delta_from_profile(p, j))
                return false;
    }

    // a class must carry positive formal volume
    const Rat k3 = k_cubed({basket, p.chi, 0});
    if (!(k3 > 0)) return false;

    if (out) {
        out->profile = p;
        out->b12 = b12;
        out->k3 = k3;
    }
    return true;
}

struct Keyed {
    std::vector<Int> scan;  // deterministic tie-break for the witness profile
    ClassRecord rec;
};

using ClassMap = std::map<std::vector<Int>, Keyed>;

void consider(ClassMap& m, const PluriProfile& p, const FilterConfig& cfg) {
    ClassRecord rec;
    if (!passes(p, cfg, &rec)) return;
    std::vector<Int> scan = {p.chi, p.P[3], p.P[4], p.P[5],  p.P[6],
                             p.P[7], p.P[8], p.P[9], p.P[10], p.P[11],
                             p.P[13], p.eta, p.zeta, p.alpha, p.beta};
    auto [it, inserted] = m.try_emplace(rec.key(), Keyed{scan, rec});
    if (!inserted && scan < it->second.scan) it->second = {scan, rec};
}

// Scan every parameter tuple for one (chi, P3..P11) cell.
void scan_cell(CaseTag tag, Int chi, int mask, const FilterConfig& cfg,
               ClassMap& m) {
    PluriProfile base;
    base.case_tag = tag;
    base.chi = chi;
    base.P[2] = 0;
    base.P[12] = 2;
    for (Int mth = 3; mth <= 11; ++mth) base.P[mth] = (mask >> (mth - 3)) & 1;
    const auto& P = base.P;

    if (tag == CaseTag::case_i) {
        // scan bounds derived from slot nonnegativity at levels 5 and 12
        const Int p13_hi = std::min(
            -chi - 2 * P[3] - 2 * P[4] + P[6] + P[7] + P[8] + P[10] - P[11] +
                2,
            -chi + 6);
        const Int lhs32 = 2 * P[5] + 3 * P[6] + P[8] + P[10] + 2;
        for (Int p13 = 0; p13 <= p13_hi; ++p13) {
            if (lhs32 <
                chi + 4 * P[3] + P[7] + P[11] + p13 + 2 * base.eps())
                continue;  // level-5 slot bound
            for (Int eta = 0; eta <= chi + 4; ++eta)
                for (Int zeta = 0; zeta <= chi + 4; ++zeta)
                    for (Int alpha = 0; alpha <= zeta; ++alpha)
                        for (Int beta = 0; beta <= 3; ++beta) {
                            PluriProfile p = base;
                            p.P[13] = p13;
                            p.eta = eta;
                            p.zeta = zeta;
                            p.alpha = alpha;
                            p.beta = beta;
                            consider(m, p, cfg);
                        }
        }
    } else {
        for (Int p13 = 0; p13 <= -chi + 4; ++p13)
            for (Int eta = 0; eta <= chi + 2; ++eta)
                for (Int alpha = 0; alpha <= 3 + eta; ++alpha)
                    for (Int beta = 0; beta <= 2; ++beta) {
                        PluriProfile p = base;
                        p.P[13] = p13;
                        p.eta = eta;
                        p.alpha = alpha;
                        p.beta = beta;
                        consider(m, p, cfg);
                    }
    }
}

}  // namespace

std::vector<ClassRecord> enumerate_classes(CaseTag tag,
                                           const FilterConfig& cfg,
                                           int jobs) {
    const Int chi_hi = tag == CaseTag::case_i ? 5 : 3;
    std::vector<std::pair<Int, int>> cells;
    for (Int chi = 2; chi <= chi_hi; ++chi)
        for (int mask = 0; mask < 512; ++mask) cells.push_back({chi, mask});

    const int n = std::max(1, jobs);
    std::vector<ClassMap> shards(n);
    std::vector<std::thread> threads;
    for (int t = 0; t < n; ++t) {
        threads.emplace_back([&, t] {
            for (std::size_t i = t; i < cells.size(); i += n)
                scan_cell(tag, cells[i].first, cells[i].second, cfg,
                          shards[t]);
        });
    }
    for (auto& th : threads) th.join();

    ClassMap merged;
    for (auto& shard : shards)
        for (auto& [key, kr] : shard) {
            auto [it, inserted] = merged.try_emplace(key, kr);
            if (!inserted && kr.scan < it->second.scan) it->second = kr;
        }

    std::vector<ClassRecord> out;
    out.reserve(merged.size());
    for (auto& [key, kr] : merged) out.push_back(std::move(kr.rec));
    return out;  // map order == key order == required sort
}

std::vector<std::string> validate_class(const ClassRecord& r) {
    std::vector<std::string> issues;
    const auto levels = coefficients_unchecked(r.profile);
    const Basket b12 = levels.at(12).to_basket();
    for (const auto& [n, cv] : levels) {
        if (cv.to_basket() != unpack_to_level(b12, n))
            issues.push_back("level " + std::to_string(n) +
                             ": closed form != unpack_to_level(B^12)");
    }
    for (const auto& [n, e] : epsilon_forms(r.profile)) {
        if (e != epsilon_n(b12, n))
            issues.push_back("eps_" + std::to_string(n) +
                             ": printed form != Delta difference");
    }
    for (Int j = 3; j <= 12; ++j)
        if (delta_n_basket(b12, j) != delta_from_profile(r.profile, j))
            issues.push_back("Delta^" + std::to_string(j) +
                             "(B^12) != profile value");
    // chi_m round trip, P13 included
    const FormalBasket f{b12, r.profile.chi, 0};
    for (Int m = 2; m <= 13; ++m)
        if (chi_m(f, m) != r.profile.P[m])
            issues.push_back("chi_" + std::to_string(m) + " != P_" +
                             std::to_string(m));
    if (k_cubed(f) != r.k3) issues.push_back("K^3 mismatch");
    return issues;
}

}  // namespace baskets
