#include "baskets/pair.hpp"

#include <numeric>

namespace baskets {

Pair make_pair(Int b, Int r, PairKind kind) {
    if (b <= 0 || r <= 0 || b >= r)
        throw InvalidPair("invalid pair (" + std::to_string(b) + "," +
                          std::to_string(r) + ")");
    if (kind == PairKind::terminal) {
        if (std::gcd(b, r) != 1)
            throw NotTerminal("(" + std::to_string(b) + "," +
                              std::to_string(r) + "): b, r not coprime");
        if (2 * b > r)
            throw NotTerminal("(" + std::to_string(b) + "," +
                              std::to_string(r) + "): b > r/2");
    }
    return Pair{b, r};
}

Reduced reduce(const Pair& p) {
    const Int g = std::gcd(p.b, p.r);
    return Reduced{Pair{p.b / g, p.r / g}, g};
}

Int delta_n(const Pair& p, Int n) {
    if (n < 1) throw DomainError("delta_n: n must be >= 1");
    if (2 * p.b > p.r)
        throw DomainError("delta_n undefined for b/r > 1/2: " + to_string(p));
    const Int d = (p.b * n) / p.r;
    return d * p.b * n - p.r * d * (d + 1) / 2;
}

bool is_prime_packing(const Pair& p1, const Pair& p2) {
    const Int det = p1.b * p2.r - p2.b * p1.r;
    return det == 1 || det == -1;
}

Rat sigma_prime_drop(const Pair& p1, const Pair& p2) {
    const Int det = p1.r * p2.b - p2.r * p1.b;
    return Rat(det * det, p1.r * p2.r * (p1.r + p2.r));
}

std::string to_string(const Pair& p) {
    return "(" + std::to_string(p.b) + "," + std::to_string(p.r) + ")";
}

}  // namespace baskets
