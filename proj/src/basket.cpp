#include "baskets/basket.hpp"

#include <algorithm>
#include <sstream>

namespace baskets {

namespace {

std::vector<Basket::Entry> canonicalize(std::vector<Basket::Entry> es) {
    std::erase_if(es, [](const Basket::Entry& e) { return e.weight == 0; });
    for (const auto& e : es) {
        if (e.weight < 0) throw Error("negative weight in basket");
        if (e.pair.b <= 0 || e.pair.r <= 0 || e.pair.b >= e.pair.r)
            throw InvalidPair("invalid pair " + to_string(e.pair));
    }
    std::sort(es.begin(), es.end(),
              [](const auto& x, const auto& y) { return x.pair < y.pair; });
    std::vector<Basket::Entry> out;
    for (const auto& e : es) {
        if (!out.empty() && out.back().pair == e.pair)
            out.back().weight += e.weight;
        else
            out.push_back(e);
    }
    return out;
}

}  // namespace

Basket::Basket(std::vector<Entry> entries)
    : entries_(canonicalize(std::move(entries))) {}

Int Basket::size() const {
    Int n = 0;
    for (const auto& e : entries_) n += e.weight;
    return n;
}

Int Basket::count(const Pair& p) const {
    for (const auto& e : entries_)
        if (e.pair == p) return e.weight;
    return 0;
}

Basket Basket::with(const Pair& p, Int w) const {
    auto es = entries_;
    es.push_back({w, p});
    return Basket(std::move(es));
}

Basket Basket::without(const Pair& p, Int w) const {
    auto es = entries_;
    for (auto& e : es) {
        if (e.pair == p) {
            if (e.weight < w)
                throw PairNotPresent("basket holds fewer than " +
                                     std::to_string(w) + " of " + to_string(p));
            e.weight -= w;
            return Basket(std::move(es));
        }
    }
    throw PairNotPresent("basket does not contain " + to_string(p));
}

Basket Basket::reduced() const {
    std::vector<Entry> es;
    es.reserve(entries_.size());
    for (const auto& e : entries_) {
        const auto [p, g] = reduce(e.pair);
        es.push_back({e.weight * g, p});
    }
    return Basket(std::move(es));
}

std::strong_ordering operator<=>(const Basket& x, const Basket& y) {
    const auto& a = x.entries_;
    const auto& b = y.entries_;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (auto c = a[i].pair <=> b[i].pair; c != 0) return c;
        if (auto c = a[i].weight <=> b[i].weight; c != 0) return c;
    }
    return a.size() <=> b.size();
}

Int sigma(const Basket& b) {
    Int s = 0;
    for (const auto& e : b.entries()) s += e.weight * e.pair.b;
    return s;
}

Rat sigma_prime(const Basket& b) {
    Rat s = 0;
    for (const auto& e : b.entries())
        s += Rat(e.weight * e.pair.b * e.pair.b, e.pair.r);
    return s;
}

Int delta_n_basket(const Basket& b, Int n) {
    Int s = 0;
    for (const auto& e : b.entries()) s += e.weight * delta_n(e.pair, n);
    return s;
}

Basket pack(const Basket& b, const Pair& p1, const Pair& p2) {
    Basket rest = (p1 == p2) ? b.without(p1, 2) : b.without(p1).without(p2);
    return rest.with(Pair{p1.b + p2.b, p1.r + p2.r});
}

std::string serialize(const Basket& b) {
    std::ostringstream out;
    for (const auto& e : b.entries()) {
        if (e.weight == 1)
            out << to_string(e.pair) << "\n";
        else
            out << e.weight << " x " << to_string(e.pair) << "\n";
    }
    return out.str();
}

namespace {

// "w x (b,r)" or "(b,r)"; '#' starts a comment.
Basket::Entry parse_line(const std::string& line, Int lineno, PairKind kind) {
    std::istringstream in(line);
    Int w = 1;
    char c = 0;
    in >> std::ws;
    if (in.peek() != '(') {
        if (!(in >> w) || w <= 0)
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected weight or '('");
        in >> std::ws >> c;
        if (c != 'x')
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'x' after weight");
        in >> std::ws;
    }
    Int b = 0, r = 0;
    char open = 0, comma = 0, close = 0;
    if (!(in >> open >> b >> comma >> r >> close) || open != '(' ||
        comma != ',' || close != ')')
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected '(b,r)'");
    std::string tail;
    if (in >> tail)
        throw ParseError("line " + std::to_string(lineno) +
                         ": trailing input '" + tail + "'");
    try {
        return {w, make_pair(b, r, kind)};
    } catch (const Error& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
}

}  // namespace

Basket parse_basket(std::istream& in, PairKind kind) {
    std::vector<Basket::Entry> es;
    std::string line;
    Int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        es.push_back(parse_line(line, lineno, kind));
    }
    return Basket(std::move(es));
}

Basket parse_basket_string(const std::string& text, PairKind kind) {
    std::istringstream in(text);
    return parse_basket(in, kind);
}

}  // namespace baskets
