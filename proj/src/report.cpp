#include "baskets/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace baskets {

namespace {

using nlohmann::json;

const char* case_name(CaseTag tag) {
    return tag == CaseTag::case_i ? "i" : "ii";
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string slot_header(CaseTag tag) {
    std::string h;
    for (const auto& p : level12_slots(tag))
        h += ",n" + std::to_string(p.b) + "_" + std::to_string(p.r);
    return h;
}

std::string compact_basket(const Basket& b) {
    std::string out;
    for (const auto& e : b.entries()) {
        if (!out.empty()) out += " ";
        if (e.weight != 1) out += std::to_string(e.weight) + "x";
        out += to_string(e.pair);
    }
    return out.empty() ? "{}" : out;
}

json profile_json(const PluriProfile& p) {
    json j;
    j["chi"] = p.chi;
    for (Int m = 3; m <= 13; ++m)
        j["P" + std::to_string(m)] = p.P[m];
    j["eta"] = p.eta;
    j["zeta"] = p.zeta;
    j["alpha"] = p.alpha;
    j["beta"] = p.beta;
    return j;
}

std::vector<std::string> split(const std::string& line, char sep) {
    // honors double-quoted fields
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Int to_int(const std::string& s, const std::string& what) {
    try {
        return std::stoll(s);
    } catch (...) {
        throw ParseError("bad integer '" + s + "' in " + what);
    }
}

}  // namespace

void write_class_table(std::ostream& out, CaseTag tag,
                       const std::vector<ClassRecord>& classes, Format fmt) {
    if (fmt == Format::csv) {
        out << "row,chi,P3,P4,P5,P6,P7,P8,P9,P10,P11,P12,P13,eta,zeta,alpha,"
               "beta"
            << slot_header(tag) << ",K3\n";
        Int row = 0;
        for (const auto& r : classes) {
            out << ++row << "," << r.profile.chi;
            for (Int m = 3; m <= 13; ++m) out << "," << r.profile.P[m];
            out << "," << r.profile.eta << "," << r.profile.zeta << ","
                << r.profile.alpha << "," << r.profile.beta;
            for (const auto& [pair, cnt] : r.b12.counts) out << "," << cnt;
            out << "," << to_string(r.k3) << "\n";
        }
        return;
    }
    json arr = json::array();
    Int row = 0;
    for (const auto& r : classes) {
        json j;
        j["row"] = ++row;
        j["case"] = case_name(tag);
        j["profile"] = profile_json(r.profile);
        json slots = json::array();
        for (const auto& [pair, cnt] : r.b12.counts)
            slots.push_back({{"b", pair.b}, {"r", pair.r}, {"count", cnt}});
        j["B12"] = slots;
        j["K3"] = to_string(r.k3);
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
}

void write_descendants(std::ostream& out, CaseTag tag,
                       const std::vector<ClassRecord>& classes,
                       const std::vector<std::vector<Descendant>>& desc,
                       Format fmt) {
    if (fmt == Format::csv) {
        out << "row,label,trace,basket,K3\n";
        for (std::size_t i = 0; i < classes.size(); ++i) {
            out << (i + 1) << ",," << ","
                << csv_quote(compact_basket(classes[i].b12.to_basket()))
                << "," << to_string(classes[i].k3) << "\n";
            char label = 'a';
            for (const auto& d : desc[i]) {
                if (d.basket == classes[i].b12.to_basket()) continue;
                out << (i + 1) << "," << label++ << ","
                    << csv_quote(d.trace) << ","
                    << csv_quote(compact_basket(d.basket)) << ","
                    << to_string(d.k3) << "\n";
            }
        }
        return;
    }
    json arr = json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        json j;
        j["row"] = i + 1;
        j["case"] = case_name(tag);
        j["K3"] = to_string(classes[i].k3);
        j["basket"] = compact_basket(classes[i].b12.to_basket());
        json ds = json::array();
        for (const auto& d : desc[i])
            ds.push_back({{"trace", d.trace},
                          {"basket", compact_basket(d.basket)},
                          {"K3", to_string(d.k3)}});
        j["minimal_positive"] = ds;
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
}

std::vector<GoldenRow> load_golden_table(const std::string& path,
                                         CaseTag tag) {
    std::ifstream in(path);
    if (!in) throw EnvironmentError("cannot open golden file " + path);
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(path + ": empty golden file");
    const std::size_t nslots = level12_slots(tag).size();
    std::vector<GoldenRow> rows;
    Int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto f = split(line, ',');
        // row,chi,P3..P13,eta,zeta,alpha,beta,slots...,K3,notes
        if (f.size() < 17 + nslots + 1)
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": too few fields");
        GoldenRow g;
        const std::string where = path + ":" + std::to_string(lineno);
        g.row = to_int(f[0], where);
        g.chi = to_int(f[1], where);
        // f[2..12] = P3..P13; f[13..16] = eta,zeta,alpha,beta (often blank)
        for (Int m = 3; m <= 13; ++m)
            if (!f[m - 1].empty()) g.P[m] = to_int(f[m - 1], where);
        for (std::size_t i = 0; i < nslots; ++i)
            g.slots.push_back(to_int(f[17 + i], where));
        g.k3 = parse_rat(f[17 + nslots]);
        for (std::size_t i = 18 + nslots; i < f.size(); ++i)
            if (!f[i].empty()) g.notes.push_back(f[i]);
        rows.push_back(std::move(g));
    }
    return rows;
}

std::vector<GoldenSubRow> load_golden_subrows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EnvironmentError("cannot open golden file " + path);
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(path + ": empty golden file");
    std::vector<GoldenSubRow> rows;
    Int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto f = split(line, ',');
        if (f.size() < 4)
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": expected row,label,trace,K3");
        GoldenSubRow g;
        g.row = to_int(f[0], path);
        g.label = f[1];
        g.trace = f[2];
        g.k3 = parse_rat(f[3]);
        rows.push_back(std::move(g));
    }
    return rows;
}

namespace {

// (chi, slot counts): the basket plus chi determines the whole P-vector
// through the Delta^n dictionary, so this key is canonical and avoids the
// source table's occasional short parameter rows.
std::vector<Int> golden_key(const GoldenRow& g) {
    std::vector<Int> k;
    k.push_back(g.chi);
    for (Int s : g.slots) k.push_back(s);
    return k;
}

std::string key_str(const std::vector<Int>& k) {
    std::string s;
    for (Int v : k) s += (s.empty() ? "" : ",") + std::to_string(v);
    return s;
}

}  // namespace

VerifyReport verify_classes(const std::vector<ClassRecord>& classes,
                            const std::vector<GoldenRow>& golden,
                            CaseTag tag) {
    VerifyReport rep;
    const std::string cn = std::string("case ") + case_name(tag);
    if (classes.size() != golden.size())
        rep.mismatches.push_back(cn + ": " + std::to_string(classes.size()) +
                                 " classes vs " +
                                 std::to_string(golden.size()) +
                                 " golden rows");
    auto class_key = [](const ClassRecord& r) {
        std::vector<Int> k;
        k.push_back(r.profile.chi);
        for (const auto& [pair, cnt] : r.b12.counts) k.push_back(cnt);
        return k;
    };
    std::map<std::vector<Int>, const ClassRecord*> by_key;
    for (const auto& r : classes) by_key[class_key(r)] = &r;
    std::map<std::vector<Int>, const GoldenRow*> golden_by_key;
    for (const auto& g : golden) {
        const auto k = golden_key(g);
        if (!golden_by_key.emplace(k, &g).second)
            rep.mismatches.push_back(cn + ": duplicate golden key row " +
                                     std::to_string(g.row));
        auto it = by_key.find(k);
        if (it == by_key.end()) {
            rep.mismatches.push_back(cn + ": golden row " +
                                     std::to_string(g.row) +
                                     " not enumerated (key " + key_str(k) +
                                     ")");
            continue;
        }
        if (it->second->k3 != g.k3)
            rep.mismatches.push_back(
                cn + ": golden row " + std::to_string(g.row) + ": K3 " +
                to_string(g.k3) + " vs enumerated " +
                to_string(it->second->k3));
        for (Int m = 3; m <= 11; ++m)
            if (g.P[m] != it->second->profile.P[m])
                rep.mismatches.push_back(
                    cn + ": golden row " + std::to_string(g.row) + ": P" +
                    std::to_string(m) + " = " + std::to_string(g.P[m]) +
                    " vs enumerated " +
                    std::to_string(it->second->profile.P[m]));
        for (const auto& note : g.notes)
            rep.infos.push_back(cn + " row " + std::to_string(g.row) +
                                " note: " + note);
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto k = class_key(classes[i]);
        if (!golden_by_key.count(k))
            rep.mismatches.push_back(cn + ": enumerated row " +
                                     std::to_string(i + 1) +
                                     " has no golden match (key " +
                                     key_str(k) + ")");
        else if (golden_by_key.at(k)->row != static_cast<Int>(i + 1))
            rep.infos.push_back(cn + ": enumerated row " +
                                std::to_string(i + 1) + " is golden row " +
                                std::to_string(golden_by_key.at(k)->row));
    }
    return rep;
}

VerifyReport verify_descendants(
    const std::vector<ClassRecord>& classes,
    const std::vector<std::vector<Descendant>>& desc,
    const std::vector<GoldenRow>& golden,
    const std::vector<GoldenSubRow>& subrows) {
    VerifyReport rep;
    // reference row number -> our class index
    std::map<std::vector<Int>, std::size_t> by_key;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::vector<Int> k;
        k.push_back(classes[i].profile.chi);
        for (const auto& [pair, cnt] : classes[i].b12.counts)
            k.push_back(cnt);
        by_key[k] = i;
    }
    std::map<Int, std::size_t> row_to_idx;
    for (const auto& g : golden) {
        auto it = by_key.find(golden_key(g));
        if (it != by_key.end()) row_to_idx[g.row] = it->second;
    }
    for (const auto& s : subrows) {
        auto it = row_to_idx.find(s.row);
        if (it == row_to_idx.end()) {
            rep.mismatches.push_back("sub-row " + std::to_string(s.row) + "." +
                                     s.label + ": parent row unmatched");
            continue;
        }
        const auto& ds = desc[it->second];
        const bool found =
            std::any_of(ds.begin(), ds.end(),
                        [&](const Descendant& d) { return d.k3 == s.k3; });
        if (!found)
            rep.mismatches.push_back(
                "sub-row " + std::to_string(s.row) + "." + s.label + " (" +
                s.trace + ", K3 = " + to_string(s.k3) +
                "): no minimal positive descendant with this K3");
    }
    // descendants we emit that the source table does not list
    std::map<Int, std::vector<Rat>> golden_per_row;
    for (const auto& s : subrows) golden_per_row[s.row].push_back(s.k3);
    for (const auto& [row, idx] : row_to_idx) {
        const auto& listed = golden_per_row[row];
        for (const auto& d : desc[idx]) {
            if (d.basket == classes[idx].b12.to_basket()) continue;
            if (std::find(listed.begin(), listed.end(), d.k3) == listed.end())
                rep.infos.push_back(
                    "row " + std::to_string(row) +
                    ": extra minimal positive descendant K3 = " +
                    to_string(d.k3) + " (" + d.trace + ")");
        }
    }
    return rep;
}

}  // namespace baskets
