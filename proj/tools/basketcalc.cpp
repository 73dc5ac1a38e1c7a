// basketcalc: exact basket calculus for 3-fold terminal quotient
// singularities — invariants, canonical unpacking, the delta=12 class
// enumeration, packing minimization, and golden verification.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "baskets/level.hpp"
#include "baskets/report.hpp"

using namespace baskets;

namespace {

Basket read_basket(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return parse_basket(in);
}

CaseTag parse_case(const std::string& s) {
    if (s == "i") return CaseTag::case_i;
    if (s == "ii") return CaseTag::case_ii;
    throw CLI::ValidationError("--case", "must be 'i' or 'ii'");
}

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw CLI::ValidationError("--format", "must be 'csv' or 'json'");
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw Error("cannot open output file " + path);
    return file;
}

struct RowSel {
    bool set = false;
    CaseTag tag = CaseTag::case_i;
    std::size_t row = 0;  // 1-based
};

RowSel parse_row(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--row", "expected CASE:N");
    RowSel sel;
    sel.set = true;
    sel.tag = parse_case(s.substr(0, colon));
    const long n = std::stol(s.substr(colon + 1));
    if (n < 1) throw CLI::ValidationError("--row", "row must be >= 1");
    sel.row = static_cast<std::size_t>(n);
    return sel;
}

int run(int argc, char** argv) {
    CLI::App app{"exact Reid-basket calculus and the delta = 12 tables"};
    app.require_subcommand(1);

    std::string basket_path, out_path, case_str = "i", format_str = "csv";
    std::string row_str, golden_dir = "goldens";
    long long chi = 0, chi2 = 0, level = 12, m_max = 13;
    int jobs = 1;
    std::vector<std::string> no_filters;
    bool run_all = false;

    auto* inv = app.add_subcommand("invariants",
                                   "sigma, sigma', Delta^n, K^3, chi_m");
    inv->add_option("basket", basket_path, "basket file")->required();
    inv->add_option("--chi", chi, "chi~")->required();
    inv->add_option("--chi2", chi2, "chi2~ (default 0)");
    inv->add_option("--m-max", m_max, "largest m for the chi_m table");

    auto* unp = app.add_subcommand("unpack", "canonical unpacking B^(n)");
    unp->add_option("basket", basket_path, "basket file")->required();
    unp->add_option("--level", level, "target level n (default 12)");

    auto* enu = app.add_subcommand("enumerate", "delta = 12 classes");
    enu->add_option("--case", case_str, "i or ii")->required();
    enu->add_option("--format", format_str, "csv or json");
    enu->add_option("--jobs", jobs, "worker threads");
    enu->add_option("--no-filter", no_filters, "disable a named filter")
        ->take_all();
    enu->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* mini = app.add_subcommand("minimize",
                                    "minimal positive descendants");
    mini->add_option("--case", case_str, "i or ii");
    mini->add_flag("--all", run_all, "both cases");
    mini->add_option("--row", row_str, "restrict to one class, CASE:N");
    mini->add_option("--format", format_str, "csv or json");
    mini->add_option("--jobs", jobs, "worker threads");
    mini->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "compare against golden tables");
    ver->add_option("--goldens", golden_dir, "golden directory");
    ver->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (inv->parsed()) {
        const Basket b = read_basket(basket_path);
        const FormalBasket f{b, chi, chi2};
        std::cout << "basket: " << (b.empty() ? "{}" : "") << "\n";
        std::cout << serialize(b);
        std::cout << "sigma   = " << sigma(b) << "\n";
        std::cout << "sigma'  = " << to_string(sigma_prime(b)) << "\n";
        for (Int n = 3; n <= 12; ++n)
            std::cout << "Delta^" << n << (n < 10 ? "  = " : " = ")
                      << delta_n_basket(b, n) << "\n";
        std::cout << "K^3     = " << to_string(k_cubed(f)) << "\n";
        for (Int m = 2; m <= m_max; ++m)
            std::cout << "chi_" << m << (m < 10 ? "   = " : "  = ")
                      << chi_m(f, m) << "\n";
        std::cout << "minimal positive: "
                  << (k_cubed(f) > 0 && is_minimal_positive(f) ? "yes" : "no")
                  << "\n";
        return 0;
    }

    if (unp->parsed()) {
        const Basket b = read_basket(basket_path);
        std::cout << serialize(unpack_to_level(b, level));
        return 0;
    }

    if (enu->parsed()) {
        const CaseTag tag = parse_case(case_str);
        FilterConfig cfg;
        for (const auto& name : no_filters) cfg.disable(name);
        const auto classes = enumerate_classes(tag, cfg, jobs);
        std::ofstream file;
        auto& out = open_output(file, out_path);
        write_class_table(out, tag, classes, parse_format(format_str));
        std::cerr << "case " << case_str << ": " << classes.size()
                  << " classes\n";
        return 0;
    }

    if (mini->parsed()) {
        const Format fmt = parse_format(format_str);
        std::vector<CaseTag> tags;
        RowSel sel;
        if (!row_str.empty()) {
            sel = parse_row(row_str);
            tags = {sel.tag};
        } else if (run_all) {
            tags = {CaseTag::case_i, CaseTag::case_ii};
        } else {
            tags = {parse_case(case_str)};
        }
        std::ofstream file;
        auto& out = open_output(file, out_path);
        Rat best;
        bool first = true;
        std::string best_at;
        Basket best_basket;
        for (const CaseTag tag : tags) {
            auto classes = enumerate_classes(tag, {}, jobs);
            if (sel.set) {
                if (sel.row > classes.size())
                    throw Error("row " + std::to_string(sel.row) +
                                " out of range");
                classes = {classes[sel.row - 1]};
            }
            const auto gm = global_minimum(classes, jobs);
            std::vector<std::vector<Descendant>> desc(classes.size());
            for (std::size_t i = 0; i < classes.size(); ++i)
                desc[i] = minimal_positive_descendants(
                    {classes[i].b12.to_basket(), classes[i].profile.chi, 0});
            write_descendants(out, tag, classes, desc, fmt);
            if (first || gm.k3 < best) {
                best = gm.k3;
                first = false;
                const auto& [idx, d] = gm.witnesses.front();
                const std::size_t shown = sel.set ? sel.row : idx + 1;
                best_at = std::string("case-") +
                          (tag == CaseTag::case_i ? "i" : "ii") + " row " +
                          std::to_string(shown);
                best_basket = d.basket;
            }
        }
        std::cout << "min K^3 = " << to_string(best) << " at " << best_at
                  << "\n";
        std::cout << serialize(best_basket);
        return 0;
    }

    // verify
    int rc = 0;
    const auto report = [&](const VerifyReport& rep, const std::string& what) {
        for (const auto& s : rep.infos) std::cout << "note: " << s << "\n";
        for (const auto& s : rep.mismatches)
            std::cout << "MISMATCH: " << s << "\n";
        std::cout << what << ": " << (rep.ok() ? "pass" : "FAIL") << "\n";
        if (!rep.ok()) rc = 1;
    };
    for (const CaseTag tag : {CaseTag::case_i, CaseTag::case_ii}) {
        const std::string cn = tag == CaseTag::case_i ? "i" : "ii";
        const auto classes = enumerate_classes(tag, {}, jobs);
        const auto golden = load_golden_table(
            golden_dir + "/case_" + cn + ".csv", tag);
        report(verify_classes(classes, golden, tag), "case " + cn + " table");
        const auto subrows = load_golden_subrows(
            golden_dir + "/case_" + cn + "_subrows.csv");
        std::vector<std::vector<Descendant>> desc(classes.size());
        for (std::size_t i = 0; i < classes.size(); ++i)
            desc[i] = minimal_positive_descendants(
                {classes[i].b12.to_basket(), classes[i].profile.chi, 0});
        report(verify_descendants(classes, desc, golden, subrows),
               "case " + cn + " sub-rows");
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const EnvironmentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
