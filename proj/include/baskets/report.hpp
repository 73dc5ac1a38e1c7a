#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "baskets/minimize.hpp"

namespace baskets {

enum class Format { csv, json };

// Columns: row,chi,P3..P13,eta,zeta,alpha,beta,15 slot counts,K3.
void write_class_table(std::ostream& out, CaseTag tag,
                       const std::vector<ClassRecord>& classes, Format fmt);

// Descendant report: row,label,trace,basket,K3.
void write_descendants(std::ostream& out, CaseTag tag,
                       const std::vector<ClassRecord>& classes,
                       const std::vector<std::vector<Descendant>>& desc,
                       Format fmt);

// One golden main-table row. Fields that the source table does not print
// (P13, eta, zeta, alpha, beta) stay unset and are not compared.
struct GoldenRow {
    Int row = 0;
    Int chi = 0;
    std::array<Int, 14> P{};  // P[3..12]; P12 always 2
    std::vector<Int> slots;
    Rat k3;
    std::vector<std::string> notes;  // transcription notes, informational
};

struct GoldenSubRow {
    Int row = 0;          // parent row number
    std::string label;    // "a", "b", ...
    std::string trace;    // as printed
    Rat k3;
};

std::vector<GoldenRow> load_golden_table(const std::string& path,
                                         CaseTag tag);
std::vector<GoldenSubRow> load_golden_subrows(const std::string& path);

struct VerifyReport {
    std::vector<std::string> mismatches;  // hard failures
    std::vector<std::string> infos;       // explained by transcription notes
    bool ok() const { return mismatches.empty(); }
};

// Main-table comparison: every golden row must match exactly one enumerated
// class (key = chi, P3..P11, slot counts) with equal K3, and vice versa.
VerifyReport verify_classes(const std::vector<ClassRecord>& classes,
                            const std::vector<GoldenRow>& golden,
                            CaseTag tag);

// Descendant comparison per class, by (reduced basket, K3); printed traces
// are matched up to the (kb,kr) = k x (b,r) identification.
VerifyReport verify_descendants(const std::vector<ClassRecord>& classes,
                                const std::vector<std::vector<Descendant>>& desc,
                                const std::vector<GoldenRow>& golden,
                                const std::vector<GoldenSubRow>& subrows);

}  // namespace baskets
