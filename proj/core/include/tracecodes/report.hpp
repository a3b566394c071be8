#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tracecodes/analysis.hpp"

namespace tracecodes {

struct AnalyzeOptions {
    uint64_t budget = kDefaultBudget;
    uint32_t wmax_dual = 2;
    std::vector<std::string> theorems;  // empty = all known
    size_t massey_cap = 10000;
};

struct AnalyzeReport {
    CodeSpec spec;

    uint64_t image_size = 0;
    std::optional<uint64_t> m_prime;
    bool image_anomaly = false;

    WeightEnumerator lee;  // full trace code, Lee weights
    WeightEnumerator cd;   // companion field code, Hamming weights

    uint64_t gray_length = 0, gray_dimension = 0, gray_distance = 0;
    GriesmerResult griesmer;

    uint32_t wmax_dual = 2;
    std::optional<uint64_t> dual_distance;

    MinimalityResult minimality;
    bool ab_condition = false;  // q w_min > (q-1) w_max on the observed weights

    SssClass sss = SssClass::Unclassified;
    AccessStructure massey;

    std::vector<TheoremReport> theorems;
    uint64_t confirmed = 0, refuted = 0, not_applicable = 0;
    bool all_applicable_confirmed = true;
};

AnalyzeReport analyze(const CodeSpec& spec, const AnalyzeOptions& opt = {});

// renderers; JSON output is canonical: sorted keys, fixed indentation
std::string spec_json(const CodeSpec& spec);
std::string spec_csv(const CodeSpec& spec);
std::string spec_text(const CodeSpec& spec);

std::string report_json(const AnalyzeReport& r);
std::string report_csv(const AnalyzeReport& r);
std::string report_text(const AnalyzeReport& r);

std::string enumerator_csv(const WeightEnumerator& w);

// one codeword per row; entries as ring tokens / Gray digit pairs
std::string codeword_matrix_csv(const CodeSpec& spec, const RingCode& code);
std::string gray_matrix_csv(const CodeSpec& spec, const RingCode& code);

struct SweepRow {
    uint64_t p = 0, m = 0, N = 0;
    uint64_t N2 = 0, n = 0, L_size = 0;
    std::string case_tag;
    std::optional<uint64_t> d_L;
    uint64_t confirmed = 0, refuted = 0, not_applicable = 0;
    std::string error;  // empty when the row ran clean
};

// runs one (p, m, N) instance, catching every failure into the error column
SweepRow sweep_row(uint64_t p, uint64_t m, uint64_t N, const AnalyzeOptions& opt);

std::string sweep_json(const std::vector<SweepRow>& rows);
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_text(const std::vector<SweepRow>& rows);

}  // namespace tracecodes
