#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tracecodes/character_sums.hpp"

namespace tracecodes {

enum class WeightKind { LeeOverR, HammingOverFp };
std::string to_string(WeightKind kind);

struct WeightEnumerator {
    WeightKind kind = WeightKind::LeeOverR;
    std::vector<std::pair<uint64_t, uint64_t>> rows;  // (weight, frequency), ascending
    uint64_t total = 0;

    uint64_t min_nonzero_weight() const;  // throws Error when all weights are 0
    uint64_t nonzero_row_count() const;
};

// LeeOverR walks the full trace code, HammingOverFp the companion field code
WeightEnumerator enumerate_weights(const CodeSpec& spec, WeightKind kind,
                                   uint64_t budget = kDefaultBudget);

enum class Verdict { Confirmed, Refuted, NotApplicable };
std::string to_string(Verdict v);

struct TheoremReport {
    std::string theorem_id;
    std::vector<HypothesisCheck> hypothesis_report;
    std::optional<PredictedDistribution> predicted;
    std::optional<WeightEnumerator> observed;
    Verdict verdict = Verdict::NotApplicable;
    std::string detail;
};

const std::vector<std::string>& known_theorems();

// checks one named claim against the constructed code; throws UnknownTheorem
// for ids outside known_theorems()
TheoremReport verify_theorem(const CodeSpec& spec, const std::string& theorem_id,
                             uint64_t budget = kDefaultBudget);

// Minimum Lee weight among nonzero dual vectors of support size <= wmax
// (wmax in 1..3), absent when no such vector exists. The dual is taken over
// the base ring R with the standard inner product. Support-3 search refuses
// to start when the pair table squared exceeds 2^26 (BudgetExceeded).
std::optional<uint64_t> dual_lee_distance_upto(const CodeSpec& spec, uint32_t wmax);

struct MinimalityResult {
    bool all_minimal = true;
    // canonical a indices (coverer, covered) when a strict support cover exists
    std::optional<std::pair<uint64_t, uint64_t>> witness;
};
// checks strict Gray-support inclusion between nonzero codewords
MinimalityResult minimal_codewords(const CodeSpec& spec,
                                   uint64_t budget = kDefaultBudget);

// sufficient condition for all-minimal: q w_min > (q-1) w_max
bool ashikhmin_barg(uint64_t w_min, uint64_t w_max, uint64_t q);

enum class SssClass { Democratic, Dictatorial, Unclassified };
std::string to_string(SssClass c);
// dual distance >= 3: democratic; == 2: dictatorial; == 1: unclassified
SssClass sss_classify(uint64_t dual_distance);

struct AccessStructure {
    // sorted coordinate sets, listed lexicographically
    std::vector<std::vector<uint32_t>> minimal_access_sets;
    std::vector<uint32_t> dictators;  // coordinates in every minimal set
    SssClass classification = SssClass::Unclassified;
    bool truncated = false;
};

// Minimal access sets of the secret sharing scheme on a p-ary code: supports
// (minus coordinate 0) of codewords with nonzero first coordinate, reduced to
// the inclusion-minimal ones. Dictators are computed before any truncation.
AccessStructure massey_access_structure(
    const std::vector<std::vector<uint32_t>>& code, size_t max_sets = 10000,
    std::optional<uint64_t> dual_distance = std::nullopt);

}  // namespace tracecodes
