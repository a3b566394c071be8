#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tracecodes/code_construction.hpp"

namespace tracecodes {

// residual guard for values that must round to integers
inline constexpr double kResidualTol = 1e-6;

struct CharacterSpec {
    enum class Kind { AdditiveCanonical, Multiplicative };
    Kind kind = Kind::AdditiveCanonical;
    // multiplicative only: psi_j(alpha^k) = zeta_{q-1}^(j k)
    uint64_t index = 0;
    const FiniteField* field = nullptr;
};

CharacterSpec additive_character(const FiniteField& f);
CharacterSpec multiplicative_character(const FiniteField& f, uint64_t index);

// throws CharOfZero when a multiplicative character is applied to 0
std::complex<double> char_eval(const CharacterSpec& c, const FieldElem& x);

// G(psi, chi) = sum over units of psi(x) chi(x), by direct summation
std::complex<double> gauss_sum(const CharacterSpec& psi, const CharacterSpec& chi);

// nearest integer; throws ResidualTooLarge when |value - round| >= tol
int64_t round_checked(double value, double tol = kResidualTol);

// N(b) for b != 0 through the Gauss-sum expansion
//   p N(b) = n + (1/N2) sum_{j=0}^{N2-1} G(conj(phi^j), chi) phi^j(b),
// phi the multiplicative character of index (q-1)/N2
uint64_t N_b_via_charsum(const CodeSpec& spec, const FieldElem& b,
                         double* residual = nullptr);

// theta(a) = sum over the Gray image of Ev(a) of omega^entry, omega = zeta_p
std::complex<double> theta(const CodeSpec& spec, const RingElem& a);

// w_L(Ev(a)) = ((p-1) s - sum_{t=1}^{p-1} theta(t a)) / p with s = 2|L|,
// the scalars t being prime-subfield constants
uint64_t lee_weight_via_theta(const CodeSpec& spec, const RingElem& a,
                              double* residual = nullptr);

enum class CaseTag {
    TableI,
    TableII,
    TableIII,
    Thm22Case1,
    Thm22Case2,
    BoundsOnly,
    NoTheoremApplies,
};
std::string to_string(CaseTag tag);

struct PredictedRow {
    uint64_t weight = 0;
    uint64_t frequency = 0;
};

struct HypothesisCheck {
    std::string condition;
    bool holds = false;
};

struct PredictedDistribution {
    CaseTag case_tag = CaseTag::NoTheoremApplies;
    std::vector<PredictedRow> rows;  // ascending weight, includes the zero row
    std::vector<HypothesisCheck> hypothesis_report;
    // BoundsOnly payload: cap on nonzero weights and minimum-distance range
    std::optional<uint64_t> max_nonzero_weights;
    std::optional<double> d_min, d_max;
    uint64_t expected_total = 0;
};

// closed-form Lee weight distribution of the full trace code when a known
// case applies; BoundsOnly or NoTheoremApplies otherwise
PredictedDistribution predict_distribution(const CodeSpec& spec);

// Hamming weight distribution of the companion field code under the
// semiprimitive two-weight cases; NoTheoremApplies with the full hypothesis
// trail when a condition fails
PredictedDistribution predict_CD_cases(const CodeSpec& spec);

// throwing wrapper around predict_CD_cases: HypothesisFailed names the first
// violated condition
PredictedDistribution predict_CD_distribution(const CodeSpec& spec);

struct GriesmerResult {
    uint64_t sum = 0;  // sum of ceil(d / q^i), i < dimension
    bool meets_with_equality = false;
};
GriesmerResult griesmer_check(uint64_t length, uint64_t dimension,
                              uint64_t distance, uint64_t q);

// smallest k with p^k = -1 (mod N2), paired with t = m/(2k); absent when no
// such k exists or 2k does not divide m
std::optional<std::pair<uint64_t, uint64_t>> semiprimitive_witness(uint64_t p,
                                                                   uint64_t N2,
                                                                   uint64_t m);

}  // namespace tracecodes
