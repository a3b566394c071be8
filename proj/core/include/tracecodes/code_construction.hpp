#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "tracecodes/chain_ring.hpp"

namespace tracecodes {

// default cap on full-code walks: at most 2^24 codeword evaluations
inline constexpr uint64_t kDefaultBudget = uint64_t(1) << 24;

// Derived data for one parameter choice (p, m, N), with s = (p^m - 1)/(p - 1):
//   N1 = lcm(N, s), N2 = gcd(N, s), n = N1/N = (p^m - 1)/(N2 (p - 1)),
//   D = {alpha^(N(j-1)) : j = 1..n}, a transversal of the F_p^* cosets inside
//   the cyclotomic class of index N2, and L = {a + bu : a in D, b in F_{p^m}}
// in canonical order (D outer, field order inner).
struct CodeSpec {
    std::shared_ptr<const FiniteField> field;
    uint64_t N = 0, N1 = 0, N2 = 0, n = 0;
    std::vector<FieldElem> D;
    std::vector<RingElem> L;

    const FiniteField& f() const { return *field; }
    uint64_t length() const { return L.size(); }
    uint64_t gray_length() const { return 2 * L.size(); }
    uint64_t codeword_count() const { return f().q() * f().q(); }
};

// throws BadDivisor unless N >= 1 divides p^m - 1
CodeSpec derive_spec(std::shared_ptr<const FiniteField> field, uint64_t N);

// Ev(a) = (Tr(a x))_{x in L}; every entry lies in the base ring
std::vector<RingElem> eval_codeword(const CodeSpec& spec, const RingElem& a);

// streams Ev(a) for every a in canonical ring order into sink(a_index, word);
// the word buffer is reused between calls
void for_each_codeword(
    const CodeSpec& spec,
    const std::function<void(uint64_t, const std::vector<RingElem>&)>& sink,
    uint64_t budget = kDefaultBudget);

// materialized code; entries packed as a_code * q + b_code
struct RingCode {
    uint64_t length = 0;
    std::vector<std::vector<uint64_t>> words;  // canonical a order, q^2 rows
    uint64_t image_size = 0;                   // distinct rows
    bool injective = false;
    // image_size = p^(2 m') when the image looks like a full trace code over a
    // subfield; absent (anomaly) otherwise
    std::optional<uint64_t> m_prime;
    bool image_anomaly = false;
};
RingCode build_code(const CodeSpec& spec, uint64_t budget = kDefaultBudget);

// companion field code: row b is (tr(b d))_{d in D}, b in canonical order
std::vector<std::vector<uint32_t>> build_CD(const CodeSpec& spec);
// N(b) = #{d in D : tr(b d) = 0}
uint64_t count_N_b(const CodeSpec& spec, const FieldElem& b);

// #{a : Ev(a) = 0}; the image size is q^2 over this. A kernel element is
// never a unit: for a unit a the u-component of a(x + bu) sweeps all of
// F_{p^m} as b runs, and the trace hits nonzero values on it.
uint64_t evaluation_kernel_size(const CodeSpec& spec);

// distinct Gray-image codewords, first-occurrence order in the canonical walk
std::vector<std::vector<uint32_t>> gray_image(const CodeSpec& spec,
                                              uint64_t budget = kDefaultBudget);

// Multiplication by any unit l of L permutes L up to prime-subfield scalars.
// Checks that the codeword list is covariant under that action (Tr(a l x)
// equals the codeword of a*l at x) and that the scalar-free action of L on
// itself is simply transitive.
bool verify_group_action(const CodeSpec& spec, const RingCode& code);

}  // namespace tracecodes
