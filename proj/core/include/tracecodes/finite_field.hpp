#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tracecodes/errors.hpp"

namespace tracecodes {

class FiniteField;

// Element of F_{p^m}. The coefficient vector of the polynomial-basis
// representation is packed base p into `code`, low degree first, so the
// prime-subfield constant c is exactly the code c.
struct FieldElem {
    const FiniteField* field = nullptr;
    uint64_t code = 0;

    bool is_zero() const noexcept { return code == 0; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem inv() const;
    FieldElem pow(uint64_t e) const;
    uint64_t trace() const;      // absolute trace, value in [0, p)
    uint64_t log() const;        // discrete log base alpha; throws LogOfZero
    std::string token() const;   // "0" or "a<log>"
};

// F_{p^m} as F_p[x]/(f) for a primitive monic f, so alpha (the class of x)
// generates the unit group. Immutable; share via shared_ptr.
class FiniteField {
public:
    // Searches for the canonical modulus: the first monic degree-m polynomial,
    // coefficients compared low degree first, that is primitive.
    static std::shared_ptr<const FiniteField> make(uint64_t p, uint64_t m);
    // Uses the given monic modulus, listed low degree first with the leading 1.
    static std::shared_ptr<const FiniteField> make(uint64_t p, uint64_t m,
                                                   const std::vector<uint64_t>& modulus);

    uint64_t p() const noexcept { return p_; }
    uint64_t m() const noexcept { return m_; }
    uint64_t q() const noexcept { return q_; }
    uint64_t unit_count() const noexcept { return q_ - 1; }
    const std::vector<uint64_t>& modulus() const noexcept { return modulus_; }
    bool has_tables() const noexcept { return !exp_.empty(); }

    FieldElem zero() const noexcept { return {this, 0}; }
    FieldElem one() const noexcept { return {this, 1}; }
    FieldElem alpha() const noexcept { return {this, alpha_code_}; }
    FieldElem element(uint64_t code) const;
    FieldElem from_int(uint64_t v) const noexcept { return {this, v % p_}; }
    FieldElem from_coeffs(const std::vector<uint64_t>& c) const;
    FieldElem alpha_power(uint64_t e) const { return {this, exp_code(e)}; }
    FieldElem parse_token(const std::string& s) const;

    // canonical element order: 0, alpha^0, alpha^1, ..., alpha^(q-2)
    FieldElem element_at(uint64_t index) const;
    uint64_t index_of(const FieldElem& x) const;

    // coefficients of the code, length m, low degree first
    std::vector<uint64_t> coeffs(uint64_t code) const;

    // code-level arithmetic, used by the element operators and by inner loops
    uint64_t add_code(uint64_t x, uint64_t y) const;
    uint64_t sub_code(uint64_t x, uint64_t y) const;
    uint64_t neg_code(uint64_t x) const;
    uint64_t mul_code(uint64_t x, uint64_t y) const;
    uint64_t mul_code_poly(uint64_t x, uint64_t y) const;  // reduction path, table free
    uint64_t inv_code(uint64_t x) const;
    uint64_t pow_code(uint64_t x, uint64_t e) const;
    uint64_t trace_code(uint64_t x) const;
    uint64_t log_code(uint64_t x) const;
    uint64_t exp_code(uint64_t e) const;  // code of alpha^(e mod (q-1))
    std::string token_of(uint64_t code) const;

    // {alpha^(i + jN) : j = 0 .. (q-1)/N - 1}; requires N | q-1 and i < N
    std::vector<FieldElem> cyclotomic_class(uint64_t i, uint64_t N) const;

private:
    FiniteField(uint64_t p, uint64_t m, const std::vector<uint64_t>& modulus);

    uint64_t p_ = 0, m_ = 0, q_ = 0;
    std::vector<uint64_t> modulus_;  // length m+1, monic, low degree first
    uint64_t alpha_code_ = 0;
    std::vector<uint64_t> exp_;  // exp_[e] = code of alpha^e, size q-1
    std::vector<uint64_t> log_;  // log_[code], log_[0] unused sentinel
    std::vector<uint64_t> tr_;   // tr_[code], values in [0, p)
};

bool same_structure(const FiniteField& a, const FiniteField& b);

}  // namespace tracecodes
