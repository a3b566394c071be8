#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tracecodes/finite_field.hpp"

namespace tracecodes {

// a + b*u with u^2 = 0, components in one F_{p^m}. The units are exactly the
// elements with a != 0; the rest form the maximal ideal u*F_{p^m}.
struct RingElem {
    FieldElem a, b;

    bool is_zero() const noexcept { return a.is_zero() && b.is_zero(); }
    bool is_unit() const noexcept { return !a.is_zero(); }
    bool in_maximal_ideal() const noexcept { return a.is_zero(); }

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator-() const;
    RingElem operator*(const RingElem& o) const;
    bool operator==(const RingElem& o) const;
    bool operator!=(const RingElem& o) const { return !(*this == o); }

    // (a + bu)^-1 = a^-1 - a^-2 b u; throws DivisionByZero on non-units
    RingElem inv() const;
};

RingElem ring_elem(const FieldElem& a, const FieldElem& b);
RingElem ring_zero(const FiniteField& f);
RingElem ring_one(const FiniteField& f);
RingElem ring_u(const FiniteField& f);

// componentwise field trace; the result has prime-subfield components
RingElem ring_trace(const RingElem& x);

// both components are prime-subfield constants (codes below p)
bool in_base_ring(const RingElem& x);

std::string token(const RingElem& x);  // "<a>+<b>u" with element tokens

// canonical order on the ring: pairs (a, b), a outer, b inner, both in the
// field's canonical element order
uint64_t ring_count(const FiniteField& f);
RingElem ring_element_at(const FiniteField& f, uint64_t index);
uint64_t ring_index_of(const RingElem& x);

// vectors over F_p produced by the Gray map, entries in [0, p)
struct GrayVector {
    std::vector<uint32_t> entries;
};

// Gray image of one base-ring element a + bu: the pair (b, a + b) in F_p^2.
// Throws NotBaseRing when a component is not a prime-subfield constant.
std::array<uint32_t, 2> gray(const RingElem& x);
GrayVector gray_vec(const std::vector<RingElem>& v);

uint64_t hamming_weight(const GrayVector& y);
// Lee weight = Hamming weight of the Gray image
uint64_t lee_weight(const RingElem& x);
uint64_t lee_weight(const std::vector<RingElem>& v);

}  // namespace tracecodes
