#include "tracecodes/chain_ring.hpp"

namespace tracecodes {

namespace {

const FiniteField& component_field(const RingElem& x) {
    if (!x.a.field || !x.b.field) throw ContextMismatch("ring element is missing its field context");
    if (x.a.field != x.b.field && !same_structure(*x.a.field, *x.b.field))
        throw ContextMismatch("ring element components belong to different fields");
    return *x.a.field;
}

}  // namespace

RingElem RingElem::operator+(const RingElem& o) const { return {a + o.a, b + o.b}; }

RingElem RingElem::operator-(const RingElem& o) const { return {a - o.a, b - o.b}; }

RingElem RingElem::operator-() const { return {-a, -b}; }

RingElem RingElem::operator*(const RingElem& o) const {
    // (a1 + b1 u)(a2 + b2 u) = a1 a2 + (a1 b2 + b1 a2) u since u^2 = 0
    return {a * o.a, a * o.b + b * o.a};
}

bool RingElem::operator==(const RingElem& o) const { return a == o.a && b == o.b; }

RingElem RingElem::inv() const {
    if (!is_unit()) throw DivisionByZero("ring element with zero unit part has no inverse");
    FieldElem ai = a.inv();
    return {ai, -(ai * ai * b)};
}

RingElem ring_elem(const FieldElem& a, const FieldElem& b) {
    RingElem x{a, b};
    component_field(x);
    return x;
}

RingElem ring_zero(const FiniteField& f) { return {f.zero(), f.zero()}; }

RingElem ring_one(const FiniteField& f) { return {f.one(), f.zero()}; }

RingElem ring_u(const FiniteField& f) { return {f.zero(), f.one()}; }

RingElem ring_trace(const RingElem& x) {
    const FiniteField& f = component_field(x);
    return {f.from_int(f.trace_code(x.a.code)), f.from_int(f.trace_code(x.b.code))};
}

bool in_base_ring(const RingElem& x) {
    const FiniteField& f = component_field(x);
    return x.a.code < f.p() && x.b.code < f.p();
}

std::string token(const RingElem& x) {
    component_field(x);
    return x.a.token() + "+" + x.b.token() + "u";
}

uint64_t ring_count(const FiniteField& f) { return f.q() * f.q(); }

RingElem ring_element_at(const FiniteField& f, uint64_t index) {
    uint64_t q = f.q();
    if (index >= q * q) throw Error("ring index out of range");
    return {f.element_at(index / q), f.element_at(index % q)};
}

uint64_t ring_index_of(const RingElem& x) {
    const FiniteField& f = component_field(x);
    return f.index_of(x.a) * f.q() + f.index_of(x.b);
}

std::array<uint32_t, 2> gray(const RingElem& x) {
    const FiniteField& f = component_field(x);
    if (!in_base_ring(x)) throw NotBaseRing("Gray map needs prime-subfield components");
    uint64_t p = f.p();
    return {uint32_t(x.b.code), uint32_t((x.a.code + x.b.code) % p)};
}

GrayVector gray_vec(const std::vector<RingElem>& v) {
    GrayVector out;
    out.entries.reserve(2 * v.size());
    for (const RingElem& x : v) {
        auto g = gray(x);
        out.entries.push_back(g[0]);
        out.entries.push_back(g[1]);
    }
    return out;
}

uint64_t hamming_weight(const GrayVector& y) {
    uint64_t w = 0;
    for (uint32_t e : y.entries) w += (e != 0);
    return w;
}

uint64_t lee_weight(const RingElem& x) {
    auto g = gray(x);
    return uint64_t(g[0] != 0) + uint64_t(g[1] != 0);
}

uint64_t lee_weight(const std::vector<RingElem>& v) { return hamming_weight(gray_vec(v)); }

}  // namespace tracecodes
