#include <doctest.h>

#include "tracecodes/finite_field.hpp"

using namespace tracecodes;

namespace {

std::vector<uint64_t> exp_sequence(const FiniteField& f) {
    std::vector<uint64_t> out;
    for (uint64_t e = 0; e < f.unit_count(); ++e) out.push_back(f.exp_code(e));
    return out;
}

}  // namespace

TEST_CASE("canonical moduli are the first primitive candidates") {
    CHECK(FiniteField::make(3, 1)->modulus() == std::vector<uint64_t>{1, 1});
    CHECK(FiniteField::make(3, 2)->modulus() == std::vector<uint64_t>{2, 1, 1});
    CHECK(FiniteField::make(3, 3)->modulus() == std::vector<uint64_t>{1, 0, 2, 1});
    CHECK(FiniteField::make(5, 1)->modulus() == std::vector<uint64_t>{2, 1});
    CHECK(FiniteField::make(5, 2)->modulus() == std::vector<uint64_t>{2, 1, 1});
    CHECK(FiniteField::make(7, 2)->modulus() == std::vector<uint64_t>{3, 1, 1});
    CHECK(FiniteField::make(11, 2)->modulus() == std::vector<uint64_t>{2, 4, 1});
    CHECK(FiniteField::make(3, 6)->modulus() == std::vector<uint64_t>{2, 0, 0, 0, 0, 1, 1});
}

TEST_CASE("nine-element field tables") {
    auto f = FiniteField::make(3, 2);
    CHECK(f->q() == 9);
    CHECK(f->alpha().code == 3);
    CHECK(exp_sequence(*f) == std::vector<uint64_t>{1, 3, 7, 8, 2, 6, 5, 4});
    CHECK(f->alpha_power(4).code == 2);

    std::vector<uint64_t> tr;
    for (uint64_t c = 0; c < 9; ++c) tr.push_back(f->trace_code(c));
    CHECK(tr == std::vector<uint64_t>{0, 2, 1, 2, 1, 0, 1, 0, 2});

    // trace kernel has q/p elements
    std::vector<uint64_t> kernel;
    for (uint64_t c = 0; c < 9; ++c)
        if (f->trace_code(c) == 0) kernel.push_back(c);
    CHECK(kernel == std::vector<uint64_t>{0, 5, 7});
}

TEST_CASE("three-element prime field") {
    auto f = FiniteField::make(3, 1);
    CHECK(f->alpha().code == 2);
    CHECK(exp_sequence(*f) == std::vector<uint64_t>{1, 2});
    CHECK(f->trace_code(2) == 2);
}

TEST_CASE("27-element field spot values") {
    auto f = FiniteField::make(3, 3);
    // m = 0 (mod p) makes the trace of constants vanish
    CHECK(f->trace_code(1) == 0);
    CHECK(f->alpha_power(13).code == 2);
}

TEST_CASE("field axioms hold on all of F_9") {
    auto fp = FiniteField::make(3, 2);
    const FiniteField& f = *fp;
    for (uint64_t x = 0; x < 9; ++x)
        for (uint64_t y = 0; y < 9; ++y) {
            CHECK(f.add_code(x, y) == f.add_code(y, x));
            CHECK(f.mul_code(x, y) == f.mul_code(y, x));
            CHECK(f.mul_code(x, y) == f.mul_code_poly(x, y));
            // Frobenius is additive
            CHECK(f.pow_code(f.add_code(x, y), 3) ==
                  f.add_code(f.pow_code(x, 3), f.pow_code(y, 3)));
            for (uint64_t z = 0; z < 9; ++z) {
                CHECK(f.mul_code(x, f.mul_code(y, z)) == f.mul_code(f.mul_code(x, y), z));
                CHECK(f.add_code(x, f.add_code(y, z)) == f.add_code(f.add_code(x, y), z));
                CHECK(f.mul_code(x, f.add_code(y, z)) ==
                      f.add_code(f.mul_code(x, y), f.mul_code(x, z)));
            }
        }
    for (uint64_t x = 1; x < 9; ++x) {
        CHECK(f.mul_code(x, f.inv_code(x)) == 1);
        CHECK(f.pow_code(x, 9) == x);
        CHECK(f.sub_code(x, x) == 0);
    }
}

TEST_CASE("trace is F_p-linear, Frobenius-stable, and balanced") {
    for (auto [p, m] : {std::pair<uint64_t, uint64_t>{3, 2}, {5, 2}, {3, 3}}) {
        auto fp = FiniteField::make(p, m);
        const FiniteField& f = *fp;
        std::vector<uint64_t> counts(p, 0);
        for (uint64_t x = 0; x < f.q(); ++x) {
            uint64_t t = f.trace_code(x);
            CHECK(t < p);
            ++counts[t];
            CHECK(f.trace_code(f.pow_code(x, p)) == t);
            for (uint64_t y = 0; y < f.q(); y += 3)
                CHECK(f.trace_code(f.add_code(x, y)) ==
                      (t + f.trace_code(y)) % p);
        }
        for (uint64_t t = 0; t < p; ++t) CHECK(counts[t] == f.q() / p);
    }
}

TEST_CASE("powers of the generator are distinct") {
    auto f = FiniteField::make(5, 2);
    std::vector<uint64_t> seen(f->q(), 0);
    for (uint64_t e = 0; e < f->unit_count(); ++e) {
        uint64_t c = f->exp_code(e);
        CHECK(seen[c] == 0);
        seen[c] = 1;
        CHECK(f->log_code(c) == e);
    }
}

TEST_CASE("explicit modulus validation") {
    CHECK(FiniteField::make(3, 2, {2, 1, 1})->modulus() == std::vector<uint64_t>{2, 1, 1});
    // x^2 + 1 is irreducible over F_3 but x has order 4
    CHECK_THROWS_AS((void)FiniteField::make(3, 2, {1, 0, 1}), NotPrimitive);
    // x^2 + x + 1 = (x - 1)^2 over F_3
    CHECK_THROWS_AS((void)FiniteField::make(3, 2, {1, 1, 1}), NotIrreducible);
    CHECK_THROWS_AS((void)FiniteField::make(3, 2, {1, 1}), Error);        // wrong degree
    CHECK_THROWS_AS((void)FiniteField::make(3, 2, {2, 1, 2}), Error);     // not monic
    CHECK_THROWS_AS((void)FiniteField::make(3, 2, {4, 1, 1}), Error);     // digit out of range
    CHECK_THROWS_AS((void)FiniteField::make(3, 2, {0, 2, 1}), NotIrreducible);  // x divides
}

TEST_CASE("p must be an odd prime") {
    CHECK_THROWS_AS((void)FiniteField::make(2, 3), NotOddPrime);
    CHECK_THROWS_AS((void)FiniteField::make(4, 2), NotOddPrime);
    CHECK_THROWS_AS((void)FiniteField::make(9, 1), NotOddPrime);
    CHECK_THROWS_AS((void)FiniteField::make(1, 1), NotOddPrime);
}

TEST_CASE("zero handling") {
    auto f = FiniteField::make(3, 2);
    CHECK_THROWS_AS((void)f->zero().inv(), DivisionByZero);
    CHECK_THROWS_AS((void)(f->one() / f->zero()), DivisionByZero);
    CHECK_THROWS_AS((void)f->zero().log(), LogOfZero);
    CHECK(f->zero().token() == "0");
    CHECK(f->pow_code(0, 0) == 1);
    CHECK(f->pow_code(0, 5) == 0);
}

TEST_CASE("tokens round-trip through parsing") {
    auto f = FiniteField::make(3, 2);
    for (uint64_t c = 0; c < f->q(); ++c) {
        FieldElem x = f->element(c);
        CHECK(f->parse_token(x.token()).code == c);
    }
    CHECK(f->parse_token("a10").code == f->alpha_power(10).code);
    CHECK_THROWS_AS((void)f->parse_token("b2"), Error);
    CHECK_THROWS_AS((void)f->parse_token("a"), Error);
    CHECK_THROWS_AS((void)f->parse_token("a2x"), Error);
    CHECK_THROWS_AS((void)f->parse_token(""), Error);
}

TEST_CASE("canonical element order is zero then powers") {
    auto f = FiniteField::make(3, 2);
    CHECK(f->element_at(0).code == 0);
    CHECK(f->element_at(1).code == 1);
    CHECK(f->element_at(2).code == f->alpha().code);
    for (uint64_t i = 0; i < f->q(); ++i) CHECK(f->index_of(f->element_at(i)) == i);
    CHECK_THROWS_AS((void)f->element_at(9), Error);
    CHECK_THROWS_AS((void)f->element(9), Error);
}

TEST_CASE("context checks") {
    auto f9a = FiniteField::make(3, 2);
    auto f9b = FiniteField::make(3, 2);
    auto f25 = FiniteField::make(5, 2);
    // structurally identical fields interoperate
    CHECK((f9a->alpha() + f9b->alpha()).code == f9a->add_code(3, 3));
    CHECK_THROWS_AS((void)(f9a->alpha() + f25->alpha()), ContextMismatch);
    CHECK_THROWS_AS((void)(f9a->one() == f25->one()), ContextMismatch);
    FieldElem orphan;
    CHECK_THROWS_AS((void)(orphan + orphan), ContextMismatch);
}

TEST_CASE("cyclotomic classes partition the units") {
    auto f = FiniteField::make(3, 2);
    auto c0 = f->cyclotomic_class(0, 4);
    REQUIRE(c0.size() == 2);
    CHECK(c0[0].code == 1);
    CHECK(c0[1].code == 2);  // alpha^4 = 2
    std::vector<char> seen(f->q(), 0);
    for (uint64_t i = 0; i < 4; ++i)
        for (const FieldElem& x : f->cyclotomic_class(i, 4)) {
            CHECK(!seen[x.code]);
            seen[x.code] = 1;
        }
    CHECK_THROWS_AS((void)f->cyclotomic_class(0, 5), BadDivisor);
    CHECK_THROWS_AS((void)f->cyclotomic_class(4, 4), Error);
}

TEST_CASE("coefficient packing round-trips") {
    auto f = FiniteField::make(5, 2);
    for (uint64_t c = 0; c < f->q(); ++c) CHECK(f->from_coeffs(f->coeffs(c)).code == c);
    CHECK(f->from_coeffs({2, 3}).code == 2 + 3 * 5);
    CHECK_THROWS_AS((void)f->from_coeffs({5, 0}), Error);
    CHECK_THROWS_AS((void)f->from_coeffs({0, 0, 1}), Error);
}

TEST_CASE("element operators agree with code-level arithmetic") {
    auto f = FiniteField::make(7, 2);
    FieldElem a = f->alpha_power(5), b = f->alpha_power(11);
    CHECK((a * b).code == f->mul_code(a.code, b.code));
    CHECK((a + b).code == f->add_code(a.code, b.code));
    CHECK((a - b).code == f->sub_code(a.code, b.code));
    CHECK((a / b).code == f->mul_code(a.code, f->inv_code(b.code)));
    CHECK((-a).code == f->neg_code(a.code));
    CHECK(a.pow(48).code == 1);
    CHECK(a.trace() == f->trace_code(a.code));
    CHECK(a.log() == 5);
}
