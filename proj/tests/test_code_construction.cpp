#include <doctest.h>

#include <numeric>
#include <set>
#include <tuple>

#include "tracecodes/code_construction.hpp"

using namespace tracecodes;

namespace {

CodeSpec spec_for(uint64_t p, uint64_t m, uint64_t N) {
    return derive_spec(FiniteField::make(p, m), N);
}

std::vector<uint64_t> d_logs(const CodeSpec& s) {
    std::vector<uint64_t> out;
    for (const FieldElem& d : s.D) out.push_back(d.log());
    return out;
}

}  // namespace

TEST_CASE("derived parameters for known instances") {
    auto check = [](uint64_t p, uint64_t m, uint64_t N, uint64_t N1, uint64_t N2, uint64_t n,
                    uint64_t Lsize) {
        CAPTURE(p);
        CAPTURE(m);
        CAPTURE(N);
        CodeSpec s = spec_for(p, m, N);
        CHECK(s.N1 == N1);
        CHECK(s.N2 == N2);
        CHECK(s.n == n);
        CHECK(s.length() == Lsize);
        CHECK(s.D.size() == n);
        CHECK(s.gray_length() == 2 * Lsize);
        CHECK(s.codeword_count() == s.f().q() * s.f().q());
    };
    check(3, 2, 1, 4, 1, 4, 36);
    check(3, 2, 2, 4, 2, 2, 18);
    check(3, 3, 1, 13, 1, 13, 351);
    check(5, 2, 3, 6, 3, 2, 50);
    check(5, 2, 6, 6, 6, 1, 25);
    check(7, 2, 3, 24, 1, 8, 392);
    check(11, 2, 4, 12, 4, 3, 363);
    check(3, 6, 4, 364, 4, 91, 66339);
}

TEST_CASE("defining sets are the expected generator powers") {
    CHECK(d_logs(spec_for(5, 2, 3)) == std::vector<uint64_t>{0, 3});
    CHECK(d_logs(spec_for(3, 2, 2)) == std::vector<uint64_t>{0, 2});
    CHECK(d_logs(spec_for(11, 2, 4)) == std::vector<uint64_t>{0, 4, 8});
    CHECK(d_logs(spec_for(7, 2, 3)) ==
          std::vector<uint64_t>{0, 3, 6, 9, 12, 15, 18, 21});
}

TEST_CASE("derived invariants hold across all divisors") {
    for (auto [p, m] : {std::pair<uint64_t, uint64_t>{3, 2}, {5, 2}, {3, 3}}) {
        auto f = FiniteField::make(p, m);
        uint64_t qm1 = f->q() - 1, s = qm1 / (p - 1);
        for (uint64_t N = 1; N <= qm1; ++N) {
            if (qm1 % N) continue;
            CodeSpec sp = derive_spec(f, N);
            CHECK(sp.N1 == std::lcm(N, s));
            CHECK(sp.N2 == std::gcd(N, s));
            CHECK(sp.n == sp.N1 / N);
            CHECK(sp.n * sp.N2 * (p - 1) == qm1);
            CHECK(sp.length() == sp.n * f->q());
            // D is a transversal: the n(p-1) scalar multiples are distinct
            std::set<uint64_t> mults;
            for (const FieldElem& d : sp.D)
                for (uint64_t c = 1; c < p; ++c) mults.insert(f->mul_code(d.code, c));
            CHECK(mults.size() == sp.n * (p - 1));
            // L layout: outer D, inner canonical field order
            for (uint64_t j = 0; j < sp.n; ++j)
                for (uint64_t i = 0; i < f->q(); ++i) {
                    const RingElem& x = sp.L[j * f->q() + i];
                    CHECK(x.a.code == sp.D[j].code);
                    CHECK(x.b.code == f->element_at(i).code);
                }
        }
    }
}

TEST_CASE("bad divisors are rejected") {
    auto f = FiniteField::make(3, 2);
    CHECK_THROWS_AS((void)derive_spec(f, 0), BadDivisor);
    CHECK_THROWS_AS((void)derive_spec(f, 3), BadDivisor);
    CHECK_THROWS_AS((void)derive_spec(f, 7), BadDivisor);
    CHECK_THROWS_AS((void)derive_spec(f, 16), BadDivisor);
    CHECK_THROWS_AS((void)derive_spec(nullptr, 1), Error);
}

TEST_CASE("codeword evaluation produces base-ring entries with known weights") {
    CodeSpec s = spec_for(3, 2, 1);
    const FiniteField& f = s.f();
    auto w1 = eval_codeword(s, ring_one(f));
    for (const RingElem& e : w1) CHECK(in_base_ring(e));
    CHECK(lee_weight(w1) == 48);
    CHECK(lee_weight(eval_codeword(s, ring_u(f))) == 54);
    CHECK(lee_weight(eval_codeword(s, ring_zero(f))) == 0);
    CHECK(lee_weight(eval_codeword(s, ring_elem(f.alpha(), f.alpha_power(5)))) == 48);
}

TEST_CASE("evaluation is linear over the ring") {
    CodeSpec s = spec_for(3, 2, 1);
    const FiniteField& f = s.f();
    for (uint64_t i = 0; i < 81; i += 5)
        for (uint64_t j = 0; j < 81; j += 7) {
            RingElem a = ring_element_at(f, i), b = ring_element_at(f, j);
            auto wa = eval_codeword(s, a), wb = eval_codeword(s, b);
            auto ws = eval_codeword(s, a + b);
            for (size_t k = 0; k < ws.size(); ++k) CHECK(ws[k] == wa[k] + wb[k]);
        }
}

TEST_CASE("evaluation rejects foreign elements") {
    CodeSpec s = spec_for(3, 2, 1);
    auto other = FiniteField::make(5, 2);
    CHECK_THROWS_AS((void)eval_codeword(s, ring_one(*other)), ContextMismatch);
    CHECK_THROWS_AS((void)count_N_b(s, other->one()), ContextMismatch);
}

TEST_CASE("streaming walk matches single evaluation") {
    CodeSpec s = spec_for(3, 2, 1);
    const FiniteField& f = s.f();
    uint64_t visited = 0;
    for_each_codeword(s, [&](uint64_t ai, const std::vector<RingElem>& w) {
        CHECK(ai == visited);
        ++visited;
        if (ai % 17 == 0) {
            auto direct = eval_codeword(s, ring_element_at(f, ai));
            CHECK(w == direct);
        }
    });
    CHECK(visited == 81);
}

TEST_CASE("walk budget is enforced") {
    CodeSpec s = spec_for(3, 2, 1);
    CHECK_THROWS_AS(for_each_codeword(s, [](uint64_t, const std::vector<RingElem>&) {}, 80),
                    BudgetExceeded);
    CHECK_THROWS_AS((void)build_code(s, 80), BudgetExceeded);
    CHECK_THROWS_AS((void)gray_image(s, 80), BudgetExceeded);
}

TEST_CASE("materialization cap rejects oversized codes") {
    // 531441 codewords of length 66339 would not fit in memory
    CodeSpec s = spec_for(3, 6, 4);
    CHECK_THROWS_AS((void)build_code(s), BudgetExceeded);
}

TEST_CASE("injective instances") {
    auto check = [](uint64_t p, uint64_t m, uint64_t N, uint64_t image, uint64_t mp) {
        CAPTURE(p);
        CAPTURE(N);
        CodeSpec s = spec_for(p, m, N);
        RingCode c = build_code(s);
        CHECK(c.image_size == image);
        CHECK(c.injective);
        CHECK(!c.image_anomaly);
        REQUIRE(c.m_prime.has_value());
        CHECK(*c.m_prime == mp);
        CHECK(evaluation_kernel_size(s) == 1);
    };
    check(3, 2, 1, 81, 2);
    check(7, 2, 3, 2401, 2);
    check(5, 2, 3, 625, 2);
}

TEST_CASE("non-injective instances collapse to odd powers") {
    CodeSpec s1 = spec_for(5, 2, 6);
    RingCode c1 = build_code(s1);
    CHECK(c1.image_size == 125);
    CHECK(!c1.injective);
    CHECK(c1.image_anomaly);
    CHECK(!c1.m_prime.has_value());
    CHECK(evaluation_kernel_size(s1) == 5);

    CodeSpec s2 = spec_for(3, 2, 4);
    RingCode c2 = build_code(s2);
    CHECK(c2.image_size == 27);
    CHECK(!c2.injective);
    CHECK(c2.image_anomaly);
    CHECK(evaluation_kernel_size(s2) == 3);
}

TEST_CASE("kernel size accounts for the image exactly") {
    for (auto [p, m, N] : {std::tuple<uint64_t, uint64_t, uint64_t>{3, 2, 1},
                           {3, 2, 2},
                           {3, 2, 4},
                           {5, 2, 6},
                           {5, 2, 3}}) {
        CodeSpec s = spec_for(p, m, N);
        RingCode c = build_code(s);
        CHECK(c.image_size * evaluation_kernel_size(s) == s.codeword_count());
    }
}

TEST_CASE("companion code rows and zero counts") {
    CodeSpec s = spec_for(3, 2, 1);
    const FiniteField& f = s.f();
    auto rows = build_CD(s);
    REQUIRE(rows.size() == 9);
    CHECK(rows[0] == std::vector<uint32_t>(4, 0));
    CHECK(count_N_b(s, f.zero()) == 4);
    for (uint64_t i = 1; i < 9; ++i) {
        FieldElem b = f.element_at(i);
        uint64_t zeros = 0;
        for (uint32_t e : rows[i]) zeros += (e == 0);
        CHECK(zeros == count_N_b(s, b));
        CHECK(count_N_b(s, b) == 1);
    }
}

TEST_CASE("gray image sizes match ring image sizes") {
    CodeSpec s = spec_for(3, 2, 1);
    auto img = gray_image(s);
    CHECK(img.size() == 81);
    CHECK(img[0] == std::vector<uint32_t>(72, 0));
    for (const auto& g : img) CHECK(g.size() == 72);

    CodeSpec s2 = spec_for(3, 2, 4);
    CHECK(gray_image(s2).size() == 27);
}

TEST_CASE("group action holds on genuine codes") {
    for (auto [p, m, N] : {std::tuple<uint64_t, uint64_t, uint64_t>{3, 2, 1}, {5, 2, 3}}) {
        CodeSpec s = spec_for(p, m, N);
        RingCode c = build_code(s);
        CHECK(verify_group_action(s, c));
    }
}

TEST_CASE("group action detects a corrupted defining set") {
    CodeSpec s = spec_for(3, 2, 1);
    RingCode c = build_code(s);
    CodeSpec broken = s;
    broken.D[1] = broken.D[0];
    CHECK(!verify_group_action(broken, c));
}

TEST_CASE("group action detects a corrupted codeword table") {
    CodeSpec s = spec_for(3, 2, 1);
    RingCode c = build_code(s);
    REQUIRE(verify_group_action(s, c));
    // row 1 is Ev(u), referenced through the basis element u acting on L[0]
    c.words[1][0] = (c.words[1][0] + 1) % 81;
    CHECK(!verify_group_action(s, c));
}

TEST_CASE("group action validates shapes") {
    CodeSpec s = spec_for(3, 2, 1);
    RingCode c = build_code(s);
    RingCode wrong = c;
    wrong.words.pop_back();
    CHECK_THROWS_AS((void)verify_group_action(s, wrong), Error);
}
