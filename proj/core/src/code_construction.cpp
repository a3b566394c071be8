#include "tracecodes/code_construction.hpp"

#include <numeric>
#include <set>
#include <utility>

namespace tracecodes {

namespace {

void require_context(const CodeSpec& spec, const RingElem& x) {
    if (!x.a.field || !same_structure(*x.a.field, spec.f()))
        throw ContextMismatch("argument belongs to another field");
}

void require_context(const CodeSpec& spec, const FieldElem& x) {
    if (!x.field || !same_structure(*x.field, spec.f()))
        throw ContextMismatch("argument belongs to another field");
}

}  // namespace

CodeSpec derive_spec(std::shared_ptr<const FiniteField> field, uint64_t N) {
    if (!field) throw Error("derive_spec needs a field");
    const FiniteField& f = *field;
    uint64_t p = f.p(), q = f.q(), qm1 = q - 1;
    if (N == 0 || qm1 % N != 0) throw BadDivisor("N must divide p^m - 1");
    uint64_t s = qm1 / (p - 1);
    uint64_t N2 = std::gcd(N, s);
    uint64_t N1 = (N / N2) * s;
    uint64_t n = N1 / N;  // equals (p^m - 1)/(N2 (p - 1))

    CodeSpec spec;
    spec.field = std::move(field);
    spec.N = N;
    spec.N1 = N1;
    spec.N2 = N2;
    spec.n = n;
    spec.D.reserve(n);
    for (uint64_t j = 0; j < n; ++j) spec.D.push_back(f.alpha_power(N * j));
    spec.L.reserve(n * q);
    for (uint64_t j = 0; j < n; ++j)
        for (uint64_t i = 0; i < q; ++i) spec.L.push_back({spec.D[j], f.element_at(i)});
    return spec;
}

std::vector<RingElem> eval_codeword(const CodeSpec& spec, const RingElem& a) {
    require_context(spec, a);
    const FiniteField& f = spec.f();
    uint64_t a0 = a.a.code, a1 = a.b.code;
    std::vector<RingElem> word;
    word.reserve(spec.L.size());
    for (const RingElem& x : spec.L) {
        uint64_t pa = f.mul_code(a0, x.a.code);
        uint64_t pb = f.add_code(f.mul_code(a0, x.b.code), f.mul_code(a1, x.a.code));
        word.push_back({FieldElem{&f, f.trace_code(pa)}, FieldElem{&f, f.trace_code(pb)}});
    }
    return word;
}

void for_each_codeword(const CodeSpec& spec,
                       const std::function<void(uint64_t, const std::vector<RingElem>&)>& sink,
                       uint64_t budget) {
    const FiniteField& f = spec.f();
    uint64_t q = f.q();
    uint64_t total = q * q;
    if (total > budget)
        throw BudgetExceeded("p^(2m) = " + std::to_string(total) +
                             " codeword evaluations exceed the budget " + std::to_string(budget));
    std::vector<RingElem> word(spec.L.size(), ring_zero(f));
    for (uint64_t ai = 0; ai < total; ++ai) {
        uint64_t a0 = f.element_at(ai / q).code;
        uint64_t a1 = f.element_at(ai % q).code;
        for (size_t i = 0; i < spec.L.size(); ++i) {
            const RingElem& x = spec.L[i];
            uint64_t pa = f.mul_code(a0, x.a.code);
            uint64_t pb = f.add_code(f.mul_code(a0, x.b.code), f.mul_code(a1, x.a.code));
            word[i] = {FieldElem{&f, f.trace_code(pa)}, FieldElem{&f, f.trace_code(pb)}};
        }
        sink(ai, word);
    }
}

RingCode build_code(const CodeSpec& spec, uint64_t budget) {
    const FiniteField& f = spec.f();
    uint64_t q = f.q(), p = f.p();
    uint64_t total = q * q;
    // materialization is bounded separately from the evaluation budget
    if (total > budget || total * spec.length() > (uint64_t(1) << 27))
        throw BudgetExceeded("materializing " + std::to_string(total) +
                             " codewords of length " + std::to_string(spec.length()) +
                             " exceeds the budget");
    RingCode code;
    code.length = spec.length();
    code.words.reserve(total);
    for_each_codeword(
        spec,
        [&](uint64_t, const std::vector<RingElem>& w) {
            std::vector<uint64_t> packed(w.size());
            for (size_t i = 0; i < w.size(); ++i) packed[i] = w[i].a.code * q + w[i].b.code;
            code.words.push_back(std::move(packed));
        },
        budget);
    std::set<std::vector<uint64_t>> distinct(code.words.begin(), code.words.end());
    code.image_size = distinct.size();
    code.injective = code.image_size == total;
    uint64_t img = code.image_size, k = 0;
    while (img % p == 0) {
        img /= p;
        ++k;
    }
    if (img == 1 && k % 2 == 0)
        code.m_prime = k / 2;
    else
        code.image_anomaly = true;
    return code;
}

std::vector<std::vector<uint32_t>> build_CD(const CodeSpec& spec) {
    const FiniteField& f = spec.f();
    uint64_t q = f.q();
    std::vector<std::vector<uint32_t>> rows;
    rows.reserve(q);
    for (uint64_t i = 0; i < q; ++i) {
        uint64_t b = f.element_at(i).code;
        std::vector<uint32_t> row(spec.D.size());
        for (size_t j = 0; j < spec.D.size(); ++j)
            row[j] = uint32_t(f.trace_code(f.mul_code(b, spec.D[j].code)));
        rows.push_back(std::move(row));
    }
    return rows;
}

uint64_t count_N_b(const CodeSpec& spec, const FieldElem& b) {
    require_context(spec, b);
    const FiniteField& f = spec.f();
    uint64_t count = 0;
    for (const FieldElem& d : spec.D)
        if (f.trace_code(f.mul_code(b.code, d.code)) == 0) ++count;
    return count;
}

uint64_t evaluation_kernel_size(const CodeSpec& spec) {
    const FiniteField& f = spec.f();
    uint64_t q = f.q();
    uint64_t count = 0;
    for (uint64_t i = 0; i < q; ++i) {
        uint64_t beta = f.element_at(i).code;
        bool zero = true;
        for (const FieldElem& d : spec.D)
            if (f.trace_code(f.mul_code(beta, d.code)) != 0) {
                zero = false;
                break;
            }
        count += zero;
    }
    return count;
}

std::vector<std::vector<uint32_t>> gray_image(const CodeSpec& spec, uint64_t budget) {
    uint64_t p = spec.f().p();
    std::vector<std::vector<uint32_t>> out;
    std::set<std::vector<uint32_t>> seen;
    for_each_codeword(
        spec,
        [&](uint64_t, const std::vector<RingElem>& w) {
            std::vector<uint32_t> g(2 * w.size());
            for (size_t i = 0; i < w.size(); ++i) {
                uint64_t ta = w[i].a.code, tb = w[i].b.code;
                g[2 * i] = uint32_t(tb);
                g[2 * i + 1] = uint32_t((ta + tb) % p);
            }
            if (seen.insert(g).second) out.push_back(std::move(g));
        },
        budget);
    return out;
}

bool verify_group_action(const CodeSpec& spec, const RingCode& code) {
    const FiniteField& f = spec.f();
    uint64_t p = f.p(), q = f.q();
    uint64_t nL = spec.L.size();
    if (code.words.size() != q * q || code.length != nL)
        throw Error("code does not match the parameter set");

    // every unit-part value scalar * D[j] must arise exactly once
    constexpr uint64_t kNone = ~uint64_t(0);
    std::vector<std::pair<uint64_t, uint64_t>> rep(q, {kNone, 0});
    for (uint64_t j = 0; j < spec.D.size(); ++j)
        for (uint64_t c = 1; c < p; ++c) {
            uint64_t codeA = f.mul_code(spec.D[j].code, c);
            if (rep[codeA].first != kNone) return false;
            rep[codeA] = {j, c};
        }

    std::vector<RingElem> basis;
    for (uint64_t i = 0; i < f.m(); ++i) {
        FieldElem ai = f.alpha_power(i);
        basis.push_back({ai, f.zero()});
        basis.push_back({f.zero(), ai});
    }

    std::vector<char> seen(nL);
    for (uint64_t li = 0; li < nL; ++li) {
        const RingElem& l = spec.L[li];
        std::vector<const std::vector<uint64_t>*> rows;
        rows.reserve(basis.size());
        for (const RingElem& e : basis) {
            uint64_t ea = f.mul_code(e.a.code, l.a.code);
            uint64_t eb =
                f.add_code(f.mul_code(e.a.code, l.b.code), f.mul_code(e.b.code, l.a.code));
            uint64_t widx = f.index_of(FieldElem{&f, ea}) * q + f.index_of(FieldElem{&f, eb});
            rows.push_back(&code.words[widx]);
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (uint64_t xi = 0; xi < nL; ++xi) {
            const RingElem& x = spec.L[xi];
            uint64_t ya = f.mul_code(l.a.code, x.a.code);
            uint64_t yb =
                f.add_code(f.mul_code(l.a.code, x.b.code), f.mul_code(l.b.code, x.a.code));
            // l x must land on a fresh element of L modulo prime-subfield scalars
            auto [j, c] = rep[ya];
            if (j == kNone) return false;
            uint64_t bprime = f.mul_code(f.inv_code(c), yb);
            uint64_t idx = j * q + f.index_of(FieldElem{&f, bprime});
            if (seen[idx]) return false;
            seen[idx] = 1;
            // Tr(e (l x)) must equal the codeword of e*l at coordinate x
            for (size_t bi = 0; bi < basis.size(); ++bi) {
                uint64_t pa = f.mul_code(basis[bi].a.code, ya);
                uint64_t pb =
                    f.add_code(f.mul_code(basis[bi].a.code, yb), f.mul_code(basis[bi].b.code, ya));
                uint64_t packed = f.trace_code(pa) * q + f.trace_code(pb);
                if ((*rows[bi])[xi] != packed) return false;
            }
        }
    }
    return true;
}

}  // namespace tracecodes
