#include "tracecodes/character_sums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tracecodes {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

uint64_t ipow(uint64_t b, uint64_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

void require_context(const CodeSpec& spec, const RingElem& x) {
    if (!x.a.field || !same_structure(*x.a.field, spec.f()))
        throw ContextMismatch("argument belongs to another field");
}

bool parity_case(const FiniteField& f) {
    // m even, or p = 3 (mod 4) with m odd
    return f.m() % 2 == 0 || (f.p() % 4 == 3 && f.m() % 2 == 1);
}

void sort_rows(std::vector<PredictedRow>& rows) {
    std::sort(rows.begin(), rows.end(),
              [](const PredictedRow& a, const PredictedRow& b) { return a.weight < b.weight; });
}

}  // namespace

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::TableI: return "TableI";
        case CaseTag::TableII: return "TableII";
        case CaseTag::TableIII: return "TableIII";
        case CaseTag::Thm22Case1: return "Thm2.2-case1";
        case CaseTag::Thm22Case2: return "Thm2.2-case2";
        case CaseTag::BoundsOnly: return "BoundsOnly";
        case CaseTag::NoTheoremApplies: return "no theorem applies";
    }
    throw Error("unknown case tag");
}

CharacterSpec additive_character(const FiniteField& f) {
    return {CharacterSpec::Kind::AdditiveCanonical, 0, &f};
}

CharacterSpec multiplicative_character(const FiniteField& f, uint64_t index) {
    return {CharacterSpec::Kind::Multiplicative, index % f.unit_count(), &f};
}

std::complex<double> char_eval(const CharacterSpec& c, const FieldElem& x) {
    if (!c.field || !x.field) throw ContextMismatch("character or element without a field");
    if (x.field != c.field && !same_structure(*x.field, *c.field))
        throw ContextMismatch("character and element fields differ");
    const FiniteField& f = *c.field;
    if (c.kind == CharacterSpec::Kind::AdditiveCanonical)
        return std::polar(1.0, kTau * double(f.trace_code(x.code)) / double(f.p()));
    if (x.is_zero()) throw CharOfZero("multiplicative character applied to zero");
    uint64_t u = f.unit_count();
    uint64_t e = ((c.index % u) * (f.log_code(x.code) % u)) % u;
    return std::polar(1.0, kTau * double(e) / double(u));
}

std::complex<double> gauss_sum(const CharacterSpec& psi, const CharacterSpec& chi) {
    if (psi.kind != CharacterSpec::Kind::Multiplicative ||
        chi.kind != CharacterSpec::Kind::AdditiveCanonical)
        throw Error("gauss_sum expects a multiplicative then an additive character");
    if (!psi.field || !chi.field || !same_structure(*psi.field, *chi.field))
        throw ContextMismatch("gauss_sum characters live on different fields");
    const FiniteField& f = *psi.field;
    std::complex<double> acc = 0;
    for (uint64_t e = 0; e < f.unit_count(); ++e) {
        FieldElem x = f.alpha_power(e);
        acc += char_eval(psi, x) * char_eval(chi, x);
    }
    return acc;
}

int64_t round_checked(double value, double tol) {
    int64_t r = std::llround(value);
    if (std::abs(value - double(r)) >= tol)
        throw ResidualTooLarge("value " + std::to_string(value) +
                               " is not within " + std::to_string(tol) + " of an integer");
    return r;
}

uint64_t N_b_via_charsum(const CodeSpec& spec, const FieldElem& b, double* residual) {
    const FiniteField& f = spec.f();
    if (!b.field || !same_structure(*b.field, f))
        throw ContextMismatch("argument belongs to another field");
    if (b.is_zero()) throw CharOfZero("the N(b) expansion needs b != 0");
    uint64_t qm1 = f.unit_count(), N2 = spec.N2;
    uint64_t phi_index = qm1 / N2;
    CharacterSpec chi = additive_character(f);
    std::complex<double> S = 0;
    for (uint64_t j = 0; j < N2; ++j) {
        uint64_t idx = (phi_index * j) % qm1;
        CharacterSpec phij = multiplicative_character(f, idx);
        CharacterSpec phij_conj = multiplicative_character(f, (qm1 - idx) % qm1);
        S += gauss_sum(phij_conj, chi) * char_eval(phij, b);
    }
    std::complex<double> total = (double(spec.n) + S / double(N2)) / double(f.p());
    int64_t r = std::llround(total.real());
    double res = std::max(std::abs(total.real() - double(r)), std::abs(total.imag()));
    if (residual) *residual = res;
    if (res >= kResidualTol)
        throw ResidualTooLarge("N(b) expansion drifted: residual " + std::to_string(res));
    if (r < 0) throw Error("internal: negative count from the N(b) expansion");
    return uint64_t(r);
}

std::complex<double> theta(const CodeSpec& spec, const RingElem& a) {
    require_context(spec, a);
    const FiniteField& f = spec.f();
    uint64_t p = f.p();
    std::vector<std::complex<double>> w(p);
    for (uint64_t r = 0; r < p; ++r) w[r] = std::polar(1.0, kTau * double(r) / double(p));
    uint64_t a0 = a.a.code, a1 = a.b.code;
    std::complex<double> acc = 0;
    for (const RingElem& x : spec.L) {
        uint64_t pa = f.mul_code(a0, x.a.code);
        uint64_t pb = f.add_code(f.mul_code(a0, x.b.code), f.mul_code(a1, x.a.code));
        uint64_t ta = f.trace_code(pa), tb = f.trace_code(pb);
        acc += w[tb] + w[(ta + tb) % p];
    }
    return acc;
}

uint64_t lee_weight_via_theta(const CodeSpec& spec, const RingElem& a, double* residual) {
    const FiniteField& f = spec.f();
    uint64_t p = f.p();
    uint64_t s = 2 * spec.L.size();
    std::complex<double> T = 0;
    // the scalars are the prime-subfield constants 1 .. p-1
    for (uint64_t t = 1; t < p; ++t) {
        RingElem ta{FieldElem{&f, f.mul_code(a.a.code, t)}, FieldElem{&f, f.mul_code(a.b.code, t)}};
        T += theta(spec, ta);
    }
    double val = (double((p - 1) * s) - T.real()) / double(p);
    int64_t r = std::llround(val);
    double res = std::max(std::abs(val - double(r)), std::abs(T.imag()) / double(p));
    if (residual) *residual = res;
    if (res >= kResidualTol)
        throw ResidualTooLarge("Lee weight via theta drifted: residual " + std::to_string(res));
    if (r < 0) throw Error("internal: negative weight from the theta formula");
    return uint64_t(r);
}

PredictedDistribution predict_distribution(const CodeSpec& spec) {
    PredictedDistribution out;
    const FiniteField& f = spec.f();
    uint64_t p = f.p(), m = f.m(), q = f.q(), N2 = spec.N2;
    auto& hyp = out.hypothesis_report;
    bool parity = parity_case(f);

    if (N2 == 1) {
        hyp.push_back({"N2 == 1", true});
        hyp.push_back({"m even or (p = 3 (mod 4) and m odd)", parity});
        if (parity) {
            out.case_tag = CaseTag::TableI;
            uint64_t w2 = 2 * ipow(p, 2 * m - 1);
            uint64_t w1 = w2 - 2 * ipow(p, m - 1);
            out.rows = {{0, 1}, {w1, q * (q - 1)}, {w2, q - 1}};
            out.expected_total = q * q;
        }
        return out;
    }

    hyp.push_back({"N2 > 2", N2 > 2});
    if (N2 > 2) {
        auto w = semiprimitive_witness(p, N2, m);
        hyp.push_back({"exists k with p^k = -1 (mod N2) and 2k | m", w.has_value()});
        if (w) {
            auto [k, t] = *w;
            uint64_t ratio = (ipow(p, k) + 1) / N2;
            bool case1 = N2 % 2 == 0 && t % 2 == 1 && ratio % 2 == 1;
            hyp.push_back({"N2 even", N2 % 2 == 0});
            hyp.push_back({"t odd", t % 2 == 1});
            hyp.push_back({"(p^k+1)/N2 odd", ratio % 2 == 1});
            uint64_t sq = ipow(p, m / 2);  // m even since 2k | m
            uint64_t pm1 = ipow(p, m - 1);
            uint64_t unit_w = 2 * pm1 * (q - 1) / N2;
            if (case1) {
                bool guard = N2 < sq + 1;
                hyp.push_back({"N2 < p^(m/2) + 1", guard});
                if (guard) {
                    out.case_tag = CaseTag::TableII;
                    uint64_t wa = 2 * pm1 * (q - (N2 - 1) * sq) / N2;
                    uint64_t wb = 2 * pm1 * (q + sq) / N2;
                    out.rows = {{0, 1},
                                {wa, (q - 1) / N2},
                                {unit_w, q * (q - 1)},
                                {wb, (N2 - 1) * (q - 1) / N2}};
                    sort_rows(out.rows);
                    out.expected_total = q * q;
                    return out;
                }
            } else {
                bool t_even = t % 2 == 0;
                bool guard = t_even || sq > N2 - 1;  // p^(m/2) + (-1)^t (N2-1) > 0
                hyp.push_back({"p^(m/2) + (-1)^t (N2-1) > 0", guard});
                if (guard) {
                    out.case_tag = CaseTag::TableIII;
                    uint64_t wa = t_even ? 2 * pm1 * (q + (N2 - 1) * sq) / N2
                                         : 2 * pm1 * (q - (N2 - 1) * sq) / N2;
                    uint64_t wb = t_even ? 2 * pm1 * (q - sq) / N2 : 2 * pm1 * (q + sq) / N2;
                    out.rows = {{0, 1},
                                {wa, (q - 1) / N2},
                                {unit_w, q * (q - 1)},
                                {wb, (N2 - 1) * (q - 1) / N2}};
                    sort_rows(out.rows);
                    out.expected_total = q * q;
                    return out;
                }
            }
        }
    }

    bool in_range = N2 > 1 && (N2 - 1) * (N2 - 1) < q;  // 1 < N2 < p^(m/2) + 1
    hyp.push_back({"1 < N2 < p^(m/2) + 1", in_range});
    hyp.push_back({"m even or (p = 3 (mod 4) and m odd)", parity});
    if (in_range && parity) {
        out.case_tag = CaseTag::BoundsOnly;
        out.max_nonzero_weights = N2 + 1;
        double pm1 = double(ipow(p, m - 1));
        double sq = std::sqrt(double(q));
        out.d_min = 2.0 * pm1 * (double(q) - double(N2 - 1) * sq) / double(N2);
        out.d_max = 2.0 * pm1 * double(q - 1) / double(N2);
        out.expected_total = q * q;
    }
    return out;
}

PredictedDistribution predict_CD_cases(const CodeSpec& spec) {
    PredictedDistribution out;
    const FiniteField& f = spec.f();
    uint64_t p = f.p(), m = f.m(), q = f.q(), N2 = spec.N2;
    auto& hyp = out.hypothesis_report;

    hyp.push_back({"N2 > 2", N2 > 2});
    if (N2 <= 2) return out;
    auto w = semiprimitive_witness(p, N2, m);
    hyp.push_back({"exists k with p^k = -1 (mod N2) and 2k | m", w.has_value()});
    if (!w) return out;
    auto [k, t] = *w;
    uint64_t ratio = (ipow(p, k) + 1) / N2;
    bool case1 = N2 % 2 == 0 && t % 2 == 1 && ratio % 2 == 1;
    hyp.push_back({"N2 even", N2 % 2 == 0});
    hyp.push_back({"t odd", t % 2 == 1});
    hyp.push_back({"(p^k+1)/N2 odd", ratio % 2 == 1});
    uint64_t sq = ipow(p, m / 2);
    uint64_t f1 = (q - 1) / N2, f2 = (N2 - 1) * (q - 1) / N2;
    if (case1) {
        bool guard = N2 < sq + 1;
        hyp.push_back({"N2 < p^(m/2) + 1", guard});
        if (!guard) return out;
        out.case_tag = CaseTag::Thm22Case1;
        uint64_t w1 = (q - (N2 - 1) * sq) / (p * N2);
        uint64_t w2 = (q + sq) / (p * N2);
        out.rows = {{0, 1}, {w1, f1}, {w2, f2}};
    } else {
        bool t_even = t % 2 == 0;
        bool guard = t_even || sq > N2 - 1;
        hyp.push_back({"p^(m/2) + (-1)^t (N2-1) > 0", guard});
        if (!guard) return out;
        out.case_tag = CaseTag::Thm22Case2;
        uint64_t w1 = t_even ? (q + (N2 - 1) * sq) / (p * N2) : (q - (N2 - 1) * sq) / (p * N2);
        uint64_t w2 = t_even ? (q - sq) / (p * N2) : (q + sq) / (p * N2);
        out.rows = {{0, 1}, {w1, f1}, {w2, f2}};
    }
    sort_rows(out.rows);
    out.expected_total = q;
    return out;
}

PredictedDistribution predict_CD_distribution(const CodeSpec& spec) {
    PredictedDistribution out = predict_CD_cases(spec);
    if (out.case_tag == CaseTag::Thm22Case1 || out.case_tag == CaseTag::Thm22Case2) return out;
    for (const HypothesisCheck& h : out.hypothesis_report)
        if (!h.holds) throw HypothesisFailed(h.condition);
    throw Error("internal: no violated hypothesis recorded");
}

GriesmerResult griesmer_check(uint64_t length, uint64_t dimension, uint64_t distance,
                              uint64_t q) {
    if (q < 2 || dimension == 0) throw Error("griesmer_check needs q >= 2 and dimension >= 1");
    GriesmerResult r;
    uint64_t qi = 1;
    bool saturated = false;  // once q^i > d every further term is 1
    for (uint64_t i = 0; i < dimension; ++i) {
        r.sum += saturated ? 1 : (distance + qi - 1) / qi;
        if (!saturated) {
            if (qi > distance || qi > (uint64_t(1) << 62) / q)
                saturated = true;
            else
                qi *= q;
        }
    }
    r.meets_with_equality = r.sum == length;
    return r;
}

std::optional<std::pair<uint64_t, uint64_t>> semiprimitive_witness(uint64_t p, uint64_t N2,
                                                                   uint64_t m) {
    if (N2 == 0) throw Error("N2 must be positive");
    uint64_t target = (N2 - 1) % N2;
    uint64_t r = 1 % N2;
    for (uint64_t k = 1; k <= N2; ++k) {
        r = (r * p) % N2;
        if (r == target) {
            if (m % (2 * k) != 0) return std::nullopt;
            return std::make_pair(k, m / (2 * k));
        }
    }
    return std::nullopt;
}

}  // namespace tracecodes
