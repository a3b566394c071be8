#include "tracecodes/finite_field.hpp"

#include <algorithm>
#include <charconv>

namespace tracecodes {

namespace {

// exp/log/trace tables are built up to this field size
constexpr uint64_t kTableLimit = uint64_t(1) << 20;

bool is_odd_prime(uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

uint64_t checked_pow(uint64_t b, uint64_t e) {
    uint64_t r = 1;
    for (uint64_t i = 0; i < e; ++i) {
        if (r > (uint64_t(1) << 40) / b) throw Error("field too large: p^m exceeds 2^40");
        r *= b;
    }
    return r;
}

void unpack(uint64_t code, uint64_t p, uint64_t m, std::vector<uint64_t>& out) {
    out.assign(m, 0);
    for (uint64_t i = 0; i < m && code; ++i) {
        out[i] = code % p;
        code /= p;
    }
}

uint64_t pack(const std::vector<uint64_t>& v, uint64_t p) {
    uint64_t code = 0;
    for (size_t i = v.size(); i-- > 0;) code = code * p + v[i];
    return code;
}

// v <- v * x mod f; v has length m, f is monic of degree m, low degree first
void mul_by_x(std::vector<uint64_t>& v, const std::vector<uint64_t>& f, uint64_t p) {
    size_t m = v.size();
    uint64_t carry = v[m - 1];
    for (size_t i = m - 1; i > 0; --i) v[i] = v[i - 1];
    v[0] = 0;
    if (carry)
        for (size_t i = 0; i < m; ++i) v[i] = (v[i] + carry * (p - f[i])) % p;
}

// Walks y = x^s from s = 1 and returns the first s with y = 1, or 0 when x is
// not invertible in the quotient. When exp is given and the walk completes a
// full period q-1, exp[e] holds the code of x^e.
uint64_t order_of_x(const std::vector<uint64_t>& f, uint64_t p, uint64_t m, uint64_t q,
                    std::vector<uint64_t>* exp) {
    if (f[0] == 0) return 0;
    std::vector<uint64_t> v(m, 0);
    v[0] = 1;
    if (exp) {
        exp->clear();
        exp->reserve(q - 1);
        exp->push_back(1);
    }
    for (uint64_t s = 1; s <= q - 1; ++s) {
        mul_by_x(v, f, p);
        uint64_t code = pack(v, p);
        if (code == 1) return s;
        if (code == 0) return 0;
        if (exp) exp->push_back(code);
    }
    return 0;
}

// remainder of a mod b over F_p; b monic, vectors low degree first
std::vector<uint64_t> poly_rem(std::vector<uint64_t> a, const std::vector<uint64_t>& b,
                               uint64_t p) {
    size_t db = b.size() - 1;
    while (a.size() > db) {
        uint64_t lead = a.back();
        size_t shift = a.size() - 1 - db;
        if (lead)
            for (size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + lead * (p - b[i])) % p;
        a.pop_back();
    }
    return a;
}

bool is_zero_poly(const std::vector<uint64_t>& a) {
    return std::all_of(a.begin(), a.end(), [](uint64_t c) { return c == 0; });
}

// trial division by every monic polynomial of degree up to m/2
bool is_irreducible(const std::vector<uint64_t>& f, uint64_t p, uint64_t m) {
    for (uint64_t d = 1; 2 * d <= m; ++d) {
        std::vector<uint64_t> g(d + 1, 0);
        g[d] = 1;
        uint64_t total = 1;
        for (uint64_t i = 0; i < d; ++i) total *= p;
        for (uint64_t k = 0; k < total; ++k) {
            uint64_t kk = k;
            for (uint64_t i = 0; i < d; ++i) {
                g[i] = kk % p;
                kk /= p;
            }
            if (is_zero_poly(poly_rem(f, g, p))) return false;
        }
    }
    return true;
}

void validate_modulus_shape(uint64_t p, uint64_t m, const std::vector<uint64_t>& f) {
    if (f.size() != m + 1) throw Error("modulus must have degree m (m+1 coefficients)");
    if (f[m] != 1) throw Error("modulus must be monic");
    for (uint64_t c : f)
        if (c >= p) throw Error("modulus coefficients must lie in [0, p)");
}

const FiniteField& require_field(const FieldElem& x) {
    if (!x.field) throw ContextMismatch("element is missing its field context");
    return *x.field;
}

const FiniteField& require_same(const FieldElem& x, const FieldElem& y) {
    const FiniteField& fx = require_field(x);
    const FiniteField& fy = require_field(y);
    if (&fx != &fy && !same_structure(fx, fy))
        throw ContextMismatch("elements belong to different fields");
    return fx;
}

}  // namespace

FiniteField::FiniteField(uint64_t p, uint64_t m, const std::vector<uint64_t>& modulus)
    : p_(p), m_(m), modulus_(modulus) {
    q_ = checked_pow(p, m);
    validate_modulus_shape(p, m, modulus_);
    if (modulus_[0] == 0) {
        // x divides f, so the class of x cannot generate the units
        if (m == 1) throw NotPrimitive("x is irreducible but its class is 0, not a generator");
        throw NotIrreducible("x divides the modulus");
    }
    bool tables = q_ <= kTableLimit;
    uint64_t ord = order_of_x(modulus_, p_, m_, q_, tables ? &exp_ : nullptr);
    if (ord != q_ - 1) {
        exp_.clear();
        if (!is_irreducible(modulus_, p_, m_))
            throw NotIrreducible("modulus is reducible over F_p");
        throw NotPrimitive("modulus is irreducible but x has multiplicative order " +
                           std::to_string(ord) + " < " + std::to_string(q_ - 1));
    }
    alpha_code_ = (m_ == 1) ? (p_ - modulus_[0]) % p_ : p_;
    if (!exp_.empty()) {
        log_.assign(q_, q_);
        for (uint64_t e = 0; e < q_ - 1; ++e) log_[exp_[e]] = e;
        tr_.assign(q_, 0);
        for (uint64_t e = 0; e < q_ - 1; ++e) {
            uint64_t acc = 0, pe = e;
            for (uint64_t i = 0; i < m_; ++i) {
                acc = add_code(acc, exp_[pe]);
                pe = (pe * p_) % (q_ - 1);
            }
            if (acc >= p_) throw Error("internal: trace is not a prime-subfield constant");
            tr_[exp_[e]] = acc;
        }
    }
}

std::shared_ptr<const FiniteField> FiniteField::make(uint64_t p, uint64_t m,
                                                     const std::vector<uint64_t>& modulus) {
    if (!is_odd_prime(p)) throw NotOddPrime("p must be an odd prime, got " + std::to_string(p));
    if (m < 1) throw Error("extension degree m must be at least 1");
    return std::shared_ptr<const FiniteField>(new FiniteField(p, m, modulus));
}

std::shared_ptr<const FiniteField> FiniteField::make(uint64_t p, uint64_t m) {
    if (!is_odd_prime(p)) throw NotOddPrime("p must be an odd prime, got " + std::to_string(p));
    if (m < 1) throw Error("extension degree m must be at least 1");
    uint64_t q = checked_pow(p, m);
    // first monic polynomial, coefficients compared low degree first, that is
    // primitive; candidates with zero constant term are never primitive
    std::vector<uint64_t> f(m + 1, 0);
    f[m] = 1;
    std::vector<uint64_t> place(m, 1);
    for (size_t j = 1; j < m; ++j) place[j] = place[j - 1] * p;
    for (uint64_t k = 0; k < q; ++k) {
        for (uint64_t j = 0; j < m; ++j) f[j] = (k / place[m - 1 - j]) % p;
        if (f[0] == 0) continue;
        if (order_of_x(f, p, m, q, nullptr) == q - 1)
            return std::shared_ptr<const FiniteField>(new FiniteField(p, m, f));
    }
    throw Error("no primitive modulus found");
}

FieldElem FiniteField::element(uint64_t code) const {
    if (code >= q_) throw Error("element code out of range");
    return {this, code};
}

FieldElem FiniteField::from_coeffs(const std::vector<uint64_t>& c) const {
    if (c.size() > m_) throw Error("coefficient vector longer than the extension degree");
    for (uint64_t d : c)
        if (d >= p_) throw Error("coefficients must lie in [0, p)");
    uint64_t code = 0;
    for (size_t i = c.size(); i-- > 0;) code = code * p_ + c[i];
    return {this, code};
}

FieldElem FiniteField::parse_token(const std::string& s) const {
    if (s == "0") return zero();
    if (s.size() >= 2 && s[0] == 'a') {
        uint64_t e = 0;
        auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), e);
        if (ec == std::errc() && ptr == s.data() + s.size()) return alpha_power(e);
    }
    throw Error("bad element token: " + s);
}

FieldElem FiniteField::element_at(uint64_t index) const {
    if (index >= q_) throw Error("element index out of range");
    return index == 0 ? zero() : alpha_power(index - 1);
}

uint64_t FiniteField::index_of(const FieldElem& x) const {
    const FiniteField& fx = require_field(x);
    if (&fx != this && !same_structure(fx, *this))
        throw ContextMismatch("element belongs to another field");
    return x.code == 0 ? 0 : log_code(x.code) + 1;
}

std::vector<uint64_t> FiniteField::coeffs(uint64_t code) const {
    if (code >= q_) throw Error("element code out of range");
    std::vector<uint64_t> out;
    unpack(code, p_, m_, out);
    return out;
}

uint64_t FiniteField::add_code(uint64_t x, uint64_t y) const {
    uint64_t out = 0, mult = 1;
    for (uint64_t i = 0; i < m_; ++i) {
        out += ((x % p_ + y % p_) % p_) * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return out;
}

uint64_t FiniteField::sub_code(uint64_t x, uint64_t y) const {
    uint64_t out = 0, mult = 1;
    for (uint64_t i = 0; i < m_; ++i) {
        out += ((x % p_ + p_ - y % p_) % p_) * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return out;
}

uint64_t FiniteField::neg_code(uint64_t x) const { return sub_code(0, x); }

uint64_t FiniteField::mul_code(uint64_t x, uint64_t y) const {
    if (exp_.empty()) return mul_code_poly(x, y);
    if (x == 0 || y == 0) return 0;
    return exp_[(log_[x] + log_[y]) % (q_ - 1)];
}

uint64_t FiniteField::mul_code_poly(uint64_t x, uint64_t y) const {
    std::vector<uint64_t> a, b;
    unpack(x, p_, m_, a);
    unpack(y, p_, m_, b);
    std::vector<uint64_t> prod(2 * m_ - 1, 0);
    for (uint64_t i = 0; i < m_; ++i) {
        if (a[i] == 0) continue;
        for (uint64_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
    }
    std::vector<uint64_t> r = poly_rem(std::move(prod), modulus_, p_);
    r.resize(m_, 0);
    return pack(r, p_);
}

uint64_t FiniteField::inv_code(uint64_t x) const {
    if (x == 0) throw DivisionByZero("inverse of zero");
    if (!exp_.empty()) return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
    return pow_code(x, q_ - 2);
}

uint64_t FiniteField::pow_code(uint64_t x, uint64_t e) const {
    if (x == 0) return e == 0 ? 1 : 0;
    if (!exp_.empty()) return exp_[(log_[x] * (e % (q_ - 1))) % (q_ - 1)];
    uint64_t base = x, acc = 1;
    e %= (q_ - 1);
    while (e) {
        if (e & 1) acc = mul_code_poly(acc, base);
        base = mul_code_poly(base, base);
        e >>= 1;
    }
    return acc;
}

uint64_t FiniteField::trace_code(uint64_t x) const {
    if (!tr_.empty()) return tr_[x];
    uint64_t acc = x, y = x;
    for (uint64_t i = 1; i < m_; ++i) {
        y = pow_code(y, p_);
        acc = add_code(acc, y);
    }
    return acc;
}

uint64_t FiniteField::log_code(uint64_t x) const {
    if (x == 0) throw LogOfZero("discrete log of zero");
    if (!log_.empty()) return log_[x];
    uint64_t y = 1;
    for (uint64_t e = 0; e < q_ - 1; ++e) {
        if (y == x) return e;
        y = mul_code_poly(y, alpha_code_);
    }
    throw Error("internal: element not reached by the generator");
}

uint64_t FiniteField::exp_code(uint64_t e) const {
    e %= (q_ - 1);
    if (!exp_.empty()) return exp_[e];
    return pow_code(alpha_code_, e);
}

std::string FiniteField::token_of(uint64_t code) const {
    if (code == 0) return "0";
    return "a" + std::to_string(log_code(code));
}

std::vector<FieldElem> FiniteField::cyclotomic_class(uint64_t i, uint64_t N) const {
    if (N == 0 || (q_ - 1) % N != 0) throw BadDivisor("N must divide p^m - 1");
    if (i >= N) throw Error("cyclotomic class index must lie in [0, N)");
    std::vector<FieldElem> out;
    out.reserve((q_ - 1) / N);
    for (uint64_t j = 0; j < (q_ - 1) / N; ++j) out.push_back(alpha_power(i + j * N));
    return out;
}

bool same_structure(const FiniteField& a, const FiniteField& b) {
    return a.p() == b.p() && a.m() == b.m() && a.modulus() == b.modulus();
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    const FiniteField& f = require_same(*this, o);
    return {&f, f.add_code(code, o.code)};
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    const FiniteField& f = require_same(*this, o);
    return {&f, f.sub_code(code, o.code)};
}

FieldElem FieldElem::operator-() const {
    const FiniteField& f = require_field(*this);
    return {&f, f.neg_code(code)};
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    const FiniteField& f = require_same(*this, o);
    return {&f, f.mul_code(code, o.code)};
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    const FiniteField& f = require_same(*this, o);
    return {&f, f.mul_code(code, f.inv_code(o.code))};
}

bool FieldElem::operator==(const FieldElem& o) const {
    require_same(*this, o);
    return code == o.code;
}

FieldElem FieldElem::inv() const {
    const FiniteField& f = require_field(*this);
    return {&f, f.inv_code(code)};
}

FieldElem FieldElem::pow(uint64_t e) const {
    const FiniteField& f = require_field(*this);
    return {&f, f.pow_code(code, e)};
}

uint64_t FieldElem::trace() const { return require_field(*this).trace_code(code); }

uint64_t FieldElem::log() const { return require_field(*this).log_code(code); }

std::string FieldElem::token() const { return require_field(*this).token_of(code); }

}  // namespace tracecodes
