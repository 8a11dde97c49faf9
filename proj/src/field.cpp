#include "cydec/field.hpp"

#include <algorithm>
#include <cstdio>

#include "cydec/poly.hpp"

namespace cydec {

namespace {

constexpr uint64_t kMaxTableEntries = 1u << 20;

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// GF(p)[x] helpers on little-endian coefficient vectors, used only during
// field construction.
using PPoly = std::vector<uint32_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

uint32_t pinv_scalar(uint32_t a, uint32_t p) {
    uint32_t r = 1, b = a % p;
    for (uint32_t k = p - 2; k > 0; k >>= 1) {
        if (k & 1) r = (uint64_t)r * b % p;
        b = (uint64_t)b * b % p;
    }
    return r;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + (uint64_t)a[i] * b[j]) % p;
    }
    // reduce mod f (f monic)
    size_t df = f.size() - 1;
    for (size_t i = prod.size(); i-- > df;) {
        uint32_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (size_t j = 0; j < df; ++j)
            prod[i - df + j] = (prod[i - df + j] + (uint64_t)c * (p - f[j]) % p) % p;
    }
    prod.resize(df);
    ptrim(prod);
    return prod;
}

PPoly pgcd(PPoly a, PPoly b, uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b
        uint32_t lead_inv = pinv_scalar(b.back(), p);
        while (a.size() >= b.size()) {
            uint32_t c = (uint64_t)a.back() * lead_inv % p;
            size_t shift = a.size() - b.size();
            if (c)
                for (size_t j = 0; j < b.size(); ++j)
                    a[shift + j] = (a[shift + j] + (uint64_t)c * (p - b[j]) % p) % p;
            a.pop_back();
            ptrim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

bool poly_irreducible(const PPoly& f, uint32_t p) {
    // f has an irreducible factor of degree <= e/2 iff
    // gcd(x^{p^k} - x, f) is nontrivial for some k <= e/2.
    uint32_t e = (uint32_t)f.size() - 1;
    PPoly xq = {0, 1};  // x
    for (uint32_t k = 1; 2 * k <= e; ++k) {
        // xq <- xq^p mod f
        PPoly acc = {1}, base = xq;
        for (uint32_t h = p; h > 0; h >>= 1) {
            if (h & 1) acc = pmulmod(acc, base, f, p);
            base = pmulmod(base, base, f, p);
        }
        xq = acc;
        PPoly diff = xq;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;  // xq - x
        ptrim(diff);
        PPoly g = pgcd(diff, f, p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace

FieldSpec FieldSpec::make(uint32_t p, uint32_t e, const std::vector<uint32_t>& primitive_poly) {
    if (!is_prime(p)) throw Error("field characteristic must be prime");
    if (e == 0) throw Error("extension degree must be positive");
    if (primitive_poly.size() != e + 1 || primitive_poly[e] % p == 0)
        throw Error("modulus polynomial must have degree e");
    if (primitive_poly[0] % p == 0)
        throw ReduciblePolynomial("modulus polynomial has zero constant term (divisible by x)");

    uint64_t size = 1;
    for (uint32_t i = 0; i < e; ++i) {
        size *= p;
        if (size > kMaxTableEntries) throw Error("field too large (table cap 2^20 entries)");
    }

    FieldSpec fs;
    fs.p_ = p;
    fs.e_ = e;
    fs.size_ = (uint32_t)size;
    fs.N_ = (uint32_t)size - 1;
    fs.poly_.assign(primitive_poly.begin(), primitive_poly.end());
    for (auto& c : fs.poly_) c %= p;

    // normalize to monic; the quotient ring (and the codes) do not change
    if (fs.poly_[e] != 1) {
        uint32_t s = pinv_scalar(fs.poly_[e], p);
        for (auto& c : fs.poly_) c = (uint64_t)c * s % p;
    }

    if (!poly_irreducible(fs.poly_, p))
        throw ReduciblePolynomial("modulus polynomial is reducible over the prime field");

    // Fill antilog/log by repeated multiplication by alpha. Since the modulus
    // is irreducible, a return to 1 before step N means alpha's order is a
    // proper divisor of N.
    fs.log_.assign(fs.size_, -1);
    fs.antilog_.assign(fs.N_, 0);
    std::vector<uint32_t> cur(e, 0);
    cur[0] = 1;
    auto code_of = [&](const std::vector<uint32_t>& d) {
        uint32_t c = 0;
        for (uint32_t i = e; i-- > 0;) c = c * p + d[i];
        return c;
    };
    for (uint32_t k = 0; k < fs.N_; ++k) {
        uint32_t c = code_of(cur);
        if (c == 0) throw ReduciblePolynomial("zero divisor during table construction");
        if (c == 1 && k > 0)
            throw NonPrimitivePolynomial("alpha has order " + std::to_string(k) +
                                         ", expected " + std::to_string(fs.N_));
        fs.antilog_[k] = c;
        fs.log_[c] = (int32_t)k;
        // cur <- alpha * cur
        uint32_t carry = cur[e - 1];
        for (uint32_t i = e - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (carry)
            for (uint32_t i = 0; i < e; ++i)
                cur[i] = (cur[i] + carry * (p - fs.poly_[i])) % p;
    }
    if (code_of(cur) != 1)
        throw NonPrimitivePolynomial("alpha does not have order " + std::to_string(fs.N_));
    return fs;
}

FieldSpec FieldSpec::from_poly_code(uint32_t p, uint32_t e, uint64_t poly_code) {
    std::vector<uint32_t> coeffs;
    while (poly_code) {
        coeffs.push_back((uint32_t)(poly_code % p));
        poly_code /= p;
    }
    coeffs.resize(std::max<size_t>(coeffs.size(), e + 1), 0);
    return make(p, e, coeffs);
}

uint64_t FieldSpec::poly_code() const {
    uint64_t c = 0;
    for (uint32_t i = e_ + 1; i-- > 0;) c = c * p_ + poly_[i];
    return c;
}

Element FieldSpec::add(Element a, Element b) const {
    if (p_ == 2) return {a.code ^ b.code};
    uint32_t r = 0, mult = 1, x = a.code, y = b.code;
    for (uint32_t i = 0; i < e_; ++i) {
        r += (x % p_ + y % p_) % p_ * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return {r};
}

Element FieldSpec::neg(Element a) const {
    if (p_ == 2) return a;
    uint32_t r = 0, mult = 1, x = a.code;
    for (uint32_t i = 0; i < e_; ++i) {
        uint32_t d = x % p_;
        r += (d ? p_ - d : 0) * mult;
        x /= p_;
        mult *= p_;
    }
    return {r};
}

Element FieldSpec::sub(Element a, Element b) const { return add(a, neg(b)); }

Element FieldSpec::mul(Element a, Element b) const {
    if (a.code == 0 || b.code == 0) return {0};
    uint32_t s = (uint32_t)log_[a.code] + (uint32_t)log_[b.code];
    if (s >= N_) s -= N_;
    return {antilog_[s]};
}

Element FieldSpec::inv(Element a) const {
    if (a.code == 0) throw DivisionByZero("inverse of zero");
    uint32_t k = (uint32_t)log_[a.code];
    return {antilog_[k == 0 ? 0 : N_ - k]};
}

Element FieldSpec::pow(Element a, int64_t k) const {
    if (a.code == 0) {
        if (k == 0) return one();
        if (k > 0) return zero();
        throw DivisionByZero("negative power of zero");
    }
    int64_t km = k % N_;
    if (km < 0) km += N_;
    uint32_t s = (uint32_t)((int64_t)log_[a.code] * km % N_);
    return {antilog_[s]};
}

Element FieldSpec::from_exp(int64_t k) const {
    int64_t km = k % N_;
    if (km < 0) km += N_;
    return {antilog_[km]};
}

uint32_t FieldSpec::log(Element a) const {
    if (a.code == 0) throw DivisionByZero("log of zero");
    return (uint32_t)log_[a.code];
}

bool FieldSpec::valid_subfield_order(uint32_t q) const {
    if (q < 2) return false;
    uint64_t v = q;
    uint32_t k = 0;
    while (v % p_ == 0) {
        v /= p_;
        ++k;
    }
    return v == 1 && k >= 1 && e_ % k == 0;
}

Element FieldSpec::frobenius(Element a, uint32_t q) const {
    if (!valid_subfield_order(q)) throw Error("not a subfield order: " + std::to_string(q));
    return pow(a, q);
}

bool FieldSpec::in_subfield(Element a, uint32_t q) const {
    if (!valid_subfield_order(q)) throw Error("not a subfield order: " + std::to_string(q));
    return pow(a, q) == a;
}

std::vector<Element> FieldSpec::subfield_elements(uint32_t q) const {
    std::vector<Element> out;
    out.reserve(q);
    for (uint32_t c = 0; c < size_; ++c)
        if (in_subfield({c}, q)) out.push_back({c});
    return out;
}

Element FieldSpec::from_int(uint64_t m) const { return {(uint32_t)(m % p_)}; }

Element FieldSpec::conjugacy_trace_sum(Element gamma, uint32_t q, uint32_t d) const {
    Element cur = gamma, sum = zero();
    for (uint32_t w = 0; w < d; ++w) {
        sum = add(sum, cur);
        cur = frobenius(cur, q);
    }
    if (cur != gamma)
        throw NotFixedByFrobeniusPower("gamma^(q^d) != gamma for d = " + std::to_string(d));
    return sum;
}

std::string FieldSpec::to_hex(Element a) const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%x", a.code);
    return buf;
}

Element FieldSpec::from_hex(const std::string& s) const {
    if (s.empty()) throw ParseError("empty element literal");
    uint64_t v = 0;
    for (char ch : s) {
        int d;
        if (ch >= '0' && ch <= '9') d = ch - '0';
        else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
        else throw ParseError("bad hex digit in element literal: " + s);
        v = v * 16 + d;
        if (v >= size_) throw ParseError("element code out of range: " + s);
    }
    return {(uint32_t)v};
}

std::string FieldSpec::describe() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "(%u, %u, 0x%llx)", p_, e_, (unsigned long long)poly_code());
    return buf;
}

std::vector<uint32_t> cyclotomic_coset(uint32_t i, uint32_t n, uint64_t q) {
    std::vector<uint32_t> coset;
    uint32_t j = i % n;
    do {
        coset.push_back(j);
        j = (uint32_t)((uint64_t)j * q % n);
    } while (j != i % n);
    std::sort(coset.begin(), coset.end());
    return coset;
}

}  // namespace cydec
