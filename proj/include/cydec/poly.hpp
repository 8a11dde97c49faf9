#ifndef CYDEC_POLY_HPP
#define CYDEC_POLY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cydec/field.hpp"

namespace cydec {

/// Canonical form of x^k as a function on E: 0 stays 0, any k >= 1 maps
/// into 1..N. Keeps the 0-vs-N distinction (0^0 = 1 but 0^N = 0).
inline uint32_t normalize_exponent(uint64_t k, uint32_t N) {
    return k == 0 ? 0 : (uint32_t)((k - 1) % N) + 1;
}

/// Dense univariate polynomial over E; index = degree, no trailing zeros,
/// the zero polynomial is the empty list.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Element> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(Element c) { return UniPoly({c}); }
    static UniPoly monomial(Element c, size_t k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    Element coeff(size_t i) const { return i < c_.size() ? c_[i] : Element{0}; }
    const std::vector<Element>& coeffs() const { return c_; }

    Element eval(const FieldSpec& f, Element x) const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().code == 0) c_.pop_back();
    }
    std::vector<Element> c_;
};

UniPoly uni_add(const FieldSpec& f, const UniPoly& a, const UniPoly& b);
UniPoly uni_scale(const FieldSpec& f, Element s, const UniPoly& a);
UniPoly uni_mul(const FieldSpec& f, const UniPoly& a, const UniPoly& b);
/// Product truncated below x^k.
UniPoly uni_mul_mod(const FieldSpec& f, const UniPoly& a, const UniPoly& b, size_t k);
/// Formal derivative with the characteristic-p rule.
UniPoly uni_formal_derivative(const FieldSpec& f, const UniPoly& a);
/// Shift by one power of x (multiply by x).
UniPoly uni_shift(const UniPoly& a);

/// Minimal polynomial m_i(x) of beta^i over GF(q), where beta = alpha^(N/n)
/// has order n: the monic product of (x - beta^j) over the cyclotomic coset
/// of i. All coefficients must pass the x^q = x subfield test.
UniPoly minimal_polynomial(const FieldSpec& f, uint32_t i, uint32_t n, uint32_t q);

/// One term of a sparse multivariate polynomial: exponent vector
/// (entries normalized into {0} union 1..N) and a nonzero coefficient.
struct MpTerm {
    std::vector<uint32_t> exps;
    Element coeff;
    friend bool operator==(const MpTerm&, const MpTerm&) = default;
};

/// Sparse multivariate polynomial over E in canonical form: terms sorted
/// lexicographically ascending by exponent vector, no duplicates, no zero
/// coefficients. Stores only the ambient N, never the field tables, so
/// values stay serializable; evaluation takes the field explicitly.
class SparseMultiPoly {
public:
    SparseMultiPoly(uint32_t arity, uint32_t N) : arity_(arity), N_(N) {}
    SparseMultiPoly(uint32_t arity, uint32_t N, std::vector<MpTerm> sorted_terms)
        : arity_(arity), N_(N), terms_(std::move(sorted_terms)) {}

    uint32_t arity() const { return arity_; }
    uint32_t N() const { return N_; }
    const std::vector<MpTerm>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    Element eval(const FieldSpec& f, std::span<const Element> point) const;

    friend bool operator==(const SparseMultiPoly&, const SparseMultiPoly&) = default;

private:
    uint32_t arity_, N_;
    std::vector<MpTerm> terms_;
};

/// Single-writer accumulation builder for SparseMultiPoly. Contributions
/// with matching exponent vectors sum coefficient-wise; slots whose sum
/// hits zero are dropped at build time. Partial builders over disjoint
/// contribution streams can be merged (term-wise addition), which is what
/// makes parallel partial builds possible.
class MultiPolyBuilder {
public:
    MultiPolyBuilder(const FieldSpec& f, uint32_t arity)
        : field_(&f), arity_(arity), N_(f.N()) {}

    /// Adds coeff * x^exps; raw exponents are normalized here.
    void add(std::span<const uint64_t> raw_exps, Element coeff);
    /// Same, for exponents already in 0..N.
    void add_normalized(std::span<const uint32_t> exps, Element coeff);

    void merge(const MultiPolyBuilder& other);

    SparseMultiPoly build() const;

private:
    const FieldSpec* field_;
    uint32_t arity_, N_;
    std::map<std::vector<uint32_t>, Element> acc_;
};

/// Term-table text format: one term per line, comma-separated uppercase-hex
/// exponents, optional "*<coeff-hex>" suffix (absent means coefficient 1).
std::string to_term_table(const SparseMultiPoly& poly);
SparseMultiPoly parse_term_table(const std::string& text, uint32_t arity, uint32_t N);

}  // namespace cydec

#endif
