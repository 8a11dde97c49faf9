#ifndef CYDEC_FIELD_HPP
#define CYDEC_FIELD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cydec/errors.hpp"

namespace cydec {

/// Element of the extension field E = GF(p^e), identified by its
/// polynomial-basis code: the integer whose radix-p digits, little-endian
/// in alpha, are the coordinates. Zero has code 0, one has code 1, and
/// alpha itself has code p.
struct Element {
    uint32_t code = 0;
    friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

/// The extension field E = GF(p^e) with log/antilog tables over a primitive
/// modulus polynomial. Immutable after construction; all operations are
/// pure functions of their inputs, so a FieldSpec can be shared read-only
/// across threads.
///
/// Subfields F = GF(q), q = p^k with k | e, are treated as membership
/// predicates (x^q = x) on E rather than as separate table sets.
class FieldSpec {
public:
    /// Empty spec; usable only after assignment from make/from_poly_code.
    FieldSpec() = default;

    /// Builds tables from a degree-e modulus polynomial over GF(p),
    /// given as a little-endian coefficient list of length e+1.
    /// The polynomial must be irreducible (else ReduciblePolynomial)
    /// and primitive (else NonPrimitivePolynomial).
    static FieldSpec make(uint32_t p, uint32_t e, const std::vector<uint32_t>& primitive_poly);

    /// Same, with the polynomial packed as a radix-p integer code
    /// (for p = 2 this is the usual coefficient bitmask, e.g. GF(32)
    /// with modulus 1 + x^2 + x^5 is (2, 5, 0x25)).
    static FieldSpec from_poly_code(uint32_t p, uint32_t e, uint64_t poly_code);

    uint32_t p() const { return p_; }
    uint32_t e() const { return e_; }
    uint32_t size() const { return size_; }
    uint32_t N() const { return N_; }  // size of E*, = p^e - 1
    uint64_t poly_code() const;
    const std::vector<uint32_t>& primitive_poly() const { return poly_; }

    Element zero() const { return {0}; }
    Element one() const { return {1}; }
    Element alpha() const { return {p_}; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;  // throws DivisionByZero on 0
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    /// a^k for any integer k, reducing the exponent mod N for nonzero a.
    /// Conventions: 0^0 = 1, 0^k = 0 for k > 0, 0^k throws for k < 0.
    Element pow(Element a, int64_t k) const;

    /// alpha^k (k arbitrary, reduced mod N).
    Element from_exp(int64_t k) const;

    /// Discrete log base alpha; a must be nonzero.
    uint32_t log(Element a) const;

    /// Single Frobenius step a -> a^q for a subfield order q = p^k, k | e.
    Element frobenius(Element a, uint32_t q) const;

    /// Membership test for F = GF(q): x^q = x.
    bool in_subfield(Element a, uint32_t q) const;

    /// True iff q = p^k with k | e.
    bool valid_subfield_order(uint32_t q) const;

    /// All q elements of GF(q) inside E, ascending by code.
    std::vector<Element> subfield_elements(uint32_t q) const;

    /// Embedding of a small integer scalar via repeated addition of 1.
    Element from_int(uint64_t m) const;

    /// Sum_{w=0}^{d-1} gamma^{q^w}; requires gamma^{q^d} = gamma
    /// (else NotFixedByFrobeniusPower). The result lies in GF(q).
    Element conjugacy_trace_sum(Element gamma, uint32_t q, uint32_t d) const;

    std::string to_hex(Element a) const;
    Element from_hex(const std::string& s) const;
    std::string describe() const;  // "(p, e, 0x..)"

private:
    uint32_t p_ = 0, e_ = 0, size_ = 0, N_ = 0;
    std::vector<uint32_t> poly_;
    std::vector<int32_t> log_;       // code -> exponent, -1 for 0
    std::vector<uint32_t> antilog_;  // exponent (0..N-1) -> code
};

/// Orbit of i under multiplication by q mod n, sorted ascending.
std::vector<uint32_t> cyclotomic_coset(uint32_t i, uint32_t n, uint64_t q);

}  // namespace cydec

#endif
