#ifndef CYDEC_CODE_HPP
#define CYDEC_CODE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cydec/poly.hpp"

namespace cydec {

/// Error pattern of weight 1..t: positions strictly increasing, magnitudes
/// nonzero elements of the base field F.
struct ErrorPattern {
    struct Entry {
        uint32_t pos;
        Element mag;
        friend constexpr auto operator<=>(const Entry&, const Entry&) = default;
    };
    std::vector<Entry> entries;

    uint32_t weight() const { return (uint32_t)entries.size(); }
    friend bool operator==(const ErrorPattern&, const ErrorPattern&) = default;
    friend auto operator<=>(const ErrorPattern& a, const ErrorPattern& b) {
        return a.entries <=> b.entries;
    }
};

/// Values of the base-set syndrome maps: entry j is S_{r_j}.
struct SyndromeTuple {
    std::vector<Element> values;
    friend bool operator==(const SyndromeTuple&, const SyndromeTuple&) = default;
};

/// A cyclic code of length n over F = GF(q) inside E, described by its base
/// set R_C of cyclotomic-coset representatives. The defining set S_C is the
/// disjoint union of the cosets, the generator is the product of the
/// corresponding minimal polynomials, and beta = alpha^(N/n) is the fixed
/// primitive n-th root of unity. Immutable and shareable once built.
struct CyclicCodeSpec {
    FieldSpec field;
    uint32_t n = 0;
    uint32_t q = 0;
    uint32_t beta_exp = 0;            // beta = alpha^beta_exp
    std::vector<uint32_t> S_C;        // sorted
    std::vector<uint32_t> R_C;        // as given
    UniPoly g;                        // generator, coefficients in F
    uint32_t t = 0;                   // error-correcting capacity (trusted)
    bool gcd_n_qm1_is_one = false;    // gcd(n, q-1) == 1

    uint32_t dim() const { return n - (uint32_t)S_C.size(); }
    Element beta_pow(int64_t k) const { return field.from_exp((int64_t)beta_exp * k); }
    bool in_defining_set(uint32_t r) const;
};

/// Assembles a CyclicCodeSpec and verifies its invariants.
/// Throws BadOrder if n does not divide N, OverlappingCosets if two base-set
/// residues share a coset, GeneratorNotOverSubfield if the generator has a
/// coefficient outside F. gcd(n, q-1) != 1 is accepted (the structural
/// base-field guarantees downgrade to reported findings in that regime).
CyclicCodeSpec build_code(FieldSpec field, uint32_t n, uint32_t q,
                          const std::vector<uint32_t>& R_C, uint32_t t);

/// Total number of correctable patterns: sum over v=1..t of C(n,v)(q-1)^v.
uint64_t correctable_count(const CyclicCodeSpec& code);

/// Streams every pattern of weight 1..t with magnitudes in F*, in
/// deterministic (weight, positions, magnitudes) lexicographic order.
/// This order is part of the external contract.
void for_each_correctable(const CyclicCodeSpec& code,
                          const std::function<void(const ErrorPattern&)>& fn);
std::vector<ErrorPattern> enumerate_correctable(const CyclicCodeSpec& code);

/// One weight class of the same stream; weight classes partition the
/// correctable set, which is what the sweep worker pool is keyed on.
void for_each_correctable_of_weight(const CyclicCodeSpec& code, uint32_t weight,
                                    const std::function<void(const ErrorPattern&)>& fn);

/// r-th syndrome of an error pattern: sum of c_j * beta^(r * l_j).
Element syndrome(const CyclicCodeSpec& code, const ErrorPattern& e, uint32_t r);
/// r-th syndrome of a received word: word evaluated at beta^r.
Element syndrome(const CyclicCodeSpec& code, std::span<const Element> word, uint32_t r);

/// Syndromes over the base set R_C.
SyndromeTuple base_syndromes(const CyclicCodeSpec& code, const ErrorPattern& e);
SyndromeTuple base_syndromes(const CyclicCodeSpec& code, std::span<const Element> word);

/// Cyclic shift x^w * e(x) mod (x^n - 1): positions move by +w, magnitudes
/// follow their positions.
ErrorPattern shift_pattern(const CyclicCodeSpec& code, const ErrorPattern& e, uint32_t w);
/// Conjugate pattern: each (l, c) maps to (l*q mod n, c); magnitudes are
/// fixed because they lie in F.
ErrorPattern frobenius_pattern(const CyclicCodeSpec& code, const ErrorPattern& e);

std::vector<Element> pattern_to_word(const CyclicCodeSpec& code, const ErrorPattern& e);

/// True iff word(beta^r) = 0 for every r in R_C.
bool is_codeword(const CyclicCodeSpec& code, std::span<const Element> word);

struct InjectivityReport {
    uint64_t pattern_count = 0;
    uint64_t distinct_tuples = 0;
    bool ok = false;
};

/// Exhaustively checks that base-set syndrome tuples are pairwise distinct
/// over all correctable patterns. Throws InjectivityViolated (naming the
/// colliding pair) on a collision, BudgetExceeded if the pattern count
/// exceeds the guard.
InjectivityReport verify_injectivity(const CyclicCodeSpec& code,
                                     uint64_t budget = 10'000'000);

/// Brute-force minimum distance over all q^k codewords; returns nullopt if
/// the message space exceeds the gate (2^20 codewords).
std::optional<uint32_t> verify_min_distance(const CyclicCodeSpec& code);

}  // namespace cydec

#endif
