#ifndef CYDEC_ARTIFACT_HPP
#define CYDEC_ARTIFACT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cydec/interpolate.hpp"

namespace cydec {

enum class ArtifactKind {
    UnknownSyndrome,     // polynomial giving S_r from the base-set syndromes
    LocatorCoefficient,  // coefficient of x^i in prod_j (1 - beta^(l_j) x)
};

std::string artifact_kind_name(ArtifactKind k);

/// A built representation: a sparse polynomial in the base-set syndromes,
/// together with structural metadata. The two flags are derived properties
/// and are always recomputed, never trusted from serialization.
///
/// Locator-coefficient artifacts follow the worked-example convention:
/// the locator is sigma(x) = prod_j (1 - beta^(l_j) x) with constant term 1
/// and roots at beta^(-l_j), so the coefficient functions are plain
/// elementary-symmetric sums of the beta^(l_j) up to the sign (-1)^i, and a
/// weight-v pattern contributes zero for indices above v.
struct RepresentationArtifact {
    ArtifactKind kind = ArtifactKind::UnknownSyndrome;
    uint32_t target = 0;            // residue r, or coefficient index i in 1..t
    std::vector<uint32_t> degrees;  // homogeneity degrees of the coordinates = R_C
    SparseMultiPoly poly{0, 0};
    bool coeffs_in_subfield = false;
    bool congruence_clean = false;
    std::string builder;
    uint64_t pattern_count = 0;

    Element eval(const FieldSpec& f, const SyndromeTuple& tuple) const {
        return poly.eval(f, tuple.values);
    }
};

struct BuildOptions {
    enum class Builder { Orbit, Naive };
    Builder builder = Builder::Orbit;
    OrbitBuildOptions orbit;
    NaiveBudget naive;
    bool skip_injectivity_check = false;  // when the caller has already verified
};

/// The value a locator-coefficient artifact must take on a pattern:
/// coefficient of x^i in prod_j (1 - beta^(l_j) x).
Element locator_coefficient_target(const CyclicCodeSpec& code, const ErrorPattern& e, uint32_t i);

/// The locator polynomial prod_j (1 - beta^(l_j) x) of a pattern.
UniPoly pattern_locator(const CyclicCodeSpec& code, const ErrorPattern& e);

/// Builds the representation of the unknown syndrome S_r (r outside the
/// defining set) as a polynomial in S_{r_1}..S_{r_s}. Verifies base-set
/// injectivity first.
RepresentationArtifact build_unknown_syndrome_rep(const CyclicCodeSpec& code, uint32_t r,
                                                  const BuildOptions& options = {});

/// Builds the t locator-coefficient representations (indices 1..t).
std::vector<RepresentationArtifact> build_gelp_coefficients(const CyclicCodeSpec& code,
                                                            const BuildOptions& options = {});

struct StructureReport {
    bool coeffs_in_subfield = false;
    bool congruence_clean = false;
    size_t coeff_violations = 0;
    size_t congruence_violations = 0;
    // residues sum_i r_i e_i mod n observed across terms, with counts
    std::map<uint32_t, size_t> residue_histogram;
};

/// Recomputes both structural flags. In the gcd(n, q-1) = 1 regime a failed
/// flag throws StructureTheoremViolated (it would indicate a builder bug);
/// otherwise failures are reported findings.
StructureReport check_structure(const RepresentationArtifact& artifact,
                                const CyclicCodeSpec& code);

struct UniversalityReport {
    uint64_t checked = 0;
    uint64_t mismatches = 0;
};

/// Sweeps every correctable pattern and compares the artifact's value on the
/// pattern's syndrome tuple against the directly computed target.
UniversalityReport verify_artifact_universal(const RepresentationArtifact& artifact,
                                             const CyclicCodeSpec& code);

struct TableCompareReport {
    size_t artifact_terms = 0;
    size_t reference_terms = 0;
    size_t shared_terms = 0;
    std::vector<MpTerm> missing_in_reference;  // in artifact, not in reference
    std::vector<MpTerm> extra_in_reference;    // in reference, not in artifact
    uint64_t tuples_checked = 0;
    uint64_t tuples_agreeing = 0;
    std::vector<SyndromeTuple> disagreements;  // capped sample

    double agreement() const {
        return tuples_checked ? (double)tuples_agreeing / (double)tuples_checked : 1.0;
    }
};

/// Compares a parsed reference term table against a self-built artifact:
/// term-set difference plus functional agreement over every correctable
/// syndrome tuple. Differences are findings, not failures; the self-built
/// artifact is the oracle.
TableCompareReport compare_term_tables(const RepresentationArtifact& artifact,
                                       const SparseMultiPoly& reference,
                                       const CyclicCodeSpec& code,
                                       size_t max_disagreements = 8);

}  // namespace cydec

#endif
