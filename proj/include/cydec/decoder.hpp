#ifndef CYDEC_DECODER_HPP
#define CYDEC_DECODER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cydec/artifact.hpp"

namespace cydec {

/// One row of the inverse-free Berlekamp-Massey iteration. Row 0 is the
/// initial state (no discrepancy, C = A = 1, l = 0, gamma = 1).
struct BMTraceRow {
    uint32_t k = 0;
    std::optional<Element> delta;
    UniPoly C;
    UniPoly A;
    uint32_t l = 0;
    Element gamma{1};
};

/// Inverse-free Berlekamp-Massey over a 2t-long syndrome sequence
/// (values[0] = S_1). Per iteration k:
///   delta = sum_i C_i * S_(k+1-i)
///   C <- gamma*C - delta*x*A
///   if delta != 0 and 2l <= k:  A <- old C, gamma <- delta, l <- k+1-l
///   else                        A <- x*A
/// The returned locator C^(2t) is a scalar multiple of the monic locator;
/// the scalar is irrelevant for root finding and cancels in Forney.
std::pair<UniPoly, std::vector<BMTraceRow>> ifbma(const FieldSpec& f,
                                                  std::span<const Element> S);

/// All i in 0..n-1 with locator(beta^(-i)) = 0, ascending. Root beta^(-i)
/// corresponds to error position i.
std::vector<uint32_t> chien_search(const CyclicCodeSpec& code, const UniPoly& locator);

/// Forney magnitudes: Omega = S(x)*locator truncated below
/// x^min(2t, #locations), then e_i = -Omega(beta^(-i)) / locator'(beta^(-i)).
/// Throws ZeroDerivativeAtRoot on a repeated root.
std::vector<Element> forney(const CyclicCodeSpec& code, const UniPoly& locator,
                            std::span<const Element> S, std::span<const uint32_t> locations);

enum class SyndromeProvenance { Known, Artifact, Conjugate };

struct SyndromeSequence {
    std::vector<Element> values;                 // values[i] = S_(i+1)
    std::vector<SyndromeProvenance> provenance;  // matching tags
};

using ArtifactSet = std::map<uint32_t, RepresentationArtifact>;

/// Fills S_1..S_2t from a received word: direct evaluation for residues in
/// the defining set, artifact evaluation for stored representatives, and
/// Frobenius images of already-filled entries for the rest. Throws
/// MissingArtifact naming the first uncoverable residue.
SyndromeSequence assemble_syndromes(const CyclicCodeSpec& code,
                                    std::span<const Element> received,
                                    const ArtifactSet& artifacts);

struct DecodeResult {
    enum class Status { Success, Failure };
    Status status = Status::Failure;
    std::string failure_reason;
    ErrorPattern error;             // on success
    std::vector<Element> codeword;  // corrected word, on success
    std::vector<BMTraceRow> trace;  // one-step pipeline only, when requested
    SyndromeSequence syndromes;

    bool ok() const { return status == Status::Success; }
};

/// Known syndromes -> artifact-filled unknown syndromes -> IFBMA ->
/// Chien/Forney. Success requires a weight <= t pattern whose syndromes
/// reproduce the received word's known syndromes on the whole defining set.
DecodeResult decode_one_step(const CyclicCodeSpec& code, std::span<const Element> received,
                             const ArtifactSet& artifacts, bool want_trace = false);

/// Known syndromes -> locator-coefficient artifact evaluation ->
/// Chien/Forney. gelp[i] must be the coefficient artifact for x^(i+1).
DecodeResult decode_gelp(const CyclicCodeSpec& code, std::span<const Element> received,
                         std::span<const RepresentationArtifact> gelp);

struct SweepResult {
    uint64_t attempted = 0;
    uint64_t corrected = 0;
    std::vector<ErrorPattern> failures;  // capped sample

    bool all_pass() const { return attempted > 0 && corrected == attempted; }
};

/// Decodes every correctable pattern laid on the zero codeword and checks
/// that exactly that pattern comes back. Weight classes run on a worker
/// pool (one worker per weight), sharing the read-only code and artifacts.
SweepResult sweep_one_step(const CyclicCodeSpec& code, const ArtifactSet& artifacts,
                           size_t max_failures = 8);
SweepResult sweep_gelp(const CyclicCodeSpec& code,
                       std::span<const RepresentationArtifact> gelp,
                       size_t max_failures = 8);

}  // namespace cydec

#endif
