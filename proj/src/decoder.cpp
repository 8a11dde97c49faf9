#include "cydec/decoder.hpp"

#include <algorithm>
#include <thread>

namespace cydec {

std::pair<UniPoly, std::vector<BMTraceRow>> ifbma(const FieldSpec& f,
                                                  std::span<const Element> S) {
    UniPoly C = UniPoly::constant(f.one());
    UniPoly A = C;
    uint32_t l = 0;
    Element gamma = f.one();

    std::vector<BMTraceRow> trace;
    trace.push_back({0, std::nullopt, C, A, l, gamma});

    for (uint32_t k = 0; k < S.size(); ++k) {
        // delta^(k+1) = sum_i C_i S_(k+1-i)
        Element delta{0};
        for (uint32_t i = 0; i <= (uint32_t)std::max(C.degree(), 0) && i <= k; ++i)
            delta = f.add(delta, f.mul(C.coeff(i), S[k - i]));

        UniPoly C_old = C;
        C = uni_add(f, uni_scale(f, gamma, C),
                    uni_scale(f, f.neg(delta), uni_shift(A)));
        if (delta.code != 0 && 2 * l <= k) {
            A = C_old;
            gamma = delta;
            l = k + 1 - l;
        } else {
            A = uni_shift(A);
        }
        trace.push_back({k + 1, delta, C, A, l, gamma});
    }
    return {C, trace};
}

std::vector<uint32_t> chien_search(const CyclicCodeSpec& code, const UniPoly& locator) {
    std::vector<uint32_t> locations;
    for (uint32_t i = 0; i < code.n; ++i)
        if (locator.eval(code.field, code.beta_pow(-(int64_t)i)).code == 0)
            locations.push_back(i);
    return locations;
}

std::vector<Element> forney(const CyclicCodeSpec& code, const UniPoly& locator,
                            std::span<const Element> S, std::span<const uint32_t> locations) {
    const FieldSpec& f = code.field;
    UniPoly Sx(std::vector<Element>(S.begin(), S.end()));  // S(x) = sum S_j x^(j-1)
    size_t bound = std::min(S.size(), locations.size());
    UniPoly omega = uni_mul_mod(f, Sx, locator, bound);
    UniPoly dloc = uni_formal_derivative(f, locator);

    std::vector<Element> mags;
    mags.reserve(locations.size());
    for (uint32_t i : locations) {
        Element x = code.beta_pow(-(int64_t)i);
        Element d = dloc.eval(f, x);
        if (d.code == 0)
            throw ZeroDerivativeAtRoot("locator derivative vanishes at position " +
                                       std::to_string(i));
        mags.push_back(f.div(f.neg(omega.eval(f, x)), d));
    }
    return mags;
}

SyndromeSequence assemble_syndromes(const CyclicCodeSpec& code,
                                    std::span<const Element> received,
                                    const ArtifactSet& artifacts) {
    const FieldSpec& f = code.field;
    SyndromeSequence seq;
    uint32_t len = 2 * code.t;
    seq.values.assign(len, Element{0});
    seq.provenance.assign(len, SyndromeProvenance::Known);

    std::optional<SyndromeTuple> base;  // computed lazily for artifact eval
    std::vector<bool> filled(len, false);
    uint32_t m = 1;  // multiplicative order of q mod n
    while (true) {
        uint64_t qm = 1;
        for (uint32_t i = 0; i < m; ++i) qm = qm * code.q % code.n;
        if (qm == 1) break;
        ++m;
    }

    for (uint32_t r = 1; r <= len; ++r) {
        uint32_t idx = r - 1;
        uint32_t res = r % code.n;
        if (code.in_defining_set(res)) {
            seq.values[idx] = syndrome(code, received, res);
            seq.provenance[idx] = SyndromeProvenance::Known;
            filled[idx] = true;
            continue;
        }
        if (auto it = artifacts.find(res); it != artifacts.end()) {
            if (!base) base = base_syndromes(code, received);
            seq.values[idx] = it->second.eval(f, *base);
            seq.provenance[idx] = SyndromeProvenance::Artifact;
            filled[idx] = true;
            continue;
        }
        // Frobenius image of an earlier entry: res = j*q^w mod n
        bool found = false;
        for (uint32_t j = 1; j <= len && !found; ++j) {
            if (!filled[j - 1]) continue;
            uint64_t cur = j % code.n;
            Element val = seq.values[j - 1];
            for (uint32_t w = 1; w <= m; ++w) {
                cur = cur * code.q % code.n;
                val = f.frobenius(val, code.q);
                if (cur == res) {
                    seq.values[idx] = val;
                    seq.provenance[idx] = SyndromeProvenance::Conjugate;
                    filled[idx] = true;
                    found = true;
                    break;
                }
            }
        }
        if (!found)
            throw MissingArtifact("no artifact or conjugate covers syndrome S_" +
                                  std::to_string(r));
    }
    return seq;
}

namespace {

// Shared tail of both pipelines: roots -> magnitudes -> pattern -> recheck.
DecodeResult complete_decode(const CyclicCodeSpec& code, std::span<const Element> received,
                             const UniPoly& locator, DecodeResult partial) {
    const FieldSpec& f = code.field;
    DecodeResult res = std::move(partial);
    std::span<const Element> S(res.syndromes.values);

    auto fail = [&](const std::string& reason) {
        res.status = DecodeResult::Status::Failure;
        res.failure_reason = reason;
        return res;
    };

    if (locator.is_zero()) return fail("root-count mismatch");
    int deg = locator.degree();
    if (deg > (int)code.t) return fail("root-count mismatch");

    std::vector<uint32_t> locations = chien_search(code, locator);
    if ((int)locations.size() != deg) return fail("root-count mismatch");

    std::vector<Element> mags;
    if (code.q == 2) {
        mags.assign(locations.size(), f.one());
    } else {
        try {
            mags = forney(code, locator, S, locations);
        } catch (const ZeroDerivativeAtRoot&) {
            return fail("zero derivative");
        }
    }

    ErrorPattern e;
    for (size_t i = 0; i < locations.size(); ++i) {
        if (mags[i].code == 0 || !f.in_subfield(mags[i], code.q))
            return fail("magnitude outside base field");
        e.entries.push_back({locations[i], mags[i]});
    }

    for (uint32_t r : code.S_C)
        if (syndrome(code, e, r) != syndrome(code, received, r))
            return fail("syndrome recheck failed");

    res.status = DecodeResult::Status::Success;
    res.error = e;
    res.codeword.assign(received.begin(), received.end());
    for (const auto& [pos, mag] : e.entries)
        res.codeword[pos] = f.sub(res.codeword[pos], mag);
    return res;
}

}  // namespace

DecodeResult decode_one_step(const CyclicCodeSpec& code, std::span<const Element> received,
                             const ArtifactSet& artifacts, bool want_trace) {
    if (received.size() != code.n) throw Error("received word length mismatch");
    DecodeResult partial;
    partial.syndromes = assemble_syndromes(code, received, artifacts);
    auto [locator, trace] = ifbma(code.field, partial.syndromes.values);
    if (want_trace) partial.trace = std::move(trace);
    return complete_decode(code, received, locator, std::move(partial));
}

DecodeResult decode_gelp(const CyclicCodeSpec& code, std::span<const Element> received,
                         std::span<const RepresentationArtifact> gelp) {
    if (received.size() != code.n) throw Error("received word length mismatch");
    const FieldSpec& f = code.field;

    DecodeResult partial;
    uint32_t len = 2 * code.t;
    if (code.q > 2) {
        // magnitudes need S_1..S_2t directly from the word
        for (uint32_t r = 1; r <= len; ++r)
            if (!code.in_defining_set(r % code.n))
                throw MissingArtifact("syndrome S_" + std::to_string(r) +
                                      " is not directly computable for this code");
    }
    partial.syndromes.values.reserve(len);
    for (uint32_t r = 1; r <= len; ++r) {
        partial.syndromes.values.push_back(syndrome(code, received, r % code.n));
        partial.syndromes.provenance.push_back(SyndromeProvenance::Known);
    }

    SyndromeTuple base = base_syndromes(code, received);
    std::vector<Element> coeffs(code.t + 1, Element{0});
    coeffs[0] = f.one();
    for (const RepresentationArtifact& art : gelp)
        coeffs[art.target] = art.eval(f, base);
    UniPoly locator(std::move(coeffs));

    return complete_decode(code, received, locator, std::move(partial));
}

namespace {

// One worker per weight class; decoding is pure per received word, so the
// code and artifacts are shared read-only.
SweepResult run_sweep(const CyclicCodeSpec& code, size_t max_failures,
                      const std::function<DecodeResult(std::span<const Element>)>& decode) {
    std::vector<SweepResult> partials(std::max<uint32_t>(code.t, 1));
    std::vector<std::thread> workers;
    for (uint32_t v = 1; v <= code.t; ++v) {
        workers.emplace_back([&, v] {
            SweepResult& part = partials[v - 1];
            for_each_correctable_of_weight(code, v, [&](const ErrorPattern& e) {
                ++part.attempted;
                std::vector<Element> received = pattern_to_word(code, e);
                DecodeResult res = decode(received);
                if (res.ok() && res.error == e &&
                    std::all_of(res.codeword.begin(), res.codeword.end(),
                                [](Element x) { return x.code == 0; }))
                    ++part.corrected;
                else if (part.failures.size() < max_failures)
                    part.failures.push_back(e);
            });
        });
    }
    for (auto& w : workers) w.join();

    SweepResult total;
    for (const SweepResult& part : partials) {
        total.attempted += part.attempted;
        total.corrected += part.corrected;
        for (const ErrorPattern& e : part.failures)
            if (total.failures.size() < max_failures) total.failures.push_back(e);
    }
    return total;
}

}  // namespace

SweepResult sweep_one_step(const CyclicCodeSpec& code, const ArtifactSet& artifacts,
                           size_t max_failures) {
    return run_sweep(code, max_failures, [&](std::span<const Element> received) {
        return decode_one_step(code, received, artifacts);
    });
}

SweepResult sweep_gelp(const CyclicCodeSpec& code,
                       std::span<const RepresentationArtifact> gelp, size_t max_failures) {
    return run_sweep(code, max_failures, [&](std::span<const Element> received) {
        return decode_gelp(code, received, gelp);
    });
}

}  // namespace cydec
