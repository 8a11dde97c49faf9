#include "cydec/artifact.hpp"

#include <algorithm>
#include <set>

namespace cydec {

std::string artifact_kind_name(ArtifactKind k) {
    return k == ArtifactKind::UnknownSyndrome ? "unknown-syndrome" : "gelp-coefficient";
}

UniPoly pattern_locator(const CyclicCodeSpec& code, const ErrorPattern& e) {
    const FieldSpec& f = code.field;
    UniPoly loc = UniPoly::constant(f.one());
    for (const auto& [pos, mag] : e.entries) {
        (void)mag;
        UniPoly factor(std::vector<Element>{f.one(), f.neg(code.beta_pow(pos))});
        loc = uni_mul(f, loc, factor);
    }
    return loc;
}

Element locator_coefficient_target(const CyclicCodeSpec& code, const ErrorPattern& e,
                                   uint32_t i) {
    return pattern_locator(code, e).coeff(i);
}

namespace {

SparseMultiPoly run_builder(const CyclicCodeSpec& code,
                            const std::function<Element(const ErrorPattern&)>& target,
                            uint32_t degree, const BuildOptions& options) {
    if (options.builder == BuildOptions::Builder::Orbit)
        return interpolate_orbits(code, target, degree, options.orbit);

    InterpolationProblem problem;
    problem.arity = (uint32_t)code.R_C.size();
    for_each_correctable(code, [&](const ErrorPattern& e) {
        problem.points.push_back(base_syndromes(code, e).values);
        problem.values.push_back(target(e));
    });
    return interpolate_naive(code.field, problem, options.naive);
}

RepresentationArtifact make_artifact(const CyclicCodeSpec& code, ArtifactKind kind,
                                     uint32_t target_index,
                                     const std::function<Element(const ErrorPattern&)>& target,
                                     uint32_t degree, const BuildOptions& options) {
    RepresentationArtifact art;
    art.kind = kind;
    art.target = target_index;
    art.degrees = code.R_C;
    art.poly = run_builder(code, target, degree, options);
    art.builder = options.builder == BuildOptions::Builder::Orbit ? "orbit" : "naive";
    art.pattern_count = correctable_count(code);

    auto split = congruence_filter(art.poly, art.degrees, degree, code.n);
    art.congruence_clean = split.violating.empty();
    art.coeffs_in_subfield = true;
    for (const MpTerm& t : art.poly.terms())
        if (!code.field.in_subfield(t.coeff, code.q)) {
            art.coeffs_in_subfield = false;
            break;
        }
    return art;
}

}  // namespace

RepresentationArtifact build_unknown_syndrome_rep(const CyclicCodeSpec& code, uint32_t r,
                                                  const BuildOptions& options) {
    r %= code.n;
    if (code.in_defining_set(r))
        throw TargetInDefiningSet("S_" + std::to_string(r) +
                                  " is a known syndrome (r is in the defining set)");
    if (!options.skip_injectivity_check) verify_injectivity(code);
    auto target = [&code, r](const ErrorPattern& e) { return syndrome(code, e, r); };
    return make_artifact(code, ArtifactKind::UnknownSyndrome, r, target, r, options);
}

std::vector<RepresentationArtifact> build_gelp_coefficients(const CyclicCodeSpec& code,
                                                            const BuildOptions& options) {
    if (!options.skip_injectivity_check) verify_injectivity(code);
    BuildOptions opts = options;
    opts.skip_injectivity_check = true;
    std::vector<RepresentationArtifact> out;
    out.reserve(code.t);
    for (uint32_t i = 1; i <= code.t; ++i) {
        auto target = [&code, i](const ErrorPattern& e) {
            return locator_coefficient_target(code, e, i);
        };
        out.push_back(
            make_artifact(code, ArtifactKind::LocatorCoefficient, i, target, i, opts));
    }
    return out;
}

StructureReport check_structure(const RepresentationArtifact& artifact,
                                const CyclicCodeSpec& code) {
    StructureReport report;
    report.coeffs_in_subfield = true;
    for (const MpTerm& t : artifact.poly.terms())
        if (!code.field.in_subfield(t.coeff, code.q)) {
            report.coeffs_in_subfield = false;
            ++report.coeff_violations;
        }

    uint32_t degree = artifact.target % code.n;
    auto split = congruence_filter(artifact.poly, artifact.degrees, degree, code.n);
    report.congruence_clean = split.violating.empty();
    report.congruence_violations = split.violating.size();
    for (const MpTerm& t : artifact.poly.terms()) {
        uint64_t sum = 0;
        for (uint32_t j = 0; j < artifact.poly.arity(); ++j)
            sum += (uint64_t)artifact.degrees[j] * t.exps[j];
        ++report.residue_histogram[(uint32_t)(sum % code.n)];
    }

    if (code.gcd_n_qm1_is_one && (!report.coeffs_in_subfield || !report.congruence_clean))
        throw StructureTheoremViolated(
            "structural guarantees failed with gcd(n, q-1) = 1: coeffs_in_subfield=" +
            std::to_string(report.coeffs_in_subfield) +
            " congruence_clean=" + std::to_string(report.congruence_clean));
    return report;
}

UniversalityReport verify_artifact_universal(const RepresentationArtifact& artifact,
                                             const CyclicCodeSpec& code) {
    UniversalityReport report;
    for_each_correctable(code, [&](const ErrorPattern& e) {
        ++report.checked;
        Element want = artifact.kind == ArtifactKind::UnknownSyndrome
                           ? syndrome(code, e, artifact.target)
                           : locator_coefficient_target(code, e, artifact.target);
        if (artifact.eval(code.field, base_syndromes(code, e)) != want) ++report.mismatches;
    });
    return report;
}

TableCompareReport compare_term_tables(const RepresentationArtifact& artifact,
                                       const SparseMultiPoly& reference,
                                       const CyclicCodeSpec& code, size_t max_disagreements) {
    if (reference.arity() != artifact.poly.arity())
        throw ArityMismatch("reference table arity mismatch");
    if (reference.N() != artifact.poly.N())
        throw Error("reference table N mismatch");

    TableCompareReport report;
    report.artifact_terms = artifact.poly.term_count();
    report.reference_terms = reference.term_count();

    std::set<std::vector<uint32_t>> ref_exps;
    for (const MpTerm& t : reference.terms()) ref_exps.insert(t.exps);
    std::set<std::vector<uint32_t>> art_exps;
    for (const MpTerm& t : artifact.poly.terms()) art_exps.insert(t.exps);
    for (const MpTerm& t : artifact.poly.terms())
        if (ref_exps.count(t.exps)) ++report.shared_terms;
        else report.missing_in_reference.push_back(t);
    for (const MpTerm& t : reference.terms())
        if (!art_exps.count(t.exps)) report.extra_in_reference.push_back(t);

    for_each_correctable(code, [&](const ErrorPattern& e) {
        ++report.tuples_checked;
        SyndromeTuple tup = base_syndromes(code, e);
        Element a = artifact.eval(code.field, tup);
        Element b = reference.eval(code.field, tup.values);
        if (a == b) ++report.tuples_agreeing;
        else if (report.disagreements.size() < max_disagreements)
            report.disagreements.push_back(tup);
    });
    return report;
}

}  // namespace cydec
