#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <set>

#include "cydec/io.hpp"

using namespace cydec;
namespace fs = std::filesystem;

namespace {

// exit codes: 0 success, 1 decode failure, 2 usage/parse error, 3 internal error
constexpr int kExitDecodeFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Output {
    bool kv = false;

    void line(const std::string& s) const {
        if (!kv) std::puts(s.c_str());
    }
    void emit(const Report& r) const { std::fputs(r.serialize().c_str(), stdout); }
};

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("CYDEC_CACHE")) return env;
    return "artifacts";
}

RepresentationArtifact cached_unknown_syndrome(const CyclicCodeSpec& code, uint32_t r,
                                               const std::string& cache_dir, bool force,
                                               const BuildOptions& options) {
    fs::create_directories(cache_dir);
    fs::path path = fs::path(cache_dir) /
                    artifact_cache_filename(code, ArtifactKind::UnknownSyndrome, r);
    if (!force && fs::exists(path)) return load_artifact(path.string(), code);
    RepresentationArtifact art = build_unknown_syndrome_rep(code, r, options);
    save_artifact(art, code, path.string());
    return art;
}

std::vector<RepresentationArtifact> cached_gelp(const CyclicCodeSpec& code,
                                                const std::string& cache_dir, bool force,
                                                const BuildOptions& options) {
    fs::create_directories(cache_dir);
    bool all_present = true;
    std::vector<fs::path> paths;
    for (uint32_t i = 1; i <= code.t; ++i) {
        paths.push_back(fs::path(cache_dir) /
                        artifact_cache_filename(code, ArtifactKind::LocatorCoefficient, i));
        if (!fs::exists(paths.back())) all_present = false;
    }
    std::vector<RepresentationArtifact> out;
    if (all_present && !force) {
        for (const fs::path& p : paths) out.push_back(load_artifact(p.string(), code));
        return out;
    }
    out = build_gelp_coefficients(code, options);
    for (uint32_t i = 0; i < out.size(); ++i) save_artifact(out[i], code, paths[i].string());
    return out;
}

/// Residues in 1..2t that need their own artifact: not in S_C and not a
/// q-power image of an earlier covered residue.
std::vector<uint32_t> artifact_residues(const CyclicCodeSpec& code) {
    std::vector<uint32_t> needed;
    std::set<uint32_t> covered(code.S_C.begin(), code.S_C.end());
    for (uint32_t r = 1; r <= 2 * code.t; ++r) {
        uint32_t res = r % code.n;
        if (covered.count(res)) continue;
        bool conj = false;
        for (uint32_t j : covered) {
            uint64_t cur = j;
            for (uint32_t w = 0; w < 64 && !conj; ++w) {
                cur = cur * code.q % code.n;
                if (cur == res) conj = true;
                if (cur == j) break;
            }
            if (conj) break;
        }
        if (!conj) {
            needed.push_back(res);
            covered.insert(res);
        }
    }
    return needed;
}

ArtifactSet one_step_artifacts(const CyclicCodeSpec& code, const std::string& cache_dir,
                               bool force, const BuildOptions& options) {
    ArtifactSet set;
    for (uint32_t r : artifact_residues(code))
        set.emplace(r, cached_unknown_syndrome(code, r, cache_dir, force, options));
    return set;
}

Report structure_to_report(const RepresentationArtifact& art, const StructureReport& s) {
    Report r;
    r.add("kind", artifact_kind_name(art.kind));
    r.add("target", art.target);
    r.add("terms", art.poly.term_count());
    r.add("builder", art.builder);
    r.add("coeffs_in_subfield", s.coeffs_in_subfield ? "true" : "false");
    r.add("congruence_clean", s.congruence_clean ? "true" : "false");
    if (s.residue_histogram.size() == 1)
        r.add("congruence_residue", s.residue_histogram.begin()->first);
    return r;
}

int cmd_field_info(uint32_t p, uint32_t e, uint64_t poly, const Output& out) {
    FieldSpec f = FieldSpec::from_poly_code(p, e, poly);
    Report r;
    r.add("field", f.describe());
    r.add("size", f.size());
    r.add("N", f.N());
    r.add("alpha", f.to_hex(f.alpha()));
    out.line("field tables built; alpha has full multiplicative order");
    out.emit(r);
    return 0;
}

int cmd_code_info(const std::string& spec_path, const Output& out) {
    CyclicCodeSpec code = load_code_spec(spec_path);
    Report r;
    r.add("n", code.n);
    r.add("q", code.q);
    r.add("field", code.field.describe());
    r.add("k", code.dim());
    r.add("t", code.t);
    std::string sc;
    for (size_t i = 0; i < code.S_C.size(); ++i)
        sc += (i ? "," : "") + std::to_string(code.S_C[i]);
    r.add("S_C", sc);
    std::string rc;
    for (size_t i = 0; i < code.R_C.size(); ++i)
        rc += (i ? "," : "") + std::to_string(code.R_C[i]);
    r.add("R_C", rc);
    r.add("generator", word_to_csv(code.field, code.g.coeffs()));
    r.add("correctable_patterns", correctable_count(code));
    r.add("gcd_n_qm1_is_one", code.gcd_n_qm1_is_one ? "true" : "false");
    out.emit(r);
    return 0;
}

int cmd_build(const std::string& spec_path, const std::string& kind, int target,
              const std::string& cache_flag, bool force, const std::string& builder,
              const Output& out) {
    CyclicCodeSpec code = load_code_spec(spec_path);
    std::string cache_dir = resolve_cache_dir(cache_flag);
    BuildOptions options;
    if (builder == "naive") options.builder = BuildOptions::Builder::Naive;

    if (kind == "unknown-syndrome") {
        std::vector<uint32_t> residues;
        if (target >= 0) residues.push_back((uint32_t)target);
        else residues = artifact_residues(code);
        for (uint32_t r : residues) {
            RepresentationArtifact art =
                cached_unknown_syndrome(code, r, cache_dir, force, options);
            out.emit(structure_to_report(art, check_structure(art, code)));
        }
    } else if (kind == "gelp") {
        for (const RepresentationArtifact& art : cached_gelp(code, cache_dir, force, options))
            out.emit(structure_to_report(art, check_structure(art, code)));
    } else {
        throw CLI::ValidationError("--kind must be unknown-syndrome or gelp");
    }
    return 0;
}

int cmd_verify_table(const std::string& spec_path, const std::string& table_path,
                     const std::string& kind, uint32_t target, const std::string& cache_flag,
                     const Output& out) {
    CyclicCodeSpec code = load_code_spec(spec_path);
    SparseMultiPoly table =
        parse_term_table(read_file(table_path), (uint32_t)code.R_C.size(), code.field.N());

    std::string cache_dir = resolve_cache_dir(cache_flag);
    RepresentationArtifact art;
    if (kind == "unknown-syndrome") {
        art = cached_unknown_syndrome(code, target, cache_dir, false, {});
    } else if (kind == "gelp") {
        auto gelp = cached_gelp(code, cache_dir, false, {});
        if (target < 1 || target > gelp.size())
            throw CLI::ValidationError("--target out of range for gelp artifacts");
        art = gelp[target - 1];
    } else {
        throw CLI::ValidationError("--kind must be unknown-syndrome or gelp");
    }

    CongruenceSplit split = congruence_filter(table, code.R_C, art.target % code.n, code.n);
    TableCompareReport cmp = compare_term_tables(art, table, code);

    Report r;
    r.add("rows", table.term_count());
    r.add("congruence_violations", split.violating.size());
    r.add("artifact_terms", cmp.artifact_terms);
    r.add("shared_terms", cmp.shared_terms);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", cmp.agreement());
    r.add("functional_agreement", buf);
    r.add("tuples_checked", cmp.tuples_checked);
    for (size_t i = 0; i < cmp.disagreements.size(); ++i)
        r.add("disagreement." + std::to_string(i),
              word_to_csv(code.field, cmp.disagreements[i].values));
    out.emit(r);
    return 0;
}

int cmd_decode(const std::string& spec_path, const std::string& received_csv,
               const std::string& pipeline, bool trace, const std::string& cache_flag,
               const Output& out) {
    CyclicCodeSpec code = load_code_spec(spec_path);
    std::vector<Element> received = parse_word_csv(code.field, received_csv, code.n);
    std::string cache_dir = resolve_cache_dir(cache_flag);

    DecodeResult res;
    if (pipeline == "one-step") {
        res = decode_one_step(code, received, one_step_artifacts(code, cache_dir, false, {}),
                              trace);
    } else if (pipeline == "gelp") {
        auto gelp = cached_gelp(code, cache_dir, false, {});
        res = decode_gelp(code, received, gelp);
    } else {
        throw CLI::ValidationError("--pipeline must be one-step or gelp");
    }
    out.emit(render_decode_report(code, res));
    return res.ok() ? 0 : kExitDecodeFailure;
}

int cmd_sweep(const std::string& spec_path, const std::string& pipeline,
              const std::string& cache_flag, const Output& out) {
    CyclicCodeSpec code = load_code_spec(spec_path);
    std::string cache_dir = resolve_cache_dir(cache_flag);

    SweepResult sw;
    if (pipeline == "one-step") {
        sw = sweep_one_step(code, one_step_artifacts(code, cache_dir, false, {}));
    } else if (pipeline == "gelp") {
        auto gelp = cached_gelp(code, cache_dir, false, {});
        sw = sweep_gelp(code, gelp);
    } else {
        throw CLI::ValidationError("--pipeline must be one-step or gelp");
    }

    Report r;
    r.add("patterns", sw.attempted);
    r.add("corrected", sw.corrected);
    r.add("failed", sw.attempted - sw.corrected);
    out.emit(r);
    return sw.all_pass() ? 0 : kExitDecodeFailure;
}

int cmd_selftest(uint64_t seed, const Output& out) {
    std::mt19937_64 rng(seed);
    Report r;
    r.add("seed", seed);

    // field identities on random elements
    FieldSpec f = FieldSpec::from_poly_code(2, 5, 0x25);
    FieldSpec g = FieldSpec::from_poly_code(3, 3, 34);
    bool field_ok = true;
    for (int i = 0; i < 200; ++i) {
        for (const FieldSpec* fp : {&f, &g}) {
            Element a{(uint32_t)(1 + rng() % fp->N())};
            field_ok &= fp->mul(a, fp->inv(a)) == fp->one();
            field_ok &= fp->pow(a, fp->N()) == fp->one();
        }
    }
    r.add("field_identities", field_ok ? "pass" : "fail");

    // delta partition of unity at random points
    bool delta_ok = true;
    for (int i = 0; i < 20; ++i) {
        Element x{(uint32_t)(rng() % f.size())};
        Element sum{0};
        for (uint32_t c = 0; c < f.size(); ++c)
            sum = f.add(sum, delta_poly(f, {c}).eval(f, {x.code}));
        delta_ok &= sum == f.one();
    }
    r.add("delta_partition", delta_ok ? "pass" : "fail");

    // small interpolation round trip
    bool interp_ok = true;
    for (int trial = 0; trial < 10; ++trial) {
        InterpolationProblem prob;
        prob.arity = 2;
        std::set<std::pair<uint32_t, uint32_t>> used;
        while (prob.points.size() < 12) {
            uint32_t a = (uint32_t)(rng() % g.size()), b = (uint32_t)(rng() % g.size());
            if (!used.insert({a, b}).second) continue;
            prob.points.push_back({Element{a}, Element{b}});
            prob.values.push_back(Element{(uint32_t)(rng() % g.size())});
        }
        SparseMultiPoly L = interpolate_naive(g, prob);
        for (size_t i = 0; i < prob.points.size(); ++i)
            interp_ok &= L.eval(g, prob.points[i]) == prob.values[i];
    }
    r.add("interpolation_exactness", interp_ok ? "pass" : "fail");

    // report round trip
    std::string text = r.serialize();
    bool report_ok = Report::parse(text).serialize() == text;
    r.add("report_round_trip", report_ok ? "pass" : "fail");

    out.emit(r);
    return field_ok && delta_ok && interp_ok && report_ok ? 0 : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclic-code decoding via finite-field interpolation"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text or kv")
        ->check(CLI::IsMember({"text", "kv"}));

    auto* fi = app.add_subcommand("field-info", "build a field and print its parameters");
    uint32_t fi_p = 2, fi_e = 0;
    std::string fi_poly;
    fi->add_option("--p", fi_p, "prime characteristic")->required();
    fi->add_option("--e", fi_e, "extension degree")->required();
    fi->add_option("--poly", fi_poly, "modulus polynomial as radix-p code (hex ok)")
        ->required();

    auto* ci = app.add_subcommand("code-info", "print a code spec's derived data");
    std::string ci_spec;
    ci->add_option("--code", ci_spec, "code spec file")->required()->check(CLI::ExistingFile);

    auto* bu = app.add_subcommand("build", "build and cache representation artifacts");
    std::string bu_spec, bu_kind = "unknown-syndrome", bu_cache, bu_builder = "orbit";
    int bu_target = -1;
    bool bu_force = false;
    bu->add_option("--code", bu_spec)->required()->check(CLI::ExistingFile);
    bu->add_option("--kind", bu_kind, "unknown-syndrome or gelp");
    bu->add_option("--target", bu_target, "target residue (unknown-syndrome only)");
    bu->add_option("--cache-dir", bu_cache, "artifact cache directory");
    bu->add_option("--builder", bu_builder)->check(CLI::IsMember({"orbit", "naive"}));
    bu->add_flag("--force", bu_force, "rebuild even if cached");

    auto* vt = app.add_subcommand("verify-table", "check a term table against a built artifact");
    std::string vt_spec, vt_table, vt_kind = "unknown-syndrome", vt_cache;
    uint32_t vt_target = 0;
    vt->add_option("--code", vt_spec)->required()->check(CLI::ExistingFile);
    vt->add_option("--table", vt_table)->required()->check(CLI::ExistingFile);
    vt->add_option("--kind", vt_kind, "unknown-syndrome or gelp");
    vt->add_option("--target", vt_target, "residue or coefficient index")->required();
    vt->add_option("--cache-dir", vt_cache);

    auto* de = app.add_subcommand("decode", "decode one received word");
    std::string de_spec, de_received, de_pipeline = "one-step", de_cache;
    bool de_trace = false;
    de->add_option("--code", de_spec)->required()->check(CLI::ExistingFile);
    de->add_option("--received", de_received, "comma-separated coefficient hex codes")
        ->required();
    de->add_option("--pipeline", de_pipeline)->check(CLI::IsMember({"one-step", "gelp"}));
    de->add_flag("--trace", de_trace, "include the BM iteration table");
    de->add_option("--cache-dir", de_cache);

    auto* sw = app.add_subcommand("sweep", "decode every correctable pattern");
    std::string sw_spec, sw_pipeline = "one-step", sw_cache;
    sw->add_option("--code", sw_spec)->required()->check(CLI::ExistingFile);
    sw->add_option("--pipeline", sw_pipeline)->check(CLI::IsMember({"one-step", "gelp"}));
    sw->add_option("--cache-dir", sw_cache);

    auto* st = app.add_subcommand("selftest", "run built-in invariant checks");
    uint64_t st_seed = 0x5eed;
    st->add_option("--seed", st_seed, "rng seed (printed in the report)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;  // --help exits 0, usage errors exit 2
    }
    Output out{format == "kv"};

    try {
        if (fi->parsed()) {
            uint64_t poly = std::stoull(fi_poly, nullptr, 0);
            return cmd_field_info(fi_p, fi_e, poly, out);
        }
        if (ci->parsed()) return cmd_code_info(ci_spec, out);
        if (bu->parsed())
            return cmd_build(bu_spec, bu_kind, bu_target, bu_cache, bu_force, bu_builder, out);
        if (vt->parsed())
            return cmd_verify_table(vt_spec, vt_table, vt_kind, vt_target, vt_cache, out);
        if (de->parsed())
            return cmd_decode(de_spec, de_received, de_pipeline, de_trace, de_cache, out);
        if (sw->parsed()) return cmd_sweep(sw_spec, sw_pipeline, sw_cache, out);
        if (st->parsed()) return cmd_selftest(st_seed, out);
    } catch (const ParseError& err) {
        std::fprintf(stderr, "parse error: %s\n", err.what());
        return kExitUsage;
    } catch (const CLI::ValidationError& err) {
        std::fprintf(stderr, "usage error: %s\n", err.what());
        return kExitUsage;
    } catch (const Error& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return kExitInternal;
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return kExitInternal;
    }
    return kExitUsage;
}
