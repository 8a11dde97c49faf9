#include "cydec/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cydec {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    return out;
}

uint64_t parse_uint(const std::string& s, const std::string& what) {
    if (s.empty()) throw ParseError("empty " + what);
    uint64_t v = 0;
    size_t i = 0;
    int base = 10;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        base = 16;
        i = 2;
    }
    for (; i < s.size(); ++i) {
        char ch = s[i];
        int d;
        if (ch >= '0' && ch <= '9') d = ch - '0';
        else if (base == 16 && ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
        else if (base == 16 && ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
        else throw ParseError("bad digit in " + what + ": " + s);
        v = v * base + d;
    }
    return v;
}

}  // namespace

void Report::add(std::string key, std::string value) {
    entries_.emplace_back(std::move(key), std::move(value));
}

void Report::add(std::string key, uint64_t value) {
    entries_.emplace_back(std::move(key), std::to_string(value));
}

const std::string* Report::find(const std::string& key) const {
    for (const auto& [k, v] : entries_)
        if (k == key) return &v;
    return nullptr;
}

std::string Report::serialize() const {
    std::string out;
    for (const auto& [k, v] : entries_) {
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    }
    return out;
}

Report Report::parse(const std::string& text) {
    Report r;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        size_t eq = line.find(" = ");
        if (eq == std::string::npos)
            throw ParseError("report line " + std::to_string(lineno) + ": missing ' = '");
        r.add(line.substr(0, eq), line.substr(eq + 3));
    }
    return r;
}

namespace {

// key-value lines with '#' comments; keeps order, trims both sides
std::vector<std::pair<std::string, std::string>> parse_kv(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
        out.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return out;
}

FieldSpec parse_field_triple(const std::string& s) {
    std::string body = trim(s);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')')
        throw ParseError("field must be written as (p, e, poly): " + s);
    auto parts = split(body.substr(1, body.size() - 2), ',');
    if (parts.size() != 3) throw ParseError("field triple needs three entries: " + s);
    return FieldSpec::from_poly_code((uint32_t)parse_uint(parts[0], "p"),
                                     (uint32_t)parse_uint(parts[1], "e"),
                                     parse_uint(parts[2], "poly"));
}

}  // namespace

CyclicCodeSpec parse_code_spec(const std::string& text) {
    auto kv = parse_kv(text);
    auto get = [&](const std::string& key) -> const std::string& {
        for (const auto& [k, v] : kv)
            if (k == key) return v;
        throw ParseError("code spec missing key: " + key);
    };
    FieldSpec field = parse_field_triple(get("field"));
    uint32_t n = (uint32_t)parse_uint(get("n"), "n");
    uint32_t q = (uint32_t)parse_uint(get("q"), "q");
    uint32_t t = (uint32_t)parse_uint(get("t"), "t");
    std::vector<uint32_t> R_C;
    for (const std::string& item : split(get("R_C"), ','))
        R_C.push_back((uint32_t)parse_uint(item, "R_C entry"));
    return build_code(std::move(field), n, q, R_C, t);
}

CyclicCodeSpec load_code_spec(const std::string& path) {
    return parse_code_spec(read_file(path));
}

std::string serialize_code_spec(const CyclicCodeSpec& code) {
    std::string out;
    out += "n = " + std::to_string(code.n) + "\n";
    out += "q = " + std::to_string(code.q) + "\n";
    out += "field = " + code.field.describe() + "\n";
    out += "R_C = ";
    for (size_t i = 0; i < code.R_C.size(); ++i)
        out += (i ? ", " : "") + std::to_string(code.R_C[i]);
    out += "\n";
    out += "t = " + std::to_string(code.t) + "\n";
    return out;
}

std::vector<Element> parse_word_csv(const FieldSpec& f, const std::string& text, uint32_t n) {
    auto parts = split(trim(text), ',');
    if (parts.size() != n)
        throw ParseError("word has " + std::to_string(parts.size()) + " entries, expected " +
                         std::to_string(n));
    std::vector<Element> word;
    word.reserve(n);
    for (const std::string& item : parts) word.push_back(f.from_hex(item));
    return word;
}

std::string word_to_csv(const FieldSpec& f, std::span<const Element> word) {
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) out += ',';
        out += f.to_hex(word[i]);
    }
    return out;
}

std::string serialize_artifact(const RepresentationArtifact& artifact,
                               const CyclicCodeSpec& code) {
    std::string out = serialize_code_spec(code);
    out += "kind = " + artifact_kind_name(artifact.kind) + "\n";
    out += "target = " + std::to_string(artifact.target) + "\n";
    out += "degrees = ";
    for (size_t i = 0; i < artifact.degrees.size(); ++i)
        out += (i ? ", " : "") + std::to_string(artifact.degrees[i]);
    out += "\n";
    out += "coeffs_in_subfield = " + std::string(artifact.coeffs_in_subfield ? "true" : "false") +
           "\n";
    out += "congruence_clean = " + std::string(artifact.congruence_clean ? "true" : "false") +
           "\n";
    out += "builder = " + artifact.builder + "\n";
    out += "patterns = " + std::to_string(artifact.pattern_count) + "\n";
    out += "terms = " + std::to_string(artifact.poly.term_count()) + "\n";
    out += "---\n";
    out += to_term_table(artifact.poly);
    return out;
}

RepresentationArtifact parse_artifact(const std::string& text, const CyclicCodeSpec& code) {
    size_t sep = text.find("\n---\n");
    if (sep == std::string::npos) throw ParseError("artifact file missing --- separator");
    auto kv = parse_kv(text.substr(0, sep));
    auto get = [&](const std::string& key) -> const std::string& {
        for (const auto& [k, v] : kv)
            if (k == key) return v;
        throw ParseError("artifact header missing key: " + key);
    };

    if (parse_uint(get("n"), "n") != code.n || parse_uint(get("q"), "q") != code.q ||
        parse_uint(get("t"), "t") != code.t || get("field") != code.field.describe())
        throw ParseError("artifact header does not match the code spec");

    RepresentationArtifact art;
    std::string kind = get("kind");
    if (kind == "unknown-syndrome") art.kind = ArtifactKind::UnknownSyndrome;
    else if (kind == "gelp-coefficient") art.kind = ArtifactKind::LocatorCoefficient;
    else throw ParseError("unknown artifact kind: " + kind);
    art.target = (uint32_t)parse_uint(get("target"), "target");
    for (const std::string& item : split(get("degrees"), ','))
        art.degrees.push_back((uint32_t)parse_uint(item, "degree"));
    if (art.degrees != code.R_C) throw ParseError("artifact degrees do not match R_C");
    art.builder = get("builder");
    art.pattern_count = parse_uint(get("patterns"), "patterns");
    art.poly = parse_term_table(text.substr(sep + 5), (uint32_t)code.R_C.size(),
                                code.field.N());

    // flags are derived data: always recomputed, never read from the file
    auto splitres = congruence_filter(art.poly, art.degrees, art.target % code.n, code.n);
    art.congruence_clean = splitres.violating.empty();
    art.coeffs_in_subfield = true;
    for (const MpTerm& term : art.poly.terms())
        if (!code.field.in_subfield(term.coeff, code.q)) {
            art.coeffs_in_subfield = false;
            break;
        }
    return art;
}

void save_artifact(const RepresentationArtifact& artifact, const CyclicCodeSpec& code,
                   const std::string& path) {
    write_file(path, serialize_artifact(artifact, code));
}

RepresentationArtifact load_artifact(const std::string& path, const CyclicCodeSpec& code) {
    return parse_artifact(read_file(path), code);
}

std::string code_content_hash(const CyclicCodeSpec& code) {
    std::string spec = serialize_code_spec(code);
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : spec) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
    return buf;
}

std::string artifact_cache_filename(const CyclicCodeSpec& code, ArtifactKind kind,
                                    uint32_t target) {
    return code_content_hash(code) + "-" + artifact_kind_name(kind) + "-" +
           std::to_string(target) + ".terms";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

namespace {

std::string poly_csv(const FieldSpec& f, const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) out += ',';
        out += f.to_hex(p.coeff(i));
    }
    return out;
}

const char* provenance_name(SyndromeProvenance p) {
    switch (p) {
        case SyndromeProvenance::Known: return "known";
        case SyndromeProvenance::Artifact: return "artifact";
        default: return "conjugate";
    }
}

}  // namespace

Report render_decode_report(const CyclicCodeSpec& code, const DecodeResult& result) {
    const FieldSpec& f = code.field;
    Report r;
    r.add("status", result.ok() ? "success" : "failure");
    if (!result.ok() && !result.failure_reason.empty()) r.add("reason", result.failure_reason);
    for (size_t i = 0; i < result.syndromes.values.size(); ++i)
        r.add("syndrome." + std::to_string(i + 1),
              f.to_hex(result.syndromes.values[i]) + " " +
                  provenance_name(result.syndromes.provenance[i]));
    if (result.ok()) {
        r.add("locator", poly_csv(f, pattern_locator(code, result.error)));
        std::string locs, mags;
        for (size_t i = 0; i < result.error.entries.size(); ++i) {
            if (i) {
                locs += ',';
                mags += ',';
            }
            locs += std::to_string(result.error.entries[i].pos);
            mags += f.to_hex(result.error.entries[i].mag);
        }
        r.add("locations", locs);
        r.add("magnitudes", mags);
        r.add("codeword", word_to_csv(f, result.codeword));
    }
    for (const BMTraceRow& row : result.trace) {
        std::string line = "delta=";
        line += row.delta ? f.to_hex(*row.delta) : "n.a.";
        line += " C=" + poly_csv(f, row.C);
        line += " A=" + poly_csv(f, row.A);
        line += " l=" + std::to_string(row.l);
        line += " gamma=" + f.to_hex(row.gamma);
        r.add("trace." + std::to_string(row.k), line);
    }
    return r;
}

}  // namespace cydec
