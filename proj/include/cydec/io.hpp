#ifndef CYDEC_IO_HPP
#define CYDEC_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "cydec/artifact.hpp"
#include "cydec/decoder.hpp"

namespace cydec {

/// Ordered key-value text block: one "key = value" line per entry.
/// parse(serialize(r)) reproduces r and serialize(parse(s)) is
/// byte-identical for well-formed s.
class Report {
public:
    void add(std::string key, std::string value);
    void add(std::string key, uint64_t value);
    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
    const std::string* find(const std::string& key) const;

    std::string serialize() const;
    static Report parse(const std::string& text);

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

// code spec files: key-value block with n, q, field triple, R_C, t
CyclicCodeSpec parse_code_spec(const std::string& text);
CyclicCodeSpec load_code_spec(const std::string& path);
std::string serialize_code_spec(const CyclicCodeSpec& code);

// received words / error patterns: comma-separated coefficient hex codes
std::vector<Element> parse_word_csv(const FieldSpec& f, const std::string& text, uint32_t n);
std::string word_to_csv(const FieldSpec& f, std::span<const Element> word);

// artifact files: header block + "---" + term table
std::string serialize_artifact(const RepresentationArtifact& artifact,
                               const CyclicCodeSpec& code);
RepresentationArtifact parse_artifact(const std::string& text, const CyclicCodeSpec& code);
void save_artifact(const RepresentationArtifact& artifact, const CyclicCodeSpec& code,
                   const std::string& path);
RepresentationArtifact load_artifact(const std::string& path, const CyclicCodeSpec& code);

/// Content hash of the canonical spec serialization, 16 hex digits; keys the
/// artifact cache.
std::string code_content_hash(const CyclicCodeSpec& code);
std::string artifact_cache_filename(const CyclicCodeSpec& code, ArtifactKind kind,
                                    uint32_t target);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Decode report as a key-value block (syndromes with provenance tags,
/// locator, locations, magnitudes, corrected word; trace rows if present).
Report render_decode_report(const CyclicCodeSpec& code, const DecodeResult& result);

}  // namespace cydec

#endif
