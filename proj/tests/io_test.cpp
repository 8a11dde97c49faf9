#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cydec/io.hpp"

using namespace cydec;

namespace {

std::string data_path(const std::string& name) {
    return std::string(CYDEC_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("report round trip is byte-identical") {
    Report r;
    r.add("status", "success");
    r.add("syndrome.1", "10 known");
    r.add("locations", "3,7,20");
    std::string text = r.serialize();
    CHECK(Report::parse(text).serialize() == text);
    CHECK(*Report::parse(text).find("locations") == "3,7,20");

    CHECK_THROWS_AS(Report::parse("no separator here\n"), ParseError);
}

TEST_CASE("code spec files parse and round trip") {
    CyclicCodeSpec qr = load_code_spec(data_path("qr31.spec"));
    CHECK(qr.n == 31);
    CHECK(qr.t == 3);
    CHECK(qr.R_C == std::vector<uint32_t>{1, 5, 7});

    std::string text = serialize_code_spec(qr);
    CyclicCodeSpec back = parse_code_spec(text);
    CHECK(back.n == qr.n);
    CHECK(back.q == qr.q);
    CHECK(back.R_C == qr.R_C);
    CHECK(back.t == qr.t);
    CHECK(back.g == qr.g);
    CHECK(serialize_code_spec(back) == text);

    for (const char* name : {"rs15.spec", "golay23.spec", "hamming7.spec", "bch15.spec",
                             "bch15_t3.spec"})
        CHECK_NOTHROW(load_code_spec(data_path(name)));

    CHECK_THROWS_AS(parse_code_spec("n = 31\n"), ParseError);          // missing keys
    CHECK_THROWS_AS(parse_code_spec("n = x\nq = 2\nfield = (2, 5, 0x25)\nR_C = 1\nt = 1\n"),
                    ParseError);
}

TEST_CASE("word csv round trip") {
    FieldSpec f = FieldSpec::from_poly_code(2, 4, 0x13);
    std::vector<Element> word{{0}, {15}, {7}, {1}};
    std::string csv = word_to_csv(f, word);
    CHECK(csv == "0,f,7,1");
    CHECK(parse_word_csv(f, csv, 4) == word);
    CHECK_THROWS_AS(parse_word_csv(f, "0,1", 4), ParseError);
    CHECK_THROWS_AS(parse_word_csv(f, "0,1,2,zz", 4), ParseError);
}

TEST_CASE("cache keys track spec content") {
    CyclicCodeSpec qr = load_code_spec(data_path("qr31.spec"));
    CyclicCodeSpec rs = load_code_spec(data_path("rs15.spec"));
    CHECK(code_content_hash(qr) == code_content_hash(qr));
    CHECK(code_content_hash(qr) != code_content_hash(rs));
    std::string name = artifact_cache_filename(qr, ArtifactKind::UnknownSyndrome, 3);
    CHECK(name.find("unknown-syndrome-3.terms") != std::string::npos);
}

TEST_CASE("decode report renders and round trips") {
    CyclicCodeSpec code = load_code_spec(data_path("qr31.spec"));
    const FieldSpec& f = code.field;
    ArtifactSet artifacts;
    artifacts.emplace(3, build_unknown_syndrome_rep(code, 3));

    std::vector<Element> received(31, f.zero());
    received[3] = received[7] = received[20] = f.one();
    DecodeResult res = decode_one_step(code, received, artifacts, /*want_trace=*/true);

    Report report = render_decode_report(code, res);
    CHECK(*report.find("status") == "success");
    CHECK(*report.find("locations") == "3,7,20");
    CHECK(*report.find("syndrome.3") == "b artifact");
    CHECK(*report.find("syndrome.6") == "f conjugate");
    CHECK(report.find("trace.6") != nullptr);

    std::string text = report.serialize();
    CHECK(Report::parse(text).serialize() == text);
}
