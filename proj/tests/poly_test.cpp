#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cydec/poly.hpp"

using namespace cydec;

namespace {

FieldSpec gf16() { return FieldSpec::from_poly_code(2, 4, 0x13); }
FieldSpec gf32() { return FieldSpec::from_poly_code(2, 5, 0x25); }
FieldSpec gf27() { return FieldSpec::from_poly_code(3, 3, 34); }

}  // namespace

TEST_CASE("normalize_exponent keeps the zero/N distinction") {
    CHECK(normalize_exponent(0, 31) == 0);
    CHECK(normalize_exponent(31, 31) == 31);  // 0^31 = 0 differs from 0^0 = 1
    CHECK(normalize_exponent(32, 31) == 1);
    CHECK(normalize_exponent(1, 31) == 1);
    CHECK(normalize_exponent(62, 31) == 31);
}

TEST_CASE("exponent normalization preserves the function, exhaustive") {
    for (const FieldSpec& f : {gf16(), gf27()}) {
        for (uint64_t k = 0; k < 3ull * f.N() + 2; ++k) {
            uint32_t nk = normalize_exponent(k, f.N());
            for (uint32_t c = 0; c < f.size(); ++c)
                CHECK(f.pow({c}, (int64_t)k) == f.pow({c}, nk));
        }
    }
}

TEST_CASE("univariate evaluation") {
    FieldSpec f = gf16();
    // 1 + alpha x + x^3 at alpha^2
    UniPoly p(std::vector<Element>{f.one(), f.alpha(), f.zero(), f.one()});
    Element x = f.from_exp(2);
    Element want = f.add(f.add(f.one(), f.mul(f.alpha(), x)), f.pow(x, 3));
    CHECK(p.eval(f, x) == want);
    CHECK(UniPoly().eval(f, x) == f.zero());
}

TEST_CASE("multivariate evaluation honors 0^0 = 1 and 0^k = 0") {
    FieldSpec f = gf32();
    // single term x1^0 x2^2 x3^30
    SparseMultiPoly p(3, 31, {MpTerm{{0, 2, 30}, f.one()}});
    std::vector<Element> pt{f.zero(), f.from_exp(16), f.zero()};
    CHECK(p.eval(f, pt) == f.zero());  // 0^30 = 0

    std::vector<Element> pt2{f.zero(), f.from_exp(16), f.one()};
    CHECK(p.eval(f, pt2) == f.pow(f.from_exp(16), 2));  // 0^0 = 1 on x1

    CHECK_THROWS_AS(p.eval(f, std::vector<Element>{f.one()}), ArityMismatch);
}

TEST_CASE("formal derivative in characteristic p") {
    FieldSpec f = gf16();
    // d/dx (1 + a^13 x + a x^2) = a^13 in char 2
    UniPoly p(std::vector<Element>{f.one(), f.from_exp(13), f.alpha()});
    CHECK(uni_formal_derivative(f, p) == UniPoly::constant(f.from_exp(13)));

    CHECK(uni_formal_derivative(f, UniPoly::constant(f.alpha())).is_zero());

    FieldSpec g = gf27();
    // d/dx (x^3) = 3x^2 = 0 in char 3, d/dx (x^4) = x^3
    CHECK(uni_formal_derivative(g, UniPoly::monomial(g.one(), 3)).is_zero());
    CHECK(uni_formal_derivative(g, UniPoly::monomial(g.one(), 4)) ==
          UniPoly::monomial(g.one(), 3));
}

TEST_CASE("truncated product matches the full product") {
    FieldSpec f = gf16();
    UniPoly one_plus_x(std::vector<Element>{f.one(), f.one()});
    CHECK(uni_mul_mod(f, one_plus_x, one_plus_x, 2) == UniPoly::constant(f.one()));

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        auto rand_poly = [&] {
            std::vector<Element> c(rng() % 8);
            for (auto& x : c) x = Element{(uint32_t)(rng() % 16)};
            return UniPoly(std::move(c));
        };
        UniPoly a = rand_poly(), b = rand_poly();
        size_t k = rng() % 10;
        UniPoly full = uni_mul(f, a, b);
        std::vector<Element> trunc;
        for (size_t i = 0; i < k; ++i) trunc.push_back(full.coeff(i));
        CHECK(uni_mul_mod(f, a, b, k) == UniPoly(trunc));
    }
}

TEST_CASE("builder accumulation") {
    FieldSpec f = gf16();
    MultiPolyBuilder b(f, 2);
    std::vector<uint32_t> e{1, 2};
    b.add_normalized(e, f.alpha());
    b.add_normalized(e, f.alpha());  // cancels in char 2
    CHECK(b.build().term_count() == 0);

    MultiPolyBuilder b2(f, 2);
    b2.add_normalized(e, f.alpha());
    SparseMultiPoly p = b2.build();
    CHECK(p.term_count() == 1);
    CHECK(p.terms()[0].coeff == f.alpha());
}

TEST_CASE("builder is order-independent and merge matches a single stream") {
    FieldSpec f = gf27();
    std::mt19937_64 rng(5);
    std::vector<std::pair<std::vector<uint64_t>, Element>> stream;
    for (int i = 0; i < 400; ++i) {
        std::vector<uint64_t> exps{rng() % 60, rng() % 60};
        stream.push_back({exps, Element{(uint32_t)(rng() % 27)}});
    }

    MultiPolyBuilder forward(f, 2);
    for (auto& [e, c] : stream) forward.add(e, c);

    std::shuffle(stream.begin(), stream.end(), rng);
    MultiPolyBuilder shuffled(f, 2);
    for (auto& [e, c] : stream) shuffled.add(e, c);
    CHECK(forward.build() == shuffled.build());

    // split into two partial builders and merge
    MultiPolyBuilder left(f, 2), right(f, 2);
    for (size_t i = 0; i < stream.size(); ++i)
        (i % 2 ? left : right).add(stream[i].first, stream[i].second);
    left.merge(right);
    CHECK(left.build() == forward.build());
}

TEST_CASE("term table round trip and parsing") {
    FieldSpec f = gf32();
    MultiPolyBuilder b(f, 3);
    b.add_normalized(std::vector<uint32_t>{0, 2, 30}, f.one());
    b.add_normalized(std::vector<uint32_t>{31, 13, 0}, f.one());
    b.add_normalized(std::vector<uint32_t>{5, 0, 7}, f.from_exp(9));
    SparseMultiPoly p = b.build();

    std::string text = to_term_table(p);
    CHECK(text == "0,2,1E\n5,0,7*1a\n1F,D,0\n");
    CHECK(parse_term_table(text, 3, 31) == p);

    CHECK_THROWS_AS(parse_term_table("0,2\n", 3, 31), ParseError);
    CHECK_THROWS_AS(parse_term_table("0,2,ZZ\n", 3, 31), ParseError);
    CHECK_THROWS_AS(parse_term_table("0,2,1E\n0,2,1E\n", 3, 31), ParseError);
    // exponent above N rejected
    CHECK_THROWS_AS(parse_term_table("20,0,0\n", 3, 31), ParseError);
}
