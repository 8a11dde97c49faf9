#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "cydec/field.hpp"
#include "cydec/poly.hpp"

using namespace cydec;

namespace {

FieldSpec gf32() { return FieldSpec::from_poly_code(2, 5, 0x25); }
FieldSpec gf16() { return FieldSpec::from_poly_code(2, 4, 0x13); }
FieldSpec gf27() { return FieldSpec::from_poly_code(3, 3, 34); }    // 1 + 2x + x^3
FieldSpec gf25() { return FieldSpec::from_poly_code(5, 2, 47); }    // 2 + 4x + x^2
FieldSpec gf256() { return FieldSpec::from_poly_code(2, 8, 0x11d); }

// independent order computation in GF(2)[x]/(f), bitmask arithmetic only
uint32_t order_of_x_mod(uint32_t f, uint32_t deg) {
    uint32_t cur = 1;
    for (uint32_t k = 1;; ++k) {
        cur <<= 1;
        if (cur >> deg) cur ^= f;
        if (cur == 1) return k;
        REQUIRE(k < (1u << deg));
    }
}

}  // namespace

TEST_CASE("field construction static checks") {
    FieldSpec f = gf32();
    CHECK(f.N() == 31);
    CHECK(f.size() == 32);
    CHECK(f.describe() == "(2, 5, 0x25)");
    // alpha^5 = 1 + alpha^2 under 1 + x^2 + x^5
    CHECK(f.from_exp(5).code == 5);

    FieldSpec g = gf16();
    CHECK(g.N() == 15);
    CHECK(g.from_exp(4).code == 3);  // alpha^4 = 1 + alpha

    CHECK_THROWS_AS(FieldSpec::from_poly_code(2, 4, 0x1f), NonPrimitivePolynomial);
    CHECK(order_of_x_mod(0x1f, 4) == 5);  // why 0x1f is rejected

    CHECK_THROWS_AS(FieldSpec::from_poly_code(2, 2, 0x5), ReduciblePolynomial);  // (1+x)^2
    CHECK_THROWS_AS(FieldSpec::from_poly_code(2, 3, 0xa), ReduciblePolynomial);  // x factor
}

TEST_CASE("basic arithmetic examples") {
    FieldSpec f = gf32();
    CHECK(f.mul(f.from_exp(16), f.from_exp(20)) == f.from_exp(5));
    CHECK(f.from_exp(5).code == 5);

    FieldSpec g = gf16();
    CHECK(g.add(g.from_exp(8), g.from_exp(4)) == g.from_exp(5));

    CHECK(f.pow(f.zero(), 0) == f.one());
    CHECK(f.pow(f.zero(), 3) == f.zero());
    CHECK_THROWS_AS(f.inv(f.zero()), DivisionByZero);
    CHECK_THROWS_AS(f.pow(f.zero(), -1), DivisionByZero);
}

TEST_CASE("frobenius examples") {
    FieldSpec f = gf32();
    CHECK(f.frobenius(f.from_exp(3), 2) == f.from_exp(6));
    CHECK(f.frobenius(f.zero(), 2) == f.zero());
    CHECK(f.frobenius(f.one(), 2) == f.one());

    FieldSpec g = gf16();
    for (uint32_t c = 0; c < g.size(); ++c) CHECK(g.frobenius({c}, 16) == Element{c});
}

TEST_CASE("cyclotomic cosets") {
    CHECK(cyclotomic_coset(1, 31, 2) == std::vector<uint32_t>{1, 2, 4, 8, 16});
    CHECK(cyclotomic_coset(0, 31, 2) == std::vector<uint32_t>{0});
    CHECK(cyclotomic_coset(0, 15, 16) == std::vector<uint32_t>{0});
    CHECK(cyclotomic_coset(1, 15, 16) == std::vector<uint32_t>{1});
    CHECK(cyclotomic_coset(5, 15, 2) == std::vector<uint32_t>{5, 10});
}

TEST_CASE("minimal polynomials") {
    FieldSpec f = gf32();
    UniPoly m0 = minimal_polynomial(f, 0, 31, 2);
    CHECK(m0.coeffs() == std::vector<Element>{{1}, {1}});  // x - 1

    FieldSpec g = gf16();
    UniPoly m1 = minimal_polynomial(g, 1, 15, 16);  // singleton coset: x + alpha
    CHECK(m1.degree() == 1);
    CHECK(m1.coeff(0) == g.alpha());
    CHECK(m1.coeff(1) == g.one());

    // product over a full coset partition reproduces x^n - 1
    std::set<uint32_t> covered;
    UniPoly prod = UniPoly::constant(f.one());
    for (uint32_t i = 0; i < 31; ++i) {
        if (covered.count(i)) continue;
        for (uint32_t j : cyclotomic_coset(i, 31, 2)) covered.insert(j);
        prod = uni_mul(f, prod, minimal_polynomial(f, i, 31, 2));
    }
    std::vector<Element> xn1(32, Element{0});
    xn1[0] = f.neg(f.one());
    xn1[31] = f.one();
    CHECK(prod == UniPoly(xn1));
}

TEST_CASE("conjugacy trace sums") {
    FieldSpec f = gf32();
    CHECK(f.conjugacy_trace_sum(f.zero(), 2, 5) == f.zero());
    CHECK(f.conjugacy_trace_sum(f.one(), 2, 3) == f.one());  // odd count in char 2

    Element s = f.conjugacy_trace_sum(f.alpha(), 2, 5);
    CHECK(f.in_subfield(s, 2));

    // d must actually close the orbit
    CHECK_THROWS_AS(f.conjugacy_trace_sum(f.alpha(), 2, 3), NotFixedByFrobeniusPower);
}

TEST_CASE("group identities, exhaustive over small fields") {
    for (const FieldSpec& f : {gf16(), gf32(), gf27(), gf25(), gf256()}) {
        for (uint32_t c = 1; c < f.size(); ++c) {
            Element a{c};
            CHECK(f.mul(a, f.inv(a)) == f.one());
            CHECK(f.pow(a, f.N()) == f.one());
            CHECK(f.pow(a, (int64_t)f.N() + 1) == a);
        }
        // additive structure
        for (uint32_t c = 0; c < f.size(); ++c) {
            CHECK(f.add({c}, f.neg({c})) == f.zero());
            CHECK(f.add({c}, f.zero()) == Element{c});
        }
    }
}

TEST_CASE("frobenius is a field homomorphism, exhaustive") {
    for (const FieldSpec& f : {gf16(), gf27()}) {
        uint32_t q = f.p();
        for (uint32_t a = 0; a < f.size(); ++a)
            for (uint32_t b = 0; b < f.size(); ++b) {
                CHECK(f.frobenius(f.add({a}, {b}), q) ==
                      f.add(f.frobenius({a}, q), f.frobenius({b}, q)));
                CHECK(f.frobenius(f.mul({a}, {b}), q) ==
                      f.mul(f.frobenius({a}, q), f.frobenius({b}, q)));
            }
    }
    FieldSpec f = gf256();
    for (uint32_t q : {2u, 4u, 16u}) {
        for (uint32_t a = 0; a < f.size(); ++a) {
            Element x{a}, y{(a * 2654435761u) % f.size()};
            CHECK(f.frobenius(f.add(x, y), q) == f.add(f.frobenius(x, q), f.frobenius(y, q)));
            CHECK(f.frobenius(f.mul(x, y), q) == f.mul(f.frobenius(x, q), f.frobenius(y, q)));
        }
    }
}

TEST_CASE("subfield membership matches multiplicative order, exhaustive") {
    for (const FieldSpec& f : {gf16(), gf256(), gf27(), gf25()}) {
        for (uint32_t k = 1; k <= f.e(); ++k) {
            if (f.e() % k) continue;
            uint32_t q = 1;
            for (uint32_t i = 0; i < k; ++i) q *= f.p();
            std::vector<Element> members = f.subfield_elements(q);
            CHECK(members.size() == q);
            for (uint32_t c = 0; c < f.size(); ++c) {
                bool expect = c == 0;
                if (c != 0) {
                    // order of c divides q-1?
                    uint32_t ord = 1;
                    Element cur{c};
                    while (cur != f.one()) {
                        cur = f.mul(cur, {c});
                        ++ord;
                    }
                    expect = (q - 1) % ord == 0;
                }
                CHECK(f.in_subfield({c}, q) == expect);
            }
        }
    }
}

TEST_CASE("powers of the n-th root stay outside the base field when gcd(n, q-1) = 1") {
    FieldSpec f = gf32();
    for (uint32_t i = 1; i < 31; ++i) CHECK_FALSE(f.in_subfield(f.from_exp(i), 2));

    FieldSpec g = FieldSpec::from_poly_code(2, 11, 0x805);
    uint32_t beta_exp = g.N() / 23;
    for (uint32_t i = 1; i < 23; ++i)
        CHECK_FALSE(g.in_subfield(g.from_exp((int64_t)beta_exp * i), 2));
}

TEST_CASE("element hex round trip") {
    FieldSpec f = gf32();
    for (uint32_t c = 0; c < f.size(); ++c) CHECK(f.from_hex(f.to_hex({c})) == Element{c});
    CHECK(f.to_hex({27}) == "1b");
    CHECK_THROWS_AS(f.from_hex("zz"), ParseError);
    CHECK_THROWS_AS(f.from_hex("20"), ParseError);  // out of range for GF(32)
}
