#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cydec/interpolate.hpp"

using namespace cydec;

namespace {

FieldSpec gf16() { return FieldSpec::from_poly_code(2, 4, 0x13); }
FieldSpec gf32() { return FieldSpec::from_poly_code(2, 5, 0x25); }
FieldSpec gf27() { return FieldSpec::from_poly_code(3, 3, 34); }

CyclicCodeSpec hamming7() {
    return build_code(FieldSpec::from_poly_code(2, 3, 0xb), 7, 2, {1}, 1);
}
CyclicCodeSpec bch15() {
    return build_code(FieldSpec::from_poly_code(2, 4, 0x13), 15, 2, {1, 3}, 2);
}
CyclicCodeSpec bch15_t3() {
    return build_code(FieldSpec::from_poly_code(2, 4, 0x13), 15, 2, {1, 3, 5}, 3);
}
CyclicCodeSpec qr31() {
    return build_code(FieldSpec::from_poly_code(2, 5, 0x25), 31, 2, {1, 5, 7}, 3);
}

// naive interpolation of a syndrome-style target over a code's patterns
SparseMultiPoly naive_of_code(const CyclicCodeSpec& code,
                              const std::function<Element(const ErrorPattern&)>& target) {
    InterpolationProblem prob;
    prob.arity = (uint32_t)code.R_C.size();
    for_each_correctable(code, [&](const ErrorPattern& e) {
        prob.points.push_back(base_syndromes(code, e).values);
        prob.values.push_back(target(e));
    });
    return interpolate_naive(code.field, prob);
}

}  // namespace

TEST_CASE("delta polynomial hits exactly one element") {
    FieldSpec f = gf32();

    UniPoly d0 = delta_poly(f, f.zero());
    CHECK(d0.coeff(0) == f.one());
    CHECK(d0.coeff(31) == f.one());  // -1 = 1 in char 2
    CHECK(d0.degree() == 31);
    CHECK(d0.eval(f, f.zero()) == f.one());
    for (uint32_t i = 0; i < 31; ++i) CHECK(d0.eval(f, f.from_exp(i)) == f.zero());

    UniPoly d1 = delta_poly(f, f.one());
    CHECK(d1.coeff(0) == f.zero());
    for (uint32_t k = 1; k <= 31; ++k) CHECK(d1.coeff(k) == f.one());
    CHECK(d1.eval(f, f.one()) == f.one());

    Element a = f.from_exp(4);
    UniPoly da = delta_poly(f, a);
    for (uint32_t c = 0; c < f.size(); ++c)
        CHECK(da.eval(f, {c}) == (Element{c} == a ? f.one() : f.zero()));
}

TEST_CASE("delta partition of unity, exhaustive per field") {
    for (const FieldSpec& f : {gf16(), gf32(), gf27()}) {
        std::vector<UniPoly> deltas;
        for (uint32_t c = 0; c < f.size(); ++c) deltas.push_back(delta_poly(f, {c}));
        for (uint32_t x = 0; x < f.size(); ++x) {
            Element sum{0};
            for (const UniPoly& d : deltas) sum = f.add(sum, d.eval(f, {x}));
            CHECK(sum == f.one());
        }
    }
}

TEST_CASE("single-point interpolation") {
    FieldSpec f = gf16();
    InterpolationProblem prob;
    prob.arity = 2;
    prob.points = {{f.from_exp(3), f.zero()}};
    prob.values = {f.from_exp(7)};
    SparseMultiPoly L = interpolate_naive(f, prob);
    for (uint32_t a = 0; a < f.size(); ++a)
        for (uint32_t b = 0; b < f.size(); ++b) {
            Element want = (Element{a} == prob.points[0][0] && Element{b} == prob.points[0][1])
                               ? prob.values[0]
                               : f.zero();
            CHECK(L.eval(f, std::vector<Element>{{a}, {b}}) == want);
        }
}

TEST_CASE("interpolating the identity map reproduces it as a function") {
    FieldSpec f = gf27();
    InterpolationProblem prob;
    prob.arity = 1;
    for (uint32_t c = 0; c < f.size(); ++c) {
        prob.points.push_back({Element{c}});
        prob.values.push_back(Element{c});
    }
    SparseMultiPoly L = interpolate_naive(f, prob);
    for (uint32_t c = 0; c < f.size(); ++c)
        CHECK(L.eval(f, std::vector<Element>{{c}}) == Element{c});
}

TEST_CASE("random problems interpolate exactly") {
    std::mt19937_64 rng(0x5eed);
    for (const FieldSpec& f : {gf16(), gf32(), gf27()}) {
        for (int trial = 0; trial < 30; ++trial) {
            uint32_t arity = 1 + (uint32_t)(rng() % 3);
            uint64_t space = 1;
            for (uint32_t j = 0; j < arity; ++j) space *= f.size();
            uint32_t points = 1 + (uint32_t)(rng() % std::min<uint64_t>(40, space));
            InterpolationProblem prob;
            prob.arity = arity;
            std::set<std::vector<Element>> used;
            while (prob.points.size() < points) {
                std::vector<Element> pt(arity);
                for (auto& x : pt) x = Element{(uint32_t)(rng() % f.size())};
                if (!used.insert(pt).second) continue;
                prob.points.push_back(pt);
                prob.values.push_back(Element{(uint32_t)(rng() % f.size())});
            }
            SparseMultiPoly L = interpolate_naive(f, prob);
            for (size_t i = 0; i < prob.points.size(); ++i)
                CHECK(L.eval(f, prob.points[i]) == prob.values[i]);
        }
    }
}

TEST_CASE("naive guards") {
    FieldSpec f = gf16();
    InterpolationProblem dup;
    dup.arity = 1;
    dup.points = {{f.one()}, {f.one()}};
    dup.values = {f.zero(), f.zero()};
    CHECK_THROWS_AS(interpolate_naive(f, dup), DuplicatePoints);

    InterpolationProblem wide;
    wide.arity = 5;
    CHECK_THROWS_AS(interpolate_naive(f, wide), BudgetExceeded);

    InterpolationProblem many;
    many.arity = 1;
    NaiveBudget tiny{3, 4};
    for (uint32_t i = 0; i < 5; ++i) {
        many.points.push_back({Element{i}});
        many.values.push_back(Element{0});
    }
    CHECK_THROWS_AS(interpolate_naive(f, many, tiny), BudgetExceeded);
}

TEST_CASE("orbit structures partition the patterns") {
    CyclicCodeSpec code = qr31();
    OrbitStructure shifts = shift_orbits(code);
    CHECK(shifts.total_patterns == 4991);
    CHECK(shifts.orbits.size() == 161);  // 4991 / 31, free action
    uint64_t sum = 0;
    for (const OrbitInfo& o : shifts.orbits) {
        CHECK(o.size == 31);
        sum += o.size;
    }
    CHECK(sum == 4991);

    OrbitStructure conj = frobenius_orbits(code);
    uint64_t csum = 0;
    for (const OrbitInfo& o : conj.orbits) {
        CHECK(5 % o.degree == 0);  // degree divides m = 5
        csum += o.size;
    }
    CHECK(csum == 4991);

    // n = 15, t = 3 has a stabilized orbit: {0,5,10} is fixed by shift 5
    OrbitStructure s3 = shift_orbits(bch15_t3());
    CHECK(s3.total_patterns == 575);
    uint64_t small_orbits = 0, total = 0;
    for (const OrbitInfo& o : s3.orbits) {
        total += o.size;
        if (o.size != 15) {
            ++small_orbits;
            CHECK(o.size == 5);
        }
    }
    CHECK(total == 575);
    CHECK(small_orbits == 1);
}

TEST_CASE("orbit builder equals the naive oracle, n = 7") {
    CyclicCodeSpec code = hamming7();
    auto target = [&](const ErrorPattern& e) { return syndrome(code, e, 3); };
    SparseMultiPoly naive = naive_of_code(code, target);
    SparseMultiPoly orbit = interpolate_orbits(code, target, 3);
    CHECK(naive == orbit);

    for_each_correctable(code, [&](const ErrorPattern& e) {
        CHECK(orbit.eval(code.field, base_syndromes(code, e).values) == target(e));
    });
}

TEST_CASE("orbit builder equals the naive oracle, n = 15, free action") {
    CyclicCodeSpec code = bch15();
    auto target = [&](const ErrorPattern& e) { return syndrome(code, e, 5); };
    SparseMultiPoly naive = naive_of_code(code, target);

    OrbitBuildOptions with_frob, without_frob;
    without_frob.use_frobenius_classes = false;
    SparseMultiPoly a = interpolate_orbits(code, target, 5, with_frob);
    SparseMultiPoly b = interpolate_orbits(code, target, 5, without_frob);
    CHECK(a == naive);
    CHECK(b == naive);
}

TEST_CASE("orbit builder equals the naive oracle on a stabilized orbit, n = 15, t = 3") {
    CyclicCodeSpec code = bch15_t3();
    auto target = [&](const ErrorPattern& e) { return syndrome(code, e, 7); };
    SparseMultiPoly naive = naive_of_code(code, target);
    SparseMultiPoly orbit = interpolate_orbits(code, target, 7);
    CHECK(naive == orbit);

    for_each_correctable(code, [&](const ErrorPattern& e) {
        CHECK(orbit.eval(code.field, base_syndromes(code, e).values) == target(e));
    });
}

TEST_CASE("congruence filter splits terms") {
    FieldSpec f = gf32();
    // 1*1 + 5*2 + 7*30 = 221 ... exponents (1,2,30): residue (1+10+210) mod 31
    SparseMultiPoly p(3, 31,
                      {MpTerm{{0, 2, 30}, f.one()},    // 0+10+210 = 220 = 3 (mod 31)
                       MpTerm{{1, 1, 1}, f.one()}});   // 1+5+7 = 13 (mod 31)
    std::vector<uint32_t> degrees{1, 5, 7};
    CongruenceSplit split = congruence_filter(p, degrees, 3, 31);
    CHECK(split.kept.size() == 1);
    CHECK(split.violating.size() == 1);
    CHECK(split.kept[0].exps == std::vector<uint32_t>{0, 2, 30});
}

TEST_CASE("hypothesis probes reject a non-homogeneous target") {
    CyclicCodeSpec code = hamming7();
    auto bogus = [&](const ErrorPattern& e) {
        return e.entries[0].pos == 0 ? code.field.one() : code.field.zero();
    };
    CHECK_THROWS_AS(interpolate_orbits(code, bogus, 1), HypothesisViolated);
}
