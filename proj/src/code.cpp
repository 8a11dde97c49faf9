#include "cydec/code.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace cydec {

namespace {

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

struct TupleHash {
    size_t operator()(const std::vector<uint32_t>& v) const {
        size_t h = 1469598103934665603ull;
        for (uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

bool CyclicCodeSpec::in_defining_set(uint32_t r) const {
    return std::binary_search(S_C.begin(), S_C.end(), r % n);
}

CyclicCodeSpec build_code(FieldSpec field, uint32_t n, uint32_t q,
                          const std::vector<uint32_t>& R_C, uint32_t t) {
    if (n == 0 || field.N() % n != 0)
        throw BadOrder(std::to_string(n) + " does not divide N = " + std::to_string(field.N()));
    if (!field.valid_subfield_order(q))
        throw Error("q = " + std::to_string(q) + " is not a subfield order of E");
    if (gcd_u64(n, q) != 1) throw BadOrder("n must be coprime to q");

    CyclicCodeSpec code;
    code.field = std::move(field);
    code.n = n;
    code.q = q;
    code.beta_exp = code.field.N() / n;
    code.R_C = R_C;
    code.t = t;
    code.gcd_n_qm1_is_one = gcd_u64(n, q - 1) == 1;

    code.g = UniPoly::constant(code.field.one());
    std::unordered_set<uint32_t> seen;
    for (uint32_t r : R_C) {
        auto coset = cyclotomic_coset(r, n, q);
        for (uint32_t j : coset) {
            if (!seen.insert(j).second)
                throw OverlappingCosets("residue " + std::to_string(r) +
                                        " shares a cyclotomic coset with an earlier base residue");
            code.S_C.push_back(j);
        }
        code.g = uni_mul(code.field, code.g, minimal_polynomial(code.field, r, n, q));
    }
    std::sort(code.S_C.begin(), code.S_C.end());

    if (code.g.degree() != (int)code.S_C.size())
        throw Error("generator degree does not match |S_C|");
    for (const Element& c : code.g.coeffs())
        if (!code.field.in_subfield(c, q))
            throw GeneratorNotOverSubfield("generator coefficient outside GF(" +
                                           std::to_string(q) + ")");
    return code;
}

uint64_t correctable_count(const CyclicCodeSpec& code) {
    uint64_t total = 0;
    for (uint32_t v = 1; v <= code.t; ++v) {
        uint64_t binom = 1;
        for (uint32_t i = 0; i < v; ++i) binom = binom * (code.n - i) / (i + 1);
        uint64_t mags = 1;
        for (uint32_t i = 0; i < v; ++i) mags *= code.q - 1;
        total += binom * mags;
    }
    return total;
}

void for_each_correctable_of_weight(const CyclicCodeSpec& code, uint32_t v,
                                    const std::function<void(const ErrorPattern&)>& fn) {
    if (v == 0 || v > code.n) return;
    std::vector<Element> fstar;
    for (Element x : code.field.subfield_elements(code.q))
        if (x.code != 0) fstar.push_back(x);

    ErrorPattern e;
    std::vector<uint32_t> pos(v);
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<size_t> mag_idx(v, 0);
    while (true) {
        // all magnitude assignments for this position tuple, lex order
        std::fill(mag_idx.begin(), mag_idx.end(), 0);
        while (true) {
            e.entries.clear();
            for (uint32_t i = 0; i < v; ++i) e.entries.push_back({pos[i], fstar[mag_idx[i]]});
            fn(e);
            uint32_t i = v;
            while (i-- > 0) {
                if (++mag_idx[i] < fstar.size()) break;
                mag_idx[i] = 0;
                if (i == 0) goto positions_done;
            }
        }
    positions_done:;
        // next position combination, lex order
        int32_t i = (int32_t)v - 1;
        while (i >= 0 && pos[i] == code.n - v + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (uint32_t j = i + 1; j < v; ++j) pos[j] = pos[j - 1] + 1;
    }
}

void for_each_correctable(const CyclicCodeSpec& code,
                          const std::function<void(const ErrorPattern&)>& fn) {
    for (uint32_t v = 1; v <= code.t; ++v) for_each_correctable_of_weight(code, v, fn);
}

std::vector<ErrorPattern> enumerate_correctable(const CyclicCodeSpec& code) {
    std::vector<ErrorPattern> out;
    out.reserve(correctable_count(code));
    for_each_correctable(code, [&](const ErrorPattern& e) { out.push_back(e); });
    return out;
}

Element syndrome(const CyclicCodeSpec& code, const ErrorPattern& e, uint32_t r) {
    Element s{0};
    for (const auto& [pos, mag] : e.entries)
        s = code.field.add(s, code.field.mul(mag, code.beta_pow((int64_t)r * pos)));
    return s;
}

Element syndrome(const CyclicCodeSpec& code, std::span<const Element> word, uint32_t r) {
    Element x = code.beta_pow(r);
    Element acc{0};
    for (size_t i = word.size(); i-- > 0;) acc = code.field.add(code.field.mul(acc, x), word[i]);
    return acc;
}

SyndromeTuple base_syndromes(const CyclicCodeSpec& code, const ErrorPattern& e) {
    SyndromeTuple tup;
    tup.values.reserve(code.R_C.size());
    for (uint32_t r : code.R_C) tup.values.push_back(syndrome(code, e, r));
    return tup;
}

SyndromeTuple base_syndromes(const CyclicCodeSpec& code, std::span<const Element> word) {
    SyndromeTuple tup;
    tup.values.reserve(code.R_C.size());
    for (uint32_t r : code.R_C) tup.values.push_back(syndrome(code, word, r));
    return tup;
}

ErrorPattern shift_pattern(const CyclicCodeSpec& code, const ErrorPattern& e, uint32_t w) {
    ErrorPattern out;
    out.entries.reserve(e.entries.size());
    for (const auto& [pos, mag] : e.entries) out.entries.push_back({(pos + w) % code.n, mag});
    std::sort(out.entries.begin(), out.entries.end());
    return out;
}

ErrorPattern frobenius_pattern(const CyclicCodeSpec& code, const ErrorPattern& e) {
    ErrorPattern out;
    out.entries.reserve(e.entries.size());
    for (const auto& [pos, mag] : e.entries)
        out.entries.push_back({(uint32_t)((uint64_t)pos * code.q % code.n), mag});
    std::sort(out.entries.begin(), out.entries.end());
    return out;
}

std::vector<Element> pattern_to_word(const CyclicCodeSpec& code, const ErrorPattern& e) {
    std::vector<Element> word(code.n, Element{0});
    for (const auto& [pos, mag] : e.entries) word[pos] = mag;
    return word;
}

bool is_codeword(const CyclicCodeSpec& code, std::span<const Element> word) {
    for (uint32_t r : code.R_C)
        if (syndrome(code, word, r).code != 0) return false;
    return true;
}

InjectivityReport verify_injectivity(const CyclicCodeSpec& code, uint64_t budget) {
    uint64_t count = correctable_count(code);
    if (count > budget)
        throw BudgetExceeded("pattern count " + std::to_string(count) +
                             " exceeds injectivity budget " + std::to_string(budget));

    std::unordered_map<std::vector<uint32_t>, ErrorPattern, TupleHash> seen;
    seen.reserve(count * 2);
    InjectivityReport report;
    for_each_correctable(code, [&](const ErrorPattern& e) {
        ++report.pattern_count;
        std::vector<uint32_t> key;
        key.reserve(code.R_C.size());
        for (uint32_t r : code.R_C) key.push_back(syndrome(code, e, r).code);
        auto [it, inserted] = seen.try_emplace(std::move(key), e);
        if (!inserted)
            throw InjectivityViolated("syndrome tuple collision between two correctable patterns "
                                      "(weights " + std::to_string(it->second.weight()) + " and " +
                                      std::to_string(e.weight()) + ")");
    });
    report.distinct_tuples = seen.size();
    report.ok = true;
    return report;
}

std::optional<uint32_t> verify_min_distance(const CyclicCodeSpec& code) {
    uint32_t k = code.dim();
    uint64_t messages = 1;
    for (uint32_t i = 0; i < k; ++i) {
        messages *= code.q;
        if (messages > (1u << 20)) return std::nullopt;
    }
    auto subf = code.field.subfield_elements(code.q);
    uint32_t best = code.n + 1;
    std::vector<uint32_t> digits(k, 0);
    std::vector<Element> msg(k, Element{0});
    for (uint64_t m = 1; m < messages; ++m) {
        // next message in radix-q counting
        uint32_t i = 0;
        while (true) {
            if (++digits[i] < code.q) break;
            digits[i] = 0;
            ++i;
        }
        for (uint32_t j = 0; j < k; ++j) msg[j] = subf[digits[j]];
        UniPoly c = uni_mul(code.field, UniPoly(std::vector<Element>(msg)), code.g);
        uint32_t w = 0;
        for (const Element& x : c.coeffs()) w += x.code != 0;
        best = std::min(best, w);
    }
    return best;
}

}  // namespace cydec
