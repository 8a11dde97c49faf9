#include "cydec/poly.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace cydec {

UniPoly UniPoly::monomial(Element c, size_t k) {
    if (c.code == 0) return {};
    std::vector<Element> v(k + 1, Element{0});
    v[k] = c;
    return UniPoly(std::move(v));
}

Element UniPoly::eval(const FieldSpec& f, Element x) const {
    Element acc{0};
    for (size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c_[i]);
    return acc;
}

UniPoly uni_add(const FieldSpec& f, const UniPoly& a, const UniPoly& b) {
    std::vector<Element> c(std::max(a.coeffs().size(), b.coeffs().size()), Element{0});
    for (size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
    return UniPoly(std::move(c));
}

UniPoly uni_scale(const FieldSpec& f, Element s, const UniPoly& a) {
    std::vector<Element> c(a.coeffs());
    for (auto& x : c) x = f.mul(s, x);
    return UniPoly(std::move(c));
}

UniPoly uni_mul(const FieldSpec& f, const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Element> c(a.coeffs().size() + b.coeffs().size() - 1, Element{0});
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeff(i).code == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.coeff(i), b.coeff(j)));
    }
    return UniPoly(std::move(c));
}

UniPoly uni_mul_mod(const FieldSpec& f, const UniPoly& a, const UniPoly& b, size_t k) {
    if (a.is_zero() || b.is_zero() || k == 0) return {};
    std::vector<Element> c(std::min(a.coeffs().size() + b.coeffs().size() - 1, k), Element{0});
    for (size_t i = 0; i < a.coeffs().size() && i < k; ++i) {
        if (a.coeff(i).code == 0) continue;
        for (size_t j = 0; j < b.coeffs().size() && i + j < k; ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.coeff(i), b.coeff(j)));
    }
    return UniPoly(std::move(c));
}

UniPoly uni_formal_derivative(const FieldSpec& f, const UniPoly& a) {
    if (a.degree() < 1) return {};
    std::vector<Element> c(a.degree(), Element{0});
    for (size_t i = 1; i <= (size_t)a.degree(); ++i)
        c[i - 1] = f.mul(f.from_int(i), a.coeff(i));
    return UniPoly(std::move(c));
}

UniPoly uni_shift(const UniPoly& a) {
    if (a.is_zero()) return {};
    std::vector<Element> c(a.coeffs().size() + 1, Element{0});
    std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin() + 1);
    return UniPoly(std::move(c));
}

UniPoly minimal_polynomial(const FieldSpec& f, uint32_t i, uint32_t n, uint32_t q) {
    if (n == 0 || f.N() % n != 0) throw BadOrder("n must divide N");
    uint32_t beta_exp = f.N() / n;
    UniPoly m = UniPoly::constant(f.one());
    for (uint32_t j : cyclotomic_coset(i, n, q)) {
        Element root = f.from_exp((int64_t)beta_exp * j);
        // multiply by (x - root)
        UniPoly factor(std::vector<Element>{f.neg(root), f.one()});
        m = uni_mul(f, m, factor);
    }
    for (const Element& c : m.coeffs())
        if (!f.in_subfield(c, q))
            throw CoefficientOutsideSubfield("minimal polynomial coefficient outside GF(" +
                                             std::to_string(q) + ")");
    return m;
}

Element SparseMultiPoly::eval(const FieldSpec& f, std::span<const Element> point) const {
    if (point.size() != arity_)
        throw ArityMismatch("evaluation point has arity " + std::to_string(point.size()) +
                            ", polynomial has " + std::to_string(arity_));
    Element acc{0};
    for (const MpTerm& t : terms_) {
        Element prod = t.coeff;
        for (uint32_t j = 0; j < arity_ && prod.code != 0; ++j)
            prod = f.mul(prod, f.pow(point[j], t.exps[j]));
        acc = f.add(acc, prod);
    }
    return acc;
}

void MultiPolyBuilder::add(std::span<const uint64_t> raw_exps, Element coeff) {
    if (raw_exps.size() != arity_) throw ArityMismatch("term arity mismatch");
    std::vector<uint32_t> norm(arity_);
    for (uint32_t j = 0; j < arity_; ++j) norm[j] = normalize_exponent(raw_exps[j], N_);
    add_normalized(norm, coeff);
}

void MultiPolyBuilder::add_normalized(std::span<const uint32_t> exps, Element coeff) {
    if (exps.size() != arity_) throw ArityMismatch("term arity mismatch");
    if (coeff.code == 0) return;
    std::vector<uint32_t> key(exps.begin(), exps.end());
    auto [it, inserted] = acc_.try_emplace(std::move(key), coeff);
    if (!inserted) {
        it->second = field_->add(it->second, coeff);
        if (it->second.code == 0) acc_.erase(it);
    }
}

void MultiPolyBuilder::merge(const MultiPolyBuilder& other) {
    for (const auto& [exps, coeff] : other.acc_) add_normalized(exps, coeff);
}

SparseMultiPoly MultiPolyBuilder::build() const {
    std::vector<MpTerm> terms;
    terms.reserve(acc_.size());
    for (const auto& [exps, coeff] : acc_) terms.push_back({exps, coeff});
    return SparseMultiPoly(arity_, N_, std::move(terms));
}

std::string to_term_table(const SparseMultiPoly& poly) {
    std::string out;
    char buf[32];
    for (const MpTerm& t : poly.terms()) {
        for (uint32_t j = 0; j < poly.arity(); ++j) {
            std::snprintf(buf, sizeof(buf), "%s%X", j ? "," : "", t.exps[j]);
            out += buf;
        }
        if (t.coeff.code != 1) {
            std::snprintf(buf, sizeof(buf), "*%x", t.coeff.code);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

SparseMultiPoly parse_term_table(const std::string& text, uint32_t arity, uint32_t N) {
    std::vector<MpTerm> terms;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    auto fail = [&](const std::string& what) {
        throw ParseError("term table line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
            line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line = line.substr(start);

        MpTerm term;
        term.coeff = {1};
        std::string expo_part = line;
        size_t star = line.find('*');
        if (star != std::string::npos) {
            expo_part = line.substr(0, star);
            uint64_t v = 0;
            std::string cs = line.substr(star + 1);
            if (cs.empty()) fail("empty coefficient");
            for (char ch : cs) {
                int d;
                if (ch >= '0' && ch <= '9') d = ch - '0';
                else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
                else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
                else fail("bad coefficient hex digit");
                v = v * 16 + d;
            }
            term.coeff = {(uint32_t)v};
        }
        std::istringstream es(expo_part);
        std::string cell;
        while (std::getline(es, cell, ',')) {
            if (cell.empty()) fail("empty exponent cell");
            uint64_t v = 0;
            for (char ch : cell) {
                int d;
                if (ch >= '0' && ch <= '9') d = ch - '0';
                else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
                else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
                else fail("bad exponent hex digit '" + std::string(1, ch) + "'");
                v = v * 16 + d;
            }
            if (v > N) fail("exponent exceeds N");
            term.exps.push_back((uint32_t)v);
        }
        if (term.exps.size() != arity) fail("expected " + std::to_string(arity) + " exponents");
        if (term.coeff.code != 0) terms.push_back(std::move(term));
    }
    std::sort(terms.begin(), terms.end(),
              [](const MpTerm& a, const MpTerm& b) { return a.exps < b.exps; });
    for (size_t i = 1; i < terms.size(); ++i)
        if (terms[i].exps == terms[i - 1].exps)
            throw ParseError("duplicate exponent vector in term table");
    return SparseMultiPoly(arity, N, std::move(terms));
}

}  // namespace cydec
