#include "cydec/interpolate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_set>

namespace cydec {

namespace {

struct PointHash {
    size_t operator()(const std::vector<Element>& v) const {
        size_t h = 1469598103934665603ull;
        for (Element x : v) {
            h ^= x.code;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Lexicographically smallest pattern in the shift-orbit, plus orbit size.
std::pair<ErrorPattern, uint32_t> shift_canonical(const CyclicCodeSpec& code,
                                                  const ErrorPattern& e) {
    ErrorPattern best = e;
    uint32_t size = 0;
    for (uint32_t w = 1; w < code.n; ++w) {
        ErrorPattern s = shift_pattern(code, e, w);
        if (s == e) {
            size = w;  // stabilizer is the subgroup generated by w
            break;
        }
        if (s < best) best = s;
    }
    if (size == 0) size = code.n;
    return {best, size};
}

ErrorPattern frobenius_canonical(const CyclicCodeSpec& code, const ErrorPattern& e) {
    ErrorPattern best = e, cur = e;
    while (true) {
        cur = frobenius_pattern(code, cur);
        if (cur == e) break;
        if (cur < best) best = cur;
    }
    return best;
}

}  // namespace

UniPoly delta_poly(const FieldSpec& f, Element a) {
    uint32_t N = f.N();
    std::vector<Element> c(N + 1, Element{0});
    if (a.code == 0) {
        c[0] = f.one();
        c[N] = f.neg(f.one());
    } else {
        uint32_t la = f.log(a);
        for (uint32_t k = 1; k <= N; ++k) {
            uint32_t inv_exp = (uint32_t)(((uint64_t)la * k) % N);
            c[k] = f.neg(f.from_exp(-(int64_t)inv_exp));
        }
    }
    return UniPoly(std::move(c));
}

SparseMultiPoly interpolate_naive(const FieldSpec& f, const InterpolationProblem& problem,
                                  const NaiveBudget& budget) {
    uint32_t s = problem.arity;
    uint32_t N = f.N();
    if (s == 0) throw ArityMismatch("arity must be positive");
    if (s > budget.max_arity)
        throw BudgetExceeded("arity " + std::to_string(s) + " exceeds naive budget");
    if (problem.points.size() > budget.max_points)
        throw BudgetExceeded("point count " + std::to_string(problem.points.size()) +
                             " exceeds naive budget");
    if (problem.points.size() != problem.values.size())
        throw Error("point/value count mismatch");

    std::unordered_set<std::vector<Element>, PointHash> seen;
    for (const auto& pt : problem.points) {
        if (pt.size() != s) throw ArityMismatch("point arity mismatch");
        if (!seen.insert(pt).second) throw DuplicatePoints("interpolation points must be distinct");
    }

    // dense accumulation cube over exponent vectors in [0..N]^s
    uint64_t cube_size = 1;
    for (uint32_t j = 0; j < s; ++j) cube_size *= N + 1;
    if (cube_size > (1ull << 24))
        throw BudgetExceeded("exponent cube too large for naive build");
    std::vector<Element> cube(cube_size, Element{0});
    std::vector<uint64_t> stride(s, 1);
    for (uint32_t j = s - 1; j-- > 0;) stride[j] = stride[j + 1] * (N + 1);

    std::vector<std::vector<Element>> deltas(s);
    for (size_t i = 0; i < problem.points.size(); ++i) {
        if (problem.values[i].code == 0) continue;
        for (uint32_t j = 0; j < s; ++j) deltas[j] = delta_poly(f, problem.points[i][j]).coeffs();
        // accumulate y_i * prod_j deltas[j][k_j] into the cube
        auto rec = [&](auto&& self, uint32_t j, Element c, uint64_t base) -> void {
            const auto& d = deltas[j];
            if (j + 1 == s) {
                for (uint32_t k = 0; k < d.size(); ++k)
                    if (d[k].code) cube[base + k] = f.add(cube[base + k], f.mul(c, d[k]));
                return;
            }
            for (uint32_t k = 0; k < d.size(); ++k)
                if (d[k].code) self(self, j + 1, f.mul(c, d[k]), base + k * stride[j]);
        };
        rec(rec, 0, problem.values[i], 0);
    }

    std::vector<MpTerm> terms;
    std::vector<uint32_t> exps(s, 0);
    for (uint64_t idx = 0; idx < cube_size; ++idx) {
        if (cube[idx].code != 0) {
            uint64_t rest = idx;
            for (uint32_t j = 0; j < s; ++j) {
                exps[j] = (uint32_t)(rest / stride[j]);
                rest %= stride[j];
            }
            terms.push_back({exps, cube[idx]});
        }
    }
    return SparseMultiPoly(s, N, std::move(terms));
}

OrbitStructure shift_orbits(const CyclicCodeSpec& code) {
    OrbitStructure out{OrbitKind::Shift, {}, 0};
    for_each_correctable(code, [&](const ErrorPattern& e) {
        ++out.total_patterns;
        auto [rep, size] = shift_canonical(code, e);
        if (rep == e) out.orbits.push_back({e, size, 0});
    });
    return out;
}

OrbitStructure frobenius_orbits(const CyclicCodeSpec& code) {
    OrbitStructure out{OrbitKind::Frobenius, {}, 0};
    for_each_correctable(code, [&](const ErrorPattern& e) {
        ++out.total_patterns;
        if (frobenius_canonical(code, e) == e) {
            uint32_t d = 1;
            ErrorPattern cur = frobenius_pattern(code, e);
            while (cur != e) {
                cur = frobenius_pattern(code, cur);
                ++d;
            }
            out.orbits.push_back({e, 0, d});
            out.orbits.back().size = d;
        }
    });
    return out;
}

SparseMultiPoly interpolate_orbits(const CyclicCodeSpec& code,
                                   const std::function<Element(const ErrorPattern&)>& target,
                                   uint32_t target_degree,
                                   const OrbitBuildOptions& options) {
    const FieldSpec& f = code.field;
    const uint32_t s = (uint32_t)code.R_C.size();
    const uint32_t N = f.N();
    const uint32_t n = code.n;
    const uint32_t r = target_degree % n;

    // shift-orbit representatives
    struct Orbit {
        ErrorPattern rep;
        uint32_t size;
    };
    std::vector<Orbit> orbits;
    std::vector<ErrorPattern> all;
    all.reserve(correctable_count(code));
    for_each_correctable(code, [&](const ErrorPattern& e) {
        all.push_back(e);
        auto [rep, size] = shift_canonical(code, e);
        if (rep == e) orbits.push_back({e, size});
    });

    // spot-check the declared homogeneity degree and *-symmetry of the target
    {
        std::mt19937_64 rng(options.probe_seed);
        for (uint32_t probe = 0; probe < options.hypothesis_probes && !all.empty(); ++probe) {
            const ErrorPattern& e = all[rng() % all.size()];
            uint32_t w = (uint32_t)(rng() % n);
            Element lhs = target(shift_pattern(code, e, w));
            Element rhs = f.mul(code.beta_pow((int64_t)w * r), target(e));
            if (lhs != rhs)
                throw HypothesisViolated("target map is not *-homogeneous of degree " +
                                         std::to_string(r));
            if (target(frobenius_pattern(code, e)) != f.pow(target(e), code.q))
                throw HypothesisViolated("target map is not *-symmetric");
        }
    }

    // group shift-orbits into Frobenius classes where the aggregation is valid
    std::vector<std::vector<size_t>> groups;  // indices into orbits, first = class rep
    std::vector<uint32_t> group_trace_depth;
    {
        std::map<ErrorPattern, size_t> rep_index;
        for (size_t i = 0; i < orbits.size(); ++i) rep_index.emplace(orbits[i].rep, i);
        std::vector<bool> used(orbits.size(), false);
        for (size_t i = 0; i < orbits.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            bool aggregatable = options.use_frobenius_classes && code.gcd_n_qm1_is_one &&
                                orbits[i].size == n;
            if (!aggregatable) {
                groups.push_back({i});
                group_trace_depth.push_back(1);
                continue;
            }
            // follow conjugates until we return to this shift-orbit
            std::vector<size_t> members{i};
            ErrorPattern cur = orbits[i].rep;
            uint32_t depth = 1;
            while (true) {
                cur = shift_canonical(code, frobenius_pattern(code, cur)).first;
                size_t j = rep_index.at(cur);
                if (j == i) break;
                used[j] = true;
                members.push_back(j);
                ++depth;
            }
            groups.push_back(std::move(members));
            group_trace_depth.push_back(depth);
        }
    }

    MultiPolyBuilder builder(f, s);
    std::vector<uint32_t> exps(s);

    // reusable last-variable congruence table for the free-orbit fast path:
    // k in 1..N with degrees[s-1]*k = c (mod n), bucketed by c
    std::vector<std::vector<uint32_t>> last_table(n);
    {
        uint32_t rl = code.R_C.back() % n;
        for (uint32_t k = 1; k <= N; ++k)
            last_table[(uint32_t)((uint64_t)rl * k % n)].push_back(k);
    }

    for (size_t gi = 0; gi < groups.size(); ++gi) {
        const auto& group = groups[gi];
        const uint32_t trace_depth = group_trace_depth[gi];
        // with aggregation the class is handled once through its first
        // representative and a trace sum; otherwise each orbit separately
        size_t handled = trace_depth > 1 ? 1 : group.size();
        for (size_t m = 0; m < handled; ++m) {
            const Orbit& orbit = orbits[group[m]];
            Element fval = target(orbit.rep);
            if (fval.code == 0) continue;

            std::vector<uint32_t> U0, U1;
            std::vector<Element> h(s);
            for (uint32_t j = 0; j < s; ++j) {
                h[j] = syndrome(code, orbit.rep, code.R_C[j]);
                (h[j].code == 0 ? U0 : U1).push_back(j);
            }

            const bool free_orbit = orbit.size == n;
            Element orbit_scalar = f.from_int(orbit.size);
            const uint32_t u1 = (uint32_t)U1.size();

            // emits one U1-exponent assignment with its collapsed class sum
            auto emit = [&](std::span<const uint32_t> k_u1, Element geom) {
                // gamma = f / prod h_i^{k_i}
                Element gamma = fval;
                for (uint32_t j = 0; j < u1; ++j)
                    gamma = f.mul(gamma, f.pow(h[U1[j]], -(int64_t)k_u1[j]));
                if (trace_depth > 1)
                    gamma = f.conjugacy_trace_sum(gamma, code.q, trace_depth);
                Element coeff = f.mul(geom, gamma);
                if (coeff.code == 0) return;
                std::fill(exps.begin(), exps.end(), 0);
                for (uint32_t j = 0; j < u1; ++j) exps[U1[j]] = k_u1[j];
                // expand prod_{i in U0} (1 - x_i^N)
                for (uint32_t mask = 0; mask < (1u << U0.size()); ++mask) {
                    uint32_t bits = (uint32_t)__builtin_popcount(mask);
                    for (uint32_t b = 0; b < U0.size(); ++b)
                        exps[U0[b]] = (mask >> b) & 1 ? N : 0;
                    Element c = (u1 + bits) % 2 ? f.neg(coeff) : coeff;
                    builder.add_normalized(exps, c);
                }
            };

            if (u1 == 0) {
                // pure prod (1 - x_i^N) branch; class sum over the orbit of f
                int64_t lambda = r % n;
                Element geom;
                if (lambda % n == 0) geom = orbit_scalar;
                else if ((uint64_t)orbit.size * lambda % n == 0) continue;
                else {
                    Element x = code.beta_pow(lambda);
                    geom = f.div(f.sub(f.pow(x, orbit.size), f.one()), f.sub(x, f.one()));
                }
                emit({}, geom);
                continue;
            }

            std::vector<uint32_t> k(u1, 1);
            if (free_orbit) {
                // only exponents with sum_i r_i k_i = r (mod n) survive;
                // solve for the last U1 variable through the bucket table
                std::vector<std::vector<uint32_t>>* table = &last_table;
                std::vector<std::vector<uint32_t>> local_table;
                if (U1.back() != s - 1) {
                    local_table.assign(n, {});
                    uint32_t rl = code.R_C[U1.back()] % n;
                    for (uint32_t kk = 1; kk <= N; ++kk)
                        local_table[(uint32_t)((uint64_t)rl * kk % n)].push_back(kk);
                    table = &local_table;
                }
                while (true) {
                    uint64_t partial = 0;
                    for (uint32_t j = 0; j + 1 < u1; ++j)
                        partial += (uint64_t)(code.R_C[U1[j]] % n) * k[j];
                    uint32_t need = (uint32_t)((r % n + n - partial % n) % n);
                    for (uint32_t klast : (*table)[need]) {
                        k[u1 - 1] = klast;
                        emit(k, orbit_scalar);
                    }
                    // odometer over k[0..u1-2]
                    uint32_t j = u1 - 1;
                    while (j-- > 0) {
                        if (++k[j] <= N) break;
                        k[j] = 1;
                        if (j == 0) goto orbit_done;
                    }
                    if (u1 == 1) break;
                }
            } else {
                // general class sum: geometric sum of beta^lambda over the
                // orbit period, which may be nonzero off the congruence
                while (true) {
                    uint64_t weighted = 0;
                    for (uint32_t j = 0; j < u1; ++j)
                        weighted += (uint64_t)(code.R_C[U1[j]] % n) * k[j];
                    uint32_t lambda = (uint32_t)((r % n + n - weighted % n) % n);
                    Element geom;
                    bool skip = false;
                    if (lambda == 0) geom = orbit_scalar;
                    else if ((uint64_t)orbit.size * lambda % n == 0) skip = true;
                    else {
                        Element x = code.beta_pow(lambda);
                        geom = f.div(f.sub(f.pow(x, orbit.size), f.one()), f.sub(x, f.one()));
                    }
                    if (!skip) emit(k, geom);
                    uint32_t j = u1;
                    while (j-- > 0) {
                        if (++k[j] <= N) break;
                        k[j] = 1;
                        if (j == 0) goto orbit_done;
                    }
                }
            }
        orbit_done:;
        }
    }
    return builder.build();
}

CongruenceSplit congruence_filter(const SparseMultiPoly& poly,
                                  std::span<const uint32_t> degrees, uint32_t r, uint32_t n) {
    if (degrees.size() != poly.arity()) throw ArityMismatch("degree list arity mismatch");
    CongruenceSplit split;
    for (const MpTerm& t : poly.terms()) {
        uint64_t sum = 0;
        for (uint32_t j = 0; j < poly.arity(); ++j) sum += (uint64_t)degrees[j] * t.exps[j];
        (sum % n == r % n ? split.kept : split.violating).push_back(t);
    }
    return split;
}

}  // namespace cydec
