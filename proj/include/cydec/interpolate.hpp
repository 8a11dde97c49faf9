#ifndef CYDEC_INTERPOLATE_HPP
#define CYDEC_INTERPOLATE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cydec/code.hpp"
#include "cydec/poly.hpp"

namespace cydec {

/// Kronecker delta polynomial on E: evaluates to 1 at a and 0 at every
/// other element. For a = 0 it is 1 - x^N; otherwise the coefficient of
/// x^k is -a^(-k) for k = 1..N.
UniPoly delta_poly(const FieldSpec& f, Element a);

/// Interpolation data: pairwise-distinct points in E^arity and one target
/// value per point.
struct InterpolationProblem {
    uint32_t arity = 0;
    std::vector<std::vector<Element>> points;
    std::vector<Element> values;
};

struct NaiveBudget {
    uint64_t max_points = 10'000;
    uint32_t max_arity = 4;
};

/// Direct interpolation: sum over points of y_i * prod_j delta_{x_i^j}(x_j),
/// expanded to a canonical sparse polynomial. Exact on the problem's points.
/// Cost grows as points * (N+1)^arity, hence the hard budget guard.
SparseMultiPoly interpolate_naive(const FieldSpec& f, const InterpolationProblem& problem,
                                  const NaiveBudget& budget = {});

enum class OrbitKind { Shift, Frobenius };

struct OrbitInfo {
    ErrorPattern representative;
    uint32_t size = 0;    // number of distinct patterns in the orbit
    uint32_t degree = 0;  // smallest d >= 1 with rep^(q^d) = rep (Frobenius kind)
};

/// Partition of the correctable patterns into orbits under the cyclic-shift
/// action (Shift) or the coordinate-wise Frobenius action (Frobenius).
struct OrbitStructure {
    OrbitKind kind;
    std::vector<OrbitInfo> orbits;
    uint64_t total_patterns = 0;
};

OrbitStructure shift_orbits(const CyclicCodeSpec& code);
OrbitStructure frobenius_orbits(const CyclicCodeSpec& code);

struct OrbitBuildOptions {
    /// Aggregate conjugate shift-orbits through one trace sum per exponent.
    /// Applied only where valid: gcd(n, q-1) = 1 and free shift action.
    bool use_frobenius_classes = true;
    /// Number of random homogeneity/symmetry spot-checks on the target map.
    uint32_t hypothesis_probes = 8;
    uint64_t probe_seed = 0x5eed;
};

/// Orbit-accelerated interpolation of a target map over the correctable
/// patterns, with the base-set syndrome maps S_{r_1}..S_{r_s} as
/// coordinates. Functionally identical to interpolate_naive on the
/// interpolation set {(base syndromes of e) -> target(e)}, but computed
/// per shift-orbit: exponent vectors whose degree-weighted sum is
/// incompatible with the target degree modulo the orbit period contribute
/// a vanishing geometric class sum and are skipped; surviving class sums
/// collapse to a scalar multiple. Coordinates that vanish on an orbit
/// factor out as (1 - x_i^N).
///
/// target_degree is the *-homogeneity degree r of the target map
/// (f(shift by w) = beta^(wr) * f); violations of the declared degree or of
/// *-symmetry are spot-checked and raise HypothesisViolated.
SparseMultiPoly interpolate_orbits(const CyclicCodeSpec& code,
                                   const std::function<Element(const ErrorPattern&)>& target,
                                   uint32_t target_degree,
                                   const OrbitBuildOptions& options = {});

struct CongruenceSplit {
    std::vector<MpTerm> kept;
    std::vector<MpTerm> violating;
};

/// Partitions terms by the degree congruence sum_i degrees[i]*e_i = r (mod n).
CongruenceSplit congruence_filter(const SparseMultiPoly& poly,
                                  std::span<const uint32_t> degrees, uint32_t r, uint32_t n);

}  // namespace cydec

#endif
