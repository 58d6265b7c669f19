#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sds/field.hpp"
#include "sds/hidden_shift.hpp"
#include "sds/group.hpp"

namespace sds {

/// Element (a, t) of A x| Z_2 with the inversion action of Z_2.
struct SemidirectElement {
    GroupElement a;
    int t = 0;

    friend bool operator==(const SemidirectElement&, const SemidirectElement&) =
        default;
};

/// A x| Z_2: (a,t)(b,u) = (a + (-1)^t b, t xor u).
class SemidirectGroup {
public:
    explicit SemidirectGroup(AbelianGroup base) : base_(std::move(base)) {}

    const AbelianGroup& base() const { return base_; }
    std::uint64_t order() const { return 2 * base_.order(); }

    SemidirectElement identity() const { return {base_.zero(), 0}; }
    SemidirectElement mul(const SemidirectElement& x,
                          const SemidirectElement& y) const;
    SemidirectElement inv(const SemidirectElement& x) const;
    SemidirectElement element_at(std::uint64_t idx) const;
    std::uint64_t index_of(const SemidirectElement& x) const;

private:
    AbelianGroup base_;
};

/// HSP instance over A x| Z_2 hiding the order-2 subgroup <(h,1)>.
struct DihedralHSPInstance {
    SemidirectGroup group;
    std::function<std::vector<int>(const SemidirectElement&)> hiding;
    std::optional<GroupElement> hidden_generator;  // test-harness only
};

/// F((a,0)) = f(a), F((a,1)) = g(a) for an injective shift pair
/// g(x) = f(x - h). Finds h by exhaustive invariance check; rejects pairs
/// that are not injective or not shifts of each other.
DihedralHSPInstance build_hsp_from_shift(
    const AbelianGroup& base,
    std::function<std::vector<int>(const GroupElement&)> f,
    std::function<std::vector<int>(const GroupElement&)> g);

struct HSPVerification {
    bool ok = false;
    std::optional<SemidirectElement> witness;
    std::string reason;
};

/// Exhaustive check that the hiding function is constant on right cosets of
/// <(h,1)> and separates cosets.
HSPVerification verify_hsp_instance(const DihedralHSPInstance& instance,
                                    const GroupElement& h);

/// Singer-type white-box instance over Z_N, N = 2^(d+1) - 1:
/// f(x) = tr(alpha^x), g(x) = tr(alpha^x beta) with published beta = alpha^s.
struct WhiteBoxSingerInstance {
    FiniteField field;
    PrimitiveElement alpha;
    int d = 0;
    std::uint64_t N = 0;
    FieldElement beta;
    std::optional<std::uint64_t> secret;  // test-harness only

    int f(std::uint64_t x) const;  // tr(alpha^x)
    int g(std::uint64_t x) const;  // tr(alpha^x beta) = f(x + s)
};

WhiteBoxSingerInstance make_whitebox_instance(int d, std::uint64_t seed);

struct DihedralSolveResult {
    bool success = false;
    GroupElement generator;            // h of the recovered <(h,1)>
    std::uint64_t trials_used = 0;
    std::uint64_t hiding_queries = 0;  // oracle evaluations inside Algorithm 1
    std::uint64_t verify_queries = 0;  // classical post-processing checks
};

/// Full solve pipeline: extract the shift pair from the hiding function,
/// project to one coordinate, recover the shift with Algorithm 1, then pin
/// the reflection by exhaustive verification.
DihedralSolveResult solve_dihedral_hsp(const DihedralHSPInstance& instance,
                                       std::uint64_t max_trials,
                                       std::uint64_t seed);

/// Builds the HSP instance for a white-box Singer problem: injectivizes
/// f and g with m = required_copies(N) shared offsets (resampled on the
/// rare non-injective draw) and wires them into the semidirect group.
DihedralHSPInstance whitebox_to_hsp(const WhiteBoxSingerInstance& wb,
                                    std::uint64_t seed);

/// Number of solvable instances at size n: |A|^m with |A| = 2^n - 1 and
/// m = required_copies(|A|), reported against the asymptotic exponent n^2.
struct InstanceCountReport {
    std::uint64_t base = 0;   // |A|
    int copies = 0;           // m
    double count_log2 = 0.0;  // m * log2 |A|
    int asymptotic_exponent = 0;   // n^2
};
InstanceCountReport expected_instance_count(int n);

}  // namespace sds
