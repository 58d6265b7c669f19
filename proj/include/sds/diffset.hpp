#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sds/field.hpp"
#include "sds/group.hpp"

namespace sds {

struct DiffSetParams {
    std::int64_t v = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;

    friend bool operator==(const DiffSetParams&, const DiffSetParams&) = default;
};

/// A subset of an abelian group with certified (v,k,lambda) parameters.
class DifferenceSet {
public:
    /// Verifies the difference-set property on construction; throws
    /// std::invalid_argument with a witness description on rejection.
    DifferenceSet(AbelianGroup group, std::vector<GroupElement> elements,
                  std::string family = "custom");

    const AbelianGroup& group() const { return group_; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const DiffSetParams& params() const { return params_; }
    const std::string& family() const { return family_; }

    bool contains(const GroupElement& x) const;
    bool contains_index(std::uint64_t idx) const;

private:
    AbelianGroup group_;
    std::vector<GroupElement> elements_;  // sorted by canonical index
    std::vector<char> indicator_;         // indexed by canonical enumeration
    DiffSetParams params_;
    std::string family_;
};

struct VerifyRejection {
    // Two differences covered a different number of times.
    GroupElement witness_a;
    GroupElement witness_b;
    std::int64_t count_a = 0;
    std::int64_t count_b = 0;
    std::string reason;
};

struct VerifyResult {
    std::optional<DiffSetParams> params;  // set iff accepted
    std::optional<VerifyRejection> rejection;

    bool ok() const { return params.has_value(); }
};

/// Exact integer multiset accounting of all k^2 ordered differences.
VerifyResult verify_difference_set(const AbelianGroup& group,
                                   const std::vector<GroupElement>& elements);

/// Boolean function on 2n variables given by its truth table in canonical
/// (mixed-radix, last variable fastest) order.
struct BentFunctionSpec {
    int arity = 0;  // must be even
    std::vector<std::uint8_t> table;
};

/// Flat Walsh spectrum test: every coefficient has absolute value 2^(arity/2).
bool is_bent(const BentFunctionSpec& spec);

/// Inner-product bent function x1 x2 + x3 x4 + ... on 2n variables.
BentFunctionSpec inner_product_bent(int n);

/// Paley set: nonzero squares of GF(q), q = 3 mod 4, in the additive group
/// Z_p^n. Parameters (q, (q-1)/2, (q-3)/4).
DifferenceSet construct_paley(const FiniteField& field);

/// Hadamard set: support of a bent function (complemented when the support
/// is the majority size). Parameters (2^2n, 2^(2n-1)-2^(n-1), 2^(2n-2)-2^(n-1)).
DifferenceSet construct_hadamard(const BentFunctionSpec& spec);

/// Singer set in Z_N, N = (q^(d+1)-1)/(q-1): exponents i < N of a primitive
/// alpha with tr(alpha^i) = 0. q must be prime. A specific modulus for
/// GF(q^(d+1)) may be supplied; otherwise a seeded search is used.
DifferenceSet construct_singer(
    std::int64_t q, int d,
    const std::optional<std::vector<std::int64_t>>& modulus = std::nullopt);

/// Provenance of the most recent Singer construction is returned alongside
/// the set so white-box machinery can reuse the exact field and alpha.
struct SingerData {
    FiniteField field;
    PrimitiveElement alpha;
    std::uint64_t N;
    DifferenceSet set;
};
SingerData construct_singer_data(
    std::int64_t q, int d,
    const std::optional<std::vector<std::int64_t>>& modulus = std::nullopt);

/// Translate s + D, again a difference set with the same parameters.
DifferenceSet shift_set(const DifferenceSet& D, const GroupElement& s);

/// Indicator of s + D as a plain predicate.
std::vector<char> shifted_indicator(const DifferenceSet& D, const GroupElement& s);

/// Incidence matrix of Dev(D): row b, column a is 1 iff a is in b + D.
struct Development {
    Eigen::MatrixXi incidence;
};
Development development(const DifferenceSet& D);

}  // namespace sds
