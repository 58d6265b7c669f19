#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>

#include "sds/diffset.hpp"
#include "sds/statevector.hpp"

namespace sds {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};
Rational make_rational(std::int64_t num, std::int64_t den);

/// Shifted-difference-set problem instance: D is known, the translate s + D
/// is available only through a membership oracle.
struct HiddenShiftInstance {
    DifferenceSet D;
    std::function<bool(const GroupElement&)> oracle;
    std::optional<GroupElement> secret;  // test-harness only
};

HiddenShiftInstance make_shift_instance(DifferenceSet D, const GroupElement& s);

struct Algorithm1Result {
    StateVector final_state;
    Eigen::VectorXd distribution;
    std::uint64_t peak_index = 0;
    double peak_probability = 0.0;
};

/// One coherent pass: uniform superposition, phase query of s + D, QFT,
/// the diagonal built from the unshifted D, inverse QFT, measurement
/// distribution. The output has a single peak at the shift (up to sign
/// convention) over a uniform floor.
Algorithm1Result run_algorithm1(const HiddenShiftInstance& instance);

/// Exact peak probability (2 sqrt(k-lambda) - c0)^2 / v with
/// c0 = 1 - 2 (k - sqrt(k-lambda)) / v, validated against the dense-matrix
/// oracle in the test suite.
double closed_form_peak_probability(std::int64_t v, std::int64_t k,
                                    std::int64_t lambda);

/// The coarse estimate 4 (k - lambda) / v. Ignores interference with the
/// residual uniform term and may exceed 1.
Rational approx_success_probability(std::int64_t v, std::int64_t k,
                                    std::int64_t lambda);

struct SolverResult {
    bool success = false;
    GroupElement shift;
    std::uint64_t trials_used = 0;
    double peak_probability = 0.0;
};

/// Samples the Algorithm 1 distribution; each measured m is screened as
/// both m and -m against the oracle before being returned. max_trials = 0
/// picks ceil(8 / p_exact).
SolverResult recover_shift(const HiddenShiftInstance& instance,
                           std::uint64_t max_trials, std::uint64_t seed);

/// gamma_v(f) = Pr_x(f(x) != f(x+v)) as an exact rational; equals
/// 2 (k - lambda) / |A| for every nonzero v.
Rational influence(const DifferenceSet& D, const GroupElement& v);

/// ceil(2 log2 |A|) + 6 offsets suffice for injectivization with
/// probability > 1 - 1/64.
int required_copies(std::uint64_t group_order);

/// f_V(x) = (f(x+v_1), ..., f(x+v_m)) for a seeded uniform draw of V.
struct InjectivizedFunction {
    AbelianGroup group;
    std::vector<GroupElement> offsets;
    std::function<int(const GroupElement&)> base;

    std::vector<int> eval(const GroupElement& x) const;
};

InjectivizedFunction injectivize(const AbelianGroup& group,
                                 std::function<int(const GroupElement&)> f,
                                 int m, std::uint64_t seed);

bool is_injective(const InjectivizedFunction& fV);

}  // namespace sds
