#include "sds/hidden_shift.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace sds {

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

HiddenShiftInstance make_shift_instance(DifferenceSet D, const GroupElement& s) {
    auto indicator = shifted_indicator(D, s);
    AbelianGroup group = D.group();
    return HiddenShiftInstance{
        std::move(D),
        [group, indicator = std::move(indicator)](const GroupElement& x) {
            return indicator[group.index_of(x)] != 0;
        },
        s};
}

Algorithm1Result run_algorithm1(const HiddenShiftInstance& instance) {
    const auto& D = instance.D;
    StateVector state = uniform_state(D.group());
    state = apply_phase_oracle(state, instance.oracle);
    state = apply_qft(state, /*inverse=*/false);
    state = apply_diagonal(state, build_diagonal(D));
    state = apply_qft(state, /*inverse=*/true);
    Eigen::VectorXd dist = measure_distribution(state);
    Eigen::Index peak = 0;
    double peak_p = dist.maxCoeff(&peak);
    return Algorithm1Result{std::move(state), std::move(dist),
                            static_cast<std::uint64_t>(peak), peak_p};
}

double closed_form_peak_probability(std::int64_t v, std::int64_t k,
                                    std::int64_t lambda) {
    const double dv = static_cast<double>(v);
    const double root = std::sqrt(static_cast<double>(k - lambda));
    const double c0 = 1.0 - 2.0 * (static_cast<double>(k) - root) / dv;
    const double amp = 2.0 * root - c0;
    return amp * amp / dv;
}

Rational approx_success_probability(std::int64_t v, std::int64_t k,
                                    std::int64_t lambda) {
    return make_rational(4 * (k - lambda), v);
}

namespace {

// Oracle screening of a candidate shift: compare the instance oracle with
// membership in c + D at min(v, 64) points (all points when v <= 64).
bool candidate_matches(const HiddenShiftInstance& instance,
                       const GroupElement& c, std::uint64_t seed) {
    const auto& g = instance.D.group();
    const std::uint64_t v = g.order();
    auto check = [&](std::uint64_t idx) {
        GroupElement x = g.element_at(idx);
        bool member = instance.D.contains(g.sub(x, c));
        return instance.oracle(x) == member;
    };
    if (v <= 64) {
        for (std::uint64_t i = 0; i < v; ++i)
            if (!check(i)) return false;
        return true;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, v - 1);
    for (int i = 0; i < 64; ++i)
        if (!check(pick(rng))) return false;
    return true;
}

}  // namespace

SolverResult recover_shift(const HiddenShiftInstance& instance,
                           std::uint64_t max_trials, std::uint64_t seed) {
    Algorithm1Result run = run_algorithm1(instance);
    const auto& g = instance.D.group();
    const double p_exact = closed_form_peak_probability(
        instance.D.params().v, instance.D.params().k, instance.D.params().lambda);
    if (max_trials == 0)
        max_trials = static_cast<std::uint64_t>(std::ceil(8.0 / p_exact));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    SolverResult result;
    result.peak_probability = run.distribution[static_cast<Eigen::Index>(run.peak_index)];
    for (std::uint64_t trial = 0; trial < max_trials; ++trial) {
        double u = unif(rng);
        double acc = 0.0;
        std::uint64_t measured = g.order() - 1;
        for (Eigen::Index i = 0; i < run.distribution.size(); ++i) {
            acc += run.distribution[i];
            if (u < acc) {
                measured = static_cast<std::uint64_t>(i);
                break;
            }
        }
        GroupElement m = g.element_at(measured);
        for (const GroupElement& cand : {m, g.negate(m)}) {
            if (candidate_matches(instance, cand, seed ^ (trial + 1))) {
                result.success = true;
                result.shift = cand;
                result.trials_used = trial + 1;
                return result;
            }
        }
    }
    result.trials_used = max_trials;
    return result;
}

Rational influence(const DifferenceSet& D, const GroupElement& v) {
    const auto& g = D.group();
    std::int64_t flips = 0;
    for (std::uint64_t i = 0; i < g.order(); ++i) {
        GroupElement x = g.element_at(i);
        if (D.contains(x) != D.contains(g.add(x, v))) ++flips;
    }
    return make_rational(flips, static_cast<std::int64_t>(g.order()));
}

int required_copies(std::uint64_t group_order) {
    if (group_order < 2)
        throw std::invalid_argument("required_copies: group order < 2");
    // ceil(2 log2 v) = ceil(log2 v^2), exact in integer arithmetic.
    unsigned __int128 sq =
        static_cast<unsigned __int128>(group_order) * group_order;
    int bits = 0;
    while ((static_cast<unsigned __int128>(1) << bits) < sq) ++bits;
    return bits + 6;
}

std::vector<int> InjectivizedFunction::eval(const GroupElement& x) const {
    std::vector<int> out;
    out.reserve(offsets.size());
    for (const auto& v : offsets) out.push_back(base(group.add(x, v)));
    return out;
}

InjectivizedFunction injectivize(const AbelianGroup& group,
                                 std::function<int(const GroupElement&)> f,
                                 int m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("injectivize: m must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, group.order() - 1);
    std::vector<GroupElement> offsets;
    offsets.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) offsets.push_back(group.element_at(pick(rng)));
    return InjectivizedFunction{group, std::move(offsets), std::move(f)};
}

bool is_injective(const InjectivizedFunction& fV) {
    std::map<std::vector<int>, std::uint64_t> seen;
    for (std::uint64_t i = 0; i < fV.group.order(); ++i) {
        auto val = fV.eval(fV.group.element_at(i));
        if (!seen.emplace(std::move(val), i).second) return false;
    }
    return true;
}

}  // namespace sds
