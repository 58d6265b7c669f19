#include "sds/statevector.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace sds {

StateVector::StateVector(AbelianGroup group, Eigen::VectorXcd amps)
    : group_(std::move(group)), amps_(std::move(amps)) {
    if (static_cast<std::uint64_t>(amps_.size()) != group_.order())
        throw std::invalid_argument("StateVector: amplitude count mismatch");
}

StateVector uniform_state(const AbelianGroup& group) {
    if (group.order() > group.cap())
        throw std::length_error("uniform_state: group order exceeds cap");
    const auto v = static_cast<Eigen::Index>(group.order());
    Eigen::VectorXcd amps =
        Eigen::VectorXcd::Constant(v, 1.0 / std::sqrt(static_cast<double>(v)));
    return StateVector(group, std::move(amps));
}

StateVector basis_state(const AbelianGroup& group, const GroupElement& g) {
    Eigen::VectorXcd amps =
        Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(group.order()));
    amps[static_cast<Eigen::Index>(group.index_of(g))] = 1.0;
    return StateVector(group, std::move(amps));
}

StateVector apply_qft(const StateVector& state, bool inverse) {
    const auto& moduli = state.group().moduli();
    const auto v = static_cast<std::uint64_t>(state.amps().size());
    Eigen::VectorXcd cur = state.amps();
    Eigen::VectorXcd next(cur.size());

    // Transform one factor at a time. With last-coordinate-fastest
    // enumeration, factor i occupies blocks of size block = prod of later
    // moduli, repeated v / (m * block) times.
    std::uint64_t block = v;
    for (Coord m_signed : moduli) {
        const auto m = static_cast<std::uint64_t>(m_signed);
        block /= m;
        const double scale = 1.0 / std::sqrt(static_cast<double>(m));
        // Roots of unity for this factor, fixed summation order.
        std::vector<std::complex<double>> roots(m);
        const double sign = inverse ? -1.0 : 1.0;
        for (std::uint64_t j = 0; j < m; ++j)
            roots[j] = std::polar(
                1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(j) /
                         static_cast<double>(m));
        for (std::uint64_t base = 0; base < v; base += m * block) {
            for (std::uint64_t off = 0; off < block; ++off) {
                for (std::uint64_t j = 0; j < m; ++j) {
                    std::complex<double> acc = 0.0;
                    for (std::uint64_t t = 0; t < m; ++t)
                        acc += roots[(j * t) % m] *
                               cur[static_cast<Eigen::Index>(base + t * block + off)];
                    next[static_cast<Eigen::Index>(base + j * block + off)] =
                        scale * acc;
                }
            }
        }
        std::swap(cur, next);
    }
    return StateVector(state.group(), std::move(cur));
}

StateVector apply_phase_oracle(
    const StateVector& state,
    const std::function<bool(const GroupElement&)>& pred) {
    Eigen::VectorXcd amps = state.amps();
    for (Eigen::Index i = 0; i < amps.size(); ++i)
        if (pred(state.group().element_at(static_cast<std::uint64_t>(i))))
            amps[i] = -amps[i];
    return StateVector(state.group(), std::move(amps));
}

StateVector apply_phase_oracle(const StateVector& state,
                               const std::vector<char>& indicator) {
    if (indicator.size() != static_cast<std::size_t>(state.amps().size()))
        throw std::invalid_argument("phase oracle: indicator size mismatch");
    Eigen::VectorXcd amps = state.amps();
    for (Eigen::Index i = 0; i < amps.size(); ++i)
        if (indicator[static_cast<std::size_t>(i)]) amps[i] = -amps[i];
    return StateVector(state.group(), std::move(amps));
}

DiagonalOperator build_diagonal(const DifferenceSet& D) {
    if (D.params().k <= D.params().lambda)
        throw std::domain_error("build_diagonal: k must exceed lambda");
    const auto& g = D.group();
    const double target =
        std::sqrt(static_cast<double>(D.params().k - D.params().lambda));
    DiagonalOperator op;
    op.phases.resize(static_cast<Eigen::Index>(g.order()));
    op.phases[0] = 1.0;
    for (std::uint64_t i = 1; i < g.order(); ++i) {
        std::complex<double> s = 0.0;
        Character chi = g.character_at(i);
        for (const auto& d : D.elements()) s += g.eval(chi, d);
        op.phases[static_cast<Eigen::Index>(i)] = std::conj(s) / target;
    }
    return op;
}

DiagonalOperator conjugate(const DiagonalOperator& op) {
    return DiagonalOperator{op.phases.conjugate()};
}

StateVector apply_diagonal(const StateVector& state, const DiagonalOperator& op) {
    if (op.phases.size() != state.amps().size())
        throw std::invalid_argument("apply_diagonal: size mismatch");
    return StateVector(state.group(),
                       state.amps().cwiseProduct(op.phases));
}

Eigen::VectorXd measure_distribution(const StateVector& state) {
    if (std::abs(state.norm() - 1.0) > 1e-6)
        throw std::logic_error("measure_distribution: state is not normalized");
    return state.amps().cwiseAbs2();
}

std::vector<std::uint64_t> sample(const StateVector& state, std::uint64_t seed,
                                  std::uint64_t trials) {
    Eigen::VectorXd p = measure_distribution(state);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(p.size()), 0);
    for (std::uint64_t t = 0; t < trials; ++t) {
        double u = unif(rng);
        double acc = 0.0;
        Eigen::Index idx = p.size() - 1;
        for (Eigen::Index i = 0; i < p.size(); ++i) {
            acc += p[i];
            if (u < acc) {
                idx = i;
                break;
            }
        }
        ++counts[static_cast<std::size_t>(idx)];
    }
    return counts;
}

}  // namespace sds
