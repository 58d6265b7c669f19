#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

#include "sds/diffset.hpp"
#include "sds/group.hpp"

namespace sds {

/// Exact complex amplitude vector over an abelian group, indexed by the
/// canonical enumeration. Operations return new states.
class StateVector {
public:
    StateVector(AbelianGroup group, Eigen::VectorXcd amps);

    const AbelianGroup& group() const { return group_; }
    const Eigen::VectorXcd& amps() const { return amps_; }
    double norm() const { return amps_.norm(); }

private:
    AbelianGroup group_;
    Eigen::VectorXcd amps_;
};

/// Per-character unit-modulus phases, applied in the character-indexed basis.
struct DiagonalOperator {
    Eigen::VectorXcd phases;
};

StateVector uniform_state(const AbelianGroup& group);

/// Computational-basis state |g>.
StateVector basis_state(const AbelianGroup& group, const GroupElement& g);

/// Forward: out[chi] = (1/sqrt v) sum_a chi(a) in[a]; inverse is the adjoint.
/// Applied factor-wise over the cyclic moduli as dense per-factor DFTs.
StateVector apply_qft(const StateVector& state, bool inverse = false);

/// Multiplies amplitudes by -1 where the predicate holds.
StateVector apply_phase_oracle(const StateVector& state,
                               const std::function<bool(const GroupElement&)>& pred);
StateVector apply_phase_oracle(const StateVector& state,
                               const std::vector<char>& indicator);

/// diag(1, conj(chi(D))/sqrt(k-lambda) : chi != chi_0); unit modulus by the
/// flat-spectrum property of difference sets.
DiagonalOperator build_diagonal(const DifferenceSet& D);
DiagonalOperator conjugate(const DiagonalOperator& op);
StateVector apply_diagonal(const StateVector& state, const DiagonalOperator& op);

/// p[g] = |amps[g]|^2; requires the state to be normalized.
Eigen::VectorXd measure_distribution(const StateVector& state);

/// Seeded reproducible sampling of the measurement distribution.
std::vector<std::uint64_t> sample(const StateVector& state, std::uint64_t seed,
                                  std::uint64_t trials);

}  // namespace sds
