#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "sds/diffset.hpp"
#include "sds/field.hpp"

namespace sds {

/// chi(D) = sum over d in D of chi(d).
std::complex<double> char_sum(const DifferenceSet& D, const Character& chi);

/// Character sums of D at all v characters, checked against the two-level
/// spectrum |chi(D)| = sqrt(k - lambda) for nontrivial chi.
struct SpectrumReport {
    Eigen::VectorXcd values;            // canonical character order
    double trivial_value = 0.0;         // chi_0(D), equals k
    double target_magnitude = 0.0;      // sqrt(k - lambda)
    double max_abs_deviation = 0.0;     // over nontrivial characters
    std::uint64_t worst_character = 0;  // index achieving the max deviation
    bool pass = false;
};

SpectrumReport turyn_check(const DifferenceSet& D, double tol = 1e-8);

/// Same flatness report for a raw subset that may fail verification; the
/// target magnitude uses lambda = k(k-1)/(v-1), which the counting identity
/// forces for any genuine difference set.
SpectrumReport turyn_check(const AbelianGroup& group,
                           const std::vector<GroupElement>& elements,
                           double tol = 1e-8);

/// G(psi_mu, chi_beta) = sum over x in F^x of chi_beta(x) psi_mu(x), with
/// psi_mu(x) = omega_p^tr(mu x) and chi_beta(alpha^i) = omega_{q-1}^(beta i).
/// Both characters must be nontrivial; |G| = sqrt(q).
std::complex<double> gauss_sum(const FiniteField& field,
                               const PrimitiveElement& alpha,
                               const FieldElement& mu, std::int64_t beta_index);

/// For q = 2 and the Singer set of GF(2^(d+1)): compares chi_beta(D) with
/// G(psi, chi_beta) for every nontrivial beta. The ratio G / chi(D) is one
/// constant across beta (brute force gives 2).
struct SingerGaussReport {
    int d = 0;
    Eigen::VectorXcd ratios;         // indexed by beta - 1
    std::complex<double> mean_ratio;
    double ratio_variance = 0.0;     // max |ratio - mean|^2
    double max_chi_magnitude_dev = 0.0;  // vs 2^((d-1)/2)
    bool pass = false;
};

SingerGaussReport singer_gauss_relation(int d, double tol = 1e-8);

/// max over all nontrivial (mu, beta) of | |G(psi_mu, chi_beta)| - sqrt(q) |,
/// using precomputed trace and root tables so exhaustive sweeps stay fast.
double gauss_all_pairs_max_deviation(const FiniteField& field,
                                     const PrimitiveElement& alpha);

}  // namespace sds
