#include "sds/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sds {

std::complex<double> char_sum(const DifferenceSet& D, const Character& chi) {
    std::complex<double> acc = 0.0;
    for (const auto& d : D.elements()) acc += D.group().eval(chi, d);
    return acc;
}

namespace {

SpectrumReport spectrum_report(const AbelianGroup& g,
                               const std::vector<GroupElement>& elements,
                               double target, double tol) {
    const std::uint64_t v = g.order();
    SpectrumReport rep;
    rep.values.resize(static_cast<Eigen::Index>(v));
    rep.target_magnitude = target;
    for (std::uint64_t i = 0; i < v; ++i) {
        Character chi = g.character_at(i);
        std::complex<double> s = 0.0;
        for (const auto& d : elements) s += g.eval(chi, d);
        rep.values[static_cast<Eigen::Index>(i)] = s;
        if (i == 0) {
            rep.trivial_value = s.real();
            continue;
        }
        double dev = std::abs(std::abs(s) - rep.target_magnitude);
        if (dev > rep.max_abs_deviation) {
            rep.max_abs_deviation = dev;
            rep.worst_character = i;
        }
    }
    rep.pass =
        rep.max_abs_deviation < tol &&
        std::abs(rep.trivial_value - static_cast<double>(elements.size())) < tol;
    return rep;
}

}  // namespace

SpectrumReport turyn_check(const DifferenceSet& D, double tol) {
    return spectrum_report(
        D.group(), D.elements(),
        std::sqrt(static_cast<double>(D.params().k - D.params().lambda)), tol);
}

SpectrumReport turyn_check(const AbelianGroup& group,
                           const std::vector<GroupElement>& elements,
                           double tol) {
    const double v = static_cast<double>(group.order());
    const double k = static_cast<double>(elements.size());
    const double lambda = k * (k - 1.0) / (v - 1.0);
    return spectrum_report(group, elements, std::sqrt(k - lambda), tol);
}

std::complex<double> gauss_sum(const FiniteField& field,
                               const PrimitiveElement& alpha,
                               const FieldElement& mu, std::int64_t beta_index) {
    const std::uint64_t order = field.size() - 1;
    if (field.is_zero(mu))
        throw std::invalid_argument("gauss_sum: additive character is trivial");
    if (beta_index % static_cast<std::int64_t>(order) == 0)
        throw std::invalid_argument(
            "gauss_sum: multiplicative character is trivial");
    const double p = static_cast<double>(field.p());
    std::complex<double> acc = 0.0;
    FieldElement x = field.one();
    for (std::uint64_t i = 0; i < order; ++i) {
        double mult_phase = 2.0 * std::numbers::pi *
                            static_cast<double>((static_cast<std::uint64_t>(
                                                     beta_index % static_cast<std::int64_t>(order)) *
                                                 i) %
                                                order) /
                            static_cast<double>(order);
        std::int64_t t = field.trace(field.mul(mu, x));
        double add_phase = 2.0 * std::numbers::pi * static_cast<double>(t) / p;
        acc += std::polar(1.0, mult_phase + add_phase);
        x = field.mul(x, alpha.element);
    }
    return acc;
}

double gauss_all_pairs_max_deviation(const FiniteField& field,
                                     const PrimitiveElement& alpha) {
    const std::uint64_t order = field.size() - 1;
    const double target = std::sqrt(static_cast<double>(field.size()));
    const double p = static_cast<double>(field.p());
    // Trace along the alpha-power ladder and additive-character phases.
    std::vector<double> add_phase(order);
    {
        FieldElement x = field.one();
        for (std::uint64_t i = 0; i < order; ++i) {
            add_phase[i] = 2.0 * std::numbers::pi *
                           static_cast<double>(field.trace(x)) / p;
            x = field.mul(x, alpha.element);
        }
    }
    std::vector<std::complex<double>> roots(order);
    for (std::uint64_t t = 0; t < order; ++t)
        roots[t] = std::polar(1.0, 2.0 * std::numbers::pi *
                                       static_cast<double>(t) /
                                       static_cast<double>(order));
    // mu = alpha^j shifts the trace ladder: tr(mu alpha^i) = tr(alpha^(i+j)).
    std::vector<std::complex<double>> psi(order);
    double max_dev = 0.0;
    for (std::uint64_t j = 0; j < order; ++j) {
        for (std::uint64_t i = 0; i < order; ++i)
            psi[i] = std::polar(1.0, add_phase[(i + j) % order]);
        for (std::uint64_t beta = 1; beta < order; ++beta) {
            std::complex<double> acc = 0.0;
            std::uint64_t t = 0;
            for (std::uint64_t i = 0; i < order; ++i) {
                acc += roots[t] * psi[i];
                t += beta;
                if (t >= order) t -= order;
            }
            max_dev = std::max(max_dev, std::abs(std::abs(acc) - target));
        }
    }
    return max_dev;
}

SingerGaussReport singer_gauss_relation(int d, double tol) {
    SingerData data = construct_singer_data(2, d);
    const FiniteField& field = data.field;
    const std::uint64_t N = data.N;  // = 2^(d+1) - 1 = field.size() - 1
    const DifferenceSet& D = data.set;

    SingerGaussReport rep;
    rep.d = d;
    rep.ratios.resize(static_cast<Eigen::Index>(N - 1));
    const double chi_target = std::pow(2.0, (d - 1) / 2.0);
    std::complex<double> sum_ratio = 0.0;
    for (std::uint64_t beta = 1; beta < N; ++beta) {
        Character chi{{static_cast<Coord>(beta)}};
        std::complex<double> chiD = char_sum(D, chi);
        std::complex<double> G = gauss_sum(field, data.alpha, field.one(),
                                           static_cast<std::int64_t>(beta));
        rep.max_chi_magnitude_dev =
            std::max(rep.max_chi_magnitude_dev, std::abs(std::abs(chiD) - chi_target));
        std::complex<double> ratio = G / chiD;
        rep.ratios[static_cast<Eigen::Index>(beta - 1)] = ratio;
        sum_ratio += ratio;
    }
    rep.mean_ratio = sum_ratio / static_cast<double>(N - 1);
    for (Eigen::Index i = 0; i < rep.ratios.size(); ++i)
        rep.ratio_variance =
            std::max(rep.ratio_variance, std::norm(rep.ratios[i] - rep.mean_ratio));
    rep.pass = rep.ratio_variance < tol && rep.max_chi_magnitude_dev < tol;
    return rep;
}

}  // namespace sds
