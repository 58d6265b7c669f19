#include "sds/dihedral.hpp"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace sds {

SemidirectElement SemidirectGroup::mul(const SemidirectElement& x,
                                       const SemidirectElement& y) const {
    GroupElement b = x.t ? base_.negate(y.a) : y.a;
    return {base_.add(x.a, b), x.t ^ y.t};
}

SemidirectElement SemidirectGroup::inv(const SemidirectElement& x) const {
    return x.t ? x : SemidirectElement{base_.negate(x.a), 0};
}

SemidirectElement SemidirectGroup::element_at(std::uint64_t idx) const {
    const std::uint64_t v = base_.order();
    return {base_.element_at(idx % v), static_cast<int>(idx / v)};
}

std::uint64_t SemidirectGroup::index_of(const SemidirectElement& x) const {
    return static_cast<std::uint64_t>(x.t) * base_.order() + base_.index_of(x.a);
}

DihedralHSPInstance build_hsp_from_shift(
    const AbelianGroup& base,
    std::function<std::vector<int>(const GroupElement&)> f,
    std::function<std::vector<int>(const GroupElement&)> g) {
    const std::uint64_t v = base.order();
    std::vector<std::vector<int>> fv(v), gv(v);
    std::map<std::vector<int>, std::uint64_t> seen;
    for (std::uint64_t i = 0; i < v; ++i) {
        fv[i] = f(base.element_at(i));
        gv[i] = g(base.element_at(i));
        if (!seen.emplace(fv[i], i).second)
            throw std::invalid_argument(
                "build_hsp_from_shift: f is not injective");
    }
    // The unique h with g(y) = f(y - h) for all y.
    std::optional<std::uint64_t> h_idx;
    for (std::uint64_t h = 0; h < v; ++h) {
        GroupElement hh = base.element_at(h);
        bool match = true;
        for (std::uint64_t y = 0; y < v && match; ++y) {
            std::uint64_t shifted =
                base.index_of(base.sub(base.element_at(y), hh));
            match = gv[y] == fv[shifted];
        }
        if (match) {
            h_idx = h;
            break;
        }
    }
    if (!h_idx)
        throw std::invalid_argument(
            "build_hsp_from_shift: g is not a shift of f");

    SemidirectGroup group(base);
    auto hiding = [base, fv = std::move(fv),
                   gv = std::move(gv)](const SemidirectElement& x) {
        std::uint64_t i = base.index_of(x.a);
        return x.t ? gv[i] : fv[i];
    };
    return DihedralHSPInstance{std::move(group), std::move(hiding),
                               base.element_at(*h_idx)};
}

HSPVerification verify_hsp_instance(const DihedralHSPInstance& instance,
                                    const GroupElement& h) {
    const auto& G = instance.group;
    const SemidirectElement refl{h, 1};
    // Constant on right cosets x * <(h,1)>.
    for (std::uint64_t i = 0; i < G.order(); ++i) {
        SemidirectElement x = G.element_at(i);
        if (instance.hiding(x) != instance.hiding(G.mul(x, refl)))
            return {false, x, "not constant on coset"};
    }
    // Distinct values across cosets.
    std::map<std::vector<int>, std::uint64_t> value_coset;
    for (std::uint64_t i = 0; i < G.order(); ++i) {
        SemidirectElement x = G.element_at(i);
        std::uint64_t coset =
            std::min(G.index_of(x), G.index_of(G.mul(x, refl)));
        auto [it, fresh] = value_coset.emplace(instance.hiding(x), coset);
        if (!fresh && it->second != coset)
            return {false, x, "value repeats across cosets"};
    }
    return {true, std::nullopt, ""};
}

int WhiteBoxSingerInstance::f(std::uint64_t x) const {
    return static_cast<int>(field.trace(field.pow(alpha.element, x)));
}

int WhiteBoxSingerInstance::g(std::uint64_t x) const {
    return static_cast<int>(
        field.trace(field.mul(field.pow(alpha.element, x), beta)));
}

WhiteBoxSingerInstance make_whitebox_instance(int d, std::uint64_t seed) {
    if (d < 2) throw std::invalid_argument("make_whitebox_instance: d < 2");
    FiniteField field = FiniteField::with_random_modulus(2, d + 1, /*seed=*/1);
    PrimitiveElement alpha = find_primitive(field);
    const std::uint64_t N = field.size() - 1;
    std::mt19937_64 rng(seed);
    std::uint64_t s = std::uniform_int_distribution<std::uint64_t>(0, N - 1)(rng);
    FieldElement beta = field.pow(alpha.element, s);
    return WhiteBoxSingerInstance{std::move(field), std::move(alpha), d, N,
                                  std::move(beta), s};
}

DihedralHSPInstance whitebox_to_hsp(const WhiteBoxSingerInstance& wb,
                                    std::uint64_t seed) {
    AbelianGroup base({static_cast<Coord>(wb.N)});
    const int m = required_copies(wb.N);
    auto f_base = [&wb, &base](const GroupElement& x) {
        return wb.f(base.index_of(x));
    };
    auto g_base = [&wb, &base](const GroupElement& x) {
        return wb.g(base.index_of(x));
    };
    // f and g must share V so the injectivized pair stays a shift pair.
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::uint64_t draw_seed = seed + 0x9e3779b97f4a7c15ull * attempt;
        InjectivizedFunction fV = injectivize(base, f_base, m, draw_seed);
        if (!is_injective(fV)) continue;
        InjectivizedFunction gV{base, fV.offsets, g_base};
        return build_hsp_from_shift(
            base, [fV](const GroupElement& x) { return fV.eval(x); },
            [gV](const GroupElement& x) { return gV.eval(x); });
    }
    throw std::runtime_error(
        "whitebox_to_hsp: injectivization failed 8 times");
}

DihedralSolveResult solve_dihedral_hsp(const DihedralHSPInstance& instance,
                                       std::uint64_t max_trials,
                                       std::uint64_t seed) {
    const AbelianGroup& base = instance.group.base();
    const std::uint64_t v = base.order();
    // Shift pair from the hiding function, projected to one coordinate.
    std::vector<int> f1(v), g1(v);
    for (std::uint64_t i = 0; i < v; ++i) {
        f1[i] = instance.hiding({base.element_at(i), 0})[0];
        g1[i] = instance.hiding({base.element_at(i), 1})[0];
    }
    DihedralSolveResult result;
    // The level set of the minority value of f1 is a translate of the known
    // difference set; the matching level set of g1 is its shifted oracle.
    std::map<int, std::int64_t> counts;
    for (std::uint64_t i = 0; i < v; ++i) ++counts[f1[i]];
    int marker = f1[0];
    std::int64_t best = counts[marker];
    for (auto [val, c] : counts)
        if (c < best || (c == best && val < marker)) {
            marker = val;
            best = c;
        }
    std::vector<GroupElement> support;
    for (std::uint64_t i = 0; i < v; ++i)
        if (f1[i] == marker) support.push_back(base.element_at(i));
    DifferenceSet Df(base, std::move(support));
    HiddenShiftInstance shift_instance{
        std::move(Df),
        [&base, &g1, marker](const GroupElement& x) {
            return g1[base.index_of(x)] == marker;
        },
        std::nullopt};

    SolverResult shift = recover_shift(shift_instance, max_trials, seed);
    result.trials_used = shift.trials_used;
    result.hiding_queries = shift.trials_used;  // one coherent query per trial
    if (!shift.success) return result;
    for (const GroupElement& h : {shift.shift, base.negate(shift.shift)}) {
        result.verify_queries += 2 * instance.group.order();
        if (verify_hsp_instance(instance, h).ok) {
            result.success = true;
            result.generator = h;
            return result;
        }
    }
    return result;
}

InstanceCountReport expected_instance_count(int n) {
    if (n < 2) throw std::invalid_argument("expected_instance_count: n < 2");
    InstanceCountReport rep;
    rep.base = (std::uint64_t{1} << n) - 1;
    rep.copies = required_copies(rep.base);
    rep.count_log2 = rep.copies * std::log2(static_cast<double>(rep.base));
    rep.asymptotic_exponent = n * n;
    return rep;
}

}  // namespace sds
