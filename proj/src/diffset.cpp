#include "sds/diffset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sds {

VerifyResult verify_difference_set(const AbelianGroup& group,
                                   const std::vector<GroupElement>& elements) {
    VerifyResult res;
    const std::int64_t v = static_cast<std::int64_t>(group.order());
    const std::int64_t k = static_cast<std::int64_t>(elements.size());
    if (k < 2) {
        res.rejection = VerifyRejection{{}, {}, 0, 0, "fewer than 2 elements"};
        return res;
    }
    std::vector<std::int64_t> counts(group.order(), 0);
    for (const auto& x : elements)
        for (const auto& y : elements)
            ++counts[group.index_of(group.sub(x, y))];
    if (counts[0] != k) {
        res.rejection =
            VerifyRejection{group.zero(), group.zero(), counts[0], k,
                            "duplicate elements: 0 covered " +
                                std::to_string(counts[0]) + " times, expected k"};
        return res;
    }
    const std::int64_t lambda = counts.size() > 1 ? counts[1] : 0;
    for (std::uint64_t i = 2; i < counts.size(); ++i) {
        if (counts[i] != lambda) {
            res.rejection = VerifyRejection{
                group.element_at(1), group.element_at(i), lambda, counts[i],
                "non-constant coverage"};
            return res;
        }
    }
    if (lambda < 1) {
        res.rejection = VerifyRejection{group.element_at(1), group.element_at(1),
                                        lambda, lambda, "lambda < 1"};
        return res;
    }
    // Consistency with the counting identity lambda (v-1) = k (k-1).
    if (lambda * (v - 1) != k * (k - 1)) {
        res.rejection = VerifyRejection{{}, {}, lambda, k,
                                        "parameter identity violated"};
        return res;
    }
    res.params = DiffSetParams{v, k, lambda};
    return res;
}

DifferenceSet::DifferenceSet(AbelianGroup group, std::vector<GroupElement> elements,
                             std::string family)
    : group_(std::move(group)),
      elements_(std::move(elements)),
      family_(std::move(family)) {
    std::sort(elements_.begin(), elements_.end(),
              [this](const auto& a, const auto& b) {
                  return group_.index_of(a) < group_.index_of(b);
              });
    auto res = verify_difference_set(group_, elements_);
    if (!res.ok())
        throw std::invalid_argument("not a difference set: " +
                                    res.rejection->reason);
    params_ = *res.params;
    indicator_.assign(group_.order(), 0);
    for (const auto& e : elements_) indicator_[group_.index_of(e)] = 1;
}

bool DifferenceSet::contains(const GroupElement& x) const {
    return indicator_[group_.index_of(x)] != 0;
}

bool DifferenceSet::contains_index(std::uint64_t idx) const {
    return indicator_[idx] != 0;
}

bool is_bent(const BentFunctionSpec& spec) {
    if (spec.arity < 2 || spec.arity % 2 != 0)
        throw std::invalid_argument("is_bent: arity must be even and positive");
    const std::uint64_t size = std::uint64_t{1} << spec.arity;
    if (spec.table.size() != size)
        throw std::invalid_argument("is_bent: truth table length mismatch");
    const std::int64_t flat = std::int64_t{1} << (spec.arity / 2);
    for (std::uint64_t w = 0; w < size; ++w) {
        std::int64_t walsh = 0;
        for (std::uint64_t x = 0; x < size; ++x) {
            int sign = (spec.table[x] ^ (std::popcount(w & x) & 1)) ? -1 : 1;
            walsh += sign;
        }
        if (walsh != flat && walsh != -flat) return false;
    }
    return true;
}

BentFunctionSpec inner_product_bent(int n) {
    if (n < 1) throw std::invalid_argument("inner_product_bent: n < 1");
    BentFunctionSpec spec;
    spec.arity = 2 * n;
    const std::uint64_t size = std::uint64_t{1} << spec.arity;
    spec.table.resize(size);
    for (std::uint64_t x = 0; x < size; ++x) {
        // Variable x1 is the most significant bit; pair x_{2i-1} x_{2i}.
        int val = 0;
        for (int i = 0; i < n; ++i) {
            int hi = static_cast<int>((x >> (spec.arity - 1 - 2 * i)) & 1);
            int lo = static_cast<int>((x >> (spec.arity - 2 - 2 * i)) & 1);
            val ^= hi & lo;
        }
        spec.table[x] = static_cast<std::uint8_t>(val);
    }
    return spec;
}

DifferenceSet construct_paley(const FiniteField& field) {
    const std::uint64_t q = field.size();
    if (q % 4 != 3)
        throw std::invalid_argument("construct_paley: q must be 3 mod 4");
    AbelianGroup group(std::vector<Coord>(field.n(), field.p()));
    std::vector<char> seen(q, 0);
    std::vector<GroupElement> elems;
    for (std::uint64_t i = 1; i < q; ++i) {
        FieldElement sq = field.mul(field.from_index(i), field.from_index(i));
        std::uint64_t idx = field.index_of(sq);
        if (!seen[idx]) {
            seen[idx] = 1;
            elems.push_back(GroupElement{sq.coeffs});
        }
    }
    return DifferenceSet(std::move(group), std::move(elems), "paley");
}

DifferenceSet construct_hadamard(const BentFunctionSpec& spec) {
    if (!is_bent(spec))
        throw std::invalid_argument("construct_hadamard: function is not bent");
    const std::uint64_t size = std::uint64_t{1} << spec.arity;
    std::uint64_t ones = 0;
    for (auto b : spec.table) ones += b;
    // A bent function has 2^(2n-1) -/+ 2^(n-1) ones; take the minority
    // support so |D| matches the Hadamard parameter k.
    const bool complement = ones > size / 2;
    AbelianGroup group(std::vector<Coord>(spec.arity, 2));
    std::vector<GroupElement> elems;
    for (std::uint64_t x = 0; x < size; ++x) {
        bool member = complement ? spec.table[x] == 0 : spec.table[x] != 0;
        if (member) elems.push_back(group.element_at(x));
    }
    return DifferenceSet(std::move(group), std::move(elems), "hadamard");
}

SingerData construct_singer_data(
    std::int64_t q, int d,
    const std::optional<std::vector<std::int64_t>>& modulus) {
    if (!is_prime(static_cast<std::uint64_t>(q)))
        throw std::invalid_argument("construct_singer: q must be prime");
    if (d < 1) throw std::invalid_argument("construct_singer: d must be >= 1");
    FiniteField field =
        modulus ? FiniteField(q, d + 1, *modulus)
                : FiniteField::with_random_modulus(q, d + 1, /*seed=*/1);
    PrimitiveElement alpha = find_primitive(field);
    const std::uint64_t N =
        (field.size() - 1) / static_cast<std::uint64_t>(q - 1);
    AbelianGroup group({static_cast<Coord>(N)});
    std::vector<GroupElement> elems;
    FieldElement cur = field.one();
    for (std::uint64_t i = 0; i < N; ++i) {
        if (field.trace(cur) == 0)
            elems.push_back(GroupElement{{static_cast<Coord>(i)}});
        cur = field.mul(cur, alpha.element);
    }
    DifferenceSet set(group, std::move(elems), "singer");
    return SingerData{std::move(field), std::move(alpha), N, std::move(set)};
}

DifferenceSet construct_singer(
    std::int64_t q, int d,
    const std::optional<std::vector<std::int64_t>>& modulus) {
    return construct_singer_data(q, d, modulus).set;
}

DifferenceSet shift_set(const DifferenceSet& D, const GroupElement& s) {
    std::vector<GroupElement> elems;
    elems.reserve(D.elements().size());
    for (const auto& e : D.elements()) elems.push_back(D.group().add(s, e));
    return DifferenceSet(D.group(), std::move(elems), D.family());
}

std::vector<char> shifted_indicator(const DifferenceSet& D, const GroupElement& s) {
    const auto& g = D.group();
    std::vector<char> ind(g.order(), 0);
    for (const auto& e : D.elements()) ind[g.index_of(g.add(s, e))] = 1;
    return ind;
}

Development development(const DifferenceSet& D) {
    const auto& g = D.group();
    const auto v = static_cast<Eigen::Index>(g.order());
    Development dev;
    dev.incidence = Eigen::MatrixXi::Zero(v, v);
    for (Eigen::Index b = 0; b < v; ++b) {
        GroupElement gb = g.element_at(static_cast<std::uint64_t>(b));
        for (const auto& e : D.elements()) {
            std::uint64_t a = g.index_of(g.add(gb, e));
            dev.incidence(b, static_cast<Eigen::Index>(a)) = 1;
        }
    }
    return dev;
}

}  // namespace sds
