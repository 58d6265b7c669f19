#include "sds/group.hpp"

#include <numbers>
#include <stdexcept>

namespace sds {

AbelianGroup::AbelianGroup(std::vector<Coord> moduli, std::uint64_t cap)
    : moduli_(std::move(moduli)), order_(1), cap_(cap) {
    if (moduli_.empty())
        throw std::invalid_argument("AbelianGroup: empty factor list");
    for (Coord n : moduli_) {
        if (n < 2) throw std::invalid_argument("AbelianGroup: modulus < 2");
        order_ *= static_cast<std::uint64_t>(n);
    }
}

void AbelianGroup::check_shape(const std::vector<Coord>& coords) const {
    if (coords.size() != moduli_.size())
        throw std::invalid_argument("group element: coordinate count mismatch");
}

void AbelianGroup::check_cap() const {
    if (order_ > cap_)
        throw std::length_error("group order exceeds enumeration cap");
}

GroupElement AbelianGroup::zero() const {
    return GroupElement{std::vector<Coord>(moduli_.size(), 0)};
}

GroupElement AbelianGroup::reduce(std::vector<Coord> coords) const {
    check_shape(coords);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        coords[i] %= moduli_[i];
        if (coords[i] < 0) coords[i] += moduli_[i];
    }
    return GroupElement{std::move(coords)};
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    check_shape(a.coords);
    check_shape(b.coords);
    std::vector<Coord> out(moduli_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (a.coords[i] + b.coords[i]) % moduli_[i];
    return GroupElement{std::move(out)};
}

GroupElement AbelianGroup::negate(const GroupElement& a) const {
    check_shape(a.coords);
    std::vector<Coord> out(moduli_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.coords[i] == 0 ? 0 : moduli_[i] - a.coords[i];
    return GroupElement{std::move(out)};
}

GroupElement AbelianGroup::sub(const GroupElement& a, const GroupElement& b) const {
    return add(a, negate(b));
}

std::complex<double> AbelianGroup::eval(const Character& chi,
                                        const GroupElement& a) const {
    check_shape(chi.index);
    check_shape(a.coords);
    double phase = 0.0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        Coord t = (chi.index[i] * a.coords[i]) % moduli_[i];
        phase += static_cast<double>(t) / static_cast<double>(moduli_[i]);
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * phase);
}

std::uint64_t AbelianGroup::index_of(const GroupElement& a) const {
    check_shape(a.coords);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i)
        idx = idx * static_cast<std::uint64_t>(moduli_[i]) +
              static_cast<std::uint64_t>(a.coords[i]);
    return idx;
}

GroupElement AbelianGroup::element_at(std::uint64_t idx) const {
    std::vector<Coord> coords(moduli_.size());
    for (std::size_t i = moduli_.size(); i-- > 0;) {
        coords[i] = static_cast<Coord>(idx % static_cast<std::uint64_t>(moduli_[i]));
        idx /= static_cast<std::uint64_t>(moduli_[i]);
    }
    return GroupElement{std::move(coords)};
}

Character AbelianGroup::character_at(std::uint64_t idx) const {
    return Character{element_at(idx).coords};
}

std::uint64_t AbelianGroup::index_of(const Character& chi) const {
    return index_of(GroupElement{chi.index});
}

std::vector<GroupElement> AbelianGroup::elements() const {
    check_cap();
    std::vector<GroupElement> out;
    out.reserve(order_);
    for (std::uint64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
    return out;
}

std::vector<Character> AbelianGroup::characters() const {
    check_cap();
    std::vector<Character> out;
    out.reserve(order_);
    for (std::uint64_t i = 0; i < order_; ++i) out.push_back(character_at(i));
    return out;
}

}  // namespace sds
