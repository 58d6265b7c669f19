#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace sds {

using Coord = std::int64_t;

/// Element of a finite abelian group, one coordinate per cyclic factor.
struct GroupElement {
    std::vector<Coord> coords;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Irreducible character, indexed by the same coordinate scheme as elements
/// (the self-duality of finite abelian groups). The all-zero index is the
/// trivial character.
struct Character {
    std::vector<Coord> index;

    friend bool operator==(const Character&, const Character&) = default;
};

/// Finite abelian group presented as Z_{n_1} x ... x Z_{n_r}.
///
/// Enumeration order is mixed-radix with the last coordinate fastest;
/// index 0 is the identity (and the trivial character).
class AbelianGroup {
public:
    static constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

    explicit AbelianGroup(std::vector<Coord> moduli,
                          std::uint64_t cap = kDefaultCap);

    const std::vector<Coord>& moduli() const { return moduli_; }
    std::size_t rank() const { return moduli_.size(); }
    std::uint64_t order() const { return order_; }
    std::uint64_t cap() const { return cap_; }

    GroupElement zero() const;
    GroupElement reduce(std::vector<Coord> coords) const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;

    /// chi(a) = prod_i exp(2*pi*i * index[i] * a_i / n_i), unit modulus.
    std::complex<double> eval(const Character& chi, const GroupElement& a) const;

    std::uint64_t index_of(const GroupElement& a) const;
    GroupElement element_at(std::uint64_t idx) const;
    Character character_at(std::uint64_t idx) const;
    std::uint64_t index_of(const Character& chi) const;

    std::vector<GroupElement> elements() const;
    std::vector<Character> characters() const;

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.moduli_ == b.moduli_;
    }

private:
    void check_shape(const std::vector<Coord>& coords) const;
    void check_cap() const;

    std::vector<Coord> moduli_;
    std::uint64_t order_;
    std::uint64_t cap_;
};

}  // namespace sds
