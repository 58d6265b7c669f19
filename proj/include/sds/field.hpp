#pragma once

#include <cstdint>
#include <vector>

namespace sds {

/// Element of GF(p^n), a length-n coefficient vector over [0,p),
/// constant term first.
struct FieldElement {
    std::vector<std::int64_t> coeffs;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

struct PrimitiveElement {
    FieldElement element;
    std::uint64_t order;  // always p^n - 1
};

/// GF(p^n) in polynomial basis modulo a monic irreducible polynomial.
class FiniteField {
public:
    static constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 20;

    /// modulus has length n+1, constant term first, leading coefficient 1.
    /// Validates primality of p and irreducibility of the modulus.
    FiniteField(std::int64_t p, int n, std::vector<std::int64_t> modulus,
                std::uint64_t cap = kDefaultCap);

    /// Prime field GF(p) with modulus x - 0... i.e. x.
    static FiniteField prime_field(std::int64_t p);

    /// Seeded random search for an irreducible monic degree-n modulus.
    static FiniteField with_random_modulus(std::int64_t p, int n,
                                           std::uint64_t seed,
                                           std::uint64_t cap = kDefaultCap);

    std::int64_t p() const { return p_; }
    int n() const { return n_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }
    std::uint64_t size() const { return size_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// Reduces an arbitrary coefficient vector (any length, any residues).
    FieldElement element(std::vector<std::int64_t> coeffs) const;
    /// The class of x, the standard generator of the polynomial basis.
    FieldElement generator_x() const;
    FieldElement from_index(std::uint64_t idx) const;  // base-p digits, constant first
    std::uint64_t index_of(const FieldElement& a) const;

    bool is_zero(const FieldElement& a) const;
    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement scalar_mul(std::int64_t c, const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, std::uint64_t e) const;
    FieldElement inv(const FieldElement& a) const;

    /// Absolute trace to the prime subfield: x + x^p + ... + x^{p^(n-1)},
    /// returned as a scalar in [0,p). Only subfield_exponent == 1 is
    /// supported.
    std::int64_t trace(const FieldElement& a, int subfield_exponent = 1) const;

    friend bool operator==(const FiniteField& a, const FiniteField& b) {
        return a.p_ == b.p_ && a.modulus_ == b.modulus_;
    }

private:
    std::int64_t p_;
    int n_;
    std::vector<std::int64_t> modulus_;
    std::uint64_t size_;
};

bool is_prime(std::uint64_t m);
std::vector<std::uint64_t> prime_factors(std::uint64_t m);

/// Irreducibility over GF(p) of a monic polynomial, via gcds with x^{p^i} - x.
bool is_irreducible(std::int64_t p, const std::vector<std::int64_t>& poly);

/// First element in enumeration order of multiplicative order p^n - 1,
/// certified by checking proper-divisor powers.
PrimitiveElement find_primitive(const FiniteField& field);

/// Smallest i >= 0 with base^i == target, by exhaustive stepping.
std::uint64_t discrete_log(const FiniteField& field, const PrimitiveElement& base,
                           const FieldElement& target);

}  // namespace sds
