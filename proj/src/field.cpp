#include "sds/field.hpp"

#include <random>
#include <stdexcept>

namespace sds {
namespace {

using Poly = std::vector<std::int64_t>;  // constant term first

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b %= m;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
    }
    return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    return mod_pow((a % p + p) % p, p - 2, p);
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    trim(out);
    return out;
}

Poly poly_mod(Poly a, const Poly& f, std::int64_t p) {
    trim(a);
    const int df = degree(f);
    const std::int64_t lead_inv = mod_inv(f.back(), p);
    while (degree(a) >= df) {
        std::int64_t c = a.back() * lead_inv % p;
        int shift = degree(a) - df;
        for (int i = 0; i <= df; ++i)
            a[i + shift] = ((a[i + shift] - c * f[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^i) mod f for i = 0..n via iterated p-th powers.
Poly poly_pow_p(const Poly& base, std::int64_t p, const Poly& f) {
    Poly r{1};
    Poly b = base;
    for (std::int64_t e = p; e > 0; e >>= 1) {
        if (e & 1) r = poly_mod(poly_mul(r, b, p), f, p);
        b = poly_mod(poly_mul(b, b, p), f, p);
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

bool is_irreducible(std::int64_t p, const std::vector<std::int64_t>& poly) {
    Poly f = poly;
    trim(f);
    const int n = degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    const Poly x{0, 1};
    // x^(p^n) == x mod f, and gcd(x^(p^(n/r)) - x, f) = 1 for prime r | n.
    Poly t = x;
    std::vector<Poly> frob(n + 1);
    frob[0] = x;
    for (int i = 1; i <= n; ++i) {
        t = poly_pow_p(t, p, f);
        frob[i] = t;
    }
    Poly diff = frob[n];
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(n))) {
        Poly d = frob[n / static_cast<int>(r)];
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = ((d[1] - 1) % p + p) % p;
        trim(d);
        Poly g = poly_gcd(f, d, p);
        if (degree(g) != 0) return false;
    }
    return true;
}

FiniteField::FiniteField(std::int64_t p, int n, std::vector<std::int64_t> modulus,
                         std::uint64_t cap)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("FiniteField: p is not prime");
    if (n < 1) throw std::invalid_argument("FiniteField: degree < 1");
    if (modulus_.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("FiniteField: modulus degree mismatch");
    for (auto& c : modulus_) c = ((c % p) + p) % p;
    if (modulus_.back() != 1)
        throw std::invalid_argument("FiniteField: modulus not monic");
    size_ = 1;
    for (int i = 0; i < n; ++i) {
        size_ *= static_cast<std::uint64_t>(p);
        if (size_ > cap) throw std::length_error("FiniteField: size exceeds cap");
    }
    if (!is_irreducible(p, modulus_))
        throw std::invalid_argument("FiniteField: modulus not irreducible");
}

FiniteField FiniteField::prime_field(std::int64_t p) {
    return FiniteField(p, 1, {0, 1});
}

FiniteField FiniteField::with_random_modulus(std::int64_t p, int n,
                                             std::uint64_t seed,
                                             std::uint64_t cap) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
    for (;;) {
        std::vector<std::int64_t> f(n + 1, 0);
        for (int i = 0; i < n; ++i) f[i] = coeff(rng);
        if (f[0] == 0) f[0] = 1;  // zero root would make it reducible
        f[n] = 1;
        if (is_irreducible(p, f)) return FiniteField(p, n, std::move(f), cap);
    }
}

FieldElement FiniteField::zero() const {
    return FieldElement{std::vector<std::int64_t>(n_, 0)};
}

FieldElement FiniteField::one() const {
    auto e = zero();
    e.coeffs[0] = 1;
    return e;
}

FieldElement FiniteField::element(std::vector<std::int64_t> coeffs) const {
    for (auto& c : coeffs) c = ((c % p_) + p_) % p_;
    Poly r = poly_mod(std::move(coeffs), modulus_, p_);
    r.resize(n_, 0);
    return FieldElement{std::move(r)};
}

FieldElement FiniteField::generator_x() const {
    if (n_ == 1) return element({-modulus_[0]});  // x == -c0 mod (x + c0)
    auto e = zero();
    e.coeffs[1] = 1;
    return e;
}

FieldElement FiniteField::from_index(std::uint64_t idx) const {
    std::vector<std::int64_t> c(n_);
    for (int i = 0; i < n_; ++i) {
        c[i] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(p_));
        idx /= static_cast<std::uint64_t>(p_);
    }
    return FieldElement{std::move(c)};
}

std::uint64_t FiniteField::index_of(const FieldElement& a) const {
    std::uint64_t idx = 0;
    for (int i = n_; i-- > 0;)
        idx = idx * static_cast<std::uint64_t>(p_) +
              static_cast<std::uint64_t>(a.coeffs[i]);
    return idx;
}

bool FiniteField::is_zero(const FieldElement& a) const {
    for (auto c : a.coeffs)
        if (c != 0) return false;
    return true;
}

FieldElement FiniteField::add(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = a;
    for (int i = 0; i < n_; ++i) out.coeffs[i] = (out.coeffs[i] + b.coeffs[i]) % p_;
    return out;
}

FieldElement FiniteField::sub(const FieldElement& a, const FieldElement& b) const {
    FieldElement out = a;
    for (int i = 0; i < n_; ++i)
        out.coeffs[i] = ((out.coeffs[i] - b.coeffs[i]) % p_ + p_) % p_;
    return out;
}

FieldElement FiniteField::neg(const FieldElement& a) const {
    return sub(zero(), a);
}

FieldElement FiniteField::mul(const FieldElement& a, const FieldElement& b) const {
    if (a.coeffs.size() != static_cast<std::size_t>(n_) ||
        b.coeffs.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("field mul: element shape mismatch");
    Poly r = poly_mod(poly_mul(a.coeffs, b.coeffs, p_), modulus_, p_);
    r.resize(n_, 0);
    return FieldElement{std::move(r)};
}

FieldElement FiniteField::scalar_mul(std::int64_t c, const FieldElement& a) const {
    c = ((c % p_) + p_) % p_;
    FieldElement out = a;
    for (auto& x : out.coeffs) x = x * c % p_;
    return out;
}

FieldElement FiniteField::pow(const FieldElement& a, std::uint64_t e) const {
    FieldElement r = one();
    FieldElement b = a;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
    }
    return r;
}

FieldElement FiniteField::inv(const FieldElement& a) const {
    if (is_zero(a)) throw std::domain_error("field inv: zero has no inverse");
    return pow(a, size_ - 2);
}

std::int64_t FiniteField::trace(const FieldElement& a, int subfield_exponent) const {
    if (subfield_exponent != 1)
        throw std::invalid_argument("trace: only the prime subfield is supported");
    FieldElement acc = a;
    FieldElement t = a;
    for (int i = 1; i < n_; ++i) {
        t = pow(t, static_cast<std::uint64_t>(p_));
        acc = add(acc, t);
    }
    for (int i = 1; i < n_; ++i)
        if (acc.coeffs[i] != 0)
            throw std::logic_error("trace: result escaped the prime subfield");
    return acc.coeffs[0];
}

PrimitiveElement find_primitive(const FiniteField& field) {
    const std::uint64_t order = field.size() - 1;
    const auto factors = prime_factors(order);
    for (std::uint64_t idx = 1; idx < field.size(); ++idx) {
        FieldElement a = field.from_index(idx);
        bool primitive = true;
        for (std::uint64_t r : factors) {
            if (field.pow(a, order / r) == field.one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) return PrimitiveElement{a, order};
    }
    throw std::logic_error("find_primitive: no generator found");  // unreachable
}

std::uint64_t discrete_log(const FiniteField& field, const PrimitiveElement& base,
                           const FieldElement& target) {
    if (field.is_zero(target))
        throw std::domain_error("discrete_log: zero is not in the image");
    FieldElement cur = field.one();
    for (std::uint64_t i = 0; i < base.order; ++i) {
        if (cur == target) return i;
        cur = field.mul(cur, base.element);
    }
    throw std::logic_error("discrete_log: target not generated by base");
}

}  // namespace sds
