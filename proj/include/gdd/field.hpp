#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gdd/errors.hpp"

namespace gdd {

/// Description of a finite field F_{p^k} = F_p[t]/(modulus).
///
/// The modulus is stored low degree first and is always monic of degree k.
/// Auto-generated moduli are deterministic: the lexicographically smallest
/// monic irreducible of degree k, coefficients compared low-to-high, so the
/// same (p, k) always names the same field. k = 1 uses modulus t.
class FieldSpec {
public:
    static constexpr int kMaxDegree = 12;

    /// Deterministic field with auto-selected modulus.
    static std::shared_ptr<const FieldSpec> make(int64_t p, int k);
    /// Field with an explicit monic irreducible modulus (checked).
    static std::shared_ptr<const FieldSpec> with_modulus(int64_t p, std::vector<int64_t> modulus);

    int64_t p() const { return p_; }
    int k() const { return k_; }
    /// Coefficients c_0 .. c_k, low degree first, c_k = 1.
    const std::vector<int64_t>& modulus() const { return modulus_; }
    /// p^k as a 64-bit value (k is capped so this cannot overflow).
    int64_t order() const { return order_; }

    bool same(const FieldSpec& other) const {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

    std::string to_string() const;

private:
    FieldSpec(int64_t p, int k, std::vector<int64_t> modulus);

    int64_t p_;
    int k_;
    std::vector<int64_t> modulus_;
    int64_t order_;
};

using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

bool is_prime(int64_t n);
/// Irreducibility over F_p of a monic polynomial given low-first (any degree >= 1).
bool is_irreducible_mod_p(const std::vector<int64_t>& poly, int64_t p);

/// Element of F_{p^k}: a coefficient vector of length k, entries reduced mod p.
///
/// Elements are immutable values; all arithmetic is exact. Two elements interact
/// only under the same FieldSpec (SpecMismatch otherwise). The pole/residue
/// machinery and the search engine lean on the total order `<`, which compares
/// coefficient vectors low degree first; enumeration order matches it.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldSpecPtr spec, std::vector<int64_t> coeffs);

    static FieldElement zero(const FieldSpecPtr& spec);
    static FieldElement one(const FieldSpecPtr& spec);
    /// Embeds an integer residue (reduces mod p).
    static FieldElement from_int(const FieldSpecPtr& spec, int64_t value);
    /// Element with index i in enumeration order: base-p digits of i, low first.
    static FieldElement from_index(const FieldSpecPtr& spec, int64_t index);

    const FieldSpecPtr& spec() const { return spec_; }
    const std::vector<int64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_one() const;
    /// True when the element lies in the prime subfield F_p.
    bool in_prime_field() const;
    /// Index in enumeration order (inverse of from_index).
    int64_t index() const;
    /// For prime-subfield elements, the residue 0..p-1.
    int64_t as_int() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(int64_t e) const; // e >= 0; 0^0 = 1
    FieldElement frobenius() const;    // x -> x^p

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    bool operator<(const FieldElement& o) const; // coefficient-lex, low degree first

    /// Canonical rendering "(c0, c1, ...)"; prime fields render as "c0".
    std::string to_string() const;

private:
    void check_same_spec(const FieldElement& o) const;

    FieldSpecPtr spec_;
    std::vector<int64_t> coeffs_;
};

/// All p^k elements exactly once, in coefficient-lexicographic order.
/// Deterministic across runs.
std::vector<FieldElement> enumerate_field(const FieldSpecPtr& spec);

} // namespace gdd
