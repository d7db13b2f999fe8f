#pragma once

#include "gdd/poly.hpp"

namespace gdd {

/// Reduced rational function num/den over F_{p^k}[vars].
///
/// Canonical form: gcd(num, den) is a unit and den has graded-lex leading
/// coefficient 1, so structural equality coincides with equality of values.
class RatFun {
public:
    RatFun() = default;
    /// Normalizes on construction; den must be nonzero.
    RatFun(MultiPoly num, MultiPoly den);

    static RatFun from_poly(MultiPoly p);
    static RatFun constant(const PolyRingPtr& ring, int64_t c);
    static RatFun variable(const PolyRingPtr& ring, const std::string& name);
    static RatFun zero(const PolyRingPtr& ring);
    static RatFun one(const PolyRingPtr& ring);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const PolyRingPtr& ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator-() const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun inverse() const;
    RatFun pow(uint32_t e) const;
    RatFun scaled(int64_t c) const;

    /// Equality by cross-multiplication of normalized forms.
    bool operator==(const RatFun& o) const;
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    /// Replace a variable by a rational function of the same ring.
    RatFun subst(size_t var, const RatFun& value) const;
    RatFun subst(const std::string& name, const RatFun& value) const;

    std::string to_string() const;

private:
    void normalize();

    MultiPoly num_;
    MultiPoly den_;
};

} // namespace gdd
