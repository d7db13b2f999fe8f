#include "gdd/ratfun.hpp"

namespace gdd {

RatFun::RatFun(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.ring(), 1);
        return;
    }
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = *num_.divided_exact_by(g);
        den_ = *den_.divided_exact_by(g);
    }
    FieldElement lc = den_.leading_term().second;
    if (!lc.is_one()) {
        FieldElement inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFun RatFun::from_poly(MultiPoly p) {
    PolyRingPtr ring = p.ring();
    return RatFun(std::move(p), MultiPoly::constant(ring, 1));
}

RatFun RatFun::constant(const PolyRingPtr& ring, int64_t c) {
    return from_poly(MultiPoly::constant(ring, c));
}

RatFun RatFun::variable(const PolyRingPtr& ring, const std::string& name) {
    return from_poly(MultiPoly::variable(ring, name));
}

RatFun RatFun::zero(const PolyRingPtr& ring) { return from_poly(MultiPoly::zero(ring)); }
RatFun RatFun::one(const PolyRingPtr& ring) { return constant(ring, 1); }

RatFun RatFun::operator+(const RatFun& o) const {
    // reduce through the denominator gcd to keep the products small
    MultiPoly g = poly_gcd(den_, o.den_);
    if (g.is_constant()) return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    MultiPoly d1 = *den_.divided_exact_by(g);
    MultiPoly d2 = *o.den_.divided_exact_by(g);
    return RatFun(num_ * d2 + o.num_ * d1, den_ * d2);
}

RatFun RatFun::operator-(const RatFun& o) const {
    MultiPoly g = poly_gcd(den_, o.den_);
    if (g.is_constant()) return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    MultiPoly d1 = *den_.divided_exact_by(g);
    MultiPoly d2 = *o.den_.divided_exact_by(g);
    return RatFun(num_ * d2 - o.num_ * d1, den_ * d2);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

RatFun RatFun::operator*(const RatFun& o) const {
    // cross-reduce before multiplying
    MultiPoly g1 = poly_gcd(num_, o.den_);
    MultiPoly g2 = poly_gcd(o.num_, den_);
    MultiPoly n1 = g1.is_constant() ? num_ : *num_.divided_exact_by(g1);
    MultiPoly d2 = g1.is_constant() ? o.den_ : *o.den_.divided_exact_by(g1);
    MultiPoly n2 = g2.is_constant() ? o.num_ : *o.num_.divided_exact_by(g2);
    MultiPoly d1 = g2.is_constant() ? den_ : *den_.divided_exact_by(g2);
    return RatFun(n1 * n2, d1 * d2);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero rational function");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(uint32_t e) const {
    RatFun r = one(ring());
    RatFun b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

RatFun RatFun::scaled(int64_t c) const {
    return RatFun(num_.scaled(FieldElement::from_int(ring()->spec(), c)), den_);
}

bool RatFun::operator==(const RatFun& o) const { return num_ * o.den_ == o.num_ * den_; }

RatFun RatFun::subst(size_t var, const RatFun& value) const {
    // substitute into num and den separately via Horner over var-degree
    auto subst_poly = [&](const MultiPoly& p) {
        std::vector<MultiPoly> by_deg = p.coeffs_in(var);
        RatFun acc = zero(ring());
        for (size_t d = by_deg.size(); d-- > 0;) acc = acc * value + from_poly(by_deg[d]);
        return acc;
    };
    RatFun n = subst_poly(num_);
    RatFun d = subst_poly(den_);
    if (d.is_zero()) fail(ErrorCode::DivisionByZero, "substitution lands on a pole of the denominator");
    return n / d;
}

RatFun RatFun::subst(const std::string& name, const RatFun& value) const {
    int idx = ring()->var_index(name);
    if (idx < 0) fail(ErrorCode::InvalidArgument, "unknown variable " + name);
    return subst(static_cast<size_t>(idx), value);
}

std::string RatFun::to_string() const {
    if (is_polynomial() && den_.constant_value().is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

} // namespace gdd
