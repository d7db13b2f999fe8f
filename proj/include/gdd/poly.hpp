#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gdd/field.hpp"

namespace gdd {

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// A polynomial ring F_{p^k}[vars] with a fixed ordered list of named
/// indeterminates. MultiPoly values are tied to one ring instance.
class PolyRing {
public:
    static PolyRingPtr make(FieldSpecPtr spec, std::vector<std::string> vars);

    const FieldSpecPtr& spec() const { return spec_; }
    const std::vector<std::string>& vars() const { return vars_; }
    size_t arity() const { return vars_.size(); }
    int var_index(const std::string& name) const; // -1 when absent

    bool same(const PolyRing& o) const;

private:
    PolyRing(FieldSpecPtr spec, std::vector<std::string> vars)
        : spec_(std::move(spec)), vars_(std::move(vars)) {}

    FieldSpecPtr spec_;
    std::vector<std::string> vars_;
};

/// Exponent vector; length always equals the ring arity.
using Mono = std::vector<uint32_t>;

/// Graded-lexicographic order: total degree first, then exponents compared
/// left to right (earlier variables weigh more).
struct GradedLexLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

/// Sparse exact multivariate polynomial over F_{p^k}.
/// Invariant: no zero coefficients are stored; equality is term-map equality.
class MultiPoly {
public:
    using TermMap = std::map<Mono, FieldElement, GradedLexLess>;

    MultiPoly() = default;
    explicit MultiPoly(PolyRingPtr ring) : ring_(std::move(ring)) {}

    static MultiPoly zero(const PolyRingPtr& ring);
    static MultiPoly constant(const PolyRingPtr& ring, const FieldElement& c);
    static MultiPoly constant(const PolyRingPtr& ring, int64_t c);
    static MultiPoly variable(const PolyRingPtr& ring, size_t var);
    static MultiPoly variable(const PolyRingPtr& ring, const std::string& name);
    static MultiPoly monomial(const PolyRingPtr& ring, Mono m, const FieldElement& c);

    const PolyRingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    FieldElement constant_value() const; // 0 for the zero polynomial

    int64_t total_degree() const; // -1 for zero
    int64_t degree_in(size_t var) const;

    /// Leading term in graded-lex order.
    std::pair<Mono, FieldElement> leading_term() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const FieldElement& c) const;
    MultiPoly pow(uint32_t e) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Full evaluation; `point` must cover every ring variable.
    FieldElement eval(const std::vector<FieldElement>& point) const;

    /// Replace one variable by a polynomial of the same ring.
    MultiPoly subst(size_t var, const MultiPoly& value) const;

    /// Coefficient of var^deg, as a polynomial with that variable removed
    /// from the exponents (still in the same ring).
    MultiPoly coefficient_in(size_t var, uint32_t deg) const;
    /// View as a univariate polynomial in `var`: coefficients by degree.
    std::vector<MultiPoly> coeffs_in(size_t var) const;
    static MultiPoly from_coeffs_in(const PolyRingPtr& ring, size_t var,
                                    const std::vector<MultiPoly>& coeffs);

    /// Exact division; nullopt when the divisor does not divide evenly.
    std::optional<MultiPoly> divided_exact_by(const MultiPoly& divisor) const;

    /// Monic under graded-lex: leading coefficient scaled to 1.
    MultiPoly normalized_lead() const;

    /// Canonical rendering: graded-lex descending, every coefficient explicit.
    std::string to_string() const;

    void add_term(const Mono& m, const FieldElement& c);

private:
    void check_same_ring(const MultiPoly& o) const;

    PolyRingPtr ring_;
    TermMap terms_;
};

/// GCD over F_{p^k}[vars] by primitive PRS recursion; result is normalized
/// (graded-lex leading coefficient 1). gcd(0, 0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Pseudo-remainder of a by b with respect to `var` (deg_var(b) >= 1).
MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, size_t var);

/// Resultant of a and b with respect to `var` (Sylvester matrix, Bareiss
/// fraction-free elimination); a polynomial in the remaining variables.
MultiPoly resultant_in(const MultiPoly& a, const MultiPoly& b, size_t var);

/// Content of a with respect to `var`: gcd of its var-coefficients.
MultiPoly content_in(const MultiPoly& a, size_t var);

} // namespace gdd
