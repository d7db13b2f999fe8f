#include "gdd/certify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "gdd/symfun.hpp"

// The certificate re-derives, as exact algebra over F_3, the full chain that
// rules out a two-dimensional space of logarithmic forms with 15 poles per
// member at p = 3. Every derived formula is also diffed against the published
// reference form it is expected to match; mismatches are recorded with the
// expanded difference as witness and the chain continues with the re-derived
// value, never with a transcribed one.

namespace gdd {

namespace {

// ---------------------------------------------------------------------------
// gcd-free fraction layer for identity verification
// ---------------------------------------------------------------------------

struct Frac {
    MultiPoly num, den;
    Frac operator+(const Frac& o) const { return {num * o.den + o.num * den, den * o.den}; }
    Frac operator-(const Frac& o) const { return {num * o.den - o.num * den, den * o.den}; }
    Frac operator*(const Frac& o) const { return {num * o.num, den * o.den}; }
    Frac operator/(const Frac& o) const { return {num * o.den, den * o.num}; }
    Frac operator-() const { return {-num, den}; }
    bool equals(const Frac& o) const { return num * o.den == o.num * den; }
    bool is_zero() const { return num.is_zero(); }
};

Frac frac_const(const PolyRingPtr& ring, int64_t c) {
    return {MultiPoly::constant(ring, c), MultiPoly::constant(ring, 1)};
}

Frac frac_var(const PolyRingPtr& ring, const std::string& name) {
    return {MultiPoly::variable(ring, name), MultiPoly::constant(ring, 1)};
}

Frac frac_of(const RatFun& r) { return {r.num(), r.den()}; }

// Divide num and den by every factor of `base` they share; keeps the gcd-free
// chain from blowing up along the Newton recurrences.
Frac reduce_known(Frac f, const std::vector<MultiPoly>& base) {
    for (const MultiPoly& b : base) {
        for (;;) {
            auto dn = f.den.divided_exact_by(b);
            if (!dn) break;
            auto nn = f.num.divided_exact_by(b);
            if (!nn) break;
            f.den = std::move(*dn);
            f.num = std::move(*nn);
        }
    }
    return f;
}

// Power sums p_1..p_K from S_1..S_5 by the division-free Newton recurrence.
std::vector<Frac> newton_frac(const std::vector<Frac>& e, int K, const PolyRingPtr& ring,
                              const std::vector<MultiPoly>* base = nullptr) {
    std::vector<Frac> p;
    const int n = static_cast<int>(e.size());
    for (int k = 1; k <= K; ++k) {
        Frac acc = frac_const(ring, 0);
        for (int i = 1; i < k && i <= n; ++i) {
            Frac t = e[static_cast<size_t>(i - 1)] * p[static_cast<size_t>(k - i - 1)];
            acc = (i % 2 == 1) ? acc + t : acc - t;
        }
        if (k <= n) {
            Frac t = frac_const(ring, k) * e[static_cast<size_t>(k - 1)];
            acc = (k % 2 == 1) ? acc + t : acc - t;
        }
        if (base) acc = reduce_known(acc, *base);
        p.push_back(std::move(acc));
    }
    return p;
}

// Partially evaluate a prime-field polynomial: variables with an assigned
// value are substituted (into the target spec), the rest become the variables
// of the target ring, matched by name.
MultiPoly partial_eval(const MultiPoly& p, const PolyRingPtr& target,
                       const std::vector<std::optional<FieldElement>>& assign) {
    const auto& src = p.ring();
    MultiPoly out = MultiPoly::zero(target);
    for (const auto& [m, c] : p.terms()) {
        FieldElement scalar = FieldElement::from_int(target->spec(), c.coeffs()[0]);
        Mono mm(target->arity(), 0);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (assign[i].has_value()) {
                scalar = scalar * assign[i]->pow(m[i]);
            } else {
                int t = target->var_index(src->vars()[i]);
                if (t < 0) fail(ErrorCode::InvalidArgument, "unmapped variable in partial_eval");
                mm[static_cast<size_t>(t)] = m[i];
            }
        }
        out.add_term(mm, scalar);
    }
    return out;
}

// elementary symmetric polynomials of MultiPoly values (S_0..S_n)
std::vector<MultiPoly> elementary_poly(const PolyRingPtr& ring, const std::vector<MultiPoly>& xs) {
    std::vector<MultiPoly> e(xs.size() + 1, MultiPoly::zero(ring));
    e[0] = MultiPoly::constant(ring, 1);
    size_t used = 0;
    for (const MultiPoly& x : xs) {
        ++used;
        for (size_t j = used; j >= 1; --j) e[j] = e[j] + x * e[j - 1];
    }
    return e;
}

// ---------------------------------------------------------------------------
// step bookkeeping
// ---------------------------------------------------------------------------

std::string clip(std::string s) {
    constexpr size_t kMax = 400;
    if (s.size() <= kMax) return s;
    size_t terms = 1 + static_cast<size_t>(std::count(s.begin(), s.end(), '+'));
    return s.substr(0, kMax) + " ... (" + std::to_string(terms) + " terms)";
}

struct StepBuilder {
    CertStep step;
    explicit StepBuilder(std::string name, std::string claim) {
        step.name = std::move(name);
        step.claim = std::move(claim);
        step.status = StepStatus::Verified;
    }
    void require(bool ok, const std::string& what, const std::string& witness = "") {
        if (!ok) {
            step.status = StepStatus::Failed;
            if (step.witness.empty())
                step.witness = what + (witness.empty() ? "" : ": " + clip(witness));
        }
    }
    void require_eq(const Frac& lhs, const Frac& rhs, const std::string& what) {
        MultiPoly d = lhs.num * rhs.den - rhs.num * lhs.den;
        require(d.is_zero(), what, d.to_string());
    }
    void require_eq(const RatFun& lhs, const RatFun& rhs, const std::string& what) {
        if (lhs == rhs) return;
        require(false, what, (lhs - rhs).to_string());
    }
    void note(const std::string& n) { step.notes.push_back(n); }
    void compare(const std::string& display, const RatFun& derived, const RatFun& expected) {
        ReferenceComparison c;
        c.display = display;
        c.matches = derived == expected;
        if (!c.matches) c.difference = clip((derived - expected).to_string());
        step.reference.push_back(std::move(c));
    }
    void compare_poly(const std::string& display, const MultiPoly& derived,
                      const MultiPoly& expected) {
        ReferenceComparison c;
        c.display = display;
        c.matches = derived == expected;
        if (!c.matches) c.difference = clip((derived - expected).to_string());
        step.reference.push_back(std::move(c));
    }
};

// ---------------------------------------------------------------------------
// pipeline state shared between steps
// ---------------------------------------------------------------------------

struct Pipeline {
    FieldSpecPtr f3;

    // closed-form ring F_3[a, x, g3]; g3 is the one symmetric-function
    // difference left symbolic until the linear system resolves it
    PolyRingPtr RP;
    RatFun A, X, G3, one;
    RatFun AM; // a^2 - 1
    std::vector<MultiPoly> base; // known nonvanishing factors for reduction

    RatFun x11, x12; // distinguished poles x - 1 and x + 1
    RatFun alpha2, beta2, alpha4, beta4, alpha5, beta5; // alpha5/beta5 carry g3
    RatFun gamma2, delta2, gamma4, delta4;
    RatFun delta3, delta5;   // carry g3
    RatFun g3s, g5s;         // solved values
    RatFun c_lin, c_cst;     // the linear-system pivot and constant
    RatFun d3f, d5f, a5f, b5f;

    // surviving higher-moment constraints, over F_3[a, x]
    PolyRingPtr RAX;
    std::vector<MultiPoly> constraints;
    std::vector<std::string> constraint_origin;

    RatFun Al(int l) const { return x11.pow(l) + x12.pow(l) + X.pow(l); }
    RatFun Bl(int l) const { return x11.pow(l) - x12.pow(l) - one; }
};

MultiPoly to_ax(const Pipeline& P, const MultiPoly& p) {
    MultiPoly out = MultiPoly::zero(P.RAX);
    for (const auto& [m, c] : p.terms()) {
        if (m[2] != 0) fail(ErrorCode::InvalidArgument, "unresolved symbol in constraint");
        Mono mm(2, 0);
        mm[0] = m[0];
        mm[1] = m[1];
        out.add_term(mm, c);
    }
    return out;
}

// Nonvanishing for a outside F_3: strips a, a-1, a+1 and checks a nonzero
// constant remains, so the polynomial has no root outside the prime field.
bool vanishes_only_on_prime_field(const MultiPoly& q, const PolyRingPtr& ring) {
    if (q.is_zero()) return false;
    RatFun Aa = RatFun::variable(ring, "a");
    RatFun one = RatFun::constant(ring, 1);
    MultiPoly rem = q;
    for (const MultiPoly& f : {MultiPoly::variable(ring, std::string("a")), (Aa - one).num(),
                               (Aa + one).num()}) {
        for (;;) {
            auto d = rem.divided_exact_by(f);
            if (!d) break;
            rem = *d;
        }
    }
    return rem.is_constant() && !rem.is_zero();
}

// ---------------------------------------------------------------------------
// steps
// ---------------------------------------------------------------------------

// Partial-fraction numerator: sum h_i prod_{j != i}(X - x_j) expands through
// the deleted elementary symmetric functions; for l = 5 poles the numerator
// collapses to sum_i q_i * Ptrunc_{4-i} with the signed truncations of the
// vanishing polynomial.
CertStep step_numerator_expansion(const FieldSpecPtr& f3, int l) {
    StepBuilder b("numerator_expansion_l" + std::to_string(l),
                  "numerator of the " + std::to_string(l) +
                      "-pole partial fraction sum expands through deleted "
                      "elementary symmetric functions");
    std::vector<std::string> vars;
    for (int i = 1; i <= l; ++i) vars.push_back("h" + std::to_string(i));
    for (int i = 1; i <= l; ++i) vars.push_back("x" + std::to_string(i));
    vars.push_back("X");
    auto r = PolyRing::make(f3, vars);
    auto V = [&](const std::string& n) { return MultiPoly::variable(r, n); };
    MultiPoly X = V("X");

    std::vector<MultiPoly> xs, hs;
    for (int i = 1; i <= l; ++i) {
        hs.push_back(V("h" + std::to_string(i)));
        xs.push_back(V("x" + std::to_string(i)));
    }
    MultiPoly numerator = MultiPoly::zero(r);
    for (int i = 0; i < l; ++i) {
        MultiPoly prod = hs[static_cast<size_t>(i)];
        for (int j = 0; j < l; ++j)
            if (j != i) prod = prod * (X - xs[static_cast<size_t>(j)]);
        numerator = numerator + prod;
    }

    // expansion via deleted elementary symmetric functions
    MultiPoly expansion = MultiPoly::zero(r);
    for (int j = 0; j < l; ++j) {
        MultiPoly coef = MultiPoly::zero(r);
        for (int i = 0; i < l; ++i) {
            std::vector<MultiPoly> deleted;
            for (int k = 0; k < l; ++k)
                if (k != i) deleted.push_back(xs[static_cast<size_t>(k)]);
            auto e = elementary_poly(r, deleted);
            if (static_cast<size_t>(j) < e.size())
                coef = coef + hs[static_cast<size_t>(i)] * e[static_cast<size_t>(j)];
        }
        if (j % 2 == 1) coef = -coef;
        expansion = expansion + coef * X.pow(static_cast<uint32_t>(l - 1 - j));
    }
    b.require(numerator == expansion, "numerator expansion identity",
              (numerator - expansion).to_string());

    if (l == 5) {
        // deleted-S recursion: S_n with x_i removed = sum (-1)^k x_i^k S_{n-k}(all)
        auto e_all = elementary_poly(r, xs);
        for (int i = 0; i < l && b.step.status == StepStatus::Verified; ++i) {
            std::vector<MultiPoly> deleted;
            for (int k = 0; k < l; ++k)
                if (k != i) deleted.push_back(xs[static_cast<size_t>(k)]);
            auto e_del = elementary_poly(r, deleted);
            for (int n = 0; n <= 4; ++n) {
                MultiPoly rhs = MultiPoly::zero(r);
                for (int k = 0; k <= n; ++k) {
                    MultiPoly t = xs[static_cast<size_t>(i)].pow(static_cast<uint32_t>(k)) *
                                  e_all[static_cast<size_t>(n - k)];
                    rhs = (k % 2 == 0) ? rhs + t : rhs - t;
                }
                b.require(e_del[static_cast<size_t>(n)] == rhs, "deleted-S recursion");
            }
        }
        b.note("the reference display carries the deleted variable on both sides; the recursion "
               "holds with full elementary symmetric functions on the right");

        // numerator = sum_i q_i * signed truncation of the vanishing polynomial
        auto q = [&](int i) {
            MultiPoly acc = MultiPoly::zero(r);
            for (int k = 0; k < l; ++k)
                acc = acc + hs[static_cast<size_t>(k)] *
                                xs[static_cast<size_t>(k)].pow(static_cast<uint32_t>(i));
            return acc;
        };
        auto ptrunc = [&](int n, int sign) { // sum_{i<=n} (sign)^i S_i X^{n-i}
            MultiPoly acc = MultiPoly::zero(r);
            for (int i = 0; i <= n; ++i) {
                MultiPoly t = e_all[static_cast<size_t>(i)] * X.pow(static_cast<uint32_t>(n - i));
                acc = (sign > 0 || i % 2 == 0) ? acc + t : acc - t;
            }
            return acc;
        };
        MultiPoly signed_sum = MultiPoly::zero(r);
        MultiPoly unsigned_sum = MultiPoly::zero(r);
        for (int i = 0; i <= 4; ++i) {
            signed_sum = signed_sum + q(i) * ptrunc(4 - i, -1);
            unsigned_sum = unsigned_sum + q(i) * ptrunc(4 - i, +1);
        }
        b.require(numerator == signed_sum, "hatted expansion with signed truncations",
                  (numerator - signed_sum).to_string());
        b.compare_poly("hatted expansion with the unsigned coefficients of the reference display",
                       numerator, unsigned_sum);
        b.note("the hatted polynomials must carry the alternating signs of the vanishing "
               "polynomial's coefficients; the unsigned reading fails");
    }
    return b.step;
}

// Closed Newton shapes for five values with vanishing first symmetric function.
CertStep step_newton_shapes(const FieldSpecPtr& f3) {
    StepBuilder b("newton_shapes",
                  "power sums of five values with S_1 = 0 in characteristic 3: p_2 = S_2, "
                  "p_3 = 0, p_4 = -S_2 p_2 - S_4, p_5 = S_3 p_2 - S_5, "
                  "p_7 = -S_2 p_5 + S_3 p_4 + S_5 p_2");
    auto r = PolyRing::make(f3, {"s2", "s3", "s4", "s5"});
    auto S = [&](int i) { return frac_var(r, "s" + std::to_string(i)); };
    std::vector<Frac> e{frac_const(r, 0), S(2), S(3), S(4), S(5)};
    auto p = newton_frac(e, 7, r);
    auto P = [&](int k) { return p[static_cast<size_t>(k - 1)]; };
    b.require_eq(P(2), S(2), "p_2 = S_2");
    b.require_eq(P(3), frac_const(r, 0), "p_3 = 0");
    b.require_eq(P(4), -S(2) * P(2) - S(4), "p_4 = -S_2 p_2 - S_4");
    b.require_eq(P(5), S(3) * P(2) - S(5), "p_5 = S_3 p_2 - S_5");
    bool minus_reading = P(5).equals(-S(3) * P(2) - S(5));
    b.note(std::string("degree-5 reading: p_5 = +S_3 p_2 - S_5 holds; the -S_3 p_2 variant ") +
           (minus_reading ? "also holds" : "does not"));
    b.require_eq(P(7), -S(2) * P(5) + S(3) * P(4) + S(5) * P(2),
                 "p_7 = -S_2 p_5 + S_3 p_4 + S_5 p_2");
    return b.step;
}

// Transfer of power sums to the derived pole sets through a = u/v.
CertStep step_power_sum_transfer(const FieldSpecPtr& f3) {
    StepBuilder b("power_sum_transfer",
                  "for the derived sets, (a+j) p_2^(j) = a p_2^(0) + j p_2^(3); "
                  "(a+j)^2 p_4^(j) = (a+j)(a p_4^(0) + j p_4^(3)) + a j beta_2^2; "
                  "(a+j)^2 p_5^(j) = (a+j)(a p_5^(0) + j p_5^(3)) - a j beta_2 gamma_3");
    std::vector<std::string> vars{"s2_0", "s3_0", "s4_0", "s5_0", "s2_3", "s3_3", "s4_3", "s5_3", "a"};
    auto r = PolyRing::make(f3, vars);
    Frac a = frac_var(r, "a");
    auto S0 = std::vector<Frac>{frac_const(r, 0), frac_var(r, "s2_0"), frac_var(r, "s3_0"),
                                frac_var(r, "s4_0"), frac_var(r, "s5_0")};
    auto S3 = std::vector<Frac>{frac_const(r, 0), frac_var(r, "s2_3"), frac_var(r, "s3_3"),
                                frac_var(r, "s4_3"), frac_var(r, "s5_3")};
    auto Sj = [&](int j) {
        std::vector<Frac> out;
        for (size_t i = 0; i < 5; ++i)
            out.push_back((a * S0[i] + frac_const(r, j) * S3[i]) / (a + frac_const(r, j)));
        return out;
    };
    auto p0 = newton_frac(S0, 5, r);
    auto p3 = newton_frac(S3, 5, r);
    Frac beta2 = p0[1] - p3[1];
    Frac gamma3 = S0[2] - S3[2];
    for (int j = 1; j <= 2; ++j) {
        auto pj = newton_frac(Sj(j), 5, r);
        Frac aj = a + frac_const(r, j);
        Frac jj = frac_const(r, j);
        b.require_eq(aj * pj[1], a * p0[1] + jj * p3[1], "degree-2 transfer, j=" + std::to_string(j));
        b.require_eq(aj * aj * pj[3], aj * (a * p0[3] + jj * p3[3]) + a * jj * beta2 * beta2,
                     "degree-4 transfer, j=" + std::to_string(j));
        b.require_eq(aj * aj * pj[4], aj * (a * p0[4] + jj * p3[4]) - a * jj * beta2 * gamma3,
                     "degree-5 transfer, j=" + std::to_string(j));
    }
    b.note("side condition: divisions by a+1 and a+2 are licensed by a outside F_3");
    return b.step;
}

// The bilinear product rearrangement used to push Newton identities through
// the set transfer.
CertStep step_bilinear_transfer(const FieldSpecPtr& f3) {
    StepBuilder b("bilinear_transfer",
                  "(a S_i^(0) + j S_i^(3))(a p_k^(0) + j p_k^(3)) - "
                  "(a+j)[a S_i^(0) p_k^(0) + j S_i^(3) p_k^(3)] = -a j gamma_i beta_k");
    auto r = PolyRing::make(f3, {"si0", "si3", "pk0", "pk3", "a"});
    Frac si0 = frac_var(r, "si0"), si3 = frac_var(r, "si3"), pk0 = frac_var(r, "pk0"),
         pk3 = frac_var(r, "pk3"), a = frac_var(r, "a");
    for (int j = 1; j <= 2; ++j) {
        Frac jj = frac_const(r, j);
        Frac lhs = (a * si0 + jj * si3) * (a * pk0 + jj * pk3) -
                   (a + jj) * (a * si0 * pk0 + jj * si3 * pk3);
        Frac rhs = -a * jj * (si0 - si3) * (pk0 - pk3);
        b.require_eq(lhs, rhs, "bilinear identity, j=" + std::to_string(j));
    }
    return b.step;
}

// q_0-level grounding of the residue profile: the combination identities for
// the numerator polynomials, the coefficient structure of the resulting
// polynomial constraint, and the finite q_0 case analysis.
CertStep step_residue_profile(const FieldSpecPtr& f3) {
    StepBuilder b("residue_profile",
                  "every pole set carries four residues of one sign and one of the other: "
                  "grounded by the combination identities of the numerator polynomials and "
                  "the q_0 case analysis");

    { // q-transfer from the two moment families at k fixed
        auto r = PolyRing::make(f3, {"q0", "q3"});
        Frac q0 = frac_var(r, "q0"), q3 = frac_var(r, "q3");
        Frac q1 = q3 - q0;
        Frac q2 = q3 - frac_const(r, 2) * q0;
        b.require_eq(q1 + q2 + q3, frac_const(r, 0), "first family at fixed k");
        b.require_eq(q0 - q1 + q2, frac_const(r, 0), "second family at fixed k");
    }

    { // combination identities with free numerator symbols
        auto r = PolyRing::make(f3, {"Q0", "Q1", "Q2", "Q3", "Rm", "P0", "P3", "a"});
        Frac Q0 = frac_var(r, "Q0"), Q1 = frac_var(r, "Q1"), Q2 = frac_var(r, "Q2"),
             Q3 = frac_var(r, "Q3"), Rm = frac_var(r, "Rm"), P0 = frac_var(r, "P0"),
             P3 = frac_var(r, "P3"), a = frac_var(r, "a");
        Frac one = frac_const(r, 1);
        Frac P1 = (a * P0 + P3) / (a + one);
        Frac P2 = (a * P0 - P3) / (a - one);
        Frac big1_lhs = (a * a * Q0 - a * (a + one) * Q1 + a * (a - one) * Q2) * P0 * P0 +
                        ((a - one) * Q2 + (a + one) * Q1) * P0 * P3 - Q0 * P3 * P3;
        b.require_eq(big1_lhs, (a * a - one) * (Q0 * P1 * P2 - Q1 * P0 * P2 + Q2 * P0 * P1),
                     "first combination identity");
        Frac big2_lhs = (-(a + one) * Q1 + (a - one) * Q2 - Q3) * P3 * P3 +
                        (a * (a + one) * Q1 + a * (a - one) * Q2) * P0 * P3 + a * a * Q3 * P0 * P0;
        b.require_eq(big2_lhs, (a * a - one) * (Q1 * P2 * P3 + Q2 * P1 * P3 + Q3 * P1 * P2),
                     "second combination identity");
        Frac Q1s = (Q3 - a * Q0 + Rm) / (a + one);
        Frac Q2s = (-Q3 + a * Q0 + Rm) / (a - one);
        Frac centered = (a * a * Q0 - a * (a + one) * Q1s + a * (a - one) * Q2s) * P0 * P0 +
                        ((a - one) * Q2s + (a + one) * Q1s) * P0 * P3 - Q0 * P3 * P3;
        b.require_eq(centered, a * Q3 * P0 * P0 - Rm * P0 * P3 - Q0 * P3 * P3,
                     "centered combination");
    }

    // full centered constraint with symmetric-function and q indeterminates
    {
        std::vector<std::string> vars;
        for (int i = 2; i <= 5; ++i) vars.push_back("s" + std::to_string(i));
        for (int i = 2; i <= 5; ++i) vars.push_back("g" + std::to_string(i));
        for (int i = 0; i <= 4; ++i) vars.push_back("q" + std::to_string(i) + "_0");
        for (int i = 0; i <= 4; ++i) vars.push_back("q" + std::to_string(i) + "_3");
        vars.push_back("a");
        vars.push_back("v");
        vars.push_back("X");
        auto r = PolyRing::make(f3, vars);
        auto V = [&](const std::string& n) { return MultiPoly::variable(r, n); };
        MultiPoly X = V("X"), a = V("a"), v = V("v");
        MultiPoly one = MultiPoly::constant(r, 1);
        // S_1 = 0 by translation, gamma_1 = 0 since S_1 agrees across sets
        std::vector<MultiPoly> S0{one, MultiPoly::zero(r)}, S3{one, MultiPoly::zero(r)};
        for (int i = 2; i <= 5; ++i) {
            S0.push_back(V("s" + std::to_string(i)));
            S3.push_back(V("s" + std::to_string(i)) - V("g" + std::to_string(i)));
        }
        auto ptrunc = [&](const std::vector<MultiPoly>& S, int n) {
            MultiPoly acc = MultiPoly::zero(r);
            for (int i = 0; i <= n; ++i) {
                MultiPoly t = S[static_cast<size_t>(i)] * X.pow(static_cast<uint32_t>(n - i));
                acc = (i % 2 == 0) ? acc + t : acc - t;
            }
            return acc;
        };
        auto pfull = [&](const std::vector<MultiPoly>& S) {
            MultiPoly acc = MultiPoly::zero(r);
            for (int i = 0; i <= 5; ++i) {
                MultiPoly t = S[static_cast<size_t>(i)] * X.pow(static_cast<uint32_t>(5 - i));
                acc = (i % 2 == 0) ? acc + t : acc - t;
            }
            return acc;
        };
        MultiPoly Q0 = MultiPoly::zero(r), Q3 = MultiPoly::zero(r), Rm = MultiPoly::zero(r);
        for (int i = 0; i <= 4; ++i) {
            MultiPoly q0i = V("q" + std::to_string(i) + "_0");
            MultiPoly q3i = V("q" + std::to_string(i) + "_3");
            Q0 = Q0 + q0i * ptrunc(S0, 4 - i);
            Q3 = Q3 + q3i * ptrunc(S3, 4 - i);
            Rm = Rm + a * q3i * ptrunc(S0, 4 - i) - q0i * ptrunc(S3, 4 - i);
        }
        MultiPoly P0 = pfull(S0), P3 = pfull(S3);
        MultiPoly C = a * Q3 * P0 * P0 - Rm * P0 * P3 - Q0 * P3 * P3 -
                      v * (a * a - one);
        size_t xv = static_cast<size_t>(r->var_index("X"));
        for (int k = 14; k >= 10; --k)
            b.require(C.coefficient_in(xv, static_cast<uint32_t>(k)).is_zero(),
                      "X^" + std::to_string(k) + " coefficient vanishes identically");

        // leading nontrivial coefficient: -(a q_0^(3) + q_0^(0)) gamma_5 plus
        // pivot-weighted lower differences
        MultiPoly c9 = C.coefficient_in(xv, 9);
        auto piv = [&](int k) {
            return a * V("q" + std::to_string(k) + "_3") + V("q" + std::to_string(k) + "_0");
        };
        MultiPoly c9_expect = -piv(0) * V("g5") + piv(3) * V("g2") - piv(2) * V("g3") +
                              piv(1) * V("g4");
        b.require(c9 == c9_expect,
                  "X^9 coefficient is -(a q_0^(3) + q_0^(0)) gamma_5 + pivot-weighted "
                  "lower differences",
                  (c9 - c9_expect).to_string());

        // gamma = 0 collapses the two vanishing polynomials
        MultiPoly diffP = P0 - P3;
        for (int i = 2; i <= 5; ++i)
            diffP = diffP.subst(static_cast<size_t>(r->var_index("g" + std::to_string(i))),
                                MultiPoly::zero(r));
        b.require(diffP.is_zero(),
                  "all symmetric-function differences zero forces identical vanishing "
                  "polynomials, contradicting pole distinctness");

        // pivot case analysis over F_3: a q_0^(3) + q_0^(0) = 0 with a outside
        // F_3 forces q_0^(0) = q_0^(3) = 0, whence every q_0^(j) = 0
        auto rp = PolyRing::make(f3, std::vector<std::string>{"a"});
        for (int64_t qa = 0; qa < 3; ++qa) {
            for (int64_t qb = 0; qb < 3; ++qb) {
                if (qa == 0 && qb == 0) continue;
                MultiPoly pv = MultiPoly::variable(rp, std::string("a")).scaled(
                                   FieldElement::from_int(f3, qb)) +
                               MultiPoly::constant(rp, qa);
                b.require(vanishes_only_on_prime_field(pv, rp),
                          "pivot with (q_0^(0), q_0^(3)) = (" + std::to_string(qa) + ", " +
                              std::to_string(qb) + ") only vanishes for a in F_3");
            }
        }

        // randomized instantiation of the elimination: with the pivot nonzero
        // the coefficient constraints only admit gamma = 0 (deterministic seed)
        auto f9 = FieldSpec::make(3, 2);
        auto rg = PolyRing::make(f9, {"g2", "g3", "g4", "g5"});
        std::vector<MultiPoly> cks;
        for (int k = 1; k <= 9; ++k) cks.push_back(C.coefficient_in(xv, static_cast<uint32_t>(k)));
        std::mt19937_64 rng(424242);
        std::uniform_int_distribution<int64_t> d9(0, 8);
        std::uniform_int_distribution<int64_t> d3(0, 2);
        int instances = 0;
        bool forced = true;
        while (instances < 3 && forced) {
            FieldElement av = FieldElement::from_index(f9, d9(rng));
            if (av.in_prime_field()) continue;
            FieldElement q00 = FieldElement::from_int(f9, d3(rng));
            FieldElement q03 = FieldElement::from_int(f9, d3(rng));
            if ((av * q03 + q00).is_zero()) continue;
            ++instances;
            std::vector<std::optional<FieldElement>> assign(r->arity());
            auto set = [&](const std::string& n, const FieldElement& val) {
                assign[static_cast<size_t>(r->var_index(n))] = val;
            };
            for (int i = 2; i <= 5; ++i)
                set("s" + std::to_string(i), FieldElement::from_index(f9, d9(rng)));
            set("q0_0", q00);
            set("q0_3", q03);
            for (int i = 1; i <= 4; ++i) {
                set("q" + std::to_string(i) + "_0", FieldElement::from_int(f9, d3(rng)));
                set("q" + std::to_string(i) + "_3", FieldElement::from_int(f9, d3(rng)));
            }
            set("a", av);
            set("v", FieldElement::zero(f9)); // absent from the checked coefficients
            set("X", FieldElement::zero(f9)); // coefficients are X-free
            std::vector<MultiPoly> inst;
            for (const auto& ck : cks) inst.push_back(partial_eval(ck, rg, assign));
            std::vector<FieldElement> pt(4, FieldElement::zero(f9));
            for (int64_t i2 = 0; i2 < 9 && forced; ++i2)
                for (int64_t i3 = 0; i3 < 9 && forced; ++i3)
                    for (int64_t i4 = 0; i4 < 9 && forced; ++i4)
                        for (int64_t i5 = 0; i5 < 9 && forced; ++i5) {
                            if (i2 == 0 && i3 == 0 && i4 == 0 && i5 == 0) continue;
                            pt[0] = FieldElement::from_index(f9, i2);
                            pt[1] = FieldElement::from_index(f9, i3);
                            pt[2] = FieldElement::from_index(f9, i4);
                            pt[3] = FieldElement::from_index(f9, i5);
                            bool all0 = true;
                            for (const auto& ck : inst)
                                if (!ck.eval(pt).is_zero()) {
                                    all0 = false;
                                    break;
                                }
                            if (all0) forced = false;
                        }
        }
        b.require(forced, "sampled elimination instances force gamma = 0 under a nonzero pivot");
        b.note("the full elimination from the coefficient constraints is the published "
               "comparing-coefficients argument; its identity layer is verified above and "
               "instances are checked exhaustively over F_9");
    }

    // counting: a five-element set with residue sum zero mod 3 is of type
    // (4,1) or (1,4)
    for (int n1 = 0; n1 <= 5; ++n1) {
        int n2 = 5 - n1;
        int q0 = ((n1 - n2) % 3 + 3) % 3;
        bool admissible = q0 == 0;
        bool is41 = (n1 == 4 && n2 == 1) || (n1 == 1 && n2 == 4);
        b.require(admissible == is41, "type census for (" + std::to_string(n1) + ", " +
                                          std::to_string(n2) + ")");
    }
    return b.step;
}

// ---------------------------------------------------------------------------
// the main chain
// ---------------------------------------------------------------------------

CertStep step_linear_pole_relations(Pipeline& P) {
    StepBuilder b("linear_pole_relations",
                  "with S_1 = 0 and the zeroth distinguished pole scaled to 1, the degree-1 "
                  "moment equations place the distinguished poles at x-1, x+1, x; the "
                  "even-degree power evaluations follow");
    // solve the 2x2 linear system u + w = -x, u - w = 1 mechanically
    RatFun two_inv = RatFun::constant(P.RP, 2).inverse();
    RatFun u = (-P.X + P.one) * two_inv;
    RatFun w = u - P.one;
    b.require_eq(u + w, -P.X, "sum equation");
    b.require_eq(u - w, P.one, "difference equation");
    b.compare("first distinguished pole x - 1", u, P.x11);
    b.compare("second distinguished pole x + 1", w, P.x12);
    P.x11 = u;
    P.x12 = w;

    struct Val {
        int l;
        bool first;
        RatFun expect;
    };
    RatFun X = P.X, one = P.one;
    std::vector<Val> vals{
        {2, true, -one},
        {2, false, -X - one},
        {4, true, -one},
        {4, false, X.pow(3) + X - one},
        {5, true, X * (one - X * X)},
        {5, false, X * X * (one - X * X)},
        {7, true, X.pow(3) - X},
        {7, false, X.pow(6) - X.pow(4)},
    };
    for (const auto& v : vals) {
        RatFun got = v.first ? P.Al(v.l) : P.Bl(v.l);
        b.compare("power evaluation, degree " + std::to_string(v.l) +
                      (v.first ? ", first family" : ", second family"),
                  got, v.expect);
        b.require(got == v.expect, "power evaluation identity");
    }
    return b.step;
}

CertStep step_closed_forms(Pipeline& P) {
    StepBuilder b("closed_forms_deg245",
                  "the six transformed moment equations of degrees 2, 4, 5 determine "
                  "alpha_2, beta_2, alpha_4, beta_4 and, with gamma_3 still symbolic, "
                  "alpha_5, beta_5");

    // abstract verification of the transformed equations in the free S-ring
    {
        auto f3 = P.f3;
        auto r = PolyRing::make(
            f3, {"s2_0", "s3_0", "s4_0", "s5_0", "s2_3", "s3_3", "s4_3", "s5_3", "a"});
        Frac a = frac_var(r, "a");
        Frac one = frac_const(r, 1);
        Frac am = a * a - one;
        auto S0 = std::vector<Frac>{frac_const(r, 0), frac_var(r, "s2_0"), frac_var(r, "s3_0"),
                                    frac_var(r, "s4_0"), frac_var(r, "s5_0")};
        auto S3 = std::vector<Frac>{frac_const(r, 0), frac_var(r, "s2_3"), frac_var(r, "s3_3"),
                                    frac_var(r, "s4_3"), frac_var(r, "s5_3")};
        auto Sj = [&](int j) {
            std::vector<Frac> out;
            for (size_t i = 0; i < 5; ++i)
                out.push_back((a * S0[i] + frac_const(r, j) * S3[i]) / (a + frac_const(r, j)));
            return out;
        };
        auto p0 = newton_frac(S0, 7, r);
        auto p3 = newton_frac(S3, 7, r);
        auto p1 = newton_frac(Sj(1), 7, r);
        auto p2 = newton_frac(Sj(2), 7, r);
        auto alpha = [&](int l) { return p0[static_cast<size_t>(l - 1)]; };
        auto beta = [&](int l) {
            return p0[static_cast<size_t>(l - 1)] - p3[static_cast<size_t>(l - 1)];
        };
        Frac gamma3 = S0[2] - S3[2];
        auto fam1 = [&](int l) {
            return -(p1[static_cast<size_t>(l - 1)] + p2[static_cast<size_t>(l - 1)] +
                     p3[static_cast<size_t>(l - 1)]);
        };
        auto fam2 = [&](int l) {
            return p0[static_cast<size_t>(l - 1)] - p1[static_cast<size_t>(l - 1)] +
                   p2[static_cast<size_t>(l - 1)];
        };
        Frac a2 = a * a, a3 = a * a * a;
        b.require_eq(fam1(2), a2 / am * beta(2), "transformed equation, degree 2, first family");
        b.require_eq(fam2(2), alpha(2) - a / am * beta(2),
                     "transformed equation, degree 2, second family");
        b.require_eq(fam1(4), a2 / am * beta(4) + a2 / (am * am) * beta(2) * beta(2),
                     "transformed equation, degree 4, first family");
        b.require_eq(fam2(4),
                     alpha(4) - a / am * beta(4) + (a3 + a) / (am * am) * beta(2) * beta(2),
                     "transformed equation, degree 4, second family");
        b.require_eq(fam1(5), a2 / am * beta(5) - a2 / (am * am) * beta(2) * gamma3,
                     "transformed equation, degree 5, first family");
        b.require_eq(fam2(5),
                     alpha(5) - a / am * beta(5) - (a3 + a) / (am * am) * beta(2) * gamma3,
                     "transformed equation, degree 5, second family");
    }

    // solve in the pipeline ring
    RatFun A = P.A, X = P.X, G3 = P.G3, one = P.one, AM = P.AM;
    P.beta2 = P.Al(2) * AM / (A * A);
    P.alpha2 = P.Bl(2) + A / AM * P.beta2;
    P.beta4 = (P.Al(4) - A * A / (AM * AM) * P.beta2 * P.beta2) * AM / (A * A);
    P.alpha4 = P.Bl(4) + A / AM * P.beta4 - (A.pow(3) + A) / (AM * AM) * P.beta2 * P.beta2;
    P.beta5 = (P.Al(5) + A * A / (AM * AM) * P.beta2 * G3) * AM / (A * A);
    P.alpha5 = P.Bl(5) + A / AM * P.beta5 + (A.pow(3) + A) / (AM * AM) * P.beta2 * G3;
    P.gamma2 = P.beta2;
    P.delta2 = P.alpha2;

    b.compare("alpha_2", P.alpha2, -A.inverse() - one - X);
    b.compare("beta_2", P.beta2, (one - A * A) / (A * A));
    b.compare("alpha_4", P.alpha4, X.pow(3) + X - one + (A * A + one) / A.pow(3));
    b.compare("beta_4", P.beta4, (one - A.pow(4)) / A.pow(4));
    b.compare("alpha_5", P.alpha5, (X + A.inverse()) * (X - X.pow(3)) - G3 / A);
    b.compare("beta_5", P.beta5, AM / (A * A) * X * (one - X * X) - G3 / (A * A));
    for (const auto& c : b.step.reference)
        b.require(c.matches, "closed form differs from the reference display: " + c.display,
                  c.difference);
    return b.step;
}

CertStep step_gamma4_delta4(Pipeline& P) {
    StepBuilder b("gamma4_delta4",
                  "Newton bridges gamma_4 + beta_4 = alpha_2 beta_2 + beta_2^2, "
                  "delta_4 = -alpha_4 - alpha_2^2, alpha_5 = alpha_2 delta_3 - delta_5, "
                  "gamma_5 + beta_5 = delta_3 beta_2 + (alpha_2 - beta_2) gamma_3, and the "
                  "resulting closed gamma_4, delta_4");
    { // abstract verification over the free S-ring
        auto r = PolyRing::make(
            P.f3, {"s2_0", "s3_0", "s4_0", "s5_0", "s2_3", "s3_3", "s4_3", "s5_3"});
        auto S0 = std::vector<Frac>{frac_const(r, 0), frac_var(r, "s2_0"), frac_var(r, "s3_0"),
                                    frac_var(r, "s4_0"), frac_var(r, "s5_0")};
        auto S3 = std::vector<Frac>{frac_const(r, 0), frac_var(r, "s2_3"), frac_var(r, "s3_3"),
                                    frac_var(r, "s4_3"), frac_var(r, "s5_3")};
        auto p0 = newton_frac(S0, 5, r);
        auto p3 = newton_frac(S3, 5, r);
        auto al = [&](int l) { return p0[static_cast<size_t>(l - 1)]; };
        auto be = [&](int l) { return p0[static_cast<size_t>(l - 1)] - p3[static_cast<size_t>(l - 1)]; };
        auto ga = [&](int i) { return S0[static_cast<size_t>(i - 1)] - S3[static_cast<size_t>(i - 1)]; };
        auto de = [&](int i) { return S0[static_cast<size_t>(i - 1)]; };
        b.require_eq(ga(4) + be(4), al(2) * be(2) + be(2) * be(2), "gamma_4 bridge");
        b.require_eq(de(4), -al(4) - al(2) * al(2), "delta_4 bridge");
        b.require_eq(al(5), al(2) * de(3) - de(5), "alpha_5 bridge");
        b.require_eq(ga(5) + be(5), de(3) * be(2) + (al(2) - be(2)) * ga(3), "gamma_5 bridge");
        b.require_eq(de(2), al(2), "delta_2 = alpha_2 under S_1 = 0");
    }
    P.gamma4 = P.alpha2 * P.beta2 + P.beta2 * P.beta2 - P.beta4;
    P.delta4 = -P.alpha4 - P.alpha2 * P.alpha2;
    RatFun A = P.A, X = P.X, one = P.one;
    b.compare("gamma_4", P.gamma4, P.AM * (A * X + one) / A.pow(3));
    b.compare("delta_4", P.delta4,
              -(A * X + one) * (A * A * X * X + A * A * X - A * X + A + one) / A.pow(3));
    for (const auto& c : b.step.reference)
        b.require(c.matches, "closed form differs from the reference display: " + c.display,
                  c.difference);
    return b.step;
}

CertStep step_exclude_ax_plus_one(Pipeline& P) {
    StepBuilder b("exclude_ax_plus_one",
                  "a x + 1 = 0 would force the zeroth vanishing polynomial into "
                  "(X+1)(X-1)(X^3 - delta_3), which has a triple root in characteristic 3; "
                  "poles are distinct, so a x + 1 != 0");
    auto f3 = P.f3;
    { // factorization identity over F_3[delta, X]
        auto r = PolyRing::make(f3, {"d", "X"});
        MultiPoly d = MultiPoly::variable(r, "d"), X = MultiPoly::variable(r, "X");
        MultiPoly one = MultiPoly::constant(r, 1);
        MultiPoly lhs = X.pow(5) - X.pow(3) - d * X * X + d;
        MultiPoly rhs = (X + one) * (X - one) * (X.pow(3) - d);
        b.require(lhs == rhs, "factorization identity", (lhs - rhs).to_string());
        b.compare_poly("quintic factorization with the cube factor", lhs, rhs);
    }
    { // X^3 - t^3 = (X - t)^3: the cube factor has a triple root
        auto r = PolyRing::make(f3, {"t", "X"});
        MultiPoly t = MultiPoly::variable(r, "t"), X = MultiPoly::variable(r, "X");
        b.require(X.pow(3) - t.pow(3) == (X - t).pow(3), "cube factor collapses to a triple root");
    }
    // under a x + 1 = 0: alpha_2 = -1 and delta_4 = 0
    RatFun sub = -P.A.inverse();
    b.require_eq(P.alpha2.subst("x", sub), -P.one, "alpha_2 = -1 under a x + 1 = 0");
    b.require_eq(P.delta4.subst("x", sub), RatFun::zero(P.RP), "delta_4 = 0 under a x + 1 = 0");
    // evaluation of the zeroth vanishing polynomial at its unit pole:
    // delta_5 = 1 + delta_2 - delta_3 + delta_4, hence delta_5 = -delta_3 here
    {
        auto r = PolyRing::make(f3, {"d2", "d3", "d4", "d5", "Y"});
        auto V = [&](const char* n) { return MultiPoly::variable(r, std::string(n)); };
        MultiPoly Y = V("Y"), one = MultiPoly::constant(r, 1);
        MultiPoly Pz = Y.pow(5) + V("d2") * Y.pow(3) - V("d3") * Y * Y + V("d4") * Y - V("d5");
        MultiPoly at1 = Pz.subst(static_cast<size_t>(r->var_index("Y")), one);
        MultiPoly expect = one + V("d2") - V("d3") + V("d4") - V("d5");
        b.require(at1 == expect, "evaluation of the vanishing polynomial at the unit pole");
    }
    b.note("discharges the side condition 1 + a x != 0 for the rest of the chain");
    return b.step;
}

CertStep step_delta3_delta5(Pipeline& P) {
    StepBuilder b("delta3_delta5",
                  "the unit-pole evaluation and the alpha_5 bridge determine delta_3 and "
                  "delta_5 with gamma_3 symbolic");
    RatFun A = P.A, X = P.X, G3 = P.G3, one = P.one;
    // delta_5 = 1 + delta_2 - delta_3 + delta_4 and delta_5 = alpha_2 delta_3 - alpha_5
    P.delta3 = (one + P.delta2 + P.delta4 + P.alpha5) / (P.alpha2 + one);
    P.delta5 = P.alpha2 * P.delta3 - P.alpha5;
    b.require_eq(P.delta5, one + P.delta2 - P.delta3 + P.delta4, "unit-pole evaluation");
    // the division is by alpha_2 + 1 = -(1 + a x)/a
    b.require_eq(P.alpha2 + one, -(one + A * X) / A, "pivot of the solve is -(1 + a x)/a");
    b.note("division by alpha_2 + 1 licensed by 1 + a x != 0 (exclude_ax_plus_one) and a != 0");
    RatFun d3_ref = G3 / (one + A * X) +
                    (A * A * (X.pow(3) + X * X + one) + A * (one - X) + one) / (A * A);
    RatFun d5_ref = -G3 / (one + A * X) +
                    (A.pow(3) * (X.pow(3) + X * X - X - one) + A * A * (one - X) + A - one) /
                        A.pow(3);
    b.compare("delta_3 with gamma_3 symbolic", P.delta3, d3_ref);
    b.compare("delta_5 with gamma_3 symbolic", P.delta5, d5_ref);
    for (const auto& c : b.step.reference)
        b.require(c.matches, "closed form differs from the reference display: " + c.display,
                  c.difference);
    return b.step;
}

CertStep step_gamma_linear_system(Pipeline& P) {
    StepBuilder b("gamma_linear_system",
                  "evaluating the third vanishing polynomial at its distinguished pole and "
                  "the gamma_5 Newton bridge give two equations linear in gamma_3, gamma_5; "
                  "solving yields closed gamma_3, gamma_5");
    RatFun A = P.A, X = P.X, G3 = P.G3, one = P.one;
    RatFun eq1 = P.delta5 - (X.pow(5) + (P.delta2 - P.gamma2) * X.pow(3) -
                             (P.delta3 - G3) * X * X + (P.delta4 - P.gamma4) * X);
    RatFun eq2 = P.delta3 * P.beta2 + (P.alpha2 - P.beta2) * G3 - P.beta5;

    RatFun eq1_ref = -(one + A * X.pow(3)) / (one + A * X) * G3 +
                     ((A - A.pow(3)) * X.pow(3) + (A - A.pow(3)) * X - A.pow(3) + A * A + A -
                      one) /
                         A.pow(3);
    RatFun eq2_ref = -(((A.pow(3) * X * X - A * A * X + A * A + A - one) /
                        (A * A * (one + A * X))) *
                           G3 +
                       ((A.pow(4) - A * A) * X.pow(3) - (A.pow(3) - A) * X - A.pow(4) + A.pow(3) -
                        A * A - A - one) /
                           A.pow(4));
    b.compare("first linear equation for gamma_5", eq1, eq1_ref);
    b.compare("second linear equation for gamma_5", eq2, eq2_ref);

    // solve: eq1 - eq2 is linear in g3
    RatFun diff = eq1 - eq2;
    P.c_lin = diff.subst("g3", one) - diff.subst("g3", RatFun::zero(P.RP));
    P.c_cst = diff.subst("g3", RatFun::zero(P.RP));
    // the pivot factors as (a x + 1)^2 (-a x + a - 1) / (a^2 (1 + a x))
    RatFun pivot_ref = (A * X + one).pow(2) * (-A * X + A - one) / (A * A * (one + A * X));
    b.require_eq(P.c_lin, pivot_ref, "pivot factorization");
    // -a x + a - 1 = 0 would force the constant term to vanish as well, but at
    // x = (a-1)/a the constant is a unit for a outside F_3
    RatFun cst_at = P.c_cst.subst("x", (A - one) / A);
    b.require(!cst_at.is_zero(), "constant term at -a x + a - 1 = 0 is nonzero");
    b.require(vanishes_only_on_prime_field(cst_at.num(), P.RP),
              "its numerator only vanishes for a in F_3", cst_at.num().to_string());
    b.note("discharges the side condition -a x + a - 1 != 0: were it zero, the pivot would "
           "vanish and the constant would have to vanish too, which it cannot for a outside "
           "F_3");

    P.g3s = -P.c_cst / P.c_lin;
    P.g5s = eq1.subst("g3", P.g3s);

    RatFun g3_ref = (A + one).pow(2) * (A - one) * (A * X - A - one) /
                    (A * A * (one + A * X) * (-A * X + A - one));
    RatFun g5_ref =
        ((A.pow(6) - A.pow(4)) * X.pow(6) + (A.pow(4) - A.pow(6)) * X.pow(5) +
         (A.pow(6) + A.pow(5) - A.pow(4) - A) * X.pow(3) +
         (-A.pow(6) - A.pow(5) + A.pow(4) + A.pow(3)) * X * X + (A.pow(3) - A) * X + A.pow(5) +
         A.pow(4) - A.pow(3) + A * A + one) /
        (A.pow(3) * (one + A * X).pow(2) * (-A * X + A - one));
    b.compare("solved gamma_3", P.g3s, g3_ref);
    b.compare("solved gamma_5", P.g5s, g5_ref);

    P.d3f = P.delta3.subst("g3", P.g3s);
    P.d5f = P.delta5.subst("g3", P.g3s);
    P.b5f = P.beta5.subst("g3", P.g3s);
    P.a5f = P.alpha5.subst("g3", P.g3s);
    RatFun d3f_ref = (-A.pow(4) * X.pow(6) + A.pow(4) * X.pow(4) + (-A.pow(4) - A) * X.pow(3) +
                      (A.pow(4) + A.pow(3) - A) * X * X + A.pow(3) + A * A + one) /
                     (A * (one + A * X).pow(2) * (-A * X + A - one));
    RatFun d5f_ref = (A.pow(6) * X.pow(6) + A.pow(6) * X.pow(4) +
                      (A.pow(6) + A.pow(5) - A.pow(3)) * X * X - A.pow(5) - A.pow(4) + A.pow(3) -
                      A * A - one) /
                     (A.pow(3) * (one + A * X).pow(2) * (-A * X + A - one));
    b.compare("resolved delta_3", P.d3f, d3f_ref);
    b.compare("resolved delta_5", P.d5f, d5f_ref);
    // internal cross-check of the reference forms themselves
    RatFun d3_from_ref = P.delta3.subst("g3", g3_ref);
    if (!(d3_from_ref == d3f_ref))
        b.note("the reference display for the resolved delta_3 is inconsistent with the "
               "reference gamma_3 substituted into the symbolic delta_3");

    int mismatches = 0;
    for (const auto& c : b.step.reference)
        if (!c.matches) ++mismatches;
    if (mismatches)
        b.note("the second linear equation and everything it feeds differ from the reference "
               "displays; the chain continues with the re-derived values");
    return b.step;
}

CertStep step_deg7_relations(Pipeline& P) {
    StepBuilder b("deg7_relations",
                  "the degree-7 moment equations, transformed by the same Newton machinery, "
                  "are evaluated on the resolved closed forms");
    // abstract identity layer for the degree-7 transforms
    {
        auto r = PolyRing::make(
            P.f3, {"s2_0", "s3_0", "s4_0", "s5_0", "s2_3", "s3_3", "s4_3", "s5_3", "a"});
        Frac a = frac_var(r, "a");
        Frac one = frac_const(r, 1);
        Frac am = a * a - one;
        auto S0 = std::vector<Frac>{frac_const(r, 0), frac_var(r, "s2_0"), frac_var(r, "s3_0"),
                                    frac_var(r, "s4_0"), frac_var(r, "s5_0")};
        auto S3 = std::vector<Frac>{frac_const(r, 0), frac_var(r, "s2_3"), frac_var(r, "s3_3"),
                                    frac_var(r, "s4_3"), frac_var(r, "s5_3")};
        auto Sj = [&](int j) {
            std::vector<Frac> out;
            for (size_t i = 0; i < 5; ++i)
                out.push_back((a * S0[i] + frac_const(r, j) * S3[i]) / (a + frac_const(r, j)));
            return out;
        };
        auto p0 = newton_frac(S0, 7, r);
        auto p3 = newton_frac(S3, 7, r);
        auto p1 = newton_frac(Sj(1), 7, r);
        auto p2 = newton_frac(Sj(2), 7, r);
        Frac beta2 = p0[1] - p3[1], beta5 = p0[4] - p3[4], beta7 = p0[6] - p3[6];
        Frac gamma3 = S0[2] - S3[2], gamma4 = S0[3] - S3[3], gamma5 = S0[4] - S3[4];
        Frac delta3 = S0[2], alpha7 = p0[6];
        Frac M = beta2 * beta5 - beta2 * gamma5 + gamma4 * gamma3 + beta2 * beta2 * delta3;
        Frac a2 = a * a;
        Frac fam1 = -(p1[6] + p2[6] + p3[6]);
        Frac fam2 = p0[6] - p1[6] + p2[6];
        b.require_eq(fam1,
                     a2 / am * beta7 + a2 / (am * am) * M +
                         a2 / (am * am * am) * beta2 * beta2 * gamma3,
                     "degree-7 transform, first family");
        b.require_eq(fam2,
                     alpha7 - a / am * beta7 + (a2 * a + a) / (am * am) * M -
                         a2 * a2 * a / (am * am * am) * beta2 * beta2 * gamma3,
                     "degree-7 transform, second family");
    }

    // substitute the resolved closed forms
    RatFun A = P.A, one = P.one, AM = P.AM;
    RatFun s2_3 = P.delta2 - P.gamma2, s3_3 = P.d3f - P.g3s, s5_3 = P.d5f - P.g5s;
    RatFun p2_3 = P.alpha2 - P.beta2, p4_3 = P.alpha4 - P.beta4, p5_3 = P.a5f - P.b5f;
    RatFun alpha7 = -P.delta2 * P.a5f + P.d3f * P.alpha4 + P.d5f * P.alpha2;
    RatFun p7_3 = -s2_3 * p5_3 + s3_3 * p4_3 + s5_3 * p2_3;
    RatFun beta7 = alpha7 - p7_3;
    RatFun M = P.beta2 * P.b5f - P.beta2 * P.g5s + P.gamma4 * P.g3s +
               P.beta2 * P.beta2 * P.d3f;
    RatFun res1 = P.Al(7) - (A * A / AM * beta7 + A * A / (AM * AM) * M +
                             A * A / (AM * AM * AM) * P.beta2 * P.beta2 * P.g3s);
    RatFun res2 = P.Bl(7) - (alpha7 - A / AM * beta7 + (A.pow(3) + A) / (AM * AM) * M -
                             A.pow(5) / (AM * AM * AM) * P.beta2 * P.beta2 * P.g3s);
    bool vac1 = res1.is_zero(), vac2 = res2.is_zero();
    b.note(std::string("first degree-7 residual: ") + (vac1 ? "identically zero" : res1.to_string()));
    b.note(std::string("second degree-7 residual: ") + (vac2 ? "identically zero" : res2.to_string()));

    // reference expectation: a quintic constraint on x
    RatFun quintic_ref = -A * A * P.X.pow(5) + (-A * A + A) * P.X.pow(4) - P.X.pow(3) +
                         (A * A + A + one) * P.X * P.X + (A * A + one) * P.X + A - one;
    b.compare("degree-7 residual against the reference quintic", res1, quintic_ref);
    if (vac1 && vac2)
        b.note("with the re-derived closed forms both degree-7 equations are identically "
               "satisfied: they impose no condition on x, so the reference quintic is not a "
               "consequence at this degree; the constraint content resumes at higher degrees");

    // the reference quintic's factorization is nevertheless a true identity
    {
        auto r = PolyRing::make(P.f3, {"a", "Xv"});
        RatFun a = RatFun::variable(r, "a"), Y = RatFun::variable(r, "Xv");
        RatFun c1 = RatFun::constant(r, 1);
        MultiPoly lhs = (-a * a * Y.pow(5) + (-a * a + a) * Y.pow(4) - Y.pow(3) +
                         (a * a + a + c1) * Y * Y + (a * a + c1) * Y + a - c1)
                            .num();
        MultiPoly rhs = ((Y - c1).pow(2) * (Y + c1) * (a * Y + c1) * (-a * Y + a - c1)).num();
        b.require(lhs == rhs, "reference quintic factorization identity",
                  (lhs - rhs).to_string());
        b.compare_poly("reference quintic equals its displayed factorization", lhs, rhs);
    }
    return b.step;
}

CertStep step_higher_moments(Pipeline& P) {
    StepBuilder b("higher_moment_constraints",
                  "the moment equations of degrees 8 through 13, evaluated on the resolved "
                  "closed forms, leave nonvacuous polynomial constraints on (a, x)");
    RatFun A = P.A, X = P.X, one = P.one;
    auto F = [&](const RatFun& rf) { return frac_of(rf); };
    Frac fA = F(A);
    auto mkF = [&](int64_t c) { return frac_const(P.RP, c); };

    std::vector<Frac> S0v{mkF(0), F(P.delta2), F(P.d3f), F(P.delta4), F(P.d5f)};
    std::vector<Frac> S3v{mkF(0), F(P.delta2 - P.gamma2), F(P.d3f - P.g3s),
                          F(P.delta4 - P.gamma4), F(P.d5f - P.g5s)};
    auto Sjv = [&](int j) {
        std::vector<Frac> out;
        for (size_t i = 0; i < 5; ++i)
            out.push_back(
                reduce_known((fA * S0v[i] + mkF(j) * S3v[i]) / (fA + mkF(j)), P.base));
        return out;
    };
    auto reduce_all = [&](std::vector<Frac> v) {
        for (auto& f : v) f = reduce_known(f, P.base);
        return v;
    };
    auto p0 = newton_frac(reduce_all(S0v), 13, P.RP, &P.base);
    auto p3 = newton_frac(reduce_all(S3v), 13, P.RP, &P.base);
    auto p1 = newton_frac(Sjv(1), 13, P.RP, &P.base);
    auto p2 = newton_frac(Sjv(2), 13, P.RP, &P.base);

    struct Strip {
        MultiPoly factor;
        std::string why;
    };
    std::vector<Strip> strips;
    auto rax_var = [&](const char* n) { return RatFun::variable(P.RAX, n); };
    RatFun Aa = rax_var("a"), Xx = rax_var("x");
    RatFun one2 = RatFun::constant(P.RAX, 1);
    strips.push_back({MultiPoly::variable(P.RAX, std::string("a")), "a != 0 (a outside F_3)"});
    strips.push_back({(Aa - one2).num(), "a != 1 (a outside F_3)"});
    strips.push_back({(Aa + one2).num(), "a != -1 (a outside F_3)"});
    strips.push_back({(Aa * Xx + one2).num(), "1 + a x != 0 (exclude_ax_plus_one)"});
    strips.push_back({(-Aa * Xx + Aa - one2).num(), "-a x + a - 1 != 0 (gamma_linear_system)"});
    strips.push_back({(Xx - one2).num(), "x != 1 (distinct from the unit pole)"});
    strips.push_back({(Xx + one2).num(), "x != -1 (x - 1 would collide with the unit pole)"});
    strips.push_back({MultiPoly::variable(P.RAX, std::string("x")),
                      "x != 0 (x + 1 would collide with the unit pole)"});

    // mechanically confirm the three pole collisions behind the x exclusions
    b.require_eq(P.X.subst("x", one), one, "x = 1 collides with the unit pole");
    b.require_eq(P.x11.subst("x", -one), one, "x = -1 sends x - 1 to the unit pole");
    b.require_eq(P.x12.subst("x", RatFun::zero(P.RP)), one, "x = 0 sends x + 1 to the unit pole");

    P.constraints.clear();
    P.constraint_origin.clear();
    for (int l = 8; l <= 13; ++l) {
        size_t i = static_cast<size_t>(l - 1);
        Frac fam1 = p1[i] + p2[i] + p3[i] + F(P.Al(l));
        Frac fam2 = p0[i] - p1[i] + p2[i] - F(P.Bl(l));
        int fam = 0;
        for (Frac* f : {&fam1, &fam2}) {
            ++fam;
            MultiPoly n = to_ax(P, f->num);
            if (n.is_zero()) continue;
            for (const auto& s : strips)
                for (;;) {
                    auto d = n.divided_exact_by(s.factor);
                    if (!d) break;
                    n = *d;
                }
            n = n.normalized_lead();
            bool dup = false;
            for (const auto& c : P.constraints) dup |= c == n;
            if (!dup) {
                P.constraints.push_back(n);
                P.constraint_origin.push_back("degree " + std::to_string(l) + ", family " +
                                              std::to_string(fam));
                b.note("constraint from degree " + std::to_string(l) + ", family " +
                       std::to_string(fam) + ": degree in x = " + std::to_string(n.degree_in(1)));
            }
        }
    }
    b.require(!P.constraints.empty(), "at least one nonvacuous constraint survives");
    b.require(P.constraints.size() >= 2, "at least two independent constraints survive");
    for (const auto& s : strips) b.note("stripped factor justified by: " + s.why);
    return b.step;
}

CertStep step_final_exclusions(Pipeline& P) {
    StepBuilder b("final_exclusions",
                  "the surviving constraints admit no common solution with a outside F_3: "
                  "the resultants in x of the first constraint against every other have a "
                  "greatest common divisor whose roots all lie in F_3");
    if (P.constraints.size() < 2) {
        b.require(false, "not enough constraints to eliminate");
        return b.step;
    }
    const MultiPoly& T = P.constraints.front();
    int64_t dx = T.degree_in(1);
    MultiPoly lead = T.coefficient_in(1, static_cast<uint32_t>(dx));
    b.require(vanishes_only_on_prime_field(lead, P.RAX),
              "leading x-coefficient of the pivot constraint only vanishes for a in F_3",
              lead.to_string());
    MultiPoly acc = MultiPoly::zero(P.RAX);
    for (size_t i = 1; i < P.constraints.size(); ++i) {
        MultiPoly r = resultant_in(T, P.constraints[i], 1);
        b.require(!r.is_zero(), "resultant against constraint " + std::to_string(i) +
                                    " is nonzero");
        acc = poly_gcd(acc, r);
    }
    b.require(!acc.is_zero(), "gcd of the resultants is nonzero");
    b.note("gcd of the resultants: " + acc.to_string());
    b.require(acc.degree_in(1) == 0, "the gcd only involves a");
    b.require(vanishes_only_on_prime_field(acc, P.RAX),
              "every root of the gcd lies in F_3", acc.to_string());
    b.note("any admissible pair (a, x) would make every constraint vanish, hence every "
           "resultant vanish, hence a would be a root of the gcd; all such roots lie in F_3 "
           "while a = u/v does not");
    return b.step;
}

void append_blocked(CertificateReport& rep, const std::string& name, const std::string& claim) {
    CertStep s;
    s.name = name;
    s.claim = claim;
    s.status = StepStatus::Blocked;
    rep.steps.push_back(std::move(s));
}

} // namespace

bool CertificateReport::all_steps_verified() const {
    return std::all_of(steps.begin(), steps.end(),
                       [](const CertStep& s) { return s.status == StepStatus::Verified; });
}

const CertStep* CertificateReport::find(const std::string& name) const {
    for (const auto& s : steps)
        if (s.name == name) return &s;
    return nullptr;
}

std::vector<std::string> certificate_step_names() {
    return {"numerator_expansion_l1",
            "numerator_expansion_l2",
            "numerator_expansion_l3",
            "numerator_expansion_l4",
            "numerator_expansion_l5",
            "numerator_expansion_l6",
            "newton_shapes",
            "power_sum_transfer",
            "bilinear_transfer",
            "residue_profile",
            "linear_pole_relations",
            "closed_forms_deg245",
            "gamma4_delta4",
            "exclude_ax_plus_one",
            "delta3_delta5",
            "gamma_linear_system",
            "deg7_relations",
            "higher_moment_constraints",
            "final_exclusions"};
}

CertificateReport certify_all() {
    auto t0 = std::chrono::steady_clock::now();
    CertificateReport rep;
    rep.hypotheses = {
        "a two-dimensional space of logarithmic forms with 15 simple poles per member exists "
        "at p = 3 (for contradiction)",
        "poles are pairwise distinct",
        "a = u/v lies outside F_3 (the derived vanishing polynomials share no zeros)",
        "every pole set carries residues of type (4,1) or (1,4) with the exceptional pole "
        "listed first (residue_profile)",
        "normalization: the common first symmetric function is translated to 0 and the "
        "zeroth distinguished pole is scaled to 1",
    };
    rep.side_conditions = {
        "divisions by a, a - 1, a + 1: a lies outside F_3",
        "division by 1 + a x: discharged by exclude_ax_plus_one",
        "division by -a x + a - 1: discharged by gamma_linear_system",
        "x distinct from 0, 1, -1: pole collisions with the unit pole (higher_moment_constraints)",
    };

    auto f3 = FieldSpec::make(3, 1);
    for (int l = 1; l <= 6; ++l) rep.steps.push_back(step_numerator_expansion(f3, l));
    rep.steps.push_back(step_newton_shapes(f3));
    rep.steps.push_back(step_power_sum_transfer(f3));
    rep.steps.push_back(step_bilinear_transfer(f3));
    rep.steps.push_back(step_residue_profile(f3));

    Pipeline P;
    P.f3 = f3;
    P.RP = PolyRing::make(f3, {"a", "x", "g3"});
    P.A = RatFun::variable(P.RP, "a");
    P.X = RatFun::variable(P.RP, "x");
    P.G3 = RatFun::variable(P.RP, "g3");
    P.one = RatFun::constant(P.RP, 1);
    P.AM = P.A * P.A - P.one;
    P.x11 = P.X - P.one;
    P.x12 = P.X + P.one;
    P.RAX = PolyRing::make(f3, {"a", "x"});
    {
        RatFun A = P.A, X = P.X, one = P.one;
        P.base.push_back(MultiPoly::variable(P.RP, std::string("a")));
        P.base.push_back((A + one).num());
        P.base.push_back((A + RatFun::constant(P.RP, 2)).num());
        P.base.push_back((A * X + one).num());
        P.base.push_back((-A * X + A - one).num());
        P.base.push_back((X - one).num());
        P.base.push_back((X + one).num());
        P.base.push_back(MultiPoly::variable(P.RP, std::string("x")));
    }

    bool ok = rep.all_steps_verified();
    struct Stage {
        std::string name;
        std::string claim;
        std::function<CertStep(Pipeline&)> run;
    };
    std::vector<Stage> stages = {
        {"linear_pole_relations", "distinguished pole placement", step_linear_pole_relations},
        {"closed_forms_deg245", "closed forms of degrees 2, 4, 5", step_closed_forms},
        {"gamma4_delta4", "gamma_4 and delta_4", step_gamma4_delta4},
        {"exclude_ax_plus_one", "exclusion of a x + 1 = 0", step_exclude_ax_plus_one},
        {"delta3_delta5", "delta_3 and delta_5", step_delta3_delta5},
        {"gamma_linear_system", "the gamma linear system", step_gamma_linear_system},
        {"deg7_relations", "degree-7 relations", step_deg7_relations},
        {"higher_moment_constraints", "degrees 8 through 13", step_higher_moments},
        {"final_exclusions", "final exclusions", step_final_exclusions},
    };
    for (auto& st : stages) {
        if (!ok) {
            append_blocked(rep, st.name, st.claim);
            continue;
        }
        CertStep s = st.run(P);
        ok = ok && s.status == StepStatus::Verified;
        rep.steps.push_back(std::move(s));
    }
    rep.contradiction_established = rep.all_steps_verified();
    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

CertificateReport certify_step(const std::string& name) {
    auto names = certificate_step_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        fail(ErrorCode::UnknownStep, "unknown certificate step: " + name);
    CertificateReport full = certify_all();
    CertificateReport out;
    out.hypotheses = full.hypotheses;
    out.side_conditions = full.side_conditions;
    out.contradiction_established = full.contradiction_established;
    out.seconds = full.seconds;
    for (auto& s : full.steps)
        if (s.name == name) out.steps.push_back(std::move(s));
    return out;
}

std::string render_certificate(const CertificateReport& r, bool machine) {
    std::ostringstream os;
    if (machine) {
        for (const auto& s : r.steps) {
            os << "step " << s.name << " status=";
            switch (s.status) {
            case StepStatus::Verified: os << "verified"; break;
            case StepStatus::Failed: os << "failed"; break;
            case StepStatus::Blocked: os << "blocked"; break;
            }
            os << "\n";
            if (!s.witness.empty()) os << "step " << s.name << " witness " << s.witness << "\n";
            for (const auto& c : s.reference)
                os << "step " << s.name << " reference \"" << c.display << "\" "
                   << (c.matches ? "matches" : "differs " + c.difference) << "\n";
            for (const auto& n : s.notes) os << "step " << s.name << " note " << n << "\n";
        }
        for (const auto& h : r.hypotheses) os << "hypothesis " << h << "\n";
        for (const auto& c : r.side_conditions) os << "side-condition " << c << "\n";
        os << (r.contradiction_established ? "CONTRADICTION_ESTABLISHED"
                                           : "CONTRADICTION_NOT_ESTABLISHED")
           << "\n";
        return os.str();
    }
    os << "certificate: nonexistence of a two-dimensional space of logarithmic forms with "
          "15 poles per member at p = 3\n\n";
    os << "hypotheses (for contradiction):\n";
    for (const auto& h : r.hypotheses) os << "  - " << h << "\n";
    os << "\nsteps:\n";
    for (const auto& s : r.steps) {
        const char* st = s.status == StepStatus::Verified
                             ? "verified"
                             : (s.status == StepStatus::Failed ? "FAILED" : "blocked");
        os << "  [" << st << "] " << s.name << "\n";
        os << "      " << s.claim << "\n";
        if (!s.witness.empty()) os << "      witness: " << s.witness << "\n";
        for (const auto& c : s.reference) {
            os << "      reference " << (c.matches ? "matches" : "DIFFERS") << ": " << c.display
               << "\n";
            if (!c.matches) os << "        difference: " << c.difference << "\n";
        }
        for (const auto& n : s.notes) os << "      note: " << n << "\n";
    }
    os << "\nside conditions:\n";
    for (const auto& c : r.side_conditions) os << "  - " << c << "\n";
    os << "\nresult: "
       << (r.contradiction_established ? "CONTRADICTION_ESTABLISHED"
                                       : "CONTRADICTION_NOT_ESTABLISHED")
       << "\n";
    return os.str();
}

} // namespace gdd
