#include <doctest.h>

#include <random>
#include <vector>

#include "gdd/field.hpp"

// Independent numeric cross-check of the residue-profile elimination: the
// centered combination constraint, rebuilt here from plain coefficient
// arrays, admits no nonzero symmetric-function differences when the pivot
// a q_0^(3) + q_0^(0) is invertible. This replays the certifier's claim with
// none of its machinery.

using namespace gdd;

namespace {

using Poly = std::vector<FieldElement>; // coefficients by ascending degree

Poly padd(const FieldSpecPtr& spec, Poly x, const Poly& y) {
    if (y.size() > x.size()) x.resize(y.size(), FieldElement::zero(spec));
    for (size_t i = 0; i < y.size(); ++i) x[i] = x[i] + y[i];
    return x;
}

Poly pscale(Poly x, const FieldElement& c) {
    for (auto& e : x) e = e * c;
    return x;
}

Poly pmul(const FieldSpecPtr& spec, const Poly& x, const Poly& y) {
    Poly r(x.size() + y.size() - 1, FieldElement::zero(spec));
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) r[i + j] = r[i + j] + x[i] * y[j];
    return r;
}

} // namespace

TEST_CASE("centered constraint forces equal symmetric functions under a unit pivot") {
    auto f9 = FieldSpec::make(3, 2);
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<int64_t> d9(0, 8);
    std::uniform_int_distribution<int64_t> d3(0, 2);
    FieldElement one = FieldElement::one(f9);

    int instances = 0;
    while (instances < 12) {
        FieldElement a = FieldElement::from_index(f9, d9(rng));
        if (a.in_prime_field()) continue;
        std::vector<FieldElement> s(6, FieldElement::zero(f9)); // s[2..5], S_1 = 0
        for (int i = 2; i <= 5; ++i) s[static_cast<size_t>(i)] = FieldElement::from_index(f9, d9(rng));
        std::vector<FieldElement> q0(5), q3(5); // residue-weighted counts live in F_3
        for (int i = 0; i <= 4; ++i) {
            q0[static_cast<size_t>(i)] = FieldElement::from_int(f9, d3(rng));
            q3[static_cast<size_t>(i)] = FieldElement::from_int(f9, d3(rng));
        }
        if ((a * q3[0] + q0[0]).is_zero()) continue;
        ++instances;

        auto eval_gamma = [&](const std::vector<FieldElement>& g) {
            // S^(3) = S^(0) - gamma; both sets share S_1 = 0
            auto S0 = [&](int i) { return i == 0 ? one : s[static_cast<size_t>(i)]; };
            auto S3 = [&](int i) {
                return i == 0 ? one : s[static_cast<size_t>(i)] - g[static_cast<size_t>(i)];
            };
            auto trunc = [&](auto Sf, int n) { // signed truncation, degree n
                Poly c(static_cast<size_t>(n + 1), FieldElement::zero(f9));
                for (int i = 0; i <= n; ++i) {
                    FieldElement v = Sf(i);
                    if (i % 2 == 1) v = -v;
                    c[static_cast<size_t>(n - i)] = v;
                }
                return c;
            };
            Poly P0(6, FieldElement::zero(f9)), P3(6, FieldElement::zero(f9));
            for (int i = 0; i <= 5; ++i) {
                FieldElement v0 = S0(i), v3 = S3(i);
                if (i % 2 == 1) {
                    v0 = -v0;
                    v3 = -v3;
                }
                P0[static_cast<size_t>(5 - i)] = v0;
                P3[static_cast<size_t>(5 - i)] = v3;
            }
            Poly Q0{FieldElement::zero(f9)}, Q3{FieldElement::zero(f9)}, R{FieldElement::zero(f9)};
            for (int i = 0; i <= 4; ++i) {
                Q0 = padd(f9, Q0, pscale(trunc(S0, 4 - i), q0[static_cast<size_t>(i)]));
                Q3 = padd(f9, Q3, pscale(trunc(S3, 4 - i), q3[static_cast<size_t>(i)]));
                R = padd(f9, R, pscale(trunc(S0, 4 - i), a * q3[static_cast<size_t>(i)]));
                R = padd(f9, R, pscale(trunc(S3, 4 - i), -q0[static_cast<size_t>(i)]));
            }
            // a Q3 P0^2 - R P0 P3 - Q0 P3^2; the X^0 coefficient is absorbed by
            // the unit v, so only positive-degree coefficients constrain
            Poly C = padd(f9,
                          padd(f9, pscale(pmul(f9, Q3, pmul(f9, P0, P0)), a),
                               pscale(pmul(f9, R, pmul(f9, P0, P3)), -one)),
                          pscale(pmul(f9, Q0, pmul(f9, P3, P3)), -one));
            for (size_t k = 1; k < C.size(); ++k)
                if (!C[k].is_zero()) return false;
            return true;
        };

        // gamma = 0 satisfies the constraint by symmetry
        std::vector<FieldElement> zero_g(6, FieldElement::zero(f9));
        CHECK(eval_gamma(zero_g));

        // sampled nonzero gammas never do
        std::uniform_int_distribution<int64_t> gi(0, 8);
        for (int trial = 0; trial < 1200; ++trial) {
            std::vector<FieldElement> g(6, FieldElement::zero(f9));
            bool nonzero = false;
            for (int i = 2; i <= 5; ++i) {
                g[static_cast<size_t>(i)] = FieldElement::from_index(f9, gi(rng));
                nonzero |= !g[static_cast<size_t>(i)].is_zero();
            }
            if (!nonzero) continue;
            CHECK(!eval_gamma(g));
        }
    }
}
