#pragma once

#include <functional>
#include <vector>

#include "gdd/poly.hpp"

namespace gdd {

enum class SymKind { Elementary, PowerSum, CompleteHomogeneous };

/// S_k / p_k / c_k of a value list. Conventions: S_0 = c_0 = 1, S_k = 0 for
/// k > n, p_0 = n mod p (0^0 counts as 1), exactly what the moment sums need.
FieldElement symmetric(const FieldSpecPtr& spec, const std::vector<FieldElement>& values, int k,
                       SymKind kind);

/// All S_0..S_n of a value list in one pass.
std::vector<FieldElement> elementary_all(const FieldSpecPtr& spec,
                                         const std::vector<FieldElement>& values);

/// Division-free Newton recurrence
///   p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-1} k e_k
/// (terms with e_j, j > n omitted), valid verbatim in characteristic p.
/// Works over any commutative ring; `make_int` embeds small integers.
/// Returns p_1..p_K.
template <class R>
std::vector<R> newton_power_sums(const std::vector<R>& e, int K,
                                 const std::function<R(int64_t)>& make_int) {
    std::vector<R> p;
    p.reserve(static_cast<size_t>(K));
    const int n = static_cast<int>(e.size());
    for (int k = 1; k <= K; ++k) {
        R acc = make_int(0);
        for (int i = 1; i < k && i <= n; ++i) {
            R term = e[static_cast<size_t>(i - 1)] * p[static_cast<size_t>(k - i - 1)];
            acc = (i % 2 == 1) ? acc + term : acc - term;
        }
        if (k <= n) {
            R tail = make_int(k) * e[static_cast<size_t>(k - 1)];
            acc = (k % 2 == 1) ? acc + tail : acc - tail;
        }
        p.push_back(acc);
    }
    return p;
}

/// Monic univariate polynomial with the given multiset of roots, in a fresh
/// one-variable ring over the roots' field.
MultiPoly poly_from_roots(const FieldSpecPtr& spec, const std::vector<FieldElement>& roots,
                          const std::string& var = "X");

/// Hatted polynomial: sum S_{n-i} X^i for a coefficient list S_0..S_n (S_0 = 1).
MultiPoly hatted_poly(const FieldSpecPtr& spec, const std::vector<FieldElement>& S,
                      const std::string& var = "X");

/// All roots of a nonzero univariate polynomial in its coefficient field, with
/// multiplicities, found by exhaustive evaluation. ResourceLimit above the
/// field-size threshold.
std::vector<std::pair<FieldElement, int>> roots_in_field(const MultiPoly& poly,
                                                         int64_t field_order_limit = 729);

} // namespace gdd
