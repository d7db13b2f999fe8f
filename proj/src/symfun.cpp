#include "gdd/symfun.hpp"

namespace gdd {

FieldElement symmetric(const FieldSpecPtr& spec, const std::vector<FieldElement>& values, int k,
                       SymKind kind) {
    if (k < 0) fail(ErrorCode::InvalidArgument, "symmetric degree must be >= 0");
    const size_t n = values.size();
    switch (kind) {
    case SymKind::Elementary: {
        if (static_cast<size_t>(k) > n) return FieldElement::zero(spec);
        std::vector<FieldElement> e(static_cast<size_t>(k) + 1, FieldElement::zero(spec));
        e[0] = FieldElement::one(spec);
        for (const FieldElement& x : values)
            for (size_t j = std::min<size_t>(static_cast<size_t>(k), n); j >= 1; --j)
                e[j] = e[j] + x * e[j - 1];
        return e[static_cast<size_t>(k)];
    }
    case SymKind::PowerSum: {
        FieldElement acc = FieldElement::zero(spec);
        for (const FieldElement& x : values) acc = acc + x.pow(k); // 0^0 = 1
        return acc;
    }
    case SymKind::CompleteHomogeneous: {
        std::vector<FieldElement> h(static_cast<size_t>(k) + 1, FieldElement::zero(spec));
        h[0] = FieldElement::one(spec);
        for (const FieldElement& x : values)
            for (size_t j = 1; j <= static_cast<size_t>(k); ++j) h[j] = h[j] + x * h[j - 1];
        return h[static_cast<size_t>(k)];
    }
    }
    fail(ErrorCode::InvalidArgument, "unknown symmetric kind");
}

std::vector<FieldElement> elementary_all(const FieldSpecPtr& spec,
                                         const std::vector<FieldElement>& values) {
    std::vector<FieldElement> e(values.size() + 1, FieldElement::zero(spec));
    e[0] = FieldElement::one(spec);
    size_t used = 0;
    for (const FieldElement& x : values) {
        ++used;
        for (size_t j = used; j >= 1; --j) e[j] = e[j] + x * e[j - 1];
    }
    return e;
}

MultiPoly poly_from_roots(const FieldSpecPtr& spec, const std::vector<FieldElement>& roots,
                          const std::string& var) {
    PolyRingPtr ring = PolyRing::make(spec, {var});
    MultiPoly p = MultiPoly::constant(ring, 1);
    MultiPoly X = MultiPoly::variable(ring, size_t{0});
    for (const FieldElement& r : roots) p = p * (X - MultiPoly::constant(ring, r));
    return p;
}

MultiPoly hatted_poly(const FieldSpecPtr& spec, const std::vector<FieldElement>& S,
                      const std::string& var) {
    if (S.empty() || !S[0].is_one())
        fail(ErrorCode::InvalidArgument, "hatted polynomial needs S_0 = 1");
    PolyRingPtr ring = PolyRing::make(spec, {var});
    MultiPoly p = MultiPoly::zero(ring);
    const size_t n = S.size() - 1;
    for (size_t i = 0; i <= n; ++i) {
        Mono m(1, 0);
        m[0] = static_cast<uint32_t>(i);
        p.add_term(m, S[n - i]);
    }
    return p;
}

std::vector<std::pair<FieldElement, int>> roots_in_field(const MultiPoly& poly,
                                                         int64_t field_order_limit) {
    if (poly.is_zero()) fail(ErrorCode::InvalidArgument, "root finding needs a nonzero polynomial");
    if (poly.ring()->arity() != 1) fail(ErrorCode::InvalidArgument, "root finding is univariate");
    const FieldSpecPtr& spec = poly.ring()->spec();
    if (spec->order() > field_order_limit)
        fail(ErrorCode::ResourceLimit, "field order " + std::to_string(spec->order()) +
                                           " exceeds root-finding threshold " +
                                           std::to_string(field_order_limit));
    std::vector<std::pair<FieldElement, int>> out;
    MultiPoly X = MultiPoly::variable(poly.ring(), size_t{0});
    for (int64_t i = 0; i < spec->order(); ++i) {
        FieldElement r = FieldElement::from_index(spec, i);
        if (!poly.eval({r}).is_zero()) continue;
        int mult = 0;
        MultiPoly q = poly;
        MultiPoly lin = X - MultiPoly::constant(poly.ring(), r);
        for (;;) {
            auto next = q.divided_exact_by(lin);
            if (!next) break;
            q = *next;
            ++mult;
            if (q.is_constant()) break;
        }
        out.emplace_back(r, mult);
    }
    return out;
}

} // namespace gdd
