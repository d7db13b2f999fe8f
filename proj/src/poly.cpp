#include "gdd/poly.hpp"

#include <algorithm>
#include <sstream>

namespace gdd {

PolyRingPtr PolyRing::make(FieldSpecPtr spec, std::vector<std::string> vars) {
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) fail(ErrorCode::InvalidArgument, "duplicate variable name " + vars[i]);
    return PolyRingPtr(new PolyRing(std::move(spec), std::move(vars)));
}

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

bool PolyRing::same(const PolyRing& o) const {
    return spec_->same(*o.spec_) && vars_ == o.vars_;
}

bool GradedLexLess::operator()(const Mono& a, const Mono& b) const {
    uint64_t da = 0, db = 0;
    for (uint32_t e : a) da += e;
    for (uint32_t e : b) db += e;
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MultiPoly MultiPoly::zero(const PolyRingPtr& ring) { return MultiPoly(ring); }

MultiPoly MultiPoly::constant(const PolyRingPtr& ring, const FieldElement& c) {
    MultiPoly r(ring);
    if (!c.is_zero()) r.terms_.emplace(Mono(ring->arity(), 0), c);
    return r;
}

MultiPoly MultiPoly::constant(const PolyRingPtr& ring, int64_t c) {
    return constant(ring, FieldElement::from_int(ring->spec(), c));
}

MultiPoly MultiPoly::variable(const PolyRingPtr& ring, size_t var) {
    Mono m(ring->arity(), 0);
    m.at(var) = 1;
    return monomial(ring, std::move(m), FieldElement::one(ring->spec()));
}

MultiPoly MultiPoly::variable(const PolyRingPtr& ring, const std::string& name) {
    int idx = ring->var_index(name);
    if (idx < 0) fail(ErrorCode::InvalidArgument, "unknown variable " + name);
    return variable(ring, static_cast<size_t>(idx));
}

MultiPoly MultiPoly::monomial(const PolyRingPtr& ring, Mono m, const FieldElement& c) {
    if (m.size() != ring->arity()) fail(ErrorCode::InvalidArgument, "monomial arity mismatch");
    MultiPoly r(ring);
    if (!c.is_zero()) r.terms_.emplace(std::move(m), c);
    return r;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Mono& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](uint32_t e) { return e == 0; });
}

FieldElement MultiPoly::constant_value() const {
    if (terms_.empty()) return FieldElement::zero(ring_->spec());
    if (!is_constant()) fail(ErrorCode::InvalidArgument, "polynomial is not constant");
    return terms_.begin()->second;
}

int64_t MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Mono& m = terms_.rbegin()->first;
    int64_t d = 0;
    for (uint32_t e : m) d += e;
    return d;
}

int64_t MultiPoly::degree_in(size_t var) const {
    int64_t d = -1;
    for (const auto& [m, c] : terms_) d = std::max<int64_t>(d, m[var]);
    return terms_.empty() ? -1 : d;
}

std::pair<Mono, FieldElement> MultiPoly::leading_term() const {
    if (terms_.empty()) fail(ErrorCode::InvalidArgument, "leading term of zero polynomial");
    return *terms_.rbegin();
}

void MultiPoly::check_same_ring(const MultiPoly& o) const {
    if (ring_.get() == o.ring_.get()) return;
    if (!ring_ || !o.ring_ || !ring_->same(*o.ring_))
        fail(ErrorCode::SpecMismatch, "operands belong to different polynomial rings");
}

void MultiPoly::add_term(const Mono& m, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        FieldElement s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_ring(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_same_ring(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_ring(o);
    MultiPoly r(ring_);
    Mono prod(ring_->arity(), 0);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (size_t i = 0; i < prod.size(); ++i) prod[i] = ma[i] + mb[i];
            r.add_term(prod, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
    MultiPoly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

MultiPoly MultiPoly::pow(uint32_t e) const {
    MultiPoly r = constant(ring_, 1);
    MultiPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    check_same_ring(o);
    return terms_ == o.terms_;
}

FieldElement MultiPoly::eval(const std::vector<FieldElement>& point) const {
    if (point.size() != ring_->arity()) fail(ErrorCode::InvalidArgument, "evaluation point arity mismatch");
    FieldElement acc = FieldElement::zero(ring_->spec());
    for (const auto& [m, c] : terms_) {
        FieldElement t = c;
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) t = t * point[i].pow(m[i]);
        acc = acc + t;
    }
    return acc;
}

MultiPoly MultiPoly::subst(size_t var, const MultiPoly& value) const {
    check_same_ring(value);
    // group by var-degree, then Horner
    std::vector<MultiPoly> by_deg = coeffs_in(var);
    MultiPoly acc = zero(ring_);
    for (size_t d = by_deg.size(); d-- > 0;) acc = acc * value + by_deg[d];
    return acc;
}

MultiPoly MultiPoly::coefficient_in(size_t var, uint32_t deg) const {
    MultiPoly r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m[var] != deg) continue;
        Mono m2 = m;
        m2[var] = 0;
        r.terms_.emplace(std::move(m2), c);
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(size_t var) const {
    int64_t d = degree_in(var);
    std::vector<MultiPoly> out;
    out.reserve(static_cast<size_t>(d + 1));
    for (int64_t i = 0; i <= std::max<int64_t>(d, 0); ++i) out.push_back(MultiPoly(ring_));
    if (terms_.empty()) return out;
    for (const auto& [m, c] : terms_) {
        Mono m2 = m;
        uint32_t e = m2[var];
        m2[var] = 0;
        out[e].terms_.emplace(std::move(m2), c);
    }
    return out;
}

MultiPoly MultiPoly::from_coeffs_in(const PolyRingPtr& ring, size_t var,
                                    const std::vector<MultiPoly>& coeffs) {
    MultiPoly r(ring);
    for (size_t d = 0; d < coeffs.size(); ++d) {
        for (const auto& [m, c] : coeffs[d].terms_) {
            Mono m2 = m;
            m2[var] += static_cast<uint32_t>(d);
            r.add_term(m2, c);
        }
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::divided_exact_by(const MultiPoly& divisor) const {
    check_same_ring(divisor);
    if (divisor.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero polynomial");
    MultiPoly q(ring_);
    MultiPoly r = *this;
    const auto [lm, lc] = divisor.leading_term();
    while (!r.is_zero()) {
        const auto [rm, rc] = r.leading_term();
        Mono qm(ring_->arity(), 0);
        bool divides = true;
        for (size_t i = 0; i < qm.size(); ++i) {
            if (rm[i] < lm[i]) {
                divides = false;
                break;
            }
            qm[i] = rm[i] - lm[i];
        }
        if (!divides) return std::nullopt;
        FieldElement qc = rc / lc;
        MultiPoly t = monomial(ring_, qm, qc);
        q = q + t;
        r = r - t * divisor;
    }
    return q;
}

MultiPoly MultiPoly::normalized_lead() const {
    if (is_zero()) return *this;
    return scaled(leading_term().second.inverse());
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        first = false;
        os << c.to_string();
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            os << "*" << ring_->vars()[i];
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, size_t var) {
    int64_t db = b.degree_in(var);
    if (db < 1) fail(ErrorCode::InvalidArgument, "pseudo_rem needs positive degree divisor");
    MultiPoly lc_b = b.coefficient_in(var, static_cast<uint32_t>(db));
    MultiPoly r = a;
    const PolyRingPtr& ring = a.ring();
    int64_t da = a.degree_in(var);
    int64_t mults = 0; // classic prem multiplies a by lc_b^(da-db+1) overall
    int64_t dr;
    while (!r.is_zero() && (dr = r.degree_in(var)) >= db) {
        MultiPoly lc_r = r.coefficient_in(var, static_cast<uint32_t>(dr));
        Mono shift(ring->arity(), 0);
        shift[var] = static_cast<uint32_t>(dr - db);
        MultiPoly xs = MultiPoly::monomial(ring, shift, FieldElement::one(ring->spec()));
        r = r * lc_b - b * lc_r * xs;
        ++mults;
    }
    for (int64_t i = mults; i < da - db + 1; ++i) r = r * lc_b;
    return r;
}

MultiPoly resultant_in(const MultiPoly& a, const MultiPoly& b, size_t var) {
    const PolyRingPtr& ring = a.ring();
    int64_t m = a.degree_in(var), n = b.degree_in(var);
    if (m < 0 || n < 0) fail(ErrorCode::InvalidArgument, "resultant of the zero polynomial");
    if (m == 0 && n == 0) return MultiPoly::constant(ring, 1);
    size_t N = static_cast<size_t>(m + n);
    auto ac = a.coeffs_in(var);
    auto bc = b.coeffs_in(var);
    std::vector<std::vector<MultiPoly>> M(N, std::vector<MultiPoly>(N, MultiPoly::zero(ring)));
    for (int64_t r = 0; r < n; ++r)
        for (int64_t c = 0; c <= m; ++c) M[static_cast<size_t>(r)][static_cast<size_t>(r + m - c)] = ac[static_cast<size_t>(c)];
    for (int64_t r = 0; r < m; ++r)
        for (int64_t c = 0; c <= n; ++c) M[static_cast<size_t>(n + r)][static_cast<size_t>(r + n - c)] = bc[static_cast<size_t>(c)];
    MultiPoly prev = MultiPoly::constant(ring, 1);
    int sign = 1;
    for (size_t k = 0; k + 1 < N; ++k) {
        if (M[k][k].is_zero()) {
            size_t sr = k + 1;
            while (sr < N && M[sr][k].is_zero()) ++sr;
            if (sr == N) return MultiPoly::zero(ring);
            std::swap(M[k], M[sr]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < N; ++i) {
            for (size_t j = k + 1; j < N; ++j) {
                MultiPoly numer = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                auto q = numer.divided_exact_by(prev);
                if (!q) fail(ErrorCode::InvalidArgument, "fraction-free elimination failed");
                M[i][j] = *q;
            }
            M[i][k] = MultiPoly::zero(ring);
        }
        prev = M[k][k];
    }
    MultiPoly det = M[N - 1][N - 1];
    return sign < 0 ? -det : det;
}

MultiPoly content_in(const MultiPoly& a, size_t var) {
    MultiPoly g = MultiPoly::zero(a.ring());
    for (const MultiPoly& c : a.coeffs_in(var)) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return b.normalized_lead();
    if (b.is_zero()) return a.normalized_lead();
    const PolyRingPtr& ring = a.ring();
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(ring, 1);

    // main variable: first variable appearing in either operand
    size_t var = 0;
    for (size_t i = 0; i < ring->arity(); ++i) {
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
            var = i;
            break;
        }
    }
    int64_t da = a.degree_in(var);
    int64_t db = b.degree_in(var);
    if (da == 0) {
        // `a` does not involve var; gcd(a, b) = gcd(a, content_var(b))
        return poly_gcd(a, content_in(b, var));
    }
    if (db == 0) return poly_gcd(content_in(a, var), b);

    // exact-divisibility fast paths (common in normalization call sites)
    if (da >= db && a.divided_exact_by(b).has_value()) return b.normalized_lead();
    if (db >= da && b.divided_exact_by(a).has_value()) return a.normalized_lead();

    MultiPoly ca = content_in(a, var);
    MultiPoly cb = content_in(b, var);
    MultiPoly cont = poly_gcd(ca, cb);
    MultiPoly pa = *a.divided_exact_by(ca);
    MultiPoly pb = *b.divided_exact_by(cb);
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

    // subresultant PRS: divide each pseudo-remainder by the predicted factor
    MultiPoly g = MultiPoly::constant(ring, 1);
    MultiPoly h = MultiPoly::constant(ring, 1);
    for (;;) {
        int64_t delta = pa.degree_in(var) - pb.degree_in(var);
        MultiPoly r = pseudo_rem(pa, pb, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            pb = MultiPoly::constant(ring, 1);
            break;
        }
        MultiPoly divisor = g;
        for (int64_t i = 0; i < delta; ++i) divisor = divisor * h;
        pa = std::move(pb);
        pb = *r.divided_exact_by(divisor);
        g = pa.coefficient_in(var, static_cast<uint32_t>(pa.degree_in(var)));
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            MultiPoly gd = g;
            for (int64_t i = 1; i < delta; ++i) gd = gd * g;
            MultiPoly hd = h;
            for (int64_t i = 2; i < delta; ++i) hd = hd * h;
            h = *gd.divided_exact_by(hd);
        }
    }
    if (pb.degree_in(var) > 0) pb = *pb.divided_exact_by(content_in(pb, var));
    return (cont * pb).normalized_lead();
}

} // namespace gdd
