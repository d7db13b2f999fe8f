#include "gdd/datum.hpp"

#include <algorithm>
#include <sstream>

namespace gdd {

namespace {
int64_t mod(int64_t a, int64_t p) {
    int64_t r = a % p;
    return r < 0 ? r + p : r;
}
} // namespace

CharacterizingDatum::CharacterizingDatum(FieldSpecPtr spec, std::vector<DatumPair> pairs)
    : spec_(std::move(spec)), pairs_(std::move(pairs)) {
    for (auto& pr : pairs_) {
        if (!pr.pole.spec()->same(*spec_))
            fail(ErrorCode::SpecMismatch, "pole does not belong to the datum's field");
        pr.residue = mod(pr.residue, spec_->p());
    }
}

std::vector<FieldElement> CharacterizingDatum::poles() const {
    std::vector<FieldElement> out;
    out.reserve(pairs_.size());
    for (const auto& pr : pairs_) out.push_back(pr.pole);
    return out;
}

std::vector<int64_t> CharacterizingDatum::residues() const {
    std::vector<int64_t> out;
    out.reserve(pairs_.size());
    for (const auto& pr : pairs_) out.push_back(pr.residue);
    return out;
}

CharacterizingDatum CharacterizingDatum::sorted() const {
    std::vector<DatumPair> ps = pairs_;
    std::sort(ps.begin(), ps.end(), [](const DatumPair& a, const DatumPair& b) {
        if (a.pole != b.pole) return a.pole < b.pole;
        return a.residue < b.residue;
    });
    return CharacterizingDatum(spec_, std::move(ps));
}

bool CharacterizingDatum::operator==(const CharacterizingDatum& o) const {
    if (!spec_->same(*o.spec_) || pairs_.size() != o.pairs_.size()) return false;
    for (size_t i = 0; i < pairs_.size(); ++i)
        if (pairs_[i].pole != o.pairs_[i].pole || pairs_[i].residue != o.pairs_[i].residue)
            return false;
    return true;
}

bool CharacterizingDatum::operator<(const CharacterizingDatum& o) const {
    if (pairs_.size() != o.pairs_.size()) return pairs_.size() < o.pairs_.size();
    for (size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].pole != o.pairs_[i].pole) return pairs_[i].pole < o.pairs_[i].pole;
        if (pairs_[i].residue != o.pairs_[i].residue) return pairs_[i].residue < o.pairs_[i].residue;
    }
    return false;
}

DatumVerdict verify_datum(const CharacterizingDatum& d) {
    DatumVerdict out;
    const FieldSpecPtr& spec = d.spec();
    const int64_t p = spec->p();
    const auto& pairs = d.pairs();

    for (size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].residue % p == 0) {
            out.violations.push_back({ViolationKind::ResidueZero, -1, static_cast<int64_t>(i), -1,
                                      "residue at index " + std::to_string(i) + " is 0 mod p"});
        }
    }

    int64_t hsum = 0;
    for (const auto& pr : pairs) hsum = mod(hsum + pr.residue, p);
    if (hsum != 0)
        out.violations.push_back({ViolationKind::ResidueSumNonzero, -1, -1, -1,
                                  "sum of residues is " + std::to_string(hsum) + " mod p"});

    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j)
            if (pairs[i].pole == pairs[j].pole)
                out.violations.push_back({ViolationKind::DuplicatePoles, -1, static_cast<int64_t>(i),
                                          static_cast<int64_t>(j),
                                          "poles at indices " + std::to_string(i) + " and " +
                                              std::to_string(j) + " coincide"});

    const int64_t m = d.m();
    for (int64_t k = 1; k <= m - 1; ++k) {
        FieldElement s = FieldElement::zero(spec);
        for (const auto& pr : pairs)
            s = s + FieldElement::from_int(spec, pr.residue) * pr.pole.pow(k);
        if (!s.is_zero())
            out.violations.push_back({ViolationKind::MomentNonzero, k, -1, -1,
                                      "moment sum for k = " + std::to_string(k) + " is " +
                                          s.to_string()});
    }

    FieldElement u = FieldElement::zero(spec);
    if (m >= 0) {
        for (const auto& pr : pairs)
            u = u + FieldElement::from_int(spec, pr.residue) * pr.pole.pow(m);
    }
    if (u.is_zero())
        out.violations.push_back(
            {ViolationKind::LeadingMomentZero, m, -1, -1, "leading moment u vanishes"});

    out.valid = out.violations.empty();
    out.u = u;
    return out;
}

MultiPoly numerator_oracle(const CharacterizingDatum& d) {
    const auto& pairs = d.pairs();
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j)
            if (pairs[i].pole == pairs[j].pole)
                fail(ErrorCode::DuplicatePoles, "numerator oracle needs pairwise distinct poles");
    const FieldSpecPtr& spec = d.spec();
    PolyRingPtr ring = PolyRing::make(spec, {"X"});
    MultiPoly X = MultiPoly::variable(ring, size_t{0});
    MultiPoly acc = MultiPoly::zero(ring);
    for (size_t i = 0; i < pairs.size(); ++i) {
        MultiPoly prod = MultiPoly::constant(ring, pairs[i].residue);
        for (size_t j = 0; j < pairs.size(); ++j) {
            if (j == i) continue;
            prod = prod * (X - MultiPoly::constant(ring, pairs[j].pole));
        }
        acc = acc + prod;
    }
    return acc;
}

bool check_homogeneous_relations(const CharacterizingDatum& d, int K) {
    DatumVerdict v = verify_datum(d);
    if (!v.valid) fail(ErrorCode::InvalidDatum, "homogeneous relations need a valid datum");
    const FieldSpecPtr& spec = d.spec();
    const int64_t m = d.m();
    std::vector<FieldElement> xs = d.poles();
    for (int k = 1; k <= K; ++k) {
        FieldElement lhs = FieldElement::zero(spec);
        for (const auto& pr : d.pairs())
            lhs = lhs + FieldElement::from_int(spec, pr.residue) * pr.pole.pow(m + k);
        FieldElement ck = symmetric(spec, xs, k, SymKind::CompleteHomogeneous);
        if (lhs != v.u * ck) return false;
    }
    if (static_cast<int64_t>(d.m_plus_1()) % spec->p() == 0) {
        FieldElement s = FieldElement::zero(spec);
        for (const FieldElement& x : xs) s = s + x;
        if (!s.is_zero()) return false;
    }
    return true;
}

CharacterizingDatum apply_affine(const CharacterizingDatum& d, const FieldElement& alpha,
                                 const FieldElement& beta) {
    if (alpha.is_zero()) fail(ErrorCode::ZeroScale, "affine map needs alpha != 0");
    std::vector<DatumPair> out;
    out.reserve(d.pairs().size());
    for (const auto& pr : d.pairs()) out.push_back({alpha * pr.pole + beta, pr.residue});
    return CharacterizingDatum(d.spec(), std::move(out));
}

CharacterizingDatum scale_residues(const CharacterizingDatum& d, int64_t c) {
    const int64_t p = d.spec()->p();
    if (mod(c, p) == 0) fail(ErrorCode::InvalidArgument, "residue scale must be nonzero mod p");
    std::vector<DatumPair> out;
    out.reserve(d.pairs().size());
    for (const auto& pr : d.pairs()) out.push_back({pr.pole, mod(pr.residue * c, p)});
    return CharacterizingDatum(d.spec(), std::move(out));
}

std::vector<int64_t> residue_type(int64_t p, const std::vector<int64_t>& residues) {
    std::vector<int64_t> type(static_cast<size_t>(p - 1), 0);
    for (int64_t h : residues) {
        int64_t r = mod(h, p);
        if (r == 0) fail(ErrorCode::InvalidArgument, "residue type needs nonzero residues");
        ++type[static_cast<size_t>(r - 1)];
    }
    return type;
}

} // namespace gdd
