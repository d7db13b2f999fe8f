#include "gdd/lspace.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gdd {

namespace {
int64_t mod(int64_t a, int64_t p) {
    int64_t r = a % p;
    return r < 0 ? r + p : r;
}
} // namespace

LSpaceCandidate::LSpaceCandidate(int64_t p, int lambda, FieldSpecPtr spec,
                                 std::vector<std::vector<FieldElement>> pole_sets,
                                 std::vector<std::vector<int64_t>> r1,
                                 std::vector<std::vector<int64_t>> r2, FieldElement u,
                                 FieldElement v)
    : p_(p),
      lambda_(lambda),
      spec_(std::move(spec)),
      pole_sets_(std::move(pole_sets)),
      r1_(std::move(r1)),
      r2_(std::move(r2)),
      u_(std::move(u)),
      v_(std::move(v)) {
    size_t sets = static_cast<size_t>(p_) + 1;
    if (pole_sets_.size() != sets || r1_.size() != sets || r2_.size() != sets)
        fail(ErrorCode::MalformedCandidate, "candidate needs p+1 pole sets with residue maps");
    for (size_t j = 0; j < sets; ++j) {
        if (pole_sets_[j].size() != static_cast<size_t>(lambda_) ||
            r1_[j].size() != static_cast<size_t>(lambda_) ||
            r2_[j].size() != static_cast<size_t>(lambda_))
            fail(ErrorCode::MalformedCandidate, "every pole set needs lambda poles and residues");
        for (auto& h : r1_[j]) h = mod(h, p_);
        for (auto& h : r2_[j]) h = mod(h, p_);
    }
}

int64_t LSpaceCandidate::h(int j, int i) const {
    if (j < 0 || j > p_ || i < 0 || i >= lambda_)
        fail(ErrorCode::InvalidArgument, "residue index out of range");
    if (j == 0) return r2_[0][static_cast<size_t>(i)];
    return r1_[static_cast<size_t>(j)][static_cast<size_t>(i)];
}

std::string LSpaceCandidate::canonical_key() const {
    std::ostringstream os;
    os << p_ << "|" << lambda_ << "|" << spec_->to_string() << "|u=" << u_.to_string()
       << "|v=" << v_.to_string();
    for (size_t j = 0; j < pole_sets_.size(); ++j) {
        std::vector<std::tuple<FieldElement, int64_t, int64_t>> rows;
        for (size_t i = 0; i < pole_sets_[j].size(); ++i)
            rows.emplace_back(pole_sets_[j][i], r1_[j][i], r2_[j][i]);
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
            if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
            return std::get<2>(a) < std::get<2>(b);
        });
        os << "|X" << j << ":";
        for (const auto& [pole, h1, h2] : rows)
            os << pole.to_string() << "/" << h1 << "/" << h2 << ";";
    }
    return os.str();
}

CharacterizingDatum assemble_form(const LSpaceCandidate& c, int j) {
    if (j < 0 || j > c.p()) fail(ErrorCode::InvalidArgument, "combination index out of range");
    std::vector<DatumPair> pairs;
    for (int s = 0; s <= c.p(); ++s) {
        if (s == j) continue;
        for (int i = 0; i < c.lambda(); ++i) {
            int64_t res;
            if (j == c.p())
                res = c.r2()[static_cast<size_t>(s)][static_cast<size_t>(i)];
            else
                res = mod(c.r1()[static_cast<size_t>(s)][static_cast<size_t>(i)] +
                              j * c.r2()[static_cast<size_t>(s)][static_cast<size_t>(i)],
                          c.p());
            if (res == 0)
                fail(ErrorCode::MalformedCandidate,
                     "combination " + std::to_string(j) + " loses a pole outside its excluded set");
            pairs.push_back({c.pole_sets()[static_cast<size_t>(s)][static_cast<size_t>(i)], res});
        }
    }
    return CharacterizingDatum(c.spec(), std::move(pairs));
}

LSpaceReport verify_lspace(const LSpaceCandidate& c) {
    LSpaceReport rep;
    auto check = [&](const std::string& name, bool ok, const std::string& detail) {
        rep.checks.push_back({name, ok, detail});
    };
    const int64_t p = c.p();
    const FieldSpecPtr& spec = c.spec();

    // structural invariants
    {
        bool distinct = true;
        std::set<FieldElement> seen;
        for (const auto& set : c.pole_sets())
            for (const auto& x : set)
                if (!seen.insert(x).second) distinct = false;
        check("poles pairwise distinct", distinct,
              std::to_string(seen.size()) + " distinct of " +
                  std::to_string((p + 1) * c.lambda()));
    }
    {
        bool ok = true;
        std::string bad;
        for (int s = 0; s <= p && ok; ++s)
            for (int i = 0; i < c.lambda() && ok; ++i) {
                int64_t h1 = c.r1()[static_cast<size_t>(s)][static_cast<size_t>(i)];
                int64_t h2 = c.r2()[static_cast<size_t>(s)][static_cast<size_t>(i)];
                // r1 vanishes exactly on X^(0), r2 exactly on X^(p)
                if ((h1 == 0) != (s == 0)) ok = false;
                if ((h2 == 0) != (s == p)) ok = false;
                // the combination j loses its poles exactly on X^(j)
                for (int j = 0; j < p && ok; ++j) {
                    bool zero = mod(h1 + j * h2, p) == 0;
                    if (zero != (s == j)) ok = false;
                }
                if (!ok) bad = "set " + std::to_string(s) + ", index " + std::to_string(i);
            }
        check("residue maps vanish exactly where required", ok, bad);
    }
    {
        bool ok = !c.u().is_zero() && !c.v().is_zero();
        FieldElement a = ok ? c.a() : FieldElement::zero(spec);
        bool outside = ok && !a.in_prime_field();
        check("u, v nonzero and a = u/v outside F_p", ok && outside,
              ok ? "a = " + a.to_string() : "u or v is zero");
    }

    // every combination passes the datum verdict with the right leading moment
    for (int j = 0; j <= p; ++j) {
        bool ok = true;
        std::string detail;
        try {
            CharacterizingDatum d = assemble_form(c, j);
            DatumVerdict v = verify_datum(d);
            ok = v.valid;
            if (!v.valid) {
                detail = "invalid datum (" + std::to_string(v.violations.size()) + " violations)";
            } else {
                FieldElement expect =
                    j == c.p() ? c.v()
                               : c.u() + FieldElement::from_int(spec, j) * c.v();
                if (v.u != expect) {
                    ok = false;
                    detail = "leading moment " + v.u.to_string() + " differs from " +
                             expect.to_string();
                }
            }
        } catch (const Error& e) {
            ok = false;
            detail = e.what();
        }
        check("combination " + std::to_string(j) + " is a valid datum", ok, detail);
    }

    // shared poles between the two basis forms
    {
        int shared = shared_pole_count(c);
        int64_t expect = static_cast<int64_t>(c.lambda()) * (p - 1);
        check("basis forms share lambda(p-1) poles", shared == expect,
              std::to_string(shared) + " shared, expected " + std::to_string(expect));
    }
    check("m+1 = lambda p", c.m_plus_1() == static_cast<int64_t>(c.lambda()) * p, "");

    rep.passes = std::all_of(rep.checks.begin(), rep.checks.end(),
                             [](const LSpaceCheck& ch) { return ch.passed; });
    return rep;
}

bool check_symmetric_transfer(const LSpaceCandidate& c) {
    const FieldSpecPtr& spec = c.spec();
    FieldElement a = c.a();
    for (int j = 1; j < c.p(); ++j) {
        FieldElement jf = FieldElement::from_int(spec, j);
        for (int i = 1; i <= c.lambda(); ++i) {
            FieldElement sj = symmetric(spec, c.pole_sets()[static_cast<size_t>(j)], i,
                                        SymKind::Elementary);
            FieldElement s0 = symmetric(spec, c.pole_sets()[0], i, SymKind::Elementary);
            FieldElement sp = symmetric(spec, c.pole_sets()[static_cast<size_t>(c.p())], i,
                                        SymKind::Elementary);
            if ((a + jf) * sj != a * s0 + jf * sp) return false;
        }
    }
    return true;
}

bool check_common_s1(const LSpaceCandidate& c) {
    const FieldSpecPtr& spec = c.spec();
    FieldElement s1 = symmetric(spec, c.pole_sets()[0], 1, SymKind::Elementary);
    for (int j = 1; j <= c.p(); ++j)
        if (symmetric(spec, c.pole_sets()[static_cast<size_t>(j)], 1, SymKind::Elementary) != s1)
            return false;
    return true;
}

namespace {
FieldElement q_sum(const LSpaceCandidate& c, int j, int64_t k) {
    FieldElement acc = FieldElement::zero(c.spec());
    for (int i = 0; i < c.lambda(); ++i) {
        FieldElement h = FieldElement::from_int(c.spec(), c.h(j, i));
        acc = acc + h * c.pole_sets()[static_cast<size_t>(j)][static_cast<size_t>(i)].pow(k);
    }
    return acc;
}
} // namespace

bool check_q_relations(const LSpaceCandidate& c) {
    if (c.p() != 3) fail(ErrorCode::WrongPrime, "q-relations are pinned to p = 3");
    for (int64_t k = 0; k <= 3 * c.lambda() - 2; ++k) {
        FieldElement q0 = q_sum(c, 0, k), q1 = q_sum(c, 1, k), q2 = q_sum(c, 2, k),
                     q3 = q_sum(c, 3, k);
        if (!(q1 + q2 + q3).is_zero()) return false;
        if (!(q0 - q1 + q2).is_zero()) return false;
    }
    return true;
}

TypeProfile type_profile(const LSpaceCandidate& c) {
    if (c.p() != 3) fail(ErrorCode::WrongPrime, "type profiles are pinned to p = 3");
    TypeProfile out;
    for (int j = 0; j <= c.p(); ++j) {
        std::vector<int64_t> hs;
        for (int i = 0; i < c.lambda(); ++i) hs.push_back(c.h(j, i));
        out.types.push_back(residue_type(c.p(), hs));
    }
    auto is_type = [](const std::vector<int64_t>& t, int64_t n1, int64_t n2) {
        return t[0] == n1 && t[1] == n2;
    };
    if (c.lambda() == 2) {
        for (const auto& t : out.types)
            if (!is_type(t, 1, 1)) {
                out.admissible = false;
                out.note = "a pole set deviates from type (1,1)";
            }
    } else if (c.lambda() == 5) {
        for (const auto& t : out.types)
            if (!is_type(t, 4, 1) && !is_type(t, 1, 4)) {
                out.admissible = false;
                out.note = "a pole set deviates from type (4,1)/(1,4)";
            }
    } else {
        out.note = "no pinned profile for lambda = " + std::to_string(c.lambda());
    }
    return out;
}

bool dimension_shape_ok(int64_t p, int n, int64_t m_plus_1) {
    if (n < 1 || m_plus_1 < 1) return false;
    int64_t q = 1;
    for (int i = 0; i + 1 < n; ++i) q *= p;
    return m_plus_1 % q == 0;
}

int shared_pole_count(const LSpaceCandidate& c) {
    std::set<FieldElement> omega1;
    for (int s = 1; s <= c.p(); ++s)
        for (const auto& x : c.pole_sets()[static_cast<size_t>(s)]) omega1.insert(x);
    int shared = 0;
    for (int s = 0; s < c.p(); ++s)
        for (const auto& x : c.pole_sets()[static_cast<size_t>(s)])
            if (omega1.count(x)) ++shared;
    return shared;
}

CharacterizingDatum combination_datum(const LSpaceCandidate& c, int64_t c1, int64_t c2) {
    const int64_t p = c.p();
    c1 = mod(c1, p);
    c2 = mod(c2, p);
    if (c1 == 0 && c2 == 0)
        fail(ErrorCode::InvalidArgument, "combination coefficients must not both vanish");
    std::vector<DatumPair> pairs;
    for (int s = 0; s <= p; ++s) {
        for (int i = 0; i < c.lambda(); ++i) {
            int64_t res = mod(c1 * c.r1()[static_cast<size_t>(s)][static_cast<size_t>(i)] +
                                  c2 * c.r2()[static_cast<size_t>(s)][static_cast<size_t>(i)],
                              p);
            if (res != 0)
                pairs.push_back(
                    {c.pole_sets()[static_cast<size_t>(s)][static_cast<size_t>(i)], res});
        }
    }
    return CharacterizingDatum(c.spec(), std::move(pairs));
}

bool check_polynomial_identity(const LSpaceCandidate& c) {
    const FieldSpecPtr& spec = c.spec();
    MultiPoly p0 = poly_from_roots(spec, c.pole_sets()[0]);
    MultiPoly pp = poly_from_roots(spec, c.pole_sets()[static_cast<size_t>(c.p())]);
    for (int j = 0; j < c.p(); ++j) {
        MultiPoly pj = poly_from_roots(spec, c.pole_sets()[static_cast<size_t>(j)]);
        FieldElement jf = FieldElement::from_int(spec, j);
        FieldElement wj = c.u() + jf * c.v();
        MultiPoly lhs = pj.scaled(wj);
        MultiPoly rhs = p0.scaled(c.u()) + pp.scaled(jf * c.v());
        if (!(lhs == rhs)) return false;
    }
    return true;
}

} // namespace gdd
