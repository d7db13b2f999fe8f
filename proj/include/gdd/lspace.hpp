#pragma once

#include "gdd/datum.hpp"

namespace gdd {

/// Candidate F_p-vector space of dimension two, encoded by its p+1 pole sets
/// X^(0) .. X^(p) (lambda poles each) and the residue maps r1, r2 of the two
/// basis forms at every pole. The combination with coefficient j loses its
/// poles exactly on X^(j), so r1 + j r2 = 0 there; r1 vanishes on X^(0) and
/// r2 on X^(p).
class LSpaceCandidate {
public:
    LSpaceCandidate(int64_t p, int lambda, FieldSpecPtr spec,
                    std::vector<std::vector<FieldElement>> pole_sets,
                    std::vector<std::vector<int64_t>> r1, std::vector<std::vector<int64_t>> r2,
                    FieldElement u, FieldElement v);

    int64_t p() const { return p_; }
    int lambda() const { return lambda_; }
    int64_t m_plus_1() const { return static_cast<int64_t>(lambda_) * p_; }
    const FieldSpecPtr& spec() const { return spec_; }
    const std::vector<std::vector<FieldElement>>& pole_sets() const { return pole_sets_; }
    const std::vector<std::vector<int64_t>>& r1() const { return r1_; }
    const std::vector<std::vector<int64_t>>& r2() const { return r2_; }
    const FieldElement& u() const { return u_; }
    const FieldElement& v() const { return v_; }
    FieldElement a() const { return u_ / v_; }

    /// Residue convention for reports and q-sums: the first form's residues on
    /// X^(1) .. X^(p), the second form's on X^(0).
    int64_t h(int j, int i) const;

    /// Canonical comparison key (deterministic across runs).
    std::string canonical_key() const;

private:
    int64_t p_;
    int lambda_;
    FieldSpecPtr spec_;
    std::vector<std::vector<FieldElement>> pole_sets_;
    std::vector<std::vector<int64_t>> r1_, r2_;
    FieldElement u_, v_;
};

/// The datum of the combination missing X^(j): for j < p the form r1 + j r2,
/// for j = p the second basis form. Throws MalformedCandidate when the
/// combination's residue vanishes at a pole it should keep.
CharacterizingDatum assemble_form(const LSpaceCandidate& c, int j);

struct LSpaceCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct LSpaceReport {
    bool passes = false;
    std::vector<LSpaceCheck> checks;
};

/// Full verification: every assembled combination is a valid datum with the
/// right leading moment, the structural residue/pole invariants hold, the two
/// basis forms share exactly lambda(p-1) poles, and m+1 = lambda p.
LSpaceReport verify_lspace(const LSpaceCandidate& c);

/// (a+j) S_i(X^(j)) = a S_i(X^(0)) + j S_i(X^(p)) for 1 <= i <= lambda,
/// 1 <= j <= p-1.
bool check_symmetric_transfer(const LSpaceCandidate& c);

/// S_1(X^(j)) agrees for every j.
bool check_common_s1(const LSpaceCandidate& c);

/// p = 3 only: q_k(X^(1)) + q_k(X^(2)) + q_k(X^(3)) = 0 and
/// q_k(X^(0)) - q_k(X^(1)) + q_k(X^(2)) = 0 for 0 <= k <= 3 lambda - 2.
bool check_q_relations(const LSpaceCandidate& c);

struct TypeProfile {
    std::vector<std::vector<int64_t>> types; // residue type of each pole set
    bool admissible = true;                  // against the pinned lambda = 2, 5 profiles
    std::string note;
};

/// p = 3 only: residue types of every pole set; for lambda = 2 every set must
/// be (1,1) and for lambda = 5 every set must be (4,1) or (1,4).
TypeProfile type_profile(const LSpaceCandidate& c);

/// Arithmetic shape required of any n-dimensional space: m+1 = lambda p^(n-1).
bool dimension_shape_ok(int64_t p, int n, int64_t m_plus_1);

/// Number of common poles between the two assembled basis forms.
int shared_pole_count(const LSpaceCandidate& c);

/// The datum of c1*omega_1 + c2*omega_2 ((c1, c2) != (0, 0) mod p).
CharacterizingDatum combination_datum(const LSpaceCandidate& c, int64_t c1, int64_t c2);

/// w_j P^(j) = u P^(0) + j v P^(p) as exact polynomials, for all j < p.
bool check_polynomial_identity(const LSpaceCandidate& c);

} // namespace gdd
