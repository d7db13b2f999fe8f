#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdd/poly.hpp"
#include "gdd/symfun.hpp"

namespace gdd {

/// One pole/residue pair; the residue is an integer mod p (0 is representable
/// so that verify_datum can flag it — the parser and searches never emit it).
struct DatumPair {
    FieldElement pole;
    int64_t residue;
};

/// The set {(x_i, h_i)} of poles and residues characterizing one logarithmic
/// form with m+1 = |pairs| simple poles. Validity is decided by verify_datum,
/// never assumed.
class CharacterizingDatum {
public:
    CharacterizingDatum(FieldSpecPtr spec, std::vector<DatumPair> pairs);

    const FieldSpecPtr& spec() const { return spec_; }
    const std::vector<DatumPair>& pairs() const { return pairs_; }
    size_t m_plus_1() const { return pairs_.size(); }
    int64_t m() const { return static_cast<int64_t>(pairs_.size()) - 1; }

    std::vector<FieldElement> poles() const;
    std::vector<int64_t> residues() const;

    /// Pairs sorted by (pole, residue); used by canonical forms.
    CharacterizingDatum sorted() const;
    bool operator==(const CharacterizingDatum& o) const;
    bool operator<(const CharacterizingDatum& o) const;

private:
    FieldSpecPtr spec_;
    std::vector<DatumPair> pairs_;
};

enum class ViolationKind {
    ResidueZero,       // some h_i = 0 mod p
    ResidueSumNonzero, // sum h_i != 0
    DuplicatePoles,    // (**) fails
    MomentNonzero,     // (*) fails for some 1 <= k <= m-1
    LeadingMomentZero, // u = sum h_i x_i^m = 0
};

struct DatumViolation {
    ViolationKind kind;
    int64_t k = -1;       // offending moment degree, when applicable
    int64_t index_a = -1; // offending indices, when applicable
    int64_t index_b = -1;
    std::string message;
};

struct DatumVerdict {
    bool valid = false;
    FieldElement u; // meaningful iff valid (the leading moment)
    std::vector<DatumViolation> violations;
};

/// Checks (i) residues nonzero, (ii) sum h_i = 0, (iii) poles distinct,
/// (iv) sum h_i x_i^k = 0 for 1 <= k <= m-1, (v) u = sum h_i x_i^m != 0.
/// A verdict, not an exception: searches consume invalid candidates at rate.
DatumVerdict verify_datum(const CharacterizingDatum& d);

/// Independent re-derivation: N(X) = sum_i h_i prod_{j != i} (X - x_j).
/// d is valid iff N is the nonzero constant u. Throws DuplicatePoles.
MultiPoly numerator_oracle(const CharacterizingDatum& d);

/// Higher-moment relations: sum h_i x_i^{m+k} = u * c_k for 1 <= k <= K, plus
/// sum x_i = 0 whenever p | m+1. Throws InvalidDatum on invalid input.
bool check_homogeneous_relations(const CharacterizingDatum& d, int K);

/// Poles mapped x -> alpha*x + beta, residues unchanged. Throws ZeroScale.
CharacterizingDatum apply_affine(const CharacterizingDatum& d, const FieldElement& alpha,
                                 const FieldElement& beta);

/// Residues scaled by c in F_p^x (validity-preserving, u -> c*u).
CharacterizingDatum scale_residues(const CharacterizingDatum& d, int64_t c);

/// Residue type (n_1, ..., n_{p-1}): n_i = number of residues equal to i.
std::vector<int64_t> residue_type(int64_t p, const std::vector<int64_t>& residues);

} // namespace gdd
