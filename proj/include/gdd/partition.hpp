#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gdd/errors.hpp"

namespace gdd {

/// An (m+1)-tuple of residues in F_p^x. Entries are reduced mod p and must be
/// nonzero (negative inputs like -1 are accepted and reduced).
class ResidueTuple {
public:
    ResidueTuple(int64_t p, std::vector<int64_t> h);

    int64_t p() const { return p_; }
    const std::vector<int64_t>& values() const { return h_; }
    size_t size() const { return h_.size(); }
    int64_t sum_mod_p() const;

private:
    int64_t p_;
    std::vector<int64_t> h_;
};

/// Disjoint nonempty index subsets covering {0, ..., m}.
struct Partition {
    std::vector<std::vector<size_t>> blocks;
};

/// Every block sums to 0 mod p (and blocks really partition the index set).
bool is_adapted(const ResidueTuple& h, const Partition& P);

/// Adapted with no adapted strict refinement; equivalently every block has no
/// proper nonempty subset summing to 0.
bool is_maximal(const ResidueTuple& h, const Partition& P);

/// All maximal adapted partitions, exhaustively. ResourceLimit above the cap.
std::vector<Partition> enumerate_maximal(const ResidueTuple& h, size_t cap = 12);

/// True iff some maximal adapted partition has size <= floor(m/p) + 1.
/// Pre: sum h_i = 0 mod p (ResidueSumNonzero otherwise). ResourceLimit above cap.
bool partition_condition(const ResidueTuple& h, size_t cap = 12);

/// For |h| = lambda*p: a renumbering into lambda blocks of p equal residues,
/// when one exists. Throws SizeNotMultipleOfP otherwise.
std::optional<Partition> block_structure(const ResidueTuple& h);

} // namespace gdd
