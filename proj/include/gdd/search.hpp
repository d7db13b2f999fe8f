#pragma once

#include <atomic>
#include <string>
#include <vector>

#include "gdd/lspace.hpp"
#include "gdd/partition.hpp"

namespace gdd {

struct SearchOptions {
    int64_t node_budget = 50'000'000;
    int shards = 1;
    int64_t field_order_limit = 729; // 3^6 default ceiling, explicit override
    bool all_residue_assignments = false;
    std::string checkpoint_path; // empty: no checkpointing
};

/// Cooperative interruption; the CLI sets it from a signal handler. A search
/// that observes the flag writes its checkpoint (when configured) and throws
/// ResourceLimit.
std::atomic<bool>& search_interrupt_flag();

/// Every valid characterizing datum with the given residue tuple, one
/// canonical representative per affine orbit, deterministically ordered.
/// Backtracks over pole assignments with partial moment pruning.
std::vector<CharacterizingDatum> search_datum(const FieldSpecPtr& spec, const ResidueTuple& h,
                                              const SearchOptions& opts = {});

/// Candidate two-dimensional spaces at p = 3 over F_{3^k}, k <= k_max.
/// X^(1), X^(2) are derived from (a, X^(0), X^(3)) through the vanishing
/// polynomial relation instead of being enumerated; every emitted candidate
/// passes verify_lspace.
std::vector<LSpaceCandidate> search_lspace(int lambda, int k_max, const SearchOptions& opts = {});

/// Canonical representative of a datum's affine orbit: a deterministic
/// translation set, the least achievable scaled form, pairs sorted. Idempotent;
/// orbit-mates normalize identically. Throws DegenerateOrbit when no pole can
/// be scaled to 1.
CharacterizingDatum normalize_datum(const CharacterizingDatum& d);

/// Canonical representative of a candidate under the affine maps preserving
/// the search normal form (first symmetric functions zero, 1 in X^(0)).
LSpaceCandidate normalize_lspace(const LSpaceCandidate& c);

} // namespace gdd
