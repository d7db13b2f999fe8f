#include "gdd/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gdd {

namespace {

int64_t mod(int64_t a, int64_t p) {
    int64_t r = a % p;
    return r < 0 ? r + p : r;
}

using Mask = uint32_t;

int64_t mask_sum(const ResidueTuple& h, Mask m) {
    int64_t s = 0;
    for (size_t i = 0; i < h.size(); ++i)
        if (m & (Mask{1} << i)) s += h.values()[i];
    return mod(s, h.p());
}

// A block is irreducible when no proper nonempty subset sums to 0; maximal
// adapted partitions are exactly the covers by irreducible zero-sum blocks.
bool is_irreducible_block(const ResidueTuple& h, Mask m) {
    for (Mask s = (m - 1) & m; s != 0; s = (s - 1) & m)
        if (s != m && mask_sum(h, s) == 0) return false;
    return true;
}

std::vector<Mask> irreducible_zero_sum_masks(const ResidueTuple& h) {
    const size_t n = h.size();
    std::vector<Mask> out;
    for (Mask m = 1; m < (Mask{1} << n); ++m)
        if (mask_sum(h, m) == 0 && is_irreducible_block(h, m)) out.push_back(m);
    return out;
}

void check_cap(const ResidueTuple& h, size_t cap) {
    if (h.size() > std::min<size_t>(cap, 20))
        fail(ErrorCode::ResourceLimit, "partition enumeration capped at " +
                                           std::to_string(std::min<size_t>(cap, 20)) +
                                           " residues, got " + std::to_string(h.size()));
}

} // namespace

ResidueTuple::ResidueTuple(int64_t p, std::vector<int64_t> h) : p_(p), h_(std::move(h)) {
    if (p_ < 2) fail(ErrorCode::InvalidArgument, "p must be >= 2");
    for (auto& v : h_) {
        v = mod(v, p_);
        if (v == 0) fail(ErrorCode::InvalidArgument, "residue tuple entries must be nonzero mod p");
    }
}

int64_t ResidueTuple::sum_mod_p() const {
    int64_t s = 0;
    for (int64_t v : h_) s += v;
    return mod(s, p_);
}

bool is_adapted(const ResidueTuple& h, const Partition& P) {
    std::vector<bool> seen(h.size(), false);
    for (const auto& block : P.blocks) {
        if (block.empty()) return false;
        int64_t s = 0;
        for (size_t i : block) {
            if (i >= h.size() || seen[i]) return false;
            seen[i] = true;
            s += h.values()[i];
        }
        if (mod(s, h.p()) != 0) return false;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool is_maximal(const ResidueTuple& h, const Partition& P) {
    if (!is_adapted(h, P)) return false;
    for (const auto& block : P.blocks) {
        Mask m = 0;
        for (size_t i : block) m |= Mask{1} << i;
        if (!is_irreducible_block(h, m)) return false;
    }
    return true;
}

std::vector<Partition> enumerate_maximal(const ResidueTuple& h, size_t cap) {
    check_cap(h, cap);
    std::vector<Mask> blocks = irreducible_zero_sum_masks(h);
    std::vector<Partition> out;
    std::vector<Mask> chosen;
    const Mask full = (Mask{1} << h.size()) - 1;

    std::function<void(Mask)> rec = [&](Mask remaining) {
        if (remaining == 0) {
            Partition P;
            for (Mask bm : chosen) {
                std::vector<size_t> idx;
                for (size_t i = 0; i < h.size(); ++i)
                    if (bm & (Mask{1} << i)) idx.push_back(i);
                P.blocks.push_back(std::move(idx));
            }
            out.push_back(std::move(P));
            return;
        }
        Mask lowest = remaining & (~remaining + 1);
        for (Mask bm : blocks) {
            if (!(bm & lowest)) continue;
            if ((bm & remaining) != bm) continue;
            chosen.push_back(bm);
            rec(remaining & ~bm);
            chosen.pop_back();
        }
    };
    rec(full);
    return out;
}

bool partition_condition(const ResidueTuple& h, size_t cap) {
    if (h.sum_mod_p() != 0)
        fail(ErrorCode::ResidueSumNonzero, "partition condition needs sum h_i = 0 mod p");
    check_cap(h, cap);
    const size_t n = h.size();
    const int64_t m = static_cast<int64_t>(n) - 1;
    const int64_t bound = m / h.p() + 1;

    std::vector<Mask> blocks = irreducible_zero_sum_masks(h);
    const Mask full = (Mask{1} << n) - 1;
    // dp[mask] = least number of irreducible zero-sum blocks covering mask
    std::vector<int> dp(static_cast<size_t>(full) + 1, -1);
    dp[0] = 0;
    for (Mask mask = 1; mask <= full; ++mask) {
        Mask lowest = mask & (~mask + 1);
        int best = -1;
        for (Mask bm : blocks) {
            if (!(bm & lowest) || (bm & mask) != bm) continue;
            int sub = dp[mask & ~bm];
            if (sub < 0) continue;
            if (best < 0 || sub + 1 < best) best = sub + 1;
        }
        dp[mask] = best;
    }
    return dp[full] >= 0 && dp[full] <= bound;
}

std::optional<Partition> block_structure(const ResidueTuple& h) {
    const int64_t p = h.p();
    if (static_cast<int64_t>(h.size()) % p != 0)
        fail(ErrorCode::SizeNotMultipleOfP,
             "block structure needs |h| to be a multiple of p, got " + std::to_string(h.size()));
    std::map<int64_t, std::vector<size_t>> by_value;
    for (size_t i = 0; i < h.size(); ++i) by_value[h.values()[i]].push_back(i);
    for (const auto& [v, idx] : by_value)
        if (static_cast<int64_t>(idx.size()) % p != 0) return std::nullopt;
    Partition P;
    for (const auto& [v, idx] : by_value)
        for (size_t off = 0; off < idx.size(); off += static_cast<size_t>(p))
            P.blocks.emplace_back(idx.begin() + off, idx.begin() + off + static_cast<size_t>(p));
    return P;
}

} // namespace gdd
