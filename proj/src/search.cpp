#include "gdd/search.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <mutex>
#include <set>
#include <sstream>

#include "gdd/formats.hpp"
#include "gdd/symfun.hpp"

namespace gdd {

namespace {

int64_t mod(int64_t a, int64_t p) {
    int64_t r = a % p;
    return r < 0 ? r + p : r;
}

struct Budget {
    std::atomic<int64_t> used{0};
    int64_t limit;
    std::atomic<bool> stop{false};

    explicit Budget(int64_t lim) : limit(lim) {}
    // returns false when the search must stop (budget exhausted or interrupt)
    bool spend(int64_t n = 1) {
        if (stop.load(std::memory_order_relaxed)) return false;
        if (search_interrupt_flag().load(std::memory_order_relaxed)) {
            stop.store(true);
            return false;
        }
        if (used.fetch_add(n, std::memory_order_relaxed) + n > limit) {
            stop.store(true);
            return false;
        }
        return true;
    }
};

struct Progress {
    std::string command;
    std::string params;
    std::vector<std::atomic<int64_t>> done;
    std::string path;
    std::mutex write_mutex;

    Progress(std::string cmd, std::string prm, size_t shards, std::string p)
        : command(std::move(cmd)), params(std::move(prm)), done(shards), path(std::move(p)) {
        for (auto& d : done) d.store(0);
    }
    std::vector<int64_t> resume_counts() {
        std::vector<int64_t> counts(done.size(), 0);
        if (path.empty()) return counts;
        std::ifstream in(path);
        if (!in) return counts;
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            Checkpoint cp = parse_checkpoint(ss.str());
            if (cp.command == command && cp.params == params && cp.done.size() == done.size())
                counts = cp.done;
        } catch (const Error&) {
            // unusable checkpoint: start from scratch
        }
        for (size_t i = 0; i < counts.size(); ++i) done[i].store(counts[i]);
        return counts;
    }
    void write() {
        if (path.empty()) return;
        std::lock_guard<std::mutex> lock(write_mutex);
        Checkpoint cp;
        cp.command = command;
        cp.params = params;
        for (const auto& d : done) cp.done.push_back(d.load());
        std::ofstream out(path, std::ios::trunc);
        out << serialize_checkpoint(cp);
    }
};

} // namespace

std::atomic<bool>& search_interrupt_flag() {
    static std::atomic<bool> flag{false};
    return flag;
}

// ---------------------------------------------------------------------------
// datum search
// ---------------------------------------------------------------------------

namespace {

struct DatumSearchShared {
    FieldSpecPtr spec;
    const ResidueTuple* h;
    std::vector<FieldElement> elements;
    Budget* budget;
};

// positions with equal residues are interchangeable: force ascending poles
// inside each residue class to enumerate each datum once
void datum_backtrack(const DatumSearchShared& S, std::vector<int64_t>& pole_idx, size_t pos,
                     std::vector<bool>& used, std::vector<CharacterizingDatum>& out) {
    const size_t n = S.h->size();
    if (pos == n) {
        std::vector<DatumPair> pairs;
        for (size_t i = 0; i < n; ++i)
            pairs.push_back({S.elements[static_cast<size_t>(pole_idx[i])], S.h->values()[i]});
        CharacterizingDatum d(S.spec, std::move(pairs));
        if (verify_datum(d).valid) out.push_back(std::move(d));
        return;
    }
    // least admissible index for this position's residue class
    int64_t lo = 0;
    for (size_t i = 0; i < pos; ++i)
        if (S.h->values()[i] == S.h->values()[pos]) lo = std::max(lo, pole_idx[i] + 1);

    const int64_t m = static_cast<int64_t>(n) - 1;
    if (pos + 1 == n && m >= 2) {
        // the degree-1 moment pins the last pole: h_last x = -sigma_1
        FieldElement sigma1 = FieldElement::zero(S.spec);
        for (size_t i = 0; i < pos; ++i)
            sigma1 = sigma1 + FieldElement::from_int(S.spec, S.h->values()[i]) *
                                  S.elements[static_cast<size_t>(pole_idx[i])];
        if (!S.budget->spend()) return;
        FieldElement x = -sigma1 / FieldElement::from_int(S.spec, S.h->values()[pos]);
        int64_t idx = x.index();
        if (idx < lo || used[static_cast<size_t>(idx)]) return;
        pole_idx[pos] = idx;
        used[static_cast<size_t>(idx)] = true;
        datum_backtrack(S, pole_idx, pos + 1, used, out);
        used[static_cast<size_t>(idx)] = false;
        return;
    }
    for (int64_t idx = lo; idx < S.spec->order(); ++idx) {
        if (used[static_cast<size_t>(idx)]) continue;
        if (!S.budget->spend()) return;
        pole_idx[pos] = idx;
        used[static_cast<size_t>(idx)] = true;
        datum_backtrack(S, pole_idx, pos + 1, used, out);
        used[static_cast<size_t>(idx)] = false;
    }
}

} // namespace

std::vector<CharacterizingDatum> search_datum(const FieldSpecPtr& spec, const ResidueTuple& h,
                                              const SearchOptions& opts) {
    if (spec->p() != h.p()) fail(ErrorCode::SpecMismatch, "residue tuple prime differs from field");
    if (h.sum_mod_p() != 0)
        fail(ErrorCode::ResidueSumNonzero, "datum search needs residues summing to 0 mod p");
    if (spec->order() > opts.field_order_limit)
        fail(ErrorCode::ResourceLimit, "field order " + std::to_string(spec->order()) +
                                           " exceeds the configured ceiling " +
                                           std::to_string(opts.field_order_limit));
    if (h.size() > static_cast<size_t>(spec->order())) return {}; // pigeonhole: no distinct poles

    search_interrupt_flag().store(false);
    Budget budget(opts.node_budget);
    int shards = std::max(1, opts.shards);
    std::ostringstream params;
    params << "p=" << h.p() << " k=" << spec->k() << " h=";
    for (size_t i = 0; i < h.size(); ++i) params << (i ? "," : "") << h.values()[i];
    params << " shards=" << shards;
    Progress progress("search-datum", params.str(), static_cast<size_t>(shards),
                      opts.checkpoint_path);
    std::vector<int64_t> resume = progress.resume_counts();

    DatumSearchShared shared{spec, &h, enumerate_field(spec), &budget};

    auto run_shard = [&](int s) {
        std::vector<CharacterizingDatum> found;
        std::vector<int64_t> pole_idx(h.size(), 0);
        std::vector<bool> used(static_cast<size_t>(spec->order()), false);
        int64_t item = -1;
        for (int64_t first = 0; first < spec->order(); ++first) {
            if (first % shards != s) continue;
            ++item;
            if (item < resume[static_cast<size_t>(s)]) continue;
            if (budget.stop.load()) break;
            if (!budget.spend()) break;
            pole_idx[0] = first;
            used[static_cast<size_t>(first)] = true;
            datum_backtrack(shared, pole_idx, 1, used, found);
            used[static_cast<size_t>(first)] = false;
            progress.done[static_cast<size_t>(s)].fetch_add(1);
            if (item % 64 == 0) progress.write();
        }
        return found;
    };

    std::vector<std::future<std::vector<CharacterizingDatum>>> futures;
    for (int s = 1; s < shards; ++s)
        futures.push_back(std::async(std::launch::async, run_shard, s));
    std::vector<CharacterizingDatum> all = run_shard(0);
    for (auto& f : futures) {
        auto part = f.get();
        all.insert(all.end(), part.begin(), part.end());
    }
    progress.write();
    if (budget.stop.load()) {
        bool interrupted = search_interrupt_flag().load();
        fail(ErrorCode::ResourceLimit, interrupted
                                           ? "search interrupted; checkpoint written"
                                           : "node budget exhausted; checkpoint written");
    }

    // quotient by the affine action, then order canonically
    std::vector<CharacterizingDatum> canon;
    for (const auto& d : all) {
        CharacterizingDatum n = normalize_datum(d);
        bool dup = false;
        for (const auto& c : canon) dup |= c == n;
        if (!dup) canon.push_back(std::move(n));
    }
    std::sort(canon.begin(), canon.end());
    return canon;
}

// ---------------------------------------------------------------------------
// normalization
// ---------------------------------------------------------------------------

CharacterizingDatum normalize_datum(const CharacterizingDatum& d) {
    const FieldSpecPtr& spec = d.spec();
    const int64_t n = static_cast<int64_t>(d.m_plus_1());
    if (n == 0) fail(ErrorCode::DegenerateOrbit, "empty datum has no canonical form");

    std::vector<FieldElement> betas;
    if (n % spec->p() != 0) {
        // unique translation killing the first symmetric function
        FieldElement s1 = FieldElement::zero(spec);
        for (const auto& pr : d.pairs()) s1 = s1 + pr.pole;
        betas.push_back(-(s1 / FieldElement::from_int(spec, n)));
    } else {
        // the first symmetric function is translation-invariant: try every
        // translation placing a pole at 0 and let the order break ties
        for (const auto& pr : d.pairs()) betas.push_back(-pr.pole);
    }

    std::optional<CharacterizingDatum> best;
    for (const auto& beta : betas) {
        CharacterizingDatum shifted = apply_affine(d, FieldElement::one(spec), beta);
        for (const auto& pr : shifted.pairs()) {
            if (pr.pole.is_zero()) continue;
            CharacterizingDatum cand =
                apply_affine(shifted, pr.pole.inverse(), FieldElement::zero(spec)).sorted();
            if (!best || cand < *best) best = std::move(cand);
        }
    }
    if (!best) fail(ErrorCode::DegenerateOrbit, "no pole can be scaled to 1");
    return *best;
}

LSpaceCandidate normalize_lspace(const LSpaceCandidate& c) {
    const FieldSpecPtr& spec = c.spec();
    const int64_t p = c.p();
    FieldElement zero = FieldElement::zero(spec);
    FieldElement one = FieldElement::one(spec);
    FieldElement s = symmetric(spec, c.pole_sets()[0], 1, SymKind::Elementary);
    bool s1_invariant = c.lambda() % p == 0; // translations shift S_1 by lambda beta

    std::optional<LSpaceCandidate> best;
    std::string best_key;
    auto consider = [&](const FieldElement& alpha, const FieldElement& beta,
                        const FieldElement& x0_target) {
        std::vector<std::vector<FieldElement>> sets = c.pole_sets();
        for (auto& set : sets)
            for (auto& x : set) x = alpha * x + beta;
        bool anchored = false;
        for (const auto& x : sets[0]) anchored |= x == x0_target;
        if (!anchored) return;
        // u scales by alpha^m under the affine action (m = lambda p - 1)
        FieldElement scale = alpha.pow(c.m_plus_1() - 1);
        LSpaceCandidate cand(p, c.lambda(), spec, std::move(sets), c.r1(), c.r2(),
                             c.u() * scale, c.v() * scale);
        std::string key = cand.canonical_key();
        if (!best || key < best_key) {
            best = std::move(cand);
            best_key = std::move(key);
        }
    };

    if (!s1_invariant) {
        // the unique S_1-killing translation, then a pole of X^(0) scaled to 1
        FieldElement beta0 = -(s / FieldElement::from_int(spec, c.lambda()));
        for (const auto& x : c.pole_sets()[0]) {
            FieldElement moved = x + beta0;
            if (moved.is_zero()) continue;
            FieldElement alpha = moved.inverse();
            consider(alpha, alpha * beta0, one);
        }
    } else if (s.is_zero()) {
        // S_1 = 0 sector: any map keeps it; anchor 1 in X^(0)
        for (int64_t ai = 1; ai < spec->order(); ++ai) {
            FieldElement alpha = FieldElement::from_index(spec, ai);
            for (const auto& x : c.pole_sets()[0]) consider(alpha, one - alpha * x, one);
        }
    } else {
        // S_1 invariant and nonzero: scale it to 1, translate a pole of X^(0)
        // to 0
        FieldElement alpha = s.inverse();
        for (const auto& x : c.pole_sets()[0]) consider(alpha, -(alpha * x), zero);
    }
    if (!best) fail(ErrorCode::DegenerateOrbit, "no admissible renormalization");
    return *best;
}

// ---------------------------------------------------------------------------
// space search (p = 3)
// ---------------------------------------------------------------------------

namespace {

// ascending lists of distinct field elements whose sum is `target`; when
// `anchor` is set the list must contain it
void fixed_sum_sets(const FieldSpecPtr& spec, int lambda, const FieldElement& target,
                    const std::optional<FieldElement>& anchor,
                    const std::function<void(const std::vector<FieldElement>&)>& emit,
                    Budget& budget) {
    std::vector<FieldElement> cur;
    std::function<void(int64_t, FieldElement)> rec = [&](int64_t lo, FieldElement sum) {
        if (budget.stop.load()) return;
        if (static_cast<int>(cur.size()) + 1 == lambda) {
            // last element forced by the sum constraint
            FieldElement last = target - sum;
            if (last.index() >= lo && budget.spend()) {
                cur.push_back(last);
                bool ok = !anchor || std::any_of(cur.begin(), cur.end(),
                                                 [&](const FieldElement& x) { return x == *anchor; });
                if (ok) emit(cur);
                cur.pop_back();
            }
            return;
        }
        for (int64_t i = lo; i < spec->order(); ++i) {
            if (!budget.spend()) return;
            FieldElement x = FieldElement::from_index(spec, i);
            cur.push_back(x);
            rec(i + 1, sum + x);
            cur.pop_back();
        }
    };
    if (lambda == 1) {
        if ((!anchor || *anchor == target) && budget.spend()) {
            cur.push_back(target);
            emit(cur);
        }
        return;
    }
    rec(0, FieldElement::zero(spec));
}

// residue tuples per pole set under the pinned profiles
std::vector<std::vector<int64_t>> profile_tuples(int lambda, bool all) {
    std::vector<std::vector<int64_t>> out;
    if (!all && lambda == 2) {
        out.push_back({1, 2});
        out.push_back({2, 1});
        return out;
    }
    if (!all && lambda == 5) {
        for (int64_t sign : {1, 2})
            for (int i = 0; i < 5; ++i) {
                std::vector<int64_t> t(5, sign);
                t[static_cast<size_t>(i)] = 3 - sign;
                out.push_back(std::move(t));
            }
        return out;
    }
    // all tuples over {1, 2}
    for (uint32_t bits = 0; bits < (1u << lambda); ++bits) {
        std::vector<int64_t> t;
        for (int i = 0; i < lambda; ++i) t.push_back((bits >> i & 1) ? 2 : 1);
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace

std::vector<LSpaceCandidate> search_lspace(int lambda, int k_max, const SearchOptions& opts) {
    if (lambda < 1 || k_max < 1)
        fail(ErrorCode::InvalidArgument, "lambda and k_max must be positive");
    const int64_t p = 3;

    search_interrupt_flag().store(false);
    Budget budget(opts.node_budget);
    int shards = std::max(1, opts.shards);
    std::ostringstream params;
    params << "p=3 lambda=" << lambda << " kmax=" << k_max << " shards=" << shards
           << " all=" << (opts.all_residue_assignments ? 1 : 0);
    Progress progress("search-space", params.str(), static_cast<size_t>(shards),
                      opts.checkpoint_path);
    std::vector<int64_t> resume = progress.resume_counts();

    auto residue_options = profile_tuples(lambda, opts.all_residue_assignments);

    // flattened deterministic outer items: (extension degree, index of a)
    struct Outer {
        FieldSpecPtr spec;
        int64_t ai;
    };
    std::vector<Outer> items;
    for (int k = 1; k <= k_max; ++k) {
        FieldSpecPtr spec = FieldSpec::make(p, k);
        if (spec->order() > opts.field_order_limit)
            fail(ErrorCode::ResourceLimit, "field order " + std::to_string(spec->order()) +
                                               " exceeds the configured ceiling " +
                                               std::to_string(opts.field_order_limit));
        for (int64_t ai = 0; ai < spec->order(); ++ai)
            if (!FieldElement::from_index(spec, ai).in_prime_field()) items.push_back({spec, ai});
    }

    auto process_item = [&](const Outer& it, std::vector<LSpaceCandidate>& local) {
        const FieldSpecPtr& spec = it.spec;
        FieldElement a = FieldElement::from_index(spec, it.ai);
        // Normalization sectors. The common first symmetric function s of the
        // pole sets is scaled by homotheties and shifted by lambda * beta under
        // translations. For 3 not dividing lambda every orbit reaches s = 0
        // with a pole of X^(0) at 1. When 3 | lambda, s is a translation
        // invariant: the s = 0 sector anchors 1 in X^(0), and the s != 0
        // sector is scaled to s = 1 with a pole of X^(0) translated to 0.
        struct Sector {
            FieldElement sum;
            FieldElement anchor;
        };
        std::vector<Sector> sectors{{FieldElement::zero(spec), FieldElement::one(spec)}};
        if (lambda % 3 == 0)
            sectors.push_back({FieldElement::one(spec), FieldElement::zero(spec)});
        for (const Sector& sector : sectors)
        fixed_sum_sets(spec, lambda, sector.sum, sector.anchor,
                       [&](const std::vector<FieldElement>& X0) {
            fixed_sum_sets(spec, lambda, sector.sum, std::nullopt,
                           [&](const std::vector<FieldElement>& X3) {
                for (const auto& x : X3)
                    for (const auto& y : X0)
                        if (x == y) return;
                // derive X^(1), X^(2) through the elementary symmetric transfer
                // and demand split, simple, disjoint roots
                std::vector<std::vector<FieldElement>> sets(4);
                sets[0] = X0;
                sets[3] = X3;
                std::set<FieldElement> taken(X0.begin(), X0.end());
                for (const auto& x : X3) taken.insert(x);
                auto e0 = elementary_all(spec, X0);
                auto e3 = elementary_all(spec, X3);
                for (int j = 1; j <= 2; ++j) {
                    FieldElement jf = FieldElement::from_int(spec, j);
                    FieldElement aj = a + jf;
                    PolyRingPtr ring = PolyRing::make(spec, {"X"});
                    MultiPoly pj = MultiPoly::zero(ring);
                    for (int i = 0; i <= lambda; ++i) {
                        FieldElement si =
                            (a * e0[static_cast<size_t>(i)] + jf * e3[static_cast<size_t>(i)]) / aj;
                        if (i % 2 == 1) si = -si;
                        Mono m(1, static_cast<uint32_t>(lambda - i));
                        pj.add_term(m, si);
                    }
                    auto roots = roots_in_field(pj, spec->order());
                    if (static_cast<int>(roots.size()) != lambda) return;
                    for (const auto& [r, mult] : roots) {
                        if (mult != 1) return;
                        if (!taken.insert(r).second) return;
                        sets[static_cast<size_t>(j)].push_back(r);
                    }
                }
                // residue assignment constrained by the pinned profiles
                std::vector<size_t> pick(4, 0);
                std::function<void(int)> assign = [&](int j) {
                    if (budget.stop.load()) return;
                    if (j == 4) {
                        if (!budget.spend()) return;
                        std::vector<std::vector<int64_t>> r1(4), r2(4);
                        for (int t = 0; t <= 3; ++t) {
                            const auto& hs = residue_options[pick[static_cast<size_t>(t)]];
                            for (int i = 0; i < lambda; ++i) {
                                int64_t hv = hs[static_cast<size_t>(i)];
                                if (t == 0) {
                                    r1[0].push_back(0);
                                    r2[0].push_back(hv);
                                } else if (t == 3) {
                                    r1[3].push_back(hv);
                                    r2[3].push_back(0);
                                } else if (t == 1) {
                                    r1[1].push_back(hv);
                                    r2[1].push_back(mod(-hv, p));
                                } else {
                                    r1[2].push_back(hv);
                                    r2[2].push_back(hv);
                                }
                            }
                        }
                        int64_t m = 3 * lambda - 1;
                        FieldElement u = FieldElement::zero(spec);
                        FieldElement v = FieldElement::zero(spec);
                        for (int t = 0; t <= 3; ++t)
                            for (int i = 0; i < lambda; ++i) {
                                const FieldElement& x =
                                    sets[static_cast<size_t>(t)][static_cast<size_t>(i)];
                                u = u + FieldElement::from_int(
                                            spec,
                                            r1[static_cast<size_t>(t)][static_cast<size_t>(i)]) *
                                            x.pow(m);
                                v = v + FieldElement::from_int(
                                            spec,
                                            r2[static_cast<size_t>(t)][static_cast<size_t>(i)]) *
                                            x.pow(m);
                            }
                        if (u.is_zero() || v.is_zero()) return;
                        LSpaceCandidate cand(p, lambda, spec, sets, std::move(r1), std::move(r2),
                                             u, v);
                        if (verify_lspace(cand).passes) local.push_back(std::move(cand));
                        return;
                    }
                    for (size_t t = 0; t < residue_options.size(); ++t) {
                        pick[static_cast<size_t>(j)] = t;
                        if (j == 3 && !opts.all_residue_assignments) {
                            // the degree-0 moments of both basis forms must vanish
                            auto q0 = [&](int jj) {
                                int64_t s_ = 0;
                                for (int64_t hv : residue_options[pick[static_cast<size_t>(jj)]])
                                    s_ += hv;
                                return mod(s_, p);
                            };
                            int64_t q00 = q0(0), q01 = q0(1), q02 = q0(2), q03 = q0(3);
                            if (mod(q01 + q02 + q03, p) != 0) continue;
                            if (mod(q00 - q01 + q02, p) != 0) continue;
                            // every combination's full residue tuple must admit
                            // the constant-block renumbering (m+1 = lambda p)
                            bool blocks_ok = true;
                            for (int form = 0; form <= 3 && blocks_ok; ++form) {
                                int64_t n1 = 0, n2 = 0;
                                for (int s_ = 0; s_ <= 3; ++s_) {
                                    if (s_ == form) continue;
                                    const auto& hs = residue_options[pick[static_cast<size_t>(s_)]];
                                    for (int64_t h1 : hs) {
                                        // combination residue at a pole of set s_
                                        int64_t r1v, r2v;
                                        if (s_ == 0) {
                                            r1v = 0;
                                            r2v = h1;
                                        } else if (s_ == 3) {
                                            r1v = h1;
                                            r2v = 0;
                                        } else if (s_ == 1) {
                                            r1v = h1;
                                            r2v = mod(-h1, p);
                                        } else {
                                            r1v = h1;
                                            r2v = h1;
                                        }
                                        int64_t res = form == 3 ? r2v : mod(r1v + form * r2v, p);
                                        (res == 1 ? n1 : n2) += 1;
                                    }
                                }
                                blocks_ok &= n1 % p == 0 && n2 % p == 0;
                            }
                            if (!blocks_ok) continue;
                        }
                        assign(j + 1);
                    }
                };
                assign(0);
            }, budget);
        }, budget);
    };


    auto run_shard = [&](int s) {
        std::vector<LSpaceCandidate> local;
        int64_t item = -1;
        for (size_t i = 0; i < items.size(); ++i) {
            if (static_cast<int>(i % static_cast<size_t>(shards)) != s) continue;
            ++item;
            if (item < resume[static_cast<size_t>(s)]) continue;
            if (budget.stop.load()) break;
            if (!budget.spend()) break;
            process_item(items[i], local);
            progress.done[static_cast<size_t>(s)].fetch_add(1);
            if (item % 16 == 0) progress.write();
        }
        return local;
    };

    std::vector<std::future<std::vector<LSpaceCandidate>>> futures;
    for (int s = 1; s < shards; ++s)
        futures.push_back(std::async(std::launch::async, run_shard, s));
    std::vector<LSpaceCandidate> found = run_shard(0);
    for (auto& f : futures) {
        auto part = f.get();
        found.insert(found.end(), part.begin(), part.end());
    }
    progress.write();
    if (budget.stop.load()) {
        bool interrupted = search_interrupt_flag().load();
        fail(ErrorCode::ResourceLimit, interrupted
                                           ? "search interrupted; checkpoint written"
                                           : "node budget exhausted; checkpoint written");
    }

    std::vector<LSpaceCandidate> canon;
    std::set<std::string> keys;
    for (const auto& c : found) {
        LSpaceCandidate n = normalize_lspace(c);
        std::string key = n.canonical_key();
        if (keys.insert(key).second) canon.push_back(std::move(n));
    }
    std::sort(canon.begin(), canon.end(), [](const LSpaceCandidate& a, const LSpaceCandidate& b) {
        return a.canonical_key() < b.canonical_key();
    });
    return canon;
}

} // namespace gdd
