// Acceptance suite: runs every acceptance criterion and prints one line per
// criterion. Exit code 0 iff all pass.
#include <chrono>
#include <functional>
#include <iostream>
#include <algorithm>
#include <random>
#include <sstream>

#include "gdd/certify.hpp"
#include "gdd/formats.hpp"
#include "gdd/search.hpp"

using namespace gdd;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << what
              << "\n";
    if (!pass) ++failures;
}

void info(const std::string& what) { std::cout << "[INFO] " << what << "\n"; }

CharacterizingDatum triple_datum(const FieldSpecPtr& spec) {
    std::vector<DatumPair> pairs{{FieldElement::from_int(spec, 0), 1},
                                 {FieldElement::from_int(spec, 1), 1},
                                 {FieldElement::from_int(spec, 2), 1}};
    return CharacterizingDatum(spec, pairs);
}

// criterion 1: the full certificate, all steps verified, contradiction
// established, under a minute
void criterion_certificate(const CertificateReport& rep) {
    bool ok = rep.all_steps_verified() && rep.contradiction_established;
    std::ostringstream os;
    os << "certificate: " << rep.steps.size() << " steps verified, "
       << (rep.contradiction_established ? "CONTRADICTION_ESTABLISHED" : "no contradiction")
       << ", " << rep.seconds << " s";
    report(1, ok && rep.seconds < 60.0 && !rep.side_conditions.empty(), os.str());
}

// criterion 2: the closing quintic factorization, exact coefficient match
void criterion_quintic() {
    auto f3 = FieldSpec::make(3, 1);
    auto r = PolyRing::make(f3, {"a", "X"});
    RatFun a = RatFun::variable(r, "a"), X = RatFun::variable(r, "X");
    RatFun one = RatFun::constant(r, 1);
    MultiPoly lhs = (-a * a * X.pow(5) + (-a * a + a) * X.pow(4) - X.pow(3) +
                     (a * a + a + one) * X * X + (a * a + one) * X + a - one)
                        .num();
    MultiPoly rhs = ((X - one).pow(2) * (X + one) * (a * X + one) * (-a * X + a - one)).num();
    report(2, lhs == rhs, "quintic expansion matches its factorization exactly");
}

// criterion 3: X^5 - X^3 - dX^2 + d = (X+1)(X-1)(X^3 - d) over F_3[d, X]
void criterion_cube_factorization() {
    auto f3 = FieldSpec::make(3, 1);
    auto r = PolyRing::make(f3, {"d", "X"});
    MultiPoly d = MultiPoly::variable(r, "d"), X = MultiPoly::variable(r, "X");
    MultiPoly one = MultiPoly::constant(r, 1);
    bool ok = X.pow(5) - X.pow(3) - d * X * X + d == (X + one) * (X - one) * (X.pow(3) - d);
    report(3, ok, "forced factorization of the zeroth vanishing polynomial, exact");
}

// criterion 4: the identity suite runs with zero tolerance
void criterion_identity_suite(const CertificateReport& rep) {
    bool ok = true;
    std::vector<std::string> names{"numerator_expansion_l1", "numerator_expansion_l2",
                                   "numerator_expansion_l3", "numerator_expansion_l4",
                                   "numerator_expansion_l5", "numerator_expansion_l6",
                                   "power_sum_transfer",     "bilinear_transfer"};
    for (const auto& n : names) {
        const CertStep* s = rep.find(n);
        ok &= s && s->status == StepStatus::Verified;
    }
    report(4, ok, "numerator expansions (l <= 6), power-sum transfers (degrees 2, 4, 5; j = 1, 2), "
                  "bilinear transfer: all exact");
}

// criterion 5: partition condition at p = 3 exhaustively, counterexample at p = 5
void criterion_partition_exhaustive() {
    bool ok = true;
    int64_t checked = 0;
    for (int n = 1; n <= 12 && ok; ++n) {
        for (uint32_t bits = 0; bits < (1u << n); ++bits) {
            std::vector<int64_t> h;
            int64_t sum = 0;
            for (int i = 0; i < n; ++i) {
                int64_t v = (bits >> i & 1) ? 1 : 2;
                h.push_back(v);
                sum += v;
            }
            if (sum % 3 != 0) continue;
            ++checked;
            if (!partition_condition(ResidueTuple(3, h))) ok = false;
        }
    }
    bool counter = !partition_condition(ResidueTuple(5, {1, 1, -1, -1}));
    std::ostringstream os;
    os << "partition condition holds for all " << checked
       << " residue tuples with zero sum at p = 3 (sizes <= 12); the p = 5 tuple (1,1,-1,-1) fails";
    report(5, ok && counter, os.str());
}

// criterion 6: condition <=> constant blocks when the size is a multiple of p
void criterion_block_equivalence() {
    bool ok = true;
    int64_t checked = 0;
    auto exhaustive = [&](int64_t p, int n) {
        std::vector<int64_t> h(static_cast<size_t>(n), 1);
        std::function<void(int)> rec = [&](int i) {
            if (!ok) return;
            if (i == n) {
                ResidueTuple t(p, h);
                if (t.sum_mod_p() != 0) return;
                ++checked;
                if (partition_condition(t) != block_structure(t).has_value()) ok = false;
                return;
            }
            for (int64_t v = 1; v < p; ++v) {
                h[static_cast<size_t>(i)] = v;
                rec(i + 1);
            }
        };
        rec(0);
    };
    exhaustive(3, 6);
    exhaustive(3, 9);
    exhaustive(5, 5);
    std::ostringstream os;
    os << "partition condition equals constant-block renumbering on " << checked
       << " exhaustive tuples for (p, m+1) in {(3,6), (3,9), (5,5)}";
    report(6, ok, os.str());
}

// criterion 7: verdict agreement between the moment check and the numerator oracle
void criterion_oracle_agreement() {
    std::mt19937_64 rng(20268801);
    int64_t agreements = 0;
    bool ok = true;
    for (int k : {1, 2, 3}) {
        auto spec = FieldSpec::make(3, k);
        std::vector<int64_t> indices(static_cast<size_t>(spec->order()));
        for (size_t i = 0; i < indices.size(); ++i) indices[i] = static_cast<int64_t>(i);
        std::uniform_int_distribution<int64_t> pole(0, spec->order() - 1);
        std::uniform_int_distribution<int64_t> res(1, 2);
        std::uniform_int_distribution<int> len(2, std::min<int>(7, static_cast<int>(spec->order())));
        std::uniform_int_distribution<int> mode(0, 3);
        int target = 400;
        for (int iter = 0; iter < target; ++iter) {
            std::vector<DatumPair> pairs;
            if (mode(rng) == 0) {
                // planted valid datum, sometimes with one pole knocked loose
                CharacterizingDatum base = triple_datum(spec);
                FieldElement alpha = FieldElement::from_index(spec, pole(rng));
                if (alpha.is_zero()) alpha = FieldElement::one(spec);
                FieldElement beta = FieldElement::from_index(spec, pole(rng));
                CharacterizingDatum moved = apply_affine(base, alpha, beta);
                pairs = moved.pairs();
                if (mode(rng) == 1) {
                    pairs[0].pole = FieldElement::from_index(spec, pole(rng));
                    bool dup = pairs[0].pole == pairs[1].pole || pairs[0].pole == pairs[2].pole;
                    if (dup) continue; // the oracle requires distinct poles
                }
            } else {
                // distinct poles by partial shuffle, random unit residues
                int n = len(rng);
                std::shuffle(indices.begin(), indices.end(), rng);
                for (int i = 0; i < n; ++i)
                    pairs.push_back(
                        {FieldElement::from_index(spec, indices[static_cast<size_t>(i)]),
                         res(rng)});
            }
            CharacterizingDatum d(spec, pairs);
            DatumVerdict v = verify_datum(d);
            MultiPoly num = numerator_oracle(d);
            bool oracle_valid = num.is_constant() && !num.constant_value().is_zero();
            if (v.valid != oracle_valid) ok = false;
            if (v.valid && num.constant_value() != v.u) ok = false;
            ++agreements;
        }
    }
    std::ostringstream os;
    os << "moment verdict and numerator oracle agree on " << agreements
       << " randomized data across F_3, F_9, F_27 (verdict and u)";
    report(7, ok && agreements >= 1000, os.str());
}

// criterion 8: affine transformation law and residue scaling on valid data
void criterion_symmetry() {
    std::mt19937_64 rng(555321);
    int64_t checked = 0;
    bool ok = true;
    for (int k : {1, 2, 3}) {
        auto spec = FieldSpec::make(3, k);
        std::uniform_int_distribution<int64_t> idx(0, spec->order() - 1);
        int found = 0;
        while (found < 170) {
            FieldElement x0 = FieldElement::from_index(spec, idx(rng));
            FieldElement x1 = FieldElement::from_index(spec, idx(rng));
            FieldElement x2 = -(x0 + x1);
            CharacterizingDatum d(spec, {{x0, 1}, {x1, 1}, {x2, 1}});
            DatumVerdict v = verify_datum(d);
            if (!v.valid) continue;
            ++found;
            ++checked;
            FieldElement alpha = FieldElement::from_index(spec, idx(rng));
            if (alpha.is_zero()) alpha = FieldElement::one(spec);
            FieldElement beta = FieldElement::from_index(spec, idx(rng));
            DatumVerdict vm = verify_datum(apply_affine(d, alpha, beta));
            if (!vm.valid || vm.u != alpha.pow(d.m()) * v.u) ok = false;
            for (int64_t c = 1; c <= 2; ++c) {
                DatumVerdict vs = verify_datum(scale_residues(d, c));
                if (!vs.valid || vs.u != FieldElement::from_int(spec, c) * v.u) ok = false;
            }
        }
    }
    std::ostringstream os;
    os << "affine law u -> alpha^m u and residue scaling u -> c u hold on " << checked
       << " random valid data, exact";
    report(8, ok && checked >= 500, os.str());
}

// criterion 9: the division-free recurrence equals direct power sums
void criterion_newton_bridge() {
    std::mt19937_64 rng(90909);
    bool ok = true;
    int64_t checked = 0;
    for (int k : {1, 2, 3}) {
        auto spec = FieldSpec::make(3, k);
        std::uniform_int_distribution<int64_t> idx(0, spec->order() - 1);
        std::uniform_int_distribution<int> len(1, 8);
        std::function<FieldElement(int64_t)> mk = [&](int64_t c) {
            return FieldElement::from_int(spec, c);
        };
        for (int iter = 0; iter < 60; ++iter) {
            int n = len(rng);
            std::vector<FieldElement> roots;
            for (int i = 0; i < n; ++i) roots.push_back(FieldElement::from_index(spec, idx(rng)));
            std::vector<FieldElement> e = elementary_all(spec, roots);
            e.erase(e.begin());
            int K = 3 * n;
            auto ps = newton_power_sums<FieldElement>(e, K, mk);
            for (int kk = 1; kk <= K; ++kk) {
                if (ps[static_cast<size_t>(kk - 1)] !=
                    symmetric(spec, roots, kk, SymKind::PowerSum))
                    ok = false;
                ++checked;
            }
        }
    }
    std::ostringstream os;
    os << "division-free recurrence equals direct power sums on " << checked
       << " (multiset, degree) pairs with n <= 8, K <= 3n";
    report(9, ok, os.str());
}

// criteria 10 and 11: search soundness, tiny-scale completeness, space closure
void criterion_search(std::vector<LSpaceCandidate>& found_out) {
    auto f3 = FieldSpec::make(3, 1);
    bool ok = true;
    std::string what;

    auto canon = search_datum(f3, ResidueTuple(3, {1, 1, 1}));
    CharacterizingDatum expect =
        normalize_datum(triple_datum(f3));
    ok &= canon.size() == 1 && canon[0] == expect;

    bool empty1 = search_lspace(1, 3).empty();
    ok &= empty1;

    auto found = search_lspace(2, 4);
    bool all_good = true;
    for (const auto& c : found) {
        all_good &= verify_lspace(c).passes;
        all_good &= shared_pole_count(c) == 4;
        TypeProfile tp = type_profile(c);
        all_good &= tp.admissible;
        for (const auto& t : tp.types) all_good &= t == std::vector<int64_t>{1, 1};
    }
    ok &= all_good;
    std::ostringstream os;
    os << "three-pole search returns exactly the canonical triple; one-set-per-form search is "
          "empty; all "
       << found.size() << " six-pole candidates (k <= 4) verify with 4 shared poles and type "
                          "(1,1) sets";
    report(10, ok, os.str());
    info("criterion 10 experimental outcome: " + std::to_string(found.size()) +
         " candidate space(s) discovered within the field bound (existence is known in general; "
         "the minimal field of definition is an experimental output)");
    found_out = found;
}

void criterion_closure(const std::vector<LSpaceCandidate>& found) {
    bool ok = true;
    int64_t combos = 0;
    for (const auto& c : found) {
        ok &= check_q_relations(c);
        for (int64_t c1 = 0; c1 < 3; ++c1)
            for (int64_t c2 = 0; c2 < 3; ++c2) {
                if (c1 == 0 && c2 == 0) continue;
                if (!verify_datum(combination_datum(c, c1, c2)).valid) ok = false;
                ++combos;
            }
    }
    std::ostringstream os;
    os << "all " << combos << " nonzero combinations across " << found.size()
       << " accepted candidates are valid data and both q-relation families hold for k <= 3 "
          "lambda - 2";
    report(11, ok && !found.empty(), os.str());
}

} // namespace

int main() {
    std::cout << "acceptance suite\n================\n";
    auto t0 = std::chrono::steady_clock::now();

    CertificateReport cert = certify_all();
    criterion_certificate(cert);
    criterion_quintic();
    criterion_cube_factorization();
    criterion_identity_suite(cert);
    criterion_partition_exhaustive();
    criterion_block_equivalence();
    criterion_oracle_agreement();
    criterion_symmetry();
    criterion_newton_bridge();
    std::vector<LSpaceCandidate> found;
    criterion_search(found);
    criterion_closure(found);

    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "================\n"
              << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " FAILED")
              << " (" << secs << " s)\n";
    return failures == 0 ? 0 : 1;
}
