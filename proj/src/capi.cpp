#include "gdd/gdd.h"

#include <cstring>
#include <sstream>

#include "gdd/certify.hpp"
#include "gdd/formats.hpp"
#include "gdd/search.hpp"

using namespace gdd;

struct gdd_report {
    gdd_verdict verdict = GDD_VERDICT_NO;
    std::vector<std::string> lines;
    std::vector<std::string> artifacts;
    std::string human;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

gdd_status status_of(const Error& e) {
    switch (e.code()) {
    case ErrorCode::ParseError: return GDD_ERR_PARSE;
    case ErrorCode::ResourceLimit: return GDD_ERR_RESOURCE_LIMIT;
    default: return GDD_ERR_INVALID_ARGUMENT;
    }
}

template <class F>
gdd_status guarded(F&& fn, gdd_report** out, char** err) {
    if (err) *err = nullptr;
    if (!out) {
        if (err) *err = dup_string("output report pointer is null");
        return GDD_ERR_INVALID_ARGUMENT;
    }
    *out = nullptr;
    try {
        auto rep = std::make_unique<gdd_report>();
        fn(*rep);
        *out = rep.release();
        return GDD_OK;
    } catch (const Error& e) {
        if (err) *err = dup_string(e.what());
        return status_of(e);
    } catch (const std::exception& e) {
        if (err) *err = dup_string(e.what());
        return GDD_ERR_INTERNAL;
    }
}

std::string one_line_datum(const CharacterizingDatum& d) {
    std::ostringstream os;
    os << "datum";
    for (const auto& pr : d.pairs()) os << " " << pr.pole.to_string() << "/" << pr.residue;
    return os.str();
}

SearchOptions convert(const gdd_search_options* o) {
    SearchOptions opts;
    if (!o) return opts;
    if (o->node_budget > 0) opts.node_budget = o->node_budget;
    if (o->shards > 0) opts.shards = o->shards;
    if (o->field_order_limit > 0) opts.field_order_limit = o->field_order_limit;
    opts.all_residue_assignments = o->all_residue_assignments != 0;
    if (o->checkpoint_path) opts.checkpoint_path = o->checkpoint_path;
    return opts;
}

std::vector<int64_t> copy_residues(const int64_t* h, size_t n) {
    if (!h || n == 0) fail(ErrorCode::InvalidArgument, "residue list is empty");
    return std::vector<int64_t>(h, h + n);
}

} // namespace

extern "C" {

const char* gdd_version(void) { return "gdd 1.0.0"; }

void gdd_string_free(char* s) { std::free(s); }

void gdd_report_free(gdd_report* r) { delete r; }

gdd_verdict gdd_report_verdict(const gdd_report* r) { return r ? r->verdict : GDD_VERDICT_NO; }

size_t gdd_report_line_count(const gdd_report* r) { return r ? r->lines.size() : 0; }

const char* gdd_report_line(const gdd_report* r, size_t i) {
    if (!r || i >= r->lines.size()) return nullptr;
    return r->lines[i].c_str();
}

size_t gdd_report_artifact_count(const gdd_report* r) { return r ? r->artifacts.size() : 0; }

const char* gdd_report_artifact(const gdd_report* r, size_t i) {
    if (!r || i >= r->artifacts.size()) return nullptr;
    return r->artifacts[i].c_str();
}

char* gdd_report_render(const gdd_report* r, int machine) {
    if (!r) return dup_string("");
    if (machine) {
        std::ostringstream os;
        for (const auto& l : r->lines) os << l << "\n";
        return dup_string(os.str());
    }
    return dup_string(r->human);
}

void gdd_search_options_init(gdd_search_options* o) {
    if (!o) return;
    o->node_budget = 0;
    o->shards = 0;
    o->field_order_limit = 0;
    o->all_residue_assignments = 0;
    o->checkpoint_path = nullptr;
}

void gdd_interrupt(void) { search_interrupt_flag().store(true); }

gdd_status gdd_verify_datum(const char* text, gdd_report** out, char** err) {
    return guarded(
        [&](gdd_report& rep) {
            if (!text) fail(ErrorCode::InvalidArgument, "document text is null");
            CharacterizingDatum d = parse_datum(text);
            DatumVerdict v = verify_datum(d);
            rep.verdict = v.valid ? GDD_VERDICT_YES : GDD_VERDICT_NO;
            rep.lines.push_back("poles = " + std::to_string(d.m_plus_1()));
            rep.lines.push_back(v.valid ? "valid" : "invalid");
            if (v.valid) rep.lines.push_back("u = " + v.u.to_string());
            for (const auto& viol : v.violations) rep.lines.push_back("violation " + viol.message);
            rep.artifacts.push_back(serialize_datum(d));
            std::ostringstream os;
            if (v.valid) {
                os << "valid, u = " << v.u.to_string() << "\n";
            } else {
                os << "invalid\n";
                for (const auto& viol : v.violations) os << "  violation: " << viol.message << "\n";
            }
            rep.human = os.str();
        },
        out, err);
}

gdd_status gdd_verify_space(const char* text, gdd_report** out, char** err) {
    return guarded(
        [&](gdd_report& rep) {
            if (!text) fail(ErrorCode::InvalidArgument, "document text is null");
            LSpaceCandidate c = parse_lspace(text);
            LSpaceReport r = verify_lspace(c);
            rep.verdict = r.passes ? GDD_VERDICT_YES : GDD_VERDICT_NO;
            std::ostringstream os;
            for (const auto& ch : r.checks) {
                rep.lines.push_back(std::string("check \"") + ch.name + "\" " +
                                    (ch.passed ? "pass" : "fail") +
                                    (ch.detail.empty() ? "" : " " + ch.detail));
                os << (ch.passed ? "  [pass] " : "  [FAIL] ") << ch.name;
                if (!ch.detail.empty()) os << " (" << ch.detail << ")";
                os << "\n";
            }
            rep.lines.push_back(r.passes ? "passes" : "fails");
            os << (r.passes ? "passes\n" : "fails\n");
            rep.artifacts.push_back(serialize_lspace(c));
            rep.human = os.str();
        },
        out, err);
}

gdd_status gdd_partition_condition(int64_t p, const int64_t* h, size_t n, gdd_report** out,
                                   char** err) {
    return guarded(
        [&](gdd_report& rep) {
            ResidueTuple tuple(p, copy_residues(h, n));
            bool holds = partition_condition(tuple);
            int64_t bound = (static_cast<int64_t>(n) - 1) / p + 1;
            rep.verdict = holds ? GDD_VERDICT_YES : GDD_VERDICT_NO;
            rep.lines.push_back("bound = " + std::to_string(bound));
            rep.lines.push_back(holds ? "partition condition holds" : "partition condition fails");
            rep.human = rep.lines.back() + " (maximal adapted partition of size <= " +
                        std::to_string(bound) + (holds ? " exists)\n" : " does not exist)\n");
        },
        out, err);
}

gdd_status gdd_block_structure(int64_t p, const int64_t* h, size_t n, gdd_report** out,
                               char** err) {
    return guarded(
        [&](gdd_report& rep) {
            ResidueTuple tuple(p, copy_residues(h, n));
            auto blocks = block_structure(tuple);
            rep.verdict = blocks ? GDD_VERDICT_YES : GDD_VERDICT_NO;
            std::ostringstream os;
            if (blocks) {
                rep.lines.push_back("blocks = " + std::to_string(blocks->blocks.size()));
                os << "renumbering into " << blocks->blocks.size()
                   << " blocks of equal residues:\n";
                for (const auto& blk : blocks->blocks) {
                    std::ostringstream row;
                    row << "block";
                    for (size_t i : blk) row << " " << i;
                    rep.lines.push_back(row.str());
                    os << "  " << row.str() << "\n";
                }
            } else {
                rep.lines.push_back("none");
                os << "no renumbering into constant blocks exists\n";
            }
            rep.human = os.str();
        },
        out, err);
}

gdd_status gdd_search_datum(int64_t p, int k, const int64_t* h, size_t n,
                            const gdd_search_options* opts, gdd_report** out, char** err) {
    return guarded(
        [&](gdd_report& rep) {
            ResidueTuple tuple(p, copy_residues(h, n));
            FieldSpecPtr spec = FieldSpec::make(p, k);
            auto results = search_datum(spec, tuple, convert(opts));
            rep.verdict = results.empty() ? GDD_VERDICT_NO : GDD_VERDICT_YES;
            rep.lines.push_back("count = " + std::to_string(results.size()));
            std::ostringstream os;
            os << results.size() << " canonical representative(s)\n";
            for (const auto& d : results) {
                rep.lines.push_back(one_line_datum(d));
                rep.artifacts.push_back(serialize_datum(d));
                os << "\n" << serialize_datum(d);
            }
            rep.human = os.str();
        },
        out, err);
}

gdd_status gdd_search_space(int lambda, int k_max, const gdd_search_options* opts,
                            gdd_report** out, char** err) {
    return guarded(
        [&](gdd_report& rep) {
            auto results = search_lspace(lambda, k_max, convert(opts));
            rep.verdict = results.empty() ? GDD_VERDICT_NO : GDD_VERDICT_YES;
            rep.lines.push_back("count = " + std::to_string(results.size()));
            std::ostringstream os;
            os << results.size() << " candidate(s)\n";
            for (const auto& c : results) {
                rep.lines.push_back("space a = " + c.a().to_string() + " key " +
                                    c.canonical_key());
                rep.artifacts.push_back(serialize_lspace(c));
                os << "\n" << serialize_lspace(c);
            }
            rep.human = os.str();
        },
        out, err);
}

gdd_status gdd_certify(const char* step_or_null, gdd_report** out, char** err) {
    return guarded(
        [&](gdd_report& rep) {
            CertificateReport r =
                step_or_null ? certify_step(step_or_null) : certify_all();
            rep.verdict = (r.all_steps_verified() && (step_or_null || r.contradiction_established))
                              ? GDD_VERDICT_YES
                              : GDD_VERDICT_NO;
            std::istringstream is(render_certificate(r, true));
            std::string line;
            while (std::getline(is, line)) rep.lines.push_back(line);
            rep.human = render_certificate(r, false);
        },
        out, err);
}

gdd_status gdd_enumerate_types(int64_t p, int lambda, gdd_report** out, char** err) {
    return guarded(
        [&](gdd_report& rep) {
            if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "p must be prime");
            if (lambda < 1) fail(ErrorCode::InvalidArgument, "lambda must be positive");
            // residue types (n_1, ..., n_{p-1}) of a lambda-element pole set;
            // a type is admissible when its weighted count q_0 vanishes mod p
            std::vector<int64_t> type(static_cast<size_t>(p - 1), 0);
            int admissible = 0;
            std::ostringstream os;
            std::function<void(int64_t, int64_t)> rec = [&](int64_t idx, int64_t left) {
                if (idx + 1 == p - 1) {
                    type[static_cast<size_t>(idx)] = left;
                    int64_t q0 = 0;
                    for (int64_t i = 0; i < p - 1; ++i)
                        q0 = (q0 + (i + 1) * type[static_cast<size_t>(i)]) % p;
                    std::ostringstream row;
                    row << "type (";
                    for (size_t i = 0; i < type.size(); ++i)
                        row << (i ? ", " : "") << type[i];
                    row << ") q0 = " << q0 << (q0 == 0 ? " admissible" : "");
                    rep.lines.push_back(row.str());
                    os << "  " << row.str() << "\n";
                    if (q0 == 0) ++admissible;
                    return;
                }
                for (int64_t c = 0; c <= left; ++c) {
                    type[static_cast<size_t>(idx)] = c;
                    rec(idx + 1, left - c);
                }
            };
            if (p == 2) {
                // the single type (lambda)
                int64_t q0 = lambda % 2;
                rep.lines.push_back("type (" + std::to_string(lambda) + ") q0 = " +
                                    std::to_string(q0) + (q0 == 0 ? " admissible" : ""));
                if (q0 == 0) ++admissible;
            } else {
                rec(0, lambda);
            }
            rep.lines.push_back("admissible = " + std::to_string(admissible));
            rep.verdict = admissible > 0 ? GDD_VERDICT_YES : GDD_VERDICT_NO;
            rep.human = "residue types with vanishing weighted count are admissible:\n" +
                        os.str() + "admissible: " + std::to_string(admissible) + "\n";
        },
        out, err);
}

} // extern "C"
