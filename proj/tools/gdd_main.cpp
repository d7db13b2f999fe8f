// Command-line front end. Links the shared library through its C interface.
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gdd/gdd.h"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

void on_interrupt(int) { gdd_interrupt(); }

std::vector<int64_t> parse_residue_list(const std::string& s) {
    std::vector<int64_t> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) throw CLI::ValidationError("--h", "empty entry in residue list");
        try {
            size_t idx = 0;
            out.push_back(std::stoll(item, &idx));
            if (idx != item.size())
                throw CLI::ValidationError("--h", "bad residue entry '" + item + "'");
        } catch (const std::exception&) {
            throw CLI::ValidationError("--h", "bad residue entry '" + item + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError("--h", "residue list is empty");
    return out;
}

struct Common {
    std::string format = "human";
    std::string expect; // "", "yes", "no"
};

int finish(const Common& common, gdd_status st, gdd_report* rep, char* err) {
    if (st != GDD_OK) {
        std::cerr << "error: " << (err ? err : "unknown") << "\n";
        gdd_string_free(err);
        gdd_report_free(rep);
        return st == GDD_ERR_RESOURCE_LIMIT ? kExitResource
                                            : (st == GDD_ERR_PARSE ? kExitUsage : kExitUsage);
    }
    char* text = gdd_report_render(rep, common.format == "machine" ? 1 : 0);
    std::cout << text;
    gdd_string_free(text);
    gdd_verdict v = gdd_report_verdict(rep);
    gdd_report_free(rep);
    int code = v == GDD_VERDICT_YES ? kExitYes : kExitNo;
    if (!common.expect.empty()) {
        bool want_yes = common.expect == "yes";
        bool got_yes = v == GDD_VERDICT_YES;
        return want_yes == got_yes ? kExitYes : kExitNo;
    }
    return code;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        std::exit(kExitUsage);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, on_interrupt);

    CLI::App app{"exact workbench for logarithmic differential forms over small "
                 "fields: verification, partition analysis, search, certification"};
    app.set_help_flag("--help", "print help"); // --h is taken by residue lists
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"human", "machine"}))
        ->capture_default_str();
    app.add_option("--expect", common.expect,
                   "exit 0 iff the verdict matches this expectation (for scripting)")
        ->check(CLI::IsMember({"yes", "no"}));

    gdd_search_options opts;
    gdd_search_options_init(&opts);
    int64_t budget = 0;
    if (const char* env = std::getenv("GDD_BUDGET")) budget = std::atoll(env);
    int shards = 0;
    int64_t field_limit = 0;
    bool all_assignments = false;
    std::string checkpoint;
    auto add_search_flags = [&](CLI::App* cmd) {
        cmd->add_option("--budget", budget, "node budget (default 50000000 or GDD_BUDGET)");
        cmd->add_option("--shards", shards, "independent shards run in parallel");
        cmd->add_option("--field-limit", field_limit, "field order ceiling (default 729)");
        cmd->add_option("--checkpoint", checkpoint, "resumable cursor file");
    };

    // verify-datum FILE
    std::string datum_path;
    auto* cmd_vd = app.add_subcommand("verify-datum", "verify a characterizing datum file");
    cmd_vd->add_option("file", datum_path, "datum file")->required();

    // verify-space FILE
    std::string space_path;
    auto* cmd_vs = app.add_subcommand("verify-space", "verify a two-form space candidate file");
    cmd_vs->add_option("file", space_path, "space file")->required();

    // partition --p P --h LIST
    int64_t p_part = 0;
    std::string h_part;
    auto* cmd_pa = app.add_subcommand("partition", "decide the partition condition for residues");
    cmd_pa->add_option("--p", p_part, "prime")->required();
    cmd_pa->add_option("--h", h_part, "comma-separated residues")->required();

    // block-structure --p P --h LIST
    int64_t p_blk = 0;
    std::string h_blk;
    auto* cmd_bs =
        app.add_subcommand("block-structure", "renumber residues into constant blocks of size p");
    cmd_bs->add_option("--p", p_blk, "prime")->required();
    cmd_bs->add_option("--h", h_blk, "comma-separated residues")->required();

    // search-datum --p P --k K --h LIST
    int64_t p_sd = 0;
    int k_sd = 1;
    std::string h_sd;
    auto* cmd_sd = app.add_subcommand("search-datum",
                                      "enumerate valid data with the given residues, one "
                                      "representative per affine orbit");
    cmd_sd->add_option("--p", p_sd, "prime")->required();
    cmd_sd->add_option("--k", k_sd, "extension degree")->required();
    cmd_sd->add_option("--h", h_sd, "comma-separated residues")->required();
    add_search_flags(cmd_sd);

    // search-space --lambda L --kmax K
    int lambda_ss = 0;
    int kmax_ss = 1;
    auto* cmd_ss =
        app.add_subcommand("search-space", "search two-form space candidates at p = 3");
    cmd_ss->add_option("--lambda", lambda_ss, "poles per set (m+1 = 3 lambda)")->required();
    cmd_ss->add_option("--kmax", kmax_ss, "largest extension degree")->required();
    cmd_ss->add_flag("--all-assignments", all_assignments,
                     "try every residue assignment instead of the pinned profiles");
    add_search_flags(cmd_ss);

    // certify [--step NAME]
    std::string step;
    auto* cmd_ce = app.add_subcommand(
        "certify", "machine-check the nonexistence certificate (15 poles per form, p = 3)");
    cmd_ce->add_option("--step", step, "run a single named step");

    // enumerate-types --p P --lambda L
    int64_t p_et = 0;
    int lambda_et = 0;
    auto* cmd_et =
        app.add_subcommand("enumerate-types", "list residue types of a lambda-element pole set");
    cmd_et->add_option("--p", p_et, "prime")->required();
    cmd_et->add_option("--lambda", lambda_et, "set size")->required();

    for (CLI::App* sc : app.get_subcommands([](CLI::App*) { return true; })) sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    if (budget > 0) opts.node_budget = budget;
    if (shards > 0) opts.shards = shards;
    if (field_limit > 0) opts.field_order_limit = field_limit;
    opts.all_residue_assignments = all_assignments ? 1 : 0;
    if (!checkpoint.empty()) opts.checkpoint_path = checkpoint.c_str();

    gdd_report* rep = nullptr;
    char* err = nullptr;
    gdd_status st = GDD_OK;

    try {
        if (cmd_vd->parsed()) {
            std::string text = read_file(datum_path);
            st = gdd_verify_datum(text.c_str(), &rep, &err);
        } else if (cmd_vs->parsed()) {
            std::string text = read_file(space_path);
            st = gdd_verify_space(text.c_str(), &rep, &err);
        } else if (cmd_pa->parsed()) {
            auto h = parse_residue_list(h_part);
            st = gdd_partition_condition(p_part, h.data(), h.size(), &rep, &err);
        } else if (cmd_bs->parsed()) {
            auto h = parse_residue_list(h_blk);
            st = gdd_block_structure(p_blk, h.data(), h.size(), &rep, &err);
        } else if (cmd_sd->parsed()) {
            auto h = parse_residue_list(h_sd);
            st = gdd_search_datum(p_sd, k_sd, h.data(), h.size(), &opts, &rep, &err);
        } else if (cmd_ss->parsed()) {
            st = gdd_search_space(lambda_ss, kmax_ss, &opts, &rep, &err);
        } else if (cmd_ce->parsed()) {
            st = gdd_certify(step.empty() ? nullptr : step.c_str(), &rep, &err);
        } else if (cmd_et->parsed()) {
            st = gdd_enumerate_types(p_et, lambda_et, &rep, &err);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    return finish(common, st, rep, err);
}
