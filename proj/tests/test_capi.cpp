// Exercises the shared library strictly through the C interface.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "gdd/gdd.h"

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}
} // namespace

TEST_CASE("verify datum through the C interface") {
    std::string text = slurp(std::string(GDD_TEST_DATA) + "/datum_triple.gdd");
    gdd_report* rep = nullptr;
    char* err = nullptr;
    REQUIRE(gdd_verify_datum(text.c_str(), &rep, &err) == GDD_OK);
    CHECK(gdd_report_verdict(rep) == GDD_VERDICT_YES);
    bool saw_u = false;
    for (size_t i = 0; i < gdd_report_line_count(rep); ++i)
        saw_u |= std::string(gdd_report_line(rep, i)) == "u = 2";
    CHECK(saw_u);
    REQUIRE(gdd_report_artifact_count(rep) == 1);
    CHECK(std::string(gdd_report_artifact(rep, 0)) == text); // canonical round-trip
    char* rendered = gdd_report_render(rep, 0);
    CHECK(std::string(rendered).find("valid, u = 2") != std::string::npos);
    gdd_string_free(rendered);
    gdd_report_free(rep);

    // parse errors surface as GDD_ERR_PARSE with a message
    rep = nullptr;
    err = nullptr;
    CHECK(gdd_verify_datum("gdd-datum v1\nbogus\n", &rep, &err) == GDD_ERR_PARSE);
    REQUIRE(err != nullptr);
    CHECK(std::string(err).find("line") != std::string::npos);
    gdd_string_free(err);
    CHECK(rep == nullptr);
}

TEST_CASE("verify space through the C interface") {
    std::string text = slurp(std::string(GDD_TEST_DATA) + "/space_f9.gdd");
    gdd_report* rep = nullptr;
    char* err = nullptr;
    REQUIRE(gdd_verify_space(text.c_str(), &rep, &err) == GDD_OK);
    CHECK(gdd_report_verdict(rep) == GDD_VERDICT_YES);
    gdd_report_free(rep);
}

TEST_CASE("partition and block structure") {
    int64_t bad[] = {1, 1, -1, -1};
    gdd_report* rep = nullptr;
    char* err = nullptr;
    REQUIRE(gdd_partition_condition(5, bad, 4, &rep, &err) == GDD_OK);
    CHECK(gdd_report_verdict(rep) == GDD_VERDICT_NO);
    gdd_report_free(rep);

    int64_t good[] = {1, 1, 1};
    rep = nullptr;
    REQUIRE(gdd_partition_condition(3, good, 3, &rep, &err) == GDD_OK);
    CHECK(gdd_report_verdict(rep) == GDD_VERDICT_YES);
    gdd_report_free(rep);

    int64_t blocks[] = {1, 2, 1, 2, 1, 2};
    rep = nullptr;
    REQUIRE(gdd_block_structure(3, blocks, 6, &rep, &err) == GDD_OK);
    CHECK(gdd_report_verdict(rep) == GDD_VERDICT_YES);
    gdd_report_free(rep);

    // precondition violation: sum != 0
    int64_t unbalanced[] = {1, 1};
    rep = nullptr;
    err = nullptr;
    CHECK(gdd_partition_condition(3, unbalanced, 2, &rep, &err) != GDD_OK);
    gdd_string_free(err);
}

TEST_CASE("searches through the C interface") {
    gdd_search_options opts;
    gdd_search_options_init(&opts);

    int64_t h[] = {1, 1, 1};
    gdd_report* rep = nullptr;
    char* err = nullptr;
    REQUIRE(gdd_search_datum(3, 1, h, 3, &opts, &rep, &err) == GDD_OK);
    CHECK(gdd_report_verdict(rep) == GDD_VERDICT_YES);
    CHECK(gdd_report_artifact_count(rep) == 1);
    gdd_report_free(rep);

    rep = nullptr;
    REQUIRE(gdd_search_space(1, 3, &opts, &rep, &err) == GDD_OK);
    CHECK(gdd_report_verdict(rep) == GDD_VERDICT_NO); // none exist
    gdd_report_free(rep);

    rep = nullptr;
    REQUIRE(gdd_search_space(2, 2, &opts, &rep, &err) == GDD_OK);
    CHECK(gdd_report_verdict(rep) == GDD_VERDICT_YES);
    CHECK(gdd_report_artifact_count(rep) >= 1);
    gdd_report_free(rep);

    // tiny budget raises the resource status
    opts.node_budget = 3;
    rep = nullptr;
    err = nullptr;
    CHECK(gdd_search_space(2, 2, &opts, &rep, &err) == GDD_ERR_RESOURCE_LIMIT);
    gdd_string_free(err);
}

TEST_CASE("single certificate step through the C interface") {
    gdd_report* rep = nullptr;
    char* err = nullptr;
    REQUIRE(gdd_certify("newton_shapes", &rep, &err) == GDD_OK);
    CHECK(gdd_report_verdict(rep) == GDD_VERDICT_YES);
    bool found = false;
    for (size_t i = 0; i < gdd_report_line_count(rep); ++i)
        found |= std::string(gdd_report_line(rep, i)) == "step newton_shapes status=verified";
    CHECK(found);
    gdd_report_free(rep);

    rep = nullptr;
    err = nullptr;
    CHECK(gdd_certify("no_such_step", &rep, &err) == GDD_ERR_INVALID_ARGUMENT);
    gdd_string_free(err);
}

TEST_CASE("type enumeration") {
    gdd_report* rep = nullptr;
    char* err = nullptr;
    REQUIRE(gdd_enumerate_types(3, 5, &rep, &err) == GDD_OK);
    CHECK(gdd_report_verdict(rep) == GDD_VERDICT_YES);
    int admissible = 0;
    for (size_t i = 0; i < gdd_report_line_count(rep); ++i) {
        std::string line = gdd_report_line(rep, i);
        if (line.find("admissible") != std::string::npos && line.rfind("type", 0) == 0)
            ++admissible;
    }
    CHECK(admissible == 2); // (4,1) and (1,4)
    gdd_report_free(rep);
}
