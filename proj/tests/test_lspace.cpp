#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gdd/formats.hpp"
#include "gdd/lspace.hpp"

using namespace gdd;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

LSpaceCandidate known_space() { return parse_lspace(slurp(std::string(GDD_TEST_DATA) + "/space_f9.gdd")); }

} // namespace

TEST_CASE("the frozen F_9 candidate passes every check") {
    LSpaceCandidate c = known_space();
    LSpaceReport rep = verify_lspace(c);
    for (const auto& ch : rep.checks) {
        INFO(ch.name << " " << ch.detail);
        CHECK(ch.passed);
    }
    CHECK(rep.passes);

    // the theorem-level consequences hold on every accepted candidate
    CHECK(check_symmetric_transfer(c));
    CHECK(check_common_s1(c));
    CHECK(check_q_relations(c));
    CHECK(check_polynomial_identity(c));
    TypeProfile tp = type_profile(c);
    CHECK(tp.admissible);
    for (const auto& t : tp.types) CHECK(t == std::vector<int64_t>{1, 1});

    CHECK(shared_pole_count(c) == 4); // lambda (p-1) = 2 * 2

    // every nonzero combination of the two basis forms is a valid datum
    for (int64_t c1 = 0; c1 < 3; ++c1)
        for (int64_t c2 = 0; c2 < 3; ++c2) {
            if (c1 == 0 && c2 == 0) continue;
            CharacterizingDatum d = combination_datum(c, c1, c2);
            CHECK(d.m_plus_1() == 6);
            CHECK(verify_datum(d).valid);
        }
}

TEST_CASE("assembled forms carry the expected leading moments") {
    LSpaceCandidate c = known_space();
    for (int j = 0; j <= 3; ++j) {
        CharacterizingDatum d = assemble_form(c, j);
        CHECK(d.m_plus_1() == 6);
        DatumVerdict v = verify_datum(d);
        REQUIRE(v.valid);
        FieldElement expect = j == 3 ? c.v()
                                     : c.u() + FieldElement::from_int(c.spec(), j) * c.v();
        CHECK(v.u == expect);
    }
}

TEST_CASE("perturbations are rejected") {
    LSpaceCandidate c = known_space();

    // duplicate a pole across sets
    {
        auto sets = c.pole_sets();
        sets[1][0] = sets[0][0];
        LSpaceCandidate bad(c.p(), c.lambda(), c.spec(), sets, c.r1(), c.r2(), c.u(), c.v());
        CHECK(!verify_lspace(bad).passes);
    }
    // break a residue constraint: r1 must vanish exactly on X^(0)
    {
        auto r1 = c.r1();
        r1[0][0] = 1;
        LSpaceCandidate bad(c.p(), c.lambda(), c.spec(), c.pole_sets(), r1, c.r2(), c.u(), c.v());
        CHECK(!verify_lspace(bad).passes);
    }
    // a = u/v inside F_3
    {
        LSpaceCandidate bad(c.p(), c.lambda(), c.spec(), c.pole_sets(), c.r1(), c.r2(), c.v(),
                            c.v());
        CHECK(!verify_lspace(bad).passes);
    }
    // moving one pole of X^(1) breaks the symmetric-function transfer
    {
        auto sets = c.pole_sets();
        FieldElement probe = sets[1][0];
        for (int64_t i = 0; i < c.spec()->order(); ++i) {
            probe = FieldElement::from_index(c.spec(), i);
            bool taken = false;
            for (const auto& s : sets)
                for (const auto& x : s) taken |= x == probe;
            if (!taken) break;
        }
        sets[1][0] = probe;
        LSpaceCandidate bad(c.p(), c.lambda(), c.spec(), sets, c.r1(), c.r2(), c.u(), c.v());
        CHECK(!check_symmetric_transfer(bad));
        CHECK(!verify_lspace(bad).passes);
    }
}

TEST_CASE("wrong prime raises") {
    LSpaceCandidate c = known_space();
    CHECK(c.p() == 3);
    CHECK_NOTHROW(check_q_relations(c));
    CHECK(dimension_shape_ok(3, 2, 6));
    CHECK(dimension_shape_ok(3, 2, 15));
    CHECK(!dimension_shape_ok(3, 2, 7));
    CHECK(dimension_shape_ok(3, 1, 7)); // one-dimensional: any m+1
    CHECK(!dimension_shape_ok(3, 3, 15));
}

TEST_CASE("paper residue view") {
    LSpaceCandidate c = known_space();
    for (int i = 0; i < c.lambda(); ++i) {
        CHECK(c.h(0, i) == c.r2()[0][static_cast<size_t>(i)]);
        for (int j = 1; j <= 3; ++j)
            CHECK(c.h(j, i) == c.r1()[static_cast<size_t>(j)][static_cast<size_t>(i)]);
    }
}
