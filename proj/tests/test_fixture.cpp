#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ainf/fixture.hpp"
#include "helpers.hpp"

#ifndef AINF_FIXTURE_DIR
#define AINF_FIXTURE_DIR "tests/fixtures"
#endif

using namespace ainf;
using namespace ainf::testing;

namespace {
std::string fx(const char* name) { return std::string(AINF_FIXTURE_DIR) + "/" + name; }
}

TEST_CASE("frobenius fixture loads and passes the polarization check") {
    Fixture f = parse_fixture_file(fx("frobenius_kx2.json"));
    REQUIRE(f.D.has_value());
    REQUIRE(f.I.has_value());
    CHECK(f.weight == 4);
    CHECK(f.D->sdeg() == -1);
    CHECK(f.I->sdeg() == 0);
    CHECK(check_polarization(*f.D, *f.I).ok());
}

TEST_CASE("parse -> serialize -> parse is the identity on normal-form fixtures") {
    for (const char* name : {"frobenius_kx2.json", "fixdef_kx2.json", "gauge_kx2.json", "point.json"}) {
        Fixture f = parse_fixture_file(fx(name));
        std::string s1 = serialize_fixture(f);
        Fixture g = parse_fixture(s1);
        std::string s2 = serialize_fixture(g);
        CHECK(s1 == s2); // byte-identical: determinism + round trip
    }
}

TEST_CASE("serialization is deterministic across repeated loads") {
    std::string a = serialize_fixture(parse_fixture_file(fx("gauge_kx2.json")));
    std::string b = serialize_fixture(parse_fixture_file(fx("gauge_kx2.json")));
    CHECK(a == b);
}

TEST_CASE("fixture parse errors are structured") {
    CHECK_THROWS_AS(parse_fixture("not json"), parse_error);
    CHECK_THROWS_AS(parse_fixture("{}"), parse_error); // no space block
    CHECK_THROWS_AS(parse_fixture(R"({"space":{"basis":[{"name":"e","degree":0}]},
        "coderivation":{"components":[{"inputs":["zz"],"output":"e","coeff":"1"}]}})"),
                    parse_error);
    // degree-inhomogeneous coderivation
    CHECK_THROWS_AS(parse_fixture(R"({"space":{"basis":[{"name":"a","degree":0},{"name":"b","degree":1}]},
        "weight":3,
        "coderivation":{"components":[
            {"inputs":["a","a"],"output":"a","coeff":"1"},
            {"inputs":["a","a"],"output":"b","coeff":"1"}]}})"),
                    parse_error);
    // characteristic 2 rejected at parse time
    CHECK_THROWS_AS(parse_fixture(R"({"field":{"kind":"prime","p":2},
        "space":{"basis":[{"name":"e","degree":0}]}})"),
                    structural_error);
    // component beyond the declared weight
    CHECK_THROWS_AS(parse_fixture(R"({"space":{"basis":[{"name":"e","degree":0}]},
        "weight":2,
        "coderivation":{"components":[{"inputs":["e","e","e"],"output":"e","coeff":"1"}]}})"),
                    parse_error);
}

TEST_CASE("fixture perturbation block drives mc_check") {
    Fixture f = parse_fixture_file(fx("fixdef_kx2.json"));
    REQUIRE(f.perturbation.has_value());
    DeformationDatum datum(f.polarization(), f.ring, *f.perturbation);
    CHECK(mc_check(datum).is_zero());
}

TEST_CASE("ring spec strings") {
    auto Q = FieldSpec::rationals();
    RingPtr r1 = parse_ring_spec(Q, "t_adic:3");
    CHECK(r1->nilpotency_index() == 4);
    RingPtr r2 = parse_ring_spec(Q, "t_adic:2:2");
    CHECK(r2->generators()[0].degree == 2);
    RingPtr r3 = parse_ring_spec(Q, "square_zero:t0=0,t1=-1");
    CHECK(r3->kind() == ArtinRing::Kind::square_zero);
    CHECK(r3->generators()[1].degree == -1);
    CHECK_THROWS_AS(parse_ring_spec(Q, "bogus:1"), parse_error);
}

TEST_CASE("prime-field fixture round trip") {
    std::string text = R"({
      "field": {"kind": "prime", "p": 5},
      "space": {"basis": [{"name": "e", "degree": 0}]},
      "weight": 3,
      "coderivation": {"components": [{"inputs": ["e","e"], "output": "e", "coeff": "7"}]}
    })";
    Fixture f = parse_fixture(text);
    CHECK(f.D->entry(2, {0, 0}, 0).coeff(0) == Scalar::of_int(FieldSpec::prime(5), 2));
    std::string s1 = serialize_fixture(f);
    CHECK(serialize_fixture(parse_fixture(s1)) == s1);
}
