#include <doctest.h>

#include "dofc/parse.hpp"

using namespace dofc;

TEST_CASE("DSL parsing of a small system") {
    const char* doc =
        "dimension 2\n"
        "field A0\n"
        "field A1\n"
        "equation E: d0*A1 - d1*A0   # rotation\n";
    DiffSystem sys = parse_system(doc, SystemFormat::Dsl);
    validate(sys);
    CHECK(sys.d == 2);
    CHECK(sys.m() == 2);
    CHECK(sys.n() == 1);
    CHECK(sys.T.at(0, 0) == -Polynomial::variable(2, 1));
    CHECK(sys.T.at(0, 1) == Polynomial::variable(2, 0));
}

TEST_CASE("parameters, powers, rationals, and i") {
    const char* doc =
        "dimension 2\n"
        "parameter m = 3/2\n"
        "field u\n"
        "equation E: (d0^2 - m^2)*u + 1/2*d1*u + i*u\n";
    DiffSystem sys = parse_system(doc, SystemFormat::Dsl);
    Polynomial expect(2);
    expect.add_term({2, 0}, GaussRat(1));
    expect.add_term({0, 0}, GaussRat(Rat(-9, 4)) + GaussRat::i());
    expect.add_term({0, 1}, GaussRat(Rat(1, 2)));
    CHECK(sys.T.at(0, 0) == expect);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_system("dimension 2\nfield u\nequation E: d0*\n",
                                 SystemFormat::Dsl),
                    ParseError);
    CHECK_THROWS_AS(parse_system("dimension 2\nfield u\nequation E: d0*u + 3\n",
                                 SystemFormat::Dsl),
                    ParseError); // field-free part
    CHECK_THROWS_AS(parse_system("dimension 2\nfield u\nequation E: u*u\n",
                                 SystemFormat::Dsl),
                    ParseError); // nonlinear
    CHECK_THROWS_AS(parse_system("field u\n", SystemFormat::Dsl), ParseError); // no dimension
    CHECK_THROWS_AS(parse_system("dimension 2\nfield u\nequation E: d0*v\n",
                                 SystemFormat::Dsl),
                    ParseError); // unknown identifier
    try {
        parse_system("dimension 2\nfield u\nequation E: d0*\n", SystemFormat::Dsl);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.col > 0);
    }
}

TEST_CASE("JSON documents parse to the same system as the DSL") {
    DiffSystem a = load_system_file(std::string(SYSTEMS_DIR) + "/maxwell.dofsys");
    DiffSystem b = load_system_file(std::string(SYSTEMS_DIR) + "/maxwell.json");
    CHECK(a.T == b.T);
    CHECK(a.equations == b.equations);
}

TEST_CASE("emit_dsl round-trips") {
    for (const char* name :
         {"maxwell.dofsys", "maxwell_potential.dofsys", "proca_kg.dofsys", "div2.dofsys"}) {
        DiffSystem sys = load_system_file(std::string(SYSTEMS_DIR) + "/" + name);
        DiffSystem back = parse_system(emit_dsl(sys), SystemFormat::Dsl);
        CHECK(back.T == sys.T);
        CHECK(back.equations == sys.equations);
        CHECK(back.parameters == sys.parameters);
        for (int i = 0; i < sys.m(); ++i) {
            CHECK(back.fields[i].name == sys.fields[i].name);
            CHECK(back.fields[i].order == sys.fields[i].order);
        }
    }
}
