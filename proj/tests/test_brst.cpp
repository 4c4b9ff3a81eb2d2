#include <doctest.h>

#include "dofc/brst.hpp"
#include "dofc/dof.hpp"
#include "dofc/parse.hpp"

using namespace dofc;

namespace {
TwoSidedComplex maxwell_complex() {
    Budget budget;
    DiffSystem sys = load_system_file(std::string(SYSTEMS_DIR) + "/maxwell.dofsys");
    return two_sided_complex(sys, budget);
}
} // namespace

TEST_CASE("Maxwell BRST generators at the minimal shift") {
    TwoSidedComplex c = maxwell_complex();
    CHECK(min_valid_shift(c) == 1);
    auto gens = brst_generators(c, 1);
    // 6 fields (ghost 0, order 1), 8 antifields (ghost -1, order 2),
    // 2 second-stage generators (ghost -2, order 3)
    long n0 = 0, n1 = 0, n2 = 0;
    for (auto& g : gens) {
        if (g.ghost == 0 && g.order == 1) n0 += g.count;
        if (g.ghost == -1 && g.order == 2) n1 += g.count;
        if (g.ghost == -2 && g.order == 3) n2 += g.count;
    }
    CHECK(n0 == 6);
    CHECK(n1 == 8);
    CHECK(n2 == 2);
}

TEST_CASE("Maxwell Euler characteristic and DoF") {
    TwoSidedComplex c = maxwell_complex();
    BrstData b = brst_route(c, 1);
    CHECK(b.chi.factors == std::map<int, long>{{1, -6}, {2, 8}, {3, -2}});
    CHECK(b.dof == 4);
    CHECK(b.chi_str == "(1-z)^-6 (1-z^2)^8 (1-z^3)^-2");
    CHECK(b.pc_str == "(1+tz^2)^8 / ((1-z)^6 (1-t^2z^3)^2)");
}

TEST_CASE("DoF is independent of the shift") {
    TwoSidedComplex c = maxwell_complex();
    for (int shift : {1, 2, 5}) CHECK(brst_route(c, shift).dof == 4);
    CHECK(brst_route(c).dof == 4); // auto shift
}

TEST_CASE("too-small shifts are rejected") {
    TwoSidedComplex c = maxwell_complex();
    CHECK_THROWS_AS(brst_generators(c, 0), InvalidSystem);
}

TEST_CASE("dual Euler characteristic agrees (residue at zero)") {
    TwoSidedComplex c = maxwell_complex();
    BrstData b = brst_route(c, 1);
    DualEuler de = dual_euler(b.chi, 4);
    CHECK(-de.lead_power == b.dof);
    CHECK(dof_from_euler(b.chi) == b.dof);
}
