#include <doctest.h>

#include "dofc/resolution.hpp"
#include "dofc/system.hpp"

using namespace dofc;

namespace {
Polynomial X(int d, int i) { return Polynomial::variable(d, i); }
} // namespace

TEST_CASE("Koszul resolution of the maximal ideal in three variables") {
    Budget budget;
    int d = 3;
    FreeModule f0 = FreeModule::standard(d, 1);
    FreeModule f1(d, {1, 1, 1});
    PolyMatrix d1(d, 1, 3);
    for (int i = 0; i < 3; ++i) d1.at(0, i) = X(d, i);
    FreeResolution res = minimize(resolve(f0, f1, d1, 6, budget));
    REQUIRE(res.length() == 3);
    CHECK(compositions_vanish(res));
    CHECK(is_graded(res));
    auto b = betti_degrees(res);
    CHECK(b[0] == std::vector<int>{0});
    CHECK(b[1] == std::vector<int>{1, 1, 1});
    CHECK(b[2] == std::vector<int>{2, 2, 2});
    CHECK(b[3] == std::vector<int>{3});
}

TEST_CASE("minimization removes split summands") {
    Budget budget;
    int d = 2;
    // presentation with a unit entry: coker [[1],[x]] = coker (empty) after
    // cancelling the constant (graded with generator degrees 0 and -1)
    FreeModule f0(d, {0, -1});
    FreeModule f1 = FreeModule::standard(d, 1);
    PolyMatrix m(d, 2, 1);
    m.at(0, 0) = Polynomial::constant(d, GaussRat(1));
    m.at(1, 0) = X(d, 0);
    FreeResolution res = minimize(resolve(f0, f1, m, 4, budget));
    CHECK(res.terms[0].rank() == 1);
    CHECK(res.length() <= 1);
}

TEST_CASE("two-sided complex for T = (d0, d1)") {
    Budget budget;
    DiffSystem sys;
    sys.d = 2;
    sys.fields = {{"a", 0}, {"b", 0}};
    sys.equations = {"E"};
    sys.T = PolyMatrix(2, 1, 2);
    sys.T.at(0, 0) = X(2, 0);
    sys.T.at(0, 1) = X(2, 1);
    TwoSidedComplex c = two_sided_complex(sys, budget);
    // qf = 2 - z - z^{-1}; DoF 0; one first-order symmetry
    LaurentPoly expect;
    expect.add_term(0, 2);
    expect.add_term(1, -1);
    expect.add_term(-1, -1);
    CHECK(c.qf == expect);
    CHECK(c.qf.eval_one() == 0);
    CHECK(c.qf.derivative_one() == 0);
    BettiOrders b = betti_orders(c);
    CHECK(b.identity_orders.empty());
    REQUIRE(b.symmetry_orders.size() == 1);
    CHECK(b.symmetry_orders[0] == std::vector<int>{1});
}

TEST_CASE("two-sided resolutions are minimal, graded, and exact-composable") {
    Budget budget;
    DiffSystem sys;
    sys.d = 3;
    sys.fields = {{"a", 0}, {"b", 0}};
    sys.equations = {"E0", "E1"};
    sys.T = PolyMatrix(3, 2, 2);
    sys.T.at(0, 0) = X(3, 0);
    sys.T.at(0, 1) = X(3, 1);
    sys.T.at(1, 0) = X(3, 1);
    sys.T.at(1, 1) = X(3, 2);
    TwoSidedComplex c = two_sided_complex(sys, budget);
    for (const FreeResolution* r : {&c.v_part, &c.w_part}) {
        CHECK(r->minimal);
        CHECK(is_graded(*r));
        CHECK(compositions_vanish(*r));
        CHECK(r->length() <= sys.d);
    }
    CHECK(c.qf.eval_one() == 0);
}
