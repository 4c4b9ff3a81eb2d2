#include <doctest.h>

#include "dofc/laurent.hpp"

using namespace dofc;

namespace {
LaurentPoly make(std::initializer_list<std::pair<int, int>> terms) {
    LaurentPoly p;
    for (auto& [e, c] : terms) p.add_term(e, Rat(c));
    return p;
}
} // namespace

TEST_CASE("laurent arithmetic and evaluation") {
    LaurentPoly p = make({{0, 6}, {1, -8}, {2, 2}});
    CHECK(p.eval_one() == 0);
    CHECK(p.derivative_one() == -4);
    CHECK(p.str() == "6 - 8*z + 2*z^2");
    CHECK((p * make({{0, 1}})).str() == p.str());
    CHECK((p - p).is_zero());
    LaurentPoly q = make({{-1, -1}, {0, 4}, {2, -4}, {3, 1}});
    CHECK(q.eval_one() == 0);
    CHECK(-q.derivative_one() == 4);
    CHECK(q.str() == "-z^-1 + 4 - 4*z^2 + z^3");
}

TEST_CASE("division by (1-z) is exact") {
    LaurentPoly p = make({{0, 1}, {3, -1}}); // 1 - z^3 = (1-z)(1+z+z^2)
    LaurentPoly q = p.div_one_minus_z();
    CHECK(q == make({{0, 1}, {1, 1}, {2, 1}}));
    CHECK(q.mul_one_minus_z() == p);
    LaurentPoly neg = make({{-2, 1}, {1, -1}});
    CHECK(neg.div_one_minus_z().mul_one_minus_z() == neg);
}

TEST_CASE("series reduction cancels all unit poles") {
    RationalSeries s = series_reduce(make({{0, 1}, {1, -2}, {2, 1}}), 3); // (1-z)^2/(1-z)^3
    CHECK(s.pole_order == 1);
    CHECK(s.num == make({{0, 1}}));
    RationalSeries z = series_reduce(LaurentPoly(), 4);
    CHECK(z.pole_order == 0);
    CHECK(z.num.is_zero());
}

TEST_CASE("series coefficients match binomial counts") {
    // 1/(1-z)^3: C(n+2,2)
    RationalSeries s{LaurentPoly::constant(1), 3};
    auto c = series_coefficients(s, 5);
    for (int n = 0; n <= 5; ++n) CHECK(c[n] == binom(n + 2, 2));
    // z^2/(1-z): step function
    RationalSeries t{LaurentPoly::term(1, 2), 1};
    auto ct = series_coefficients(t, 4);
    CHECK(ct[1] == 0);
    CHECK(ct[2] == 1);
    CHECK(ct[4] == 1);
}

TEST_CASE("binomials") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(7, 0) == 1);
    CHECK(binom(5, -1) == 0);
}
