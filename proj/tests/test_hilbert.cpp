#include <doctest.h>

#include "dofc/hilbert.hpp"

using namespace dofc;

namespace {
Polynomial X(int d, int i) { return Polynomial::variable(d, i); }
Vec vec1(const Polynomial& p) { return Vec::from_polys({p}); }
} // namespace

TEST_CASE("monomial quotient numerators") {
    FreeModule amb = FreeModule::standard(2, 1);
    // P/(x): numerator (1-z)
    LaurentPoly n1 = monomial_quotient_numerator({{0, {1, 0}}}, amb);
    LaurentPoly expect;
    expect.add_term(0, 1);
    expect.add_term(1, -1);
    CHECK(n1 == expect);
    // P/(x^2, y): (1-z)(1-z^2)
    LaurentPoly n2 = monomial_quotient_numerator({{0, {2, 0}}, {0, {0, 1}}}, amb);
    LaurentPoly e2;
    e2.add_term(0, 1);
    e2.add_term(2, -1);
    CHECK(n2 == expect * e2);
    // unit generator kills the component
    CHECK(monomial_quotient_numerator({{0, {0, 0}}}, amb).is_zero());
    // empty: full free module
    LaurentPoly n3 = monomial_quotient_numerator({}, amb);
    CHECK(n3 == LaurentPoly::constant(1));
    // non-pure-power recursion: P/(xy) in d=2 has dimension 1, multiplicity 2
    HilbertData h = hilbert_from_numerator(monomial_quotient_numerator({{0, {1, 1}}}, amb), 2);
    CHECK(h.dimension == 1);
    CHECK(h.multiplicity == 2);
}

TEST_CASE("hilbert data of free and zero modules") {
    Budget budget;
    FreeModule amb = FreeModule::standard(2, 1);
    std::vector<Vec> full = {Vec::unit(2, 1, 0)};
    HilbertData free_mod = hilbert_data(full, {}, amb, budget);
    CHECK(!free_mod.zero);
    CHECK(free_mod.dimension == 2);
    CHECK(free_mod.multiplicity == 1);
    HilbertData zero_mod = hilbert_data(full, full, amb, budget);
    CHECK(zero_mod.zero);
    CHECK(e_at(zero_mod, 0) == 0);
    CHECK(e_at(zero_mod, 1) == 0);
}

TEST_CASE("membership of the denominator is enforced") {
    Budget budget;
    FreeModule amb = FreeModule::standard(2, 1);
    std::vector<Vec> num = {vec1(X(2, 0))};
    std::vector<Vec> den = {vec1(X(2, 1))}; // not inside <x>
    CHECK_THROWS_AS(hilbert_data(num, den, amb, budget), InvalidSystem);
}

TEST_CASE("e_at and dimension guards") {
    Budget budget;
    FreeModule amb = FreeModule::standard(2, 1);
    // P/(x) has dimension 1, multiplicity 1
    HilbertData h = hilbert_data({Vec::unit(2, 1, 0)}, {vec1(X(2, 0))}, amb, budget);
    CHECK(h.dimension == 1);
    CHECK(e_at(h, 1) == 1);
    CHECK(e_at(h, 2) == 0); // lower-dimensional modules count 0 at higher q
    CHECK_THROWS_AS(e_at(h, 0), InternalError);
    CHECK(q_derivative_multiplicity(h) == 1);
}

TEST_CASE("hilbert polynomial matches the series beyond the threshold") {
    Budget budget;
    FreeModule amb = FreeModule::standard(3, 2);
    std::vector<Vec> num = {Vec::unit(3, 2, 0), Vec::unit(3, 2, 1)};
    std::vector<Vec> den = {Vec::from_polys({X(3, 0) * X(3, 0), Polynomial(3)}),
                            Vec::from_polys({Polynomial(3), X(3, 1)})};
    HilbertData h = hilbert_data(num, den, amb, budget);
    auto coeffs = series_coefficients(h.series, h.stab_threshold + 6);
    for (int n = h.stab_threshold; n <= h.stab_threshold + 6; ++n)
        CHECK(coeffs[n] == hilbert_poly_value(h, n));
}

TEST_CASE("q_poly additivity on a hand example") {
    Budget budget;
    FreeModule amb = FreeModule::standard(2, 1);
    std::vector<Vec> big = {vec1(X(2, 0)), vec1(X(2, 1) * X(2, 1))};
    std::vector<Vec> small = {vec1(X(2, 0))};
    HilbertData m = hilbert_data(big, {}, amb, budget);
    HilbertData sub = hilbert_data(small, {}, amb, budget);
    HilbertData quot = hilbert_data(big, small, amb, budget);
    CHECK(m.q_poly == sub.q_poly + quot.q_poly);
}
