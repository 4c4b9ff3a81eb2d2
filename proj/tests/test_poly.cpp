#include <doctest.h>

#include "dofc/poly.hpp"

using namespace dofc;

TEST_CASE("degrevlex ordering") {
    // degree dominates
    CHECK(degrevlex_cmp({2, 0}, {1, 0}) > 0);
    // same degree: rightmost differing exponent smaller wins
    CHECK(degrevlex_cmp({1, 1, 0}, {0, 2, 0}) > 0); // xy > y^2
    CHECK(degrevlex_cmp({2, 0, 0}, {1, 1, 0}) > 0); // x^2 > xy
    CHECK(degrevlex_cmp({1, 0, 1}, {0, 2, 0}) < 0); // xz < y^2
    CHECK(degrevlex_cmp({1, 2}, {1, 2}) == 0);
}

TEST_CASE("exponent helpers") {
    CHECK(divides({1, 0}, {2, 1}));
    CHECK(!divides({1, 2}, {2, 1}));
    CHECK(exps_lcm({1, 2}, {2, 0}) == Exps{2, 2});
    CHECK(exps_sub({2, 1}, {1, 0}) == Exps{1, 1});
    CHECK(exps_coprime({1, 0}, {0, 2}));
    CHECK(!exps_coprime({1, 1}, {0, 2}));
}

TEST_CASE("polynomial arithmetic and degrees") {
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    Polynomial p = x * x - y * y;
    CHECK(*p.degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK(*p.homogeneous_degree() == 2);
    Polynomial q = p + Polynomial::constant(2, GaussRat(3));
    CHECK(!q.is_homogeneous());
    CHECK(q.homogeneous_part(0) == Polynomial::constant(2, GaussRat(3)));
    CHECK(q.homogeneous_part(2) == p);
    CHECK(q.homogeneous_part(1).is_zero());
    CHECK(!Polynomial(2).degree().has_value());
    CHECK(q.top_form() == p);
}

TEST_CASE("hermitian conjugation flips odd degrees and conjugates") {
    Polynomial x = Polynomial::variable(2, 0);
    Polynomial p = x.scale(GaussRat::i()) + Polynomial::constant(2, GaussRat(2));
    Polynomial h = p.hermitian_conjugate();
    // i*x -> conj(i)*(-x) = i*x ; constant 2 stays
    CHECK(h == p);
    Polynomial q = x + Polynomial::constant(2, GaussRat(1));
    CHECK(q.hermitian_conjugate() == Polynomial::constant(2, GaussRat(1)) - x);
    CHECK(q.hermitian_conjugate().hermitian_conjugate() == q);
}

TEST_CASE("polynomial printing") {
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    Polynomial p = x * x - y.scale(GaussRat(2));
    CHECK(p.str({"x", "y"}) == "x^2 - 2*y");
    CHECK(Polynomial(2).str() == "0");
}
