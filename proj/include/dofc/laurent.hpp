#pragma once
#include <map>
#include <string>
#include <vector>

#include "dofc/coeff.hpp"

namespace dofc {

// Laurent polynomial in one variable z with rational coefficients.
struct LaurentPoly {
    std::map<int, Rat> c; // exponent -> coefficient, zeros never stored

    LaurentPoly() = default;
    static LaurentPoly constant(const Rat& r);
    static LaurentPoly term(const Rat& r, int exp);

    bool is_zero() const { return c.empty(); }
    int min_exp() const; // pre: nonzero
    int max_exp() const; // pre: nonzero
    Rat coeff(int exp) const;
    void add_term(int exp, const Rat& r);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return c == o.c; }

    Rat eval_one() const;       // value at z = 1
    Rat derivative_one() const; // value of d/dz at z = 1

    LaurentPoly mul_one_minus_z() const;
    // Exact division by (1 - z); pre: eval_one() == 0 (or zero input).
    LaurentPoly div_one_minus_z() const;

    std::string str(const std::string& var = "z") const;
};

// numerator / (1-z)^pole_order, canonical: numerator(1) != 0 or pole_order == 0.
struct RationalSeries {
    LaurentPoly num;
    int pole_order = 0;
    bool operator==(const RationalSeries& o) const {
        return pole_order == o.pole_order && num == o.num;
    }
};

// Cancel all (1-z) factors from numerator/(1-z)^d.
RationalSeries series_reduce(LaurentPoly numerator, int d);

// Power-series coefficients z^0..z^nmax of num/(1-z)^pole.
std::vector<Rat> series_coefficients(const RationalSeries& s, int nmax);

// Exact binomial C(n, k) as a rational (0 when n < k or k < 0).
Rat binom(long n, long k);

} // namespace dofc
