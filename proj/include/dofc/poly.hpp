#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dofc/coeff.hpp"

namespace dofc {

// Exponent vector of a monomial in d differentiation symbols.
using Exps = std::vector<int>;

inline int total_degree(const Exps& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}

bool divides(const Exps& a, const Exps& b);     // a | b componentwise
Exps exps_sub(const Exps& a, const Exps& b);    // a - b (pre: b | a)
Exps exps_add(const Exps& a, const Exps& b);
Exps exps_lcm(const Exps& a, const Exps& b);
bool exps_coprime(const Exps& a, const Exps& b);

// degrevlex comparison: returns <0, 0, >0 as a <, =, > b.
int degrevlex_cmp(const Exps& a, const Exps& b);

// Sparse multivariate polynomial in the differentiation symbols.
struct Polynomial {
    int nvars = 0;
    std::map<Exps, GaussRat> terms; // zero coefficients never stored

    Polynomial() = default;
    explicit Polynomial(int d) : nvars(d) {}
    static Polynomial constant(int d, const GaussRat& c);
    static Polynomial monomial(const Exps& e, const GaussRat& c);
    static Polynomial variable(int d, int idx); // the symbol ∂_idx

    bool is_zero() const { return terms.empty(); }
    // Degree of the zero polynomial is the nullopt sentinel.
    std::optional<int> degree() const;
    bool is_constant() const;
    GaussRat constant_coeff() const;

    void add_term(const Exps& e, const GaussRat& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scale(const GaussRat& c) const;
    bool operator==(const Polynomial& o) const;

    bool is_homogeneous() const;
    std::optional<int> homogeneous_degree() const; // degree if homogeneous
    Polynomial homogeneous_part(int k) const;
    Polynomial top_form() const; // pre: nonzero
    // Transpose-reflection: coefficients conjugated, degree-k monomials get (-1)^k.
    Polynomial hermitian_conjugate() const;

    std::string str(const std::vector<std::string>& varnames) const;
    std::string str() const; // default names d0..d{nvars-1}
};

} // namespace dofc
