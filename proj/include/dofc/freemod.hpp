#pragma once
#include <map>
#include <utility>
#include <vector>

#include "dofc/error.hpp"
#include "dofc/poly.hpp"

namespace dofc {

// Graded free module P(-degs[0]) ⊕ ... ⊕ P(-degs[rank-1]).
struct FreeModule {
    int nvars = 0;
    std::vector<int> degs;
    FreeModule() = default;
    FreeModule(int d, std::vector<int> g) : nvars(d), degs(std::move(g)) {}
    static FreeModule standard(int d, int rank) { return FreeModule(d, std::vector<int>(rank, 0)); }
    int rank() const { return (int)degs.size(); }
};

// Module monomial: (component index, exponent vector).
using ModMono = std::pair<int, Exps>;

// Element of a free module of given rank.
struct Vec {
    int nvars = 0, rank = 0;
    std::map<ModMono, GaussRat> terms;

    Vec() = default;
    Vec(int d, int r) : nvars(d), rank(r) {}
    static Vec unit(int d, int r, int comp);
    static Vec from_polys(const std::vector<Polynomial>& comps);

    bool is_zero() const { return terms.empty(); }
    void add_term(const ModMono& m, const GaussRat& c);
    Vec operator+(const Vec& o) const;
    Vec operator-(const Vec& o) const;
    Vec scale(const GaussRat& c) const;
    // v * c * x^e
    Vec mul_mono(const Exps& e, const GaussRat& c) const;
    Vec mul_poly(const Polynomial& p) const;
    bool operator==(const Vec& o) const { return rank == o.rank && terms == o.terms; }

    Polynomial component(int i) const;
    std::vector<Polynomial> components() const;

    // Shifted degree of a term = |exps| + shifts[comp].
    int top_shifted_degree(const std::vector<int>& shifts) const; // pre: nonzero
    Vec top_form(const std::vector<int>& shifts) const;           // pre: nonzero
    bool is_homogeneous(const std::vector<int>& shifts) const;
    // Max plain total degree over all terms (0 for the zero vector).
    int plain_degree() const;
};

// Shifted-degree-first degrevlex-over-position order.
struct ModOrder {
    std::vector<int> shifts; // one per component
    ModOrder() = default;
    explicit ModOrder(std::vector<int> s) : shifts(std::move(s)) {}
    static ModOrder standard(int rank) { return ModOrder(std::vector<int>(rank, 0)); }
    int sdeg(const ModMono& m) const { return total_degree(m.second) + shifts[m.first]; }
    int cmp(const ModMono& a, const ModMono& b) const; // <0, 0, >0
    bool less(const ModMono& a, const ModMono& b) const { return cmp(a, b) < 0; }
};

struct GBElem {
    Vec v;
    ModMono lt;
    GaussRat lc;
};

struct GroebnerBasis {
    ModOrder ord;
    std::vector<GBElem> elems; // reduced, monic, sorted by leading term
};

ModMono leading_term(const Vec& v, const ModOrder& ord); // pre: nonzero

// Remainder of v on division by G; no remainder term divisible by a leading term.
Vec normal_form(const Vec& v, const GroebnerBasis& G, Budget& budget);

// Canonical reduced monic Groebner basis of span(gens).
GroebnerBasis groebner(const std::vector<Vec>& gens, const ModOrder& ord, Budget& budget);

// Generators of { (c_1..c_s) : Σ c_k gens_k = 0 }, in a rank-#gens module.
// Schreyer-style: cofactor tracking through Buchberger completion.
std::vector<Vec> syzygies(const std::vector<Vec>& gens, const ModOrder& ord, Budget& budget);

// Span-preserving autoreduction of a generating set (drop/shrink redundancy).
std::vector<Vec> interreduce(std::vector<Vec> gens, const ModOrder& ord, Budget& budget);

// Generators of lt(span(gens)) = the top-form module, via a GB.
std::vector<Vec> top_form_submodule(const std::vector<Vec>& gens, const ModOrder& ord,
                                    Budget& budget);

bool submodule_contains(const GroebnerBasis& G, const Vec& v, Budget& budget);
bool submodule_equal(const std::vector<Vec>& A, const std::vector<Vec>& B, const ModOrder& ord,
                     Budget& budget);

// Dense polynomial matrix, row-major.
struct PolyMatrix {
    int nrows = 0, ncols = 0, nvars = 0;
    std::vector<Polynomial> a;

    PolyMatrix() = default;
    PolyMatrix(int d, int nr, int nc)
        : nrows(nr), ncols(nc), nvars(d), a(nr * nc, Polynomial(d)) {}
    Polynomial& at(int r, int c) { return a[r * ncols + c]; }
    const Polynomial& at(int r, int c) const { return a[r * ncols + c]; }

    Vec col(int c) const;
    Vec row(int r) const;
    std::vector<Vec> cols() const;
    std::vector<Vec> rows() const;
    static PolyMatrix from_cols(int nvars, int nrows, const std::vector<Vec>& columns);
    PolyMatrix transpose() const;
    PolyMatrix hermitian_transpose() const;
    PolyMatrix mul(const PolyMatrix& o) const;
    bool is_zero() const;
    bool operator==(const PolyMatrix& o) const;
};

// Kernel of the map source -> target given by matrix M (columns in the target
// module); equals the syzygies of the columns.
std::vector<Vec> kernel_of_map(const PolyMatrix& M, const ModOrder& target_ord, Budget& budget);

} // namespace dofc
