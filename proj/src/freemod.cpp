#include "dofc/freemod.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace dofc {

Vec Vec::unit(int d, int r, int comp) {
    Vec v(d, r);
    v.terms[{comp, Exps(d, 0)}] = GaussRat(1);
    return v;
}

Vec Vec::from_polys(const std::vector<Polynomial>& comps) {
    int d = comps.empty() ? 0 : comps[0].nvars;
    Vec v(d, (int)comps.size());
    for (int i = 0; i < (int)comps.size(); ++i)
        for (auto& [e, c] : comps[i].terms) v.terms[{i, e}] = c;
    return v;
}

void Vec::add_term(const ModMono& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Vec Vec::operator+(const Vec& o) const {
    Vec r = *this;
    for (auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
}

Vec Vec::operator-(const Vec& o) const {
    Vec r = *this;
    for (auto& [m, c] : o.terms) r.add_term(m, -c);
    return r;
}

Vec Vec::scale(const GaussRat& c) const {
    Vec r(nvars, rank);
    if (c.is_zero()) return r;
    for (auto& [m, v] : terms) r.terms[m] = v * c;
    return r;
}

Vec Vec::mul_mono(const Exps& e, const GaussRat& c) const {
    Vec r(nvars, rank);
    if (c.is_zero()) return r;
    for (auto& [m, v] : terms) r.terms[{m.first, exps_add(m.second, e)}] = v * c;
    return r;
}

Vec Vec::mul_poly(const Polynomial& p) const {
    Vec r(nvars, rank);
    for (auto& [e, c] : p.terms) r = r + mul_mono(e, c);
    return r;
}

Polynomial Vec::component(int i) const {
    Polynomial p(nvars);
    for (auto& [m, c] : terms)
        if (m.first == i) p.terms[m.second] = c;
    return p;
}

std::vector<Polynomial> Vec::components() const {
    std::vector<Polynomial> out(rank, Polynomial(nvars));
    for (auto& [m, c] : terms) out[m.first].terms[m.second] = c;
    return out;
}

int Vec::top_shifted_degree(const std::vector<int>& shifts) const {
    if (is_zero()) throw InternalError("top_shifted_degree of zero vector");
    int best = 0;
    bool first = true;
    for (auto& [m, c] : terms) {
        int sd = total_degree(m.second) + shifts[m.first];
        if (first || sd > best) best = sd;
        first = false;
    }
    return best;
}

Vec Vec::top_form(const std::vector<int>& shifts) const {
    int top = top_shifted_degree(shifts);
    Vec r(nvars, rank);
    for (auto& [m, c] : terms)
        if (total_degree(m.second) + shifts[m.first] == top) r.terms[m] = c;
    return r;
}

bool Vec::is_homogeneous(const std::vector<int>& shifts) const {
    if (is_zero()) return true;
    int top = top_shifted_degree(shifts);
    for (auto& [m, c] : terms)
        if (total_degree(m.second) + shifts[m.first] != top) return false;
    return true;
}

int Vec::plain_degree() const {
    int best = 0;
    for (auto& [m, c] : terms) best = std::max(best, total_degree(m.second));
    return best;
}

int ModOrder::cmp(const ModMono& a, const ModMono& b) const {
    int da = sdeg(a), db = sdeg(b);
    if (da != db) return da < db ? -1 : 1;
    int c = degrevlex_cmp(a.second, b.second);
    if (c != 0) return c;
    // position tie-break, ascending: the earlier component is the larger monomial
    if (a.first != b.first) return a.first > b.first ? -1 : 1;
    return 0;
}

ModMono leading_term(const Vec& v, const ModOrder& ord) {
    if (v.is_zero()) throw InternalError("leading term of zero vector");
    auto it = v.terms.begin();
    ModMono best = it->first;
    for (++it; it != v.terms.end(); ++it)
        if (ord.cmp(it->first, best) > 0) best = it->first;
    return best;
}

namespace {

// Full division with remainder; cofactors (one polynomial per basis element)
// are accumulated when cof != nullptr, so that v = Σ cof_k·basis_k.v + result.
Vec divide(const Vec& v, const std::vector<GBElem>& basis, const ModOrder& ord,
           std::vector<Polynomial>* cof, Budget& budget) {
    Vec cur = v;
    Vec rem(v.nvars, v.rank);
    while (!cur.is_zero()) {
        budget.tick();
        ModMono lt = leading_term(cur, ord);
        GaussRat lc = cur.terms.at(lt);
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            const GBElem& g = basis[k];
            if (g.lt.first != lt.first || !divides(g.lt.second, lt.second)) continue;
            Exps q = exps_sub(lt.second, g.lt.second);
            GaussRat f = lc / g.lc;
            cur = cur - g.v.mul_mono(q, f);
            if (cof) (*cof)[k].add_term(q, f);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lt, lc);
            cur.terms.erase(lt);
        }
    }
    return rem;
}

bool single_component(const Vec& v) {
    if (v.is_zero()) return true;
    int c = v.terms.begin()->first.first;
    for (auto& [m, x] : v.terms)
        if (m.first != c) return false;
    return true;
}

struct BuchOut {
    std::vector<GBElem> basis;
    std::vector<std::vector<Polynomial>> rep; // basis element = Σ rep[l]·gens[l]
    std::vector<Vec> syz;                     // syzygies in gens coordinates
};

GBElem make_elem(const Vec& v, const ModOrder& ord) {
    GBElem e;
    e.v = v;
    e.lt = leading_term(v, ord);
    e.lc = v.terms.at(e.lt);
    return e;
}

BuchOut buchberger(const std::vector<Vec>& gens, const ModOrder& ord, bool want_syz,
                   Budget& budget) {
    BuchOut out;
    int s = (int)gens.size();
    if (s == 0) return out;
    int d = gens[0].nvars;

    for (int l = 0; l < s; ++l) {
        if (gens[l].is_zero()) {
            if (want_syz) out.syz.push_back(Vec::unit(d, s, l));
            continue;
        }
        out.basis.push_back(make_elem(gens[l], ord));
        std::vector<Polynomial> r(s, Polynomial(d));
        r[l] = Polynomial::constant(d, GaussRat(1));
        out.rep.push_back(std::move(r));
    }

    auto& basis = out.basis;
    auto& rep = out.rep;

    // (shifted degree of lcm, i, j), i < j, same leading component
    std::set<std::tuple<int, int, int>> pairs;
    auto pair_lcm = [&](int i, int j) {
        return exps_lcm(basis[i].lt.second, basis[j].lt.second);
    };
    auto add_pairs = [&](int t) {
        for (int i = 0; i < t; ++i) {
            if (basis[i].lt.first != basis[t].lt.first) continue;
            ModMono l{basis[t].lt.first, pair_lcm(i, t)};
            pairs.insert({ord.sdeg(l), i, t});
        }
    };
    for (int t = 1; t < (int)basis.size(); ++t) add_pairs(t);

    while (!pairs.empty()) {
        auto [deg, i, j] = *pairs.begin();
        pairs.erase(pairs.begin());
        budget.tick();

        int comp = basis[i].lt.first;
        Exps L = pair_lcm(i, j);

        // chain criterion (safe for syzygy extraction as well)
        bool skip = false;
        for (int k = 0; k < (int)basis.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (basis[k].lt.first != comp || !divides(basis[k].lt.second, L)) continue;
            if (pair_lcm(std::min(i, k), std::max(i, k)) != L &&
                pair_lcm(std::min(j, k), std::max(j, k)) != L)
                skip = true;
        }
        if (skip) continue;

        // product criterion: valid for modules only when both elements are
        // concentrated in the single shared component; drops syzygies, so it
        // is disabled in syzygy mode
        if (!want_syz && exps_coprime(basis[i].lt.second, basis[j].lt.second) &&
            single_component(basis[i].v) && single_component(basis[j].v))
            continue;

        Exps mi = exps_sub(L, basis[i].lt.second);
        Exps mj = exps_sub(L, basis[j].lt.second);
        Vec S = basis[i].v.mul_mono(mi, basis[i].lc.inv()) -
                basis[j].v.mul_mono(mj, basis[j].lc.inv());

        std::vector<Polynomial> cof(basis.size(), Polynomial(d));
        Vec r = divide(S, basis, ord, &cof, budget);

        if (r.is_zero()) {
            if (!want_syz) continue;
            // syzygy in basis coordinates: (lcm/lt_i)/lc_i e_i - (lcm/lt_j)/lc_j e_j - cof
            std::vector<Polynomial> sb(basis.size(), Polynomial(d));
            sb[i].add_term(mi, basis[i].lc.inv());
            sb[j].add_term(mj, -basis[j].lc.inv());
            for (size_t k = 0; k < cof.size(); ++k) sb[k] = sb[k] - cof[k];
            // convert to gens coordinates through the cofactor matrix
            std::vector<Polynomial> sg(s, Polynomial(d));
            for (size_t k = 0; k < sb.size(); ++k) {
                if (sb[k].is_zero()) continue;
                for (int l = 0; l < s; ++l)
                    if (!rep[k][l].is_zero()) sg[l] = sg[l] + sb[k] * rep[k][l];
            }
            out.syz.push_back(Vec::from_polys(sg));
        } else {
            ModMono lt = leading_term(r, ord);
            GaussRat lc = r.terms.at(lt);
            GaussRat inv = lc.inv();
            std::vector<Polynomial> nr(s, Polynomial(d));
            Polynomial pmi = Polynomial::monomial(mi, basis[i].lc.inv());
            Polynomial pmj = Polynomial::monomial(mj, basis[j].lc.inv());
            for (int l = 0; l < s; ++l) {
                Polynomial acc = pmi * rep[i][l] - pmj * rep[j][l];
                for (size_t k = 0; k < cof.size(); ++k)
                    if (!cof[k].is_zero() && !rep[k][l].is_zero())
                        acc = acc - cof[k] * rep[k][l];
                nr[l] = acc.scale(inv);
            }
            GBElem e;
            e.v = r.scale(inv);
            e.lt = lt;
            e.lc = GaussRat(1);
            basis.push_back(std::move(e));
            rep.push_back(std::move(nr));
            add_pairs((int)basis.size() - 1);
        }
    }
    return out;
}

std::vector<GBElem> reduce_basis(std::vector<GBElem> basis, const ModOrder& ord, Budget& budget) {
    // minimalize: sort by leading term ascending, drop elements whose lt is
    // divisible by an earlier kept lt (valid because the input is a GB)
    std::stable_sort(basis.begin(), basis.end(),
                     [&](const GBElem& a, const GBElem& b) { return ord.cmp(a.lt, b.lt) < 0; });
    std::vector<GBElem> kept;
    for (auto& e : basis) {
        bool red = false;
        for (auto& k : kept)
            if (k.lt.first == e.lt.first && divides(k.lt.second, e.lt.second)) {
                red = true;
                break;
            }
        if (!red) kept.push_back(e);
    }
    // tail-reduce each against the leading terms of the others; monic
    std::vector<GBElem> out;
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<GBElem> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        Vec r = divide(kept[i].v, others, ord, nullptr, budget);
        GBElem e = make_elem(r.scale(r.terms.at(leading_term(r, ord)).inv()), ord);
        out.push_back(std::move(e));
    }
    std::stable_sort(out.begin(), out.end(),
                     [&](const GBElem& a, const GBElem& b) { return ord.cmp(a.lt, b.lt) < 0; });
    return out;
}

} // namespace

Vec normal_form(const Vec& v, const GroebnerBasis& G, Budget& budget) {
    return divide(v, G.elems, G.ord, nullptr, budget);
}

GroebnerBasis groebner(const std::vector<Vec>& gens, const ModOrder& ord, Budget& budget) {
    GroebnerBasis g;
    g.ord = ord;
    BuchOut b = buchberger(gens, ord, false, budget);
    if (!b.basis.empty()) g.elems = reduce_basis(std::move(b.basis), ord, budget);
    return g;
}

std::vector<Vec> syzygies(const std::vector<Vec>& gens, const ModOrder& ord, Budget& budget) {
    BuchOut b = buchberger(gens, ord, true, budget);
    if (b.syz.empty()) return {};
    // interreduce in the syzygy module, ordered by the shifted degrees of gens
    std::vector<int> shifts(gens.size(), 0);
    for (size_t l = 0; l < gens.size(); ++l)
        if (!gens[l].is_zero()) shifts[l] = gens[l].top_shifted_degree(ord.shifts);
    return interreduce(std::move(b.syz), ModOrder(shifts), budget);
}

std::vector<Vec> interreduce(std::vector<Vec> gens, const ModOrder& ord, Budget& budget) {
    std::vector<Vec> cur;
    for (auto& v : gens)
        if (!v.is_zero()) cur.push_back(v.scale(v.terms.at(leading_term(v, ord)).inv()));
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < cur.size();) {
            std::vector<GBElem> others;
            for (size_t j = 0; j < cur.size(); ++j)
                if (j != i) others.push_back(make_elem(cur[j], ord));
            Vec r = divide(cur[i], others, ord, nullptr, budget);
            if (r.is_zero()) {
                cur.erase(cur.begin() + i);
                changed = true;
            } else {
                Vec m = r.scale(r.terms.at(leading_term(r, ord)).inv());
                if (!(m == cur[i])) {
                    cur[i] = std::move(m);
                    changed = true;
                }
                ++i;
            }
        }
    }
    // deterministic output order
    std::stable_sort(cur.begin(), cur.end(), [&](const Vec& a, const Vec& b) {
        return ord.cmp(leading_term(a, ord), leading_term(b, ord)) < 0;
    });
    return cur;
}

std::vector<Vec> top_form_submodule(const std::vector<Vec>& gens, const ModOrder& ord,
                                    Budget& budget) {
    GroebnerBasis g = groebner(gens, ord, budget);
    std::vector<Vec> out;
    for (auto& e : g.elems) out.push_back(e.v.top_form(ord.shifts));
    return out;
}

bool submodule_contains(const GroebnerBasis& G, const Vec& v, Budget& budget) {
    return normal_form(v, G, budget).is_zero();
}

bool submodule_equal(const std::vector<Vec>& A, const std::vector<Vec>& B, const ModOrder& ord,
                     Budget& budget) {
    GroebnerBasis ga = groebner(A, ord, budget);
    GroebnerBasis gb = groebner(B, ord, budget);
    if (ga.elems.size() != gb.elems.size()) return false;
    for (size_t i = 0; i < ga.elems.size(); ++i)
        if (!(ga.elems[i].v == gb.elems[i].v)) return false;
    return true;
}

Vec PolyMatrix::col(int c) const {
    std::vector<Polynomial> comps;
    for (int r = 0; r < nrows; ++r) comps.push_back(at(r, c));
    Vec v = Vec::from_polys(comps);
    v.nvars = nvars;
    return v;
}

Vec PolyMatrix::row(int r) const {
    std::vector<Polynomial> comps;
    for (int c = 0; c < ncols; ++c) comps.push_back(at(r, c));
    Vec v = Vec::from_polys(comps);
    v.nvars = nvars;
    return v;
}

std::vector<Vec> PolyMatrix::cols() const {
    std::vector<Vec> out;
    for (int c = 0; c < ncols; ++c) out.push_back(col(c));
    return out;
}

std::vector<Vec> PolyMatrix::rows() const {
    std::vector<Vec> out;
    for (int r = 0; r < nrows; ++r) out.push_back(row(r));
    return out;
}

PolyMatrix PolyMatrix::from_cols(int nvars, int nrows, const std::vector<Vec>& columns) {
    PolyMatrix m(nvars, nrows, (int)columns.size());
    for (int c = 0; c < (int)columns.size(); ++c) {
        auto comps = columns[c].components();
        for (int r = 0; r < nrows; ++r) m.at(r, c) = comps[r];
    }
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix m(nvars, ncols, nrows);
    for (int r = 0; r < nrows; ++r)
        for (int c = 0; c < ncols; ++c) m.at(c, r) = at(r, c);
    return m;
}

PolyMatrix PolyMatrix::hermitian_transpose() const {
    PolyMatrix m(nvars, ncols, nrows);
    for (int r = 0; r < nrows; ++r)
        for (int c = 0; c < ncols; ++c) m.at(c, r) = at(r, c).hermitian_conjugate();
    return m;
}

PolyMatrix PolyMatrix::mul(const PolyMatrix& o) const {
    PolyMatrix m(nvars, nrows, o.ncols);
    for (int r = 0; r < nrows; ++r)
        for (int c = 0; c < o.ncols; ++c) {
            Polynomial s(nvars);
            for (int k = 0; k < ncols; ++k) s = s + at(r, k) * o.at(k, c);
            m.at(r, c) = s;
        }
    return m;
}

bool PolyMatrix::is_zero() const {
    for (auto& p : a)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return nrows == o.nrows && ncols == o.ncols && a == o.a;
}

std::vector<Vec> kernel_of_map(const PolyMatrix& M, const ModOrder& target_ord, Budget& budget) {
    return syzygies(M.cols(), target_ord, budget);
}

} // namespace dofc
