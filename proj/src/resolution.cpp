#include "dofc/resolution.hpp"

#include <algorithm>

#include "dofc/system.hpp"

namespace dofc {

FreeResolution resolve(const FreeModule& f0, const FreeModule& f1, const PolyMatrix& d1,
                       int max_length, Budget& budget) {
    if (d1.nrows != f0.rank() || d1.ncols != f1.rank())
        throw InternalError("resolve: presentation shape mismatch");
    FreeResolution res;
    res.terms = {f0, f1};
    res.diffs = {d1};
    while ((int)res.diffs.size() < max_length) {
        const FreeModule& fk = res.terms.back();
        if (fk.rank() == 0) break;
        std::vector<Vec> cols = res.diffs.back().cols();
        std::vector<Vec> syz = syzygies(cols, ModOrder(res.terms[res.terms.size() - 2].degs),
                                        budget);
        if (syz.empty()) break;
        FreeModule next(fk.nvars, {});
        for (auto& s : syz) next.degs.push_back(s.top_shifted_degree(fk.degs));
        res.diffs.push_back(PolyMatrix::from_cols(fk.nvars, fk.rank(), syz));
        res.terms.push_back(next);
    }
    return res;
}

bool is_graded(const FreeResolution& res) {
    for (size_t k = 0; k < res.diffs.size(); ++k) {
        const auto& m = res.diffs[k];
        const auto& src = res.terms[k + 1];
        const auto& tgt = res.terms[k];
        for (int r = 0; r < m.nrows; ++r)
            for (int c = 0; c < m.ncols; ++c) {
                const Polynomial& p = m.at(r, c);
                if (p.is_zero()) continue;
                auto hd = p.homogeneous_degree();
                if (!hd || *hd != src.degs[c] - tgt.degs[r]) return false;
            }
    }
    return true;
}

namespace {

void erase_index(std::vector<int>& v, int i) { v.erase(v.begin() + i); }

PolyMatrix drop_row(const PolyMatrix& m, int r0) {
    PolyMatrix out(m.nvars, m.nrows - 1, m.ncols);
    for (int r = 0, rr = 0; r < m.nrows; ++r) {
        if (r == r0) continue;
        for (int c = 0; c < m.ncols; ++c) out.at(rr, c) = m.at(r, c);
        ++rr;
    }
    return out;
}

PolyMatrix drop_col(const PolyMatrix& m, int c0) {
    PolyMatrix out(m.nvars, m.nrows, m.ncols - 1);
    for (int r = 0; r < m.nrows; ++r)
        for (int c = 0, cc = 0; c < m.ncols; ++c) {
            if (c == c0) continue;
            out.at(r, cc++) = m.at(r, c);
        }
    return out;
}

} // namespace

FreeResolution minimize(FreeResolution res, int keep_terms) {
    if (!is_graded(res)) throw InternalError("minimize: input resolution is not graded");
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t t = (size_t)std::max(keep_terms, 0); t < res.diffs.size() && !changed;
             ++t) {
            PolyMatrix& m = res.diffs[t];
            for (int r = 0; r < m.nrows && !changed; ++r)
                for (int c = 0; c < m.ncols && !changed; ++c) {
                    const Polynomial& u = m.at(r, c);
                    if (u.is_zero() || !u.is_constant()) continue;
                    GaussRat uinv = u.constant_coeff().inv();
                    // Gaussian cancellation of the split summand (r, c)
                    PolyMatrix nm(m.nvars, m.nrows - 1, m.ncols - 1);
                    for (int i = 0, ii = 0; i < m.nrows; ++i) {
                        if (i == r) continue;
                        for (int j = 0, jj = 0; j < m.ncols; ++j) {
                            if (j == c) continue;
                            nm.at(ii, jj) = m.at(i, j) - m.at(i, c) * m.at(r, j).scale(uinv);
                            ++jj;
                        }
                        ++ii;
                    }
                    res.diffs[t] = nm;
                    if (t + 1 < res.diffs.size()) res.diffs[t + 1] = drop_row(res.diffs[t + 1], c);
                    if (t >= 1) res.diffs[t - 1] = drop_col(res.diffs[t - 1], r);
                    erase_index(res.terms[t].degs, r);
                    erase_index(res.terms[t + 1].degs, c);
                    changed = true;
                }
        }
    }
    // drop trailing zero-rank terms
    while (res.terms.size() > 1 && res.terms.back().rank() == 0) {
        res.terms.pop_back();
        res.diffs.pop_back();
    }
    // with keep_terms > 0 the preserved differentials may retain units
    res.minimal = true;
    for (const auto& m : res.diffs)
        for (int r = 0; r < m.nrows && res.minimal; ++r)
            for (int c = 0; c < m.ncols; ++c)
                if (!m.at(r, c).is_zero() && m.at(r, c).is_constant()) {
                    res.minimal = false;
                    break;
                }
    return res;
}

std::vector<std::vector<int>> betti_degrees(const FreeResolution& res) {
    std::vector<std::vector<int>> out;
    for (auto& t : res.terms) {
        std::vector<int> degs = t.degs;
        std::sort(degs.begin(), degs.end());
        out.push_back(degs);
    }
    return out;
}

bool compositions_vanish(const FreeResolution& res) {
    for (size_t k = 0; k + 1 < res.diffs.size(); ++k)
        if (!res.diffs[k].mul(res.diffs[k + 1]).is_zero()) return false;
    return true;
}

TwoSidedComplex two_sided_complex(const DiffSystem& sys, Budget& budget) {
    if (!is_homogeneous(sys))
        throw InvalidSystem("two_sided_complex requires a homogeneous system");
    auto th = sys.theta();
    auto k = equation_orders(sys);
    int d = sys.d;
    int maxlen = d + 4; // minimization cuts the length back to <= d

    // F_0 and F_1 are the presentation itself and are kept intact (the seam
    // degrees must be exactly theta and k, even when T has constant entries);
    // only the syzygy tail F_2, F_3, ... is minimized.
    TwoSidedComplex c;
    // V side: F_1^V -> F_0^V is T^T : P^n(-k) -> P^m(-theta)
    {
        FreeModule f0(d, th), f1(d, k);
        c.v_part = minimize(resolve(f0, f1, sys.T.transpose(), maxlen, budget), 2);
    }
    // W side, dual grading: F_1^W -> F_0^W is T : P^m(theta) -> P^n(k)
    {
        std::vector<int> f0d, f1d;
        for (int x : k) f0d.push_back(-x);
        for (int x : th) f1d.push_back(-x);
        FreeModule f0(d, f0d), f1(d, f1d);
        c.w_part = minimize(resolve(f0, f1, sys.T, maxlen, budget), 2);
    }
    if ((int)c.v_part.terms.size() - 1 > d || (int)c.w_part.terms.size() - 1 > d)
        throw InternalError("two-sided resolution longer than d");

    for (size_t i = 0; i < c.v_part.terms.size(); ++i) {
        Rat sign = (i % 2 == 0) ? 1 : -1;
        for (int j : c.v_part.terms[i].degs) c.qf.add_term(j, sign);
    }
    for (size_t i = 2; i < c.w_part.terms.size(); ++i) {
        Rat sign = (i % 2 == 0) ? 1 : -1;
        // dualization negates the generator degrees
        for (int j : c.w_part.terms[i].degs) c.qf.add_term(-j, -sign);
    }
    return c;
}

BettiOrders betti_orders(const TwoSidedComplex& c) {
    BettiOrders b;
    for (size_t i = 2; i < c.v_part.terms.size(); ++i) {
        auto degs = c.v_part.terms[i].degs;
        std::sort(degs.begin(), degs.end());
        b.identity_orders.push_back(degs);
    }
    for (size_t i = 2; i < c.w_part.terms.size(); ++i) {
        auto degs = c.w_part.terms[i].degs;
        std::sort(degs.begin(), degs.end());
        b.symmetry_orders.push_back(degs);
    }
    return b;
}

} // namespace dofc
