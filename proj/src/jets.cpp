#include "dofc/jets.hpp"

#include <map>
#include <utility>

#include "dofc/laurent.hpp"

namespace dofc {

namespace {

long rat_to_long(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() != 1) throw InternalError("expected an integer count");
    return (long)c.get_num().get_si();
}

void gen_monos(int d, int deg, int pos, Exps& cur, std::vector<Exps>& out) {
    if (pos == d - 1) {
        cur[pos] = deg;
        out.push_back(cur);
        cur[pos] = 0;
        return;
    }
    for (int t = 0; t <= deg; ++t) {
        cur[pos] = t;
        gen_monos(d, deg - t, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

std::vector<Exps> monomials_of_degree(int d, int deg) {
    std::vector<Exps> out;
    Exps cur(d, 0);
    gen_monos(d, deg, 0, cur, out);
    return out;
}

using SparseRow = std::map<long, GaussRat>;

// Incremental exact row reduction; pivots kept normalized to leading coeff 1.
struct RankAccum {
    std::map<long, SparseRow> pivots;
    long rank = 0;

    void add(SparseRow r) {
        while (!r.empty()) {
            auto lead = r.begin();
            long col = lead->first;
            auto p = pivots.find(col);
            if (p == pivots.end()) {
                GaussRat inv = lead->second.inv();
                for (auto& [k, v] : r) v = v * inv;
                pivots.emplace(col, std::move(r));
                ++rank;
                return;
            }
            GaussRat f = lead->second;
            for (auto& [k, v] : p->second) {
                auto it = r.find(k);
                GaussRat nv = (it == r.end() ? GaussRat() : it->second) - f * v;
                if (nv.is_zero()) {
                    if (it != r.end()) r.erase(it);
                } else {
                    r[k] = nv;
                }
            }
        }
    }
};

// Cumulative ranks of { x^beta * v : (v, k) in rows, |beta| + k <= D } for
// D = 0..N. Column ids index module monomials of the common ambient module.
std::vector<long> cumulative_ranks(const std::vector<std::pair<Vec, int>>& rows, int d, int rank,
                                   int N) {
    std::map<ModMono, long> ids;
    auto colid = [&](const ModMono& m) {
        auto [it, fresh] = ids.emplace(m, (long)ids.size());
        (void)fresh;
        return it->second;
    };
    RankAccum acc;
    std::vector<long> out(N + 1, 0);
    for (int D = 0; D <= N; ++D) {
        for (auto& [v, k] : rows) {
            if (k > D || v.is_zero()) continue;
            for (const Exps& beta : monomials_of_degree(d, D - k)) {
                SparseRow r;
                for (auto& [mono, c] : v.terms)
                    r[colid({mono.first, exps_add(mono.second, beta)})] = c;
                acc.add(std::move(r));
            }
        }
        out[D] = acc.rank;
    }
    (void)rank;
    return out;
}

// Zero-order filtration throughout (matching dof_ext): the degree of a row is
// its plain top degree and jets are truncated by plain monomial degree.
std::vector<std::pair<Vec, int>> equation_rows(const DiffSystem& sys) {
    std::vector<std::pair<Vec, int>> rows;
    for (const Vec& r : nonzero_rows(sys)) rows.push_back({r, r.plain_degree()});
    return rows;
}

// Rank of the pure-gauge directions in the jets of order <= D. The gauge map
// sends parameter jets to field jets through the derivative action of the
// generators; after scaling away factorials its matrix has one column per
// (generator t, parameter monomial gamma), whose entries are the monomial
// contractions gamma -> gamma - mu over the terms (i, mu) of the generator,
// truncated to field-jet degree <= D. (Multiplying by monomials instead would
// miss the truncated tails and undercount the gauge directions.)
long gauge_rank_at(const std::vector<Vec>& gauge_gens, int d, int m, int D) {
    std::map<ModMono, long> ids;
    auto colid = [&](const ModMono& mm) {
        auto [it, fresh] = ids.emplace(mm, (long)ids.size());
        (void)fresh;
        return it->second;
    };
    RankAccum acc;
    for (const Vec& g : gauge_gens) {
        if (g.rank != m) throw InternalError("gauge generator rank mismatch");
        if (g.is_zero()) continue;
        int kg = g.plain_degree();
        for (int dg = 0; dg <= D + kg; ++dg) {
            for (const Exps& gamma : monomials_of_degree(d, dg)) {
                SparseRow r;
                for (auto& [mono, c] : g.terms) {
                    if (!divides(mono.second, gamma)) continue;
                    Exps alpha = exps_sub(gamma, mono.second);
                    if (total_degree(alpha) > D) continue;
                    r[colid({mono.first, alpha})] += c;
                }
                acc.add(std::move(r));
            }
        }
    }
    return acc.rank;
}

std::vector<long> gauge_cumulative_ranks(const std::vector<Vec>& gauge_gens, int d, int m,
                                         int N) {
    std::vector<long> out(N + 1, 0);
    for (int D = 0; D <= N; ++D) out[D] = gauge_rank_at(gauge_gens, d, m, D);
    return out;
}

} // namespace

JetCounts jet_counts(const DiffSystem& sys, int N, const std::vector<Vec>& gauge_gens) {
    validate(sys);
    if (N < 0) throw InvalidSystem("jet order must be nonnegative");
    JetCounts jc;
    jc.d = sys.d;
    jc.m = sys.m();
    jc.N = N;
    auto rT = cumulative_ranks(equation_rows(sys), sys.d, sys.m(), N);
    auto rR = gauge_cumulative_ranks(gauge_gens, sys.d, sys.m(), N);
    jc.h_sigma_cum.resize(N + 1);
    jc.h_gauge_cum.resize(N + 1);
    jc.h_u_cum.resize(N + 1);
    for (int D = 0; D <= N; ++D) {
        long total = (long)sys.m() * rat_to_long(binom(D + sys.d, sys.d));
        jc.h_sigma_cum[D] = total - rT[D];
        jc.h_gauge_cum[D] = rR[D];
        jc.h_u_cum[D] = total - rT[D] - rR[D];
    }
    auto slice = [&](const std::vector<long>& cum) {
        std::vector<long> s(N + 1);
        for (int D = 0; D <= N; ++D) s[D] = cum[D] - (D ? cum[D - 1] : 0);
        return s;
    };
    jc.h_sigma = slice(jc.h_sigma_cum);
    jc.h_gauge = slice(jc.h_gauge_cum);
    jc.h_u = slice(jc.h_u_cum);
    return jc;
}

long jet_solution_dim(const DiffSystem& sys, int N) {
    return jet_counts(sys, N, {}).h_sigma_cum[N];
}

long jet_gauge_dim(const std::vector<Vec>& gauge_gens, int d, int m, int N) {
    if (N < 0) throw InvalidSystem("jet order must be nonnegative");
    return gauge_rank_at(gauge_gens, d, m, N);
}

Rat einstein_estimate(const JetCounts& jc) {
    if (jc.d < 2) throw InvalidSystem("the jet estimate requires d >= 2");
    Rat den = Rat(jc.d - 1) * binom(jc.N + jc.d - 1, jc.d - 1);
    return Rat(jc.N) * Rat(jc.h_u[jc.N]) / den;
}

Rat oracle_dof(const JetCounts& jc) {
    if (jc.d < 2) throw InvalidSystem("the jet oracle requires d >= 2");
    int k = jc.d - 2;
    if (jc.N < k) throw InvalidSystem("jet order too small for the finite-difference oracle");
    Rat v = 0;
    for (int j = 0; j <= k; ++j) {
        Rat term = binom(k, j) * Rat(jc.h_u[jc.N - j]);
        if (j % 2) v -= term;
        else v += term;
    }
    return v;
}

} // namespace dofc
