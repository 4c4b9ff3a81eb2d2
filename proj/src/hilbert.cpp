#include "dofc/hilbert.hpp"

#include <algorithm>

namespace dofc {

namespace {

// drop generators that are multiples of another generator
std::vector<Exps> minimalize(std::vector<Exps> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Exps& a, const Exps& b) { return total_degree(a) < total_degree(b); });
    std::vector<Exps> out;
    for (auto& g : gens) {
        bool red = false;
        for (auto& k : out)
            if (divides(k, g)) {
                red = true;
                break;
            }
        if (!red) out.push_back(g);
    }
    return out;
}

// Numerator N_I with H_{P/I} = N_I/(1-z)^d for a monomial ideal I.
// Pivot recursion: H_{P/I} = H_{P/(I+(x))} + z * H_{P/(I:x)}.
LaurentPoly ideal_numerator(std::vector<Exps> gens, int d) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return LaurentPoly::constant(1);
    if (total_degree(gens[0]) == 0) return LaurentPoly(); // I = (1)
    // all pure powers: product formula
    bool pure = true;
    for (auto& g : gens) {
        int support = 0;
        for (int x : g)
            if (x > 0) ++support;
        if (support > 1) {
            pure = false;
            break;
        }
    }
    if (pure) {
        LaurentPoly p = LaurentPoly::constant(1);
        for (auto& g : gens) {
            LaurentPoly f = LaurentPoly::constant(1) - LaurentPoly::term(Rat(1), total_degree(g));
            p = p * f;
        }
        return p;
    }
    // pivot: the most frequent variable among the non-pure-power generators
    // (restricting to mixed generators guarantees both branches shrink: the
    // sum branch drops a mixed generator of degree >= 2, the colon branch
    // lowers a positive exponent)
    std::vector<int> freq(d, 0);
    for (auto& g : gens) {
        int support = 0;
        for (int v : g)
            if (v > 0) ++support;
        if (support < 2) continue;
        for (int i = 0; i < d; ++i)
            if (g[i] > 0) ++freq[i];
    }
    int x = (int)(std::max_element(freq.begin(), freq.end()) - freq.begin());
    std::vector<Exps> plus, colon;
    Exps xv(d, 0);
    xv[x] = 1;
    plus.push_back(xv);
    for (auto& g : gens) {
        if (g[x] == 0) plus.push_back(g);
        Exps q = g;
        if (q[x] > 0) --q[x];
        colon.push_back(q);
    }
    LaurentPoly a = ideal_numerator(std::move(plus), d);
    LaurentPoly b = ideal_numerator(std::move(colon), d);
    return a + LaurentPoly::term(Rat(1), 1) * b;
}

} // namespace

LaurentPoly monomial_quotient_numerator(const std::vector<ModMono>& lt_gens,
                                        const FreeModule& ambient) {
    int d = ambient.nvars;
    LaurentPoly total;
    for (int c = 0; c < ambient.rank(); ++c) {
        std::vector<Exps> gens;
        for (auto& m : lt_gens)
            if (m.first == c) gens.push_back(m.second);
        LaurentPoly n = ideal_numerator(std::move(gens), d);
        total = total + LaurentPoly::term(Rat(1), ambient.degs[c]) * n;
    }
    return total;
}

RationalSeries monomial_quotient_series(const std::vector<ModMono>& lt_gens,
                                        const FreeModule& ambient) {
    return series_reduce(monomial_quotient_numerator(lt_gens, ambient), ambient.nvars);
}

HilbertData hilbert_from_numerator(const LaurentPoly& num, int d) {
    HilbertData h;
    h.nvars = d;
    h.series = series_reduce(num, d);
    if (h.series.num.is_zero()) {
        h.zero = true;
        h.multiplicity = 0;
        h.dimension = 0;
        h.q_poly = LaurentPoly();
        h.stab_threshold = 0;
        return h;
    }
    h.dimension = h.series.pole_order;
    h.multiplicity = h.series.num.eval_one();
    h.q_poly = h.series.num;
    for (int k = 0; k < d - h.dimension; ++k) h.q_poly = h.q_poly.mul_one_minus_z();
    h.stab_threshold = std::max(0, h.series.num.max_exp());
    return h;
}

HilbertData hilbert_data(const std::vector<Vec>& num_gens, const std::vector<Vec>& den_gens,
                         const FreeModule& ambient, Budget& budget) {
    ModOrder ord(ambient.degs);
    GroebnerBasis gnum = groebner(num_gens, ord, budget);
    for (auto& g : den_gens)
        if (!submodule_contains(gnum, g, budget))
            throw InvalidSystem("hilbert_data: denominator is not contained in numerator");
    GroebnerBasis gden = groebner(den_gens, ord, budget);
    std::vector<ModMono> lt_num, lt_den;
    for (auto& e : gnum.elems) lt_num.push_back(e.lt);
    for (auto& e : gden.elems) lt_den.push_back(e.lt);
    // H_U = H_{amb/den} - H_{amb/num}
    LaurentPoly p =
        monomial_quotient_numerator(lt_den, ambient) - monomial_quotient_numerator(lt_num, ambient);
    return hilbert_from_numerator(p, ambient.nvars);
}

Rat e_at(const HilbertData& data, int q) {
    if (data.zero) return Rat(0);
    if (data.dimension > q)
        throw InternalError("e_at: module dimension " + std::to_string(data.dimension) +
                            " exceeds " + std::to_string(q));
    if (data.dimension < q) return Rat(0);
    return data.multiplicity;
}

Rat q_derivative_multiplicity(const HilbertData& data) {
    if (data.zero) return Rat(0);
    if (data.dimension > data.nvars - 1)
        throw InternalError("q_derivative_multiplicity: dimension not <= d-1");
    return -data.q_poly.derivative_one();
}

Rat hilbert_poly_value(const HilbertData& data, long n) {
    if (data.zero) return Rat(0);
    Rat s(0);
    int dd = data.dimension;
    for (auto& [j, v] : data.series.num.c) {
        if (dd == 0) continue; // finite-length module: polynomial is 0
        s += v * binom(n - j + dd - 1, dd - 1);
    }
    return s;
}

} // namespace dofc
