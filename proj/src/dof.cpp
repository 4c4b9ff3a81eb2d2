#include "dofc/dof.hpp"

#include <algorithm>
#include <random>

namespace dofc {

ExtResult dof_ext(const DiffSystem& sys, Budget& budget) {
    validate(sys);
    const int d = sys.d, m = sys.m();

    ExtResult out;
    // Gauge generators: kernel of T acting on the fields, i.e. syzygies of the
    // columns of T inside the equation module.
    out.gauge_gens = syzygies(sys.T.cols(), ModOrder::standard(sys.n()), budget);

    // Ker R*: either the whole field module (no gauge symmetry) or the
    // syzygies of the columns of R^T, read as elements of the field module.
    std::vector<Vec> ker_rstar;
    if (out.gauge_gens.empty()) {
        for (int i = 0; i < m; ++i) ker_rstar.push_back(Vec::unit(d, m, i));
    } else {
        const int s = (int)out.gauge_gens.size();
        std::vector<Vec> rt_cols; // m columns in the rank-s module
        for (int i = 0; i < m; ++i) {
            std::vector<Polynomial> comps;
            for (int t = 0; t < s; ++t) comps.push_back(out.gauge_gens[t].component(i));
            rt_cols.push_back(Vec::from_polys(comps));
        }
        ker_rstar = syzygies(rt_cols, ModOrder::standard(s), budget);
    }

    out.u = hilbert_data(ker_rstar, nonzero_rows(sys), FreeModule::standard(d, m), budget);
    if (!out.u.zero && out.u.dimension > d - 1)
        throw InternalError("solution subquotient has dimension " +
                            std::to_string(out.u.dimension) + " > d-1");
    out.dof = e_at(out.u, d - 1);
    return out;
}

GradedResult dof_graded(const DiffSystem& sys, Budget& budget) {
    validate(sys);
    GradedResult out;
    out.complex = two_sided_complex(sys, budget);
    out.dof = -out.complex.qf.derivative_one();
    out.equation_orders = equation_orders(sys);
    out.orders = betti_orders(out.complex);

    // Order-ledger identity: DoF = Σk_a - Σθ_i - Σ_s (-1)^s Σ l^(s) - Σ_s (-1)^s Σ r^(s)
    Rat ledger = 0;
    for (int k : out.equation_orders) ledger += k;
    for (int t : sys.theta()) ledger -= t;
    Rat sign = 1;
    for (auto& stage : out.orders.identity_orders) {
        for (int l : stage) ledger -= sign * l;
        sign = -sign;
    }
    sign = 1;
    for (auto& stage : out.orders.symmetry_orders) {
        for (int r : stage) ledger -= sign * r;
        sign = -sign;
    }
    if (ledger != out.dof) throw InternalError("order ledger does not match -Q'(1)");
    if (out.complex.qf.eval_one() != 0) throw InternalError("Q_F(1) != 0");
    return out;
}

namespace {

Polynomial random_entry(std::mt19937_64& rng, int d) {
    static const int cre[] = {1, -1, 2, 0};
    static const int cim[] = {0, 0, 0, 1};
    int pick = (int)(rng() % 4);
    GaussRat c(Rat(cre[pick]), Rat(cim[pick]));
    Exps e(d, 0);
    int deg = (int)(rng() % 3);
    for (int t = 0; t < deg; ++t) e[rng() % d] += 1;
    Polynomial p(d);
    p.add_term(e, c);
    return p;
}

} // namespace

DiffSystem equivalence_variant(const DiffSystem& sys0, std::uint64_t seed) {
    DiffSystem sys = sys0;
    std::mt19937_64 rng(seed);
    int fresh = 0;
    int moves = 1 + (int)(rng() % 6);
    for (int mv = 0; mv < moves; ++mv) {
        switch (rng() % 6) {
        case 0: { // append a trivial equation 0 = 0, sometimes drop it again
            PolyMatrix nt(sys.d, sys.n() + 1, sys.m());
            for (int r = 0; r < sys.n(); ++r)
                for (int c = 0; c < sys.m(); ++c) nt.at(r, c) = sys.T.at(r, c);
            sys.T = nt;
            sys.equations.push_back("zr" + std::to_string(fresh++));
            if (rng() % 2) {
                sys.T = [&] {
                    PolyMatrix t(sys.d, sys.n() - 1, sys.m());
                    for (int r = 0; r + 1 < sys.n(); ++r)
                        for (int c = 0; c < sys.m(); ++c) t.at(r, c) = sys.T.at(r, c);
                    return t;
                }();
                sys.equations.pop_back();
            } else {
                sys.keep_zero_rows = true;
            }
            break;
        }
        case 1: { // append a decoupled auxiliary field killed by its own equation
            PolyMatrix nt(sys.d, sys.n() + 1, sys.m() + 1);
            for (int r = 0; r < sys.n(); ++r)
                for (int c = 0; c < sys.m(); ++c) nt.at(r, c) = sys.T.at(r, c);
            nt.at(sys.n(), sys.m()) = Polynomial::constant(sys.d, GaussRat(1));
            sys.T = nt;
            sys.fields.push_back({"zf" + std::to_string(fresh), 0});
            sys.equations.push_back("ze" + std::to_string(fresh));
            ++fresh;
            break;
        }
        case 2: { // row operation: row_a += p * row_b
            if (sys.n() < 2) break;
            int a = (int)(rng() % sys.n()), b = (int)(rng() % sys.n());
            if (a == b) break;
            Polynomial p = random_entry(rng, sys.d);
            for (int c = 0; c < sys.m(); ++c)
                sys.T.at(a, c) = sys.T.at(a, c) + p * sys.T.at(b, c);
            if (sys.T.row(a).is_zero()) sys.keep_zero_rows = true;
            break;
        }
        case 3: { // field substitution: col_b += p * col_a (phi_a -> phi_a - p phi_b)
            if (sys.m() < 2) break;
            int a = (int)(rng() % sys.m()), b = (int)(rng() % sys.m());
            if (a == b) break;
            Polynomial p = random_entry(rng, sys.d);
            for (int r = 0; r < sys.n(); ++r)
                sys.T.at(r, b) = sys.T.at(r, b) + sys.T.at(r, a) * p;
            break;
        }
        case 4: { // permute equations
            std::vector<int> perm(sys.n());
            for (int i = 0; i < sys.n(); ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            PolyMatrix nt(sys.d, sys.n(), sys.m());
            std::vector<std::string> ne(sys.n());
            for (int r = 0; r < sys.n(); ++r) {
                ne[r] = sys.equations[perm[r]];
                for (int c = 0; c < sys.m(); ++c) nt.at(r, c) = sys.T.at(perm[r], c);
            }
            sys.T = nt;
            sys.equations = ne;
            break;
        }
        case 5: { // scale a row by a nonzero constant
            if (sys.n() == 0) break;
            int a = (int)(rng() % sys.n());
            static const GaussRat units[] = {GaussRat(Rat(-1)), GaussRat(Rat(2)),
                                             GaussRat(Rat(1, 2)), GaussRat(Rat(0), Rat(1))};
            GaussRat u = units[rng() % 4];
            for (int c = 0; c < sys.m(); ++c) sys.T.at(a, c) = sys.T.at(a, c).scale(u);
            break;
        }
        }
    }
    return sys;
}

PipelineResult dof_pipeline(const DiffSystem& sys, const PipelineOptions& opts, Budget& budget) {
    validate(sys);
    PipelineResult r;
    r.homogeneous = is_homogeneous(sys);
    r.lagrangian = is_lagrangian(sys);
    r.ext = dof_ext(sys, budget);
    r.dof = r.ext.dof;
    r.gauge_invariant = !r.ext.gauge_gens.empty();

    DiffSystem graded_target;
    bool have_graded = false;
    if (r.homogeneous) {
        r.weakly_involutive = true;
        r.doubly_weakly_involutive = true;
        graded_target = sys;
        have_graded = true;
    } else {
        r.weakly_involutive = is_weakly_involutive(sys, budget);
        r.doubly_weakly_involutive =
            r.weakly_involutive && is_doubly_weakly_involutive(sys, budget);
        if (r.doubly_weakly_involutive) {
            graded_target = symbol(sys);
            r.used_symbol = true;
            have_graded = true;
        } else {
            DiffSystem comp = groebner_completion(sys, budget);
            r.completed = true;
            r.completed_system = comp;
            r.notes.push_back("completed to an equivalent involutive-form system with " +
                              std::to_string(comp.n()) + " equations");
            if (is_doubly_weakly_involutive(comp, budget)) {
                r.completed_dwi = true;
                graded_target = symbol(comp);
                r.used_symbol = true;
                have_graded = true;
            } else {
                r.dwi_unverified = true;
                r.notes.push_back(
                    "double weak involutivity not verified after completion; "
                    "graded and BRST routes skipped");
            }
        }
    }

    if (have_graded) {
        r.graded = dof_graded(graded_target, budget);
        if (r.graded->dof != r.ext.dof)
            throw InternalError("method disagreement: homological route gives " +
                                r.ext.dof.get_str() + ", graded route gives " +
                                r.graded->dof.get_str());
        if (opts.want_brst) {
            r.brst = brst_route(r.graded->complex, opts.brst_shift);
            if (Rat(r.brst->dof) != r.ext.dof)
                throw InternalError("method disagreement: BRST route gives " +
                                    std::to_string(r.brst->dof));
        }
    }

    if (opts.conjugate) {
        ExtResult ce = dof_ext(conjugate(sys), budget);
        r.conjugate_dof = ce.dof;
        r.conjugate_equal = (ce.dof == r.ext.dof);
        r.conjugate_proved = have_graded;
        if (r.conjugate_proved && !r.conjugate_equal)
            throw InternalError("conjugate DoF differs in a case where equality is guaranteed");
        if (!r.conjugate_proved)
            r.notes.push_back(r.conjugate_equal
                                  ? "conjugate DoF observed equal (not certified)"
                                  : "conjugate DoF differs (involutivity unverified)");
    }
    return r;
}

ConjugationCheck conjugation_check(const DiffSystem& sys, Budget& budget) {
    ConjugationCheck c;
    c.dof = dof_ext(sys, budget).dof;
    c.conjugate_dof = dof_ext(conjugate(sys), budget).dof;
    c.equal = (c.dof == c.conjugate_dof);
    return c;
}

} // namespace dofc
