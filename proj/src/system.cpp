#include "dofc/system.hpp"

#include <set>

namespace dofc {

std::vector<int> DiffSystem::theta() const {
    std::vector<int> t;
    for (auto& f : fields) t.push_back(f.order);
    return t;
}

std::vector<std::string> DiffSystem::default_varnames() const {
    std::vector<std::string> v;
    for (int i = 0; i < d; ++i) v.push_back("d" + std::to_string(i));
    return v;
}

void validate(const DiffSystem& sys) {
    if (sys.d < 1) throw InvalidSystem("dimension must be >= 1");
    if (sys.m() < 1) throw InvalidSystem("at least one field is required");
    if (sys.n() < 1) throw InvalidSystem("at least one equation is required");
    if (sys.T.nrows != sys.n() || sys.T.ncols != sys.m())
        throw InvalidSystem("matrix shape does not match field/equation counts");
    std::set<std::string> names;
    for (auto& f : sys.fields)
        if (!names.insert(f.name).second)
            throw InvalidSystem("duplicate field name: " + f.name);
    std::set<std::string> eqn;
    for (auto& e : sys.equations)
        if (!eqn.insert(e).second) throw InvalidSystem("duplicate equation name: " + e);
    for (auto& p : sys.T.a)
        if (p.nvars != sys.d) throw InvalidSystem("matrix entry dimension mismatch");
    for (auto& [k, v] : sys.parameters)
        if (v == 0) throw InvalidSystem("parameter " + k + " must be a nonzero rational");
    if (!sys.keep_zero_rows) {
        for (int r = 0; r < sys.n(); ++r)
            if (sys.T.row(r).is_zero())
                throw InvalidSystem("equation " + sys.equations[r] +
                                    " is the zero row 0 = 0; delete it or pass --keep-zero-rows");
    }
}

std::vector<int> equation_orders(const DiffSystem& sys) {
    std::vector<int> k(sys.n(), 0);
    auto th = sys.theta();
    for (int a = 0; a < sys.n(); ++a) {
        bool nonzero = false;
        int best = 0;
        for (int i = 0; i < sys.m(); ++i) {
            const Polynomial& p = sys.T.at(a, i);
            if (p.is_zero()) continue;
            int v = *p.degree() + th[i];
            if (!nonzero || v > best) best = v;
            nonzero = true;
        }
        if (!nonzero) {
            if (!sys.keep_zero_rows)
                throw InvalidSystem("equation " + sys.equations[a] + " is a zero row");
            best = 0;
        }
        k[a] = best;
    }
    return k;
}

bool is_homogeneous(const DiffSystem& sys) {
    auto th = sys.theta();
    auto k = equation_orders(sys);
    for (int a = 0; a < sys.n(); ++a)
        for (int i = 0; i < sys.m(); ++i) {
            const Polynomial& p = sys.T.at(a, i);
            if (p.is_zero()) continue;
            auto hd = p.homogeneous_degree();
            if (!hd || *hd != k[a] - th[i]) return false;
        }
    return true;
}

DiffSystem symbol(const DiffSystem& sys) {
    DiffSystem out = sys;
    auto th = sys.theta();
    auto k = equation_orders(sys);
    for (int a = 0; a < sys.n(); ++a)
        for (int i = 0; i < sys.m(); ++i)
            out.T.at(a, i) = sys.T.at(a, i).homogeneous_part(k[a] - th[i]);
    out.keep_zero_rows = true; // the symbol may zero out a whole row
    return out;
}

DiffSystem conjugate(const DiffSystem& sys) {
    DiffSystem out;
    out.d = sys.d;
    out.varnames = sys.varnames;
    out.parameters = sys.parameters;
    out.keep_zero_rows = sys.keep_zero_rows;
    auto k = equation_orders(sys);
    auto th = sys.theta();
    for (int a = 0; a < sys.n(); ++a) out.fields.push_back({sys.equations[a], -k[a]});
    for (int i = 0; i < sys.m(); ++i) out.equations.push_back(sys.fields[i].name);
    out.T = sys.T.hermitian_transpose();
    // dual grading makes the conjugate equation orders equal to -theta_i; with
    // mixed entry degrees this still holds because deg <= k_a always
    (void)th;
    // a field absent from every equation of sys becomes the trivial equation
    // 0 = 0 of the conjugate; keep it rather than reject the system
    for (int a = 0; a < out.n(); ++a)
        if (out.T.row(a).is_zero()) out.keep_zero_rows = true;
    return out;
}

bool is_lagrangian(const DiffSystem& sys) {
    if (sys.n() != sys.m()) return false;
    return sys.T == sys.T.hermitian_transpose();
}

std::vector<Vec> nonzero_rows(const DiffSystem& sys) {
    std::vector<Vec> rows;
    for (int a = 0; a < sys.n(); ++a) {
        Vec r = sys.T.row(a);
        if (!r.is_zero()) rows.push_back(std::move(r));
    }
    return rows;
}

bool is_weakly_involutive(const DiffSystem& sys, Budget& budget) {
    ModOrder ord = sys.row_order();
    std::vector<Vec> rows = nonzero_rows(sys);
    if (rows.empty()) return true;
    std::vector<Vec> lt_rows = top_form_submodule(rows, ord, budget);
    std::vector<Vec> sym_rows = nonzero_rows(symbol(sys));
    return submodule_equal(lt_rows, sym_rows, ord, budget);
}

bool is_doubly_weakly_involutive(const DiffSystem& sys, Budget& budget) {
    if (!is_weakly_involutive(sys, budget)) return false;
    DiffSystem conj = conjugate(sys);
    if (!is_weakly_involutive(conj, budget)) return false;
    return symbol(conj).T == conjugate(symbol(sys)).T;
}

DiffSystem groebner_completion(const DiffSystem& sys, Budget& budget) {
    ModOrder ord = sys.row_order();
    std::vector<Vec> rows = nonzero_rows(sys);
    GroebnerBasis g = groebner(rows, ord, budget);
    if (g.elems.empty()) {
        // T = 0: the completion is the single trivial equation 0 = 0
        DiffSystem out = sys;
        out.equations = {"c0"};
        out.T = PolyMatrix(sys.d, 1, sys.m());
        out.keep_zero_rows = true;
        return out;
    }
    DiffSystem out;
    out.d = sys.d;
    out.fields = sys.fields;
    out.varnames = sys.varnames;
    out.parameters = sys.parameters;
    out.T = PolyMatrix(sys.d, (int)g.elems.size(), sys.m());
    for (int a = 0; a < (int)g.elems.size(); ++a) {
        out.equations.push_back("c" + std::to_string(a));
        auto comps = g.elems[a].v.components();
        for (int i = 0; i < sys.m(); ++i) out.T.at(a, i) = comps[i];
    }
    return out;
}

} // namespace dofc
