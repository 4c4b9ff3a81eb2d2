#include "dofc/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace dofc {

namespace {

using json = nlohmann::ordered_json;

long rat_as_int(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() != 1) throw InternalError("non-integer DoF count");
    return (long)c.get_num().get_si();
}

Rat report_dof(const Report& r) {
    if (r.pipe) return r.pipe->dof;
    if (r.ext_only_dof) return *r.ext_only_dof;
    if (r.oracle && r.oracle->exact) return *r.oracle->exact;
    throw InternalError("report carries no DoF value");
}

json orders_json(const std::vector<std::vector<int>>& v) {
    json out = json::array();
    for (auto& stage : v) out.push_back(stage);
    return out;
}

} // namespace

std::string emit_json(const Report& r, const DiffSystem& sys) {
    json j;
    j["dof"] = rat_as_int(report_dof(r));

    json methods;
    if (r.pipe) {
        methods["ext"] = rat_as_int(r.pipe->ext.dof);
        methods["graded"] = r.pipe->graded ? json(rat_as_int(r.pipe->graded->dof)) : json();
        methods["brst"] = r.pipe->brst ? json(r.pipe->brst->dof) : json();
    } else if (r.ext_only_dof) {
        methods["ext"] = rat_as_int(*r.ext_only_dof);
        methods["graded"] = nullptr;
        methods["brst"] = nullptr;
    }
    methods["oracle"] =
        (r.oracle && r.oracle->exact) ? json(rat_as_int(*r.oracle->exact)) : json();
    j["methods"] = methods;

    json flags = json::object();
    if (r.pipe) {
        flags["homogeneous"] = r.pipe->homogeneous;
        flags["lagrangian"] = r.pipe->lagrangian;
        flags["gauge_invariant"] = r.pipe->gauge_invariant;
        flags["weakly_involutive"] = r.pipe->weakly_involutive;
        flags["doubly_weakly_involutive"] = r.pipe->doubly_weakly_involutive;
        flags["used_symbol"] = r.pipe->used_symbol;
        flags["completed"] = r.pipe->completed;
        flags["dwi_unverified"] = r.pipe->dwi_unverified;
    }
    j["flags"] = flags;

    j["equation_orders"] = equation_orders(sys);
    if (r.pipe && r.pipe->graded) {
        j["identity_orders"] = orders_json(r.pipe->graded->orders.identity_orders);
        j["symmetry_orders"] = orders_json(r.pipe->graded->orders.symmetry_orders);
        j["qf"] = r.pipe->graded->complex.qf.str();
    } else {
        j["identity_orders"] = json::array();
        j["symmetry_orders"] = json::array();
        j["qf"] = nullptr;
    }
    j["euler_characteristic"] = (r.pipe && r.pipe->brst) ? json(r.pipe->brst->chi_str) : json();
    j["conjugate_dof"] = (r.pipe && r.pipe->conjugate_dof)
                             ? json(rat_as_int(*r.pipe->conjugate_dof))
                             : json();

    if (r.oracle) {
        json o;
        o["N"] = r.oracle->counts.N;
        o["h_sigma"] = r.oracle->counts.h_sigma;
        o["h_gauge"] = r.oracle->counts.h_gauge;
        o["estimate"] = r.oracle->estimate.get_str();
        j["oracle"] = o;
    } else {
        j["oracle"] = nullptr;
    }

    json meta;
    meta["version"] = kToolVersion;
    meta["budget_used"] = r.budget_used;
    meta["seconds"] = r.seconds;
    meta["fields"] = [&] {
        json a = json::array();
        for (auto& f : sys.fields) a.push_back(f.name);
        return a;
    }();
    meta["equations"] = sys.equations;
    meta["notes"] = r.pipe ? json(r.pipe->notes) : json(json::array());
    j["meta"] = meta;
    return j.dump(2) + "\n";
}

std::string emit_text(const Report& r, const DiffSystem& sys) {
    std::ostringstream out;
    out << "system: " << sys.n() << " equations, " << sys.m() << " fields, d = " << sys.d
        << "\n";
    {
        out << "equation orders:";
        for (int k : equation_orders(sys)) out << " " << k;
        out << "\n";
    }
    if (r.pipe) {
        const auto& p = *r.pipe;
        out << "flags:";
        if (p.homogeneous) out << " homogeneous";
        if (p.lagrangian) out << " lagrangian";
        if (p.gauge_invariant) out << " gauge-invariant";
        if (p.weakly_involutive) out << " weakly-involutive";
        if (p.doubly_weakly_involutive) out << " doubly-weakly-involutive";
        if (p.used_symbol) out << " symbol-route";
        if (p.completed) out << " completed";
        if (p.dwi_unverified) out << " dwi-unverified";
        out << "\n";
        out << "gauge generators: " << p.ext.gauge_gens.size() << "\n";
        if (p.graded) {
            out << "Q_F(z) = " << p.graded->complex.qf.str() << "\n";
            auto print_stages = [&](const char* label,
                                    const std::vector<std::vector<int>>& st) {
                out << label << ":";
                if (st.empty()) out << " none";
                for (auto& stage : st) {
                    out << " [";
                    for (size_t i = 0; i < stage.size(); ++i)
                        out << (i ? " " : "") << stage[i];
                    out << "]";
                }
                out << "\n";
            };
            print_stages("identity orders", p.graded->orders.identity_orders);
            print_stages("symmetry orders", p.graded->orders.symmetry_orders);
        }
        if (p.brst) {
            out << "chi_C = " << p.brst->chi_str << "\n";
            out << "P_C = " << p.brst->pc_str << "\n";
        }
        if (p.conjugate_dof)
            out << "conjugate DoF = " << rat_as_int(*p.conjugate_dof)
                << (p.conjugate_proved ? " (certified equal)" : " (observed)") << "\n";
        for (auto& n : p.notes) out << "note: " << n << "\n";
    }
    if (r.oracle) {
        out << "oracle N = " << r.oracle->counts.N << ", per-degree h_sigma:";
        for (long v : r.oracle->counts.h_sigma) out << " " << v;
        out << "\n";
        out << "oracle estimate = " << r.oracle->estimate.get_str();
        if (r.oracle->exact) out << ", exact = " << r.oracle->exact->get_str();
        out << "\n";
    }
    out << "DoF = " << rat_as_int(report_dof(r)) << "\n";
    return out.str();
}

} // namespace dofc
