#include "dofc/brst.hpp"

#include <algorithm>

namespace dofc {

namespace {

// (ghost, unshifted order) -> count
std::map<std::pair<int, int>, long> strata(const TwoSidedComplex& c) {
    std::map<std::pair<int, int>, long> s;
    for (size_t i = 0; i < c.v_part.terms.size(); ++i)
        for (int j : c.v_part.terms[i].degs) ++s[{-(int)i, j}];
    for (size_t k = 2; k < c.w_part.terms.size(); ++k)
        for (int j : c.w_part.terms[k].degs) ++s[{(int)k - 1, -j}];
    return s;
}

} // namespace

int min_valid_shift(const TwoSidedComplex& c) {
    int lo = 0;
    bool first = true;
    for (auto& [key, cnt] : strata(c)) {
        if (first || key.second < lo) lo = key.second;
        first = false;
    }
    return 1 - lo;
}

std::vector<BrstGenerator> brst_generators(const TwoSidedComplex& c, int shift) {
    std::vector<BrstGenerator> out;
    for (auto& [key, cnt] : strata(c)) {
        BrstGenerator g;
        g.ghost = key.first;
        g.order = key.second + shift;
        g.count = cnt;
        if (g.order <= 0)
            throw InvalidSystem("BRST shift too small: generator of order " +
                                std::to_string(g.order));
        out.push_back(g);
    }
    return out;
}

EulerCharacteristic euler_characteristic(const std::vector<BrstGenerator>& gens) {
    EulerCharacteristic chi;
    for (auto& g : gens) {
        if (g.order <= 0) throw InvalidSystem("nonpositive BRST generator order");
        int i = std::abs(g.ghost);
        long e = (i % 2 == 1) ? g.count : -g.count;
        chi.factors[g.order] += e;
        if (chi.factors[g.order] == 0) chi.factors.erase(g.order);
    }
    return chi;
}

long dof_from_euler(const EulerCharacteristic& chi) {
    long n = 0;
    for (auto& [j, e] : chi.factors) n += (long)j * e;
    return n;
}

DualEuler dual_euler(const EulerCharacteristic& chi, int d) {
    DualEuler out;
    out.d = d;
    long esum = 0, jsum = 0;
    for (auto& [j, e] : chi.factors) {
        esum += e;
        jsum += (long)j * e;
        out.pos_factors.factors[j] += e;
    }
    // (1 - z^-j)^e = (-1)^e z^{-je} (1 - z^j)^e
    out.lead_power = -jsum;
    out.sign = (esum % 2 == 0) ? 1 : -1;
    return out;
}

namespace {
std::string zfac(const std::string& inner, long exp) {
    std::string s = "(" + inner + ")";
    if (exp != 1) s += "^" + std::to_string(exp);
    return s;
}
std::string zpow(int j) { return j == 1 ? "z" : "z^" + std::to_string(j); }
} // namespace

std::string euler_str(const EulerCharacteristic& chi) {
    if (chi.factors.empty()) return "1";
    std::string s;
    for (auto& [j, e] : chi.factors) {
        if (!s.empty()) s += " ";
        s += zfac("1-" + zpow(j), e);
    }
    return s;
}

std::string poincare_str(const std::vector<BrstGenerator>& gens) {
    // group numerator (fermionic) and denominator (bosonic) strata
    std::map<std::pair<int, int>, long> fer, bos;
    for (auto& g : gens) {
        int i = std::abs(g.ghost);
        if (i % 2 == 1) fer[{i, g.order}] += g.count;
        else bos[{i, g.order}] += g.count;
    }
    auto tpart = [](int i) -> std::string {
        if (i == 0) return "";
        if (i == 1) return "t";
        return "t^" + std::to_string(i);
    };
    std::string num;
    for (auto& [k, cnt] : fer) {
        if (!num.empty()) num += " ";
        num += zfac("1+" + tpart(k.first) + zpow(k.second), cnt);
    }
    std::string den;
    for (auto& [k, cnt] : bos) {
        if (!den.empty()) den += " ";
        den += zfac("1-" + tpart(k.first) + zpow(k.second), cnt);
    }
    if (num.empty() && den.empty()) return "1";
    if (den.empty()) return num;
    if (num.empty()) return "1 / (" + den + ")";
    return num + " / (" + den + ")";
}

std::string dual_euler_str(const DualEuler& e) {
    std::string s = e.sign < 0 ? "-" : "";
    if (e.lead_power != 0) s += "z^" + std::to_string(e.lead_power) + " ";
    s += zfac("1-z", -(long)e.d);
    for (auto& [j, x] : e.pos_factors.factors) s += " " + zfac("1-" + zpow(j), x);
    return s;
}

BrstData brst_route(const TwoSidedComplex& c, int shift) {
    BrstData b;
    b.shift = shift < 0 ? min_valid_shift(c) : shift;
    b.gens = brst_generators(c, b.shift);
    b.chi = euler_characteristic(b.gens);
    b.dof = dof_from_euler(b.chi);
    DualEuler de = dual_euler(b.chi, c.v_part.terms.empty() ? 0 : c.v_part.terms[0].nvars);
    if (-de.lead_power != b.dof)
        throw InternalError("BRST residue-at-0 route disagrees with residue at infinity");
    b.chi_str = euler_str(b.chi);
    b.pc_str = poincare_str(b.gens);
    b.chib_str = dual_euler_str(de);
    return b;
}

} // namespace dofc
