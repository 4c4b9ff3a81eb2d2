#include "dofc/poly.hpp"

#include <algorithm>

#include "dofc/error.hpp"

namespace dofc {

bool divides(const Exps& a, const Exps& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exps exps_sub(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exps exps_add(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exps exps_lcm(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool exps_coprime(const Exps& a, const Exps& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

int degrevlex_cmp(const Exps& a, const Exps& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    // ties: in the rightmost position where they differ, the smaller exponent wins
    for (int i = (int)a.size() - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

Polynomial Polynomial::constant(int d, const GaussRat& c) {
    Polynomial p(d);
    if (!c.is_zero()) p.terms[Exps(d, 0)] = c;
    return p;
}

Polynomial Polynomial::monomial(const Exps& e, const GaussRat& c) {
    Polynomial p((int)e.size());
    if (!c.is_zero()) p.terms[e] = c;
    return p;
}

Polynomial Polynomial::variable(int d, int idx) {
    Exps e(d, 0);
    e[idx] = 1;
    return monomial(e, GaussRat(1));
}

std::optional<int> Polynomial::degree() const {
    if (terms.empty()) return std::nullopt;
    int m = 0;
    bool first = true;
    for (auto& [e, c] : terms) {
        int t = total_degree(e);
        if (first || t > m) m = t;
        first = false;
    }
    return m;
}

bool Polynomial::is_constant() const {
    return terms.empty() || (terms.size() == 1 && total_degree(terms.begin()->first) == 0);
}

GaussRat Polynomial::constant_coeff() const {
    auto it = terms.find(Exps(nvars, 0));
    return it == terms.end() ? GaussRat() : it->second;
}

void Polynomial::add_term(const Exps& e, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms[e] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars != o.nvars) throw InternalError("polynomial dimension mismatch");
    Polynomial r = *this;
    for (auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (nvars != o.nvars) throw InternalError("polynomial dimension mismatch");
    Polynomial r = *this;
    for (auto& [e, c] : o.terms) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars != o.nvars) throw InternalError("polynomial dimension mismatch");
    Polynomial r(nvars);
    for (auto& [e1, c1] : terms)
        for (auto& [e2, c2] : o.terms) r.add_term(exps_add(e1, e2), c1 * c2);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars);
    for (auto& [e, c] : terms) r.terms[e] = -c;
    return r;
}

Polynomial Polynomial::scale(const GaussRat& c) const {
    Polynomial r(nvars);
    if (c.is_zero()) return r;
    for (auto& [e, v] : terms) r.terms[e] = v * c;
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return nvars == o.nvars && terms == o.terms;
}

bool Polynomial::is_homogeneous() const {
    if (terms.empty()) return true;
    int d0 = total_degree(terms.begin()->first);
    for (auto& [e, c] : terms)
        if (total_degree(e) != d0) return false;
    return true;
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (!is_homogeneous() || terms.empty()) return std::nullopt;
    return total_degree(terms.begin()->first);
}

Polynomial Polynomial::homogeneous_part(int k) const {
    Polynomial r(nvars);
    for (auto& [e, c] : terms)
        if (total_degree(e) == k) r.terms[e] = c;
    return r;
}

Polynomial Polynomial::top_form() const {
    if (is_zero()) throw InternalError("top_form of zero polynomial");
    return homogeneous_part(*degree());
}

Polynomial Polynomial::hermitian_conjugate() const {
    Polynomial r(nvars);
    for (auto& [e, c] : terms) {
        GaussRat v = c.conj();
        if (total_degree(e) % 2 != 0) v = -v;
        r.terms[e] = v;
    }
    return r;
}

std::string Polynomial::str(const std::vector<std::string>& varnames) const {
    if (is_zero()) return "0";
    // print higher-degree terms first for readability
    std::vector<std::pair<Exps, GaussRat>> ts(terms.begin(), terms.end());
    std::sort(ts.begin(), ts.end(), [](auto& a, auto& b) {
        return degrevlex_cmp(a.first, b.first) > 0;
    });
    std::string out;
    bool first = true;
    for (auto& [e, c] : ts) {
        std::string mono;
        for (int i = 0; i < nvars; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += varnames[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        GaussRat v = c;
        std::string sign = first ? "" : " + ";
        if (v.is_real() && v.re < 0) {
            sign = first ? "-" : " - ";
            v = -v;
        }
        std::string cs = v.str();
        bool needs_paren = !v.is_real() && v.re != 0;
        if (needs_paren) cs = "(" + cs + ")";
        std::string term;
        if (mono.empty()) term = cs;
        else if (v.is_one()) term = mono;
        else term = cs + "*" + mono;
        out += sign + term;
        first = false;
    }
    return out;
}

std::string Polynomial::str() const {
    std::vector<std::string> names;
    for (int i = 0; i < nvars; ++i) names.push_back("d" + std::to_string(i));
    return str(names);
}

} // namespace dofc
