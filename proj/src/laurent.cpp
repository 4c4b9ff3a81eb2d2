#include "dofc/laurent.hpp"

#include "dofc/error.hpp"

namespace dofc {

LaurentPoly LaurentPoly::constant(const Rat& r) { return term(r, 0); }

LaurentPoly LaurentPoly::term(const Rat& r, int exp) {
    LaurentPoly p;
    if (r != 0) p.c[exp] = r;
    return p;
}

int LaurentPoly::min_exp() const { return c.begin()->first; }
int LaurentPoly::max_exp() const { return c.rbegin()->first; }

Rat LaurentPoly::coeff(int exp) const {
    auto it = c.find(exp);
    return it == c.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(int exp, const Rat& r) {
    if (r == 0) return;
    auto it = c.find(exp);
    if (it == c.end()) {
        c[exp] = r;
    } else {
        it->second += r;
        if (it->second == 0) c.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, v] : o.c) r.add_term(e, v);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, v] : o.c) r.add_term(e, -v);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, v1] : c)
        for (auto& [e2, v2] : o.c) r.add_term(e1 + e2, v1 * v2);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [e, v] : c) r.c[e] = -v;
    return r;
}

Rat LaurentPoly::eval_one() const {
    Rat s(0);
    for (auto& [e, v] : c) s += v;
    return s;
}

Rat LaurentPoly::derivative_one() const {
    Rat s(0);
    for (auto& [e, v] : c) s += Rat(e) * v;
    return s;
}

LaurentPoly LaurentPoly::mul_one_minus_z() const {
    LaurentPoly r;
    for (auto& [e, v] : c) {
        r.add_term(e, v);
        r.add_term(e + 1, -v);
    }
    return r;
}

LaurentPoly LaurentPoly::div_one_minus_z() const {
    if (is_zero()) return LaurentPoly();
    if (eval_one() != 0)
        throw InternalError("div_one_minus_z: numerator does not vanish at z=1");
    // p = (1-z) q  <=>  q_k = p_k + q_{k-1}
    LaurentPoly q;
    Rat carry(0);
    for (int e = min_exp(); e <= max_exp(); ++e) {
        carry += coeff(e);
        q.add_term(e, carry);
    }
    // carry == p(1) == 0 here, so the division is exact
    return q;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, v] : c) {
        Rat a = v;
        std::string sign;
        if (first) {
            sign = (a < 0) ? "-" : "";
        } else {
            sign = (a < 0) ? " - " : " + ";
        }
        if (a < 0) a = -a;
        std::string mag;
        if (e == 0) {
            mag = rat_str(a);
        } else {
            std::string zs = (e == 1) ? var : var + "^" + std::to_string(e);
            mag = (a == 1) ? zs : rat_str(a) + "*" + zs;
        }
        out += sign + mag;
        first = false;
    }
    return out;
}

RationalSeries series_reduce(LaurentPoly numerator, int d) {
    RationalSeries s;
    s.pole_order = d;
    if (numerator.is_zero()) {
        s.num = numerator;
        s.pole_order = 0;
        return s;
    }
    while (s.pole_order > 0 && numerator.eval_one() == 0) {
        numerator = numerator.div_one_minus_z();
        --s.pole_order;
        if (numerator.is_zero()) {
            s.pole_order = 0;
            break;
        }
    }
    s.num = numerator;
    return s;
}

Rat binom(long n, long k) {
    if (k < 0 || n < k) return Rat(0);
    Rat r(1);
    for (long t = 0; t < k; ++t) {
        r *= Rat(n - t);
        r /= Rat(t + 1);
    }
    return r;
}

std::vector<Rat> series_coefficients(const RationalSeries& s, int nmax) {
    std::vector<Rat> out(nmax + 1, Rat(0));
    for (auto& [e, v] : s.num.c) {
        if (s.pole_order == 0) {
            if (e >= 0 && e <= nmax) out[e] += v;
            continue;
        }
        // v * z^e / (1-z)^D contributes v*C(n-e+D-1, D-1) at z^n for n >= e
        for (int n = std::max(e, 0); n <= nmax; ++n)
            out[n] += v * binom(n - e + s.pole_order - 1, s.pole_order - 1);
    }
    return out;
}

} // namespace dofc
