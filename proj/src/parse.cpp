#include "dofc/parse.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace dofc {

namespace {

// ---------------------------------------------------------------- tokens

enum class Tok { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 0, col = 0;
};

struct Lexer {
    std::string s; // owned: callers may pass temporaries
    int line;
    size_t pos = 0;
    int col = 1;

    Lexer(std::string str, int ln) : s(std::move(str)), line(ln) {}

    Token next() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) {
            ++pos;
            ++col;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (pos >= s.size() || s[pos] == '#') {
            t.kind = Tok::End;
            return t;
        }
        char c = s[pos];
        auto one = [&](Tok k) {
            t.kind = k;
            t.text = std::string(1, c);
            ++pos;
            ++col;
            return t;
        };
        switch (c) {
        case '+': return one(Tok::Plus);
        case '-': return one(Tok::Minus);
        case '*': return one(Tok::Star);
        case '/': return one(Tok::Slash);
        case '^': return one(Tok::Caret);
        case '(': return one(Tok::LParen);
        case ')': return one(Tok::RParen);
        default: break;
        }
        if (std::isdigit((unsigned char)c)) {
            t.kind = Tok::Num;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
                t.text += s[pos++];
                ++col;
            }
            return t;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            t.kind = Tok::Ident;
            while (pos < s.size() &&
                   (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) {
                t.text += s[pos++];
                ++col;
            }
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
};

// ------------------------------------------------- linear expression values

// A polynomial-in-∂ constant part plus field-linear terms.
struct LinExpr {
    Polynomial c;
    std::map<int, Polynomial> f; // field index -> coefficient

    explicit LinExpr(int d) : c(d) {}
    bool field_free() const { return f.empty(); }
};

LinExpr lin_add(const LinExpr& a, const LinExpr& b) {
    LinExpr r = a;
    r.c = r.c + b.c;
    for (auto& [i, p] : b.f) {
        auto it = r.f.find(i);
        Polynomial s = (it == r.f.end()) ? p : it->second + p;
        if (s.is_zero()) {
            if (it != r.f.end()) r.f.erase(it);
        } else {
            r.f[i] = s;
        }
    }
    return r;
}

LinExpr lin_neg(const LinExpr& a) {
    LinExpr r = a;
    r.c = -r.c;
    for (auto& [i, p] : r.f) p = -p;
    return r;
}

struct ExprParser {
    Lexer lex;
    Token cur;
    const DiffSystem& sys;
    const std::map<std::string, int>& field_idx;
    const std::map<std::string, int>& var_idx;

    ExprParser(const std::string& text, int line, const DiffSystem& s,
               const std::map<std::string, int>& fi, const std::map<std::string, int>& vi)
        : lex(text, line), sys(s), field_idx(fi), var_idx(vi) {
        cur = lex.next();
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, cur.line, cur.col); }

    void advance() { cur = lex.next(); }

    LinExpr parse() {
        LinExpr e = expr();
        if (cur.kind != Tok::End) fail("unexpected trailing input");
        return e;
    }

    LinExpr expr() {
        LinExpr e = term();
        while (cur.kind == Tok::Plus || cur.kind == Tok::Minus) {
            bool minus = cur.kind == Tok::Minus;
            advance();
            LinExpr t = term();
            e = lin_add(e, minus ? lin_neg(t) : t);
        }
        return e;
    }

    LinExpr term() {
        LinExpr e = factor();
        while (cur.kind == Tok::Star || cur.kind == Tok::Slash) {
            bool div = cur.kind == Tok::Slash;
            advance();
            LinExpr rhs = factor();
            if (div) {
                if (!rhs.field_free()) fail("cannot divide by a field");
                if (!rhs.c.is_constant() || rhs.c.is_zero())
                    fail("division is only by nonzero constants");
                GaussRat inv = rhs.c.constant_coeff().inv();
                e.c = e.c.scale(inv);
                for (auto& [i, p] : e.f) p = p.scale(inv);
            } else {
                if (!e.field_free() && !rhs.field_free())
                    fail("nonlinear term: product of two field factors");
                if (rhs.field_free()) {
                    LinExpr r(sys.d);
                    r.c = e.c * rhs.c;
                    for (auto& [i, p] : e.f) r.f[i] = p * rhs.c;
                    e = r;
                } else {
                    LinExpr r(sys.d);
                    r.c = e.c * rhs.c;
                    for (auto& [i, p] : rhs.f) r.f[i] = e.c * p;
                    e = r;
                }
            }
        }
        return e;
    }

    LinExpr factor() {
        if (cur.kind == Tok::Minus) {
            advance();
            return lin_neg(factor());
        }
        if (cur.kind == Tok::Plus) {
            advance();
            return factor();
        }
        LinExpr base = primary();
        if (cur.kind == Tok::Caret) {
            advance();
            if (cur.kind != Tok::Num) fail("expected an integer exponent after '^'");
            long e = std::stol(cur.text);
            advance();
            if (!base.field_free()) fail("cannot raise a field to a power");
            Polynomial p = Polynomial::constant(sys.d, GaussRat(1));
            for (long t = 0; t < e; ++t) p = p * base.c;
            LinExpr r(sys.d);
            r.c = p;
            return r;
        }
        return base;
    }

    LinExpr primary() {
        if (cur.kind == Tok::Num) {
            LinExpr r(sys.d);
            r.c = Polynomial::constant(sys.d, GaussRat(Rat(cur.text)));
            advance();
            return r;
        }
        if (cur.kind == Tok::LParen) {
            advance();
            LinExpr e = expr();
            if (cur.kind != Tok::RParen) fail("expected ')'");
            advance();
            return e;
        }
        if (cur.kind != Tok::Ident) fail("expected a number, name, or '('");
        std::string name = cur.text;
        LinExpr r(sys.d);
        if (auto it = field_idx.find(name); it != field_idx.end()) {
            r.f[it->second] = Polynomial::constant(sys.d, GaussRat(1));
        } else if (auto vt = var_idx.find(name); vt != var_idx.end()) {
            r.c = Polynomial::variable(sys.d, vt->second);
        } else if (auto pt = sys.parameters.find(name); pt != sys.parameters.end()) {
            r.c = Polynomial::constant(sys.d, GaussRat(pt->second));
        } else if (name == "i") {
            r.c = Polynomial::constant(sys.d, GaussRat::i());
        } else {
            fail("unknown identifier '" + name + "'");
        }
        advance();
        return r;
    }
};

// ---------------------------------------------------------------- documents

Rat parse_rational(const std::string& text, int line) {
    try {
        Rat r(text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + text + "'", line, 1);
    }
}

struct PendingEq {
    std::string name, expr;
    int line = 0;
};

DiffSystem parse_dsl(const std::string& text) {
    DiffSystem sys;
    std::vector<PendingEq> pending;
    bool have_dim = false;
    std::istringstream in(text);
    std::string raw;
    int ln = 0;
    while (std::getline(in, raw)) {
        ++ln;
        std::string s = raw.substr(0, raw.find('#'));
        std::istringstream ls(s);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "dimension") {
            int d;
            if (!(ls >> d)) throw ParseError("expected an integer dimension", ln, 1);
            if (d < 1) throw ParseError("dimension must be >= 1", ln, 1);
            sys.d = d;
            have_dim = true;
        } else if (kw == "variables") {
            std::string v;
            while (ls >> v) sys.varnames.push_back(v);
        } else if (kw == "parameter") {
            std::string name, eq, val;
            if (!(ls >> name >> eq >> val) || eq != "=")
                throw ParseError("expected 'parameter <name> = <rational>'", ln, 1);
            if (name == "i") throw ParseError("'i' is reserved for the imaginary unit", ln, 1);
            sys.parameters[name] = parse_rational(val, ln);
        } else if (kw == "field") {
            std::string name;
            if (!(ls >> name)) throw ParseError("expected a field name", ln, 1);
            if (name == "i") throw ParseError("'i' is reserved for the imaginary unit", ln, 1);
            int order = 0;
            std::string word;
            if (ls >> word) {
                int o;
                if (word != "order" || !(ls >> o))
                    throw ParseError("expected 'order <int>' after the field name", ln, 1);
                order = o;
            }
            sys.fields.push_back({name, order});
        } else if (kw == "equation") {
            size_t colon = s.find(':');
            if (colon == std::string::npos)
                throw ParseError("expected 'equation <name>: <expression>'", ln, 1);
            std::istringstream hs(s.substr(0, colon));
            std::string dummy, name;
            hs >> dummy >> name;
            if (name.empty()) throw ParseError("expected an equation name", ln, 1);
            pending.push_back({name, s.substr(colon + 1), ln});
        } else {
            throw ParseError("unknown directive '" + kw + "'", ln, 1);
        }
    }
    if (!have_dim) throw ParseError("missing 'dimension' directive", ln, 1);
    if (sys.varnames.empty()) sys.varnames = sys.default_varnames();
    if ((int)sys.varnames.size() != sys.d)
        throw ParseError("expected " + std::to_string(sys.d) + " variable names", 1, 1);

    std::map<std::string, int> field_idx, var_idx;
    for (int i = 0; i < sys.m(); ++i) field_idx[sys.fields[i].name] = i;
    for (int i = 0; i < sys.d; ++i) var_idx[sys.varnames[i]] = i;

    sys.T = PolyMatrix(sys.d, (int)pending.size(), sys.m());
    for (int a = 0; a < (int)pending.size(); ++a) {
        sys.equations.push_back(pending[a].name);
        ExprParser p(pending[a].expr, pending[a].line, sys, field_idx, var_idx);
        LinExpr e = p.parse();
        if (!e.c.is_zero())
            throw ParseError("equation " + pending[a].name +
                                 " has a field-free part; equations must be linear homogeneous",
                             pending[a].line, 1);
        for (auto& [i, poly] : e.f) sys.T.at(a, i) = poly;
    }
    return sys;
}

DiffSystem parse_json_doc(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), 1, 1);
    }
    // Re-emit as DSL-equivalent pieces and reuse the expression parser.
    DiffSystem sys;
    try {
        sys.d = j.at("dimension").get<int>();
        if (sys.d < 1) throw ParseError("dimension must be >= 1", 1, 1);
        if (j.contains("variables"))
            for (auto& v : j["variables"]) sys.varnames.push_back(v.get<std::string>());
        if (sys.varnames.empty()) sys.varnames = sys.default_varnames();
        if ((int)sys.varnames.size() != sys.d)
            throw ParseError("wrong number of variable names", 1, 1);
        if (j.contains("parameters"))
            for (auto& [k, v] : j["parameters"].items())
                sys.parameters[k] =
                    v.is_string() ? parse_rational(v.get<std::string>(), 1) : Rat(v.get<long>());
        for (auto& f : j.at("fields")) {
            if (f.is_string()) sys.fields.push_back({f.get<std::string>(), 0});
            else sys.fields.push_back({f.at("name").get<std::string>(),
                                       f.value("order", 0)});
        }
        std::map<std::string, int> field_idx, var_idx;
        for (int i = 0; i < sys.m(); ++i) field_idx[sys.fields[i].name] = i;
        for (int i = 0; i < sys.d; ++i) var_idx[sys.varnames[i]] = i;
        auto eqs = j.at("equations");
        sys.T = PolyMatrix(sys.d, (int)eqs.size(), sys.m());
        int a = 0;
        for (auto& e : eqs) {
            sys.equations.push_back(e.at("name").get<std::string>());
            ExprParser p(e.at("expr").get<std::string>(), a + 1, sys, field_idx, var_idx);
            LinExpr le = p.parse();
            if (!le.c.is_zero())
                throw ParseError("equation " + sys.equations.back() + " has a field-free part",
                                 a + 1, 1);
            for (auto& [i, poly] : le.f) sys.T.at(a, i) = poly;
            ++a;
        }
        if (j.value("keep_zero_rows", false)) sys.keep_zero_rows = true;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad system document: ") + e.what(), 1, 1);
    }
    return sys;
}

} // namespace

DiffSystem parse_system(const std::string& text, SystemFormat fmt) {
    return fmt == SystemFormat::Dsl ? parse_dsl(text) : parse_json_doc(text);
}

DiffSystem load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path, 0, 0);
    std::stringstream buf;
    buf << in.rdbuf();
    bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    return parse_system(buf.str(), json ? SystemFormat::Json : SystemFormat::Dsl);
}

std::string emit_dsl(const DiffSystem& sys) {
    std::ostringstream out;
    out << "dimension " << sys.d << "\n";
    if (sys.varnames != sys.default_varnames() && !sys.varnames.empty()) {
        out << "variables";
        for (auto& v : sys.varnames) out << " " << v;
        out << "\n";
    }
    for (auto& [k, v] : sys.parameters) out << "parameter " << k << " = " << v.get_str() << "\n";
    for (auto& f : sys.fields) {
        out << "field " << f.name;
        if (f.order != 0) out << " order " << f.order;
        out << "\n";
    }
    auto vn = sys.varnames.empty() ? sys.default_varnames() : sys.varnames;
    for (int a = 0; a < sys.n(); ++a) {
        out << "equation " << sys.equations[a] << ":";
        bool first = true;
        for (int i = 0; i < sys.m(); ++i) {
            const Polynomial& p = sys.T.at(a, i);
            if (p.is_zero()) continue;
            out << (first ? " " : " + ") << "(" << p.str(vn) << ")*" << sys.fields[i].name;
            first = false;
        }
        if (first) out << " 0*" << sys.fields[0].name;
        out << "\n";
    }
    return out.str();
}

} // namespace dofc
