#include "salg/io.hpp"

#include "salg/maps.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace salg {

ParseError::ParseError(int line, int column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column),
      detail_(what) {}

namespace {

constexpr int kMaxDepth = 200;
constexpr unsigned kMaxExponent = 255;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_identifier(const std::string& s) {
    if (s.empty() || !ident_start(s[0])) return false;
    return std::all_of(s.begin(), s.end(), ident_char);
}

struct Token {
    enum Kind { Num, Ident, Op, End } kind;
    std::string text;
    int line, column;
};

class Lexer {
public:
    Lexer(const std::string& s, int line, int column) : s_(s), line_(line), col0_(column) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        std::size_t i = 0;
        while (i < s_.size()) {
            char c = s_[i];
            if (c == ' ' || c == '\t') {
                ++i;
                continue;
            }
            int col = col0_ + static_cast<int>(i);
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
                if (j < s_.size() && ident_start(s_[j]))
                    throw ParseError(line_, col0_ + static_cast<int>(j), "expected an operator after the number");
                out.push_back({Token::Num, s_.substr(i, j - i), line_, col});
                i = j;
            } else if (ident_start(c)) {
                std::size_t j = i;
                while (j < s_.size() && ident_char(s_[j])) ++j;
                out.push_back({Token::Ident, s_.substr(i, j - i), line_, col});
                i = j;
            } else if (std::string("+-*/^()").find(c) != std::string::npos) {
                out.push_back({Token::Op, std::string(1, c), line_, col});
                ++i;
            } else {
                std::string shown = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f)
                                        ? "byte " + std::to_string(static_cast<unsigned char>(c))
                                        : "'" + std::string(1, c) + "'";
                throw ParseError(line_, col, "unexpected character " + shown);
            }
        }
        out.push_back({Token::End, "", line_, col0_ + static_cast<int>(s_.size())});
        return out;
    }

private:
    const std::string& s_;
    int line_, col0_;
};

std::shared_ptr<Expr> node(Expr::Kind k, const Token& at) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->line = at.line;
    e->column = at.column;
    return e;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    ExprPtr parse() {
        if (peek().kind == Token::End) throw ParseError(peek().line, peek().column, "empty expression");
        ExprPtr e = expr(0);
        if (peek().kind != Token::End) throw ParseError(peek().line, peek().column, "unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return t_[i_]; }
    bool is_op(const char* op) const { return peek().kind == Token::Op && peek().text == op; }
    Token take() { return t_[i_++]; }

    void enter(int depth) const {
        if (depth > kMaxDepth) throw ParseError(peek().line, peek().column, "expression nested too deeply");
    }

    ExprPtr expr(int d) {
        enter(d);
        ExprPtr l = term(d + 1);
        while (is_op("+") || is_op("-")) {
            Token op = take();
            auto n = node(op.text == "+" ? Expr::Add : Expr::Sub, op);
            n->a = l;
            n->b = term(d + 1);
            l = n;
        }
        return l;
    }

    ExprPtr term(int d) {
        enter(d);
        ExprPtr l = unary(d + 1);
        while (is_op("*") || is_op("/")) {
            Token op = take();
            auto n = node(op.text == "*" ? Expr::Mul : Expr::Div, op);
            n->a = l;
            n->b = unary(d + 1);
            if (n->kind == Expr::Div && n->b->kind == Expr::Num && n->b->num == 0)
                throw ParseError(n->b->line, n->b->column, "division by zero");
            l = n;
        }
        return l;
    }

    ExprPtr unary(int d) {
        enter(d);
        if (is_op("-")) {
            Token op = take();
            auto n = node(Expr::Neg, op);
            n->a = unary(d + 1);
            return n;
        }
        return factor(d + 1);
    }

    ExprPtr factor(int d) {
        ExprPtr base = atom(d + 1);
        if (!is_op("^")) return base;
        Token op = take();
        if (peek().kind != Token::Num) throw ParseError(peek().line, peek().column, "exponent must be an unsigned integer");
        Token e = take();
        if (e.text.size() > 6 || std::stoul(e.text) > kMaxExponent)
            throw ParseError(e.line, e.column, "exponent too large (max " + std::to_string(kMaxExponent) + ")");
        auto n = node(Expr::Pow, op);
        n->a = base;
        n->exp = static_cast<unsigned>(std::stoul(e.text));
        return n;
    }

    ExprPtr atom(int d) {
        enter(d);
        const Token& t = peek();
        if (t.kind == Token::Num) {
            Token n = take();
            auto e = node(Expr::Num, n);
            e->num = mpz_class(n.text, 10);
            return e;
        }
        if (t.kind == Token::Ident) {
            Token n = take();
            auto e = node(Expr::Ident, n);
            e->name = n.text;
            return e;
        }
        if (is_op("(")) {
            Token open = take();
            ExprPtr e = expr(d + 1);
            if (!is_op(")")) throw ParseError(peek().line, peek().column, "expected ')' to close '(' at column " + std::to_string(open.column));
            take();
            return e;
        }
        if (t.kind == Token::End) throw ParseError(t.line, t.column, "unexpected end of expression");
        throw ParseError(t.line, t.column, "unexpected '" + t.text + "'");
    }

    std::vector<Token> t_;
    std::size_t i_ = 0;
};

int prec(const Expr& e) {
    switch (e.kind) {
        case Expr::Add:
        case Expr::Sub: return 1;
        case Expr::Mul:
        case Expr::Div: return 2;
        case Expr::Neg: return 3;
        case Expr::Pow: return 4;
        default: return 5;
    }
}

void render(const Expr& e, std::string& out) {
    auto child = [&](const Expr& c, bool paren) {
        if (paren) out += '(';
        render(c, out);
        if (paren) out += ')';
    };
    switch (e.kind) {
        case Expr::Num: out += e.num.get_str(); break;
        case Expr::Ident: out += e.name; break;
        case Expr::Neg:
            out += '-';
            child(*e.a, prec(*e.a) < 3);
            break;
        case Expr::Pow:
            child(*e.a, prec(*e.a) < 5);
            out += '^' + std::to_string(e.exp);
            break;
        default: {
            int p = prec(e);
            const char* op = e.kind == Expr::Add ? " + " : e.kind == Expr::Sub ? " - " : e.kind == Expr::Mul ? "*" : "/";
            child(*e.a, prec(*e.a) < p);
            out += op;
            child(*e.b, prec(*e.b) <= p);
        }
    }
}

// Value of a linear expression: a scalar, or a vector in the basis.
struct Value {
    std::optional<Scalar> s;
    std::optional<Vector> v;
};

struct Evalr {
    const FieldPtr& f;
    const Basis* b;
    const Env& env;

    [[noreturn]] void fail(const Expr& e, const std::string& msg) const { throw ParseError(e.line, e.column, msg); }

    Scalar scalar(const Expr& e, const Value& v, const char* what) const {
        if (v.s) return *v.s;
        fail(e, std::string("a basis element cannot appear ") + what);
    }

    Value run(const Expr& e) const {
        switch (e.kind) {
            case Expr::Num: return {Scalar(f, mpq_class(e.num)), {}};
            case Expr::Ident: {
                if (auto it = env.find(e.name); it != env.end()) return {it->second, {}};
                if (f->param_index(e.name) >= 0) return {Scalar::param(f, e.name), {}};
                if (b) {
                    int i = b->index_of(e.name);
                    if (i >= 0) return {{}, Vector::unit(f, b->size(), static_cast<std::size_t>(i))};
                }
                fail(e, "unknown name '" + e.name + "'");
            }
            case Expr::Neg: {
                Value a = run(*e.a);
                if (a.s) return {-*a.s, {}};
                return {{}, -*a.v};
            }
            case Expr::Pow: {
                Value a = run(*e.a);
                return {scalar(*e.a, a, "under a power").pow(e.exp), {}};
            }
            case Expr::Add:
            case Expr::Sub: {
                Value a = run(*e.a), c = run(*e.b);
                bool sub = e.kind == Expr::Sub;
                if (a.s && c.s) return {sub ? *a.s - *c.s : *a.s + *c.s, {}};
                Vector x = as_vector(*e.a, a), y = as_vector(*e.b, c);
                return {{}, sub ? x - y : x + y};
            }
            case Expr::Mul: {
                Value a = run(*e.a), c = run(*e.b);
                if (a.s && c.s) return {*a.s * *c.s, {}};
                if (a.v && c.v) fail(e, "product of two basis elements in a linear expression");
                return a.s ? Value{{}, *c.v * *a.s} : Value{{}, *a.v * *c.s};
            }
            case Expr::Div: {
                Value a = run(*e.a), c = run(*e.b);
                Scalar d = scalar(*e.b, c, "in a divisor");
                if (d.is_zero()) fail(*e.b, "division by zero");
                if (a.s) return {*a.s / d, {}};
                return {{}, *a.v * d.inv()};
            }
        }
        fail(e, "malformed expression");
    }

    Vector as_vector(const Expr& e, const Value& v) const {
        if (v.v) return *v.v;
        if (v.s->is_zero()) return Vector::zero(f, b ? b->size() : 0);
        fail(e, "scalar term " + v.s->to_string() + " in a vector expression");
    }
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

void collect_idents(const Expr& e, std::vector<const Expr*>& out) {
    if (e.kind == Expr::Ident) out.push_back(&e);
    if (e.a) collect_idents(*e.a, out);
    if (e.b) collect_idents(*e.b, out);
}

}  // namespace

bool same_expr(const Expr& x, const Expr& y) {
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case Expr::Num: return x.num == y.num;
        case Expr::Ident: return x.name == y.name;
        case Expr::Neg: return same_expr(*x.a, *y.a);
        case Expr::Pow: return x.exp == y.exp && same_expr(*x.a, *y.a);
        default: return same_expr(*x.a, *y.a) && same_expr(*x.b, *y.b);
    }
}

ExprPtr parse_expr(const std::string& text, int line, int column) {
    return Parser(Lexer(text, line, column).run()).parse();
}

std::string render_expr(const Expr& e) {
    std::string s;
    render(e, s);
    return s;
}

Scalar eval_scalar(const Expr& e, const FieldPtr& f, const Env& env) {
    Evalr ev{f, nullptr, env};
    Value v = ev.run(e);
    return ev.scalar(e, v, "in a scalar expression");
}

Vector eval_vector(const Expr& e, const FieldPtr& f, const Basis& b, const Env& env) {
    Evalr ev{f, &b, env};
    return ev.as_vector(e, ev.run(e));
}

Scalar parse_expression(const std::string& text, const FieldPtr& f) { return eval_scalar(*parse_expr(text), f); }

Vector parse_vector(const std::string& text, const FieldPtr& f, const Basis& b, const Env& env) {
    return eval_vector(*parse_expr(text), f, b, env);
}

std::string render_vector(const Vector& v, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Scalar& c = v.c[i];
        if (c.is_zero()) continue;
        std::string term;
        if (c.is_constant()) {
            mpq_class q = c.constant_value();
            bool neg = q < 0;
            if (neg) q = -q;
            term = (neg ? "-" : "") + (q == 1 ? names[i] : q.get_str() + "*" + names[i]);
        } else {
            term = "(" + c.to_string() + ")*" + names[i];
        }
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out.empty() ? "0" : out;
}

// ---- documents -----------------------------------------------------------

Basis AlgebraDocument::basis() const { return make_basis(even, odd); }

FieldPtr AlgebraDocument::field() const { return make_field(modulus, params); }

const MapDoc* AlgebraDocument::find_map(const std::string& n) const {
    for (const auto& m : maps)
        if (m.name == n) return &m;
    return nullptr;
}

bool same_document(const AlgebraDocument& x, const AlgebraDocument& y) {
    auto eq = [](const ExprPtr& a, const ExprPtr& b) { return same_expr(*a, *b); };
    if (x.name != y.name || x.modulus != y.modulus || x.params != y.params || x.even != y.even || x.odd != y.odd ||
        x.twist != y.twist || x.notes != y.notes || x.claims != y.claims)
        return false;
    if (x.constraints.size() != y.constraints.size() || x.defaults.size() != y.defaults.size() ||
        x.products.size() != y.products.size() || x.maps.size() != y.maps.size())
        return false;
    for (std::size_t i = 0; i < x.constraints.size(); ++i) {
        const auto &a = x.constraints[i], &b = y.constraints[i];
        if (a.relation != b.relation || !eq(a.lhs, b.lhs) || !eq(a.rhs, b.rhs)) return false;
    }
    for (std::size_t i = 0; i < x.defaults.size(); ++i)
        if (x.defaults[i].first != y.defaults[i].first || !eq(x.defaults[i].second, y.defaults[i].second)) return false;
    for (std::size_t i = 0; i < x.products.size(); ++i) {
        const auto &a = x.products[i], &b = y.products[i];
        if (a.left != b.left || a.right != b.right || !eq(a.value, b.value)) return false;
    }
    for (std::size_t i = 0; i < x.maps.size(); ++i) {
        const auto &a = x.maps[i], &b = y.maps[i];
        if (a.name != b.name || a.hypothesis != b.hypothesis || a.columns.size() != b.columns.size()) return false;
        for (std::size_t j = 0; j < a.columns.size(); ++j) {
            if (a.columns[j].size() != b.columns[j].size()) return false;
            for (std::size_t k = 0; k < a.columns[j].size(); ++k)
                if (!eq(a.columns[j][k], b.columns[j][k])) return false;
        }
    }
    return true;
}

namespace {

struct Line {
    int no;
    std::string key, value;
    int key_col, value_col;
};

struct Item {
    std::string text;
    int col;
};

std::vector<Item> split_list(const std::string& value, int col) {
    std::vector<Item> out;
    if (trim(value).empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = value.find(',', start);
        std::string part = value.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t lead = part.find_first_not_of(" \t");
        int c = col + static_cast<int>(start + (lead == std::string::npos ? 0 : lead));
        out.push_back({trim(part), c});
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

class DocParser {
public:
    explicit DocParser(const std::string& text) : text_(text) {}

    AlgebraDocument run() {
        std::istringstream in(text_);
        std::string raw;
        int no = 0;
        while (std::getline(in, raw)) {
            ++no;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            for (std::size_t i = 0; i < raw.size(); ++i) {
                unsigned char ch = static_cast<unsigned char>(raw[i]);
                if (ch < 0x20 && ch != '\t') throw ParseError(no, static_cast<int>(i) + 1, "control character in input");
            }
            std::size_t first = raw.find_first_not_of(" \t");
            if (first == std::string::npos || raw[first] == '#') continue;
            if (raw[first] == '[') {
                section(raw, no, static_cast<int>(first) + 1);
                continue;
            }
            std::size_t eq = raw.find('=');
            if (eq == std::string::npos) throw ParseError(no, static_cast<int>(first) + 1, "expected 'key = value'");
            Line l;
            l.no = no;
            l.key = trim(raw.substr(0, eq));
            l.key_col = static_cast<int>(first) + 1;
            std::size_t vstart = raw.find_first_not_of(" \t", eq + 1);
            l.value = vstart == std::string::npos ? "" : trim(raw.substr(vstart));
            l.value_col = static_cast<int>(vstart == std::string::npos ? raw.size() : vstart) + 1;
            if (l.key.empty()) throw ParseError(no, l.key_col, "missing key before '='");
            entry(l);
        }
        finish(no);
        return std::move(d_);
    }

private:
    enum class Sec { None, Algebra, Product, Map, Claims };

    void section(const std::string& raw, int no, int col) {
        std::size_t close = raw.find(']', col - 1);
        if (close == std::string::npos) throw ParseError(no, col, "unterminated section header");
        if (!trim(raw.substr(close + 1)).empty()) throw ParseError(no, static_cast<int>(close) + 2, "text after section header");
        std::string inner = trim(raw.substr(col, close - col));
        if (inner == "algebra" || inner == "product" || inner == "claims") {
            if (!seen_.insert(inner).second) throw ParseError(no, col, "duplicate section [" + inner + "]");
            sec_ = inner == "algebra" ? Sec::Algebra : inner == "product" ? Sec::Product : Sec::Claims;
            if (sec_ != Sec::Algebra && sec_ != Sec::Claims) need_algebra(no, col);
            return;
        }
        if (inner.rfind("map", 0) == 0 && inner.size() > 3 && (inner[3] == ' ' || inner[3] == '\t')) {
            std::string name = trim(inner.substr(3));
            if (!is_identifier(name)) throw ParseError(no, col, "invalid map name '" + name + "'");
            if (d_.find_map(name)) throw ParseError(no, col, "duplicate map '" + name + "'");
            need_algebra(no, col);
            MapDoc m;
            m.name = name;
            m.columns.assign(basis_.size(), {});
            d_.maps.push_back(std::move(m));
            map_lines_.push_back(no);
            sec_ = Sec::Map;
            return;
        }
        throw ParseError(no, col, "unknown section [" + inner + "]");
    }

    void need_algebra(int no, int col) {
        if (!algebra_done_) {
            close_algebra(no, col);
        }
    }

    // Freezes the [algebra] declarations once a later section needs them.
    void close_algebra(int no, int col) {
        if (!seen_.count("algebra")) throw ParseError(no, col, "[algebra] section must come first");
        if (!have_name_) throw ParseError(no, col, "[algebra] is missing 'name'");
        if (d_.even.empty() && d_.odd.empty()) throw ParseError(no, col, "[algebra] declares no basis elements");
        try {
            basis_ = d_.basis();
            field_ = d_.field();
        } catch (const Error& e) {
            throw ParseError(basis_line_, 1, e.what());
        }
        for (const auto& p : d_.params)
            if (basis_.index_of(p) >= 0) throw ParseError(basis_line_, 1, "name '" + p + "' is both a parameter and a basis element");
        for (const auto& [c, line] : pending_constraints_) check_params(c.lhs, line), check_params(c.rhs, line);
        for (const auto& [def, line] : pending_defaults_) {
            if (field_->param_index(def.first) < 0) throw ParseError(line, 1, "default for undeclared parameter '" + def.first + "'");
            std::vector<const Expr*> ids;
            collect_idents(*def.second, ids);
            if (!ids.empty()) throw ParseError(ids[0]->line, ids[0]->column, "default values must be numeric");
        }
        algebra_done_ = true;
    }

    void check_params(const ExprPtr& e, int) const {
        std::vector<const Expr*> ids;
        collect_idents(*e, ids);
        for (const Expr* id : ids)
            if (field_->param_index(id->name) < 0)
                throw ParseError(id->line, id->column, "undeclared parameter '" + id->name + "'");
    }

    void check_linear(const ExprPtr& e) const {
        std::vector<const Expr*> ids;
        collect_idents(*e, ids);
        for (const Expr* id : ids)
            if (field_->param_index(id->name) < 0 && basis_.index_of(id->name) < 0)
                throw ParseError(id->line, id->column, "undeclared name '" + id->name + "'");
    }

    std::vector<std::string> name_list(const Line& l) {
        std::vector<std::string> out;
        for (const auto& it : split_list(l.value, l.value_col)) {
            if (!is_identifier(it.text)) throw ParseError(l.no, it.col, "invalid name '" + it.text + "'");
            out.push_back(it.text);
        }
        return out;
    }

    void single(const Line& l) {
        if (!keys_.insert(l.key).second) throw ParseError(l.no, l.key_col, "duplicate key '" + l.key + "'");
    }

    void entry(const Line& l) {
        switch (sec_) {
            case Sec::None: throw ParseError(l.no, l.key_col, "key outside of any section");
            case Sec::Algebra: algebra_key(l); break;
            case Sec::Product: product_key(l); break;
            case Sec::Map: map_key(l); break;
            case Sec::Claims: d_.claims.push_back({l.key, l.value}); break;
        }
    }

    void algebra_key(const Line& l) {
        if (algebra_done_) throw ParseError(l.no, l.key_col, "[algebra] keys must precede other sections");
        const std::string& k = l.key;
        if (k == "name") {
            single(l);
            if (l.value.empty()) throw ParseError(l.no, l.value_col, "empty name");
            d_.name = l.value;
            have_name_ = true;
        } else if (k == "field") {
            single(l);
            if (l.value == "Q") {
                d_.modulus = 0;
            } else if (l.value.size() > 4 && l.value.rfind("GF(", 0) == 0 && l.value.back() == ')') {
                std::string p = l.value.substr(3, l.value.size() - 4);
                if (p.empty() || p.size() > 9 || !std::all_of(p.begin(), p.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                    throw ParseError(l.no, l.value_col + 3, "invalid modulus '" + p + "'");
                d_.modulus = std::stoul(p);
                try {
                    make_field(d_.modulus);
                } catch (const Error& e) {
                    throw ParseError(l.no, l.value_col + 3, e.what());
                }
            } else {
                throw ParseError(l.no, l.value_col, "field must be Q or GF(p)");
            }
        } else if (k == "params") {
            single(l);
            d_.params = name_list(l);
        } else if (k == "even" || k == "odd") {
            single(l);
            (k == "even" ? d_.even : d_.odd) = name_list(l);
            basis_line_ = l.no;
        } else if (k == "twist") {
            single(l);
            if (!is_identifier(l.value)) throw ParseError(l.no, l.value_col, "invalid map name '" + l.value + "'");
            d_.twist = l.value;
            twist_line_ = l.no;
            twist_col_ = l.value_col;
        } else if (k == "constraint") {
            std::size_t ne = l.value.find("!=");
            std::size_t eq = ne != std::string::npos ? ne : l.value.find('=');
            if (eq == std::string::npos) throw ParseError(l.no, l.value_col, "constraint needs '=' or '!='");
            std::size_t oplen = ne != std::string::npos ? 2 : 1;
            std::string lhs = l.value.substr(0, eq), rhs = l.value.substr(eq + oplen);
            ConstraintDoc c;
            c.relation = ne != std::string::npos ? "!=" : "=";
            c.lhs = parse_expr(lhs, l.no, l.value_col);
            std::size_t lead = rhs.find_first_not_of(" \t");
            c.rhs = parse_expr(rhs, l.no, l.value_col + static_cast<int>(eq + oplen + (lead == std::string::npos ? 0 : lead)));
            d_.constraints.push_back(c);
            pending_constraints_.push_back({c, l.no});
        } else if (k == "defaults") {
            single(l);
            for (const auto& it : split_list(l.value, l.value_col)) {
                std::size_t eq = it.text.find('=');
                if (eq == std::string::npos) throw ParseError(l.no, it.col, "expected 'name=value'");
                std::string name = trim(it.text.substr(0, eq));
                if (!is_identifier(name)) throw ParseError(l.no, it.col, "invalid parameter name '" + name + "'");
                std::string val = it.text.substr(eq + 1);
                std::size_t lead = val.find_first_not_of(" \t");
                ExprPtr e = parse_expr(val, l.no, it.col + static_cast<int>(eq + 1 + (lead == std::string::npos ? 0 : lead)));
                d_.defaults.push_back({name, e});
                pending_defaults_.push_back({{name, e}, l.no});
            }
        } else if (k == "note") {
            d_.notes.push_back(l.value);
        } else {
            throw ParseError(l.no, l.key_col, "unknown key '" + k + "' in [algebra]");
        }
    }

    int basis_index(const std::string& name, int line, int col) const {
        int i = basis_.index_of(name);
        if (i < 0) throw ParseError(line, col, "undeclared basis element '" + name + "'");
        return i;
    }

    void product_key(const Line& l) {
        std::size_t star = l.key.find('*');
        if (star == std::string::npos) throw ParseError(l.no, l.key_col, "product key must look like 'a*b'");
        std::string left = trim(l.key.substr(0, star)), right = trim(l.key.substr(star + 1));
        int rcol = l.key_col + static_cast<int>(star) + 1;
        if (!is_identifier(left)) throw ParseError(l.no, l.key_col, "invalid basis name '" + left + "'");
        if (!is_identifier(right)) throw ParseError(l.no, rcol, "invalid basis name '" + right + "'");
        basis_index(left, l.no, l.key_col);
        basis_index(right, l.no, rcol);
        if (!products_seen_.insert(left + "*" + right).second)
            throw ParseError(l.no, l.key_col, "duplicate product '" + left + "*" + right + "'");
        ExprPtr e = parse_expr(l.value, l.no, l.value_col);
        check_linear(e);
        d_.products.push_back({left, right, e});
        product_lines_.push_back(l.no);
    }

    void map_key(const Line& l) {
        MapDoc& m = d_.maps.back();
        if (l.key == "hypothesis") {
            if (l.value != "none") throw ParseError(l.no, l.value_col, "hypothesis can only be 'none'");
            if (!m.hypothesis) throw ParseError(l.no, l.key_col, "duplicate key 'hypothesis'");
            m.hypothesis = false;
            return;
        }
        std::string prefix = "map." + m.name + ".";
        if (l.key.rfind(prefix, 0) != 0) throw ParseError(l.no, l.key_col, "expected '" + prefix + "<basis>'");
        std::string bname = l.key.substr(prefix.size());
        int j = basis_index(bname, l.no, l.key_col + static_cast<int>(prefix.size()));
        if (!m.columns[j].empty()) throw ParseError(l.no, l.key_col, "duplicate column '" + bname + "'");
        auto items = split_list(l.value, l.value_col);
        if (items.size() != basis_.size())
            throw ParseError(l.no, l.value_col, "expected " + std::to_string(basis_.size()) + " coordinates, found " + std::to_string(items.size()));
        for (const auto& it : items) {
            if (it.text.empty()) throw ParseError(l.no, it.col, "empty coordinate");
            ExprPtr e = parse_expr(it.text, l.no, it.col);
            check_params(e, l.no);
            m.columns[j].push_back(e);
        }
    }

    void finish(int last) {
        if (!algebra_done_) close_algebra(last + 1, 1);
        for (std::size_t i = 0; i < d_.maps.size(); ++i)
            for (std::size_t j = 0; j < basis_.size(); ++j)
                if (d_.maps[i].columns[j].empty())
                    throw ParseError(map_lines_[i], 1, "map '" + d_.maps[i].name + "' has no column for '" + basis_.names[j] + "'");
        if (!d_.twist.empty() && !d_.find_map(d_.twist))
            throw ParseError(twist_line_, twist_col_, "twist refers to undeclared map '" + d_.twist + "'");
        EvaluatedDocument ev;
        try {
            ev = evaluate_document(d_);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(last, 1, e.what());
        }
        IdentityReport g = validate(ev.algebra);
        if (!g.holds) {
            const auto& t = g.counterexamples[0].tuple;
            int line = 1;
            for (std::size_t i = 0; i < d_.products.size(); ++i)
                if (d_.products[i].left == basis_.names[t[0]] && d_.products[i].right == basis_.names[t[1]]) line = product_lines_[i];
            throw ParseError(line, 1, "product " + basis_.names[t[0]] + "*" + basis_.names[t[1]] +
                                          " violates the grading (term in " + basis_.names[t[2]] + ")");
        }
        for (std::size_t i = 0; i < d_.maps.size(); ++i)
            if ((d_.maps[i].hypothesis || d_.maps[i].name == d_.twist) && !is_even(ev.maps.at(d_.maps[i].name), basis_).holds)
                throw ParseError(map_lines_[i], 1, "map '" + d_.maps[i].name + "' is not even");
    }

    const std::string& text_;
    AlgebraDocument d_;
    Sec sec_ = Sec::None;
    std::set<std::string> seen_, keys_, products_seen_;
    bool have_name_ = false, algebra_done_ = false;
    int basis_line_ = 1, twist_line_ = 1, twist_col_ = 1;
    Basis basis_;
    FieldPtr field_;
    std::vector<std::pair<ConstraintDoc, int>> pending_constraints_;
    std::vector<std::pair<std::pair<std::string, ExprPtr>, int>> pending_defaults_;
    std::vector<int> product_lines_, map_lines_;
};

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
}

}  // namespace

AlgebraDocument parse_algebra_file(const std::string& text) { return DocParser(text).run(); }

AlgebraDocument document_from(const HomSuperAlgebra& h, const std::string& name, const std::string& map_name) {
    AlgebraDocument d;
    d.name = name;
    d.modulus = h.field()->modulus;
    d.params = h.field()->params;
    const Basis& b = h.basis();
    for (std::size_t i = 0; i < b.size(); ++i) (b.parities[i] ? d.odd : d.even).push_back(b.names[i]);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            const Vector& v = h.algebra.product(i, j);
            if (!v.is_zero()) d.products.push_back({b.names[i], b.names[j], parse_expr(render_vector(v, b.names))});
        }
    if (!h.alpha.is_identity()) {
        MapDoc m;
        m.name = map_name;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::vector<ExprPtr> col;
            for (std::size_t i = 0; i < b.size(); ++i) col.push_back(parse_expr(h.alpha.at(i, j).to_string()));
            m.columns.push_back(std::move(col));
        }
        d.maps.push_back(std::move(m));
        d.twist = map_name;
    }
    return d;
}

std::string serialize_document(const AlgebraDocument& d) {
    std::string s = "[algebra]\n";
    s += "name = " + d.name + "\n";
    s += "field = " + (d.modulus ? "GF(" + std::to_string(d.modulus) + ")" : std::string("Q")) + "\n";
    if (!d.params.empty()) s += "params = " + join(d.params) + "\n";
    s += "even = " + join(d.even) + "\n";
    s += "odd = " + join(d.odd) + "\n";
    if (!d.twist.empty()) s += "twist = " + d.twist + "\n";
    for (const auto& c : d.constraints)
        s += "constraint = " + render_expr(*c.lhs) + " " + c.relation + " " + render_expr(*c.rhs) + "\n";
    if (!d.defaults.empty()) {
        std::vector<std::string> parts;
        for (const auto& [n, e] : d.defaults) parts.push_back(n + "=" + render_expr(*e));
        s += "defaults = " + join(parts) + "\n";
    }
    for (const auto& n : d.notes) s += "note = " + n + "\n";
    s += "\n[product]\n";
    for (const auto& p : d.products) s += p.left + "*" + p.right + " = " + render_expr(*p.value) + "\n";
    for (const auto& m : d.maps) {
        s += "\n[map " + m.name + "]\n";
        std::vector<std::string> names = d.even;
        names.insert(names.end(), d.odd.begin(), d.odd.end());
        for (std::size_t j = 0; j < m.columns.size(); ++j) {
            std::vector<std::string> cs;
            for (const auto& e : m.columns[j]) cs.push_back(render_expr(*e));
            s += "map." + m.name + "." + names[j] + " = " + join(cs) + "\n";
        }
        if (!m.hypothesis) s += "hypothesis = none\n";
    }
    if (!d.claims.empty()) {
        s += "\n[claims]\n";
        for (const auto& [k, v] : d.claims) s += k + " = " + v + "\n";
    }
    return s;
}

EvaluatedDocument evaluate_document(const AlgebraDocument& d) {
    EvaluatedDocument out;
    out.field = d.field();
    Basis b = d.basis();
    out.algebra = zero_algebra(b, out.field);
    for (const auto& p : d.products) {
        int i = b.index_of(p.left), j = b.index_of(p.right);
        if (i < 0 || j < 0) throw Error("product refers to an undeclared basis element");
        out.algebra.product(i, j) = eval_vector(*p.value, out.field, b);
    }
    for (const auto& m : d.maps) {
        LinearMap f = LinearMap::zero(out.field, b.size());
        if (m.columns.size() != b.size()) throw Error("map '" + m.name + "' has the wrong number of columns");
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (m.columns[j].size() != b.size()) throw Error("map '" + m.name + "' has a malformed column");
            for (std::size_t i = 0; i < b.size(); ++i) f.at(i, j) = eval_scalar(*m.columns[j][i], out.field);
        }
        out.maps.emplace(m.name, std::move(f));
    }
    out.hom.algebra = out.algebra;
    if (d.twist.empty()) {
        out.hom.alpha = LinearMap::identity(out.field, b.size());
        out.hom.multiplicative = Tri::True;
    } else {
        auto it = out.maps.find(d.twist);
        if (it == out.maps.end()) throw Error("twist refers to undeclared map '" + d.twist + "'");
        out.hom.alpha = it->second;
    }
    return out;
}

// ---- reports -------------------------------------------------------------

std::string serialize_report(const IdentityReport& r) {
    nlohmann::ordered_json j;
    j["identity"] = r.identity;
    j["holds"] = r.holds;
    if (!r.precondition.empty()) j["precondition"] = r.precondition;
    j["tuples_checked"] = r.tuples_checked;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : r.counterexamples) {
        nlohmann::ordered_json e;
        auto t = nlohmann::ordered_json::array();
        for (auto i : c.tuple) t.push_back(i < r.names.size() ? r.names[i] : std::to_string(i));
        e["tuple"] = t;
        e["residual"] = render_vector(c.residual, r.names);
        arr.push_back(e);
    }
    j["counterexamples"] = arr;
    if (r.failures > r.counterexamples.size()) j["failures"] = r.failures;
    return j.dump();
}

IdentityReport parse_report(const std::string& text, const Basis& b, const FieldPtr& f) {
    IdentityReport r;
    try {
        auto j = nlohmann::json::parse(text);
        r.identity = j.at("identity").get<std::string>();
        r.holds = j.at("holds").get<bool>();
        r.tuples_checked = j.at("tuples_checked").get<std::size_t>();
        if (j.contains("precondition")) r.precondition = j.at("precondition").get<std::string>();
        r.names = b.names;
        for (const auto& e : j.at("counterexamples")) {
            Counterexample c;
            for (const auto& n : e.at("tuple")) {
                int i = b.index_of(n.get<std::string>());
                if (i < 0) throw Error("report names unknown basis element '" + n.get<std::string>() + "'");
                c.tuple.push_back(static_cast<std::size_t>(i));
            }
            c.residual = parse_vector(e.at("residual").get<std::string>(), f, b);
            r.counterexamples.push_back(std::move(c));
        }
        r.failures = j.contains("failures") ? j.at("failures").get<std::size_t>() : r.counterexamples.size();
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed report: ") + e.what());
    }
    return r;
}

}  // namespace salg
