#include "salg/corpus.hpp"

#include "salg/maps.hpp"

#include <fstream>
#include <set>
#include <sstream>

#ifndef SALG_CORPUS_DIR
#define SALG_CORPUS_DIR "corpus"
#endif

namespace salg {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> w;
    for (std::string x; in >> x;) w.push_back(x);
    return w;
}

const std::set<std::string> kClaimFields = {"on",  "check", "expect", "at",      "side",   "value",
                                            "table", "zero_at", "bind", "nonzero", "cite"};

void set_field(Claim& c, const std::string& field, const std::string& v) {
    if (field == "on") c.on = v;
    else if (field == "check") c.check = v;
    else if (field == "expect") {
        if (v != "holds" && v != "fails") throw Error("claim '" + c.key + "': expect must be holds or fails");
        c.expect = v;
    } else if (field == "at") c.at = split(v, ',');
    else if (field == "side") {
        if (v != "residual" && v != "lhs" && v != "rhs") throw Error("claim '" + c.key + "': bad side '" + v + "'");
        c.side = v;
    } else if (field == "value") c.value = v;
    else if (field == "table") c.table = v;
    else if (field == "zero_at") c.zero_at = v;
    else if (field == "bind") c.bind = v;
    else if (field == "nonzero") {
        if (v != "yes" && v != "no") throw Error("claim '" + c.key + "': nonzero must be yes or no");
        c.nonzero = v == "yes";
    } else c.cite = v;
}

Scalar bound_value(const std::string& name, const std::string& text, const FieldPtr& src) {
    try {
        return eval_scalar(*parse_expr(text), src);
    } catch (const ParseError& e) {
        throw Error("binding " + name + "=" + text + ": " + e.detail());
    }
}

bool mentions(const Scalar& x, std::size_t var) {
    for (const auto* p : {&x.num(), &x.den()})
        for (const auto& t : p->terms())
            if (mono_exp(t.first, var)) return true;
    return false;
}

}  // namespace

Claim::Kind Claim::kind() const {
    if (check == "table") return Kind::Table;
    if (!expect.empty()) return Kind::Verdict;
    return Kind::Value;
}

Bindings parse_bindings(const std::string& text) {
    Bindings out;
    if (trim(text).empty()) return out;
    for (const auto& item : split(text, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("binding '" + item + "' is not name=value");
        std::string name = trim(item.substr(0, eq)), value = trim(item.substr(eq + 1));
        if (name.empty() || value.empty()) throw Error("binding '" + item + "' is not name=value");
        out.emplace_back(name, value);
    }
    return out;
}

std::string render_bindings(const Bindings& b) {
    std::string s;
    for (const auto& [k, v] : b) s += (s.empty() ? "" : ", ") + k + "=" + v;
    return s;
}

Bindings merge_bindings(const Bindings& base, const Bindings& over) {
    Bindings out;
    auto put = [&](const std::pair<std::string, std::string>& kv) {
        for (auto& o : out)
            if (o.first == kv.first) {
                o.second = kv.second;
                return;
            }
        out.push_back(kv);
    };
    for (const auto& kv : base) put(kv);
    for (const auto& kv : over) put(kv);
    return out;
}

const Claim& CorpusEntry::claim(const std::string& key) const {
    for (const auto& c : claims)
        if (c.key == key) return c;
    throw Error("entry '" + id + "' has no claim '" + key + "'");
}

Bindings CorpusEntry::defaults() const {
    Bindings b;
    for (const auto& [k, e] : doc.defaults) b.emplace_back(k, render_expr(*e));
    return b;
}

CorpusEntry entry_from_document(AlgebraDocument doc) {
    CorpusEntry e;
    e.id = doc.name;
    std::map<std::string, std::size_t> index;
    for (const auto& [rawkey, value] : doc.claims) {
        std::string key = trim(rawkey);
        if (key.rfind("let ", 0) == 0) {
            e.lets.emplace_back(trim(key.substr(4)), value);
            continue;
        }
        auto dot = key.rfind('.');
        if (dot == std::string::npos || dot == 0) throw Error("claim line '" + key + "' is not <claim>.<field>");
        std::string name = key.substr(0, dot), field = key.substr(dot + 1);
        if (!kClaimFields.count(field)) throw Error("claim '" + name + "': unknown field '" + field + "'");
        auto it = index.find(name);
        if (it == index.end()) {
            it = index.emplace(name, e.claims.size()).first;
            e.claims.push_back(Claim{});
            e.claims.back().key = name;
        }
        set_field(e.claims[it->second], field, value);
    }
    for (const auto& c : e.claims) {
        if (c.check.empty()) throw Error("claim '" + c.key + "' has no check");
        if (c.kind() == Claim::Kind::Value && (c.value.empty() || c.at.empty()))
            throw Error("claim '" + c.key + "' needs either expect, or value and at");
        if (c.kind() == Claim::Kind::Table && c.table.empty()) throw Error("claim '" + c.key + "' has no table");
    }
    e.doc = std::move(doc);
    return e;
}

const std::vector<std::string>& corpus_ids() {
    static const std::vector<std::string> ids = {"m3-3-1",       "b42",       "k3-flexible",
                                                 "kaplansky-k3", "dt-jordan", "dt-flexible"};
    return ids;
}

std::string default_corpus_dir() { return SALG_CORPUS_DIR; }

CorpusEntry load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return entry_from_document(parse_algebra_file(ss.str()));
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

CorpusEntry load_entry(const std::string& id, const std::string& dir) {
    const auto& ids = corpus_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw Error("unknown corpus entry '" + id + "'");
    CorpusEntry e = load_file(dir + "/" + id + ".salg");
    if (e.id != id) throw Error("corpus file for '" + id + "' declares name '" + e.id + "'");
    return e;
}

// ---- specialization ------------------------------------------------------

Specializer::Specializer(FieldPtr source, const Bindings& bindings) : source_(std::move(source)) {
    std::set<std::string> bound;
    for (const auto& [k, v] : bindings) {
        if (source_->param_index(k) < 0) throw Error("unknown parameter '" + k + "'");
        if (!bound.insert(k).second) throw Error("parameter '" + k + "' bound twice");
    }
    std::vector<std::string> rest;
    for (const auto& p : source_->params)
        if (!bound.count(p)) rest.push_back(p);
    target_ = make_field(source_->modulus, rest);
    for (const auto& [k, v] : bindings) {
        Scalar x = bound_value(k, v, source_);
        for (const auto& p : source_->params)
            if (bound.count(p) && mentions(x, static_cast<std::size_t>(source_->param_index(p))))
                throw Error("binding for '" + k + "' refers to the bound parameter '" + p + "'");
        values_.emplace(k, substitute(x, {}, target_));
    }
}

Scalar Specializer::operator()(const Scalar& x) const { return substitute(x, values_, target_); }

Vector Specializer::operator()(const Vector& v) const {
    Vector r{target_, {}};
    r.c.reserve(v.size());
    for (const auto& x : v.c) r.c.push_back((*this)(x));
    return r;
}

LinearMap Specializer::operator()(const LinearMap& f) const {
    LinearMap r = LinearMap::zero(target_, f.n);
    for (std::size_t k = 0; k < f.m.size(); ++k) r.m[k] = (*this)(f.m[k]);
    return r;
}

SuperAlgebra Specializer::operator()(const SuperAlgebra& a) const {
    SuperAlgebra r{a.basis, target_, {}};
    r.table.reserve(a.table.size());
    for (const auto& v : a.table) r.table.push_back((*this)(v));
    return r;
}

Instance instantiate(const AlgebraDocument& d, const Bindings& bindings,
                     const std::vector<std::pair<std::string, std::string>>& lets) {
    EvaluatedDocument ev = evaluate_document(d);
    Specializer sp(ev.field, bindings);
    for (const auto& c : d.constraints) {
        Scalar diff = eval_scalar(*c.lhs, ev.field) - eval_scalar(*c.rhs, ev.field);
        std::string text = render_expr(*c.lhs) + " " + c.relation + " " + render_expr(*c.rhs);
        Scalar v = sp(diff);
        if (c.relation == "!=") {
            if (v.is_zero()) throw Error("constraint violated: " + text);
        } else if (v.is_constant() && !v.is_zero()) {
            throw Error("constraint violated: " + text);
        }
    }
    Instance inst;
    inst.source_field = ev.field;
    inst.field = sp.target();
    inst.algebra = sp(ev.algebra);
    for (const auto& [name, f] : ev.maps) inst.maps.emplace(name, sp(f));
    for (const auto& m : d.maps) inst.hypothesis[m.name] = m.hypothesis;
    Env src_env;
    for (const auto& [name, text] : lets) {
        if (ev.field->param_index(name) >= 0) throw Error("let '" + name + "' shadows a parameter");
        Scalar x = eval_scalar(*parse_expr(text), ev.field, src_env);
        src_env.emplace(name, x);
        inst.lets.emplace(name, sp(x));
    }
    inst.source_lets = std::move(src_env);
    inst.bindings = bindings;
    return inst;
}

HomSuperAlgebra construct(const Instance& inst, const std::string& on) {
    auto w = words(on);
    if (w.empty()) throw Error("empty construction");
    std::size_t k = 0;
    HomSuperAlgebra h;
    if (w[0] == "base") {
        h = with_identity(inst.algebra);
        k = 1;
    } else if (w[0] == "twist" || w[0] == "product") {
        if (w.size() < 2) throw Error("'" + w[0] + "' needs a map name");
        auto it = inst.maps.find(w[1]);
        if (it == inst.maps.end()) throw Error("unknown map '" + w[1] + "'");
        if (w[0] == "product") {
            h = with_identity(compose_product(inst.algebra, it->second));
        } else {
            HomSuperAlgebra base = with_identity(inst.algebra);
            h = inst.hypothesis.at(w[1]) ? yau_twist(base, it->second) : compose_twist(base, it->second);
        }
        k = 2;
    } else {
        throw Error("unknown construction '" + w[0] + "'");
    }
    if (k < w.size()) {
        if (w[k] == "commutator") h = commutator_algebra(h);
        else if (w[k] == "plus") h = plus_algebra(h);
        else throw Error("unknown construction step '" + w[k] + "'");
        ++k;
    }
    if (k != w.size()) throw Error("trailing words in construction '" + on + "'");
    return h;
}

Built build(const CorpusEntry& e, const Bindings& bindings, const std::string& map) {
    Built b;
    b.instance = instantiate(e.doc, bindings, e.lets);
    b.hom = construct(b.instance, map.empty() ? "base" : "twist " + map);
    b.claims = e.claims;
    return b;
}

Built build(const std::string& id, const Bindings& bindings, const std::string& map) {
    return build(load_entry(id), bindings, map);
}

Vector parse_claimed(const std::string& text, const Instance& inst) {
    Specializer sp(inst.source_field, inst.bindings);
    return sp(parse_vector(text, inst.source_field, inst.algebra.basis, inst.source_lets));
}

Vector claimed_value(const CorpusEntry& e, const std::string& key, const Instance& inst) {
    const Claim& c = e.claim(key);
    if (c.value.empty()) throw Error("claim '" + key + "' carries no value");
    return parse_claimed(c.value, inst);
}

Vector claimed_value(const std::string& id, const std::string& key) {
    CorpusEntry e = load_entry(id);
    Instance inst = instantiate(e.doc, {}, e.lets);
    return claimed_value(e, key, inst);
}

// ---- independent transcription ------------------------------------------

namespace {

struct Tx {
    FieldPtr f;
    Basis b;
    EvaluatedDocument out;

    Tx(unsigned long p, std::vector<std::string> params, std::vector<std::string> even, std::vector<std::string> odd)
        : f(make_field(p, std::move(params))), b(make_basis(even, odd)) {
        out.field = f;
        out.algebra = zero_algebra(b, f);
    }
    Scalar k(long v) const { return Scalar(f, v); }
    Scalar q(long n, long d) const { return Scalar(f, mpq_class(n, d)); }
    Scalar p(const char* name) const { return Scalar::param(f, name); }
    std::size_t ix(const std::string& n) const { return static_cast<std::size_t>(b.index_of(n)); }
    Vector vec(std::vector<std::pair<std::string, Scalar>> terms) const {
        Vector v = Vector::zero(f, b.size());
        for (auto& [n, c] : terms) v.c[ix(n)] += c;
        return v;
    }
    void set(const std::string& l, const std::string& r, std::vector<std::pair<std::string, Scalar>> terms) {
        out.algebra.product(ix(l), ix(r)) = vec(std::move(terms));
    }
    void map(const std::string& name, const std::vector<std::vector<Scalar>>& cols) {
        LinearMap m = LinearMap::zero(f, b.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < cols[j].size(); ++i) m.at(i, j) = cols[j][i];
        out.maps.emplace(name, m);
    }
    EvaluatedDocument done() {
        out.hom = with_identity(out.algebra);
        return out;
    }
};

EvaluatedDocument tx_m3() {
    Tx t(0, {"a", "b", "c", "d"}, {"e1", "e2", "e3"}, {"e4"});
    auto one = t.k(1);
    t.set("e1", "e3", {{"e1", -one}});
    t.set("e2", "e3", {{"e2", t.k(2)}});
    t.set("e3", "e1", {{"e1", one}});
    t.set("e3", "e2", {{"e2", t.k(-2)}});
    t.set("e3", "e4", {{"e4", -one}});
    t.set("e4", "e3", {{"e4", one}});
    t.set("e4", "e4", {{"e1", one}, {"e2", one}});
    auto a = t.p("a"), b = t.p("b"), c = t.p("c"), d = t.p("d"), z = t.k(0);
    t.map("alpha1", {{a * a, z, z, z}, {z, a * a, z, z}, {b, c, one, z}, {z, z, z, a}});
    t.map("alpha2", {{z, z, z, z}, {z, z, z, z}, {b, c, t.q(1, 2), z}, {z, d, z, z}});
    return t.done();
}

EvaluatedDocument tx_b42() {
    Tx t(3, {"a", "s", "sign"}, {"e11", "e12", "e21", "e22"}, {"m1", "m2"});
    auto one = t.k(1);
    // e_ij e_kl = delta_jk e_il; the odd part is a bimodule twisted by the sign rules below.
    const char* E[2][2] = {{"e11", "e12"}, {"e21", "e22"}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l) t.set(E[i][j], E[j][l], {{E[i][l], one}});
    t.set("e11", "m1", {{"m1", one}});
    t.set("e12", "m1", {{"m2", one}});
    t.set("e21", "m2", {{"m1", one}});
    t.set("e22", "m2", {{"m2", one}});
    t.set("m1", "e12", {{"m2", -one}});
    t.set("m1", "e22", {{"m1", one}});
    t.set("m2", "e11", {{"m2", one}});
    t.set("m2", "e21", {{"m1", -one}});
    t.set("m1", "m1", {{"e21", -one}});
    t.set("m1", "m2", {{"e11", one}});
    t.set("m2", "m1", {{"e22", -one}});
    t.set("m2", "m2", {{"e12", one}});
    auto a = t.p("a"), s = t.p("s"), sg = t.p("sign"), z = t.k(0);
    auto s2 = s * s;
    t.map("alpha", {{one, a, z, z, z, z},
                    {z, s2.inv(), z, z, z, z},
                    {-a * s2, -s2, s2, a * s2, z, z},
                    {z, -a, z, one, z, z},
                    {z, z, z, z, sg * s, sg * a * s},
                    {z, z, z, z, z, sg / s}});
    return t.done();
}

EvaluatedDocument tx_k3() {
    Tx t(0, {"beta", "gamma", "eta", "a", "b", "r"}, {"e1"}, {"e2", "e3"});
    auto one = t.k(1), two = t.k(2);
    auto be = t.p("beta"), g = t.p("gamma"), h = t.p("eta");
    t.set("e1", "e1", {{"e1", one}});
    t.set("e1", "e2", {{"e2", be}, {"e3", g}});
    t.set("e1", "e3", {{"e2", h}, {"e3", one - be}});
    t.set("e2", "e1", {{"e2", one - be}, {"e3", -g}});
    t.set("e2", "e2", {{"e1", -two * g}});
    t.set("e2", "e3", {{"e1", two * be}});
    t.set("e3", "e1", {{"e2", -h}, {"e3", be}});
    t.set("e3", "e2", {{"e1", -two * (one - be)}});
    t.set("e3", "e3", {{"e1", two * h}});
    auto a = t.p("a"), b = t.p("b"), r = t.p("r"), z = t.k(0);
    t.map("alpha", {{one, z, z}, {z, a, (r - a) / (two * h)}, {z, h * b / g, (g * a - b) / g}});
    return t.done();
}

EvaluatedDocument tx_kaplansky() {
    Tx t(0, {"c"}, {"e"}, {"x", "y"});
    auto one = t.k(1), half = t.q(1, 2);
    t.set("e", "e", {{"e", one}});
    for (const char* o : {"x", "y"}) {
        t.set("e", o, {{o, half}});
        t.set(o, "e", {{o, half}});
    }
    t.set("x", "y", {{"e", one}});
    t.set("y", "x", {{"e", -one}});
    auto ic = t.p("c").inv(), z = t.k(0);
    t.map("alpha", {{one, z, z}, {z, ic, z}, {z, z, ic}});
    return t.done();
}

EvaluatedDocument tx_dt_jordan() {
    Tx t(0, {"a", "b", "c", "t"}, {"e1", "e2"}, {"x", "y"});
    auto one = t.k(1), half = t.q(1, 2), tt = t.p("t");
    for (const char* e : {"e1", "e2"}) {
        t.set(e, e, {{e, one}});
        for (const char* o : {"x", "y"}) {
            t.set(e, o, {{o, half}});
            t.set(o, e, {{o, half}});
        }
    }
    t.set("x", "y", {{"e1", one}, {"e2", tt}});
    t.set("y", "x", {{"e1", -one}, {"e2", -tt}});
    auto a = t.p("a"), b = t.p("b"), c = t.p("c"), z = t.k(0);
    t.map("alpha", {{one, z, z, z}, {z, one, z, z}, {z, z, a, b}, {z, z, c, (one + b * c) / a}});
    return t.done();
}

EvaluatedDocument tx_dt_flexible() {
    Tx t(0, {"beta", "t", "a"}, {"e1", "e2"}, {"x", "y"});
    auto one = t.k(1), two = t.k(2), be = t.p("beta"), tt = t.p("t");
    auto nb = one - be;
    t.set("e1", "e1", {{"e1", one}});
    t.set("e1", "x", {{"y", nb}});
    t.set("e1", "y", {{"y", be}});
    t.set("e2", "e2", {{"e2", one}});
    t.set("e2", "x", {{"x", be}});
    t.set("e2", "y", {{"y", nb}});
    t.set("x", "e1", {{"x", be}});
    t.set("x", "e2", {{"x", be}});
    t.set("x", "y", {{"e1", -two * nb}, {"e2", -two * be * tt}});
    t.set("y", "e1", {{"y", nb}});
    t.set("y", "e2", {{"y", be}});
    t.set("y", "x", {{"e1", two * be}, {"e2", two * nb * tt}});
    auto a = t.p("a"), z = t.k(0);
    t.map("alpha", {{one, z, z, z}, {z, two, z, z}, {z, z, a, z}, {z, z, z, a.inv()}});
    return t.done();
}

}  // namespace

EvaluatedDocument builtin_entry(const std::string& id) {
    if (id == "m3-3-1") return tx_m3();
    if (id == "b42") return tx_b42();
    if (id == "k3-flexible") return tx_k3();
    if (id == "kaplansky-k3") return tx_kaplansky();
    if (id == "dt-jordan") return tx_dt_jordan();
    if (id == "dt-flexible") return tx_dt_flexible();
    throw Error("unknown corpus entry '" + id + "'");
}

}  // namespace salg
