#include "salg/identities.hpp"

#include "salg/maps.hpp"

#include <algorithm>
#include <functional>
#include <memory>

namespace salg {

namespace {

// Evaluators available to a form: `a` is the algebra the identity lives on;
// `base`, `minus` and `plus` are the original algebra and its commutator and
// plus algebras when the form mixes them.
struct Ctx {
    const Evaluator* a = nullptr;
    const Evaluator* base = nullptr;
    const Evaluator* minus = nullptr;
    const Evaluator* plus = nullptr;
};

using Args = std::vector<Elem>;
using Pair = std::pair<Elem, Elem>;
using Fn = std::function<Pair(const Ctx&, const Args&)>;

struct Component {
    std::string name;
    Fn fn;
};

enum class Pre { None, Skew, Comm };
enum class Target { Self, Minus, Plus };

struct Checker {
    std::string name;
    std::size_t arity;
    std::vector<Component> parts;
    Pre pre = Pre::None;
    Target target = Target::Self;
    bool minus = false;
    bool plus = false;
};

Elem add(const Elem& a, const Elem& b, unsigned e = 0) { return combine(a, b, e); }
Elem sub(const Elem& a, const Elem& b, unsigned e = 0) { return combine(a, b, e + 1); }

Pair zero_rhs(const Ctx& c, Elem lhs) {
    Elem z = c.a->zero(lhs.p);
    return {std::move(lhs), std::move(z)};
}

// ---- forms ------------------------------------------------------------

Pair left_alt(const Ctx& c, const Args& v) {
    const auto& E = *c.a;
    const Elem &x = v[0], &y = v[1], &z = v[2];
    return zero_rhs(c, add(E.as(x, y, z), E.as(y, x, z), x.p * y.p));
}

Pair right_alt(const Ctx& c, const Args& v) {
    const auto& E = *c.a;
    const Elem &x = v[0], &y = v[1], &z = v[2];
    return zero_rhs(c, add(E.as(x, y, z), E.as(x, z, y), y.p * z.p));
}

Pair flexible(const Ctx& c, const Args& v) {
    const auto& E = *c.a;
    const Elem &x = v[0], &y = v[1], &z = v[2];
    return zero_rhs(c, add(E.as(x, y, z), E.as(z, y, x), x.p * y.p + x.p * z.p + y.p * z.p));
}

Pair lie(const Ctx& c, const Args& v) { return zero_rhs(c, c.a->J(v[0], v[1], v[2])); }

// (t, x, y, z)
Pair malcev1(const Ctx& c, const Args& v) {
    const auto& E = *c.a;
    const Elem &t = v[0], &x = v[1], &y = v[2], &z = v[3];
    Elem lhs = scaled(E.mul(E.al2(t), E.J(x, y, z)), 2);
    Elem at = E.al(t);
    Elem rhs = E.J(at, E.al(x), E.mul(y, z));
    rhs = add(rhs, E.J(at, E.al(y), E.mul(z, x)), x.p * (y.p + z.p));
    rhs = add(rhs, E.J(at, E.al(z), E.mul(x, y)), z.p * (x.p + y.p));
    return {lhs, rhs};
}

// (x, y, z, t)
Pair malcev2(const Ctx& c, const Args& v) {
    const auto& E = *c.a;
    const Elem &x = v[0], &y = v[1], &z = v[2], &t = v[3];
    Elem lhs = add(E.J(E.al(x), E.al(y), E.mul(t, z)), E.J(E.al(t), E.al(y), E.mul(x, z)), x.p * y.p + t.p * (x.p + y.p));
    Elem rhs = scaled(E.mul(E.J(x, y, z), E.al2(t)), sign_of(t.p * z.p));
    rhs = add(rhs, E.mul(E.J(t, y, z), E.al2(x)), x.p * (y.p + z.p + t.p) + t.p * y.p);
    return {lhs, rhs};
}

// (x, y, z, t)
Pair malcev3(const Ctx& c, const Args& v) {
    const auto& E = *c.a;
    const Elem &x = v[0], &y = v[1], &z = v[2], &t = v[3];
    auto m = [&](const Elem& a, const Elem& b) { return E.mul(a, b); };
    Elem lhs = add(E.al(m(m(x, y), m(t, z))), E.al(m(m(t, y), m(x, z))), x.p * y.p + t.p * (x.p + y.p));
    struct Term {
        unsigned e;
        Elem v;
    };
    const Term terms[] = {
        {t.p * z.p + x.p * (t.p + y.p + z.p), m(m(m(y, z), E.al(t)), E.al2(x))},
        {t.p * z.p + x.p * (y.p + z.p), m(m(m(y, z), E.al(x)), E.al2(t))},
        {z.p * (x.p + t.p) + y.p * (z.p + t.p), m(m(m(z, x), E.al(t)), E.al2(y))},
        {t.p * z.p + y.p * (t.p + z.p) + x.p * (t.p + z.p), m(m(m(z, t), E.al(x)), E.al2(y))},
        {t.p * y.p + x.p * (t.p + y.p + z.p), m(m(m(t, y), E.al(z)), E.al2(x))},
        {z.p * t.p, m(m(m(x, y), E.al(z)), E.al2(t))},
    };
    Elem rhs = E.zero(lhs.p);
    for (const auto& tm : terms) rhs = add(rhs, tm.v, tm.e);
    return {lhs, rhs};
}

// (x, y, z, t), cyclic over (x, y, t)
Pair jordan(const Ctx& c, const Args& v) {
    const auto& E = *c.a;
    const Elem &x = v[0], &y = v[1], &z = v[2], &t = v[3];
    Elem r = E.zero((x.p + y.p + z.p + t.p) & 1u);
    const Elem* cyc[3][3] = {{&x, &y, &t}, {&y, &t, &x}, {&t, &x, &y}};
    for (const auto& k : cyc) {
        const Elem &X = *k[0], &Y = *k[1], &T = *k[2];
        r = add(r, E.as(E.mul(X, Y), E.al(z), E.al(T)), T.p * (X.p + z.p));
    }
    return zero_rhs(c, r);
}

// (t, x, y, z)
Pair teichmuller(const Ctx& c, const Args& v) {
    const auto& E = *c.a;
    const Elem &t = v[0], &x = v[1], &y = v[2], &z = v[3];
    Elem r = E.as(E.mul(t, x), E.al(y), E.al(z));
    r = sub(r, E.as(E.mul(x, y), E.al(z), E.al(t)), t.p * (x.p + y.p + z.p));
    r = add(r, E.as(E.mul(y, z), E.al(t), E.al(x)), (t.p + x.p) * (y.p + z.p));
    r = sub(r, E.mul(E.al2(t), E.as(x, y, z)));
    r = sub(r, E.mul(E.as(t, x, y), E.al2(z)));
    return zero_rhs(c, r);
}

Pair f_alt_tx(const Ctx& c, const Args& v) {
    const auto& E = *c.a;
    return zero_rhs(c, add(E.f(v[0], v[1], v[2], v[3]), E.f(v[1], v[0], v[2], v[3]), v[0].p * v[1].p));
}

Pair f_alt_xy(const Ctx& c, const Args& v) {
    const auto& E = *c.a;
    return zero_rhs(c, add(E.f(v[0], v[1], v[2], v[3]), E.f(v[0], v[2], v[1], v[3]), v[1].p * v[2].p));
}

Pair f_alt_yz(const Ctx& c, const Args& v) {
    const auto& E = *c.a;
    return zero_rhs(c, add(E.f(v[0], v[1], v[2], v[3]), E.f(v[0], v[1], v[3], v[2]), v[2].p * v[3].p));
}

Pair F_eq_3f(const Ctx& c, const Args& v) {
    const auto& E = *c.a;
    return {E.F(v[0], v[1], v[2], v[3]), scaled(E.f(v[0], v[1], v[2], v[3]), 3)};
}

Pair f_brackets(const Ctx& c, const Args& v) {
    const auto& E = *c.a;
    const Elem &t = v[0], &x = v[1], &y = v[2], &z = v[3];
    Elem rhs = add(E.as(E.br(t, x), E.al(y), E.al(z)), E.as(E.br(y, z), E.al(t), E.al(x)), (y.p + z.p) * (x.p + t.p));
    return {E.f(t, x, y, z), rhs};
}

Pair F_rho(const Ctx& c, const Args& v) {
    const auto& E = *c.a;
    const Elem &t = v[0], &x = v[1], &y = v[2], &z = v[3];
    Elem rhs = sub(E.f(t, x, y, z), E.f(x, y, z, t), t.p * (x.p + y.p + z.p));
    rhs = add(rhs, E.f(y, z, t, x), (t.p + x.p) * (y.p + z.p));
    return {E.F(t, x, y, z), rhs};
}

// (t, x, y, z)
Pair cyclic_assoc(const Ctx& c, const Args& v) {
    const auto& E = *c.a;
    const Elem &t = v[0], &x = v[1], &y = v[2], &z = v[3];
    Elem lhs = scaled(E.br(E.al2(t), E.as(x, y, z)), 2);
    Elem at = E.al(t);
    Elem rhs = E.as(at, E.al(x), E.br(y, z));
    rhs = add(rhs, E.as(at, E.al(y), E.br(z, x)), x.p * (y.p + z.p));
    rhs = add(rhs, E.as(at, E.al(z), E.br(x, y)), z.p * (x.p + y.p));
    return {lhs, rhs};
}

Pair j_6as(const Ctx& c, const Args& v) {
    return {c.minus->J(v[0], v[1], v[2]), scaled(c.a->as(v[0], v[1], v[2]), 6)};
}

Pair j_2s(const Ctx& c, const Args& v) {
    return {c.minus->J(v[0], v[1], v[2]), scaled(c.a->S(v[0], v[1], v[2]), 2)};
}

// Right-hand side of the cyclic Jordan expansion; `printed` selects the
// term list with the duplicated entry.
Elem jordan_expansion_rhs(const Ctx& c, const Args& v, bool printed) {
    const auto& E = *c.a;
    const Elem &x0 = v[0], &y0 = v[1], &z = v[2], &t0 = v[3];
    const unsigned zp = z.p;
    Elem az = E.al(z);
    Elem r = E.zero((x0.p + y0.p + z.p + t0.p) & 1u);
    const Elem* cyc[3][3] = {{&x0, &y0, &t0}, {&y0, &t0, &x0}, {&t0, &x0, &y0}};
    for (const auto& k : cyc) {
        const Elem &x = *k[0], &y = *k[1], &t = *k[2];
        const unsigned xp = x.p, yp = y.p, tp = t.p;
        Elem xy = E.mul(x, y), yx = E.mul(y, x), at = E.al(t);
        struct Term {
            int sign;
            unsigned e;
            Elem v;
        };
        std::vector<Term> terms = {
            {1, tp * (xp + zp), E.as(xy, az, at)},
            {1, tp * (xp + zp) + xp * yp, E.as(yx, az, at)},
            printed ? Term{-1, zp * (xp + yp) + yp * (xp + tp), E.as(at, az, yx)}
                    : Term{-1, zp * (xp + yp) + tp * yp, E.as(at, az, xy)},
            {-1, zp * (xp + yp) + yp * (xp + tp), E.as(at, az, yx)},
            {-1, tp * yp, E.as(at, xy, az)},
            {-1, yp * (xp + tp), E.as(at, yx, az)},
            {1, xp * (yp + tp) + zp * (xp + yp + tp), E.as(az, yx, at)},
            {1, tp * xp + zp * (xp + yp + tp), E.as(az, xy, at)},
            {-1, zp * (xp + yp + tp) + tp * yp, E.as(az, at, xy)},
            {1, tp * xp, E.as(xy, at, az)},
            printed ? Term{-1, zp * (xp + yp + tp) + yp * (xp + zp), E.as(az, at, xy)}
                    : Term{-1, zp * (xp + yp + tp) + yp * (xp + tp), E.as(az, at, yx)},
            {1, xp * (yp + tp), E.as(yx, at, az)},
        };
        for (const auto& tm : terms) r = add(r, tm.v, tm.e + (tm.sign < 0 ? 1u : 0u));
    }
    const Elem &x = x0, &y = y0, &t = t0;
    const unsigned xp = x.p, yp = y.p, tp = t.p, S = zp * (xp + yp + tp);
    Elem a2z = E.al2(z);
    struct Br {
        unsigned e;
        const Elem *a, *b, *d;
    };
    const Br brs[] = {
        {xp * yp + S, &y, &t, &x},       {yp * (xp + tp) + S, &t, &y, &x}, {tp * yp + S, &t, &x, &y},
        {tp * (xp + yp) + S, &x, &t, &y}, {xp * tp + S, &x, &y, &t},       {xp * (yp + tp) + S, &y, &x, &t},
    };
    for (const auto& b : brs) r = add(r, E.br(a2z, E.as(*b.a, *b.b, *b.d)), b.e);
    return r;
}

Elem jordan_expansion_lhs(const Ctx& c, const Args& v, long coefficient) {
    const auto& P = *c.plus;
    const Elem &x0 = v[0], &y0 = v[1], &z = v[2], &t0 = v[3];
    Elem r = P.zero((x0.p + y0.p + z.p + t0.p) & 1u);
    const Elem* cyc[3][3] = {{&x0, &y0, &t0}, {&y0, &t0, &x0}, {&t0, &x0, &y0}};
    for (const auto& k : cyc) {
        const Elem &x = *k[0], &y = *k[1], &t = *k[2];
        r = add(r, P.as(P.mul(x, y), P.al(z), P.al(t)), t.p * (x.p + z.p));
    }
    return scaled(r, coefficient);
}

Pair jordan_expansion(const Ctx& c, const Args& v) {
    return {jordan_expansion_lhs(c, v, 8), jordan_expansion_rhs(c, v, false)};
}

Pair jordan_expansion_printed(const Ctx& c, const Args& v) {
    return {jordan_expansion_lhs(c, v, 4), jordan_expansion_rhs(c, v, true)};
}

const std::vector<Checker>& registry() {
    static const std::vector<Checker> r = [] {
        std::vector<Checker> v;
        v.push_back({"left-alt", 3, {{"left-alt", left_alt}}});
        v.push_back({"right-alt", 3, {{"right-alt", right_alt}}});
        v.push_back({"alternative", 3, {{"left-alt", left_alt}, {"right-alt", right_alt}}});
        v.push_back({"flexible", 3, {{"flexible", flexible}}});
        v.push_back({"hom-lie", 3, {{"hom-lie", lie}}, Pre::Skew});
        v.push_back({"hom-malcev", 4, {{"hom-malcev", malcev1}}, Pre::Skew});
        v.push_back({"hom-malcev-2", 4, {{"hom-malcev-2", malcev2}}, Pre::Skew});
        v.push_back({"hom-malcev-3", 4, {{"hom-malcev-3", malcev3}}, Pre::Skew});
        v.push_back({"hom-jordan", 4, {{"hom-jordan", jordan}}, Pre::Comm});
        v.push_back({"lie-admissible", 3, {{"hom-lie", lie}}, Pre::None, Target::Minus});
        v.push_back({"malcev-admissible", 4, {{"hom-malcev", malcev1}}, Pre::None, Target::Minus});
        v.push_back({"jordan-admissible", 4, {{"hom-jordan", jordan}}, Pre::None, Target::Plus});
        v.push_back({"teichmuller", 4, {{"teichmuller", teichmuller}}});
        v.push_back({"bk-suite",
                     4,
                     {{"f-alternating-tx", f_alt_tx},
                      {"f-alternating-xy", f_alt_xy},
                      {"f-alternating-yz", f_alt_yz},
                      {"F-eq-3f", F_eq_3f},
                      {"f-brackets", f_brackets},
                      {"F-rho", F_rho}}});
        v.push_back({"cyclic-assoc", 4, {{"cyclic-assoc", cyclic_assoc}}});
        v.push_back({"j-eq-6as", 3, {{"j-eq-6as", j_6as}}, Pre::None, Target::Self, true});
        v.push_back({"j-eq-2s", 3, {{"j-eq-2s", j_2s}}, Pre::None, Target::Self, true});
        v.push_back({"jordan-expansion", 4, {{"jordan-expansion", jordan_expansion}}, Pre::None, Target::Self, false, true});
        return v;
    }();
    return r;
}

const Checker& printed_expansion() {
    static const Checker c{"jordan-expansion-printed", 4, {{"jordan-expansion-printed", jordan_expansion_printed}},
                           Pre::None, Target::Self, false, true};
    return c;
}

const std::vector<std::string> kPairCheckers = {"supercommutative", "superskew", "multiplicative"};

const Checker* find(const std::string& name) {
    for (const auto& c : registry())
        if (c.name == name) return &c;
    return nullptr;
}

// Signs come from the declared parities of basis elements, so the forms are
// well defined even when the structure constants or the twist mix parities.
void check_twist_dims(const HomSuperAlgebra& h) {
    if (h.alpha.n != h.size()) throw Error("twisting map dimension does not match the basis");
}

IdentityReport trim(IdentityReport r, std::size_t cap) {
    if (r.counterexamples.size() > cap) r.counterexamples.resize(cap);
    return r;
}

// Owns the algebras and evaluators a checker needs.
struct Workspace {
    HomSuperAlgebra target;
    std::unique_ptr<HomSuperAlgebra> minus_alg, plus_alg;
    std::unique_ptr<Evaluator> a, base, minus, plus;
    Ctx ctx;

    Workspace(const Checker& c, const HomSuperAlgebra& h) {
        switch (c.target) {
            case Target::Self: target = h; break;
            case Target::Minus: target = commutator_algebra(h); break;
            case Target::Plus: target = plus_algebra(h); break;
        }
        a = std::make_unique<Evaluator>(target);
        ctx.a = a.get();
        if (c.target != Target::Self) {
            base = std::make_unique<Evaluator>(h);
            ctx.base = base.get();
        } else {
            ctx.base = a.get();
        }
        if (c.minus) {
            minus_alg = std::make_unique<HomSuperAlgebra>(commutator_algebra(h));
            minus = std::make_unique<Evaluator>(*minus_alg);
            ctx.minus = minus.get();
        }
        if (c.plus) {
            plus_alg = std::make_unique<HomSuperAlgebra>(plus_algebra(h));
            plus = std::make_unique<Evaluator>(*plus_alg);
            ctx.plus = plus.get();
        }
    }
};

IdentityReport run(const Checker& c, const HomSuperAlgebra& h, std::size_t cap) {
    check_twist_dims(h);
    Workspace w(c, h);
    IdentityReport r;
    r.identity = c.name;
    r.names = h.basis().names;
    if (c.pre != Pre::None) {
        IdentityReport p =
            c.pre == Pre::Skew ? is_super_skewsymmetric(w.target.algebra) : is_super_commutative(w.target.algebra);
        if (!p.holds) {
            p.identity = c.name;
            p.precondition = c.pre == Pre::Skew ? "superskew" : "supercommutative";
            return trim(p, cap);
        }
    }
    std::size_t n = h.size(), total = 1;
    for (std::size_t i = 0; i < c.arity; ++i) total *= n;
    r.tuples_checked = total;
    std::vector<std::size_t> idx(c.arity, 0);
    Args args(c.arity);
    for (std::size_t k = 0; k < total; ++k) {
        std::size_t rem = k;
        for (std::size_t i = c.arity; i-- > 0;) {
            idx[i] = rem % n;
            rem /= n;
        }
        for (std::size_t i = 0; i < c.arity; ++i) args[i] = w.a->e(idx[i]);
        for (const auto& part : c.parts) {
            Pair s = part.fn(w.ctx, args);
            Vector d = s.first.v - s.second.v;
            if (!d.is_zero()) {
                r.holds = false;
                ++r.failures;
                if (r.counterexamples.size() < cap) r.counterexamples.push_back({idx, std::move(d)});
                break;
            }
        }
    }
    return r;
}

IdentityReport run_named(const std::string& name, const HomSuperAlgebra& h, std::size_t cap) {
    const Checker* c = find(name);
    if (!c) throw Error("unknown identity '" + name + "'");
    return run(*c, h, cap);
}

}  // namespace

const std::vector<std::string>& checker_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& c : registry()) v.push_back(c.name);
        for (const auto& p : kPairCheckers) v.push_back(p);
        return v;
    }();
    return names;
}

bool is_checker(const std::string& name) {
    const auto& n = checker_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::size_t checker_arity(const std::string& name) {
    if (const Checker* c = find(name)) return c->arity;
    if (is_checker(name)) return 2;
    throw Error("unknown identity '" + name + "'");
}

IdentityReport run_check(const std::string& name, const HomSuperAlgebra& h, std::size_t cap) {
    if (name == "supercommutative" || name == "superskew" || name == "multiplicative") {
        check_twist_dims(h);
        IdentityReport r = name == "supercommutative" ? is_super_commutative(h.algebra)
                           : name == "superskew"      ? is_super_skewsymmetric(h.algebra)
                                                      : check_multiplicative(h);
        r.identity = name;
        return trim(r, cap);
    }
    return run_named(name, h, cap);
}

Sides evaluate_sides(const std::string& name, const HomSuperAlgebra& h, const std::vector<std::size_t>& tuple) {
    const Checker* c = name == printed_expansion().name ? &printed_expansion() : find(name);
    if (!c) throw Error("identity '" + name + "' has no tuple form");
    if (tuple.size() != c->arity)
        throw Error("identity '" + name + "' takes " + std::to_string(c->arity) + " arguments");
    for (auto i : tuple)
        if (i >= h.size()) throw Error("tuple index out of range");
    check_twist_dims(h);
    Workspace w(*c, h);
    Args args;
    for (auto i : tuple) args.push_back(w.a->e(i));
    Sides out;
    for (std::size_t k = 0; k < c->parts.size(); ++k) {
        Pair s = c->parts[k].fn(w.ctx, args);
        out = Sides{s.first.v, s.second.v, c->parts[k].name};
        if (!out.residual().is_zero()) break;
    }
    if (c->parts.size() > 1 && out.residual().is_zero()) {
        Pair s = c->parts[0].fn(w.ctx, args);
        out = Sides{s.first.v, s.second.v, c->parts[0].name};
    }
    return out;
}

IdentityReport check_left_hom_alternative(const HomSuperAlgebra& h, std::size_t cap) { return run_named("left-alt", h, cap); }
IdentityReport check_right_hom_alternative(const HomSuperAlgebra& h, std::size_t cap) { return run_named("right-alt", h, cap); }
IdentityReport check_hom_alternative(const HomSuperAlgebra& h, std::size_t cap) { return run_named("alternative", h, cap); }
IdentityReport check_hom_flexible(const HomSuperAlgebra& h, std::size_t cap) { return run_named("flexible", h, cap); }
IdentityReport check_hom_lie(const HomSuperAlgebra& h, std::size_t cap) { return run_named("hom-lie", h, cap); }
IdentityReport check_hom_malcev(const HomSuperAlgebra& h, std::size_t cap) { return run_named("hom-malcev", h, cap); }
IdentityReport check_hom_malcev_form2(const HomSuperAlgebra& h, std::size_t cap) { return run_named("hom-malcev-2", h, cap); }
IdentityReport check_hom_malcev_form3(const HomSuperAlgebra& h, std::size_t cap) { return run_named("hom-malcev-3", h, cap); }
IdentityReport check_hom_jordan(const HomSuperAlgebra& h, std::size_t cap) { return run_named("hom-jordan", h, cap); }
IdentityReport check_hom_lie_admissible(const HomSuperAlgebra& h, std::size_t cap) { return run_named("lie-admissible", h, cap); }
IdentityReport check_hom_malcev_admissible(const HomSuperAlgebra& h, std::size_t cap) { return run_named("malcev-admissible", h, cap); }
IdentityReport check_hom_jordan_admissible(const HomSuperAlgebra& h, std::size_t cap) { return run_named("jordan-admissible", h, cap); }
IdentityReport check_teichmuller(const HomSuperAlgebra& h, std::size_t cap) { return run_named("teichmuller", h, cap); }
IdentityReport check_bk_suite(const HomSuperAlgebra& h, std::size_t cap) { return run_named("bk-suite", h, cap); }
IdentityReport check_cyclic_assoc_relation(const HomSuperAlgebra& h, std::size_t cap) { return run_named("cyclic-assoc", h, cap); }
IdentityReport check_J_eq_6as(const HomSuperAlgebra& h, std::size_t cap) { return run_named("j-eq-6as", h, cap); }
IdentityReport check_J_eq_2S(const HomSuperAlgebra& h, std::size_t cap) { return run_named("j-eq-2s", h, cap); }
IdentityReport check_jordan_cyclic_expansion(const HomSuperAlgebra& h, std::size_t cap) { return run_named("jordan-expansion", h, cap); }

IdentityReport check_jordan_expansion_as_printed(const HomSuperAlgebra& h, std::size_t cap) {
    return run(printed_expansion(), h, cap);
}

}  // namespace salg
