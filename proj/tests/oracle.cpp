#include "oracle.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace oracle {

namespace {

mpz_class mod(const mpz_class& x, unsigned long p) {
    mpz_class r = x % static_cast<unsigned long>(p);
    if (r < 0) r += p;
    return r;
}

}  // namespace

Num::Num(mpq_class x, unsigned long mod_p) : p(mod_p) {
    x.canonicalize();
    if (!p) {
        v = x;
        return;
    }
    if (x.get_den() == 1) {
        v = mpq_class(mod(x.get_num(), p));
        return;
    }
    mpz_class d = mod(x.get_den(), p), inv;
    if (d == 0) throw std::domain_error("denominator divisible by p");
    mpz_class pp = p;
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), pp.get_mpz_t());
    v = mpq_class(mod(mod(x.get_num(), p) * inv, p));
}

namespace {

// GF(p) values are reduced integers in [0, p), so word arithmetic suffices.
Num word(unsigned long r, unsigned long p) {
    Num n;
    n.p = p;
    n.v = r;
    return n;
}

}  // namespace

Num operator+(const Num& a, const Num& b) {
    if (unsigned long p = a.p | b.p) return word((a.v.get_num().get_ui() + b.v.get_num().get_ui()) % p, p);
    return Num(a.v + b.v, 0);
}
Num operator-(const Num& a, const Num& b) {
    if (unsigned long p = a.p | b.p) return word((a.v.get_num().get_ui() + p - b.v.get_num().get_ui()) % p, p);
    return Num(a.v - b.v, 0);
}
Num operator*(const Num& a, const Num& b) {
    if (unsigned long p = a.p | b.p) return word((a.v.get_num().get_ui() * b.v.get_num().get_ui()) % p, p);
    return Num(a.v * b.v, 0);
}
bool operator==(const Num& a, const Num& b) { return (a - b).zero(); }

Num inverse(const Num& a) {
    if (a.zero()) throw std::domain_error("inverse of zero");
    return Num(1 / a.v, a.p);
}

namespace {

struct El {
    Vec v;
    int p;
};

Num k(const Table& T, long c) { return Num(mpq_class(c), T.p); }

// (-1)^e
Num sg(const Table& T, int e) { return k(T, (e & 1) ? -1 : 1); }

struct Ops {
    const Table& T;

    Vec zerov() const { return Vec(T.n, k(T, 0)); }
    El basis(std::size_t i) const {
        Vec v = zerov();
        v[i] = k(T, 1);
        return {v, T.parity[i]};
    }
    El mul(const El& a, const El& b) const {
        Vec r = zerov();
        for (std::size_t i = 0; i < T.n; ++i) {
            if (a.v[i].zero()) continue;
            for (std::size_t j = 0; j < T.n; ++j) {
                if (b.v[j].zero()) continue;
                Num ab = a.v[i] * b.v[j];
                for (std::size_t m = 0; m < T.n; ++m)
                    if (!T.c(i, j, m).zero()) r[m] = r[m] + ab * T.c(i, j, m);
            }
        }
        return {r, (a.p + b.p) & 1};
    }
    El al(const El& a) const {
        Vec r = zerov();
        for (std::size_t i = 0; i < T.n; ++i)
            for (std::size_t j = 0; j < T.n; ++j)
                if (!a.v[j].zero()) r[i] = r[i] + T.a[i * T.n + j] * a.v[j];
        return {r, a.p};
    }
    El al2(const El& a) const { return al(al(a)); }
    // c1*a + c2*b
    El lin(const Num& c1, const El& a, const Num& c2, const El& b) const {
        Vec r = zerov();
        for (std::size_t i = 0; i < T.n; ++i) r[i] = c1 * a.v[i] + c2 * b.v[i];
        return {r, a.p};
    }
    El plus(const El& a, const El& b) const { return lin(k(T, 1), a, k(T, 1), b); }
    El minus(const El& a, const El& b) const { return lin(k(T, 1), a, k(T, -1), b); }
    El scale(long c, const El& a) const { return lin(k(T, c), a, k(T, 0), a); }
    El signed_(int e, const El& a) const { return lin(sg(T, e), a, k(T, 0), a); }

    El as(const El& x, const El& y, const El& z) const { return minus(mul(mul(x, y), al(z)), mul(al(x), mul(y, z))); }
    El br(const El& a, const El& b) const { return minus(mul(a, b), signed_(a.p * b.p, mul(b, a))); }
    // Hom-super-Jacobian with this table's product as the bracket.
    El J(const El& x, const El& y, const El& z) const {
        return minus(minus(mul(mul(x, y), al(z)), mul(al(x), mul(y, z))), signed_(y.p * z.p, mul(mul(x, z), al(y))));
    }
    El S(const El& x, const El& y, const El& z) const {
        return plus(plus(as(x, y, z), signed_(x.p * (y.p + z.p), as(y, z, x))), signed_(z.p * (x.p + y.p), as(z, x, y)));
    }
    El f(const El& t, const El& x, const El& y, const El& z) const {
        El r = as(mul(t, x), al(y), al(z));
        r = minus(r, signed_(t.p * (x.p + y.p + z.p), mul(as(x, y, z), al2(t))));
        return minus(r, signed_(t.p * x.p, mul(al2(x), as(t, y, z))));
    }
    El F(const El& t, const El& x, const El& y, const El& z) const {
        El r = br(al2(t), as(x, y, z));
        r = minus(r, signed_(z.p * (t.p + x.p + y.p), br(al2(z), as(t, x, y))));
        r = plus(r, signed_((t.p + x.p) * (y.p + z.p), br(al2(y), as(z, t, x))));
        return minus(r, signed_(t.p * (x.p + y.p + z.p), br(al2(x), as(y, z, t))));
    }
};

using Args = std::vector<El>;
using Form = std::function<El(const Ops&, const Args&)>;

struct Spec {
    std::size_t arity;
    std::vector<Form> parts;  // fails where any part is nonzero
    int pre = 0;              // 1 superskew, 2 supercommutative
    int target = 0;           // 1 minus table, 2 plus table
};

bool nonzero(const El& e) {
    for (const auto& c : e.v)
        if (!c.zero()) return true;
    return false;
}

El left_alt(const Ops& o, const Args& a) {
    const El &x = a[0], &y = a[1], &z = a[2];
    return o.plus(o.as(x, y, z), o.signed_(x.p * y.p, o.as(y, x, z)));
}
El right_alt(const Ops& o, const Args& a) {
    const El &x = a[0], &y = a[1], &z = a[2];
    return o.plus(o.as(x, y, z), o.signed_(y.p * z.p, o.as(x, z, y)));
}
El flexible(const Ops& o, const Args& a) {
    const El &x = a[0], &y = a[1], &z = a[2];
    return o.plus(o.as(x, y, z), o.signed_(x.p * y.p + x.p * z.p + y.p * z.p, o.as(z, y, x)));
}
El jacobi(const Ops& o, const Args& a) { return o.J(a[0], a[1], a[2]); }

// 2[a^2 t, J(x,y,z)] = J(at, ax, [y,z]) + ... , tuple (t, x, y, z)
El malcev1(const Ops& o, const Args& a) {
    const El &t = a[0], &x = a[1], &y = a[2], &z = a[3];
    El l = o.scale(2, o.mul(o.al2(t), o.J(x, y, z)));
    El r = o.J(o.al(t), o.al(x), o.mul(y, z));
    r = o.plus(r, o.signed_(x.p * (y.p + z.p), o.J(o.al(t), o.al(y), o.mul(z, x))));
    r = o.plus(r, o.signed_(z.p * (x.p + y.p), o.J(o.al(t), o.al(z), o.mul(x, y))));
    return o.minus(l, r);
}

// tuple (x, y, z, t)
El malcev2(const Ops& o, const Args& a) {
    const El &x = a[0], &y = a[1], &z = a[2], &t = a[3];
    El l = o.plus(o.J(o.al(x), o.al(y), o.mul(t, z)),
                  o.signed_(x.p * y.p + t.p * (x.p + y.p), o.J(o.al(t), o.al(y), o.mul(x, z))));
    El r = o.plus(o.signed_(t.p * z.p, o.mul(o.J(x, y, z), o.al2(t))),
                  o.signed_(x.p * (y.p + z.p + t.p) + t.p * y.p, o.mul(o.J(t, y, z), o.al2(x))));
    return o.minus(l, r);
}

El malcev3(const Ops& o, const Args& a) {
    const El &x = a[0], &y = a[1], &z = a[2], &t = a[3];
    auto m = [&](const El& u, const El& v) { return o.mul(u, v); };
    El l = o.plus(o.signed_(x.p * y.p + t.p * (x.p + y.p), o.al(m(m(t, y), m(x, z)))), o.al(m(m(x, y), m(t, z))));
    El r = o.signed_(t.p * z.p + x.p * (t.p + y.p + z.p), m(m(m(y, z), o.al(t)), o.al2(x)));
    r = o.plus(r, o.signed_(t.p * z.p + x.p * (y.p + z.p), m(m(m(y, z), o.al(x)), o.al2(t))));
    r = o.plus(r, o.signed_(z.p * (x.p + t.p) + y.p * (z.p + t.p), m(m(m(z, x), o.al(t)), o.al2(y))));
    r = o.plus(r, o.signed_(t.p * z.p + y.p * (t.p + z.p) + x.p * (t.p + z.p), m(m(m(z, t), o.al(x)), o.al2(y))));
    r = o.plus(r, o.signed_(t.p * y.p + x.p * (t.p + y.p + z.p), m(m(m(t, y), o.al(z)), o.al2(x))));
    r = o.plus(r, o.signed_(z.p * t.p, m(m(m(x, y), o.al(z)), o.al2(t))));
    return o.minus(l, r);
}

// sum over cyclic (x, y, t) of (-1)^{|t|(|x|+|z|)} as(xy, az, at), tuple (x, y, z, t)
El jordan(const Ops& o, const Args& a) {
    const El &x = a[0], &y = a[1], &z = a[2], &t = a[3];
    const El* c[3][3] = {{&x, &y, &t}, {&y, &t, &x}, {&t, &x, &y}};
    El r{o.zerov(), 0};
    for (auto& q : c)
        r = o.plus(r, o.signed_(q[2]->p * (q[0]->p + z.p), o.as(o.mul(*q[0], *q[1]), o.al(z), o.al(*q[2]))));
    return r;
}

El teichmuller(const Ops& o, const Args& a) {
    const El &t = a[0], &x = a[1], &y = a[2], &z = a[3];
    El l = o.as(o.mul(t, x), o.al(y), o.al(z));
    l = o.minus(l, o.signed_(t.p * (x.p + y.p + z.p), o.as(o.mul(x, y), o.al(z), o.al(t))));
    l = o.plus(l, o.signed_((t.p + x.p) * (y.p + z.p), o.as(o.mul(y, z), o.al(t), o.al(x))));
    El r = o.plus(o.mul(o.al2(t), o.as(x, y, z)), o.mul(o.as(t, x, y), o.al2(z)));
    return o.minus(l, r);
}

El f_swap(const Ops& o, const Args& a, int i) {
    Args b = a;
    std::swap(b[i], b[i + 1]);
    return o.plus(o.f(a[0], a[1], a[2], a[3]), o.signed_(a[i].p * a[i + 1].p, o.f(b[0], b[1], b[2], b[3])));
}

El F_3f(const Ops& o, const Args& a) {
    return o.minus(o.F(a[0], a[1], a[2], a[3]), o.scale(3, o.f(a[0], a[1], a[2], a[3])));
}

El f_br(const Ops& o, const Args& a) {
    const El &t = a[0], &x = a[1], &y = a[2], &z = a[3];
    El r = o.plus(o.as(o.br(t, x), o.al(y), o.al(z)),
                  o.signed_((y.p + z.p) * (x.p + t.p), o.as(o.br(y, z), o.al(t), o.al(x))));
    return o.minus(o.f(t, x, y, z), r);
}

El F_rho(const Ops& o, const Args& a) {
    const El &t = a[0], &x = a[1], &y = a[2], &z = a[3];
    El r = o.f(t, x, y, z);
    r = o.minus(r, o.signed_(t.p * (x.p + y.p + z.p), o.f(x, y, z, t)));
    r = o.plus(r, o.signed_((t.p + x.p) * (z.p + y.p), o.f(y, z, t, x)));
    return o.minus(o.F(t, x, y, z), r);
}

El cyclic(const Ops& o, const Args& a) {
    const El &t = a[0], &x = a[1], &y = a[2], &z = a[3];
    El l = o.scale(2, o.br(o.al2(t), o.as(x, y, z)));
    El r = o.as(o.al(t), o.al(x), o.br(y, z));
    r = o.plus(r, o.signed_(x.p * (y.p + z.p), o.as(o.al(t), o.al(y), o.br(z, x))));
    r = o.plus(r, o.signed_(z.p * (x.p + y.p), o.as(o.al(t), o.al(z), o.br(x, y))));
    return o.minus(l, r);
}

// J of the bracket algebra written out with brackets of mu.
El J_minus(const Ops& o, const El& x, const El& y, const El& z) {
    return o.minus(o.minus(o.br(o.br(x, y), o.al(z)), o.br(o.al(x), o.br(y, z))),
                   o.signed_(y.p * z.p, o.br(o.br(x, z), o.al(y))));
}
El j6(const Ops& o, const Args& a) { return o.minus(J_minus(o, a[0], a[1], a[2]), o.scale(6, o.as(a[0], a[1], a[2]))); }
El j2(const Ops& o, const Args& a) { return o.minus(J_minus(o, a[0], a[1], a[2]), o.scale(2, o.S(a[0], a[1], a[2]))); }

El skew(const Ops& o, const Args& a) { return o.plus(o.mul(a[0], a[1]), o.signed_(a[0].p * a[1].p, o.mul(a[1], a[0]))); }
El comm(const Ops& o, const Args& a) { return o.minus(o.mul(a[0], a[1]), o.signed_(a[0].p * a[1].p, o.mul(a[1], a[0]))); }
El mult(const Ops& o, const Args& a) { return o.minus(o.al(o.mul(a[0], a[1])), o.mul(o.al(a[0]), o.al(a[1]))); }

const std::map<std::string, Spec>& specs() {
    static const std::map<std::string, Spec> s = {
        {"left-alt", {3, {left_alt}}},
        {"right-alt", {3, {right_alt}}},
        {"alternative", {3, {left_alt, right_alt}}},
        {"flexible", {3, {flexible}}},
        {"hom-lie", {3, {jacobi}, 1}},
        {"hom-malcev", {4, {malcev1}, 1}},
        {"hom-malcev-2", {4, {malcev2}, 1}},
        {"hom-malcev-3", {4, {malcev3}, 1}},
        {"hom-jordan", {4, {jordan}, 2}},
        {"lie-admissible", {3, {jacobi}, 0, 1}},
        {"malcev-admissible", {4, {malcev1}, 0, 1}},
        {"jordan-admissible", {4, {jordan}, 0, 2}},
        {"teichmuller", {4, {teichmuller}}},
        {"bk-suite",
         {4,
          {[](const Ops& o, const Args& a) { return f_swap(o, a, 0); },
           [](const Ops& o, const Args& a) { return f_swap(o, a, 1); },
           [](const Ops& o, const Args& a) { return f_swap(o, a, 2); }, F_3f, f_br, F_rho}}},
        {"cyclic-assoc", {4, {cyclic}}},
        {"j-eq-6as", {3, {j6}}},
        {"j-eq-2s", {3, {j2}}},
        {"superskew", {2, {skew}}},
        {"supercommutative", {2, {comm}}},
        {"multiplicative", {2, {mult}}},
    };
    return s;
}

template <class Fn>
void each_tuple(std::size_t n, std::size_t arity, Fn fn) {
    std::vector<std::size_t> t(arity, 0);
    if (n == 0) return;
    for (;;) {
        fn(t);
        std::size_t i = arity;
        while (i > 0) {
            if (++t[i - 1] < n) break;
            t[i - 1] = 0;
            --i;
        }
        if (i == 0) return;
    }
}

Verdict run(const std::vector<Form>& parts, std::size_t arity, const Table& T) {
    Verdict v;
    Ops o{T};
    each_tuple(T.n, arity, [&](const std::vector<std::size_t>& t) {
        Args a;
        for (auto i : t) a.push_back(o.basis(i));
        for (const auto& fm : parts)
            if (nonzero(fm(o, a))) {
                v.failing.push_back(t);
                break;
            }
    });
    v.holds = v.failing.empty();
    return v;
}

// Plus-algebra side of the expansion, times `coef`.
El expansion_lhs(const Ops& P, const Args& a, long coef) { return P.scale(coef, jordan(P, a)); }

El expansion_rhs(const Ops& o, const Args& a, bool printed) {
    const El &x0 = a[0], &y0 = a[1], &z = a[2], &t0 = a[3];
    const int zp = z.p;
    El r{o.zerov(), 0};
    const El* c[3][3] = {{&x0, &y0, &t0}, {&y0, &t0, &x0}, {&t0, &x0, &y0}};
    for (auto& q : c) {
        const El &x = *q[0], &y = *q[1], &t = *q[2];
        const int xp = x.p, yp = y.p, tp = t.p;
        El xy = o.mul(x, y), yx = o.mul(y, x), az = o.al(z), at = o.al(t);
        auto add = [&](int sign, int e, const El& v) { r = sign > 0 ? o.plus(r, o.signed_(e, v)) : o.minus(r, o.signed_(e, v)); };
        add(+1, tp * (xp + zp), o.as(xy, az, at));
        add(+1, tp * (xp + zp) + xp * yp, o.as(yx, az, at));
        if (printed) add(-1, zp * (xp + yp) + yp * (xp + tp), o.as(at, az, yx));
        else add(-1, zp * (xp + yp) + tp * yp, o.as(at, az, xy));
        add(-1, zp * (xp + yp) + yp * (xp + tp), o.as(at, az, yx));
        add(-1, tp * yp, o.as(at, xy, az));
        add(-1, yp * (xp + tp), o.as(at, yx, az));
        add(+1, xp * (yp + tp) + zp * (xp + yp + tp), o.as(az, yx, at));
        add(+1, tp * xp + zp * (xp + yp + tp), o.as(az, xy, at));
        add(-1, zp * (xp + yp + tp) + tp * yp, o.as(az, at, xy));
        add(+1, tp * xp, o.as(xy, at, az));
        if (printed) add(-1, zp * (xp + yp + tp) + yp * (xp + zp), o.as(az, at, xy));
        else add(-1, zp * (xp + yp + tp) + yp * (xp + tp), o.as(az, at, yx));
        add(+1, xp * (yp + tp), o.as(yx, at, az));
    }
    const El &x = x0, &y = y0, &t = t0;
    const int xp = x.p, yp = y.p, tp = t.p, S = zp * (xp + yp + tp);
    El a2z = o.al2(z);
    auto addbr = [&](int e, const El& v) { r = o.plus(r, o.signed_(e + S, o.br(a2z, v))); };
    addbr(xp * yp, o.as(y, t, x));
    addbr(yp * (xp + tp), o.as(t, y, x));
    addbr(tp * yp, o.as(t, x, y));
    addbr(tp * (xp + yp), o.as(x, t, y));
    addbr(xp * tp, o.as(x, y, t));
    addbr(xp * (yp + tp), o.as(y, x, t));
    return r;
}

}  // namespace

Table minus_table(const Table& x) {
    Table r = x;
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t j = 0; j < x.n; ++j)
            for (std::size_t m = 0; m < x.n; ++m)
                r.t[(i * x.n + j) * x.n + m] = x.c(i, j, m) - sg(x, x.parity[i] * x.parity[j]) * x.c(j, i, m);
    return r;
}

Table plus_table(const Table& x) {
    Table r = x;
    Num half = inverse(k(x, 2));
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t j = 0; j < x.n; ++j)
            for (std::size_t m = 0; m < x.n; ++m)
                r.t[(i * x.n + j) * x.n + m] = half * (x.c(i, j, m) + sg(x, x.parity[i] * x.parity[j]) * x.c(j, i, m));
    return r;
}

Table yau(const Table& x, const std::vector<Num>& beta) {
    Table r = x;
    const std::size_t n = x.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t m = 0; m < n; ++m) {
                Num s = k(x, 0);
                for (std::size_t q = 0; q < n; ++q) s = s + beta[m * n + q] * x.c(i, j, q);
                r.t[(i * n + j) * n + m] = s;
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Num s = k(x, 0);
            for (std::size_t q = 0; q < n; ++q) s = s + beta[i * n + q] * x.a[q * n + j];
            r.a[i * n + j] = s;
        }
    return r;
}

const std::vector<std::string>& names() {
    static const std::vector<std::string> v = [] {
        std::vector<std::string> r;
        for (const auto& [name, s] : specs()) r.push_back(name);
        r.push_back("jordan-expansion");
        return r;
    }();
    return v;
}

Verdict check(const std::string& name, const Table& x) {
    if (name == "jordan-expansion") return jordan_expansion(x, false);
    auto it = specs().find(name);
    if (it == specs().end()) throw std::invalid_argument("oracle has no identity '" + name + "'");
    const Spec& s = it->second;
    if (s.pre) {
        Verdict p = run({s.pre == 1 ? Form(skew) : Form(comm)}, 2, x);
        if (!p.holds) {
            p.precondition_failed = true;
            return p;
        }
    }
    const Table& T = s.target == 1 ? minus_table(x) : s.target == 2 ? plus_table(x) : x;
    if (s.target) {
        Table copy = T;
        return run(s.parts, s.arity, copy);
    }
    return run(s.parts, s.arity, T);
}

Vec residual(const std::string& name, const Table& x, const std::vector<std::size_t>& tuple) {
    auto it = specs().find(name);
    if (it == specs().end()) throw std::invalid_argument("oracle has no identity '" + name + "'");
    const Spec& s = it->second;
    Table T = s.target == 1 ? minus_table(x) : s.target == 2 ? plus_table(x) : x;
    Ops o{T};
    Args a;
    for (auto i : tuple) a.push_back(o.basis(i));
    for (const auto& fm : s.parts) {
        El e = fm(o, a);
        if (nonzero(e)) return e.v;
    }
    return o.zerov();
}

Verdict jordan_expansion(const Table& x, bool printed) {
    Table plus = plus_table(x);
    Ops o{x}, P{plus};
    Verdict v;
    each_tuple(x.n, 4, [&](const std::vector<std::size_t>& t) {
        Args a, ap;
        for (auto i : t) {
            a.push_back(o.basis(i));
            ap.push_back(P.basis(i));
        }
        El d = o.minus(expansion_lhs(P, ap, printed ? 4 : 8), expansion_rhs(o, a, printed));
        if (nonzero(d)) v.failing.push_back(t);
    });
    v.holds = v.failing.empty();
    return v;
}

}  // namespace oracle
