#include "salg/maps.hpp"

namespace salg {

namespace {

void fail(IdentityReport& r, std::vector<std::size_t> tuple, Vector residual) {
    r.holds = false;
    ++r.failures;
    if (r.counterexamples.size() < kDefaultCap) r.counterexamples.push_back({std::move(tuple), std::move(residual)});
}

void check_dims(const SuperAlgebra& a, const LinearMap& f) {
    if (f.n != a.size()) throw Error("map dimension does not match the basis");
    if (!(*f.field == *a.field)) throw Error("map and algebra are over different fields");
}

std::string pair_name(const Basis& b, const std::vector<std::size_t>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + b.names[t[i]];
    return s + ")";
}

}  // namespace

IdentityReport is_even(const LinearMap& f, const Basis& b) {
    if (f.n != b.size()) throw Error("map dimension does not match the basis");
    IdentityReport r;
    r.identity = "even";
    r.names = b.names;
    r.tuples_checked = f.n * f.n;
    for (std::size_t j = 0; j < f.n; ++j)
        for (std::size_t i = 0; i < f.n; ++i)
            if (!f.at(i, j).is_zero() && b.parities[i] != b.parities[j]) {
                Vector d = Vector::zero(f.field, f.n);
                d.c[i] = f.at(i, j);
                fail(r, {i, j}, d);
            }
    return r;
}

IdentityReport is_weak_morphism(const SuperAlgebra& src, const SuperAlgebra& dst, const LinearMap& f) {
    check_dims(src, f);
    check_dims(dst, f);
    IdentityReport r;
    r.identity = "weak-morphism";
    r.names = src.basis.names;
    std::size_t n = src.size();
    r.tuples_checked = n * n;
    std::vector<Vector> img(n);
    for (std::size_t j = 0; j < n; ++j) img[j] = f.column(j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector d = f.apply(src.product(i, j)) - multiply(dst, img[i], img[j]);
            if (!d.is_zero()) fail(r, {i, j}, d);
        }
    return r;
}

IdentityReport is_morphism(const HomSuperAlgebra& src, const HomSuperAlgebra& dst, const LinearMap& f) {
    IdentityReport r = is_weak_morphism(src.algebra, dst.algebra, f);
    r.identity = "morphism";
    std::size_t n = src.size();
    r.tuples_checked += n;
    for (std::size_t j = 0; j < n; ++j) {
        Vector d = f.apply(src.alpha.column(j)) - dst.alpha.apply(f.column(j));
        if (!d.is_zero()) fail(r, {j}, d);
    }
    return r;
}

IdentityReport check_multiplicative(const HomSuperAlgebra& h) {
    IdentityReport r = is_weak_morphism(h.algebra, h.algebra, h.alpha);
    r.identity = "multiplicative";
    return r;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
    if (f.n != g.n) throw Error("dimension mismatch");
    LinearMap r = LinearMap::zero(f.field, f.n);
    for (std::size_t i = 0; i < f.n; ++i)
        for (std::size_t k = 0; k < f.n; ++k) {
            if (f.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < f.n; ++j)
                if (!g.at(k, j).is_zero()) r.at(i, j) += f.at(i, k) * g.at(k, j);
        }
    return r;
}

LinearMap power(const LinearMap& f, unsigned k) {
    LinearMap r = LinearMap::identity(f.field, f.n), b = f;
    while (k) {
        if (k & 1) r = compose(r, b);
        k >>= 1;
        if (k) b = compose(b, b);
    }
    return r;
}

LinearMap inverse(const LinearMap& f) {
    std::size_t n = f.n;
    LinearMap a = f, inv = LinearMap::identity(f.field, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw Error("twisting map is singular");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Scalar k = a.at(col, col).inv();
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) *= k;
            inv.at(col, j) *= k;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            Scalar m = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (!a.at(col, j).is_zero()) a.at(i, j) -= m * a.at(col, j);
                if (!inv.at(col, j).is_zero()) inv.at(i, j) -= m * inv.at(col, j);
            }
        }
    }
    return inv;
}

SuperAlgebra compose_product(const SuperAlgebra& a, const LinearMap& beta) {
    check_dims(a, beta);
    SuperAlgebra r = a;
    for (auto& v : r.table) v = beta.apply(v);
    return r;
}

HomSuperAlgebra with_multiplicativity(HomSuperAlgebra h) {
    h.multiplicative = check_multiplicative(h).holds ? Tri::True : Tri::False;
    return h;
}

HomSuperAlgebra compose_twist(const HomSuperAlgebra& h, const LinearMap& beta) {
    check_dims(h.algebra, beta);
    HomSuperAlgebra r;
    r.algebra = compose_product(h.algebra, beta);
    r.alpha = compose(beta, h.alpha);
    return with_multiplicativity(std::move(r));
}

HomSuperAlgebra yau_twist(const HomSuperAlgebra& h, const LinearMap& beta) {
    check_dims(h.algebra, beta);
    IdentityReport ev = is_even(beta, h.basis());
    if (!ev.holds)
        throw Error("map is not even: entry at " + pair_name(h.basis(), ev.counterexamples[0].tuple) + " is nonzero");
    IdentityReport w = is_weak_morphism(h.algebra, h.algebra, beta);
    if (!w.holds)
        throw Error("map is not a weak endomorphism: fails on the basis pair " +
                    pair_name(h.basis(), w.counterexamples[0].tuple));
    return compose_twist(h, beta);
}

SuperAlgebra untwist(const HomSuperAlgebra& h) { return compose_product(h.algebra, inverse(h.alpha)); }

HomSuperAlgebra derived(const HomSuperAlgebra& h, unsigned n) {
    if (h.multiplicative == Tri::Unchecked) {
        HomSuperAlgebra c = with_multiplicativity(h);
        if (c.multiplicative != Tri::True) throw Error("derived algebra needs a multiplicative Hom-superalgebra");
        return derived(c, n);
    }
    if (h.multiplicative != Tri::True) throw Error("derived algebra needs a multiplicative Hom-superalgebra");
    if (n == 0) return h;
    if (n > 16) throw Error("derived order too large");
    unsigned k = 1u << n;
    HomSuperAlgebra r;
    r.algebra = compose_product(h.algebra, power(h.alpha, k - 1));
    r.alpha = power(h.alpha, k);
    r.multiplicative = Tri::True;
    return r;
}

}  // namespace salg
