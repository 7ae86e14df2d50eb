#include "salg/superalg.hpp"

#include <set>

namespace salg {

int Basis::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

Basis make_basis(const std::vector<std::string>& even, const std::vector<std::string>& odd) {
    Basis b;
    std::set<std::string> seen;
    for (const auto& n : even) {
        if (!seen.insert(n).second) throw Error("duplicate basis name '" + n + "'");
        b.names.push_back(n);
        b.parities.push_back(0);
    }
    for (const auto& n : odd) {
        if (!seen.insert(n).second) throw Error("duplicate basis name '" + n + "'");
        b.names.push_back(n);
        b.parities.push_back(1);
    }
    return b;
}

Vector Vector::zero(const FieldPtr& f, std::size_t n) { return Vector{f, std::vector<Scalar>(n, Scalar(f, 0))}; }

Vector Vector::unit(const FieldPtr& f, std::size_t n, std::size_t i) {
    Vector v = zero(f, n);
    v.c[i] = Scalar(f, 1);
    return v;
}

bool Vector::is_zero() const {
    for (const auto& s : c)
        if (!s.is_zero()) return false;
    return true;
}

Vector& Vector::operator+=(const Vector& o) {
    if (o.size() != size()) throw Error("dimension mismatch");
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!o.c[i].is_zero()) c[i] += o.c[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    if (o.size() != size()) throw Error("dimension mismatch");
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!o.c[i].is_zero()) c[i] -= o.c[i];
    return *this;
}

Vector Vector::operator+(const Vector& o) const {
    Vector r = *this;
    return r += o;
}

Vector Vector::operator-(const Vector& o) const {
    Vector r = *this;
    return r -= o;
}

Vector Vector::operator-() const {
    Vector r = *this;
    for (auto& s : r.c) s = -s;
    return r;
}

Vector Vector::operator*(const Scalar& k) const {
    Vector r = *this;
    for (auto& s : r.c) s = s * k;
    return r;
}

bool Vector::operator==(const Vector& o) const {
    if (size() != o.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != o.c[i]) return false;
    return true;
}

Parity parity_of(const Basis& b, const Vector& v) {
    if (v.size() != b.size()) throw Error("dimension mismatch");
    int p = -1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.c[i].is_zero()) continue;
        int q = static_cast<int>(b.parities[i]);
        if (p >= 0 && p != q) throw Error("vector is not homogeneous (mixes even and odd basis elements)");
        p = q;
    }
    return p < 0 ? 0 : static_cast<Parity>(p);
}

LinearMap LinearMap::identity(const FieldPtr& f, std::size_t n) {
    LinearMap r = zero(f, n);
    for (std::size_t i = 0; i < n; ++i) r.at(i, i) = Scalar(f, 1);
    return r;
}

LinearMap LinearMap::zero(const FieldPtr& f, std::size_t n) { return LinearMap{f, n, std::vector<Scalar>(n * n, Scalar(f, 0))}; }

Vector LinearMap::column(std::size_t j) const {
    Vector v = Vector::zero(field, n);
    for (std::size_t i = 0; i < n; ++i) v.c[i] = at(i, j);
    return v;
}

void LinearMap::set_column(std::size_t j, const Vector& v) {
    if (v.size() != n) throw Error("dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) at(i, j) = v.c[i];
}

Vector LinearMap::apply(const Vector& v) const {
    if (v.size() != n) throw Error("dimension mismatch");
    Vector r = Vector::zero(field, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (v.c[j].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
            if (!at(i, j).is_zero()) r.c[i] += at(i, j) * v.c[j];
    }
    return r;
}

bool LinearMap::is_identity() const { return *this == identity(field, n); }

SuperAlgebra zero_algebra(const Basis& b, const FieldPtr& f) {
    SuperAlgebra a{b, f, {}};
    a.table.assign(b.size() * b.size(), Vector::zero(f, b.size()));
    return a;
}

HomSuperAlgebra with_identity(SuperAlgebra a) {
    HomSuperAlgebra h;
    h.alpha = LinearMap::identity(a.field, a.size());
    h.algebra = std::move(a);
    h.multiplicative = Tri::True;
    return h;
}

Elem combine(const Elem& a, const Elem& b, unsigned exponent) {
    Elem r = a;
    if (exponent & 1u)
        r.v -= b.v;
    else
        r.v += b.v;
    if (a.v.is_zero()) r.p = b.p;
    return r;
}

Elem negate(const Elem& a) { return Elem{-a.v, a.p}; }

Elem scaled(const Elem& a, long k) { return Elem{a.v * Scalar(a.v.field, k), a.p}; }

Evaluator::Evaluator(const HomSuperAlgebra& h) : n_(h.size()), f_(h.field()), par_(h.basis().parities) {
    if (h.alpha.n != n_) throw Error("twisting map dimension does not match the basis");
    prod_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const Vector& v = h.algebra.product(i, j);
            for (std::size_t k = 0; k < n_; ++k)
                if (!v.c[k].is_zero()) prod_[i * n_ + j].push_back({k, v.c[k]});
        }
    alpha_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t i = 0; i < n_; ++i)
            if (!h.alpha.at(i, j).is_zero()) alpha_[j].push_back({i, h.alpha.at(i, j)});
    alpha2_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        Vector c = apply(alpha_, apply(alpha_, Vector::unit(f_, n_, j)));
        for (std::size_t i = 0; i < n_; ++i)
            if (!c.c[i].is_zero()) alpha2_[j].push_back({i, c.c[i]});
    }
}

Vector Evaluator::apply(const std::vector<Sparse>& cols, const Vector& v) const {
    Vector r = Vector::zero(f_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        if (v.c[j].is_zero()) continue;
        bool one = v.c[j].is_one();
        for (const auto& [i, c] : cols[j]) r.c[i] += one ? c : c * v.c[j];
    }
    return r;
}

Elem Evaluator::e(std::size_t i) const { return Elem{Vector::unit(f_, n_, i), par_[i]}; }

Elem Evaluator::zero(Parity p) const { return Elem{Vector::zero(f_, n_), p}; }

Elem Evaluator::mul(const Elem& a, const Elem& b) const {
    Elem r{Vector::zero(f_, n_), (a.p + b.p) & 1u};
    for (std::size_t i = 0; i < n_; ++i) {
        if (a.v.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (b.v.c[j].is_zero()) continue;
            const Sparse& s = prod_[i * n_ + j];
            if (s.empty()) continue;
            Scalar k = a.v.c[i] * b.v.c[j];
            bool one = k.is_one();
            for (const auto& [idx, c] : s) r.v.c[idx] += one ? c : c * k;
        }
    }
    return r;
}

Elem Evaluator::al(const Elem& a) const { return Elem{apply(alpha_, a.v), a.p}; }

Elem Evaluator::al2(const Elem& a) const { return Elem{apply(alpha2_, a.v), a.p}; }

Elem Evaluator::br(const Elem& a, const Elem& b) const { return combine(mul(a, b), mul(b, a), 1 + a.p * b.p); }

Elem Evaluator::as(const Elem& x, const Elem& y, const Elem& z) const {
    return combine(mul(mul(x, y), al(z)), mul(al(x), mul(y, z)), 1);
}

Elem Evaluator::J(const Elem& x, const Elem& y, const Elem& z) const {
    return combine(as(x, y, z), mul(mul(x, z), al(y)), 1 + y.p * z.p);
}

Elem Evaluator::S(const Elem& x, const Elem& y, const Elem& z) const {
    Elem r = as(x, y, z);
    r = combine(r, as(y, z, x), x.p * (y.p + z.p));
    return combine(r, as(z, x, y), z.p * (x.p + y.p));
}

Elem Evaluator::f(const Elem& t, const Elem& x, const Elem& y, const Elem& z) const {
    Elem r = as(mul(t, x), al(y), al(z));
    r = combine(r, mul(as(x, y, z), al2(t)), 1 + t.p * (x.p + y.p + z.p));
    return combine(r, mul(al2(x), as(t, y, z)), 1 + t.p * x.p);
}

Elem Evaluator::F(const Elem& t, const Elem& x, const Elem& y, const Elem& z) const {
    Elem r = br(al2(t), as(x, y, z));
    r = combine(r, br(al2(z), as(t, x, y)), 1 + z.p * (t.p + x.p + y.p));
    r = combine(r, br(al2(y), as(z, t, x)), (t.p + x.p) * (y.p + z.p));
    return combine(r, br(al2(x), as(y, z, t)), 1 + t.p * (x.p + y.p + z.p));
}

Vector multiply(const SuperAlgebra& a, const Vector& u, const Vector& v) {
    if (u.size() != a.size() || v.size() != a.size()) throw Error("dimension mismatch");
    Vector r = Vector::zero(a.field, a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (u.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (v.c[j].is_zero()) continue;
            r += a.product(i, j) * (u.c[i] * v.c[j]);
        }
    }
    return r;
}

namespace {

void record(IdentityReport& r, std::vector<std::size_t> tuple, Vector residual, std::size_t cap = kDefaultCap) {
    r.holds = false;
    ++r.failures;
    if (r.counterexamples.size() < cap) r.counterexamples.push_back({std::move(tuple), std::move(residual)});
}

IdentityReport pair_symmetry(const SuperAlgebra& a, const std::string& name, unsigned extra) {
    IdentityReport r;
    r.identity = name;
    r.names = a.basis.names;
    std::size_t n = a.size();
    r.tuples_checked = n * n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            unsigned e = a.basis.parities[i] * a.basis.parities[j] + extra;
            Vector d = (e & 1u) ? a.product(i, j) - a.product(j, i) : a.product(i, j) + a.product(j, i);
            if (!d.is_zero()) record(r, {i, j}, d);
        }
    return r;
}

}  // namespace

IdentityReport validate(const SuperAlgebra& a) {
    IdentityReport r;
    r.identity = "grading";
    r.names = a.basis.names;
    std::size_t n = a.size();
    if (a.table.size() != n * n) throw Error("structure constants do not match the basis size");
    r.tuples_checked = n * n * n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vector& v = a.product(i, j);
                if (v.size() != n) throw Error("structure constants do not match the basis size");
                if (!v.c[k].is_zero() && a.basis.parities[k] != ((a.basis.parities[i] + a.basis.parities[j]) & 1u)) {
                    Vector d = Vector::zero(a.field, n);
                    d.c[k] = v.c[k];
                    record(r, {i, j, k}, d);
                }
            }
    return r;
}

IdentityReport is_super_commutative(const SuperAlgebra& a) { return pair_symmetry(a, "supercommutative", 1); }

IdentityReport is_super_skewsymmetric(const SuperAlgebra& a) { return pair_symmetry(a, "superskew", 0); }

HomSuperAlgebra commutator_algebra(const HomSuperAlgebra& h) {
    HomSuperAlgebra r = h;
    const SuperAlgebra& a = h.algebra;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            unsigned e = a.basis.parities[i] * a.basis.parities[j];
            r.algebra.product(i, j) = (e & 1u) ? a.product(i, j) + a.product(j, i) : a.product(i, j) - a.product(j, i);
        }
    if (h.multiplicative != Tri::True) r.multiplicative = Tri::Unchecked;
    return r;
}

HomSuperAlgebra plus_algebra(const HomSuperAlgebra& h) {
    if (h.field()->modulus == 2) throw Error("plus algebra needs 1/2 (characteristic 2 field)");
    HomSuperAlgebra r = h;
    const SuperAlgebra& a = h.algebra;
    Scalar half = Scalar(a.field, 2).inv();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) {
            unsigned e = a.basis.parities[i] * a.basis.parities[j];
            Vector s = (e & 1u) ? a.product(i, j) - a.product(j, i) : a.product(i, j) + a.product(j, i);
            r.algebra.product(i, j) = s * half;
        }
    if (h.multiplicative != Tri::True) r.multiplicative = Tri::Unchecked;
    return r;
}

namespace {

Elem graded(const HomSuperAlgebra& h, const Vector& v) {
    if (v.size() != h.size()) throw Error("dimension mismatch");
    return Elem{v, parity_of(h.basis(), v)};
}

}  // namespace

Vector hom_associator(const HomSuperAlgebra& h, const Vector& x, const Vector& y, const Vector& z) {
    Evaluator ev(h);
    if (x.size() != h.size() || y.size() != h.size() || z.size() != h.size()) throw Error("dimension mismatch");
    return ev.as(Elem{x, 0}, Elem{y, 0}, Elem{z, 0}).v;
}

Vector hom_super_jacobian(const HomSuperAlgebra& h, const Vector& x, const Vector& y, const Vector& z) {
    Evaluator ev(h);
    return ev.J(graded(h, x), graded(h, y), graded(h, z)).v;
}

Vector cyclic_hom_associator(const HomSuperAlgebra& h, const Vector& x, const Vector& y, const Vector& z) {
    Evaluator ev(h);
    return ev.S(graded(h, x), graded(h, y), graded(h, z)).v;
}

Vector bk_f(const HomSuperAlgebra& h, const Vector& t, const Vector& x, const Vector& y, const Vector& z) {
    Evaluator ev(h);
    return ev.f(graded(h, t), graded(h, x), graded(h, y), graded(h, z)).v;
}

Vector bk_F(const HomSuperAlgebra& h, const Vector& t, const Vector& x, const Vector& y, const Vector& z) {
    Evaluator ev(h);
    return ev.F(graded(h, t), graded(h, x), graded(h, y), graded(h, z)).v;
}

}  // namespace salg
