#pragma once

#include "salg/coeff.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace salg {

using Parity = unsigned;

inline int sign_of(unsigned exponent) { return (exponent & 1u) ? -1 : 1; }

struct Basis {
    std::vector<std::string> names;
    std::vector<Parity> parities;

    std::size_t size() const { return names.size(); }
    int index_of(const std::string& name) const;
    bool operator==(const Basis& o) const { return names == o.names && parities == o.parities; }
};

Basis make_basis(const std::vector<std::string>& even, const std::vector<std::string>& odd);

struct Vector {
    FieldPtr field;
    std::vector<Scalar> c;

    static Vector zero(const FieldPtr& f, std::size_t n);
    static Vector unit(const FieldPtr& f, std::size_t n, std::size_t i);

    std::size_t size() const { return c.size(); }
    bool is_zero() const;
    Vector operator+(const Vector& o) const;
    Vector operator-(const Vector& o) const;
    Vector operator-() const;
    Vector operator*(const Scalar& k) const;
    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    bool operator==(const Vector& o) const;
    bool operator!=(const Vector& o) const { return !(*this == o); }
};

// Throws on a vector whose support mixes parities; the zero vector is even.
Parity parity_of(const Basis& b, const Vector& v);

// Column j of m holds the image of basis element j.
struct LinearMap {
    FieldPtr field;
    std::size_t n = 0;
    std::vector<Scalar> m;  // row-major

    static LinearMap identity(const FieldPtr& f, std::size_t n);
    static LinearMap zero(const FieldPtr& f, std::size_t n);
    const Scalar& at(std::size_t i, std::size_t j) const { return m[i * n + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return m[i * n + j]; }
    Vector column(std::size_t j) const;
    void set_column(std::size_t j, const Vector& v);
    Vector apply(const Vector& v) const;
    bool is_identity() const;
    bool operator==(const LinearMap& o) const { return n == o.n && m == o.m; }
};

struct SuperAlgebra {
    Basis basis;
    FieldPtr field;
    std::vector<Vector> table;  // table[i*n+j] = e_i * e_j

    std::size_t size() const { return basis.size(); }
    const Vector& product(std::size_t i, std::size_t j) const { return table[i * size() + j]; }
    Vector& product(std::size_t i, std::size_t j) { return table[i * size() + j]; }
    bool operator==(const SuperAlgebra& o) const { return basis == o.basis && table == o.table; }
};

SuperAlgebra zero_algebra(const Basis& b, const FieldPtr& f);

enum class Tri { Unchecked, True, False };

struct HomSuperAlgebra {
    SuperAlgebra algebra;
    LinearMap alpha;
    Tri multiplicative = Tri::Unchecked;

    std::size_t size() const { return algebra.size(); }
    const Basis& basis() const { return algebra.basis; }
    const FieldPtr& field() const { return algebra.field; }
};

HomSuperAlgebra with_identity(SuperAlgebra a);

struct Counterexample {
    std::vector<std::size_t> tuple;
    Vector residual;
};

struct IdentityReport {
    std::string identity;
    bool holds = true;
    std::size_t tuples_checked = 0;
    std::size_t failures = 0;       // total failing tuples, may exceed the reported list
    std::string precondition;       // set when a required symmetry failed instead
    std::vector<std::string> names;  // basis names for rendering
    std::vector<Counterexample> counterexamples;
};

constexpr std::size_t kDefaultCap = 16;

// Homogeneous element with a known parity.
struct Elem {
    Vector v;
    Parity p = 0;
};

// Cached sparse structure constants and twisting-map images for fast
// repeated evaluation of the multilinear forms on basis tuples.
class Evaluator {
public:
    explicit Evaluator(const HomSuperAlgebra& h);

    std::size_t size() const { return n_; }
    const FieldPtr& field() const { return f_; }
    Parity parity(std::size_t i) const { return par_[i]; }
    Elem e(std::size_t i) const;
    Elem zero(Parity p = 0) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem al(const Elem& a) const;
    Elem al2(const Elem& a) const;
    Elem br(const Elem& a, const Elem& b) const;
    Elem as(const Elem& x, const Elem& y, const Elem& z) const;
    Elem J(const Elem& x, const Elem& y, const Elem& z) const;
    Elem S(const Elem& x, const Elem& y, const Elem& z) const;
    Elem f(const Elem& t, const Elem& x, const Elem& y, const Elem& z) const;
    Elem F(const Elem& t, const Elem& x, const Elem& y, const Elem& z) const;

private:
    using Sparse = std::vector<std::pair<std::size_t, Scalar>>;
    Vector apply(const std::vector<Sparse>& cols, const Vector& v) const;

    std::size_t n_;
    FieldPtr f_;
    std::vector<Parity> par_;
    std::vector<Sparse> prod_;
    std::vector<Sparse> alpha_;
    std::vector<Sparse> alpha2_;
};

// a + sign*b with sign = (-1)^exponent; parity taken from a unless a is zero.
Elem combine(const Elem& a, const Elem& b, unsigned exponent = 0);
Elem negate(const Elem& a);
Elem scaled(const Elem& a, long k);

Vector multiply(const SuperAlgebra& a, const Vector& u, const Vector& v);
IdentityReport validate(const SuperAlgebra& a);
IdentityReport is_super_commutative(const SuperAlgebra& a);
IdentityReport is_super_skewsymmetric(const SuperAlgebra& a);

HomSuperAlgebra commutator_algebra(const HomSuperAlgebra& h);
HomSuperAlgebra plus_algebra(const HomSuperAlgebra& h);

Vector hom_associator(const HomSuperAlgebra& h, const Vector& x, const Vector& y, const Vector& z);
Vector hom_super_jacobian(const HomSuperAlgebra& h, const Vector& x, const Vector& y, const Vector& z);
Vector cyclic_hom_associator(const HomSuperAlgebra& h, const Vector& x, const Vector& y, const Vector& z);
Vector bk_f(const HomSuperAlgebra& h, const Vector& t, const Vector& x, const Vector& y, const Vector& z);
Vector bk_F(const HomSuperAlgebra& h, const Vector& t, const Vector& x, const Vector& y, const Vector& z);

}  // namespace salg
