#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace salg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Base field Q (modulus 0) or GF(p), optionally extended by parameters to
// the fraction field of the polynomial ring over it.
struct FieldSpec {
    unsigned long modulus = 0;
    std::vector<std::string> params;

    bool is_prime_field() const { return modulus != 0; }
    int param_index(const std::string& name) const;
    std::string describe() const;
    bool operator==(const FieldSpec& o) const { return modulus == o.modulus && params == o.params; }
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

// Validates the modulus (prime or 0) and the parameter list (distinct
// identifiers, at most kMaxParams).
FieldPtr make_field(unsigned long modulus, std::vector<std::string> params = {});
FieldPtr base_field_of(const FieldPtr& f);

constexpr std::size_t kMaxParams = 8;

// Base-field coefficient helpers. GF(p) values are kept as integers in [0,p).
mpq_class reduce_coef(const FieldSpec& f, const mpq_class& c);
mpq_class inverse_coef(const FieldSpec& f, const mpq_class& c);

// Exponent vector packed 8 bits per variable, variable 0 in the top byte, so
// integer comparison is lexicographic comparison of exponent tuples.
using Monomial = std::uint64_t;

unsigned mono_exp(Monomial m, std::size_t var);
Monomial mono_var(std::size_t var, unsigned e = 1);
Monomial mono_mul(Monomial a, Monomial b);
bool mono_divides(Monomial a, Monomial b);
Monomial mono_div(Monomial a, Monomial b);
Monomial mono_gcd(Monomial a, Monomial b);
Monomial mono_lcm(Monomial a, Monomial b);

class MultiPoly {
public:
    using Term = std::pair<Monomial, mpq_class>;

    MultiPoly() = default;
    static MultiPoly constant(const FieldSpec& f, const mpq_class& c);
    static MultiPoly variable(std::size_t var);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    bool is_monomial() const { return terms_.size() == 1; }
    mpq_class constant_value() const;
    const mpq_class& leading_coef() const { return terms_.front().second; }
    Monomial monomial_content() const;

    MultiPoly add(const FieldSpec& f, const MultiPoly& o) const;
    MultiPoly sub(const FieldSpec& f, const MultiPoly& o) const;
    MultiPoly mul(const FieldSpec& f, const MultiPoly& o) const;
    MultiPoly neg(const FieldSpec& f) const;
    MultiPoly scale(const FieldSpec& f, const mpq_class& c) const;
    MultiPoly mul_monomial(Monomial m) const;
    MultiPoly div_monomial(Monomial m) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    std::string to_string(const FieldSpec& f) const;

private:
    friend MultiPoly make_poly(const FieldSpec&, std::vector<Term>);
    std::vector<Term> terms_;  // strictly decreasing monomials, nonzero coefficients
};

// Sorts, merges and drops zero coefficients.
MultiPoly make_poly(const FieldSpec& f, std::vector<MultiPoly::Term> terms);

class Scalar {
public:
    Scalar(FieldPtr f, long v = 0);
    Scalar(FieldPtr f, const mpq_class& v);
    Scalar(FieldPtr f, MultiPoly num, MultiPoly den);

    static Scalar param(FieldPtr f, const std::string& name);

    const FieldPtr& field() const { return field_; }
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    mpq_class constant_value() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inv() const;
    Scalar pow(unsigned e) const;

    // Cross-multiplication equality.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Expression-grammar rendering.
    std::string to_string() const;

private:
    void canonicalize();
    void check_same(const Scalar& o) const;

    FieldPtr field_;
    MultiPoly num_;
    MultiPoly den_;
};

Scalar sign_scalar(const FieldPtr& f, unsigned parity_exponent);

// Replaces parameters by scalars of `target`. Parameters of the source field
// missing from `values` must exist in `target` under the same name.
Scalar substitute(const Scalar& x, const std::map<std::string, Scalar>& values, const FieldPtr& target);

// Evaluates every parameter at a base-field value; the result lives in the
// parameter-free field.
Scalar substitute_params(const Scalar& x, const std::map<std::string, mpq_class>& bindings);

// Moves a scalar to a field with a superset of its parameters.
Scalar embed(const Scalar& x, const FieldPtr& target);

}  // namespace salg
