#include "salg/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace salg {

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

int FieldSpec::param_index(const std::string& name) const {
    auto it = std::find(params.begin(), params.end(), name);
    return it == params.end() ? -1 : static_cast<int>(it - params.begin());
}

std::string FieldSpec::describe() const {
    std::string base = modulus ? "GF(" + std::to_string(modulus) + ")" : "Q";
    if (params.empty()) return base;
    std::string s = "Frac(" + base + "[";
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + params[i];
    return s + "])";
}

FieldPtr make_field(unsigned long modulus, std::vector<std::string> params) {
    if (modulus != 0 && !is_prime(modulus))
        throw Error("modulus " + std::to_string(modulus) + " is not prime");
    if (params.size() > kMaxParams)
        throw Error("at most " + std::to_string(kMaxParams) + " parameters are supported");
    std::set<std::string> seen;
    for (const auto& p : params) {
        if (!is_identifier(p)) throw Error("invalid parameter name '" + p + "'");
        if (!seen.insert(p).second) throw Error("duplicate parameter '" + p + "'");
    }
    auto f = std::make_shared<FieldSpec>();
    f->modulus = modulus;
    f->params = std::move(params);
    return f;
}

FieldPtr base_field_of(const FieldPtr& f) { return make_field(f->modulus); }

mpq_class reduce_coef(const FieldSpec& f, const mpq_class& c) {
    if (!f.modulus) return c;
    if (c.get_den() == 1 && c.get_num().fits_slong_p()) {
        long r = c.get_num().get_si() % static_cast<long>(f.modulus);
        return mpq_class(r < 0 ? r + static_cast<long>(f.modulus) : r);
    }
    mpz_class p = f.modulus;
    mpz_class n = c.get_num() % p;
    mpz_class d = c.get_den() % p;
    if (d == 0) throw Error("division by zero in GF(" + std::to_string(f.modulus) + ")");
    mpz_class di;
    mpz_invert(di.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (n * di) % p;
    if (r < 0) r += p;
    return mpq_class(r);
}

mpq_class inverse_coef(const FieldSpec& f, const mpq_class& c) {
    if (c == 0) throw Error("inverse of zero");
    if (!f.modulus) return 1 / c;
    mpz_class p = f.modulus, r;
    mpz_class n = c.get_num() % p;
    if (n < 0) n += p;
    if (n == 0 || !mpz_invert(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t())) throw Error("inverse of zero");
    return mpq_class(r);
}

unsigned mono_exp(Monomial m, std::size_t var) { return (m >> (8 * (7 - var))) & 0xffu; }

Monomial mono_var(std::size_t var, unsigned e) {
    if (e > 255) throw Error("exponent overflow (max 255 per variable)");
    return static_cast<Monomial>(e) << (8 * (7 - var));
}

Monomial mono_mul(Monomial a, Monomial b) {
    Monomial r = 0;
    for (std::size_t v = 0; v < 8; ++v) r |= mono_var(v, mono_exp(a, v) + mono_exp(b, v));
    return r;
}

bool mono_divides(Monomial a, Monomial b) {
    for (std::size_t v = 0; v < 8; ++v)
        if (mono_exp(a, v) > mono_exp(b, v)) return false;
    return true;
}

Monomial mono_div(Monomial a, Monomial b) { return a - b; }

Monomial mono_gcd(Monomial a, Monomial b) {
    Monomial r = 0;
    for (std::size_t v = 0; v < 8; ++v) r |= mono_var(v, std::min(mono_exp(a, v), mono_exp(b, v)));
    return r;
}

Monomial mono_lcm(Monomial a, Monomial b) {
    Monomial r = 0;
    for (std::size_t v = 0; v < 8; ++v) r |= mono_var(v, std::max(mono_exp(a, v), mono_exp(b, v)));
    return r;
}

MultiPoly make_poly(const FieldSpec& f, std::vector<MultiPoly::Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    MultiPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else {
            if (!p.terms_.empty()) {
                p.terms_.back().second = reduce_coef(f, p.terms_.back().second);
                if (p.terms_.back().second == 0) p.terms_.pop_back();
            }
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty()) {
        p.terms_.back().second = reduce_coef(f, p.terms_.back().second);
        if (p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
}

MultiPoly MultiPoly::constant(const FieldSpec& f, const mpq_class& c) {
    MultiPoly p;
    mpq_class r = reduce_coef(f, c);
    if (r != 0) p.terms_.push_back({0, std::move(r)});
    return p;
}

MultiPoly MultiPoly::variable(std::size_t var) {
    MultiPoly p;
    p.terms_.push_back({mono_var(var), mpq_class(1)});
    return p;
}

mpq_class MultiPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw Error("polynomial is not constant");
    return terms_[0].second;
}

Monomial MultiPoly::monomial_content() const {
    if (terms_.empty()) return 0;
    Monomial g = terms_[0].first;
    for (const auto& t : terms_) g = mono_gcd(g, t.first);
    return g;
}

MultiPoly MultiPoly::add(const FieldSpec& f, const MultiPoly& o) const {
    MultiPoly r;
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first > o.terms_[j].first))
            r.terms_.push_back(terms_[i++]);
        else if (i == terms_.size() || o.terms_[j].first > terms_[i].first)
            r.terms_.push_back(o.terms_[j++]);
        else {
            mpq_class c = reduce_coef(f, terms_[i].second + o.terms_[j].second);
            if (c != 0) r.terms_.push_back({terms_[i].first, c});
            ++i, ++j;
        }
    }
    return r;
}

MultiPoly MultiPoly::neg(const FieldSpec& f) const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = reduce_coef(f, -t.second);
    return r;
}

MultiPoly MultiPoly::sub(const FieldSpec& f, const MultiPoly& o) const { return add(f, o.neg(f)); }

MultiPoly MultiPoly::scale(const FieldSpec& f, const mpq_class& c) const {
    mpq_class k = reduce_coef(f, c);
    if (k == 0) return {};
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = reduce_coef(f, t.second * k);
    return r;
}

MultiPoly MultiPoly::mul(const FieldSpec& f, const MultiPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (o.is_constant()) return scale(f, o.terms_[0].second);
    if (is_constant()) return o.scale(f, terms_[0].second);
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) out.push_back({mono_mul(a.first, b.first), a.second * b.second});
    return make_poly(f, std::move(out));
}

MultiPoly MultiPoly::mul_monomial(Monomial m) const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.first = mono_mul(t.first, m);
    return r;
}

MultiPoly MultiPoly::div_monomial(Monomial m) const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) {
        if (!mono_divides(m, t.first)) throw Error("monomial does not divide polynomial");
        t.first = mono_div(t.first, m);
    }
    return r;
}

namespace {

std::string coef_string(const mpq_class& c) { return c.get_str(); }

std::string mono_string(const FieldSpec& f, Monomial m) {
    std::string s;
    for (std::size_t v = 0; v < f.params.size(); ++v) {
        unsigned e = mono_exp(m, v);
        if (!e) continue;
        if (!s.empty()) s += "*";
        s += f.params[v];
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace

std::string MultiPoly::to_string(const FieldSpec& f) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        mpq_class c = terms_[i].second;
        bool neg = c < 0;
        if (neg) c = -c;
        std::string m = mono_string(f, terms_[i].first);
        std::string body;
        if (m.empty())
            body = coef_string(c);
        else if (c == 1)
            body = m;
        else
            body = coef_string(c) + "*" + m;
        if (i == 0)
            s += neg ? "-" + body : body;
        else
            s += (neg ? " - " : " + ") + body;
    }
    return s;
}

Scalar::Scalar(FieldPtr f, long v) : Scalar(std::move(f), mpq_class(v)) {}

Scalar::Scalar(FieldPtr f, const mpq_class& v) : field_(std::move(f)) {
    num_ = MultiPoly::constant(*field_, v);
    den_ = MultiPoly::constant(*field_, 1);
}

Scalar::Scalar(FieldPtr f, MultiPoly num, MultiPoly den) : field_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

Scalar Scalar::param(FieldPtr f, const std::string& name) {
    int i = f->param_index(name);
    if (i < 0) throw Error("unknown parameter '" + name + "'");
    MultiPoly one = MultiPoly::constant(*f, 1);
    return Scalar(f, MultiPoly::variable(static_cast<std::size_t>(i)), one);
}

void Scalar::canonicalize() {
    const FieldSpec& f = *field_;
    if (den_.is_zero()) throw Error("zero denominator");
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(f, 1);
        return;
    }
    Monomial g = mono_gcd(num_.monomial_content(), den_.monomial_content());
    if (g) {
        num_ = num_.div_monomial(g);
        den_ = den_.div_monomial(g);
    }
    if (den_.is_constant()) {
        num_ = num_.scale(f, inverse_coef(f, den_.constant_value()));
        den_ = MultiPoly::constant(f, 1);
        return;
    }
    if (den_.leading_coef() != 1) {
        mpq_class k = inverse_coef(f, den_.leading_coef());
        num_ = num_.scale(f, k);
        den_ = den_.scale(f, k);
    }
    // num = k * den collapses to a constant
    if (num_.terms().size() == den_.terms().size()) {
        mpq_class k = num_.leading_coef();
        bool prop = true;
        for (std::size_t i = 0; i < num_.terms().size() && prop; ++i)
            prop = num_.terms()[i].first == den_.terms()[i].first &&
                   num_.terms()[i].second == reduce_coef(f, k * den_.terms()[i].second);
        if (prop) {
            num_ = MultiPoly::constant(f, k);
            den_ = MultiPoly::constant(f, 1);
        }
    }
}

void Scalar::check_same(const Scalar& o) const {
    if (field_ != o.field_ && !(*field_ == *o.field_))
        throw Error("field mismatch: " + field_->describe() + " vs " + o.field_->describe());
}

bool Scalar::is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value() == 1; }

mpq_class Scalar::constant_value() const {
    if (!is_constant()) throw Error("scalar " + to_string() + " is not constant");
    return num_.constant_value();
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    const FieldSpec& f = *field_;
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (is_constant() && o.is_constant()) return Scalar(field_, reduce_coef(f, num_.constant_value() + o.num_.constant_value()));
    if (den_ == o.den_) return Scalar(field_, num_.add(f, o.num_), den_);
    if (den_.is_monomial() && o.den_.is_monomial()) {
        Monomial a = den_.terms()[0].first, b = o.den_.terms()[0].first;
        Monomial l = mono_lcm(a, b);
        MultiPoly n = num_.mul_monomial(mono_div(l, a)).add(f, o.num_.mul_monomial(mono_div(l, b)));
        return Scalar(field_, std::move(n), make_poly(f, {{l, mpq_class(1)}}));
    }
    return Scalar(field_, num_.mul(f, o.den_).add(f, o.num_.mul(f, den_)), den_.mul(f, o.den_));
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = num_.neg(*field_);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    const FieldSpec& f = *field_;
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    if (is_constant() && o.is_constant()) return Scalar(field_, reduce_coef(f, constant_value() * o.constant_value()));
    return Scalar(field_, num_.mul(f, o.num_), den_.mul(f, o.den_));
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error("inverse of zero");
    return Scalar(field_, den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    return *this * o.inv();
}

Scalar Scalar::pow(unsigned e) const {
    Scalar r(field_, 1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    if (den_ == o.den_ || (is_constant() && o.is_constant())) return num_ == o.num_;
    const FieldSpec& f = *field_;
    return num_.mul(f, o.den_) == o.num_.mul(f, den_);
}

namespace {

bool needs_den_parens(const FieldSpec& f, const MultiPoly& d) {
    if (!d.is_monomial() || d.leading_coef() != 1) return true;
    Monomial m = d.terms()[0].first;
    int vars = 0;
    for (std::size_t v = 0; v < f.params.size(); ++v) vars += mono_exp(m, v) ? 1 : 0;
    return vars > 1;
}

}  // namespace

std::string Scalar::to_string() const {
    const FieldSpec& f = *field_;
    std::string n = num_.to_string(f);
    if (den_.is_constant()) return n;
    if (num_.terms().size() > 1 || (num_.terms().size() == 1 && num_.terms()[0].second < 0 && num_.terms()[0].first != 0) ||
        n.find('/') != std::string::npos)
        n = "(" + n + ")";
    std::string d = den_.to_string(f);
    if (needs_den_parens(f, den_)) d = "(" + d + ")";
    return n + "/" + d;
}

Scalar sign_scalar(const FieldPtr& f, unsigned parity_exponent) { return Scalar(f, (parity_exponent & 1u) ? -1 : 1); }

namespace {

Scalar eval_poly(const MultiPoly& p, const FieldSpec& src, const std::vector<Scalar>& vals, const FieldPtr& target) {
    Scalar r(target, 0);
    for (const auto& [m, c] : p.terms()) {
        Scalar t(target, c);
        for (std::size_t v = 0; v < src.params.size(); ++v) {
            unsigned e = mono_exp(m, v);
            if (e) t *= vals[v].pow(e);
        }
        r += t;
    }
    return r;
}

}  // namespace

Scalar substitute(const Scalar& x, const std::map<std::string, Scalar>& values, const FieldPtr& target) {
    const FieldSpec& src = *x.field();
    if (src.modulus != target->modulus) throw Error("substitution changes the base field");
    Monomial used = 0;
    for (const auto& t : x.num().terms()) used = mono_lcm(used, t.first);
    for (const auto& t : x.den().terms()) used = mono_lcm(used, t.first);
    std::vector<Scalar> vals;
    vals.reserve(src.params.size());
    for (std::size_t v = 0; v < src.params.size(); ++v) {
        const std::string& name = src.params[v];
        auto it = values.find(name);
        if (it != values.end()) {
            if (it->second.field() != target && !(*it->second.field() == *target))
                throw Error("binding for '" + name + "' is in the wrong field");
            vals.push_back(it->second);
        } else if (target->param_index(name) >= 0) {
            vals.push_back(Scalar::param(target, name));
        } else if (mono_exp(used, v)) {
            throw Error("unbound variable '" + name + "'");
        } else {
            vals.push_back(Scalar(target, 0));
        }
    }
    Scalar d = eval_poly(x.den(), src, vals, target);
    if (d.is_zero()) throw Error("denominator " + x.den().to_string(src) + " vanishes under binding");
    return eval_poly(x.num(), src, vals, target) / d;
}

Scalar substitute_params(const Scalar& x, const std::map<std::string, mpq_class>& bindings) {
    FieldPtr target = base_field_of(x.field());
    std::map<std::string, Scalar> vals;
    for (const auto& [k, v] : bindings) vals.emplace(k, Scalar(target, v));
    return substitute(x, vals, target);
}

Scalar embed(const Scalar& x, const FieldPtr& target) {
    if (x.field() == target || *x.field() == *target) return Scalar(target, x.num(), x.den());
    return substitute(x, {}, target);
}

}  // namespace salg
