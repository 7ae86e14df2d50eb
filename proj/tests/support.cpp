#include "support.hpp"

#include <stdexcept>

namespace support {

using namespace salg;

oracle::Table to_oracle(const HomSuperAlgebra& h) {
    oracle::Table t;
    t.n = h.size();
    t.p = h.field()->modulus;
    for (auto p : h.basis().parities) t.parity.push_back(static_cast<int>(p));
    auto num = [&](const Scalar& s) {
        if (!s.is_constant()) throw std::invalid_argument("non-constant entry " + s.to_string());
        return oracle::Num(s.constant_value(), t.p);
    };
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j)
            for (std::size_t k = 0; k < t.n; ++k) t.t.push_back(num(h.algebra.product(i, j).c[k]));
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j) t.a.push_back(num(h.alpha.at(i, j)));
    return t;
}

HomSuperAlgebra at_point(const HomSuperAlgebra& h, const std::map<std::string, mpq_class>& point) {
    FieldPtr target = base_field_of(h.field());
    auto sub = [&](const Scalar& x) { return substitute_params(x, point); };
    HomSuperAlgebra r;
    r.algebra = SuperAlgebra{h.basis(), target, {}};
    for (const auto& v : h.algebra.table) {
        Vector w{target, {}};
        for (const auto& c : v.c) w.c.push_back(sub(c));
        r.algebra.table.push_back(w);
    }
    r.alpha = LinearMap{target, h.size(), {}};
    for (const auto& c : h.alpha.m) r.alpha.m.push_back(sub(c));
    return r;
}

std::map<std::string, mpq_class> random_point(const HomSuperAlgebra& h, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::map<std::string, mpq_class> p;
        for (const auto& name : h.field()->params) {
            mpq_class v;
            do {
                v = mpq_class(num(rng), den(rng));
                v.canonicalize();
            } while (v == 0);
            p[name] = v;
        }
        try {
            at_point(h, p);
            return p;
        } catch (const std::exception&) {
            // a denominator vanished; draw again
        }
    }
    throw std::runtime_error("no admissible random point");
}

bool oracle_holds(const std::string& name, const HomSuperAlgebra& h, std::mt19937& rng, int points) {
    if (h.field()->params.empty()) return oracle::check(name, to_oracle(h)).holds;
    for (int i = 0; i < points; ++i)
        if (!oracle::check(name, to_oracle(at_point(h, random_point(h, rng)))).holds) return false;
    return true;
}

Basis random_basis(std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> odd(0, n);
    std::size_t k = odd(rng);
    std::vector<std::string> even, oddn;
    for (std::size_t i = 0; i < n - k; ++i) even.push_back("e" + std::to_string(i + 1));
    for (std::size_t i = 0; i < k; ++i) oddn.push_back("o" + std::to_string(i + 1));
    return make_basis(even, oddn);
}

namespace {

Scalar coef(const RandomSpec& s, const FieldPtr& f, std::mt19937& rng) {
    std::bernoulli_distribution on(s.density);
    std::uniform_int_distribution<int> c(-s.range, s.range);
    return on(rng) ? Scalar(f, c(rng)) : Scalar(f, 0);
}

}  // namespace

SuperAlgebra random_graded(const RandomSpec& s, std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> dim(1, s.max_dim);
    FieldPtr f = make_field(s.modulus);
    Basis b = random_basis(dim(rng), rng);
    SuperAlgebra a = zero_algebra(b, f);
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (b.parities[k] == ((b.parities[i] + b.parities[j]) & 1u)) a.product(i, j).c[k] = coef(s, f, rng);
    return a;
}

LinearMap random_even_map(const SuperAlgebra& a, const RandomSpec& s, std::mt19937& rng) {
    const std::size_t n = a.size();
    LinearMap m = LinearMap::zero(a.field, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.basis.parities[i] == a.basis.parities[j]) m.at(i, j) = coef(s, a.field, rng);
    return m;
}

HomSuperAlgebra random_multiplicative_skew(const RandomSpec& s, std::mt19937& rng) {
    // Weighted grading: e_i e_j may only involve e_k with w_k = w_i + w_j, so
    // diag(lambda^{w_i}) is an automorphism for every lambda.
    std::uniform_int_distribution<std::size_t> dim(2, s.max_dim);
    std::uniform_int_distribution<int> weight(0, 3);
    FieldPtr f = make_field(s.modulus);
    Basis b = random_basis(dim(rng), rng);
    const std::size_t n = b.size();
    std::vector<int> w(n);
    for (auto& x : w) x = weight(rng);
    SuperAlgebra a = zero_algebra(b, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (b.parities[k] != ((b.parities[i] + b.parities[j]) & 1u) || w[k] != w[i] + w[j]) continue;
                if (i == j && b.parities[i] == 0) continue;  // [x, x] = 0 for even x
                Scalar c = coef(s, f, rng);
                a.product(i, j).c[k] = c;
                // [y, x] = -(-1)^{|x||y|} [x, y]
                if (i != j) a.product(j, i).c[k] = (b.parities[i] & b.parities[j]) ? c : -c;
            }
    static const long lambdas[][2] = {{2, 1}, {-1, 1}, {1, 2}, {3, 1}, {-2, 3}};
    std::uniform_int_distribution<std::size_t> pick(0, 4);
    const long* l;
    do {
        l = lambdas[pick(rng)];  // skip values that vanish or are undefined mod p
    } while (s.modulus && (l[0] % static_cast<long>(s.modulus) == 0 || l[1] % static_cast<long>(s.modulus) == 0));
    Scalar lambda = Scalar(f, l[0]) / Scalar(f, l[1]);
    LinearMap beta = LinearMap::zero(f, n);
    for (std::size_t i = 0; i < n; ++i) beta.at(i, i) = lambda.pow(static_cast<unsigned>(w[i]));
    return yau_twist(with_identity(a), beta);
}

std::string render_tuple(const Basis& b, const std::vector<std::size_t>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + b.names[t[i]];
    return s + ")";
}

}  // namespace support

namespace support {

namespace {

std::string pick(const std::vector<std::string>& v, std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
    return v[d(rng)];
}

// Random coefficient expression over `params`; divisors are nonzero literals,
// single parameters or parameter + literal, all nonzero in the fraction field.
std::string expr(const std::vector<std::string>& params, std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 7 : 2), lit(1, 9);
    auto atom = [&]() -> std::string {
        if (!params.empty() && std::bernoulli_distribution(0.5)(rng)) return pick(params, rng);
        return std::to_string(lit(rng));
    };
    auto divisor = [&]() -> std::string {
        if (params.empty() || std::bernoulli_distribution(0.4)(rng)) return std::to_string(lit(rng));
        if (std::bernoulli_distribution(0.5)(rng)) return pick(params, rng);
        return "(" + pick(params, rng) + " + " + std::to_string(lit(rng)) + ")";
    };
    switch (kind(rng)) {
        case 0:
        case 1: return atom();
        case 2: return std::to_string(lit(rng)) + "/" + std::to_string(lit(rng));
        case 3: return expr(params, rng, depth - 1) + " + " + expr(params, rng, depth - 1);
        case 4: return expr(params, rng, depth - 1) + " - " + expr(params, rng, depth - 1);
        case 5: return "(" + expr(params, rng, depth - 1) + ")*" + atom();
        case 6: return "(" + expr(params, rng, depth - 1) + ")/" + divisor();
        default: return "-" + atom() + "^" + std::to_string(std::uniform_int_distribution<int>(0, 3)(rng));
    }
}

}  // namespace

std::string random_document(std::mt19937& rng) {
    static const std::vector<std::string> pool = {"a", "b", "c", "s", "t", "beta"};
    static const std::vector<unsigned long> primes = {0, 0, 3, 5, 7};
    std::uniform_int_distribution<int> np(0, 3), ne(0, 3), no(0, 2), coin(0, 1);
    std::vector<std::string> params;
    for (int i = 0, k = np(rng); i < k; ++i) params.push_back(pool[static_cast<std::size_t>(i)]);
    unsigned long p = primes[std::uniform_int_distribution<std::size_t>(0, primes.size() - 1)(rng)];
    int n_even = ne(rng), n_odd = no(rng);
    if (n_even + n_odd == 0) n_even = 1;
    std::vector<std::string> even, odd, all;
    for (int i = 0; i < n_even; ++i) even.push_back("e" + std::to_string(i + 1));
    for (int i = 0; i < n_odd; ++i) odd.push_back("f" + std::to_string(i + 1));
    all = even;
    all.insert(all.end(), odd.begin(), odd.end());
    auto parity = [&](const std::string& x) { return x[0] == 'f' ? 1 : 0; };
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
        return s;
    };
    // Expressions over GF(p) must not divide by literals that vanish mod p,
    // so prime-field documents keep to division-free coefficients.
    auto coef = [&](int depth) {
        for (;;) {
            std::string e = expr(params, rng, depth);
            if (p == 0 || e.find('/') == std::string::npos) return e;
        }
    };

    std::string t = "# generated\n[algebra]\nname = doc" + std::to_string(rng() % 100000) + "\n";
    t += "field = " + (p ? "GF(" + std::to_string(p) + ")" : std::string("Q")) + "\n";
    if (!params.empty()) t += "params = " + join(params) + "\n";
    if (!even.empty()) t += "even = " + join(even) + "\n";
    if (!odd.empty()) t += "odd = " + join(odd) + "\n";
    if (!params.empty() && coin(rng)) t += "constraint = " + params[0] + " != 0\n";
    if (!params.empty() && coin(rng)) t += "defaults = " + params[0] + "=" + std::to_string(1 + rng() % 4) + "\n";
    if (coin(rng)) t += "note = random note " + std::to_string(rng() % 1000) + "\n";
    std::string maps;
    bool with_map = coin(rng);
    if (with_map && coin(rng)) t += "twist = m\n";
    t += "\n[product]\n";
    for (const auto& x : all)
        for (const auto& y : all) {
            if (!coin(rng)) continue;
            std::string v;
            for (const auto& z : all) {
                if (parity(z) != ((parity(x) + parity(y)) & 1) || !coin(rng)) continue;
                v += (v.empty() ? "" : " + ") + std::string("(") + coef(1) + ")*" + z;
            }
            if (!v.empty()) t += x + "*" + y + " = " + v + "\n";
        }
    if (with_map) {
        t += "\n[map m]\n";
        for (const auto& x : all) {
            std::string col;
            for (const auto& z : all) {
                std::string e = parity(z) == parity(x) && coin(rng) ? coef(1) : "0";
                col += (col.empty() ? "" : ", ") + e;
            }
            t += "map.m." + x + " = " + col + "\n";
        }
    }
    if (coin(rng)) t += "\n[claims]\nc1.on = base\nc1.check = flexible\nc1.expect = holds\n";
    return t;
}

Mutant malform(const std::string& valid, std::mt19937& rng) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char ch : valid) {
            if (ch == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) lines.push_back(cur);
    }
    auto join = [&] {
        std::string s;
        for (const auto& l : lines) s += l + "\n";
        return s;
    };
    std::size_t product_at = 0, name_at = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i] == "[product]") product_at = i;
        if (lines[i].rfind("name = ", 0) == 0) name_at = i;
    }
    auto insert_after = [&](std::size_t i, const std::string& l) {
        lines.insert(lines.begin() + static_cast<long>(i) + 1, l);
        return static_cast<int>(i) + 2;
    };
    static const std::vector<std::string> kinds = {
        "undeclared-name", "unbalanced", "bad-exponent", "unknown-section", "missing-equals", "bad-basis",
        "zero-division", "unknown-key", "bad-field", "duplicate-key", "control-char", "trailing-op",
        "truncated-header", "key-outside"};
    Mutant m;
    m.kind = pick(kinds, rng);
    if (m.kind == "undeclared-name") m.line = insert_after(product_at, "e1*e1 = zq9*e1");
    else if (m.kind == "unbalanced") m.line = insert_after(product_at, "e1*e1 = (1 + 2*e1");
    else if (m.kind == "bad-exponent") m.line = insert_after(product_at, "e1*e1 = 2^x*e1");
    else if (m.kind == "unknown-section") m.line = insert_after(product_at, "[prodcut]");
    else if (m.kind == "missing-equals") m.line = insert_after(product_at, "e1*e1 e1");
    else if (m.kind == "bad-basis") m.line = insert_after(product_at, "e1*nope = e1");
    else if (m.kind == "zero-division") m.line = insert_after(product_at, "e1*e1 = e1/0");
    else if (m.kind == "unknown-key") m.line = insert_after(name_at, "colour = blue");
    else if (m.kind == "bad-field") m.line = insert_after(name_at, "field = GF(6)");
    else if (m.kind == "duplicate-key") m.line = insert_after(name_at, lines[name_at]);
    else if (m.kind == "control-char") m.line = insert_after(name_at, std::string("note = bell\x07"));
    else if (m.kind == "trailing-op") m.line = insert_after(product_at, "e1*e1 = 2*e1 +");
    else if (m.kind == "truncated-header") m.line = insert_after(product_at, "[map q");
    else {
        lines.insert(lines.begin(), "name = early");
        m.line = 1;
    }
    // Documents without e1 turn the product mutations into undeclared-basis errors on the same line.
    m.text = join();
    return m;
}

}  // namespace support
