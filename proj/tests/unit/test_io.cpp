#include "salg/corpus.hpp"
#include "salg/identities.hpp"
#include "salg/io.hpp"

#include <doctest.h>

using namespace salg;

namespace {

const char* kSmall = R"(# comment
[algebra]
name = tiny
field = Q
params = a, b
even = x
odd = y

[product]
x*x = a*x
x*y = y / b
)";

}  // namespace

TEST_CASE("expression parsing") {
    auto K = make_field(0, {"a", "b"});
    auto a = Scalar::param(K, "a"), b = Scalar::param(K, "b");
    CHECK(parse_expression("-a/b + 1", K) == (b - a) / b);
    CHECK(parse_expression("a^2", K) == a * a);
    CHECK(parse_expression("-a^2", K) == -(a * a));
    CHECK(parse_expression("1/2", make_field(3)) == Scalar(make_field(3), 2));
    CHECK(parse_expression("  ( a + b ) * 2 ", K) == Scalar(K, 2) * (a + b));
}

TEST_CASE("expression errors are located") {
    auto K = make_field(0, {"a"});
    auto col = [&](const char* text) {
        try {
            parse_expression(text, K);
        } catch (const ParseError& e) {
            return e.column();
        }
        return -1;
    };
    CHECK(col("(a + 1") == 7);
    CHECK(col("a + zz") == 5);
    CHECK(col("1/0") == 3);
    CHECK(col("a^-1") == 3);
    CHECK(col("a + ") == 5);
    CHECK(col("") == 1);
}

TEST_CASE("documents parse and evaluate") {
    AlgebraDocument d = parse_algebra_file(kSmall);
    CHECK(d.name == "tiny");
    EvaluatedDocument ev = evaluate_document(d);
    auto K = ev.field;
    CHECK(ev.algebra.product(0, 1) == Vector::unit(K, 2, 1) * Scalar::param(K, "b").inv());
    CHECK(ev.algebra.product(1, 1).is_zero());
}

TEST_CASE("undeclared names are reported with their position") {
    std::string text = std::string(kSmall) + "y*y = q*x\n";
    try {
        parse_algebra_file(text);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 12);
        CHECK(e.column() == 7);
        CHECK(std::string(e.what()).find("q") != std::string::npos);
    }
    std::string key = std::string(kSmall) + "y*w = x\n";
    CHECK_THROWS_AS(parse_algebra_file(key), ParseError);
}

TEST_CASE("ungraded products are rejected") {
    std::string text = std::string(kSmall) + "y*y = y\n";
    CHECK_THROWS_AS(parse_algebra_file(text), ParseError);
}

TEST_CASE("an empty product section is the zero algebra") {
    AlgebraDocument d = parse_algebra_file("[algebra]\nname = z\nfield = GF(5)\neven = u\nodd = v\n[product]\n");
    EvaluatedDocument ev = evaluate_document(d);
    for (const auto& v : ev.algebra.table) CHECK(v.is_zero());
    CHECK(run_check("alternative", ev.hom).holds);
}

TEST_CASE("report serialization") {
    HomSuperAlgebra h = build("m3-3-1", {}, "alpha1").hom;
    IdentityReport ok = run_check("hom-malcev", h);
    CHECK(serialize_report(ok) == R"({"identity":"hom-malcev","holds":true,"tuples_checked":256,"counterexamples":[]})");
    IdentityReport bad = run_check("hom-lie", h, 3);
    std::string s = serialize_report(bad);
    CHECK(s == serialize_report(run_check("hom-lie", h, 3)));
    IdentityReport back = parse_report(s, h.basis(), h.field());
    CHECK(serialize_report(back) == s);
    CHECK(back.counterexamples.size() == bad.counterexamples.size());
    for (std::size_t i = 0; i < back.counterexamples.size(); ++i) {
        CHECK(back.counterexamples[i].tuple == bad.counterexamples[i].tuple);
        CHECK(back.counterexamples[i].residual == bad.counterexamples[i].residual);
    }
}

TEST_CASE("shipped files round-trip and match the independent transcription") {
    for (const auto& id : corpus_ids()) {
        CAPTURE(id);
        CorpusEntry e = load_entry(id);
        AlgebraDocument again = parse_algebra_file(serialize_document(e.doc));
        CHECK(same_document(again, e.doc));
        EvaluatedDocument ev = evaluate_document(e.doc), tx = builtin_entry(id);
        CHECK(*ev.field == *tx.field);
        CHECK(ev.algebra == tx.algebra);
        for (const auto& [name, m] : tx.maps) CHECK(ev.maps.at(name) == m);
    }
}

TEST_CASE("computed algebras serialize to parseable documents") {
    HomSuperAlgebra h = build("m3-3-1", {}, "alpha1").hom;
    AlgebraDocument d = parse_algebra_file(serialize_document(document_from(h, "m3-alpha1")));
    EvaluatedDocument ev = evaluate_document(d);
    CHECK(ev.hom.algebra == h.algebra);
    CHECK(ev.hom.alpha == h.alpha);
}
