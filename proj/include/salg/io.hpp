#pragma once

#include "salg/superalg.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace salg {

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& detail() const { return detail_; }

private:
    int line_;
    int column_;
    std::string detail_;
};

// ---- expressions ---------------------------------------------------------

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum Kind { Num, Ident, Neg, Add, Sub, Mul, Div, Pow };
    Kind kind;
    mpz_class num;       // Num
    std::string name;    // Ident
    unsigned exp = 0;    // Pow
    ExprPtr a, b;        // operands
    int line = 1, column = 1;
};

bool same_expr(const Expr& x, const Expr& y);

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | factor
//   factor := atom ('^' uint)?
//   atom   := uint | identifier | '(' expr ')'
// Positions in errors are offset by (line, column) of the first character.
ExprPtr parse_expr(const std::string& text, int line = 1, int column = 1);
std::string render_expr(const Expr& e);

// Names other than field parameters and basis elements (e.g. `let` macros).
using Env = std::map<std::string, Scalar>;

Scalar eval_scalar(const Expr& e, const FieldPtr& f, const Env& env = {});
Vector eval_vector(const Expr& e, const FieldPtr& f, const Basis& b, const Env& env = {});

Scalar parse_expression(const std::string& text, const FieldPtr& f);
Vector parse_vector(const std::string& text, const FieldPtr& f, const Basis& b, const Env& env = {});

std::string render_vector(const Vector& v, const std::vector<std::string>& names);

// ---- algebra documents ---------------------------------------------------

struct ProductEntry {
    std::string left, right;
    ExprPtr value;
};

struct MapDoc {
    std::string name;
    std::vector<std::vector<ExprPtr>> columns;  // columns[j] = image of basis j, in basis order
    bool hypothesis = true;                     // false: `hypothesis = none`
};

struct ConstraintDoc {
    ExprPtr lhs;
    std::string relation;  // "=" or "!="
    ExprPtr rhs;
};

struct AlgebraDocument {
    std::string name;
    unsigned long modulus = 0;  // 0 = Q
    std::vector<std::string> params;
    std::vector<std::string> even, odd;
    std::string twist;  // empty = identity
    std::vector<ConstraintDoc> constraints;
    std::vector<std::pair<std::string, ExprPtr>> defaults;
    std::vector<std::string> notes;
    std::vector<ProductEntry> products;
    std::vector<MapDoc> maps;
    std::vector<std::pair<std::string, std::string>> claims;  // raw [claims] lines in order

    Basis basis() const;
    FieldPtr field() const;
    const MapDoc* find_map(const std::string& name) const;
};

bool same_document(const AlgebraDocument& x, const AlgebraDocument& y);

AlgebraDocument parse_algebra_file(const std::string& text);
std::string serialize_document(const AlgebraDocument& d);

// A document for a computed Hom-superalgebra; alpha is written as map
// `map_name` and declared the twist unless it is the identity.
AlgebraDocument document_from(const HomSuperAlgebra& h, const std::string& name,
                              const std::string& map_name = "alpha");

// Symbolic evaluation over the document's field (parameters stay free).
struct EvaluatedDocument {
    FieldPtr field;
    SuperAlgebra algebra;
    std::map<std::string, LinearMap> maps;
    HomSuperAlgebra hom;  // with the declared twist, or the identity
};
EvaluatedDocument evaluate_document(const AlgebraDocument& d);

// ---- reports -------------------------------------------------------------

std::string serialize_report(const IdentityReport& r);
IdentityReport parse_report(const std::string& text, const Basis& b, const FieldPtr& f);

}  // namespace salg
