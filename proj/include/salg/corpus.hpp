#pragma once

#include "salg/io.hpp"
#include "salg/superalg.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace salg {

// One machine-readable statement attached to a corpus entry.
//
//   on      base | twist <map> | product <map>, optionally followed by
//           `commutator` or `plus`
//   check   a checker name, `endomorphism <map>`, `even <map>` or `table`
//   expect  holds | fails            (verdict claims)
//   value   claimed vector at `at`   (value claims; side = residual|lhs|rhs)
//   table   "x*y: expr; ..."         (printed product tables)
struct Claim {
    enum class Kind { Verdict, Value, Table };

    std::string key;
    std::string on = "base";
    std::string check;
    std::string expect;
    std::vector<std::string> at;
    std::string side = "residual";
    std::string value;
    std::string table;
    std::string zero_at;
    std::string bind;
    bool nonzero = false;
    std::string cite;

    Kind kind() const;
};

// Parameter bindings as (name, expression text); expressions may refer to
// parameters left free.
using Bindings = std::vector<std::pair<std::string, std::string>>;
Bindings parse_bindings(const std::string& text);
std::string render_bindings(const Bindings& b);
// Later entries override earlier ones with the same name.
Bindings merge_bindings(const Bindings& base, const Bindings& over);

struct CorpusEntry {
    std::string id;
    AlgebraDocument doc;
    std::vector<std::pair<std::string, std::string>> lets;  // `let name = expr`
    std::vector<Claim> claims;

    const Claim& claim(const std::string& key) const;
    Bindings defaults() const;
};

// Splits the raw [claims] lines of a document into lets and claims.
CorpusEntry entry_from_document(AlgebraDocument doc);

const std::vector<std::string>& corpus_ids();
std::string default_corpus_dir();
CorpusEntry load_entry(const std::string& id, const std::string& dir = default_corpus_dir());
CorpusEntry load_file(const std::string& path);

// The document with every parameter in `bindings` replaced and the
// remaining ones kept symbolic. Constraints are validated: `!=` always,
// `=` once every variable it mentions is bound.
struct Instance {
    FieldPtr field;
    SuperAlgebra algebra;
    std::map<std::string, LinearMap> maps;
    std::map<std::string, bool> hypothesis;
    Env lets;
    Bindings bindings;
    FieldPtr source_field;  // field before binding
    Env source_lets;
};
Instance instantiate(const AlgebraDocument& d, const Bindings& bindings,
                     const std::vector<std::pair<std::string, std::string>>& lets = {});

// Carries scalars from one field to a smaller one by binding parameters.
class Specializer {
public:
    Specializer(FieldPtr source, const Bindings& bindings);
    const FieldPtr& target() const { return target_; }
    Scalar operator()(const Scalar& x) const;
    Vector operator()(const Vector& v) const;
    LinearMap operator()(const LinearMap& f) const;
    SuperAlgebra operator()(const SuperAlgebra& a) const;

private:
    FieldPtr source_, target_;
    std::map<std::string, Scalar> values_;
};

// Builds the Hom-superalgebra named by a claim's `on` field. `twist` uses
// the verified construction unless the map is declared `hypothesis = none`.
HomSuperAlgebra construct(const Instance& inst, const std::string& on);

struct Built {
    Instance instance;
    HomSuperAlgebra hom;
    std::vector<Claim> claims;
};
// map empty: (A, mu, Id); otherwise the twist by that map.
Built build(const CorpusEntry& e, const Bindings& bindings, const std::string& map = "");
Built build(const std::string& id, const Bindings& bindings, const std::string& map = "");

// Parses printed vector text over the unbound parameters, then binds them,
// so claims may mention parameters their own binding fixes.
Vector parse_claimed(const std::string& text, const Instance& inst);

// The claimed vector of a value claim, in the instance's field. Never an oracle.
Vector claimed_value(const CorpusEntry& e, const std::string& key, const Instance& inst);
Vector claimed_value(const std::string& id, const std::string& key);

// Independent C++ transcription of each entry's table and maps (symbolic
// parameters), used to cross-check the shipped files.
EvaluatedDocument builtin_entry(const std::string& id);

}  // namespace salg
