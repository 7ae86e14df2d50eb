// salg: command-line front end for the superalgebra checkers.
//
// Exit status: 0 all requested checks hold, 1 some check fails,
// 2 bad input (unparsable file, unknown checker, violated constraint).

#include "salg/corpus.hpp"
#include "salg/identities.hpp"
#include "salg/io.hpp"
#include "salg/maps.hpp"
#include "salg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace salg;
using ojson = nlohmann::ordered_json;

namespace {

struct Options {
    std::string corpus, file, map, out;
    std::vector<std::string> identities, sets;
    std::size_t cap = kDefaultCap;
    bool json = false;
    unsigned steps = 1;  // derive
};

struct UsageError : Error {
    using Error::Error;
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + o.out + "'");
    f << text;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read '" + path + "'");
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

Bindings bindings_of(const Options& o) {
    Bindings b;
    for (const auto& s : o.sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw UsageError("--set expects name=value, got '" + s + "'");
        b = merge_bindings(b, parse_bindings(s));
    }
    return b;
}

CorpusEntry input_of(const Options& o) {
    if (o.corpus.empty() == o.file.empty()) throw UsageError("give exactly one of --corpus or --file");
    if (!o.corpus.empty()) return load_entry(o.corpus);
    CorpusEntry e = entry_from_document(parse_algebra_file(slurp(o.file)));
    e.id = e.doc.name;
    return e;
}

struct Subject {
    CorpusEntry entry;
    Instance inst;
    HomSuperAlgebra hom;
    std::string label;
};

// The document's own twist, then the --map twist on top of it.
Subject subject_of(const Options& o) {
    Subject s;
    s.entry = input_of(o);
    Bindings b = bindings_of(o);
    s.inst = instantiate(s.entry.doc, b, s.entry.lets);
    const auto& doc = s.entry.doc;
    s.hom = doc.twist.empty() ? with_identity(s.inst.algebra)
                              : HomSuperAlgebra{s.inst.algebra, s.inst.maps.at(doc.twist), Tri::Unchecked};
    s.label = s.entry.id;
    if (!o.map.empty()) {
        auto it = s.inst.maps.find(o.map);
        if (it == s.inst.maps.end()) throw UsageError("unknown map '" + o.map + "'");
        s.hom = s.inst.hypothesis.at(o.map) ? yau_twist(s.hom, it->second) : compose_twist(s.hom, it->second);
        s.label += " twisted by " + o.map;
    }
    if (!b.empty()) s.label += " [" + render_bindings(b) + "]";
    return s;
}

std::string tuple_text(const std::vector<std::string>& names, const std::vector<std::size_t>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + names[t[i]];
    return s + ")";
}

std::string report_lines(const IdentityReport& r) {
    std::string s = r.identity + ": ";
    if (r.holds) return s + "holds on " + std::to_string(r.tuples_checked) + " tuples\n";
    s += "fails";
    if (!r.precondition.empty()) s += " (" + r.precondition + " precondition)";
    s += " on " + std::to_string(r.failures) + " of " + std::to_string(r.tuples_checked) + " tuples\n";
    for (const auto& c : r.counterexamples)
        s += "  " + tuple_text(r.names, c.tuple) + ": " + render_vector(c.residual, r.names) + "\n";
    return s;
}

int cmd_validate(const Options& o) {
    Subject s = subject_of(o);
    IdentityReport g = validate(s.hom.algebra);
    std::vector<IdentityReport> reports{g};
    for (const auto& m : s.entry.doc.maps) {
        if (!m.hypothesis) continue;
        IdentityReport r = is_even(s.inst.maps.at(m.name), s.inst.algebra.basis);
        r.identity = "even " + m.name;
        reports.push_back(r);
    }
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.holds;
    if (o.json) {
        ojson j{{"input", s.label}, {"valid", ok}, {"reports", ojson::array()}};
        for (const auto& r : reports) j["reports"].push_back(ojson::parse(serialize_report(r)));
        emit(o, j.dump() + "\n");
    } else {
        std::string t = s.label + ": " + (ok ? "valid" : "invalid") + "\n";
        for (const auto& r : reports) t += report_lines(r);
        emit(o, t);
    }
    return ok ? 0 : 1;
}

int cmd_check(const Options& o) {
    if (o.identities.empty()) throw UsageError("check needs at least one --identity");
    for (const auto& id : o.identities)
        if (!is_checker(id)) throw UsageError("unknown checker '" + id + "'");
    Subject s = subject_of(o);
    std::vector<IdentityReport> reports;
    bool ok = true;
    for (const auto& id : o.identities) {
        reports.push_back(run_check(id, s.hom, o.cap));
        ok = ok && reports.back().holds;
    }
    if (o.json) {
        ojson j{{"input", s.label}, {"holds", ok}, {"reports", ojson::array()}};
        for (const auto& r : reports) j["reports"].push_back(ojson::parse(serialize_report(r)));
        emit(o, j.dump() + "\n");
    } else {
        std::string t = s.label + "\n";
        for (const auto& r : reports) t += report_lines(r);
        emit(o, t);
    }
    return ok ? 0 : 1;
}

void emit_algebra(const Options& o, const HomSuperAlgebra& h, const std::string& name) {
    if (!o.json) {
        emit(o, serialize_document(document_from(h, name)));
        return;
    }
    const auto& n = h.basis().names;
    ojson j{{"name", name}, {"field", h.field()->describe()}, {"basis", ojson::array()}, {"products", ojson::object()}};
    for (std::size_t i = 0; i < n.size(); ++i)
        j["basis"].push_back({{"name", n[i]}, {"parity", h.basis().parities[i]}});
    for (std::size_t a = 0; a < n.size(); ++a)
        for (std::size_t b = 0; b < n.size(); ++b)
            if (!h.algebra.product(a, b).is_zero()) j["products"][n[a] + "*" + n[b]] = render_vector(h.algebra.product(a, b), n);
    ojson alpha = ojson::object();
    for (std::size_t b = 0; b < n.size(); ++b) alpha[n[b]] = render_vector(h.alpha.column(b), n);
    j["alpha"] = alpha;
    emit(o, j.dump() + "\n");
}

int cmd_construct(const std::string& what, const Options& o) {
    if (what == "twist" && o.map.empty()) throw UsageError("twist needs --map");
    Subject s = subject_of(o);
    std::string name = s.entry.doc.name;
    HomSuperAlgebra h = s.hom;
    if (!o.map.empty()) name += "-" + o.map;
    if (what == "derive") {
        h = derived(with_multiplicativity(h), o.steps);
        name += "-derived-" + std::to_string(o.steps);
    } else if (what == "commutator") {
        h = commutator_algebra(h);
        name += "-minus";
    } else if (what == "plus") {
        h = plus_algebra(h);
        name += "-plus";
    }
    emit_algebra(o, h, name);
    return 0;
}

int cmd_corpus(const Options& o) {
    if (!o.file.empty()) throw UsageError("corpus takes --corpus, not --file");
    if (o.corpus.empty()) {
        std::string t;
        ojson j = ojson::array();
        for (const auto& id : corpus_ids()) {
            CorpusEntry e = load_entry(id);
            std::string params;
            for (const auto& p : e.doc.params) params += (params.empty() ? "" : ", ") + p;
            t += id + "  " + e.doc.field()->describe() + "  dim " + std::to_string(e.doc.basis().size()) + "  " +
                 std::to_string(e.claims.size()) + " claims\n";
            j.push_back({{"id", id}, {"field", e.doc.field()->describe()}, {"dimension", e.doc.basis().size()},
                         {"claims", e.claims.size()}});
        }
        emit(o, o.json ? j.dump() + "\n" : t);
        return 0;
    }
    CorpusEntry e = load_entry(o.corpus);
    if (o.json) {
        ojson j{{"id", e.id}, {"claims", ojson::array()}};
        for (const auto& c : e.claims) {
            ojson x{{"key", c.key}, {"on", c.on}, {"check", c.check}};
            if (!c.expect.empty()) x["expect"] = c.expect;
            if (!c.bind.empty()) x["bind"] = c.bind;
            if (!c.cite.empty()) x["cite"] = c.cite;
            j["claims"].push_back(x);
        }
        emit(o, j.dump() + "\n");
    } else {
        emit(o, serialize_document(e.doc));
    }
    return 0;
}

int cmd_verify(const Options& o) {
    auto rows = verify_paper();
    emit(o, o.json ? rows_json(rows) : render_rows(rows));
    return suite_passed(rows) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for Hom-superalgebra identities"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c) {
        c->add_option("--corpus", o.corpus, "corpus entry id");
        c->add_option("--file", o.file, ".salg file");
        c->add_option("--map", o.map, "twist by this map");
        c->add_option("--identity", o.identities, "checker name (repeatable)");
        c->add_option("--set", o.sets, "bind a parameter, name=value (repeatable)");
        c->add_option("--out", o.out, "write output here instead of stdout");
        c->add_option("--max-counterexamples", o.cap, "counterexamples kept per report");
        c->add_flag("--json", o.json, "machine-readable output");
        return c;
    };
    auto* validate_cmd = common(app.add_subcommand("validate", "parse and check grading"));
    auto* check_cmd = common(app.add_subcommand("check", "run checkers"));
    auto* twist_cmd = common(app.add_subcommand("twist", "print the Yau twist by --map"));
    auto* derive_cmd = common(app.add_subcommand("derive", "print the n-th derived Hom-superalgebra"));
    derive_cmd->add_option("n", o.steps, "derivation depth (default 1)");
    auto* comm_cmd = common(app.add_subcommand("commutator", "print the super-commutator algebra"));
    auto* plus_cmd = common(app.add_subcommand("plus", "print the plus algebra"));
    auto* corpus_cmd = common(app.add_subcommand("corpus", "list the corpus or print one entry"));
    auto* verify_cmd = common(app.add_subcommand("verify-paper", "run every corpus claim"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(o);
        if (check_cmd->parsed()) return cmd_check(o);
        if (twist_cmd->parsed()) return cmd_construct("twist", o);
        if (derive_cmd->parsed()) return cmd_construct("derive", o);
        if (comm_cmd->parsed()) return cmd_construct("commutator", o);
        if (plus_cmd->parsed()) return cmd_construct("plus", o);
        if (corpus_cmd->parsed()) return cmd_corpus(o);
        if (verify_cmd->parsed()) return cmd_verify(o);
    } catch (const std::exception& e) {
        std::cerr << "salg: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
