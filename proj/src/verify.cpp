#include "salg/verify.hpp"

#include "salg/identities.hpp"
#include "salg/maps.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <sstream>

namespace salg {

namespace {

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> w;
    for (std::string x; in >> x;) w.push_back(x);
    return w;
}

std::string tuple_text(const std::vector<std::string>& names, const std::vector<std::size_t>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + names[t[i]];
    return s + ")";
}

std::vector<std::size_t> tuple_of(const Basis& b, const std::vector<std::string>& at) {
    std::vector<std::size_t> t;
    for (const auto& n : at) {
        int i = b.index_of(n);
        if (i < 0) throw Error("unknown basis element '" + n + "' in tuple");
        t.push_back(static_cast<std::size_t>(i));
    }
    return t;
}

std::string vec_text(const Vector& v, const Basis& b) { return render_vector(v, b.names); }

std::string report_text(const IdentityReport& r) {
    if (r.holds) return "holds on " + std::to_string(r.tuples_checked) + " tuples";
    std::string s = "fails";
    if (!r.precondition.empty()) s += " (" + r.precondition + " precondition)";
    s += " on " + std::to_string(r.failures) + " of " + std::to_string(r.tuples_checked) + " tuples";
    if (!r.counterexamples.empty()) {
        const auto& c = r.counterexamples[0];
        s += ", first " + tuple_text(r.names, c.tuple) + ": " + render_vector(c.residual, r.names);
    }
    return s;
}

Vector pick(const Sides& s, const std::string& side) {
    if (side == "lhs") return s.lhs;
    if (side == "rhs") return s.rhs;
    return s.residual();
}

std::string with_bindings(const std::string& id, const Bindings& b) {
    return b.empty() ? id : id + " [" + render_bindings(b) + "]";
}

Row verdict(const CorpusEntry& e, const Claim& c, const Instance& inst) {
    Row r;
    auto w = words(c.check);
    IdentityReport rep;
    std::optional<HomSuperAlgebra> h;
    if (w[0] == "endomorphism" || w[0] == "even") {
        if (w.size() != 2) throw Error("'" + w[0] + "' needs a map name");
        auto it = inst.maps.find(w[1]);
        if (it == inst.maps.end()) throw Error("unknown map '" + w[1] + "'");
        rep = w[0] == "even" ? is_even(it->second, inst.algebra.basis)
                             : is_weak_morphism(inst.algebra, inst.algebra, it->second);
        if (w[0] == "even") rep.names = inst.algebra.basis.names;
    } else {
        h = construct(inst, c.on);
        rep = run_check(c.check, *h, 4);
    }
    bool expected = c.expect == "holds";
    bool ok = rep.holds == expected;
    r.detail = c.check + " " + report_text(rep);
    if (!c.at.empty()) {
        if (!h) throw Error("claim '" + c.key + "': 'at' needs an identity check");
        auto t = tuple_of(inst.algebra.basis, c.at);
        Vector res = pick(evaluate_sides(c.check, *h, t), c.side);
        r.detail += "; " + c.side + " at " + tuple_text(inst.algebra.basis.names, t) + " = " + vec_text(res, inst.algebra.basis);
        if (!expected && res.is_zero()) ok = false;
        if (!c.zero_at.empty()) {
            Specializer sp(inst.field, parse_bindings(c.zero_at));
            Vector z = sp(res);
            r.detail += "; under " + c.zero_at + " it is " + (z.is_zero() ? "zero" : vec_text(z, inst.algebra.basis));
            if (!z.is_zero()) ok = false;
        }
    }
    (void)e;
    r.status = ok ? Status::Pass : Status::Fail;
    r.claimed = c.expect;
    r.oracle = rep.holds ? "holds" : "fails";
    return r;
}

Row value(const CorpusEntry& e, const Claim& c, const Instance& inst) {
    Row r;
    HomSuperAlgebra h = construct(inst, c.on);
    auto t = tuple_of(inst.algebra.basis, c.at);
    Sides s = evaluate_sides(c.check, h, t);
    Vector oracle = pick(s, c.side);
    Vector claimed = claimed_value(e, c.key, inst);
    const Basis& b = inst.algebra.basis;
    bool match = oracle == claimed && (!c.nonzero || !oracle.is_zero());
    r.status = match ? Status::Pass : Status::Discrepancy;
    r.claimed = c.value + (c.nonzero ? " (asserted nonzero)" : "");
    std::string ev = vec_text(claimed, b);
    if (ev != c.value) r.claimed += ", evaluates to " + ev;
    r.oracle = vec_text(oracle, b);
    r.detail = c.check + " " + c.side + " at " + tuple_text(b.names, t);
    if (!s.component.empty() && s.component != c.check) r.detail += " [" + s.component + "]";
    return r;
}

Row table(const CorpusEntry& e, const Claim& c, const Instance& inst) {
    Row r;
    HomSuperAlgebra h = construct(inst, c.on);
    const Basis& b = inst.algebra.basis;
    std::vector<std::string> bad_claimed, bad_oracle;
    std::size_t n = 0;
    std::istringstream in(c.table);
    for (std::string item; std::getline(in, item, ';');) {
        auto colon = item.find(':');
        auto star = item.find('*');
        if (colon == std::string::npos || star == std::string::npos || star > colon)
            throw Error("table entry '" + item + "' is not 'x*y: value'");
        auto strip = [](std::string s) {
            auto i = s.find_first_not_of(" \t"), j = s.find_last_not_of(" \t");
            return i == std::string::npos ? std::string() : s.substr(i, j - i + 1);
        };
        std::string l = strip(item.substr(0, star)), rr = strip(item.substr(star + 1, colon - star - 1));
        std::string text = strip(item.substr(colon + 1));
        auto t = tuple_of(b, {l, rr});
        Vector claimed = parse_claimed(text, inst);
        const Vector& got = h.algebra.product(t[0], t[1]);
        ++n;
        if (!(claimed == got)) {
            bad_claimed.push_back(l + "*" + rr + " = " + vec_text(claimed, b));
            bad_oracle.push_back(l + "*" + rr + " = " + vec_text(got, b));
        }
    }
    (void)e;
    r.status = bad_claimed.empty() ? Status::Pass : Status::Discrepancy;
    r.detail = std::to_string(n) + " printed entries of " + c.on + ", " + std::to_string(bad_claimed.size()) + " differ";
    for (std::size_t i = 0; i < bad_claimed.size(); ++i) {
        r.claimed += (i ? "; " : "") + bad_claimed[i];
        r.oracle += (i ? "; " : "") + bad_oracle[i];
    }
    return r;
}

const std::set<std::string> kClosure = {"alternative",    "hom-malcev",        "flexible",         "hom-jordan",
                                        "lie-admissible", "malcev-admissible", "jordan-admissible"};

Row make(const std::string& group, const std::string& id, bool ok, std::string detail) {
    Row r;
    r.group = group;
    r.id = id;
    r.status = ok ? Status::Pass : Status::Fail;
    r.detail = std::move(detail);
    return r;
}

void structure_rows(const CorpusEntry& e, std::vector<Row>& out) {
    EvaluatedDocument ev = evaluate_document(e.doc);
    IdentityReport g = validate(ev.algebra);
    out.push_back(make("structure", e.id + "/grading", g.holds, "structure constants " + report_text(g)));
    EvaluatedDocument tx = builtin_entry(e.id);
    bool same = *tx.field == *ev.field && tx.algebra == ev.algebra && tx.maps.size() == ev.maps.size();
    for (const auto& [name, f] : tx.maps) {
        auto it = ev.maps.find(name);
        same = same && it != ev.maps.end() && it->second == f;
    }
    out.push_back(make("structure", e.id + "/transcription", same,
                       same ? "file agrees with the independent transcription" : "file differs from the transcription"));
    bool rt = same_document(parse_algebra_file(serialize_document(e.doc)), e.doc);
    out.push_back(make("structure", e.id + "/round-trip", rt, rt ? "serialize then parse is the identity" : "round-trip changed the document"));
}

void closure_rows(const CorpusEntry& e, const Claim& c, const Row& verdict_row, std::vector<Row>& out) {
    if (c.kind() != Claim::Kind::Verdict || c.expect != "holds" || verdict_row.status != Status::Pass) return;
    if (!kClosure.count(c.check)) return;
    auto w = words(c.on);
    if (w.size() > 2) return;
    Bindings b = parse_bindings(c.bind);
    Instance inst = instantiate(e.doc, b, e.lets);
    HomSuperAlgebra h = with_multiplicativity(construct(inst, c.on));
    if (h.multiplicative != Tri::True) {
        // Derived algebras are only defined for multiplicative ones.
        return;
    }
    for (unsigned n = 1; n <= 2; ++n) {
        IdentityReport r = run_check(c.check, derived(h, n), 4);
        out.push_back(make("closure", with_bindings(e.id + "/" + c.key + "/derived-" + std::to_string(n), b), r.holds,
                           c.check + " on derived(" + c.on + ", " + std::to_string(n) + ") " + report_text(r)));
    }
}

void theorem_rows(const CorpusEntry& e, const Claim& c, const Row& verdict_row, std::vector<Row>& out) {
    if (c.kind() != Claim::Kind::Verdict || c.expect != "holds" || verdict_row.status != Status::Pass) return;
    std::vector<std::string> implied;
    if (c.check == "alternative") implied = {"malcev-admissible", "jordan-admissible", "j-eq-6as", "bk-suite", "cyclic-assoc"};
    else if (c.check == "flexible") implied = {"j-eq-2s"};
    else if (c.check == "hom-malcev" || c.check == "hom-lie") implied = {"hom-malcev-2", "hom-malcev-3"};
    if (implied.empty() || words(c.on).size() > 2) return;
    Bindings b = parse_bindings(c.bind);
    Instance inst = instantiate(e.doc, b, e.lets);
    HomSuperAlgebra h = construct(inst, c.on);
    for (const auto& x : implied) {
        if (c.check == "hom-lie" && x != "hom-malcev-2" && x != "hom-malcev-3") continue;
        IdentityReport r = run_check(x, h, 4);
        out.push_back(make(c.check.rfind("hom-", 0) == 0 ? "forms" : "theorem",
                           with_bindings(e.id + "/" + c.key + "/" + x, b), r.holds,
                           x + " on " + c.on + " (" + c.check + " holds) " + report_text(r)));
    }
}

void form_rows(const CorpusEntry& e, const Claim& c, std::vector<Row>& out) {
    // The three Hom-Malcev forms must agree wherever hom-malcev is claimed either way.
    if (c.kind() != Claim::Kind::Verdict || c.check != "hom-malcev") return;
    Bindings b = parse_bindings(c.bind);
    Instance inst = instantiate(e.doc, b, e.lets);
    HomSuperAlgebra h = construct(inst, c.on);
    bool v1 = run_check("hom-malcev", h, 1).holds;
    bool v2 = run_check("hom-malcev-2", h, 1).holds;
    bool v3 = run_check("hom-malcev-3", h, 1).holds;
    auto s = [](bool v) { return v ? "holds" : "fails"; };
    out.push_back(make("forms", with_bindings(e.id + "/" + c.key + "/forms-agree", b), v1 == v2 && v2 == v3,
                       std::string("on ") + c.on + ": form 1 " + s(v1) + ", form 2 " + s(v2) + ", form 3 " + s(v3)));
}

void lemma_rows(const std::vector<CorpusEntry>& entries, std::vector<Row>& out) {
    // Corrected cyclic Jordan expansion on every entry at its default binding,
    // then the printed form on the first instance where it breaks.
    std::optional<Row> printed;
    for (const auto& e : entries) {
        Bindings d = e.defaults();
        Instance inst = instantiate(e.doc, d, e.lets);
        std::vector<std::string> ons = {"base"};
        for (const auto& m : e.doc.maps) ons.push_back("product " + m.name);
        for (const auto& on : ons) {
            HomSuperAlgebra h = construct(inst, on);
            // Give the twist some content: use the entry's maps as alpha.
            for (const auto& [name, f] : inst.maps) {
                (void)name;
                if (!is_even(f, inst.algebra.basis).holds) continue;
                HomSuperAlgebra g = h;
                g.alpha = f;
                g.multiplicative = Tri::Unchecked;
                IdentityReport r = check_jordan_cyclic_expansion(g, 1);
                out.push_back(make("lemma", with_bindings(e.id + "/" + on + "/alpha=" + name + "/jordan-expansion", d),
                                   r.holds, "cyclic Jordan expansion " + report_text(r)));
                if (!printed) {
                    IdentityReport p = check_jordan_expansion_as_printed(g, 1);
                    if (!p.holds) {
                        Row row;
                        row.group = "lemma";
                        row.id = with_bindings(e.id + "/" + on + "/alpha=" + name + "/jordan-expansion-as-printed", d);
                        row.status = Status::Discrepancy;
                        const auto& ce = p.counterexamples[0];
                        Sides s = evaluate_sides("jordan-expansion-printed", g, ce.tuple);
                        row.detail = "printed expansion (coefficient 4, printed term list) at " + tuple_text(p.names, ce.tuple);
                        row.claimed = "lhs = rhs, rhs = " + render_vector(s.rhs, p.names);
                        row.oracle = "lhs = " + render_vector(s.lhs, p.names);
                        row.cite = "Lemma expanding the cyclic Jordan sum";
                        printed = row;
                    }
                }
            }
        }
    }
    if (printed) out.push_back(*printed);
}

std::string esc_pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

}  // namespace

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Discrepancy: return "DISCREPANCY";
    }
    return "?";
}

Row evaluate_claim(const CorpusEntry& e, const Claim& c, const Bindings& extra) {
    Row r;
    Bindings b = merge_bindings(parse_bindings(c.bind), extra);
    try {
        Instance inst = instantiate(e.doc, b, e.lets);
        switch (c.kind()) {
            case Claim::Kind::Verdict: r = verdict(e, c, inst); break;
            case Claim::Kind::Value: r = value(e, c, inst); break;
            case Claim::Kind::Table: r = table(e, c, inst); break;
        }
    } catch (const Error& ex) {
        r.status = Status::Fail;
        r.detail = std::string("error: ") + ex.what();
    }
    r.group = "claim";
    r.id = with_bindings(e.id + "/" + c.key, b);
    r.cite = c.cite;
    return r;
}

std::vector<Row> verify_paper(const std::string& corpus_dir) {
    std::vector<Row> rows;
    std::vector<CorpusEntry> entries;
    for (const auto& id : corpus_ids()) {
        try {
            entries.push_back(load_entry(id, corpus_dir));
        } catch (const Error& ex) {
            rows.push_back(make("structure", id + "/load", false, ex.what()));
        }
    }
    for (const auto& e : entries) {
        try {
            structure_rows(e, rows);
        } catch (const Error& ex) {
            rows.push_back(make("structure", e.id, false, std::string("error: ") + ex.what()));
        }
        for (const auto& c : e.claims) {
            Row r = evaluate_claim(e, c);
            rows.push_back(r);
            try {
                form_rows(e, c, rows);
                theorem_rows(e, c, r, rows);
                closure_rows(e, c, r, rows);
            } catch (const Error& ex) {
                rows.push_back(make("closure", e.id + "/" + c.key, false, std::string("error: ") + ex.what()));
            }
        }
    }
    try {
        lemma_rows(entries, rows);
    } catch (const Error& ex) {
        rows.push_back(make("lemma", "jordan-expansion", false, std::string("error: ") + ex.what()));
    }
    return rows;
}

bool suite_passed(const std::vector<Row>& rows) {
    for (const auto& r : rows)
        if (r.status == Status::Fail) return false;
    return true;
}

std::string render_rows(const std::vector<Row>& rows) {
    std::ostringstream o;
    std::size_t pass = 0, fail = 0, disc = 0;
    for (const auto& r : rows) {
        o << esc_pad(status_name(r.status), 12) << r.id << "\n";
        o << "            " << r.detail << "\n";
        if (r.status != Status::Pass && !r.claimed.empty()) {
            o << "            claimed: " << r.claimed << "\n";
            o << "            oracle:  " << r.oracle << "\n";
        }
        if (!r.cite.empty()) o << "            cite: " << r.cite << "\n";
        (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : disc)++;
    }
    o << "\n" << pass << " pass, " << fail << " fail, " << disc << " discrepancy\n";
    if (disc) {
        o << "\nDiscrepancies (claimed value vs oracle):\n";
        for (const auto& r : rows)
            if (r.status == Status::Discrepancy) o << "  " << r.id << "\n";
    }
    return o.str();
}

std::string rows_json(const std::vector<Row>& rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["status"] = status_name(r.status);
        j["group"] = r.group;
        j["id"] = r.id;
        j["detail"] = r.detail;
        if (!r.claimed.empty()) j["claimed"] = r.claimed;
        if (!r.oracle.empty()) j["oracle"] = r.oracle;
        if (!r.cite.empty()) j["cite"] = r.cite;
        arr.push_back(j);
    }
    return arr.dump(2);
}

}  // namespace salg
