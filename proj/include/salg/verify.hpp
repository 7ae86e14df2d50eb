#pragma once

#include "salg/corpus.hpp"

#include <string>
#include <vector>

namespace salg {

enum class Status { Pass, Fail, Discrepancy };
const char* status_name(Status s);

struct Row {
    std::string group;  // "claim", "structure", "closure", "forms", "theorem", "lemma"
    std::string id;     // entry/claim or entry/topic
    Status status = Status::Pass;
    std::string detail;
    std::string claimed;  // Discrepancy and value rows only
    std::string oracle;
    std::string cite;
};

// Evaluates one claim; `extra` bindings override the claim's own.
Row evaluate_claim(const CorpusEntry& e, const Claim& c, const Bindings& extra = {});

// Every claim of every corpus entry plus the generated structural,
// closure, form-equivalence, theorem and lemma rows, in registry order.
std::vector<Row> verify_paper(const std::string& corpus_dir = default_corpus_dir());

bool suite_passed(const std::vector<Row>& rows);  // no Fail rows
std::string render_rows(const std::vector<Row>& rows);
std::string rows_json(const std::vector<Row>& rows);

}  // namespace salg
