#pragma once

// Worked-example corpus: each case is a JSON file holding an optional
// lattice, a provenance note and a list of checks with expected values.
// Running a case evaluates every check and reports actual vs expected.

#include "conelat/io.hpp"

#include <string>
#include <vector>

namespace conelat::corpus {

// $CONELAT_CORPUS_DIR if set, else the directory configured at build time.
std::string corpus_dir();

std::vector<std::string> list_cases(const std::string& dir);

struct CaseResult {
    io::json report; // {"case", "provenance", "checks": [...], "ok"}
    bool ok = false;
};

CaseResult run_case(const io::json& case_file, const std::string& name);
CaseResult run_case_file(const std::string& dir, const std::string& name);

} // namespace conelat::corpus
