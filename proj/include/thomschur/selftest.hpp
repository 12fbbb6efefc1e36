#pragma once

#include <string>
#include <vector>

#include "thomschur/thom.hpp"

namespace thomschur {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool pass = false;
    std::string detail; // nonempty on failure: what mismatched
};

struct SelftestReport {
    std::vector<CriterionResult> criteria;
    bool all_pass() const;
    std::string str() const;
    std::string to_json() const;
};

// Runs the full acceptance suite against the golden files in golden_dir.
// Each criterion is one entry; a missing or unreadable golden file fails the
// criterion that needs it rather than aborting the run.
SelftestReport run_selftest(const std::string& golden_dir);

// golden-file helpers (also used by tests)
SchurExpansion load_expansion(const std::string& path);
std::vector<std::vector<Int>> load_table_rows(const std::string& path);

// Independent oracle for S_I(A_m - B_n) on pure variable alphabets: complete
// and elementary functions by direct monomial enumeration, assembled through
// the naive cofactor determinant.  Shares no code with the series engine.
MPoly oracle_schur(const std::vector<int>& seq, int m, int n);

} // namespace thomschur
