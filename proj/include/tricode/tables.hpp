#pragma once

#include <string>
#include <vector>

#include "tricode/constructions.hpp"

namespace tricode {

/// One row of a bundled reference table: a construction plus the parameters
/// it is known to reach. Reported distances always come from exact
/// enumeration, never from the annotation.
struct TableRowResult {
    std::string spec_text;
    uint32_t expect_n = 0, expect_k = 0, expect_d = 0;
    bool expect_fsd = false;
    CodeReport report;
    bool skipped = false;  // enumeration exceeded the budget
    bool pass = false;
    std::string annotation;
};

struct TableRunResult {
    int table_id = 0;
    std::vector<TableRowResult> rows;
    bool all_pass = false;
};

/// Re-derive every row of one of the bundled tables (1..6) and compare
/// against the recorded parameters.
TableRunResult run_table(int table_id, uint64_t budget = kDefaultBudget, uint32_t workers = 1);

std::string format_table_markdown(const TableRunResult& t);
std::string format_table_csv(const TableRunResult& t);

}  // namespace tricode
