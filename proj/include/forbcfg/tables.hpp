#pragma once

#include <map>
#include <string>
#include <vector>

#include "forbcfg/induction.hpp"
#include "forbcfg/matrix.hpp"

namespace forbcfg {

inline constexpr int kTableSchemaVersion = 1;

/// Evaluates integer expressions over named variables: + - * parentheses,
/// C(n,k) and max(a,b). Used for the expected-exponent expressions in the
/// bundled classification tables.
long eval_expression(const std::string& expr, const std::map<std::string, long>& vars);

struct TableRowResult {
    int table = 0;
    std::string name;
    int r = 0;
    std::map<std::string, long> params;
    std::string expected_type;  // exact | theta | open
    std::string expected_expr;
    long expected_value = 0;
    int lower = 0;
    int upper = 0;
    bool tight = false;
    bool has_exact = false;
    std::uint64_t exact_value = 0;
    std::string citation;
    std::string status;  // match | mismatch | open
};

struct TableReport {
    int table_id = 0;
    int schema_version = kTableSchemaVersion;
    std::vector<TableRowResult> rows;
    int mismatches = 0;
};

/// Regenerates one of the bundled classification tables by running the
/// classifier on every row instance and diffing against the expectations
/// file. r_values defaults to {3, 4}.
TableReport run_table(int which, const std::vector<int>& r_values,
                      const std::string& expectations_path);

std::string default_expectations_path();

std::string table_report_json(const TableReport& report);
std::string table_report_csv(const TableReport& report);

/// Builds the matrix a table row refers to.
RMatrix table_matrix(const std::string& kind, const std::map<std::string, long>& params,
                     const std::string& inline_text);

}  // namespace forbcfg
