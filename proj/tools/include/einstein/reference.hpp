#pragma once

#include <string>
#include <vector>

namespace einstein {

/// A reference coefficient row: (x1, x2) or (x1, x2, x3, v4, v5). When x1_scaled is set the row
/// is a solution rescaled to x1 = 1 rather than x3 = 1.
struct RefRow {
    std::vector<double> values;
    bool x1_scaled = false;
};

struct RefSpace {
    long long l = 0, m = 0, n = 0;
    int solutions = 0; // expected count
    int classes = 0;   // expected isometry classes, 0 = not checked
    std::vector<RefRow> rows;
};

struct RefTable {
    std::string target;
    std::string title;
    double tol = 0;
    bool relative = false;  // tolerance relative to the reference value
    bool extended = false;  // solve in extended precision
    std::vector<RefSpace> spaces;
};

/// Targets table1, table2, table3, table3prime, table4 and intro ("flag" is computed, not tabulated).
const std::vector<RefTable>& reference_tables();
const RefTable* find_table(const std::string& target);

} // namespace einstein
