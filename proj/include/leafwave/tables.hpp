#pragma once

#include <string>
#include <vector>

namespace leafwave::cli {

// One of the five reference tables, recomputed from the library.
struct TableArtifact {
    int table_id;
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// table_id in {1..5}: 1 = period constants, 2 = leaf-function samples,
// 3/4/5 = type I/II/III solution data on t = -10..10.
TableArtifact make_table(int table_id);

// Fixed-decimal rendering; table 1 uses 3 decimals, the others 5, with the
// t column at 1 decimal.  Negative zero renders as "0.00000".
std::string render_table(const TableArtifact& table);

std::string format_fixed(double value, int decimals);

} // namespace leafwave::cli
