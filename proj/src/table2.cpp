#include "encap/table2.hpp"

#include "encap/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cstdlib>

namespace encap {

namespace {

std::string hundredths(int v) { return fmt::format("{:.6f}", v / 100.0); }

}  // namespace

std::vector<Table2Comparison> compare_table2() {
    std::vector<Table2Row> by_size(kTable2.begin(), kTable2.end());
    std::sort(by_size.begin(), by_size.end(), [](const Table2Row& a, const Table2Row& b) { return a.n > b.n; });
    auto is_large = [&](const Table2Row& row) {
        for (std::size_t i = 0; i < kTable2AssertedCount && i < by_size.size(); ++i) {
            if (by_size[i].name == row.name) return true;
        }
        return false;
    };

    std::vector<Table2Comparison> out;
    for (const Table2Row& row : kTable2) {
        const int approx = 100 - row.ihv_percent;
        const int diff = std::abs(row.ce_hundredths - approx);
        const bool asserted = is_large(row);
        out.push_back({row, approx, diff, asserted, !asserted || diff <= kTable2ToleranceHundredths});
    }
    return out;
}

bool table2_passes(const std::vector<Table2Comparison>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const Table2Comparison& c) { return c.pass; });
}

std::string render_table2(const std::vector<Table2Comparison>& rows) {
    std::vector<std::vector<std::string>> cells = {
        {"system", "n", "psc", "ce", "1-ihv", "abs_diff", "check"}};
    for (const Table2Comparison& c : rows) {
        std::string check = "reported";
        if (c.asserted) check = c.pass ? "pass" : "FAIL";
        cells.push_back({std::string(c.row.name), fmt::format("{}", c.row.n), fmt::format("{}", c.row.psc),
                         hundredths(c.row.ce_hundredths), hundredths(c.approx_hundredths),
                         hundredths(c.diff_hundredths), check});
    }
    std::string out = render_columns(cells);
    out += fmt::format("large systems within {}: {}\n", hundredths(kTable2ToleranceHundredths),
                       table2_passes(rows) ? "yes" : "no");
    return out;
}

}  // namespace encap
