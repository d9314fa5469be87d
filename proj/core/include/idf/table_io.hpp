#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "idf/experiment.hpp"

namespace idf {

enum class TableFormat { Csv, Markdown };

TableFormat table_format_from_name(std::string_view name);  // "csv" | "markdown"

struct TableParseError : std::runtime_error {
    TableParseError(const std::string& what, int line_number)
        : std::runtime_error(what), line(line_number) {}
    int line;
};

/// Writes `method,alpha,beta,mase,mmr,u2` rows (plus `mase_abs` when
/// requested) at 6 significant digits, preceded by `#`-prefixed metadata
/// comments. Markdown emits the same table as a pipe table.
void write_result_table(std::ostream& os, const ResultTable& table,
                        TableFormat format = TableFormat::Csv, bool include_abs_mase = false);

/// Parses a CSV result table written by write_result_table. `#` comments
/// carry the metadata; unknown columns are rejected. Throws TableParseError
/// with the offending line number.
ResultTable read_result_table(std::istream& is);
ResultTable read_result_table_file(const std::string& path);

void write_head_to_head(std::ostream& os, const HeadToHeadReport& report,
                        TableFormat format = TableFormat::Csv);

/// Row of a head-to-head reference table
/// (`dist_param,p0,selection,alpha_tsb,beta_tsb,alpha_hes,beta_hes,rgrmse,pb[,notes]`).
/// dist_param is kept exactly as printed in the source table; notes record
/// any mapping quirks.
struct ComparisonGoldenRow {
    double dist_param;
    double p0;
    std::string selection;  // "mmr-best" | "u2-best"
    double alpha_tsb, beta_tsb;
    double alpha_hes, beta_hes;
    double rgrmse;
    double pb;
    std::string notes;
};

std::vector<ComparisonGoldenRow> read_comparison_golden(std::istream& is);
std::vector<ComparisonGoldenRow> read_comparison_golden_file(const std::string& path);

}  // namespace idf
