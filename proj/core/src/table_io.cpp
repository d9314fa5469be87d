#include "idf/table_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace idf {

namespace {

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    for (auto& f : fields) {
        while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.erase(f.begin());
        while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r')) f.pop_back();
    }
    return fields;
}

double parse_double(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw TableParseError("not a number: '" + s + "'", line);
    }
}

std::uint64_t parse_u64(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw TableParseError("not an unsigned integer: '" + s + "'", line);
    }
}

}  // namespace

TableFormat table_format_from_name(std::string_view name) {
    if (name == "csv") return TableFormat::Csv;
    if (name == "markdown") return TableFormat::Markdown;
    throw std::invalid_argument("unknown table format: " + std::string(name));
}

void write_result_table(std::ostream& os, const ResultTable& table, TableFormat format,
                        bool include_abs_mase) {
    if (format == TableFormat::Csv) {
        os << "# scenario: " << table.scenario_id << "\n";
        os << "# runs: " << table.runs << "\n";
        os << "# seed: " << table.seed << "\n";
        os << "method,alpha,beta,mase,mmr,u2";
        if (include_abs_mase) os << ",mase_abs";
        os << "\n";
        for (const auto& row : table.rows) {
            os << method_name(row.method) << ',' << fmt6(row.alpha) << ',' << fmt6(row.beta) << ','
               << fmt6(row.metrics.mase) << ',' << fmt6(row.metrics.mmr) << ','
               << fmt6(row.metrics.u2);
            if (include_abs_mase) os << ',' << fmt6(row.metrics.mase_abs);
            os << "\n";
        }
    } else {
        os << "scenario: " << table.scenario_id << ", runs: " << table.runs
           << ", seed: " << table.seed << "\n\n";
        os << "| method | alpha | beta | mase | mmr | u2 |";
        if (include_abs_mase) os << " mase_abs |";
        os << "\n|---|---|---|---|---|---|";
        if (include_abs_mase) os << "---|";
        os << "\n";
        for (const auto& row : table.rows) {
            os << "| " << method_name(row.method) << " | " << fmt6(row.alpha) << " | "
               << fmt6(row.beta) << " | " << fmt6(row.metrics.mase) << " | "
               << fmt6(row.metrics.mmr) << " | " << fmt6(row.metrics.u2) << " |";
            if (include_abs_mase) os << ' ' << fmt6(row.metrics.mase_abs) << " |";
            os << "\n";
        }
    }
}

ResultTable read_result_table(std::istream& is) {
    ResultTable table;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    bool has_abs = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            const auto body = line.substr(1);
            const auto colon = body.find(':');
            if (colon != std::string::npos) {
                std::string key = body.substr(0, colon);
                std::string value = body.substr(colon + 1);
                while (!key.empty() && key.front() == ' ') key.erase(key.begin());
                while (!value.empty() && value.front() == ' ') value.erase(value.begin());
                if (key == "scenario") table.scenario_id = value;
                else if (key == "runs") table.runs = static_cast<std::int64_t>(parse_u64(value, line_no));
                else if (key == "seed") table.seed = parse_u64(value, line_no);
            }
            continue;
        }
        const auto fields = split_csv(line);
        if (!header_seen) {
            if (fields.size() < 6 || fields[0] != "method" || fields[1] != "alpha" ||
                fields[2] != "beta" || fields[3] != "mase" || fields[4] != "mmr" ||
                fields[5] != "u2")
                throw TableParseError("expected header 'method,alpha,beta,mase,mmr,u2'", line_no);
            if (fields.size() == 7 && fields[6] == "mase_abs") has_abs = true;
            else if (fields.size() > 6)
                throw TableParseError("unknown extra columns in header", line_no);
            header_seen = true;
            continue;
        }
        const std::size_t expected = has_abs ? 7 : 6;
        if (fields.size() != expected)
            throw TableParseError("expected " + std::to_string(expected) + " fields, got " +
                                      std::to_string(fields.size()),
                                  line_no);
        ResultRow row{};
        try {
            row.method = method_from_name(fields[0]);
        } catch (const std::exception& e) {
            throw TableParseError(e.what(), line_no);
        }
        row.alpha = parse_double(fields[1], line_no);
        row.beta = parse_double(fields[2], line_no);
        row.metrics.mase = parse_double(fields[3], line_no);
        row.metrics.mmr = parse_double(fields[4], line_no);
        row.metrics.u2 = parse_double(fields[5], line_no);
        row.metrics.mase_abs =
            has_abs ? parse_double(fields[6], line_no) : std::numeric_limits<double>::quiet_NaN();
        table.rows.push_back(row);
    }
    if (!header_seen) throw TableParseError("no table header found", line_no);
    return table;
}

ResultTable read_result_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file: " + path);
    return read_result_table(in);
}

void write_head_to_head(std::ostream& os, const HeadToHeadReport& report, TableFormat format) {
    if (format == TableFormat::Csv) {
        os << "# scenario: " << report.scenario_id << "\n";
        os << "# runs: " << report.runs << "\n";
        os << "# seed: " << report.seed << "\n";
        os << "selection,alpha_tsb,beta_tsb,alpha_hes,beta_hes,rgrmse,pb\n";
        os << selection_name(report.selection) << ',' << fmt6(report.alpha_tsb) << ','
           << fmt6(report.beta_tsb) << ',' << fmt6(report.alpha_hes) << ','
           << fmt6(report.beta_hes) << ',' << fmt6(report.rgrmse) << ',' << fmt6(report.pb)
           << "\n";
    } else {
        os << "scenario: " << report.scenario_id << ", runs: " << report.runs
           << ", seed: " << report.seed << "\n\n";
        os << "| selection | alpha_tsb | beta_tsb | alpha_hes | beta_hes | rgrmse | pb |\n";
        os << "|---|---|---|---|---|---|---|\n";
        os << "| " << selection_name(report.selection) << " | " << fmt6(report.alpha_tsb) << " | "
           << fmt6(report.beta_tsb) << " | " << fmt6(report.alpha_hes) << " | "
           << fmt6(report.beta_hes) << " | " << fmt6(report.rgrmse) << " | " << fmt6(report.pb)
           << " |\n";
    }
}

std::vector<ComparisonGoldenRow> read_comparison_golden(std::istream& is) {
    std::vector<ComparisonGoldenRow> rows;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    bool has_notes = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const auto fields = split_csv(line);
        if (!header_seen) {
            if (fields.size() < 9 || fields[0] != "dist_param" || fields[2] != "selection")
                throw TableParseError(
                    "expected header 'dist_param,p0,selection,alpha_tsb,beta_tsb,alpha_hes,"
                    "beta_hes,rgrmse,pb[,notes]'",
                    line_no);
            has_notes = fields.size() == 10 && fields[9] == "notes";
            header_seen = true;
            continue;
        }
        const std::size_t expected = has_notes ? 10 : 9;
        if (fields.size() != expected)
            throw TableParseError("expected " + std::to_string(expected) + " fields, got " +
                                      std::to_string(fields.size()),
                                  line_no);
        ComparisonGoldenRow row{};
        row.dist_param = parse_double(fields[0], line_no);
        row.p0 = parse_double(fields[1], line_no);
        row.selection = fields[2];
        row.alpha_tsb = parse_double(fields[3], line_no);
        row.beta_tsb = parse_double(fields[4], line_no);
        row.alpha_hes = parse_double(fields[5], line_no);
        row.beta_hes = parse_double(fields[6], line_no);
        row.rgrmse = parse_double(fields[7], line_no);
        row.pb = parse_double(fields[8], line_no);
        if (has_notes) row.notes = fields[9];
        rows.push_back(row);
    }
    if (!header_seen) throw TableParseError("no table header found", line_no);
    return rows;
}

std::vector<ComparisonGoldenRow> read_comparison_golden_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file: " + path);
    return read_comparison_golden(in);
}

}  // namespace idf
