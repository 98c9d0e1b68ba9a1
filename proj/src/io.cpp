#include "mcdm/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mcdm {

namespace {

std::string trim(const std::string& text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return text.substr(begin, end - begin);
}

std::string lowercase(std::string text) {
    for (char& c : text) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return text;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(trim(current));
    return fields;
}

bool parse_direction_token(const std::string& token, Direction& out) {
    const std::string t = lowercase(token);
    if (t == "max" || t == "benefit" || t == "b") {
        out = Direction::Benefit;
        return true;
    }
    if (t == "min" || t == "cost" || t == "c") {
        out = Direction::Cost;
        return true;
    }
    return false;
}

double parse_number(const std::string& cell, std::size_t row, const std::string& column) {
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{} || result.ptr != end || cell.empty()) {
        throw Error(ErrorCode::ParseError,
                    "row " + std::to_string(row) + ", column " + column + ": cannot parse \"" +
                        cell + "\" as a number (use a dot decimal separator)");
    }
    return value;
}

bool is_metadata_label(const std::string& label) {
    const std::string t = lowercase(label);
    return t.empty() || t == "max/min" || t == "min/max" || t == "max" || t == "min";
}

const char* direction_token(Direction d) {
    return d == Direction::Benefit ? "max" : "min";
}

const char* direction_word(Direction d) {
    return d == Direction::Benefit ? "benefit" : "cost";
}

std::string format_value(double value, bool full_precision) {
    return full_precision ? format_full(value) : format_fixed(value);
}

// Renders rows as space-aligned columns: first column left-aligned, the rest
// right-aligned.
void write_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out << "  ";
            const std::size_t pad = width[c] - row[c].size();
            if (c == 0) {
                out << row[c] << std::string(pad, ' ');
            } else {
                out << std::string(pad, ' ') << row[c];
            }
        }
        out << '\n';
    }
}

void check_stream(std::ostream& out) {
    if (!out) throw Error(ErrorCode::WriteFailure, "failed to write report output");
}

}  // namespace

std::string format_fixed(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.4f", value);
    return buffer;
}

std::string format_full(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

DecisionMatrix parse_matrix_file(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        lines.push_back(line);
    }
    if (lines.empty()) {
        throw Error(ErrorCode::ParseError, "input is empty");
    }

    const std::vector<std::string> header = split_fields(lines[0]);
    if (header.size() < 2) {
        throw Error(ErrorCode::ParseError, "header row needs a label cell and criterion names");
    }
    const std::size_t n = header.size() - 1;

    if (lines.size() < 2) {
        throw Error(ErrorCode::UnknownDirectionToken, "row 2 (direction row) is missing");
    }
    const std::vector<std::string> direction_row = split_fields(lines[1]);
    if (direction_row.size() != header.size()) {
        throw Error(ErrorCode::ParseError,
                    "row 2 has " + std::to_string(direction_row.size()) + " cells, expected " +
                        std::to_string(header.size()));
    }

    RawMatrix raw;
    for (std::size_t j = 0; j < n; ++j) {
        Direction direction;
        if (!parse_direction_token(direction_row[j + 1], direction)) {
            throw Error(ErrorCode::UnknownDirectionToken,
                        "row 2, column " + header[j + 1] + ": \"" + direction_row[j + 1] +
                            "\" is not a direction (use max/benefit/b or min/cost/c)");
        }
        raw.criteria.push_back({header[j + 1], direction});
    }

    for (std::size_t r = 2; r < lines.size(); ++r) {
        const std::size_t row_number = r + 1;
        const std::vector<std::string> fields = split_fields(lines[r]);
        if (is_metadata_label(fields[0])) {
            throw Error(ErrorCode::ParseError,
                        "row " + std::to_string(row_number) + " looks like a metadata row (label \"" +
                            fields[0] + "\"); remove summary/metadata rows so only alternatives remain");
        }
        if (fields.size() != header.size()) {
            throw Error(ErrorCode::ParseError,
                        "row " + std::to_string(row_number) + " (" + fields[0] + ") has " +
                            std::to_string(fields.size()) + " cells, expected " +
                            std::to_string(header.size()));
        }
        raw.alternatives.push_back(fields[0]);
        std::vector<double> values;
        values.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            values.push_back(parse_number(fields[j + 1], row_number, raw.criteria[j].name));
        }
        raw.values.push_back(std::move(values));
    }

    return validate_matrix(std::move(raw));
}

DecisionMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open input file: " + path);
    }
    return parse_matrix_file(in);
}

void emit_matrix(const DecisionMatrix& matrix, ReportFormat format, std::ostream& out,
                 bool full_precision) {
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();
    switch (format) {
        case ReportFormat::DelimitedValues: {
            out << "Alternative";
            for (std::size_t j = 0; j < n; ++j) out << ',' << matrix.criterion(j).name;
            out << "\ndirection";
            for (std::size_t j = 0; j < n; ++j)
                out << ',' << direction_token(matrix.criterion(j).direction);
            out << '\n';
            for (std::size_t i = 0; i < m; ++i) {
                out << matrix.alternative(i);
                for (std::size_t j = 0; j < n; ++j) out << ',' << format_full(matrix.at(i, j));
                out << '\n';
            }
            break;
        }
        case ReportFormat::PlainTable: {
            std::vector<std::vector<std::string>> rows;
            std::vector<std::string> header{"Alternative"};
            std::vector<std::string> directions{"direction"};
            for (std::size_t j = 0; j < n; ++j) {
                header.push_back(matrix.criterion(j).name);
                directions.push_back(direction_token(matrix.criterion(j).direction));
            }
            rows.push_back(header);
            rows.push_back(directions);
            for (std::size_t i = 0; i < m; ++i) {
                std::vector<std::string> row{matrix.alternative(i)};
                for (std::size_t j = 0; j < n; ++j)
                    row.push_back(format_value(matrix.at(i, j), full_precision));
                rows.push_back(row);
            }
            write_aligned(out, rows);
            break;
        }
        case ReportFormat::StructuredText: {
            out << "matrix\n";
            out << "  criteria:\n";
            for (std::size_t j = 0; j < n; ++j) {
                out << "    " << matrix.criterion(j).name << ": "
                    << direction_word(matrix.criterion(j).direction) << '\n';
            }
            out << "  alternatives:\n";
            for (std::size_t i = 0; i < m; ++i) {
                out << "    " << matrix.alternative(i) << ':';
                for (std::size_t j = 0; j < n; ++j)
                    out << ' ' << format_value(matrix.at(i, j), full_precision);
                out << '\n';
            }
            break;
        }
    }
    check_stream(out);
}

void emit_weights(const std::vector<WeightVector>& rows,
                  const std::vector<std::string>& criterion_names, ReportFormat format,
                  std::ostream& out, bool full_precision) {
    switch (format) {
        case ReportFormat::DelimitedValues: {
            out << "method";
            for (const std::string& name : criterion_names) out << ',' << name;
            out << '\n';
            for (const WeightVector& row : rows) {
                out << weight_method_name(row.method);
                for (double w : row.weights) out << ',' << format_value(w, full_precision);
                out << '\n';
            }
            break;
        }
        case ReportFormat::PlainTable: {
            std::vector<std::vector<std::string>> table;
            std::vector<std::string> header{"Method"};
            for (const std::string& name : criterion_names) header.push_back(name);
            table.push_back(header);
            for (const WeightVector& row : rows) {
                std::vector<std::string> cells{weight_method_name(row.method)};
                for (double w : row.weights) cells.push_back(format_value(w, full_precision));
                table.push_back(cells);
            }
            write_aligned(out, table);
            break;
        }
        case ReportFormat::StructuredText: {
            out << "weights\n";
            for (const WeightVector& row : rows) {
                out << "  method: " << weight_method_name(row.method) << '\n';
                for (std::size_t j = 0; j < row.weights.size(); ++j) {
                    out << "    " << criterion_names[j] << ": "
                        << format_value(row.weights[j], full_precision) << '\n';
                }
            }
            break;
        }
    }
    check_stream(out);
}

void emit_score_table(const ScoreTable& table, const std::vector<std::string>& alternatives,
                      ReportFormat format, std::ostream& out, bool full_precision) {
    const std::size_t m = table.scores.size();
    switch (format) {
        case ReportFormat::DelimitedValues: {
            out << "alternative,score,rank\n";
            for (std::size_t i = 0; i < m; ++i) {
                out << alternatives[i] << ',' << format_value(table.scores[i], full_precision)
                    << ',' << table.ranks.display[i] << '\n';
            }
            break;
        }
        case ReportFormat::PlainTable: {
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"Alternative", "Score", "Rank"});
            for (std::size_t i = 0; i < m; ++i) {
                rows.push_back({alternatives[i], format_value(table.scores[i], full_precision),
                                std::to_string(table.ranks.display[i])});
            }
            write_aligned(out, rows);
            break;
        }
        case ReportFormat::StructuredText: {
            out << "scores\n";
            out << "  ranking: " << ranking_method_name(table.ranking_method) << '\n';
            out << "  weighting: " << weight_method_name(table.weighting_method) << '\n';
            out << "  alternatives:\n";
            for (std::size_t i = 0; i < m; ++i) {
                out << "    " << alternatives[i] << ": score "
                    << format_value(table.scores[i], full_precision) << " rank "
                    << table.ranks.display[i] << '\n';
            }
            break;
        }
    }
    check_stream(out);
}

void emit_study(const StudyReport& report, const std::vector<std::string>& alternatives,
                const std::vector<std::string>& criterion_names, ReportFormat format,
                std::ostream& out, bool full_precision) {
    const std::size_t m = alternatives.size();
    const auto& weightings = kStudyWeightMethods;
    const auto& rankings = kStudyRankingMethods;

    switch (format) {
        case ReportFormat::DelimitedValues: {
            out << "weights,method";
            for (const std::string& name : criterion_names) out << ',' << name;
            out << '\n';
            for (const WeightVector& row : report.weights) {
                out << "weights," << weight_method_name(row.method);
                for (double w : row.weights) out << ',' << format_value(w, full_precision);
                out << '\n';
            }
            out << "scores,ranking,weighting,alternative,score,rank\n";
            for (const ScoreTable& table : report.tables) {
                for (std::size_t i = 0; i < m; ++i) {
                    out << "scores," << ranking_method_name(table.ranking_method) << ','
                        << weight_method_name(table.weighting_method) << ',' << alternatives[i]
                        << ',' << format_value(table.scores[i], full_precision) << ','
                        << table.ranks.display[i] << '\n';
                }
            }
            out << "r_score,ranking,weighting,value\n";
            for (std::size_t r = 0; r < rankings.size(); ++r) {
                for (std::size_t w = 0; w < weightings.size(); ++w) {
                    out << "r_score," << ranking_method_name(rankings[r]) << ','
                        << weight_method_name(weightings[w]) << ','
                        << format_value(report.r_scores[r][w], full_precision) << '\n';
                }
            }
            out << "spearman,ranking,weighting_a,weighting_b,value\n";
            for (std::size_t r = 0; r < rankings.size(); ++r) {
                const SpearmanMatrix& matrix = report.spearman_matrices[r];
                for (std::size_t a = 0; a < weightings.size(); ++a) {
                    for (std::size_t b = a + 1; b < weightings.size(); ++b) {
                        out << "spearman," << ranking_method_name(rankings[r]) << ','
                            << weight_method_name(weightings[a]) << ','
                            << weight_method_name(weightings[b]) << ','
                            << format_value(matrix.values[a][b], full_precision) << '\n';
                    }
                }
            }
            out << "spearman_average,ranking,value\n";
            for (std::size_t r = 0; r < rankings.size(); ++r) {
                out << "spearman_average," << ranking_method_name(rankings[r]) << ','
                    << format_value(report.spearman_averages[r], full_precision) << '\n';
            }
            break;
        }
        case ReportFormat::PlainTable: {
            out << "== criteria weights ==\n";
            emit_weights({report.weights.begin(), report.weights.end()}, criterion_names,
                         ReportFormat::PlainTable, out, full_precision);

            for (std::size_t r = 0; r < rankings.size(); ++r) {
                out << "\n== " << ranking_method_name(rankings[r]) << " scores and ranks ==\n";
                std::vector<std::vector<std::string>> rows;
                std::vector<std::string> header{"Alternative"};
                for (std::size_t w = 0; w < weightings.size(); ++w) {
                    header.push_back(weight_method_name(weightings[w]));
                    header.push_back("rank");
                }
                rows.push_back(header);
                for (std::size_t i = 0; i < m; ++i) {
                    std::vector<std::string> row{alternatives[i]};
                    for (std::size_t w = 0; w < weightings.size(); ++w) {
                        const ScoreTable& table = report.table(weightings[w], rankings[r]);
                        row.push_back(format_value(table.scores[i], full_precision));
                        row.push_back(std::to_string(table.ranks.display[i]));
                    }
                    rows.push_back(row);
                }
                write_aligned(out, rows);
            }

            out << "\n== r_score ==\n";
            {
                std::vector<std::vector<std::string>> rows;
                std::vector<std::string> header{"Method"};
                for (std::size_t w = 0; w < weightings.size(); ++w)
                    header.push_back(weight_method_name(weightings[w]));
                rows.push_back(header);
                for (std::size_t r = 0; r < rankings.size(); ++r) {
                    std::vector<std::string> row{ranking_method_name(rankings[r])};
                    for (std::size_t w = 0; w < weightings.size(); ++w)
                        row.push_back(format_value(report.r_scores[r][w], full_precision));
                    rows.push_back(row);
                }
                write_aligned(out, rows);
            }

            for (std::size_t r = 0; r < rankings.size(); ++r) {
                out << "\n== Spearman correlation (" << ranking_method_name(rankings[r])
                    << ") ==\n";
                const SpearmanMatrix& matrix = report.spearman_matrices[r];
                std::vector<std::vector<std::string>> rows;
                std::vector<std::string> header{""};
                for (std::size_t w = 0; w < weightings.size(); ++w)
                    header.push_back(weight_method_name(weightings[w]));
                rows.push_back(header);
                for (std::size_t a = 0; a < weightings.size(); ++a) {
                    std::vector<std::string> row{weight_method_name(weightings[a])};
                    for (std::size_t b = 0; b < weightings.size(); ++b)
                        row.push_back(format_value(matrix.values[a][b], full_precision));
                    rows.push_back(row);
                }
                rows.push_back({"Average", format_value(matrix.average, full_precision)});
                write_aligned(out, rows);
            }
            break;
        }
        case ReportFormat::StructuredText: {
            out << "study\n";
            for (std::size_t r = 0; r < rankings.size(); ++r) {
                out << "  ranking: " << ranking_method_name(rankings[r]) << '\n';
                for (std::size_t w = 0; w < weightings.size(); ++w) {
                    const ScoreTable& table = report.table(weightings[w], rankings[r]);
                    out << "    weighting: " << weight_method_name(weightings[w]) << '\n';
                    out << "      weights:";
                    for (double v : report.weights[w].weights)
                        out << ' ' << format_value(v, full_precision);
                    out << '\n';
                    out << "      r_score: " << format_value(report.r_scores[r][w], full_precision)
                        << '\n';
                    out << "      scores:\n";
                    for (std::size_t i = 0; i < m; ++i) {
                        out << "        " << alternatives[i] << ": "
                            << format_value(table.scores[i], full_precision) << " rank "
                            << table.ranks.display[i] << '\n';
                    }
                }
                const SpearmanMatrix& matrix = report.spearman_matrices[r];
                out << "    spearman:\n";
                for (std::size_t a = 0; a < weightings.size(); ++a) {
                    for (std::size_t b = a + 1; b < weightings.size(); ++b) {
                        out << "      " << weight_method_name(weightings[a]) << '-'
                            << weight_method_name(weightings[b]) << ": "
                            << format_value(matrix.values[a][b], full_precision) << '\n';
                    }
                }
                out << "    spearman_average: "
                    << format_value(matrix.average, full_precision) << '\n';
            }
            break;
        }
    }
    check_stream(out);
}

}  // namespace mcdm
