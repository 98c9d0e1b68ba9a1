#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mcdm/matrix.hpp"
#include "mcdm/ranking.hpp"
#include "mcdm/stability.hpp"
#include "mcdm/weighting.hpp"

namespace mcdm {

enum class ReportFormat { PlainTable, DelimitedValues, StructuredText };

// Expected file layout (comma-separated, UTF-8, dot decimal separator):
//   row 1: label header cell, then one name per criterion
//   row 2: ignored first cell, then a direction token per criterion
//          (max/benefit/b or min/cost/c, case-insensitive)
//   rows 3..: alternative label, then one numeric cell per criterion
// Metadata rows such as a max/min summary line are rejected.
DecisionMatrix parse_matrix_file(std::istream& in);
DecisionMatrix parse_matrix_file(const std::string& path);

// The bundled 19-bank, 7-criterion reference dataset (C1..C5 benefit,
// C6..C7 cost).
DecisionMatrix load_reference_dataset();

// Matrix output. DelimitedValues always carries full-precision values so a
// re-parse reproduces the matrix exactly; the other formats honor
// full_precision and otherwise show 4 decimals.
void emit_matrix(const DecisionMatrix& matrix, ReportFormat format, std::ostream& out,
                 bool full_precision = false);

void emit_weights(const std::vector<WeightVector>& rows,
                  const std::vector<std::string>& criterion_names, ReportFormat format,
                  std::ostream& out, bool full_precision = false);

void emit_score_table(const ScoreTable& table, const std::vector<std::string>& alternatives,
                      ReportFormat format, std::ostream& out, bool full_precision = false);

void emit_study(const StudyReport& report, const std::vector<std::string>& alternatives,
                const std::vector<std::string>& criterion_names, ReportFormat format,
                std::ostream& out, bool full_precision = false);

// Fixed 4-decimal display form.
std::string format_fixed(double value);

// Shortest decimal form that round-trips to the same double.
std::string format_full(double value);

}  // namespace mcdm
