#include "mcdm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace mcdm {

std::vector<double> DecisionMatrix::column(std::size_t j) const {
    std::vector<double> out(alternative_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i][j];
    return out;
}

std::vector<std::string> DecisionMatrix::criterion_names() const {
    std::vector<std::string> out;
    out.reserve(criteria_.size());
    for (const auto& spec : criteria_) out.push_back(spec.name);
    return out;
}

DecisionMatrix validate_matrix(RawMatrix raw) {
    const std::size_t m = raw.alternatives.size();
    const std::size_t n = raw.criteria.size();

    if (n == 0) {
        throw Error(ErrorCode::EmptyMatrix, "matrix has no criteria");
    }
    if (m < 2) {
        throw Error(ErrorCode::EmptyMatrix,
                    "matrix needs at least 2 alternatives, got " + std::to_string(m));
    }
    if (raw.values.size() != m) {
        throw Error(ErrorCode::RaggedRows,
                    "expected " + std::to_string(m) + " value rows, got " +
                        std::to_string(raw.values.size()));
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (raw.values[i].size() != n) {
            throw Error(ErrorCode::RaggedRows,
                        "row \"" + raw.alternatives[i] + "\" has " +
                            std::to_string(raw.values[i].size()) + " cells, expected " +
                            std::to_string(n));
        }
    }

    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < m; ++i) {
        const std::string& label = raw.alternatives[i];
        if (label.empty()) {
            throw Error(ErrorCode::DuplicateLabel,
                        "alternative " + std::to_string(i + 1) + " has an empty label");
        }
        if (!seen.insert(label).second) {
            throw Error(ErrorCode::DuplicateLabel, "duplicate alternative label \"" + label + "\"");
        }
    }
    seen.clear();
    for (std::size_t j = 0; j < n; ++j) {
        const std::string& name = raw.criteria[j].name;
        if (name.empty()) {
            throw Error(ErrorCode::DuplicateLabel,
                        "criterion " + std::to_string(j + 1) + " has an empty name");
        }
        if (!seen.insert(name).second) {
            throw Error(ErrorCode::DuplicateLabel, "duplicate criterion name \"" + name + "\"");
        }
    }

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = raw.values[i][j];
            if (!std::isfinite(v) || v <= 0.0) {
                throw Error(ErrorCode::NonPositiveEntry,
                            "entry (" + raw.alternatives[i] + ", " + raw.criteria[j].name +
                                ") = " + std::to_string(v) + " is not strictly positive");
            }
        }
    }

    for (std::size_t j = 0; j < n; ++j) {
        double lo = raw.values[0][j];
        double hi = lo;
        for (std::size_t i = 1; i < m; ++i) {
            lo = std::min(lo, raw.values[i][j]);
            hi = std::max(hi, raw.values[i][j]);
        }
        if (lo == hi) {
            throw Error(ErrorCode::ConstantColumn,
                        "criterion \"" + raw.criteria[j].name + "\" is constant");
        }
    }

    DecisionMatrix matrix;
    matrix.alternatives_ = std::move(raw.alternatives);
    matrix.criteria_ = std::move(raw.criteria);
    matrix.values_ = std::move(raw.values);
    return matrix;
}

Grid sum_normalize(const DecisionMatrix& matrix) {
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();
    Grid out(m, std::vector<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        double total = 0.0;
        for (std::size_t i = 0; i < m; ++i) total += matrix.at(i, j);
        for (std::size_t i = 0; i < m; ++i) out[i][j] = matrix.at(i, j) / total;
    }
    return out;
}

Grid vector_normalize(const DecisionMatrix& matrix) {
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();
    Grid out(m, std::vector<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        double sq = 0.0;
        for (std::size_t i = 0; i < m; ++i) sq += matrix.at(i, j) * matrix.at(i, j);
        const double norm = std::sqrt(sq);
        for (std::size_t i = 0; i < m; ++i) out[i][j] = matrix.at(i, j) / norm;
    }
    return out;
}

Grid minmax_normalize(const DecisionMatrix& matrix) {
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();
    Grid out(m, std::vector<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        double lo = matrix.at(0, j);
        double hi = lo;
        for (std::size_t i = 1; i < m; ++i) {
            lo = std::min(lo, matrix.at(i, j));
            hi = std::max(hi, matrix.at(i, j));
        }
        const double range = hi - lo;
        for (std::size_t i = 0; i < m; ++i) {
            if (matrix.criterion(j).direction == Direction::Benefit) {
                out[i][j] = (matrix.at(i, j) - lo) / range;
            } else {
                out[i][j] = (hi - matrix.at(i, j)) / range;
            }
        }
    }
    return out;
}

RankVector assign_ranks(const std::vector<double>& scores, RankOrder order) {
    const std::size_t m = scores.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (!std::isfinite(scores[i])) {
            throw Error(ErrorCode::NonFiniteScore,
                        "score " + std::to_string(i + 1) + " is not finite");
        }
    }

    // Sort indices best-first; equal scores keep their original order, which
    // settles the integer display ranks.
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return order == RankOrder::Descending ? scores[a] > scores[b] : scores[a] < scores[b];
    });

    RankVector out;
    out.average.assign(m, 0.0);
    out.display.assign(m, 0);
    for (std::size_t pos = 0; pos < m; ++pos) out.display[idx[pos]] = static_cast<int>(pos) + 1;

    // Tied runs share the mean of the positions they span.
    std::size_t run = 0;
    while (run < m) {
        std::size_t end = run + 1;
        while (end < m && scores[idx[end]] == scores[idx[run]]) ++end;
        const double mean_rank = (static_cast<double>(run + 1) + static_cast<double>(end)) / 2.0;
        for (std::size_t pos = run; pos < end; ++pos) out.average[idx[pos]] = mean_rank;
        run = end;
    }
    return out;
}

}  // namespace mcdm
