#include "mcdm/ranking.hpp"

#include <cmath>
#include <string>

namespace mcdm {

namespace {

void check_weights(const DecisionMatrix& matrix, const WeightVector& weights) {
    if (weights.weights.size() != matrix.criterion_count()) {
        throw Error(ErrorCode::LengthMismatch,
                    "weight vector has " + std::to_string(weights.weights.size()) +
                        " entries for " + std::to_string(matrix.criterion_count()) +
                        " criteria");
    }
    double total = 0.0;
    for (double w : weights.weights) {
        if (!(w >= 0.0)) {
            throw Error(ErrorCode::InvalidWeights, "negative weight " + std::to_string(w));
        }
        total += w;
    }
    if (std::fabs(total - 1.0) > 1e-9) {
        throw Error(ErrorCode::InvalidWeights,
                    "weights sum to " + std::to_string(total) + ", expected 1");
    }
}

ScoreTable make_table(RankingMethod ranking, WeightMethod weighting,
                      std::vector<double> scores) {
    ScoreTable table;
    table.ranking_method = ranking;
    table.weighting_method = weighting;
    table.ranks = assign_ranks(scores, RankOrder::Descending);
    table.scores = std::move(scores);
    return table;
}

}  // namespace

const char* ranking_method_name(RankingMethod method) {
    switch (method) {
        case RankingMethod::Probability: return "Probability";
        case RankingMethod::Topsis: return "TOPSIS";
        case RankingMethod::Ram: return "RAM";
    }
    return "Unknown";
}

Grid probability_details(const DecisionMatrix& matrix) {
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();
    Grid p(m, std::vector<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        const std::vector<double> c = matrix.column(j);
        if (matrix.criterion(j).direction == Direction::Benefit) {
            double total = 0.0;
            for (double v : c) total += v;
            for (std::size_t i = 0; i < m; ++i) p[i][j] = c[i] / total;
        } else {
            double lo = c[0];
            double hi = c[0];
            double mean = 0.0;
            for (double v : c) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
                mean += v;
            }
            mean /= static_cast<double>(m);
            const double beta = 1.0 / (static_cast<double>(m) * (hi + lo - mean));
            for (std::size_t i = 0; i < m; ++i) p[i][j] = beta * (hi + lo - c[i]);
        }
    }
    return p;
}

ScoreTable probability_scores(const DecisionMatrix& matrix, const WeightVector& weights) {
    check_weights(matrix, weights);
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();
    const Grid p = probability_details(matrix);
    std::vector<double> scores(m, 1.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            scores[i] *= std::pow(p[i][j], weights.weights[j]);
        }
    }
    return make_table(RankingMethod::Probability, weights.method, std::move(scores));
}

IdealPoints topsis_ideals(const DecisionMatrix& matrix, const WeightVector& weights) {
    check_weights(matrix, weights);
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();
    const Grid norm = vector_normalize(matrix);
    IdealPoints ideals;
    ideals.positive.assign(n, 0.0);
    ideals.negative.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double lo = weights.weights[j] * norm[0][j];
        double hi = lo;
        for (std::size_t i = 1; i < m; ++i) {
            const double y = weights.weights[j] * norm[i][j];
            lo = std::min(lo, y);
            hi = std::max(hi, y);
        }
        if (matrix.criterion(j).direction == Direction::Benefit) {
            ideals.positive[j] = hi;
            ideals.negative[j] = lo;
        } else {
            ideals.positive[j] = lo;
            ideals.negative[j] = hi;
        }
    }
    return ideals;
}

ScoreTable topsis_scores(const DecisionMatrix& matrix, const WeightVector& weights) {
    check_weights(matrix, weights);
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();
    const Grid norm = vector_normalize(matrix);
    const IdealPoints ideals = topsis_ideals(matrix, weights);
    std::vector<double> scores(m);
    for (std::size_t i = 0; i < m; ++i) {
        double to_positive = 0.0;
        double to_negative = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double y = weights.weights[j] * norm[i][j];
            to_positive += (y - ideals.positive[j]) * (y - ideals.positive[j]);
            to_negative += (y - ideals.negative[j]) * (y - ideals.negative[j]);
        }
        to_positive = std::sqrt(to_positive);
        to_negative = std::sqrt(to_negative);
        if (to_positive + to_negative == 0.0) {
            throw Error(ErrorCode::DegenerateDistances,
                        "alternative " + matrix.alternative(i) +
                            " is at zero distance from both ideal points");
        }
        scores[i] = to_negative / (to_positive + to_negative);
    }
    return make_table(RankingMethod::Topsis, weights.method, std::move(scores));
}

RamIntermediates ram_details(const DecisionMatrix& matrix, const WeightVector& weights) {
    check_weights(matrix, weights);
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();
    const Grid norm = sum_normalize(matrix);
    RamIntermediates out;
    out.benefit_sum.assign(m, 0.0);
    out.cost_sum.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double y = weights.weights[j] * norm[i][j];
            if (matrix.criterion(j).direction == Direction::Benefit) {
                out.benefit_sum[i] += y;
            } else {
                out.cost_sum[i] += y;
            }
        }
    }
    return out;
}

ScoreTable ram_scores(const DecisionMatrix& matrix, const WeightVector& weights) {
    const RamIntermediates sums = ram_details(matrix, weights);
    const std::size_t m = matrix.alternative_count();
    std::vector<double> scores(m);
    for (std::size_t i = 0; i < m; ++i) {
        scores[i] = std::pow(2.0 + sums.benefit_sum[i], 1.0 / (2.0 + sums.cost_sum[i]));
    }
    return make_table(RankingMethod::Ram, weights.method, std::move(scores));
}

ScoreTable compute_scores(RankingMethod method, const DecisionMatrix& matrix,
                          const WeightVector& weights) {
    switch (method) {
        case RankingMethod::Probability: return probability_scores(matrix, weights);
        case RankingMethod::Topsis: return topsis_scores(matrix, weights);
        case RankingMethod::Ram: return ram_scores(matrix, weights);
    }
    throw Error(ErrorCode::LengthMismatch, "unknown ranking method");
}

}  // namespace mcdm
