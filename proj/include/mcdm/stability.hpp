#pragma once

#include <array>
#include <vector>

#include "mcdm/ranking.hpp"

namespace mcdm {

// max(scores) / min(scores); lower means a more compressed, stabler spread.
double r_score(const std::vector<double>& scores);

// S = 1 - 6 sum D_i^2 / (m (m^2 - 1)) over two average-rank vectors.
double spearman(const std::vector<double>& ranks_a, const std::vector<double>& ranks_b);

// Symmetric correlation matrix over a set of score tables that share one
// ranking method, plus the mean of the distinct off-diagonal pairs.
struct SpearmanMatrix {
    RankingMethod ranking_method = RankingMethod::Probability;
    std::vector<WeightMethod> weighting_methods;
    std::vector<std::vector<double>> values;
    double average = 1.0;
};

SpearmanMatrix pairwise_spearman(const std::vector<ScoreTable>& tables);

// Full cross-product study: five weight vectors, fifteen score tables
// (weighting-major, ranking-minor), the ranking x weighting r_score grid,
// and one Spearman matrix per ranking method.
struct StudyReport {
    std::array<WeightVector, 5> weights;
    std::vector<ScoreTable> tables;
    std::array<std::array<double, 5>, 3> r_scores;
    std::array<SpearmanMatrix, 3> spearman_matrices;
    std::array<double, 3> spearman_averages;

    const ScoreTable& table(WeightMethod weighting, RankingMethod ranking) const;
};

StudyReport run_study(const DecisionMatrix& matrix);

}  // namespace mcdm
