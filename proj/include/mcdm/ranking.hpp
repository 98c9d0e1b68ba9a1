#pragma once

#include <array>
#include <vector>

#include "mcdm/matrix.hpp"
#include "mcdm/weighting.hpp"

namespace mcdm {

enum class RankingMethod { Probability, Topsis, Ram };

inline constexpr std::array<RankingMethod, 3> kStudyRankingMethods = {
    RankingMethod::Probability,
    RankingMethod::Topsis,
    RankingMethod::Ram,
};

const char* ranking_method_name(RankingMethod method);

// Scores and derived ranks for one (weighting, ranking) combination. Ranks
// are always assigned descending: the best alternative has the largest score.
struct ScoreTable {
    RankingMethod ranking_method = RankingMethod::Probability;
    WeightMethod weighting_method = WeightMethod::External;
    std::vector<double> scores;
    RankVector ranks;
};

// Per-criterion best and worst of the weighted normalized values.
struct IdealPoints {
    std::vector<double> positive;
    std::vector<double> negative;
};

struct RamIntermediates {
    std::vector<double> benefit_sum;  // S+_i, weighted sum-normalized benefit part
    std::vector<double> cost_sum;     // S-_i, weighted sum-normalized cost part
};

// Weighted geometric product of per-criterion favorable-outcome
// probabilities. Benefit columns: P_ij = x_ij / sum_i x_ij; cost columns:
// P_ij = beta_j (max + min - x_ij) with beta_j = 1 / (m (max + min - mean)).
ScoreTable probability_scores(const DecisionMatrix& matrix, const WeightVector& weights);

// Closeness coefficient C_i = S-_i / (S+_i + S-_i) over Euclidean distances
// to the ideal points of the weighted vector-normalized matrix.
ScoreTable topsis_scores(const DecisionMatrix& matrix, const WeightVector& weights);

// Root assessment score RI_i = (2 + S+_i) ^ (1 / (2 + S-_i)) over the
// weighted sum-normalized matrix.
ScoreTable ram_scores(const DecisionMatrix& matrix, const WeightVector& weights);

ScoreTable compute_scores(RankingMethod method, const DecisionMatrix& matrix,
                          const WeightVector& weights);

// Per-criterion favorable-outcome probabilities P_ij; every column sums to 1.
Grid probability_details(const DecisionMatrix& matrix);

IdealPoints topsis_ideals(const DecisionMatrix& matrix, const WeightVector& weights);

RamIntermediates ram_details(const DecisionMatrix& matrix, const WeightVector& weights);

}  // namespace mcdm
