#include "mcdm/stability.hpp"

#include <algorithm>
#include <string>

namespace mcdm {

double r_score(const std::vector<double>& scores) {
    if (scores.empty()) {
        throw Error(ErrorCode::EmptyMatrix, "r_score of an empty score list");
    }
    double lo = scores[0];
    double hi = scores[0];
    for (double s : scores) {
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    if (lo == 0.0) {
        throw Error(ErrorCode::ZeroMinScore, "minimum score is zero");
    }
    return hi / lo;
}

double spearman(const std::vector<double>& ranks_a, const std::vector<double>& ranks_b) {
    if (ranks_a.size() != ranks_b.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "rank vectors have sizes " + std::to_string(ranks_a.size()) + " and " +
                        std::to_string(ranks_b.size()));
    }
    const double m = static_cast<double>(ranks_a.size());
    double sq_diff = 0.0;
    for (std::size_t i = 0; i < ranks_a.size(); ++i) {
        const double d = ranks_a[i] - ranks_b[i];
        sq_diff += d * d;
    }
    return 1.0 - 6.0 * sq_diff / (m * (m * m - 1.0));
}

SpearmanMatrix pairwise_spearman(const std::vector<ScoreTable>& tables) {
    if (tables.empty()) {
        throw Error(ErrorCode::EmptyMatrix, "no score tables to correlate");
    }
    for (const ScoreTable& t : tables) {
        if (t.ranking_method != tables[0].ranking_method) {
            throw Error(ErrorCode::MixedRankingMethods,
                        "tables mix ranking methods " +
                            std::string(ranking_method_name(tables[0].ranking_method)) + " and " +
                            ranking_method_name(t.ranking_method));
        }
        if (t.scores.size() != tables[0].scores.size()) {
            throw Error(ErrorCode::MixedAlternativeSets,
                        "tables rank " + std::to_string(tables[0].scores.size()) + " and " +
                            std::to_string(t.scores.size()) + " alternatives");
        }
    }

    const std::size_t k = tables.size();
    SpearmanMatrix out;
    out.ranking_method = tables[0].ranking_method;
    for (const ScoreTable& t : tables) out.weighting_methods.push_back(t.weighting_method);
    out.values.assign(k, std::vector<double>(k, 1.0));
    double total = 0.0;
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            const double s = spearman(tables[a].ranks.average, tables[b].ranks.average);
            out.values[a][b] = s;
            out.values[b][a] = s;
            total += s;
            ++pairs;
        }
    }
    out.average = pairs == 0 ? 1.0 : total / static_cast<double>(pairs);
    return out;
}

const ScoreTable& StudyReport::table(WeightMethod weighting, RankingMethod ranking) const {
    for (const ScoreTable& t : tables) {
        if (t.weighting_method == weighting && t.ranking_method == ranking) return t;
    }
    throw Error(ErrorCode::EmptyMatrix, "study holds no such combination");
}

StudyReport run_study(const DecisionMatrix& matrix) {
    StudyReport report;
    for (std::size_t w = 0; w < kStudyWeightMethods.size(); ++w) {
        report.weights[w] = compute_weights(kStudyWeightMethods[w], matrix);
    }

    report.tables.reserve(kStudyWeightMethods.size() * kStudyRankingMethods.size());
    for (std::size_t w = 0; w < kStudyWeightMethods.size(); ++w) {
        for (std::size_t r = 0; r < kStudyRankingMethods.size(); ++r) {
            try {
                report.tables.push_back(
                    compute_scores(kStudyRankingMethods[r], matrix, report.weights[w]));
            } catch (const Error& err) {
                throw Error(err.code(),
                            std::string(weight_method_name(kStudyWeightMethods[w])) + "+" +
                                ranking_method_name(kStudyRankingMethods[r]) + ": " + err.what());
            }
        }
    }

    for (std::size_t r = 0; r < kStudyRankingMethods.size(); ++r) {
        std::vector<ScoreTable> per_ranking;
        for (std::size_t w = 0; w < kStudyWeightMethods.size(); ++w) {
            const ScoreTable& t = report.table(kStudyWeightMethods[w], kStudyRankingMethods[r]);
            try {
                report.r_scores[r][w] = r_score(t.scores);
            } catch (const Error& err) {
                throw Error(err.code(),
                            std::string(weight_method_name(kStudyWeightMethods[w])) + "+" +
                                ranking_method_name(kStudyRankingMethods[r]) + ": " + err.what());
            }
            per_ranking.push_back(t);
        }
        report.spearman_matrices[r] = pairwise_spearman(per_ranking);
        report.spearman_averages[r] = report.spearman_matrices[r].average;
    }
    return report;
}

}  // namespace mcdm
