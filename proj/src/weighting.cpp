#include "mcdm/weighting.hpp"

#include <cmath>

namespace mcdm {

namespace {

WeightVector normalize_to_simplex(WeightMethod method, const std::vector<double>& raw) {
    double total = 0.0;
    for (double v : raw) total += v;
    WeightVector out;
    out.method = method;
    out.weights.reserve(raw.size());
    for (double v : raw) out.weights.push_back(v / total);
    return out;
}

double population_stddev(const std::vector<double>& values) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values) sq += (v - mean) * (v - mean);
    return std::sqrt(sq / static_cast<double>(values.size()));
}

}  // namespace

const char* weight_method_name(WeightMethod method) {
    switch (method) {
        case WeightMethod::Equal: return "Equal";
        case WeightMethod::Entropy: return "Entropy";
        case WeightMethod::Merec: return "MEREC";
        case WeightMethod::Lopcow: return "LOPCOW";
        case WeightMethod::Spc: return "SPC";
        case WeightMethod::External: return "External";
    }
    return "Unknown";
}

WeightVector equal_weights(std::size_t criterion_count) {
    if (criterion_count == 0) {
        throw Error(ErrorCode::ZeroCriteria, "cannot weight zero criteria");
    }
    WeightVector out;
    out.method = WeightMethod::Equal;
    out.weights.assign(criterion_count, 1.0 / static_cast<double>(criterion_count));
    return out;
}

EntropyIntermediates entropy_details(const DecisionMatrix& matrix) {
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();
    EntropyIntermediates out;
    out.n.assign(m, std::vector<double>(n));
    out.e.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double denom = static_cast<double>(m);
        for (std::size_t i = 0; i < m; ++i) denom += matrix.at(i, j) * matrix.at(i, j);
        double col_sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            out.n[i][j] = matrix.at(i, j) / denom;
            col_sum += out.n[i][j];
        }
        double e = 0.0;
        for (std::size_t i = 0; i < m; ++i) e += out.n[i][j] * std::log(out.n[i][j]);
        e -= (1.0 - col_sum) * std::log(1.0 - col_sum);
        out.e[j] = e;
    }
    return out;
}

WeightVector entropy_weights(const DecisionMatrix& matrix) {
    const EntropyIntermediates details = entropy_details(matrix);
    std::vector<double> raw;
    raw.reserve(details.e.size());
    for (double e : details.e) raw.push_back(1.0 - e);
    return normalize_to_simplex(WeightMethod::Entropy, raw);
}

MerecIntermediates merec_details(const DecisionMatrix& matrix) {
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();
    MerecIntermediates out;
    out.n.assign(m, std::vector<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        const std::vector<double> c = matrix.column(j);
        if (matrix.criterion(j).direction == Direction::Benefit) {
            double lo = c[0];
            for (double v : c) lo = std::min(lo, v);
            for (std::size_t i = 0; i < m; ++i) out.n[i][j] = lo / c[i];
        } else {
            double hi = c[0];
            for (double v : c) hi = std::max(hi, v);
            for (std::size_t i = 0; i < m; ++i) out.n[i][j] = c[i] / hi;
        }
    }

    // Overall performance of each alternative, and the same measure with one
    // criterion's contribution removed from the mean.
    const double inv_n = 1.0 / static_cast<double>(n);
    out.overall.assign(m, 0.0);
    out.without.assign(m, std::vector<double>(n));
    for (std::size_t i = 0; i < m; ++i) {
        double abs_log_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) abs_log_sum += std::fabs(std::log(out.n[i][j]));
        out.overall[i] = std::log(1.0 + inv_n * abs_log_sum);
        for (std::size_t j = 0; j < n; ++j) {
            const double reduced = abs_log_sum - std::fabs(std::log(out.n[i][j]));
            out.without[i][j] = std::log(1.0 + inv_n * reduced);
        }
    }

    out.effect.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            out.effect[j] += std::fabs(out.without[i][j] - out.overall[i]);
        }
    }
    return out;
}

WeightVector merec_weights(const DecisionMatrix& matrix) {
    return normalize_to_simplex(WeightMethod::Merec, merec_details(matrix).effect);
}

LopcowIntermediates lopcow_details(const DecisionMatrix& matrix) {
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();
    const Grid r = minmax_normalize(matrix);
    LopcowIntermediates out;
    out.pv.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double sq = 0.0;
        for (std::size_t i = 0; i < m; ++i) sq += r[i][j] * r[i][j];
        const double rms = std::sqrt(sq / static_cast<double>(m));
        const double sigma = population_stddev(matrix.column(j));
        out.pv[j] = std::fabs(std::log(rms / sigma)) * 100.0;
    }
    return out;
}

WeightVector lopcow_weights(const DecisionMatrix& matrix) {
    const LopcowIntermediates details = lopcow_details(matrix);
    double total = 0.0;
    for (double pv : details.pv) total += pv;
    if (total == 0.0) {
        throw Error(ErrorCode::DegeneratePV, "every percentage value is zero");
    }
    return normalize_to_simplex(WeightMethod::Lopcow, details.pv);
}

SpcIntermediates spc_details(const DecisionMatrix& matrix) {
    const std::size_t m = matrix.alternative_count();
    const std::size_t n = matrix.criterion_count();
    SpcIntermediates out;
    out.symmetry_point.assign(n, 0.0);
    out.deviation.assign(m, std::vector<double>(n));
    out.relative.assign(m, std::vector<double>(n));
    out.mean_relative.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const std::vector<double> c = matrix.column(j);
        double lo = c[0];
        double hi = c[0];
        for (double v : c) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        out.symmetry_point[j] = (hi + lo) / 2.0;

        double deviation_sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            out.deviation[i][j] = std::fabs(c[i] - out.symmetry_point[j]);
            deviation_sum += out.deviation[i][j];
        }
        double q = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            out.relative[i][j] = deviation_sum / (static_cast<double>(m) * c[i]);
            q += out.relative[i][j];
        }
        out.mean_relative[j] = q / static_cast<double>(m);
    }
    return out;
}

WeightVector spc_weights(const DecisionMatrix& matrix) {
    return normalize_to_simplex(WeightMethod::Spc, spc_details(matrix).mean_relative);
}

WeightVector compute_weights(WeightMethod method, const DecisionMatrix& matrix) {
    switch (method) {
        case WeightMethod::Equal: return equal_weights(matrix.criterion_count());
        case WeightMethod::Entropy: return entropy_weights(matrix);
        case WeightMethod::Merec: return merec_weights(matrix);
        case WeightMethod::Lopcow: return lopcow_weights(matrix);
        case WeightMethod::Spc: return spc_weights(matrix);
        case WeightMethod::External: break;
    }
    throw Error(ErrorCode::InvalidWeights, "external weights cannot be computed from a matrix");
}

}  // namespace mcdm
