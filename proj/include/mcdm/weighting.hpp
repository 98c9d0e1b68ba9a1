#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "mcdm/matrix.hpp"

namespace mcdm {

enum class WeightMethod { Equal, Entropy, Merec, Lopcow, Spc, External };

// The five data-driven methods, in study order.
inline constexpr std::array<WeightMethod, 5> kStudyWeightMethods = {
    WeightMethod::Equal,  WeightMethod::Entropy, WeightMethod::Merec,
    WeightMethod::Lopcow, WeightMethod::Spc,
};

const char* weight_method_name(WeightMethod method);

// n non-negative weights summing to 1, tagged with the producing method.
struct WeightVector {
    WeightMethod method = WeightMethod::External;
    std::vector<double> weights;
};

// Per-step values exposed for diagnostics and golden testing.
struct EntropyIntermediates {
    Grid n;                 // x_ij / (m + sum_i x_ij^2), per column
    std::vector<double> e;  // per-criterion entropy measure
};

struct MerecIntermediates {
    Grid n;                        // benefit: min/x; cost: x/max
    std::vector<double> overall;   // S_i, ln(1 + mean |ln n_ij|)
    Grid without;                  // S'_ij, criterion j removed from the mean
    std::vector<double> effect;    // E_j = sum_i |S'_ij - S_i|
};

struct LopcowIntermediates {
    std::vector<double> pv;  // |ln(rms of min-max column / column std dev)| * 100
};

struct SpcIntermediates {
    std::vector<double> symmetry_point;  // (max + min) / 2 per column
    Grid deviation;                      // |x_ij - symmetry point|
    Grid relative;                       // column deviation sum / (m * x_ij)
    std::vector<double> mean_relative;   // q_j, column mean of relative
};

WeightVector equal_weights(std::size_t criterion_count);
WeightVector entropy_weights(const DecisionMatrix& matrix);
WeightVector merec_weights(const DecisionMatrix& matrix);
WeightVector lopcow_weights(const DecisionMatrix& matrix);
WeightVector spc_weights(const DecisionMatrix& matrix);

WeightVector compute_weights(WeightMethod method, const DecisionMatrix& matrix);

EntropyIntermediates entropy_details(const DecisionMatrix& matrix);
MerecIntermediates merec_details(const DecisionMatrix& matrix);
LopcowIntermediates lopcow_details(const DecisionMatrix& matrix);
SpcIntermediates spc_details(const DecisionMatrix& matrix);

}  // namespace mcdm
