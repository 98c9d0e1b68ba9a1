#include "mcdm/io.hpp"

namespace mcdm {

namespace {

// 19 banks evaluated on five benefit criteria (C1..C5) and two cost criteria
// (C6, C7). The B14 C7 value is stored as 0.1301: the source material prints
// 1.3010 there, which contradicts both its own column-minimum summary row
// (0.1301) and its statement that B14 holds a C7 minimum, so the printed
// figure is a decimal-shift misprint. Every reference table reproduced by the
// test suite requires 0.1301.
constexpr double kReferenceValues[19][7] = {
    {0.5478, 0.7281, 0.0876, 0.0178, 0.2029, 0.0428, 0.5958},  // B1
    {0.5673, 0.8457, 0.0636, 0.0143, 0.2245, 0.0395, 0.7062},  // B2
    {0.5556, 0.8403, 0.1359, 0.0437, 0.3216, 0.0184, 0.3788},  // B3
    {0.6053, 0.7942, 0.0645, 0.0106, 0.1642, 0.0704, 1.4085},  // B4
    {0.5810, 0.8466, 0.1325, 0.0508, 0.3832, 0.0143, 0.3169},  // B5
    {0.5455, 0.8984, 0.1139, 0.0476, 0.4178, 0.0152, 0.2926},  // B6
    {0.5212, 0.8249, 0.1429, 0.0558, 0.3908, 0.0118, 0.2119},  // B7
    {0.6007, 0.9168, 0.0736, 0.0286, 0.3891, 0.0253, 0.6634},  // B8
    {0.5721, 0.8514, 0.1036, 0.0326, 0.3150, 0.0391, 0.7652},  // B9
    {0.5427, 0.7452, 0.0921, 0.0407, 0.4416, 0.0400, 0.7795},  // B10
    {0.6327, 0.9294, 0.1368, 0.0266, 0.1943, 0.0564, 1.1381},  // B11
    {0.4423, 0.5461, 0.0843, 0.0342, 0.4064, 0.0232, 0.6126},  // B12
    {0.5334, 0.8436, 0.0879, 0.0360, 0.4099, 0.0165, 0.7408},  // B13
    {0.4716, 0.6609, 0.0731, 0.0124, 0.1693, 0.0563, 0.1301},  // B14
    {0.5656, 0.7648, 0.0742, 0.0238, 0.3199, 0.1584, 2.2814},  // B15
    {0.4436, 1.1095, 0.0474, 0.0217, 0.4579, 0.0296, 0.5734},  // B16
    {0.6363, 0.9184, 0.0881, 0.0208, 0.2359, 0.0266, 0.8488},  // B17
    {0.5976, 1.0592, 0.0678, 0.0179, 0.2635, 0.0321, 0.8248},  // B18
    {0.5463, 0.7063, 0.1757, 0.0488, 0.2781, 0.0604, 0.8705},  // B19
};

}  // namespace

DecisionMatrix load_reference_dataset() {
    RawMatrix raw;
    for (int i = 0; i < 19; ++i) {
        raw.alternatives.push_back("B" + std::to_string(i + 1));
        raw.values.emplace_back(kReferenceValues[i], kReferenceValues[i] + 7);
    }
    for (int j = 0; j < 7; ++j) {
        raw.criteria.push_back({"C" + std::to_string(j + 1),
                                j < 5 ? Direction::Benefit : Direction::Cost});
    }
    return validate_matrix(std::move(raw));
}

}  // namespace mcdm
