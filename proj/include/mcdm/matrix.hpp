#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mcdm/errors.hpp"

namespace mcdm {

enum class Direction { Benefit, Cost };

struct CriterionSpec {
    std::string name;
    Direction direction = Direction::Benefit;
};

// Row-major value grid: one inner vector per alternative.
using Grid = std::vector<std::vector<double>>;

// Unvalidated input as read from a file or assembled in code.
struct RawMatrix {
    std::vector<std::string> alternatives;
    std::vector<CriterionSpec> criteria;
    Grid values;
};

// Validated decision matrix: m alternatives x n criteria, every entry
// strictly positive, no constant column. Immutable once constructed, so all
// downstream methods can share one instance.
class DecisionMatrix {
  public:
    std::size_t alternative_count() const { return alternatives_.size(); }
    std::size_t criterion_count() const { return criteria_.size(); }

    double at(std::size_t i, std::size_t j) const { return values_[i][j]; }
    const std::string& alternative(std::size_t i) const { return alternatives_[i]; }
    const CriterionSpec& criterion(std::size_t j) const { return criteria_[j]; }

    const std::vector<std::string>& alternatives() const { return alternatives_; }
    const std::vector<CriterionSpec>& criteria() const { return criteria_; }
    const Grid& values() const { return values_; }

    std::vector<double> column(std::size_t j) const;
    std::vector<std::string> criterion_names() const;

    friend DecisionMatrix validate_matrix(RawMatrix raw);

  private:
    DecisionMatrix() = default;

    std::vector<std::string> alternatives_;
    std::vector<CriterionSpec> criteria_;
    Grid values_;
};

// Checks all DecisionMatrix invariants and reports the offending row or
// column on failure.
DecisionMatrix validate_matrix(RawMatrix raw);

// r_ij = x_ij / sum_i x_ij; every column sums to 1.
Grid sum_normalize(const DecisionMatrix& matrix);

// n_ij = x_ij / sqrt(sum_i x_ij^2); every column has Euclidean norm 1.
Grid vector_normalize(const DecisionMatrix& matrix);

// Benefit: (x - min)/(max - min); cost: (max - x)/(max - min). Every column
// attains both 0 and 1.
Grid minmax_normalize(const DecisionMatrix& matrix);

enum class RankOrder { Descending, Ascending };

// Average ranks feed the correlation math (tied entries share the mean of
// the positions they span); display ranks are the integers shown in reports,
// with ties broken by lower alternative index.
struct RankVector {
    std::vector<double> average;
    std::vector<int> display;
};

RankVector assign_ranks(const std::vector<double>& scores, RankOrder order);

}  // namespace mcdm
