#include <cmath>
#include <functional>
#include <limits>

#include "doctest.h"
#include "mcdm/matrix.hpp"
#include "test_support.hpp"

using mcdm::Direction;
using mcdm::Error;
using mcdm::ErrorCode;
using mcdm::RankOrder;
using mcdm_test::make_matrix;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an mcdm::Error");
    return ErrorCode::EmptyMatrix;
}

}  // namespace

TEST_CASE("validate_matrix accepts a well-formed grid") {
    const auto matrix = make_matrix({{1.0, 2.0}, {3.0, 4.0}}, "bc");
    CHECK(matrix.alternative_count() == 2);
    CHECK(matrix.criterion_count() == 2);
    CHECK(matrix.at(1, 0) == 3.0);
    CHECK(matrix.criterion(1).direction == Direction::Cost);
    CHECK(matrix.column(1) == std::vector<double>{2.0, 4.0});
}

TEST_CASE("validate_matrix rejects non-positive entries") {
    CHECK(code_of([] { make_matrix({{1.0, 2.0}, {0.0, 4.0}}, "bb"); }) ==
          ErrorCode::NonPositiveEntry);
    CHECK(code_of([] { make_matrix({{1.0, 2.0}, {-3.0, 4.0}}, "bb"); }) ==
          ErrorCode::NonPositiveEntry);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK(code_of([=] { make_matrix({{1.0, 2.0}, {nan, 4.0}}, "bb"); }) ==
          ErrorCode::NonPositiveEntry);
}

TEST_CASE("validate_matrix rejects constant columns") {
    CHECK(code_of([] { make_matrix({{5.0, 1.0}, {5.0, 2.0}, {5.0, 3.0}}, "bb"); }) ==
          ErrorCode::ConstantColumn);
}

TEST_CASE("validate_matrix rejects degenerate shapes") {
    CHECK(code_of([] { make_matrix({{1.0, 2.0}}, "bb"); }) == ErrorCode::EmptyMatrix);
    CHECK(code_of([] { make_matrix({}, "bb"); }) == ErrorCode::EmptyMatrix);
    CHECK(code_of([] { make_matrix({{}, {}}, ""); }) == ErrorCode::EmptyMatrix);
}

TEST_CASE("validate_matrix rejects ragged rows") {
    mcdm::RawMatrix raw;
    raw.alternatives = {"A1", "A2"};
    raw.criteria = {{"K1", Direction::Benefit}, {"K2", Direction::Benefit}};
    raw.values = {{1.0, 2.0}, {3.0}};
    CHECK(code_of([&] { mcdm::validate_matrix(raw); }) == ErrorCode::RaggedRows);
}

TEST_CASE("validate_matrix rejects duplicate or empty labels") {
    mcdm::RawMatrix raw;
    raw.alternatives = {"A1", "A1"};
    raw.criteria = {{"K1", Direction::Benefit}};
    raw.values = {{1.0}, {2.0}};
    CHECK(code_of([&] { mcdm::validate_matrix(raw); }) == ErrorCode::DuplicateLabel);

    raw.alternatives = {"A1", ""};
    CHECK(code_of([&] { mcdm::validate_matrix(raw); }) == ErrorCode::DuplicateLabel);

    raw.alternatives = {"A1", "A2"};
    raw.criteria = {{"", Direction::Benefit}};
    CHECK(code_of([&] { mcdm::validate_matrix(raw); }) == ErrorCode::DuplicateLabel);

    mcdm::RawMatrix two_columns;
    two_columns.alternatives = {"A1", "A2"};
    two_columns.criteria = {{"K", Direction::Benefit}, {"K", Direction::Cost}};
    two_columns.values = {{1.0, 2.0}, {3.0, 4.0}};
    CHECK(code_of([&] { mcdm::validate_matrix(two_columns); }) == ErrorCode::DuplicateLabel);
}

TEST_CASE("sum_normalize divides by column totals") {
    const auto matrix = make_matrix({{1.0, 10.0}, {3.0, 30.0}}, "bb");
    const auto result = mcdm::sum_normalize(matrix);
    CHECK(result[0][0] == doctest::Approx(0.25));
    CHECK(result[1][0] == doctest::Approx(0.75));
    CHECK(result[0][1] + result[1][1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sum_normalize of near-equal values approaches 1/m") {
    const auto matrix = make_matrix({{7.0}, {7.0 + 1e-9}, {7.0 - 1e-9}}, "b");
    const auto result = mcdm::sum_normalize(matrix);
    for (int i = 0; i < 3; ++i) CHECK(result[i][0] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("vector_normalize produces unit-norm columns") {
    const auto matrix = make_matrix({{3.0, 1.0}, {4.0, 1.0 + 1e-12}}, "bb");
    const auto result = mcdm::vector_normalize(matrix);
    CHECK(result[0][0] == doctest::Approx(0.6));
    CHECK(result[1][0] == doctest::Approx(0.8));
    CHECK(result[0][1] == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("minmax_normalize respects criterion direction") {
    const auto matrix = make_matrix({{2.0, 2.0}, {4.0, 4.0}, {6.0, 6.0}}, "bc");
    const auto result = mcdm::minmax_normalize(matrix);
    CHECK(result[0][0] == doctest::Approx(0.0));
    CHECK(result[1][0] == doctest::Approx(0.5));
    CHECK(result[2][0] == doctest::Approx(1.0));
    CHECK(result[0][1] == doctest::Approx(1.0));
    CHECK(result[1][1] == doctest::Approx(0.5));
    CHECK(result[2][1] == doctest::Approx(0.0));
}

TEST_CASE("assign_ranks orders descending with rank 1 best") {
    const auto ranks = mcdm::assign_ranks({0.3, 0.1, 0.2}, RankOrder::Descending);
    CHECK(ranks.display == std::vector<int>{1, 3, 2});
    CHECK(ranks.average == std::vector<double>{1.0, 3.0, 2.0});
}

TEST_CASE("assign_ranks supports ascending order") {
    const auto ranks = mcdm::assign_ranks({0.3, 0.1, 0.2}, RankOrder::Ascending);
    CHECK(ranks.display == std::vector<int>{3, 1, 2});
}

TEST_CASE("assign_ranks averages tied positions and breaks display ties by index") {
    const auto ranks = mcdm::assign_ranks({0.2, 0.2, 0.1}, RankOrder::Descending);
    CHECK(ranks.average == std::vector<double>{1.5, 1.5, 3.0});
    CHECK(ranks.display == std::vector<int>{1, 2, 3});

    const auto all_tied = mcdm::assign_ranks({4.0, 4.0, 4.0, 4.0}, RankOrder::Descending);
    for (double r : all_tied.average) CHECK(r == doctest::Approx(2.5));
    CHECK(all_tied.display == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("assign_ranks rejects non-finite scores") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(code_of([=] { mcdm::assign_ranks({1.0, inf}, RankOrder::Descending); }) ==
          ErrorCode::NonFiniteScore);
}
