#include <cmath>
#include <numeric>

#include "doctest.h"
#include "mcdm/weighting.hpp"
#include "test_support.hpp"

using mcdm::Error;
using mcdm::ErrorCode;
using mcdm::WeightMethod;
using mcdm_test::make_matrix;

namespace {

void check_simplex(const mcdm::WeightVector& w) {
    double total = 0.0;
    for (double v : w.weights) {
        CHECK(v >= 0.0);
        total += v;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

}  // namespace

TEST_CASE("equal_weights splits the simplex evenly") {
    const auto w7 = mcdm::equal_weights(7);
    CHECK(w7.method == WeightMethod::Equal);
    CHECK(w7.weights.size() == 7);
    for (double v : w7.weights) CHECK(v == doctest::Approx(1.0 / 7.0).epsilon(1e-12));

    CHECK(mcdm::equal_weights(1).weights == std::vector<double>{1.0});
    CHECK(mcdm::equal_weights(4).weights == std::vector<double>{0.25, 0.25, 0.25, 0.25});
}

TEST_CASE("equal_weights rejects zero criteria") {
    CHECK_THROWS_AS(mcdm::equal_weights(0), Error);
    try {
        mcdm::equal_weights(0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroCriteria);
    }
}

TEST_CASE("entropy_weights matches a hand-evaluated 2x2 case") {
    const auto matrix = make_matrix({{1.0, 2.0}, {3.0, 4.0}}, "bb");
    const auto details = mcdm::entropy_details(matrix);
    // Column 1: denominator 2 + 1 + 9 = 12, n = (1/12, 3/12).
    CHECK(details.n[0][0] == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(details.n[1][0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(details.e[0] == doctest::Approx(-0.28333907235686306).epsilon(1e-14));
    CHECK(details.e[1] == doctest::Approx(-0.29634196439335858).epsilon(1e-14));

    const auto w = mcdm::entropy_weights(matrix);
    CHECK(w.method == WeightMethod::Entropy);
    CHECK(w.weights[0] == doctest::Approx(0.49747974810620849).epsilon(1e-14));
    CHECK(w.weights[1] == doctest::Approx(0.50252025189379146).epsilon(1e-14));
    check_simplex(w);
}

TEST_CASE("entropy intermediates stay inside their domain") {
    const auto matrix = make_matrix({{0.2, 5.0}, {0.7, 90.0}, {0.4, 12.0}}, "bc");
    const auto details = mcdm::entropy_details(matrix);
    for (std::size_t j = 0; j < 2; ++j) {
        double column_sum = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(details.n[i][j] > 0.0);
            CHECK(details.n[i][j] < 1.0);
            column_sum += details.n[i][j];
        }
        CHECK(column_sum < 1.0);
    }
}

TEST_CASE("entropy_weights gives identical columns identical weight") {
    const auto matrix = make_matrix({{1.0, 1.0, 9.0}, {2.0, 2.0, 4.0}}, "bbb");
    const auto w = mcdm::entropy_weights(matrix);
    CHECK(w.weights[0] == doctest::Approx(w.weights[1]).epsilon(1e-14));
}

TEST_CASE("merec_weights splits proportional benefit columns evenly") {
    const auto matrix = make_matrix({{1.0, 2.0}, {2.0, 4.0}, {4.0, 8.0}}, "bb");
    const auto details = mcdm::merec_details(matrix);
    CHECK(details.effect[0] == doctest::Approx(0.5721784014043577).epsilon(1e-14));
    CHECK(details.effect[0] == doctest::Approx(details.effect[1]).epsilon(1e-14));

    const auto w = mcdm::merec_weights(matrix);
    CHECK(w.method == WeightMethod::Merec);
    CHECK(w.weights[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(w.weights[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("merec intermediates stay inside their domain") {
    const auto matrix = make_matrix({{0.9, 4.0, 7.0}, {0.3, 9.0, 3.0}, {0.5, 2.0, 11.0}}, "bcb");
    const auto details = mcdm::merec_details(matrix);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(details.n[i][j] > 0.0);
            CHECK(details.n[i][j] <= 1.0);
            CHECK(details.without[i][j] <= details.overall[i] + 1e-15);
        }
    }
    for (double e : details.effect) CHECK(e >= 0.0);
}

TEST_CASE("lopcow_weights matches hand evaluation on a 3x2 benefit matrix") {
    const auto matrix = make_matrix({{1.0, 10.0}, {2.0, 20.0}, {3.0, 30.0}}, "bb");
    const auto details = mcdm::lopcow_details(matrix);
    CHECK(details.pv[0] == doctest::Approx(23.500181462286783).epsilon(1e-13));
    CHECK(details.pv[1] == doctest::Approx(253.75869076169138).epsilon(1e-13));

    const auto w = mcdm::lopcow_weights(matrix);
    CHECK(w.method == WeightMethod::Lopcow);
    CHECK(w.weights[0] == doctest::Approx(0.0847589881390797).epsilon(1e-13));
    CHECK(w.weights[1] == doctest::Approx(0.91524101186092022).epsilon(1e-13));
    check_simplex(w);
}

TEST_CASE("lopcow_weights gives identical columns identical weight") {
    const auto matrix = make_matrix({{4.0, 4.0}, {7.0, 7.0}, {5.0, 5.0}}, "bb");
    const auto w = mcdm::lopcow_weights(matrix);
    CHECK(w.weights[0] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("lopcow_weights reports a degenerate percentage-value vector") {
    // Column chosen so the min-max rms and the raw standard deviation land on
    // the same double, driving the column's percentage value to exactly zero.
    const auto matrix = make_matrix({{1.0}, {1.7905694150420954}, {2.58113883008419}}, "b");
    const auto details = mcdm::lopcow_details(matrix);
    REQUIRE(details.pv.size() == 1);
    CHECK(details.pv[0] == 0.0);
    try {
        mcdm::lopcow_weights(matrix);
        FAIL("expected DegeneratePV");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegeneratePV);
    }
}

TEST_CASE("spc_weights matches hand evaluation on a 2x1 matrix") {
    const auto matrix = make_matrix({{1.0}, {3.0}}, "b");
    const auto details = mcdm::spc_details(matrix);
    CHECK(details.symmetry_point[0] == doctest::Approx(2.0));
    CHECK(details.deviation[0][0] == doctest::Approx(1.0));
    CHECK(details.deviation[1][0] == doctest::Approx(1.0));
    CHECK(details.relative[0][0] == doctest::Approx(1.0));
    CHECK(details.relative[1][0] == doctest::Approx(1.0 / 3.0));
    CHECK(details.mean_relative[0] == doctest::Approx(2.0 / 3.0));

    const auto w = mcdm::spc_weights(matrix);
    CHECK(w.method == WeightMethod::Spc);
    CHECK(w.weights == std::vector<double>{1.0});
}

TEST_CASE("spc_weights gives identical columns identical weight") {
    const auto matrix = make_matrix({{2.0, 2.0}, {8.0, 8.0}, {5.0, 5.0}}, "bb");
    const auto w = mcdm::spc_weights(matrix);
    CHECK(w.weights[0] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("all five methods are permutation-equivariant in the criteria") {
    const mcdm::Grid values = {{0.9, 4.0, 7.0, 1.4}, {0.3, 9.0, 3.0, 2.6}, {0.5, 2.0, 11.0, 0.7}};
    const auto matrix = make_matrix(values, "bcbc");
    mcdm::Grid swapped = values;
    for (auto& row : swapped) std::swap(row[1], row[3]);
    const auto matrix_swapped = make_matrix(swapped, "bcbc");

    for (WeightMethod method : mcdm::kStudyWeightMethods) {
        const auto w = mcdm::compute_weights(method, matrix);
        const auto v = mcdm::compute_weights(method, matrix_swapped);
        CHECK(w.weights[1] == doctest::Approx(v.weights[3]).epsilon(1e-12));
        CHECK(w.weights[3] == doctest::Approx(v.weights[1]).epsilon(1e-12));
        CHECK(w.weights[0] == doctest::Approx(v.weights[0]).epsilon(1e-12));
        CHECK(w.weights[2] == doctest::Approx(v.weights[2]).epsilon(1e-12));
    }
}

TEST_CASE("all five methods ignore alternative order") {
    const mcdm::Grid values = {{0.9, 4.0, 7.0}, {0.3, 9.0, 3.0}, {0.5, 2.0, 11.0}};
    const auto matrix = make_matrix(values, "bcb");
    const mcdm::Grid reordered = {values[2], values[0], values[1]};
    const auto matrix_reordered = make_matrix(reordered, "bcb");

    for (WeightMethod method : mcdm::kStudyWeightMethods) {
        const auto w = mcdm::compute_weights(method, matrix);
        const auto v = mcdm::compute_weights(method, matrix_reordered);
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(w.weights[j] == doctest::Approx(v.weights[j]).epsilon(1e-12));
        }
    }
}
