#include <catch2/catch.hpp>

#include "support/oracles.hpp"
#include "tpcert/minors.hpp"
#include "tpcert/random.hpp"

using tpcert::FloatScalar;
using tpcert::Matrix;
using tpcert::MinorId;
using tpcert::Rational;

namespace {
using Mat = Matrix<Rational>;

std::vector<Rational> vec(std::initializer_list<long> vals) {
    std::vector<Rational> v;
    for (long x : vals) v.push_back(Rational(x));
    return v;
}
}  // namespace

TEST_CASE("determinant basics", "[minors]") {
    CHECK(tpcert::det(Mat::from_rows({{3, 1}, {2, 2}})) == Rational(4));
    CHECK(tpcert::det(Mat::identity(5)) == Rational(1));
    CHECK(tpcert::det(Mat::from_rows({{3, 1, 1}, {2, 2, 2}, {1, 1, 1}})) == Rational(0));
    CHECK(tpcert::det(Mat::from_rows({{7}})) == Rational(7));
    CHECK_THROWS_AS(tpcert::det(Mat(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant handles zero pivots exactly", "[minors]") {
    // Leading entry zero forces a pivot swap; a zero column ends it.
    CHECK(tpcert::det(Mat::from_rows({{0, 1}, {1, 0}})) == Rational(-1));
    CHECK(tpcert::det(Mat::from_rows({{0, 1, 2}, {0, 3, 4}, {0, 5, 6}})) == Rational(0));
    CHECK(tpcert::det(Mat::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) == Rational(-1));
}

TEST_CASE("fraction-free elimination matches cofactor expansion", "[minors]") {
    tpcert::Rng rng(7001);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 40; ++trial) {
            Matrix<Rational> a = tpcert::sample_integer_matrix<Rational>(rng, n, n, -5, 5);
            REQUIRE(tpcert::det(a) == oracle::det(a));
        }
    // Rational entries as well.
    for (int trial = 0; trial < 20; ++trial) {
        Matrix<Rational> a(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                a(i, j) = Rational(tpcert::rand_in(rng, -20, 20), tpcert::rand_in(rng, 1, 7));
        REQUIRE(tpcert::det(a) == oracle::det(a));
    }
}

TEST_CASE("adjugate", "[minors]") {
    CHECK(tpcert::adjugate(Mat::from_rows({{1, 2}, {3, 4}})) == Mat::from_rows({{4, -2}, {-3, 1}}));
    CHECK(tpcert::adjugate(Mat::identity(4)) == Mat::identity(4));
    CHECK(tpcert::adjugate(Mat::from_rows({{1, 1}, {1, 1}})) == Mat::from_rows({{1, -1}, {-1, 1}}));
    CHECK(tpcert::adjugate(Mat::from_rows({{9}})) == Mat::from_rows({{1}}));
    CHECK_THROWS_AS(tpcert::adjugate(Mat(2, 3)), std::invalid_argument);
}

TEST_CASE("adjugate identity B adj(B) = det(B) I", "[minors]") {
    tpcert::Rng rng(7002);
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 15; ++trial) {
            Matrix<Rational> b = tpcert::sample_integer_matrix<Rational>(rng, n, n, -4, 4);
            const Rational d = tpcert::det(b);
            const Matrix<Rational> adj = tpcert::adjugate(b);
            Matrix<Rational> expected(n, n);
            for (int i = 0; i < n; ++i) expected(i, i) = d;
            REQUIRE(tpcert::matmul(b, adj) == expected);
            REQUIRE(tpcert::matmul(adj, b) == expected);
        }
}

TEST_CASE("all_minors", "[minors]") {
    const Mat two = Mat::from_rows({{1, 2}, {3, 4}});
    const auto only = tpcert::all_minors(two, 2);
    REQUIRE(only.size() == 1);
    CHECK(only[0].second == Rational(-2));

    tpcert::Rng rng(7003);
    const Mat a34 = tpcert::sample_integer_matrix<Rational>(rng, 3, 4, -5, 5);
    const auto minors = tpcert::all_minors(a34, 2);
    REQUIRE(minors.size() == 18);  // C(3,2) * C(4,2)
    for (size_t i = 1; i < minors.size(); ++i) REQUIRE(minors[i - 1].first < minors[i].first);
    for (const auto& [id, value] : minors) REQUIRE(value == oracle::det(tpcert::submatrix(a34, id)));

    // Every order-3 minor of the first gap-hull endpoint is non-negative and
    // any column set through the zero column gives zero.
    const Mat a_gap = Mat::from_rows({{3, 1, 0, 1}, {2, 2, 0, 2}, {1, 1, 0, 1}});
    for (const auto& [id, value] : tpcert::all_minors(a_gap, 3)) {
        REQUIRE(sign(value) >= 0);
        if (std::find(id.cols.begin(), id.cols.end(), 2) != id.cols.end()) REQUIRE(sign(value) == 0);
    }

    CHECK_THROWS_AS(tpcert::all_minors(two, 3), std::invalid_argument);
}

TEST_CASE("minor count matches the binomial formula", "[minors]") {
    tpcert::Rng rng(7004);
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            const Mat a = tpcert::sample_integer_matrix<Rational>(rng, m, n, -3, 3);
            for (int r = 1; r <= std::min(m, n); ++r)
                REQUIRE(tpcert::all_minors(a, r).size() == tpcert::binomial(m, r) * tpcert::binomial(n, r));
        }
}

TEST_CASE("sign non-reversal test vector", "[minors]") {
    CHECK(tpcert::snr_test_vector(Mat::from_rows({{1, 2}, {3, 4}})) == vec({-12, 8}));
    CHECK(tpcert::snr_test_vector(Mat::from_rows({{1, 1}, {1, 1}})) == vec({0, 0}));
    CHECK(tpcert::snr_test_vector(Mat::from_rows({{2, 1}, {1, 1}})) == vec({2, -3}));
}

TEST_CASE("test vector matches the cofactor sum form", "[minors]") {
    // z_i = (-1)^i det(B) * (sum of minors with row j, column i deleted),
    // the sums computed here with the oracle determinant.
    tpcert::Rng rng(7005);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            const Matrix<Rational> b = tpcert::sample_integer_matrix<Rational>(rng, n, n, -5, 5);
            const Rational d = oracle::det(b);
            const auto z = tpcert::snr_test_vector(b);
            const auto sums = tpcert::snr_component_sums(b);
            for (int i = 0; i < n; ++i) {
                Rational expected(0);
                if (n == 1) {
                    expected = d;
                } else {
                    Rational acc(0);
                    for (int j = 0; j < n; ++j) acc += oracle::det(tpcert::delete_row_col(b, j, i));
                    expected = (i % 2 == 0 ? d : -d) * acc;
                    REQUIRE(sums[static_cast<size_t>(i)] == acc);
                }
                REQUIRE(z[static_cast<size_t>(i)] == expected);
            }
        }
}

TEST_CASE("numerical mode determinant", "[minors]") {
    using FMat = Matrix<FloatScalar>;
    FMat a(2, 2);
    a(0, 0) = FloatScalar(3.0);
    a(0, 1) = FloatScalar(1.0);
    a(1, 0) = FloatScalar(2.0);
    a(1, 1) = FloatScalar(2.0);
    CHECK(tpcert::det(a).to_double() == Approx(4.0));
    FMat singular(2, 2);
    singular(0, 0) = FloatScalar(1.0);
    singular(0, 1) = FloatScalar(2.0);
    singular(1, 0) = FloatScalar(2.0);
    singular(1, 1) = FloatScalar(4.0);
    CHECK(sign(tpcert::det(singular)) == 0);
}

TEST_CASE("determinant statistics are counted", "[minors]") {
    tpcert::Stats stats;
    (void)tpcert::det(Mat::identity(3), &stats);
    CHECK(stats.determinants == 1);
    stats = {};
    (void)tpcert::adjugate(Mat::identity(3), &stats);
    CHECK(stats.determinants == 9);
}
