#include <catch2/catch.hpp>

#include "support/oracles.hpp"
#include "tpcert/generators.hpp"

using tpcert::Matrix;
using tpcert::Rational;

namespace {
using Mat = Matrix<Rational>;

std::vector<Rational> nodes(std::initializer_list<long> vals) {
    std::vector<Rational> v;
    for (long x : vals) v.push_back(Rational(x));
    return v;
}
}  // namespace

TEST_CASE("vandermonde matrices", "[generators]") {
    CHECK(tpcert::vandermonde<Rational>(nodes({1, 2, 3}), 3) ==
          Mat::from_rows({{1, 1, 1}, {1, 2, 4}, {1, 3, 9}}));
    CHECK(tpcert::vandermonde<Rational>(nodes({1}), 1) == Mat::from_rows({{1}}));
    CHECK(tpcert::det(tpcert::vandermonde<Rational>(nodes({1, 2}), 2)) == Rational(1));
    CHECK(oracle::is_tp_k(tpcert::vandermonde<Rational>(nodes({1, 2, 3}), 3), 3));

    CHECK_THROWS_AS(tpcert::vandermonde<Rational>(nodes({2, 1}), 2), std::invalid_argument);
    CHECK_THROWS_AS(tpcert::vandermonde<Rational>(nodes({0, 1}), 2), std::invalid_argument);
    CHECK_THROWS_AS(tpcert::vandermonde<Rational>(nodes({1, 1}), 2), std::invalid_argument);
}

TEST_CASE("cauchy matrices", "[generators]") {
    const Mat c = tpcert::cauchy<Rational>(nodes({1, 2}), nodes({1, 2}));
    CHECK(c(0, 0) == Rational(1, 2));
    CHECK(c(0, 1) == Rational(1, 3));
    CHECK(c(1, 1) == Rational(1, 4));
    CHECK(tpcert::det(c) == Rational(1, 72));
    CHECK(tpcert::cauchy<Rational>(nodes({1}), nodes({1})) == Mat(1, 1, {Rational(1, 2)}));
    CHECK(oracle::is_tp_k(tpcert::cauchy<Rational>(nodes({1, 2, 3}), nodes({1, 2, 3})), 3));
    CHECK_THROWS_AS(tpcert::cauchy<Rational>(nodes({1, 1}), nodes({1})), std::invalid_argument);
}

TEST_CASE("zero padding preserves total non-negativity only", "[generators]") {
    const Mat base = tpcert::vandermonde<Rational>(nodes({1, 2, 3}), 3);
    const Mat padded = tpcert::zero_padded(base, 1, 2);
    REQUIRE(padded.rows() == 4);
    REQUIRE(padded.cols() == 5);
    CHECK(oracle::is_tn_k(padded, 3));
    CHECK_FALSE(oracle::is_tp_k(padded, 1));
    CHECK(tpcert::zero_padded(base, 0, 0) == base);
    CHECK_THROWS_AS(tpcert::zero_padded(base, -1, 0), std::invalid_argument);
}

TEST_CASE("perturbed hulls", "[generators]") {
    const Mat base = tpcert::vandermonde<Rational>(nodes({1, 2, 3}), 3);

    const auto singleton = tpcert::perturbed_hull(base, Rational(0));
    CHECK(singleton.lower() == base);
    CHECK(singleton.upper() == base);

    // Large radius destroys positivity of the entries themselves.
    const auto wide = tpcert::perturbed_hull(base, Rational(10));
    CHECK_FALSE(tpcert::hull_is_tp_k(wide, 3).holds);

    CHECK_THROWS_AS(tpcert::perturbed_hull(base, Rational(-1)), std::invalid_argument);
    CHECK_THROWS_AS(tpcert::perturbed_hull(Mat::identity(3), Rational(1, 10)), std::invalid_argument);
}

TEST_CASE("classification labels come from brute force", "[generators]") {
    const auto vdm = tpcert::classify(tpcert::vandermonde<Rational>(nodes({1, 2, 3}), 3));
    CHECK(vdm.tp == 3);
    CHECK(vdm.tn == 3);

    const auto id = tpcert::classify(Mat::identity(4));
    CHECK(id.tp == 0);
    CHECK(id.tn == 4);

    const auto anti = tpcert::classify(Mat::from_rows({{0, 1}, {1, 0}}));
    CHECK(anti.tp == 0);
    CHECK(anti.tn == 1);

    const auto padded = tpcert::classify(tpcert::zero_padded(tpcert::vandermonde<Rational>(nodes({1, 2}), 2), 1, 1));
    CHECK(padded.tp == 0);
    CHECK(padded.tn == 3);  // padded minors vanish, so TN holds at full order
}

TEST_CASE("sampling helpers are deterministic per seed", "[generators]") {
    tpcert::Rng a(99), b(99);
    CHECK(tpcert::sample_integer_matrix<Rational>(a, 4, 4, -5, 5) ==
          tpcert::sample_integer_matrix<Rational>(b, 4, 4, -5, 5));
    CHECK(tpcert::sample_alternating_vector<Rational>(a, 5, true) ==
          tpcert::sample_alternating_vector<Rational>(b, 5, true));
    const auto x = tpcert::sample_alternating_vector<Rational>(a, 6, false);
    CHECK(tpcert::is_alternating(x));
    CHECK(sign(x.front()) < 0);
    for (const auto& c : x) {
        CHECK(abs(c) >= Rational(1));
        CHECK(abs(c) <= Rational(2));
    }
}
