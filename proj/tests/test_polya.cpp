#include <catch2/catch.hpp>

#include "support/oracles.hpp"
#include "tpcert/generators.hpp"
#include "tpcert/polya.hpp"

using tpcert::FailingMinor;
using tpcert::KernelVector;
using tpcert::Matrix;
using tpcert::PfMode;
using tpcert::Rational;
using tpcert::SeqWindow;

namespace {
using Mat = Matrix<Rational>;
using Seq = SeqWindow<Rational>;

Seq finite(long offset, std::initializer_list<long> vals) {
    Seq s;
    s.offset = offset;
    for (long v : vals) s.values.push_back(Rational(v));
    s.finite_support = true;
    return s;
}

Seq geometric_window() {
    // c_n = 2^n for n in [-3, 3], unknown outside.
    Seq s;
    s.offset = -3;
    for (int n = -3; n <= 3; ++n) {
        Rational v = n >= 0 ? tpcert::power(Rational(2), n) : Rational(1) / tpcert::power(Rational(2), -n);
        s.values.push_back(v);
    }
    s.finite_support = false;
    return s;
}
}  // namespace

TEST_CASE("toeplitz blocks", "[polya]") {
    const Seq s = finite(0, {1, 1});
    const auto b = tpcert::toeplitz_block(s, 0, 2);
    REQUIRE(b.has_value());
    CHECK(*b == Mat::from_rows({{1, 0}, {1, 1}}));

    const Seq g = geometric_window();
    const auto gb = tpcert::toeplitz_block(g, 0, 2);
    REQUIRE(gb.has_value());
    Mat expected(2, 2);
    expected(0, 0) = Rational(1);
    expected(0, 1) = Rational(1, 2);
    expected(1, 0) = Rational(2);
    expected(1, 1) = Rational(1);
    CHECK(*gb == expected);

    CHECK_FALSE(tpcert::toeplitz_block(g, 10, 3).has_value());
    CHECK_THROWS_AS(tpcert::toeplitz_block(g, 0, 0), std::invalid_argument);

    // Toeplitz structure: constant along every diagonal.
    const auto big = tpcert::toeplitz_block(g, 1, 3);
    REQUIRE(big.has_value());
    for (int i = 1; i < 3; ++i)
        for (int j = 1; j < 3; ++j) REQUIRE((*big)(i, j) == (*big)(i - 1, j - 1));
}

TEST_CASE("order-k Polya frequency verdicts", "[polya]") {
    CHECK(tpcert::is_pf_k(finite(0, {1, 1}), 2, PfMode::nonneg).holds);

    // Rank-one geometric blocks: non-negative minors everywhere, but no
    // strict positivity at order 2.
    const Seq g = geometric_window();
    CHECK(tpcert::is_pf_k(g, 2, PfMode::nonneg).holds);
    const auto gfail = tpcert::is_pf_k(g, 2, PfMode::positive);
    REQUIRE_FALSE(gfail.holds);
    const auto& gm = std::get<FailingMinor<Rational>>(gfail.certificate);
    CHECK(gm.value == Rational(0));

    // (1, 3, 1): generating polynomial with two real negative roots, so
    // every Toeplitz minor is non-negative; zero entries off the support
    // break strict positivity.
    const Seq s131 = finite(0, {1, 3, 1});
    CHECK(tpcert::is_pf_k(s131, 2, PfMode::nonneg).holds);
    CHECK_FALSE(tpcert::is_pf_k(s131, 2, PfMode::positive).holds);

    // (1, 0, 1) is not a frequency sequence of order 2; the certificate
    // names a genuinely negative determined minor.
    const auto fail = tpcert::is_pf_k(finite(0, {1, 0, 1}), 2, PfMode::nonneg);
    REQUIRE_FALSE(fail.holds);
    const auto& fm = std::get<FailingMinor<Rational>>(fail.certificate);
    CHECK(sign(fm.value) < 0);
    const auto recomputed = tpcert::sequence_minor(finite(0, {1, 0, 1}), fm.at.rows, fm.at.cols);
    REQUIRE(recomputed.has_value());
    CHECK(oracle::det(*recomputed) == fm.value);

    CHECK_THROWS_AS(tpcert::is_pf_k(g, 0, PfMode::nonneg), std::invalid_argument);
}

TEST_CASE("orders beyond the window terminate with nothing determined", "[polya]") {
    Seq tiny;
    tiny.offset = 0;
    tiny.values = {Rational(5)};
    tiny.finite_support = false;
    const auto v = tpcert::is_pf_k(tiny, 3, PfMode::nonneg);
    CHECK(v.holds);
    CHECK(v.stats.submatrices == 1);  // only the single 1x1 minor is determined

    tpcert::EnumLimits tight;
    tight.max_minors_per_size = 4;
    Seq wide;
    wide.offset = 0;
    for (int i = 0; i < 8; ++i) wide.values.push_back(Rational(1));
    wide.finite_support = false;
    CHECK_THROWS_AS(tpcert::is_pf_k(wide, 3, PfMode::nonneg, tight), tpcert::BudgetExceeded);
}

TEST_CASE("skipped minors are reported in unknown mode", "[polya]") {
    const Seq g = geometric_window();
    const auto v = tpcert::is_pf_k(g, 3, PfMode::nonneg);
    CHECK(v.holds);
    CHECK(v.stats.skipped > 0);
    CHECK(v.stats.submatrices > 0);

    // Finite support leaves nothing undetermined.
    const auto fs = tpcert::is_pf_k(finite(0, {1, 2, 1}), 2, PfMode::nonneg);
    CHECK(fs.stats.skipped == 0);
}

TEST_CASE("finite-support and window modes agree where both are determined", "[polya]") {
    Seq fs = finite(0, {1, 2, 1});
    Seq window = fs;
    window.finite_support = false;
    for (int r = 1; r <= 2; ++r)
        for (long l = r - 1; l + r - 1 <= 2; ++l) {
            const auto a = tpcert::toeplitz_block(fs, l, r);
            const auto b = tpcert::toeplitz_block(window, l, r);
            REQUIRE(a.has_value());
            REQUIRE(b.has_value());
            REQUIRE(*a == *b);
        }
}

TEST_CASE("positive mode matches the contiguous test on a determined stripe", "[polya]") {
    // A maximal fully determined stripe covers every determined
    // difference; its contiguous windows are exactly the determined
    // Toeplitz blocks.
    auto stripe = [](const Seq& s, int p, int q) {
        Mat t(p, q);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j) {
                const auto term = s.term(s.first() + (q - 1) + i - j);
                REQUIRE(term.has_value());
                t(i, j) = *term;
            }
        return t;
    };

    Seq binom;  // (1, 2, 1) with unknown terms outside
    binom.offset = 0;
    binom.values = {Rational(1), Rational(2), Rational(1)};
    binom.finite_support = false;

    const Mat square = stripe(binom, 2, 2);
    CHECK(tpcert::is_pf_k(binom, 2, PfMode::positive).holds ==
          tpcert::is_tp_k_contiguous(square, 2).holds);

    const Seq g = geometric_window();
    const Mat gs = stripe(g, 4, 4);
    CHECK(tpcert::is_pf_k(g, 2, PfMode::positive).holds == tpcert::is_tp_k_contiguous(gs, 2).holds);
    CHECK(tpcert::is_pf_k(g, 1, PfMode::positive).holds == tpcert::is_tp_k_contiguous(gs, 1).holds);
}

TEST_CASE("stripe agreement on random positive sequences", "[polya]") {
    // For a window of length L, every maximal determined stripe
    // (p rows, q cols, p + q = L + 1) contains all determined blocks of
    // each size as contiguous windows, so the strict verdict must agree
    // with the contiguous test whenever min(p, q) >= k.
    tpcert::Rng rng(6001);
    auto stripe = [](const Seq& s, int p, int q) {
        Mat t(p, q);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j) t(i, j) = *s.term(s.first() + (q - 1) + i - j);
        return t;
    };
    for (int trial = 0; trial < 40; ++trial) {
        Seq s;
        s.offset = static_cast<long>(tpcert::rand_in(rng, -3, 3));
        const int len = 3 + static_cast<int>(tpcert::rand_below(rng, 3));  // 3..5
        for (int i = 0; i < len; ++i) s.values.push_back(Rational(tpcert::rand_in(rng, 1, 5)));
        s.finite_support = false;
        const int k = 2;
        const bool pf_verdict = tpcert::is_pf_k(s, k, PfMode::positive).holds;
        for (int p = k; p <= len + 1 - k; ++p) {
            const int q = len + 1 - p;
            REQUIRE(tpcert::is_tp_k_contiguous(stripe(s, p, q), k).holds == pf_verdict);
        }
    }
}

TEST_CASE("sign non-reversal probe of sequences", "[polya]") {
    // Rank-one geometric blocks are singular; the kernel candidate
    // refutes order-2 strict positivity deterministically.
    const auto g = tpcert::pf_snr_check(geometric_window(), 2, 50, 3);
    REQUIRE_FALSE(g.holds);
    CHECK(std::holds_alternative<KernelVector<Rational>>(g.certificate));

    Seq binom;  // (1, 2, 1), unknown outside the window
    binom.offset = 0;
    binom.values = {Rational(1), Rational(2), Rational(1)};
    binom.finite_support = false;

    // Determined blocks of a strictly positive stripe pass sampling.
    CHECK(tpcert::pf_snr_check(binom, 1, 20, 3).holds);
    CHECK(tpcert::pf_snr_check(binom, 2, 200, 7).holds);

    // Finite support pins zero terms just outside the window, which the
    // order-1 blocks in the clip zone already refute.
    const auto clipped = tpcert::pf_snr_check(finite(0, {1, 2, 1}), 1, 20, 3);
    REQUIRE_FALSE(clipped.holds);
    CHECK(std::holds_alternative<KernelVector<Rational>>(clipped.certificate));

    // A negative term fails the 1x1 blocks with a reversal.
    Seq with_negative;
    with_negative.offset = 0;
    with_negative.values = {Rational(1), Rational(-1)};
    with_negative.finite_support = false;
    const auto neg = tpcert::pf_snr_check(with_negative, 1, 20, 3);
    REQUIRE_FALSE(neg.holds);
    CHECK(std::holds_alternative<tpcert::SignReversal<Rational>>(neg.certificate));
}
