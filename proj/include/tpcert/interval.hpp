#pragma once

#include <string>
#include <utility>

#include "tpcert/positivity.hpp"

namespace tpcert {

// Entrywise interval hull of two same-shape matrices: all C with each
// entry between the corresponding entries of the endpoints. Corner,
// midpoint and radius matrices are cached at construction.
template <ScalarType S>
class IntervalHull {
 public:
    IntervalHull(Matrix<S> a, Matrix<S> b)
        : a_(std::move(a)),
          b_(std::move(b)),
          lower_(entrywise_min(a_, b_)),
          upper_(entrywise_max(a_, b_)),
          mid_(a_.rows(), a_.cols()),
          radius_(a_.rows(), a_.cols()) {
        if (a_.rows() != b_.rows() || a_.cols() != b_.cols())
            throw std::invalid_argument("IntervalHull: endpoint shapes differ");
        const S half = S(1) / S(2);
        for (int i = 0; i < a_.rows(); ++i)
            for (int j = 0; j < a_.cols(); ++j) {
                mid_(i, j) = (a_(i, j) + b_(i, j)) * half;
                radius_(i, j) = abs(a_(i, j) - b_(i, j)) * half;
            }
    }

    int rows() const { return a_.rows(); }
    int cols() const { return a_.cols(); }
    const Matrix<S>& endpoint_a() const { return a_; }
    const Matrix<S>& endpoint_b() const { return b_; }
    const Matrix<S>& lower() const { return lower_; }
    const Matrix<S>& upper() const { return upper_; }
    const Matrix<S>& midpoint() const { return mid_; }
    const Matrix<S>& radius() const { return radius_; }

    bool contains(const Matrix<S>& c) const {
        if (c.rows() != rows() || c.cols() != cols()) throw std::invalid_argument("hull membership: shape differs");
        for (int i = 0; i < rows(); ++i)
            for (int j = 0; j < cols(); ++j)
                if (sign(c(i, j) - lower_(i, j)) < 0 || sign(upper_(i, j) - c(i, j)) < 0) return false;
        return true;
    }

 private:
    Matrix<S> a_, b_, lower_, upper_, mid_, radius_;
};

namespace detail {

inline void check_unit_signs(const std::vector<int>& z, int expected, const char* what) {
    if (static_cast<int>(z.size()) != expected)
        throw std::invalid_argument(std::string(what) + ": sign vector length mismatch");
    for (int s : z)
        if (s != 1 && s != -1) throw std::invalid_argument(std::string(what) + ": signs must be +1 or -1");
}

}  // namespace detail

inline std::vector<int> alt_signs(int n, bool leading_positive = true) {
    std::vector<int> z(static_cast<size_t>(n));
    int s = leading_positive ? 1 : -1;
    for (int i = 0; i < n; ++i) {
        z[static_cast<size_t>(i)] = s;
        s = -s;
    }
    return z;
}

// Test matrix midpoint - D_z (radius) D_z'; entrywise this picks one of
// the two interval endpoints per cell, so the result always lies in the
// hull. Negating both sign vectors gives the same matrix.
template <ScalarType S>
Matrix<S> hull_test_matrix(const IntervalHull<S>& h, const std::vector<int>& z, const std::vector<int>& zp) {
    detail::check_unit_signs(z, h.rows(), "hull_test_matrix");
    detail::check_unit_signs(zp, h.cols(), "hull_test_matrix");
    Matrix<S> c(h.rows(), h.cols());
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j) {
            if (z[static_cast<size_t>(i)] * zp[static_cast<size_t>(j)] > 0)
                c(i, j) = h.midpoint()(i, j) - h.radius()(i, j);
            else
                c(i, j) = h.midpoint()(i, j) + h.radius()(i, j);
        }
    return c;
}

// The two checkerboard-extreme members of the hull: the test matrices
// for alternating row signs and both choices of alternating column signs.
template <ScalarType S>
std::pair<Matrix<S>, Matrix<S>> checkerboard_corners(const IntervalHull<S>& h) {
    const std::vector<int> zr = alt_signs(h.rows());
    const std::vector<int> zc = alt_signs(h.cols());
    std::vector<int> zc_neg = zc;
    for (int& s : zc_neg) s = -s;
    return {hull_test_matrix(h, zr, zc), hull_test_matrix(h, zr, zc_neg)};
}

// Identifies which member of the finite test family failed a hull check.
struct FailingTestId {
    enum class Kind { corner_plus, corner_minus, family };
    Kind kind = Kind::corner_plus;
    std::vector<int> z;   // set for Kind::family
    std::vector<int> zp;

    std::string name() const {
        switch (kind) {
            case Kind::corner_plus: return "C+";
            case Kind::corner_minus: return "C-";
            default: {
                std::string s = "I(z=";
                for (int v : z) s += v > 0 ? '+' : '-';
                s += ",z'=";
                for (int v : zp) s += v > 0 ? '+' : '-';
                return s + ")";
            }
        }
    }
};

template <ScalarType S>
struct HullVerdict {
    bool holds = false;
    std::optional<FailingTestId> failing;
    std::optional<Matrix<S>> failing_matrix;
    Certificate<S> inner = Pass{};
    bool failing_is_member = false;
    std::uint64_t tests_checked = 0;  // test matrices actually examined
    Stats stats;
};

// The entire hull is TP_k exactly when the two checkerboard corners are;
// a failing corner is itself a hull member that is not TP_k.
template <ScalarType S>
HullVerdict<S> hull_is_tp_k(const IntervalHull<S>& h, int k) {
    detail::check_order("hull_is_tp_k", h.rows(), h.cols(), k);
    detail::Timer timer;
    HullVerdict<S> hv;
    auto [plus, minus] = checkerboard_corners(h);
    const Matrix<S>* corners[2] = {&plus, &minus};
    hv.holds = true;
    for (int c = 0; c < 2 && hv.holds; ++c) {
        Verdict<S> v = tp_certificate(*corners[c], k);
        ++hv.tests_checked;
        hv.stats.merge(v.stats);
        if (!v.holds) {
            hv.holds = false;
            hv.failing = FailingTestId{c == 0 ? FailingTestId::Kind::corner_plus : FailingTestId::Kind::corner_minus, {}, {}};
            hv.failing_matrix = *corners[c];
            hv.inner = std::move(v.certificate);
            hv.failing_is_member = h.contains(*corners[c]);
        }
    }
    hv.stats.seconds = timer.seconds();
    return hv;
}

// The entire hull is TN_k exactly when all test matrices over sign
// vectors (z, z') are. The family is deduplicated by fixing the first
// row sign to +, leaving 2^(m+n-1) checks; the first failure in
// (z counter, z' counter) order is reported.
template <ScalarType S>
HullVerdict<S> hull_is_tn_k(const IntervalHull<S>& h, int k, std::uint64_t budget = (1u << 20),
                            bool override_budget = false, const EnumLimits& limits = {}) {
    detail::check_order("hull_is_tn_k", h.rows(), h.cols(), k);
    detail::Timer timer;
    const int m = h.rows();
    const int n = h.cols();
    if (m + n - 1 >= 63)
        throw BudgetExceeded("hull_is_tn_k: test family too large to enumerate");
    const std::uint64_t family = std::uint64_t{1} << (m + n - 1);
    if (!override_budget && family > budget)
        throw BudgetExceeded("hull_is_tn_k: family of " + std::to_string(family) +
                             " test matrices exceeds budget " + std::to_string(budget));

    HullVerdict<S> hv;
    hv.holds = true;
    std::vector<int> z(static_cast<size_t>(m)), zp(static_cast<size_t>(n));
    for (std::uint64_t zc = 0; zc < (std::uint64_t{1} << (m - 1)) && hv.holds; ++zc) {
        z[0] = 1;
        for (int i = 1; i < m; ++i) z[static_cast<size_t>(i)] = (zc >> (i - 1)) & 1 ? -1 : 1;
        for (std::uint64_t pc = 0; pc < (std::uint64_t{1} << n) && hv.holds; ++pc) {
            for (int j = 0; j < n; ++j) zp[static_cast<size_t>(j)] = (pc >> j) & 1 ? -1 : 1;
            const Matrix<S> test = hull_test_matrix(h, z, zp);
            Verdict<S> v = tn_certificate(test, k, limits);
            ++hv.tests_checked;
            hv.stats.merge(v.stats);
            if (!v.holds) {
                hv.holds = false;
                hv.failing = FailingTestId{FailingTestId::Kind::family, z, zp};
                hv.failing_matrix = test;
                hv.inner = std::move(v.certificate);
                hv.failing_is_member = h.contains(test);
            }
        }
    }
    hv.stats.seconds = timer.seconds();
    return hv;
}

template <ScalarType S>
struct CoordinateBound {
    bool holds = false;
    std::vector<S> margins;
};

// For a square hull, a member C, and any x != 0: with z matched to the
// signs of x (z_i = +1 when x_i >= 0), every coordinate satisfies
// x_i (C x)_i >= x_i (M x)_i where M is the (z, z) test matrix. Returns
// the margins, all of which must be non-negative.
template <ScalarType S>
CoordinateBound<S> interval_coordinate_bound(const IntervalHull<S>& h, const Matrix<S>& c, const std::vector<S>& x) {
    if (h.rows() != h.cols()) throw std::invalid_argument("interval_coordinate_bound: hull is not square");
    if (!h.contains(c)) throw std::invalid_argument("interval_coordinate_bound: matrix is not a hull member");
    if (static_cast<int>(x.size()) != h.cols()) throw std::invalid_argument("interval_coordinate_bound: vector length mismatch");
    bool nonzero = false;
    for (const S& v : x) nonzero = nonzero || sign(v) != 0;
    if (!nonzero) throw std::invalid_argument("interval_coordinate_bound: zero vector");

    std::vector<int> z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = sign(x[i]) >= 0 ? 1 : -1;
    const Matrix<S> m = hull_test_matrix(h, z, z);
    const std::vector<S> pc = coordinate_products(c, x);
    const std::vector<S> pm = coordinate_products(m, x);
    CoordinateBound<S> r;
    r.holds = true;
    r.margins.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        r.margins[i] = pc[i] - pm[i];
        r.holds = r.holds && sign(r.margins[i]) >= 0;
    }
    return r;
}

// Deterministic hull member: every entry is an independent convex
// combination with a grid coefficient t in {0, 1/64, ..., 1}, so exact
// mode stays exact.
template <ScalarType S>
Matrix<S> sample_hull(const IntervalHull<S>& h, Rng& rng) {
    Matrix<S> c(h.rows(), h.cols());
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j) {
            const S t = S(static_cast<long>(rand_below(rng, 65))) / S(64);
            c(i, j) = t * h.endpoint_a()(i, j) + (S(1) - t) * h.endpoint_b()(i, j);
        }
    return c;
}

template <ScalarType S>
Matrix<S> sample_hull(const IntervalHull<S>& h, std::uint64_t seed) {
    Rng rng(seed);
    return sample_hull(h, rng);
}

// Checks, on sampled matrices in and around the hull, that entrywise
// membership between the lower/upper corners coincides with membership
// between the checkerboard corners under the checkerboard ordering.
template <ScalarType S>
bool checkerboard_order_equiv(const IntervalHull<S>& h, int samples = 64, std::uint64_t seed = 0xC0FFEE) {
    auto [plus, minus] = checkerboard_corners(h);
    auto checkerboard_le = [&](const Matrix<S>& x, const Matrix<S>& y) {
        // x <=* y: the sign-conjugated difference is entrywise non-negative.
        for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < x.cols(); ++j) {
                const S d = y(i, j) - x(i, j);
                const S conj = (i + j) % 2 == 0 ? d : -d;
                if (sign(conj) < 0) return false;
            }
        return true;
    };
    Rng rng(seed);
    for (int s = 0; s < samples; ++s) {
        // Grid coefficients in [-1/4, 5/4]; some draws leave the hull.
        Matrix<S> c(h.rows(), h.cols());
        for (int i = 0; i < h.rows(); ++i)
            for (int j = 0; j < h.cols(); ++j) {
                const S t = S(static_cast<long>(rand_below(rng, 97)) - 16) / S(64);
                c(i, j) = t * h.endpoint_a()(i, j) + (S(1) - t) * h.endpoint_b()(i, j);
            }
        const bool entrywise = h.contains(c);
        // The C+ corner is the checkerboard-least member and C- the
        // checkerboard-greatest: C+ puts the lower endpoint on
        // even-parity cells, which conjugation maps to the minimum.
        const bool checkerboard = checkerboard_le(plus, c) && checkerboard_le(c, minus);
        if (entrywise != checkerboard) return false;
    }
    return true;
}

}  // namespace tpcert
